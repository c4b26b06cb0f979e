from itertools import combinations, permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from srgcover.constructions import clebsch, complete, complete_bipartite, cycle, kneser, petersen, rook
from srgcover.errors import Disconnected, OutOfRange, SelfLoop
from srgcover.graph import (
    SrgParams,
    bipartite_double_cover,
    connected_components,
    diameter,
    distance_matrix,
    is_bipartite,
    is_connected,
    is_irreducible,
    is_strongly_regular,
    is_triangle_free,
    new_graph,
)
from srgcover.matrix import IntMatrix


@st.composite
def graphs(draw, max_order=9):
    n = draw(st.integers(2, max_order))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    return new_graph(n, chosen)


def test_new_graph_examples():
    k2 = new_graph(2, [(0, 1)])
    assert k2.neighbors(0) == (1,)
    c5 = new_graph(5, [(i, (i + 1) % 5) for i in range(5)])
    assert c5.regular_degree() == 2
    with pytest.raises(SelfLoop):
        new_graph(4, [(0, 0)])
    with pytest.raises(OutOfRange):
        new_graph(3, [(0, 3)])


def test_new_graph_dedupes_and_symmetrises():
    g = new_graph(3, [(0, 1), (1, 0), (2, 1)])
    assert g.adjacency == ((1,), (0, 2), (1,))
    assert g.edges() == [(0, 1), (1, 2)]


def test_srg_examples():
    assert is_strongly_regular(petersen()) == SrgParams(10, 3, 0, 1)
    assert is_strongly_regular(cycle(5)) == SrgParams(5, 2, 0, 1)
    p4 = new_graph(4, [(0, 1), (1, 2), (2, 3)])
    assert is_strongly_regular(p4) is None
    assert is_strongly_regular(complete(5)) is None
    two_c5 = new_graph(10, [(i, (i + 1) % 5) for i in range(5)] + [(5 + i, 5 + (i + 1) % 5) for i in range(5)])
    assert is_strongly_regular(two_c5) is None


def test_irreducible_examples():
    assert is_irreducible(cycle(5))
    assert not is_irreducible(complete_bipartite(2))
    assert is_irreducible(new_graph(2, [(0, 1)]))


def test_triangle_free_examples():
    assert is_triangle_free(petersen())
    assert not is_triangle_free(complete(3))
    assert not is_triangle_free(rook(5))


def test_distance_matrix_examples():
    assert distance_matrix(new_graph(2, [(0, 1)])) == IntMatrix([[0, 1], [1, 0]])
    with pytest.raises(Disconnected):
        distance_matrix(bipartite_double_cover(complete_bipartite(2)))
    # oracle: the cover of a bipartite graph splits in two
    assert len(connected_components(bipartite_double_cover(complete_bipartite(2)))) == 2
    d = distance_matrix(bipartite_double_cover(petersen()))
    assert all(d[v, v + 10] == 5 for v in range(10))


def test_diameter_examples():
    assert diameter(petersen()) == 2
    assert diameter(bipartite_double_cover(petersen())) == 5
    assert diameter(bipartite_double_cover(rook(5))) == 3


def test_cover_of_k2_is_two_disjoint_edges():
    # enumerate by the product rule: (v,0)~(w,1) iff v~w
    cover = bipartite_double_cover(new_graph(2, [(0, 1)]))
    expected = {(0, 3), (1, 2)}
    assert set(cover.edges()) == expected


def test_cover_of_complete_graph_is_crown():
    from srgcover.constructions import crown

    for n in (3, 4, 5, 6):
        assert bipartite_double_cover(complete(n)) == crown(n)


def test_cover_of_clebsch_is_q5_like():
    cover = bipartite_double_cover(clebsch())
    assert cover.order == 32
    assert cover.regular_degree() == 5
    assert is_bipartite(cover)
    assert diameter(cover) == 5


def test_cover_block_form():
    g = petersen()
    a = g.adjacency_matrix()
    m = bipartite_double_cover(g).adjacency_matrix()
    o = IntMatrix.zeros(10)
    assert m == IntMatrix.blocks(o, a, a, o)


def test_kneser_cover_order():
    for n, k in [(5, 2), (6, 2), (7, 3)]:
        g = kneser(n, k)
        assert bipartite_double_cover(g).order == 2 * g.order


@settings(max_examples=80)
@given(graphs())
def test_cover_edge_count_and_bipartite(g):
    cover = bipartite_double_cover(g)
    assert cover.size == 2 * g.size
    assert is_bipartite(cover)
    # 2-colouring by the second coordinate
    n = g.order
    assert all((u < n) != (v < n) for u, v in cover.edges())


@settings(max_examples=80)
@given(graphs())
def test_cover_connected_iff_base_not_bipartite(g):
    if not is_connected(g) or g.order < 2:
        return
    cover = bipartite_double_cover(g)
    if is_bipartite(g):
        with pytest.raises(Disconnected):
            distance_matrix(cover)
    else:
        distance_matrix(cover)


def _floyd_warshall(g):
    n = g.order
    inf = float("inf")
    d = [[0 if i == j else (1 if g.has_edge(i, j) else inf) for j in range(n)] for i in range(n)]
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d


@settings(max_examples=80)
@given(graphs())
def test_distance_matrix_invariants(g):
    if not is_connected(g):
        return
    d = distance_matrix(g)
    n = g.order
    assert d.rows == tuple(tuple(r) for r in _floyd_warshall(g))
    for u in range(n):
        assert d[u, u] == 0
        for v in range(n):
            assert d[u, v] == d[v, u]
            assert (d[u, v] == 1) == g.has_edge(u, v)
            for w in range(n):
                assert d[u, w] <= d[u, v] + d[v, w]
    assert diameter(g) <= n - 1


@settings(max_examples=80)
@given(graphs())
def test_srg_counting_identity(g):
    p = is_strongly_regular(g)
    if p is not None:
        assert p.d * (p.d - p.a - 1) == (p.n - 1 - p.d) * p.c


def test_srg_counting_identity_on_known_srgs():
    for g in (petersen(), clebsch(), rook(4), cycle(5)):
        p = is_strongly_regular(g)
        assert p.d * (p.d - p.a - 1) == (p.n - 1 - p.d) * p.c


def test_vertex_transitive_rows_are_permutations():
    for g in (petersen(), clebsch()):
        d = distance_matrix(g)
        first = sorted(d.rows[0])
        assert all(sorted(r) == first for r in d.rows)


def test_petersen_has_girth_five():
    # exhaustive search for 3- and 4-cycles
    g = petersen()
    for length in (3, 4):
        for cyc in permutations(range(10), length):
            if cyc[0] != min(cyc):
                continue
            closed = all(g.has_edge(cyc[i], cyc[(i + 1) % length]) for i in range(length))
            assert not closed
    assert any(all(g.has_edge(c[i], c[(i + 1) % 5]) for i in range(5))
               for c in permutations(range(10), 5) if c[0] == 0)
