"""Closed forms for the distance matrix and distance spectrum of the bipartite
double cover B(G) of a diameter-2 regular graph G, specialised to strongly
regular G.

Two cases carry closed forms:

* ``TriangleFreeIrreducible``: no edge lies in a triangle and no two vertices
  share a neighbourhood. B(G) has diameter 5.
* ``AdjacentShareNeighbor``: every edge lies in a triangle. B(G) has diameter 3.

A bipartite G (for SRGs, exactly K_{m,m}) has a disconnected cover.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from enum import Enum
from math import isqrt

from .errors import (
    BadCase,
    DisconnectedCover,
    HypothesisViolated,
    InconsistentInput,
    InfeasibleParams,
    NotAdjacency,
    NotSrg,
    OutOfHypothesisWarning,
)
from .graph import (
    Graph,
    SrgParams,
    adjacent_pairs_share_neighbor,
    diameter,
    is_bipartite,
    is_connected,
    is_irreducible,
    is_strongly_regular,
    is_triangle_free,
    new_graph,
)
from .matrix import IntMatrix
from .quadfield import QuadNum, Spectrum, is_square


class CaseTag(str, Enum):
    TRIANGLE_FREE_IRREDUCIBLE = "TriangleFreeIrreducible"
    ADJACENT_SHARE_NEIGHBOR = "AdjacentShareNeighbor"
    DISCONNECTED_COVER = "DisconnectedCover"
    OUT_OF_SCOPE = "OutOfScope"

    def __str__(self) -> str:
        return self.value


TF = CaseTag.TRIANGLE_FREE_IRREDUCIBLE
AN = CaseTag.ADJACENT_SHARE_NEIGHBOR

# measured diameter of B(G) in each closed-form case
COVER_DIAMETER = {TF: 5, AN: 3}


@dataclass(frozen=True)
class CoverCase:
    tag: CaseTag
    detail: str = ""


@dataclass(frozen=True)
class CoverBlocks:
    """Block matrices of order 2n under the ``(v, i) -> v + i*n`` encoding."""

    M: IntMatrix   # [[O, A], [A, O]]: adjacency of B(G)
    M4: IntMatrix  # [[A, O], [O, A]]
    X: IntMatrix   # [[J, O], [O, J]]
    Y: IntMatrix   # [[O, J], [J, O]]
    M5: IntMatrix  # [[O, I], [I, O]]


# ---------------------------------------------------------------- SRG spectrum

def srg_delta(p: SrgParams) -> int:
    return (p.a - p.c) ** 2 + 4 * (p.d - p.c)


def srg_spectrum(p: SrgParams) -> Spectrum:
    """Adjacency spectrum ``{d^1, lambda1^m1, lambda2^m2}`` from the parameters."""
    n, d, a, c = p.astuple()
    delta = srg_delta(p)
    if delta <= 0:
        raise InfeasibleParams(f"delta = {delta} for {p}")
    lam1 = QuadNum(a - c, 1, delta)
    lam2 = QuadNum(a - c, -1, delta)
    skew = 2 * d + (n - 1) * (a - c)
    if is_square(delta):
        s = isqrt(delta)
        if skew % s or (n - 1 - skew // s) % 2:
            raise InfeasibleParams(f"irrational or fractional multiplicities for {p}")
        m1 = ((n - 1) - skew // s) // 2
    else:
        if skew != 0 or (n - 1) % 2:
            raise InfeasibleParams(
                f"delta = {delta} is not a square but 2d + (n-1)(a-c) = {skew} != 0 for {p}")
        m1 = (n - 1) // 2
    m2 = n - 1 - m1
    if m1 < 0 or m2 < 0:
        raise InfeasibleParams(f"negative multiplicity for {p}: m1={m1}, m2={m2}")
    return Spectrum(delta, [(QuadNum.rational(d, delta), 1), (lam1, m1), (lam2, m2)])


# -------------------------------------------------------------- classification

def classify_cover_case(g: Graph, p: SrgParams) -> CoverCase:
    if is_strongly_regular(g) != p:
        raise NotSrg(f"graph is not strongly regular with parameters {p}")
    if p.a >= 1:
        return CoverCase(AN, f"a = {p.a}: every edge lies in a triangle")
    if is_irreducible(g):
        return CoverCase(TF, "a = 0 and all neighbourhoods distinct")
    # a reducible triangle-free SRG is K_{m,m}
    if not (is_bipartite(g) and p.c == p.d and p.n == 2 * p.d):
        raise NotSrg(f"reducible triangle-free SRG {p} is not K_(m,m)-shaped")
    return CoverCase(CaseTag.DISCONNECTED_COVER, f"K_({p.d},{p.d}): bipartite, cover splits in two")


def hypothesis_case(g: Graph) -> CoverCase:
    """Case of an arbitrary graph, from the closed forms' hypotheses alone."""
    if not is_connected(g):
        return CoverCase(CaseTag.OUT_OF_SCOPE, "graph disconnected")
    if is_bipartite(g):
        return CoverCase(CaseTag.DISCONNECTED_COVER, "bipartite graph")
    k = g.regular_degree()
    if k is None:
        return CoverCase(CaseTag.OUT_OF_SCOPE, "not regular")
    if diameter(g) != 2:
        return CoverCase(CaseTag.OUT_OF_SCOPE, "diameter is not 2")
    if is_triangle_free(g):
        if is_irreducible(g):
            return CoverCase(TF, "triangle-free, irreducible, diameter 2")
        return CoverCase(CaseTag.OUT_OF_SCOPE, "triangle-free but reducible")
    if adjacent_pairs_share_neighbor(g):
        return CoverCase(AN, "every edge in a triangle, diameter 2")
    return CoverCase(CaseTag.OUT_OF_SCOPE, "mixed: some edges in triangles, some not")


# ------------------------------------------------------------ distance matrix

def cover_distance_rule(same_vertex: bool, same_side: bool, adjacent_in_g: bool,
                        case: CoverCase | CaseTag) -> int:
    """Distance in B(G) between ``(v, r)`` and ``(w, s)``.

    ``same_vertex`` is ``v == w``, ``same_side`` is ``r == s`` and
    ``adjacent_in_g`` is ``v ~ w`` in G.
    """
    tag = case.tag if isinstance(case, CoverCase) else case
    if tag not in COVER_DIAMETER:
        raise BadCase(f"no distance rule for case {tag}")
    if same_vertex and adjacent_in_g:
        raise InconsistentInput("a vertex is not adjacent to itself")
    if same_vertex and same_side:
        return 0
    if tag is TF:
        if same_vertex:
            return 5
        if adjacent_in_g:
            return 4 if same_side else 1
        return 2 if same_side else 3
    if same_side:
        return 2
    return 1 if adjacent_in_g else 3


def _check_adjacency(a: IntMatrix) -> None:
    n = a.order
    for i in range(n):
        if a[i, i] != 0:
            raise NotAdjacency(f"nonzero diagonal at {i}")
        for j in range(n):
            if a[i, j] not in (0, 1) or a[i, j] != a[j, i]:
                raise NotAdjacency(f"entry ({i}, {j}) is not a symmetric 0/1 value")


def cover_block_matrices(a: IntMatrix) -> CoverBlocks:
    _check_adjacency(a)
    n = a.order
    o, i, j = IntMatrix.zeros(n), IntMatrix.identity(n), IntMatrix.ones(n)
    return CoverBlocks(
        M=IntMatrix.blocks(o, a, a, o),
        M4=IntMatrix.blocks(a, o, o, a),
        X=IntMatrix.blocks(j, o, o, j),
        Y=IntMatrix.blocks(o, j, j, o),
        M5=IntMatrix.blocks(o, i, i, o),
    )


def _graph_from_adjacency(a: IntMatrix) -> Graph:
    return new_graph(a.order, [(u, v) for u in range(a.order) for v in range(u) if a[u, v]])


def check_case_hypotheses(g: Graph, tag: CaseTag) -> None:
    """Raise :class:`HypothesisViolated` unless ``g`` meets the case's hypotheses."""
    if tag not in COVER_DIAMETER:
        raise BadCase(f"no closed form for case {tag}")
    if g.regular_degree() is None:
        raise HypothesisViolated("graph is not regular")
    if not is_connected(g) or diameter(g) != 2:
        raise HypothesisViolated("graph does not have diameter 2")
    if tag is TF:
        if not is_triangle_free(g):
            raise HypothesisViolated("graph has a triangle")
        if not is_irreducible(g):
            raise HypothesisViolated("graph is reducible")
    elif not adjacent_pairs_share_neighbor(g):
        raise HypothesisViolated("some adjacent pair has no common neighbour")


def structured_cover_distance_matrix(a: IntMatrix, case: CoverCase | CaseTag) -> IntMatrix:
    """Distance matrix of B(G) assembled from block matrices, without BFS.

    TF case: ``-2M + 2M4 + 2X + 3Y + 2M5 - 2I``; AN case: ``-2M + 2X + 3Y - 2I``.
    """
    tag = case.tag if isinstance(case, CoverCase) else case
    b = cover_block_matrices(a)
    check_case_hypotheses(_graph_from_adjacency(a), tag)
    d = -2 * b.M + 2 * b.X + 3 * b.Y
    if tag is TF:
        d = d + 2 * b.M4 + 2 * b.M5
    return d.shift(-2)


# ----------------------------------------------------------- distance spectra

def diam2_terms(base_spectrum: Spectrum, n: int, k: int,
                case: CoverCase | CaseTag) -> list[tuple[QuadNum, int]]:
    """Unmerged closed-form terms of the cover's distance spectrum, in theorem order."""
    tag = case.tag if isinstance(case, CoverCase) else case
    if tag not in COVER_DIAMETER:
        raise BadCase(f"no closed-form distance spectrum for case {tag}")
    if base_spectrum.order != n:
        raise ValueError(f"base spectrum has order {base_spectrum.order}, expected {n}")
    delta = base_spectrum.delta
    kq = QuadNum.rational(k, delta)
    if base_spectrum.multiplicity(kq) < 1:
        raise ValueError(f"degree {k} is not an eigenvalue of the base spectrum")
    if k < 3:
        warnings.warn(f"degree k = {k} < 3: closed form applied outside its stated range",
                      OutOfHypothesisWarning, stacklevel=2)
    rest = [(lam, m - (lam == kq)) for lam, m in base_spectrum]
    rest = [(lam, m) for lam, m in rest if m > 0]

    def q(x: int) -> QuadNum:
        return QuadNum.rational(x, delta)

    if tag is TF:
        return ([(q(5 * n), 1)]
                + [(4 * lam - 4, m) for lam, m in rest]
                + [(q(0), n - 1), (q(4 * k - n - 4), 1)])
    return ([(q(-2 * k + 5 * n - 2), 1)]
            + [(2 * lam - 2, m) for lam, m in rest]
            + [(-2 * lam - 2, m) for lam, m in reversed(rest)]
            + [(q(2 * k - n - 2), 1)])


def distance_spectrum_diam2(base_spectrum: Spectrum, n: int, k: int,
                            case: CoverCase | CaseTag) -> Spectrum:
    return Spectrum(base_spectrum.delta, diam2_terms(base_spectrum, n, k, case))


def cover_case_from_params(p: SrgParams) -> CaseTag:
    if p.a != 0:
        return AN
    if p.c == p.d:
        return CaseTag.DISCONNECTED_COVER
    return TF


def distance_spectrum_cover_terms(p: SrgParams) -> list[tuple[QuadNum, int]]:
    tag = cover_case_from_params(p)
    if tag is CaseTag.DISCONNECTED_COVER:
        raise DisconnectedCover(f"{p} is K_({p.d},{p.d}); its double cover is disconnected")
    return diam2_terms(srg_spectrum(p), p.n, p.d, tag)


def distance_spectrum_cover(p: SrgParams) -> Spectrum:
    """Distance spectrum of B(G) straight from the SRG parameters of G."""
    return Spectrum(srg_delta(p), distance_spectrum_cover_terms(p))
