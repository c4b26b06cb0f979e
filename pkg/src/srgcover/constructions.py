"""Deterministic builders for the named graph families and the verification
catalog built from them."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Callable

from .errors import BadParams, ConstructionInvalid, UnknownEntry
from .graph import Graph, SrgParams, bipartite_double_cover, is_strongly_regular, new_graph


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    i = 2
    while i * i <= q:
        if q % i == 0:
            return False
        i += 1
    return True


def complete(n: int) -> Graph:
    if n < 1:
        raise BadParams(f"complete graph needs n >= 1, got {n}")
    return new_graph(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    if n < 3:
        raise BadParams(f"cycle needs n >= 3, got {n}")
    return new_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(m: int) -> Graph:
    """K_{m,m} with sides ``0..m-1`` and ``m..2m-1``."""
    if m < 2:
        raise BadParams(f"K_(m,m) needs m >= 2, got {m}")
    return new_graph(2 * m, [(i, m + j) for i in range(m) for j in range(m)])


def crown(n: int) -> Graph:
    """K_{n,n} minus a perfect matching, labelled to coincide with B(K_n)."""
    if n < 3:
        raise BadParams(f"crown graph needs n >= 3, got {n}")
    return new_graph(2 * n, [(i, n + j) for i in range(n) for j in range(n) if i != j])


def kneser(n: int, k: int) -> Graph:
    """K(n, k): k-subsets of ``range(n)``, adjacent when disjoint."""
    if not 1 <= k <= n - 1:
        raise BadParams(f"Kneser graph needs 1 <= k <= n-1, got n={n}, k={k}")
    verts = [frozenset(s) for s in combinations(range(n), k)]
    edges = [(i, j) for i, j in combinations(range(len(verts)), 2)
             if not verts[i] & verts[j]]
    return new_graph(len(verts), edges)


def petersen() -> Graph:
    return kneser(5, 2)


def clebsch() -> Graph:
    """Folded 5-cube: 4-bit words, adjacent when they differ in one bit or in all four."""
    edges = [(x, y) for x, y in combinations(range(16), 2)
             if bin(x ^ y).count("1") == 1 or x ^ y == 0b1111]
    return new_graph(16, edges)


def hoffman_singleton() -> Graph:
    """Robertson's pentagon/pentagram construction, self-checked as SRG(50,7,0,1).

    Pentagon ``P_h`` vertex ``j`` is ``5h + j``; pentagram ``Q_i`` vertex ``j``
    is ``25 + 5i + j``.
    """
    edges = []
    for h in range(5):
        for j in range(5):
            edges.append((5 * h + j, 5 * h + (j + 1) % 5))
            edges.append((25 + 5 * h + j, 25 + 5 * h + (j + 2) % 5))
    for h, i, j in product(range(5), repeat=3):
        edges.append((5 * h + j, 25 + 5 * i + (h * i + j) % 5))
    g = new_graph(50, edges)
    if is_strongly_regular(g) != SrgParams(50, 7, 0, 1):
        raise ConstructionInvalid("pentagon/pentagram rule did not give SRG(50,7,0,1)")
    return g


def rook(m: int) -> Graph:
    """Line graph of K_{m,m}: cells of an m x m grid sharing a row or column."""
    if m < 2:
        raise BadParams(f"rook graph needs m >= 2, got {m}")
    cells = list(product(range(m), repeat=2))
    edges = [(i, j) for i, j in combinations(range(m * m), 2)
             if cells[i][0] == cells[j][0] or cells[i][1] == cells[j][1]]
    return new_graph(m * m, edges)


def paley(q: int) -> Graph:
    if not (_is_prime(q) and q % 4 == 1):
        raise BadParams(f"Paley graph needs a prime q = 1 mod 4, got {q}")
    residues = {(x * x) % q for x in range(1, q)}
    return new_graph(q, [(x, y) for x, y in combinations(range(q), 2) if (y - x) % q in residues])


def cayley_product(n: int) -> Graph:
    """Cay(Z_n x Z_n, {(g,0), (0,g), (g,g) : g != 0}); vertex ``(x, y)`` is ``x*n + y``."""
    if n < 4:
        raise BadParams(f"Cayley product graph needs n >= 4, got {n}")
    conn = {(g, 0) for g in range(1, n)} | {(0, g) for g in range(1, n)} | {(g, g) for g in range(1, n)}
    edges = []
    for x, y in product(range(n), repeat=2):
        for s, t in conn:
            edges.append((x * n + y, ((x + s) % n) * n + (y + t) % n))
    return new_graph(n * n, edges)


def _cayley_published(n: int) -> list[tuple[int, int]]:
    # multiplicities exactly as they appear in the published example
    m1, m2 = (n * n - n) // 2, (n * n + n - 2) // 2
    return [(5 * n * n - 6 * n + 4, 1), (2 * n - 8, m1), (-8, m2), (4, m2),
            (-2 * n + 4, m1), (-n * n + 6 * n - 8, 1)]


@dataclass(frozen=True)
class CatalogEntry:
    """A named, buildable graph plus what is known about it in the literature."""

    name: str
    builder: Callable[..., Graph]
    args: tuple[int, ...] = ()
    expected_srg: SrgParams | None = None
    notes: str = ""
    # distance spectrum of the double cover as printed in the literature
    published_spectrum: tuple[tuple[int, int], ...] | None = field(default=None, compare=False)
    # for non-SRG entries: an equal graph built another way, and a known diameter
    same_as: Callable[[], Graph] | None = field(default=None, compare=False)
    expected_diameter: int | None = None

    def build(self) -> Graph:
        return self.builder(*self.args)


CATALOG: dict[str, CatalogEntry] = {e.name: e for e in [
    CatalogEntry("petersen", petersen, (), SrgParams(10, 3, 0, 1), "Kneser graph K(5,2)",
                 published_spectrum=((50, 1), (0, 14), (-12, 4), (-2, 1))),
    CatalogEntry("clebsch", clebsch, (), SrgParams(16, 5, 0, 2), "folded 5-cube; cover is Q5"),
    CatalogEntry("hoffman-singleton", hoffman_singleton, (), SrgParams(50, 7, 0, 1),
                 "Robertson pentagon/pentagram construction",
                 published_spectrum=((250, 1), (4, 28), (-16, 21), (0, 49), (-26, 1))),
    CatalogEntry("rook:5", rook, (5,), SrgParams(25, 8, 3, 2), "line graph L(K_{5,5})",
                 published_spectrum=((107, 1), (4, 8), (-6, 16), (2, 16), (-8, 16), (-11, 1))),
    CatalogEntry("paley:13", paley, (13,), SrgParams(13, 6, 2, 3), "conference graph, delta = 13"),
    CatalogEntry("cayley:4", cayley_product, (4,), SrgParams(16, 9, 4, 6), "Cay(Z4 x Z4, S)",
                 published_spectrum=tuple(_cayley_published(4))),
    CatalogEntry("cayley:5", cayley_product, (5,), SrgParams(25, 12, 5, 6), "Cay(Z5 x Z5, S)",
                 published_spectrum=tuple(_cayley_published(5))),
    CatalogEntry("kmm:3", complete_bipartite, (3,), SrgParams(6, 3, 0, 3),
                 "reducible triangle-free SRG; cover disconnected"),
    CatalogEntry("cycle:5", cycle, (5,), SrgParams(5, 2, 0, 1), "pentagon; degree 2"),
    CatalogEntry("crown:5", crown, (5,), None, "K_{5,5} minus a perfect matching = B(K5)",
                 same_as=lambda: _cover_of_complete(5), expected_diameter=3),
]}


def _cover_of_complete(n: int) -> Graph:
    return bipartite_double_cover(complete(n))


_FAMILIES: dict[str, tuple[Callable[..., Graph], int]] = {
    "petersen": (petersen, 0),
    "clebsch": (clebsch, 0),
    "hoffman-singleton": (hoffman_singleton, 0),
    "rook": (rook, 1),
    "paley": (paley, 1),
    "cayley": (cayley_product, 1),
    "kmm": (complete_bipartite, 1),
    "cycle": (cycle, 1),
    "crown": (crown, 1),
    "kneser": (kneser, 2),
    "complete": (complete, 1),
}


def parse_name(name: str) -> tuple[Callable[..., Graph], tuple[int, ...]]:
    """Resolve ``family[:i[,j]]`` (e.g. ``rook:5``, ``kneser:5,2``) to a builder."""
    family, _, rest = name.partition(":")
    if family not in _FAMILIES:
        raise UnknownEntry(f"unknown graph family {family!r}")
    builder, arity = _FAMILIES[family]
    try:
        args = tuple(int(x) for x in rest.split(",")) if rest else ()
    except ValueError:
        raise BadParams(f"bad parameters in {name!r}") from None
    if len(args) != arity:
        raise BadParams(f"{family} takes {arity} integer parameter(s), got {name!r}")
    return builder, args


def build(name: str) -> Graph:
    builder, args = parse_name(name)
    return builder(*args)


def lookup(name: str) -> CatalogEntry:
    """Catalog entry for ``name``; ad hoc family names get an entry without expectations."""
    if name in CATALOG:
        return CATALOG[name]
    builder, args = parse_name(name)
    return CatalogEntry(name, builder, args)
