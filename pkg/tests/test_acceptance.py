"""Acceptance suite: one group of checks per numbered criterion, at exact tolerance."""

import time
import warnings
from itertools import combinations

import pytest

from srgcover import constructions as c
from srgcover.cli import main
from srgcover.errors import OutOfHypothesisWarning
from srgcover.graph import (
    SrgParams,
    bipartite_double_cover,
    connected_components,
    distance_matrix,
    is_strongly_regular,
    new_graph,
)
from srgcover.oracles import annihilator_check, check_spectrum, multiplicity_solve
from srgcover.quadfield import QuadNum, Spectrum
from srgcover.spectra import (
    COVER_DIAMETER,
    classify_cover_case,
    distance_spectrum_cover,
    structured_cover_distance_matrix,
)
from srgcover.verification import (
    random_diam2_check,
    rule_agrees,
    single_field_mutations,
    verify_entry,
)


def ints(*pairs, delta=1):
    return Spectrum(delta, list(pairs))


def same(a, b):
    """Equal as multisets of numbers, whatever the ambient delta."""
    if a.is_integral() and b.is_integral():
        return [(v.as_fraction(), m) for v, m in a] == [(v.as_fraction(), m) for v, m in b]
    return a == b


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


def oracle_ok(g, claim):
    return check_spectrum(distance_matrix(bipartite_double_cover(g)), claim) == (True, True)


@pytest.mark.criterion(1)
def test_c1_petersen(capsys):
    with Timer() as t:
        code = main(["dspec", "petersen"])
        g = c.petersen()
        d = distance_matrix(bipartite_double_cover(g))
        claim = distance_spectrum_cover(is_strongly_regular(g))
        ok = check_spectrum(d, claim)
    out = capsys.readouterr().out
    assert code == 0 and "oracle: PASS" in out
    assert d.order == 20
    assert same(claim, ints((50, 1), (0, 14), (-12, 4), (-2, 1)))
    assert ok == (True, True)
    assert t.elapsed < 1


@pytest.mark.criterion(2)
def test_c2_hoffman_singleton():
    with Timer() as t:
        r = verify_entry("hoffman-singleton")
    assert r.passed and r.annihilator and r.multiplicities_ok
    assert same(r.spectrum, ints((250, 1), (4, 28), (-16, 21), (0, 49), (-26, 1)))
    assert r.spectrum.order == 100
    assert t.elapsed < 30


@pytest.mark.criterion(3)
def test_c3_rook_erratum():
    with Timer() as t:
        r = verify_entry("rook:5")
    assert r.passed
    assert same(r.spectrum, ints((107, 1), (4, 8), (-6, 16), (2, 16), (-8, 8), (-11, 1)))
    assert any("(-8)^16 printed" in w for w in r.warnings)
    assert r.spectrum.multiplicity(QuadNum.rational(-8, r.spectrum.delta)) == 8
    # the printed version is rejected by the oracles
    d = distance_matrix(bipartite_double_cover(c.rook(5)))
    printed = ints((107, 1), (4, 8), (-6, 16), (2, 16), (-8, 16), (-11, 1))
    assert check_spectrum(d, printed) != (True, True)
    assert t.elapsed < 10


def cayley_formula(n):
    m1, m2 = 3 * n - 3, (n - 1) * (n - 2)
    return ints((5 * n * n - 6 * n + 4, 1), (2 * n - 8, m1), (-8, m2), (4, m2),
                (-2 * n + 4, m1), (-n * n + 6 * n - 8, 1))


@pytest.mark.criterion(4)
@pytest.mark.parametrize("n", [4, 5])
def test_c4_cayley(n):
    with Timer() as t:
        r = verify_entry(f"cayley:{n}")
    assert r.passed and r.annihilator and r.multiplicities_ok
    assert same(r.spectrum, cayley_formula(n))
    assert t.elapsed < 10


@pytest.mark.criterion(5)
def test_c5_structured_matrix_full_catalog():
    with Timer() as t:
        checked = 0
        for name, entry in c.CATALOG.items():
            g = entry.build()
            p = is_strongly_regular(g)
            if p is None:
                continue
            case = classify_cover_case(g, p)
            if case.tag not in COVER_DIAMETER:
                continue
            d = distance_matrix(bipartite_double_cover(g))
            assert structured_cover_distance_matrix(g.adjacency_matrix(), case) == d, name
            checked += 1
    assert checked == 8
    assert t.elapsed < 60


@pytest.mark.criterion(6)
def test_c6_kmm(capsys):
    code = main(["dspec", "kmm:3"])
    assert code == 3
    assert "disconnected" in capsys.readouterr().out
    assert len(connected_components(bipartite_double_cover(c.complete_bipartite(3)))) == 2


def hypercube(dim):
    return new_graph(1 << dim, [(x, y) for x, y in combinations(range(1 << dim), 2)
                                if bin(x ^ y).count("1") == 1])


@pytest.mark.criterion(7)
def test_c7_clebsch_vs_q5():
    q5 = distance_matrix(hypercube(5))
    # support of the hypercube distance spectrum: n 2^(n-1), 0, -2^(n-1)
    support = [QuadNum.rational(v, 1) for v in (80, 0, -16)]
    mults = multiplicity_solve(q5, support)
    q5_spectrum = ints(*zip((80, 0, -16), mults))
    assert annihilator_check(q5, q5_spectrum)
    cover = distance_spectrum_cover(SrgParams(16, 5, 0, 2))
    assert same(q5_spectrum, cover) and same(cover, ints((80, 1), (0, 26), (-16, 5)))
    assert oracle_ok(c.clebsch(), cover)


@pytest.mark.criterion(8)
def test_c8_paley13():
    d = distance_matrix(bipartite_double_cover(c.paley(13)))
    s = distance_spectrum_cover(SrgParams(13, 6, 2, 3))
    assert s.delta == 13
    assert annihilator_check(d, s)
    mults = multiplicity_solve(d, list(s.eigenvalues))
    family = {v: m for v, m in zip(s.eigenvalues, mults)}
    for p in (-6, -2):
        assert family[QuadNum(p, 2, 13)] == family[QuadNum(p, -2, 13)] == 6
    assert mults == list(s.multiplicities)


@pytest.mark.criterion(9)
def test_c9_pentagon():
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        s = distance_spectrum_cover(SrgParams(5, 2, 0, 1))
    assert any(issubclass(w.category, OutOfHypothesisWarning) for w in caught)
    assert s == Spectrum(5, [(25, 1), (QuadNum(-12, 4, 5), 2), (QuadNum(-12, -4, 5), 2),
                             (0, 4), (-1, 1)])
    assert bipartite_double_cover(c.cycle(5)).order == 10
    assert oracle_ok(c.cycle(5), s)
    r = verify_entry("cycle:5")
    assert r.passed and any("k = 2" in w for w in r.warnings)


@pytest.mark.criterion(10)
@pytest.mark.parametrize("name", [n for n, e in c.CATALOG.items()
                                  if e.expected_srg and e.expected_srg.c != e.expected_srg.d])
def test_c10_fault_injection(name):
    g = c.build(name)
    d = distance_matrix(bipartite_double_cover(g))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", OutOfHypothesisWarning)  # cycle:5 has k = 2
        good = distance_spectrum_cover(is_strongly_regular(g))
    assert check_spectrum(d, good) == (True, True)
    mutants = list(single_field_mutations(good))
    assert len(mutants) == 4 * len(good.pairs)
    missed = [label for label, bad in mutants if check_spectrum(d, bad) == (True, True)]
    assert missed == []


@pytest.mark.criterion(11)
def test_c11_rule_on_catalog():
    for name, entry in c.CATALOG.items():
        g = entry.build()
        p = is_strongly_regular(g)
        if p is None:
            continue
        case = classify_cover_case(g, p)
        if case.tag in COVER_DIAMETER:
            assert rule_agrees(g, distance_matrix(bipartite_double_cover(g)), case), name


@pytest.mark.criterion(11)
def test_c11_random_trials_and_determinism():
    first = random_diam2_check(2024, 200)
    assert first.trials >= 200
    assert first.passed, first.failures
    assert sum(first.candidates.values()) > 0
    assert random_diam2_check(2024, 200).to_json() == first.to_json()
    assert verify_entry("petersen").to_json() == verify_entry("petersen").to_json()
