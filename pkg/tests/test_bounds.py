import math
import random

import pytest
from hypothesis import given, strategies as st

from constabound.bounds import BoundReport, bound_from_med, bound_report, irreducible_bounds, irreducible_coincide
from constabound.cyclotomic import all_cosets, coset, primitive_form
from constabound.medrep import all_med_representations, med_representation
from constabound.residues import DefiningSet

from conftest import naive_orbit, translation_scan

QS = [2, 3, 4, 5, 7, 8, 9, 11, 13]
C45 = coset(45, 7, 1).as_defining_set()
C9 = coset(9, 7, 1).as_defining_set()


def oracle_bounds(elems, n):
    """(b_S, b_AS) from |T| and the size of the translation group found by scanning."""
    tau = len(elems)
    sigma = len(translation_scan(elems, n))
    return tau + 1, tau // sigma + 1


def test_bound_from_med_examples():
    assert bound_from_med(med_representation(C45, 15), 12) == 5
    assert bound_from_med(med_representation(C45, 45), 12) == 13
    assert bound_from_med(med_representation(C9, 3), 3) == 2
    with pytest.raises(ValueError):
        bound_from_med(med_representation(C9, 3), 4)


def test_bound_report_examples():
    r = bound_report(C45)
    assert (r.singleton, r.arithmetic, r.coincide, r.sigma_f_order, r.omega) == (13, 5, False, 3, 4)
    assert r.gamma_family == ((15, 5), (45, 13))
    r = bound_report(C9)
    assert (r.singleton, r.arithmetic, r.coincide) == (4, 2, False)
    for T in (DefiningSet(1, 7, (0,)), DefiningSet(9, 7, (3,))):
        r = bound_report(T)
        assert (r.singleton, r.arithmetic, r.coincide) == (2, 2, True)


def test_empty_set_report():
    r = bound_report(DefiningSet(1, 7, ()))
    assert (r.tau, r.singleton, r.arithmetic) == (0, 1, 1)


def test_report_round_trip():
    r = bound_report(C45)
    assert BoundReport.from_dict(r.as_dict()) == r
    assert r.sigma_f == (15, 45)


@pytest.mark.parametrize("n, bs, bas, w, tau", [(45, 13, 5, 4, 12), (9, 4, 2, 1, 3), (1, 2, 2, 1, 1)])
def test_irreducible_bounds_examples(n, bs, bas, w, tau):
    assert tuple(irreducible_bounds(7, n)) == (bs, bas, w, tau)


def test_irreducible_bounds_trivial_order():
    for q in QS:
        assert tuple(irreducible_bounds(q, 1)) == (2, 2, 1, 1)
        assert irreducible_coincide(q, 1)


def test_irreducible_coincide_examples():
    assert irreducible_coincide(7, 75)
    assert not irreducible_coincide(7, 225)
    with pytest.raises(ValueError):
        irreducible_coincide(7, 14)
    with pytest.raises(ValueError):
        irreducible_bounds(9, 6)


@pytest.mark.parametrize("q", QS)
def test_closed_form_matches_generic_path(q):
    for n in range(1, 201):
        if math.gcd(n, q) != 1:
            continue
        for c in all_cosets(n, q):
            T = primitive_form(c).as_defining_set()
            closed = irreducible_bounds(q, c.n_gamma)
            r = bound_report(T)
            assert (r.singleton, r.arithmetic, r.omega, r.tau) == tuple(closed)
            assert irreducible_coincide(q, c.n_gamma) == r.coincide
            assert (r.singleton, r.arithmetic) == oracle_bounds(naive_orbit(c.n_gamma, q, T.elems[0]), c.n_gamma)


def _random_union(rng, q, n, k=3):
    cs = all_cosets(n, q)
    picked = rng.sample(cs, rng.randint(1, min(k, len(cs))))
    return DefiningSet(n, q, tuple(g for c in picked for g in c.elems))


@given(st.sampled_from(QS), st.integers(1, 200), st.randoms(use_true_random=False))
def test_report_against_scan_oracle(q, n, rng):
    if math.gcd(n, q) != 1:
        return
    T = _random_union(rng, q, n)
    r = bound_report(T)
    assert (r.singleton, r.arithmetic) == oracle_bounds(T.elems, n)
    scan = translation_scan(T.elems, n)
    stable_divisors = [d for d in range(1, n + 1) if n % d == 0 and d in scan or d == n]
    assert r.coincide == (len(scan) == 1) == (len(stable_divisors) == 1)
    assert r.arithmetic <= r.singleton


@given(st.sampled_from(QS), st.integers(1, 200), st.randoms(use_true_random=False))
def test_bounds_monotone_under_divisibility(q, n, rng):
    if math.gcd(n, q) != 1:
        return
    T = _random_union(rng, q, n)
    fam = dict(bound_report(T).gamma_family)
    for d1, b1 in fam.items():
        for d2, b2 in fam.items():
            if d2 % d1 == 0:
                assert b1 <= b2


def test_family_matches_med_class_counts():
    rng = random.Random(11)
    for _ in range(200):
        q = rng.choice(QS)
        n = rng.randint(1, 150)
        if math.gcd(n, q) != 1:
            continue
        T = _random_union(rng, q, n)
        r = bound_report(T)
        assert [(rep.d, len(rep.classes) + 1) for rep in all_med_representations(T)] == list(r.gamma_family)
