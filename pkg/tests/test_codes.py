import itertools
import math
import random

import pytest

from constabound.bounds import bound_report
from constabound.codes import (
    BudgetExceeded,
    DistanceResult,
    brute_force_distance,
    build_code,
    code_bound_report,
    generator_divisors,
    indexed_defining_set,
    root_indexing,
    shift,
)
from constabound.finite_field import base_field
from constabound.medrep import all_med_representations
from constabound.polynomial import Poly, cyclotomic_factors, defining_set, parse_poly

F7 = base_field(7)


def P(text, ctx=F7):
    return parse_poly(text, ctx)


def naive_distance(code):
    """Minimum weight over every nonzero message, by plain polynomial products."""
    ctx = code.ctx
    best = code.m + 1
    for msg in itertools.product(range(ctx.cardinality), repeat=code.k):
        if any(msg):
            best = min(best, sum(1 for v in code.encode(msg) if v))
    return best


def test_build_code_examples():
    assert build_code(7, 9, 1, P("5,0,0,1")).k == 6
    assert build_code(7, 9, 1, P("6,0,0,0,0,0,0,0,0,1")).k == 0
    assert build_code(7, 9, 1, P("1")).k == 9
    assert build_code(7, 9, 1, P("3,0,0,2")).generator == P("5,0,0,1")


@pytest.mark.parametrize("q, m, lam, f", [(7, 9, 0, "1"), (7, 14, 1, "1"), (7, 9, 1, "1,1"), (7, 9, 1, "0"), (7, 0, 1, "1")])
def test_build_code_errors(q, m, lam, f):
    with pytest.raises(ValueError):
        build_code(q, m, lam, P(f, base_field(q)))


def test_shift_examples():
    assert shift(build_code(7, 3, 1, P("1")), (1, 2, 3)) == (3, 1, 2)
    assert shift(build_code(7, 3, 6, P("1")), (1, 0, 3)) == (4, 1, 0)
    code = build_code(7, 9, 1, P("5,0,0,1"))
    g = tuple(int(c) for c in code.generator.coeffs) + (0,) * (code.m - code.generator.degree - 1)
    assert code.contains(shift(code, g))
    with pytest.raises(ValueError):
        shift(code, (1, 2))


def test_distance_examples():
    code = build_code(7, 9, 1, P("5,0,0,1"))
    r = brute_force_distance(code)
    assert r.distance == 2 and r.exhaustive
    assert r.witness == (5, 0, 0, 1, 0, 0, 0, 0, 0)
    assert brute_force_distance(build_code(7, 4, 1, P("1"))).distance == 1
    f = P("5,0,0,1") * P("3,0,0,1")
    code = build_code(7, 9, 1, f)
    r = brute_force_distance(code)
    assert r.distance == naive_distance(code)
    assert all(r.distance <= rep.r + 1 for rep in all_med_representations(defining_set(f)))


def test_distance_refuses_beyond_budget():
    code = build_code(7, 9, 1, P("5,0,0,1"))
    with pytest.raises(BudgetExceeded):
        brute_force_distance(code, budget=7**6 - 2)
    assert brute_force_distance(code, budget=7**6 - 1).distance == 2
    with pytest.raises(ValueError):
        brute_force_distance(build_code(7, 9, 1, P("6,0,0,0,0,0,0,0,0,1")))


def test_distance_round_trip():
    r = DistanceResult(2, True, (5, 0, 1))
    assert DistanceResult.from_dict(r.as_dict()) == r


def _all_small_codes(q, m_max, k_max):
    ctx = base_field(q)
    for m in range(1, m_max + 1):
        if m % ctx.p == 0:
            continue
        for lam in (ctx.from_int(i) for i in range(1, q)):
            for f, cosets in generator_divisors(q, m, lam):
                if 0 < m - f.degree <= k_max:
                    yield build_code(q, m, lam, f), cosets


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_distance_matches_naive_enumeration(q):
    for code, _ in _all_small_codes(q, 8, 4 if q < 4 else 3):
        r = brute_force_distance(code)
        assert r.distance == naive_distance(code)
        assert code.contains(r.witness)
        assert sum(1 for v in r.witness if v) == r.distance


def test_distance_chunking_is_consistent(monkeypatch):
    import constabound.codes as codes

    code = build_code(3, 11, 1, P("2,0,1,2,1,1", base_field(3)))  # ternary Golay generator
    full = brute_force_distance(code)
    monkeypatch.setattr(codes, "_CHUNK", 9)
    small = brute_force_distance(code)
    assert full.distance == small.distance == 5


@pytest.mark.parametrize("q", [2, 3, 5, 7])
def test_shift_invariance(q):
    rng = random.Random(q)
    for code, _ in _all_small_codes(q, 10, 6):
        for _ in range(20):
            msg = [rng.randrange(q) for _ in range(code.k)]
            word = code.encode(msg)
            assert code.contains(word)
            assert code.contains(shift(code, word))


def test_generator_divisors_enumerate_all_factors():
    for q, m, lam in [(7, 9, 1), (3, 4, 2), (5, 6, 2), (2, 15, 1), (4, 5, 3), (9, 4, 5)]:
        ctx = base_field(q)
        lam = ctx.from_int(lam)
        idx = root_indexing(q, m, lam)
        target = Poly.monomial(ctx, m) - Poly(ctx, [lam])
        divs = list(generator_divisors(q, m, lam))
        assert len(divs) == 2 ** len(idx.cosets)
        assert len({d for d, _ in divs}) == len(divs)
        for f, cosets in divs:
            assert not target % f
            assert f.degree == sum(c.tau for c in cosets)
            T = indexed_defining_set(q, idx.N, cosets)
            if f.degree:
                assert T == defining_set(f, idx.ctx)
                # a different primitive root only relabels T by a unit
                assert bound_report(T) == bound_report(defining_set(f))


def test_negacyclic_root_indexing():
    idx = root_indexing(3, 4, 2)
    assert (idx.N, idx.rho, idx.a) == (8, 2, 1)
    assert sorted(g for c in idx.cosets for g in c.elems) == [1, 3, 5, 7]


def test_code_bound_report_examples():
    r = code_bound_report(build_code(7, 9, 1, P("5,0,0,1")))
    assert r.status == "ok" and r.bounds.arithmetic == 2 and r.distance.distance == 2
    assert code_bound_report(build_code(7, 9, 1, P("6,0,0,0,0,0,0,0,0,1"))).status == "zero code"
    f = cyclotomic_factors(45, 7)[0]
    r = code_bound_report(build_code(7, 45, 1, f))
    assert r.status == "distance unavailable" and r.distance is None
    assert (r.bounds.singleton, r.bounds.arithmetic) == (13, 5)
    unit = code_bound_report(build_code(7, 4, 1, P("1")))
    assert unit.distance.distance == 1 and unit.bounds.singleton == 1


def test_non_cyclic_binary_example():
    # X^7 - 1 over GF(2): the Hamming code has distance 3
    code = build_code(2, 7, 1, P("1,1,0,1", base_field(2)))
    r = code_bound_report(code)
    assert r.distance.distance == 3 and r.bounds.singleton == 4
    assert math.gcd(7, 2) == 1
