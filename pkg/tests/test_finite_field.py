import itertools

import pytest
from hypothesis import given, strategies as st

from constabound.finite_field import (
    _order_split,
    _partial_factor,
    _small_primes,
    ambient_field,
    base_field,
    certified_generator,
    element_order,
    embed,
    find_generator,
    is_irreducible_mod_p,
    is_irreducible_mod_p_fast,
    make_field,
    primitive_root_of_unity,
    restrict,
)
from constabound.numtheory import divisors, factorize, is_prime

from conftest import naive_factor

FIELDS = [(2, 1), (7, 1), (2, 4), (3, 2), (7, 3), (5, 2), (2, 8), (3, 5)]


def _divides(g, f, p):
    """Schoolbook remainder test over GF(p) on coefficient lists (low to high)."""
    r = list(f)
    inv = pow(g[-1], p - 2, p)
    while len(r) >= len(g):
        c = r[-1] * inv % p
        shift = len(r) - len(g)
        for i, b in enumerate(g):
            r[shift + i] = (r[shift + i] - c * b) % p
        while r and r[-1] == 0:
            r.pop()
    return not r


def _irreducible_by_trial(f, p):
    k = len(f) - 1
    for deg in range(1, k // 2 + 1):
        for low in itertools.product(range(p), repeat=deg):
            if _divides(list(low) + [1], f, p):
                return False
    return True


def _brute_modulus(p, k):
    for low in itertools.product(range(p), repeat=k):
        f = list(low) + [1]
        if _irreducible_by_trial(f, p):
            return tuple(f)


@pytest.mark.parametrize("p, k", [(7, 3), (2, 4), (3, 4), (5, 3), (2, 6)])
def test_modulus_is_lexicographically_first_irreducible(p, k):
    assert make_field(p, k).modulus == _brute_modulus(p, k)


def test_make_field_is_deterministic_and_cached():
    assert make_field(7, 3) is make_field(7, 3)
    assert make_field(7, 1).cardinality == 7
    assert make_field(2, 4).cardinality == 16


@pytest.mark.parametrize("args, exc", [((6, 1), ValueError), ((7, 0), ValueError), ((2, 1024), OverflowError), ((2**89 - 1, 1), OverflowError)])
def test_make_field_errors(args, exc):
    with pytest.raises(exc):
        make_field(*args)


def test_prime_field_examples():
    F = make_field(7)
    assert F(3) * F(5) == F(1)
    assert F(2).inverse() == F(4)
    assert F(1) / F(2) == F(4)
    assert -F(3) == F(4)
    assert F(2) ** -1 == F(4)


def test_zero_has_no_inverse():
    F = make_field(7, 3)
    with pytest.raises(ZeroDivisionError):
        F.zero.inverse()
    with pytest.raises(ValueError):
        element_order(F.zero)


def test_context_mismatch_is_rejected():
    with pytest.raises(ValueError):
        make_field(7)(1) + make_field(5)(1)
    with pytest.raises(ValueError):
        _ = make_field(7)(1) == make_field(7, 2).one


def _elements(p, k):
    F = make_field(p, k)
    return st.integers(0, F.cardinality - 1).map(F.from_int)


@pytest.mark.parametrize("p, k", FIELDS)
def test_field_axioms(p, k):
    F = make_field(p, k)

    @given(_elements(p, k), _elements(p, k), _elements(p, k))
    def check(a, b, c):
        assert a + b == b + a and a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == F.zero and a + F.zero == a and a * F.one == a
        if a:
            assert a * a.inverse() == F.one
            assert a ** (F.cardinality - 1) == F.one

    check()


def test_lagrange_in_gf343():
    F = make_field(7, 3)
    for i in range(1, F.cardinality):
        assert F.from_int(i) ** 342 == F.one


def _naive_order(a):
    x, t = a, 1
    while x != a.ctx.one:
        x, t = x * a, t + 1
    return t


def test_element_order_examples():
    F = make_field(7)
    assert element_order(F(1)) == 1
    assert element_order(F(2)) == 3
    assert element_order(F(-1)) == 2


@pytest.mark.parametrize("p, k", [(7, 1), (2, 4), (3, 3), (7, 2)])
def test_element_order_against_naive(p, k):
    F = make_field(p, k)
    for i in range(1, F.cardinality):
        a = F.from_int(i)
        assert element_order(a) == _naive_order(a)


def test_find_generator_examples():
    assert find_generator(make_field(7)) == make_field(7)(3)
    assert find_generator(make_field(2)) == make_field(2)(1)
    F = make_field(7, 3)
    first = next(F.from_int(i) for i in range(1, F.cardinality) if _naive_order(F.from_int(i)) == 342)
    assert find_generator(F) == first


@pytest.mark.parametrize("p, k", FIELDS + [(2, 20), (7, 6)])
def test_generator_has_full_order(p, k):
    F = make_field(p, k)
    assert element_order(find_generator(F)) == F.cardinality - 1


def test_roots_of_unity_examples():
    F = make_field(7)
    assert primitive_root_of_unity(1, F) == F.one
    assert primitive_root_of_unity(3, F) == F(2)
    G = make_field(7, 3)
    assert element_order(primitive_root_of_unity(9, G)) == 9
    with pytest.raises(ValueError):
        primitive_root_of_unity(5, F)


@pytest.mark.parametrize("p, k", [(7, 3), (2, 12), (3, 4), (5, 4)])
def test_roots_of_unity_are_compatible(p, k):
    F = make_field(p, k)
    N = F.cardinality - 1
    for n in divisors(N):
        z = primitive_root_of_unity(n, F)
        assert element_order(z) == n
        for m in divisors(n):
            assert z ** (n // m) == primitive_root_of_unity(m, F)


@pytest.mark.parametrize("p, k", [(2, 4), (2, 10), (3, 6), (7, 2), (2, 20)])
def test_frobenius_is_a_ring_map(p, k):
    F = make_field(p, k)

    @given(_elements(p, k), _elements(p, k))
    def check(a, b):
        assert (a + b).frobenius() == a.frobenius() + b.frobenius()
        assert (a * b).frobenius() == a.frobenius() * b.frobenius()
        assert a.frobenius(k) == a

    check()


@pytest.mark.parametrize("p, j, k", [(2, 2, 4), (7, 1, 3), (3, 2, 6), (2, 3, 12), (5, 2, 4)])
def test_embedding_is_a_homomorphism(p, j, k):
    S, T = make_field(p, j), make_field(p, k)
    assert embed(S.zero, T) == T.zero and embed(S.one, T) == T.one

    @given(_elements(p, j), _elements(p, j))
    def check(a, b):
        assert embed(a + b, T) == embed(a, T) + embed(b, T)
        assert embed(a * b, T) == embed(a, T) * embed(b, T)
        assert restrict(embed(a, T), S) == a

    check()


@pytest.mark.parametrize("p, j, k", [(2, 2, 4), (3, 2, 6), (2, 3, 6), (7, 1, 3)])
def test_embeddings_compose(p, j, k):
    B, M, T = make_field(p), make_field(p, j), make_field(p, k)
    for a in B.elements():
        assert embed(embed(a, M), T) == embed(a, T)
        assert embed(a, T).is_base()
    # through the tower for the middle field as well
    if j > 1:
        for a in M.elements():
            assert restrict(embed(a, T), M) == a


def test_embedding_root_is_first_in_enumeration_order():
    S, T = make_field(2, 2), make_field(2, 4)
    roots = [x for x in T.elements() if x * x + x + 1 == T.zero]
    X = S.from_int(2)  # the class of X
    assert embed(X, T) == min(roots, key=int)


def test_embed_and_restrict_errors():
    with pytest.raises(ValueError):
        embed(make_field(2, 3).one, make_field(2, 4))
    with pytest.raises(ValueError):
        restrict(make_field(7, 2).from_int(8), make_field(7))


def test_ambient_and_base_fields():
    assert base_field(49) == make_field(7, 2)
    assert ambient_field(7, 45).k == 12
    assert ambient_field(4, 5).k == 4
    with pytest.raises(ValueError):
        ambient_field(7, 14)


@given(st.sampled_from([2, 3, 5, 7]), st.integers(1, 7), st.data())
def test_fast_irreducibility_matches_trial_division(p, k, data):
    f = data.draw(st.lists(st.integers(0, p - 1), min_size=k, max_size=k)) + [1]
    expected = _irreducible_by_trial(f, p)
    assert is_irreducible_mod_p_fast(f, p) == expected
    assert is_irreducible_mod_p(f, p) == expected


@given(st.sampled_from([(2, 8), (2, 20), (3, 9), (5, 12), (13, 10), (2, 70)]), st.data())
def test_vector_product_matches_schoolbook(field, data):
    F = make_field(*field)
    a, b = (F.from_int(data.draw(st.integers(0, F.cardinality - 1))) for _ in range(2))
    assert F._mul(a.coeffs, b.coeffs) == F._mul_schoolbook(a.coeffs, b.coeffs)


@pytest.mark.parametrize("n", [2**64 + 1, 3**45 - 1, 2**67 - 1, 10**30 + 57, 7 * 2**80])
def test_partial_factor_certifies_only_primes(n):
    known, rest = _partial_factor(n)
    value = rest
    for ell, e in known.items():
        assert is_prime(ell)
        value *= ell**e
    assert value == n
    assert rest == 1 or all(rest % ell for ell in _small_primes())


@pytest.mark.parametrize("p, k", [(2, 12), (3, 10), (7, 4), (2, 62)])
def test_small_group_orders_are_factored_completely(p, k):
    known, rest = _order_split(p, k)
    assert rest == 1
    assert known.n == p**k - 1
    if known.n < 10**12:
        assert list(known.factors) == naive_factor(known.n)
    else:
        assert known.value() == known.n
        assert all(is_prime(ell) for ell in known.primes)


@pytest.mark.parametrize("p, k", [(2, 67), (3, 41), (13, 20), (2, 148)])
def test_large_field_roots_of_unity(p, k):
    F = make_field(p, k)
    assert F.cardinality >= 2**63
    known = F.certified_order
    assert (F.cardinality - 1) % known.n == 0
    h = certified_generator(F)
    assert h ** known.n == 1
    assert all(h ** (known.n // ell) != 1 for ell in known.primes)
    small = [n for n in range(1, 501) if known.n % n == 0]
    for n in small:
        z = primitive_root_of_unity(n, F)
        assert z**n == 1
        assert all(z ** (n // ell) != 1 for ell in factorize(n).primes)
        for m in divisors(n):
            assert z ** (n // m) == primitive_root_of_unity(m, F)


def test_uncertified_orders_are_refused():
    F = make_field(2, 67)
    # 2^67 - 1 = 193707721 * 761838257287 is left unfactored
    assert F.certified_order.n == 1
    with pytest.raises(OverflowError):
        primitive_root_of_unity(193707721, F)
    with pytest.raises(OverflowError):
        F.order_factorization


def test_certified_generator_is_find_generator_when_complete():
    for p, k in [(7, 3), (2, 10), (3, 5)]:
        F = make_field(p, k)
        assert certified_generator(F) == find_generator(F)


def test_embedding_into_a_large_field():
    S, T = make_field(2, 2), make_field(2, 148)
    elems = list(S.elements())
    for a in elems:
        for b in elems:
            assert embed(a * b, T) == embed(a, T) * embed(b, T)
            assert embed(a + b, T) == embed(a, T) + embed(b, T)
        assert restrict(embed(a, T), S) == a
