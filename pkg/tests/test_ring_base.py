import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from galoisrm.errors import InvalidParameters, NonMonicDivisor, NonUnit, NonUnitLeading, ParamsTooLarge
from galoisrm.ring_base import (
    INF,
    IntegersMod,
    RingParams,
    UPoly,
    hensel_lift_factor,
    is_prime,
    monicize,
    poly_divmod,
    poly_reciprocal,
    x_pow_minus_one,
)

Z4 = IntegersMod(2, 2)
Z8 = IntegersMod(2, 3)
Z9 = IntegersMod(3, 2)


def poly(ring, *coeffs):
    """Polynomial from ascending integer coefficients."""
    return UPoly.from_ints(ring, coeffs)


# --- parameters ------------------------------------------------------------

def test_ring_params_derived():
    P = RingParams(2, 2, 3)
    assert (P.q, P.char) == (8, 4)


@pytest.mark.parametrize("p,s,r", [(4, 2, 1), (1, 1, 1), (2, 0, 1), (3, 1, 0), (9, 1, 1)])
def test_ring_params_rejects(p, s, r):
    with pytest.raises(InvalidParameters):
        RingParams(p, s, r)


def test_ring_params_too_large():
    with pytest.raises(ParamsTooLarge):
        RingParams(2, 40, 1)


def test_is_prime_small():
    assert [k for k in range(20) if is_prime(k)] == [2, 3, 5, 7, 11, 13, 17, 19]


# --- Z_{p^s} ---------------------------------------------------------------

def test_inv_examples():
    assert Z4.inv(3) == 3
    assert Z9.inv(1) == 1
    with pytest.raises(NonUnit):
        Z4.inv(2)


def test_valuation_examples():
    assert Z8.valuation(4) == 2
    assert Z8.valuation(0) == INF
    assert Z9.valuation(6) == 1


@pytest.mark.parametrize("R", [Z4, Z8, Z9, IntegersMod(5, 2)], ids=str)
def test_inverse_exhaustive(R):
    for a in R.elements():
        if R.is_unit(a):
            assert R.mul(a, R.inv(a)) == R.one
        else:
            with pytest.raises(NonUnit):
                R.inv(a)


rings = st.sampled_from([Z4, Z8, Z9, IntegersMod(5, 2), IntegersMod(7, 1)])


@given(rings, st.integers(), st.integers(), st.integers())
def test_ring_axioms(R, a, b, c):
    a, b, c = R.from_int(a), R.from_int(b), R.from_int(c)
    assert R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c))
    assert R.add(R.add(a, b), c) == R.add(a, R.add(b, c))
    assert R.mul(a, R.add(b, c)) == R.add(R.mul(a, b), R.mul(a, c))
    assert R.add(a, R.neg(a)) == R.zero


@given(rings, st.integers(), st.integers())
def test_valuation_additive(R, a, b):
    a, b = R.from_int(a), R.from_int(b)
    va, vb = R.valuation(a), R.valuation(b)
    if va + vb < R.s:
        assert R.valuation(R.mul(a, b)) == va + vb


# --- polynomials -----------------------------------------------------------

def test_divmod_examples():
    q, r = poly_divmod(poly(Z4, 3, 0, 0, 1), poly(Z4, 1, 1, 1))
    assert q == poly(Z4, 3, 1) and r.is_zero()
    f = poly(Z4, 1, 2, 3)
    assert poly_divmod(f, poly(Z4, 1)) == (f, UPoly(Z4))
    _, r = poly_divmod(x_pow_minus_one(Z4, 7), poly(Z4, 3, 1, 2, 1))
    assert r.is_zero()


def test_divmod_rejects_nonunit_leading():
    with pytest.raises(NonMonicDivisor):
        poly_divmod(poly(Z4, 1, 1), poly(Z4, 1, 2))
    with pytest.raises(NonMonicDivisor):
        poly_divmod(poly(Z4, 1, 1), UPoly(Z4))


def test_zero_poly_degree_and_trailing_zeros():
    assert UPoly(Z4).degree is None
    assert poly(Z4, 1, 2, 0, 0).degree == 1
    assert poly(Z4, 2) * poly(Z4, 2) == UPoly(Z4)


def test_reciprocal_examples():
    assert poly_reciprocal(poly(Z4, 3, 2, 3, 1)) == poly(Z4, 1, 3, 2, 3)
    assert poly_reciprocal(poly(Z4, 3, 1)) == poly(Z4, 1, 3)


def test_monicize_examples():
    assert monicize(poly(Z4, 1, 3, 2, 3)) == poly(Z4, 3, 1, 2, 1)
    f = poly(Z4, 3, 1, 2, 1)
    assert monicize(f) == f
    assert monicize(poly(Z9, 1, 2)) == poly(Z9, 5, 1)
    with pytest.raises(NonUnitLeading):
        monicize(poly(Z4, 1, 2))


coeff_lists = st.lists(st.integers(0, 80), min_size=0, max_size=7)


@settings(max_examples=500)
@given(rings, coeff_lists, coeff_lists, st.integers(0, 80))
def test_divmod_roundtrip(R, f, g, lead):
    f = poly(R, *f)
    g = poly(R, *g, lead)
    if g.is_zero() or not R.is_unit(g.lead):
        return
    quo, rem = poly_divmod(f, g)
    assert quo * g + rem == f
    assert rem.is_zero() or rem.degree < g.degree


@given(rings, st.lists(st.integers(0, 80), min_size=1, max_size=6))
def test_reciprocal_involution(R, coeffs):
    f = poly(R, *coeffs)
    if f.is_zero() or R.is_zero(f.coeff(0)):
        return
    assert poly_reciprocal(poly_reciprocal(f)) == f


@given(rings, coeff_lists, coeff_lists, coeff_lists)
def test_poly_ring_axioms(R, a, b, c):
    a, b, c = poly(R, *a), poly(R, *b), poly(R, *c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a - a).is_zero()


@given(rings, coeff_lists, st.integers(0, 80))
def test_horner_evaluation(R, coeffs, x):
    f = poly(R, *coeffs)
    x = R.from_int(x)
    direct = R.zero
    for i, c in enumerate(f.coeffs):
        direct = R.add(direct, R.mul(c, R.pow(x, i)))
    assert f(x) == direct


def test_hensel_lift_divides():
    # x^7 - 1 = (x - 1)(x^3 + x + 1)(x^3 + x^2 + 1) mod 2
    F2 = Z4.residue()
    h = hensel_lift_factor(x_pow_minus_one(Z4, 7), poly(F2, 1, 1, 0, 1))
    assert h == poly(Z4, 3, 1, 2, 1)
    _, r = poly_divmod(x_pow_minus_one(Z4, 7), h)
    assert r.is_zero()
