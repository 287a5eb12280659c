import random
from fractions import Fraction as QQ

import pytest
from hypothesis import given, strategies as st

from semifock import errors
from semifock.domains import (
    DOMAIN_Z,
    DOMAIN_ZI,
    Fraction,
    GaussRational,
    canonical_associate,
    divides,
    divmod_domain,
    elem_from_json,
    elem_to_json,
    factor_positive,
    gauss,
    gcd_domain,
    is_canonical,
    units,
    zelem,
)


def test_canonical_associate_sign_normalization():
    dec = canonical_associate(zelem(-6))
    assert dec.unit == zelem(-1)
    assert dec.positive_part == zelem(6)


def test_canonical_associate_identity_case():
    dec = canonical_associate(zelem(6))
    assert dec.unit == zelem(1)
    assert dec.positive_part == zelem(6)


def test_canonical_associate_gaussian_first_quadrant():
    # Oracle: enumerate the four unit multiples of -2i and find the unique
    # first-quadrant one.
    r = gauss(0, -2)
    quadrant = [u * r for u in units(DOMAIN_ZI) if is_canonical(u * r)]
    assert quadrant == [gauss(2, 0)]
    dec = canonical_associate(r)
    assert dec.positive_part == gauss(2, 0)
    assert dec.unit == gauss(0, -1)
    assert dec.unit * dec.positive_part == r


@given(st.integers(-200, 200).filter(lambda n: n != 0))
def test_canonical_associate_reconstructs_z(n):
    dec = canonical_associate(zelem(n))
    assert dec.unit * dec.positive_part == zelem(n)
    assert is_canonical(dec.positive_part)


@given(
    st.integers(-20, 20),
    st.integers(-20, 20),
)
def test_canonical_associate_reconstructs_zi(a, b):
    if a == 0 and b == 0:
        with pytest.raises(errors.ZeroElement):
            canonical_associate(gauss(a, b))
        return
    dec = canonical_associate(gauss(a, b))
    assert dec.unit * dec.positive_part == gauss(a, b)
    assert is_canonical(dec.positive_part)
    assert dec.unit.is_unit()


def test_divides_basic():
    assert divides(zelem(2), zelem(6)) == zelem(3)
    assert divides(zelem(4), zelem(6)) is None


def test_divides_gaussian():
    # (2)/(1+i) = 1-i; cross-check by multiplication.
    q = divides(gauss(1, 1), gauss(2, 0))
    assert q == gauss(1, -1)
    assert q * gauss(1, 1) == gauss(2, 0)


def test_divides_zero_divisor_rejected():
    with pytest.raises(errors.ZeroElement):
        divides(zelem(0), zelem(6))


@given(
    st.integers(-12, 12),
    st.integers(-12, 12),
    st.integers(-12, 12),
    st.integers(-12, 12),
)
def test_divides_cross_check_by_multiplication(a, b, c, d):
    r, s = gauss(a, b), gauss(c, d)
    if r.is_zero():
        return
    q = divides(r, s)
    if q is not None:
        assert q * r == s
    else:
        # no Gaussian integer q satisfies q*r == s
        t = s * r.conj()
        n = r.norm()
        assert t.re % n != 0 or t.im % n != 0


def test_factor_positive_examples():
    assert factor_positive(zelem(12)) == (zelem(2), zelem(2), zelem(3))
    assert factor_positive(zelem(1)) == ()
    # trial-division oracle for primality of 97
    assert all(97 % k != 0 for k in range(2, 10))
    assert factor_positive(zelem(97)) == (zelem(97),)


def test_factor_positive_product_recovers_n():
    for n in range(1, 10001):
        out = 1
        for p in factor_positive(zelem(n)):
            out *= p.re
        assert out == n


def test_factor_positive_errors():
    with pytest.raises(errors.UnsupportedDomain):
        factor_positive(gauss(2, 0))
    with pytest.raises(errors.InvalidInput):
        factor_positive(zelem(0))


def test_divmod_gaussian_remainder_small():
    rng = random.Random(7)
    for _ in range(500):
        s = gauss(rng.randint(-50, 50), rng.randint(-50, 50))
        r = gauss(rng.randint(-9, 9), rng.randint(-9, 9))
        if r.is_zero():
            continue
        q, rem = divmod_domain(s, r)
        assert q * r + rem == s
        assert rem.norm() < r.norm()


def test_gcd_divides_both_and_is_canonical():
    rng = random.Random(11)
    for _ in range(300):
        a = gauss(rng.randint(-30, 30), rng.randint(-30, 30))
        b = gauss(rng.randint(-30, 30), rng.randint(-30, 30))
        g = gcd_domain(a, b)
        if a.is_zero() and b.is_zero():
            assert g.is_zero()
            continue
        assert is_canonical(g)
        assert divides(g, a) is not None
        assert divides(g, b) is not None


def test_fraction_add_and_inverse():
    half = Fraction(zelem(1), zelem(2))
    third = Fraction(zelem(1), zelem(3))
    assert half + third == Fraction(zelem(5), zelem(6))
    assert Fraction(zelem(3), zelem(4)).inverse() == Fraction(zelem(4), zelem(3))


def test_fraction_gaussian_reduction():
    x = Fraction(gauss(1, 0), gauss(1, 1))
    y = Fraction(gauss(1, 1), gauss(1, 0))
    assert x * y == Fraction(gauss(1, 0), gauss(1, 0))


def test_fraction_inverse_of_zero():
    with pytest.raises(errors.DivisionByZero):
        Fraction(zelem(0), zelem(1)).inverse()


def test_fraction_canonical_form():
    f = Fraction(zelem(4), zelem(-6))
    assert f.num == zelem(-2)
    assert f.den == zelem(3)
    g = Fraction(gauss(0, 2), gauss(0, -4))
    # denominator must be canonical, gcd a unit
    assert is_canonical(g.den)
    assert gcd_domain(g.num, g.den).is_unit()


def _random_fraction(rng, domain):
    while True:
        if domain == DOMAIN_Z:
            num = zelem(rng.randint(-9, 9))
            den = zelem(rng.randint(-9, 9))
        else:
            num = gauss(rng.randint(-5, 5), rng.randint(-5, 5))
            den = gauss(rng.randint(-5, 5), rng.randint(-5, 5))
        if not den.is_zero():
            return Fraction(num, den)


@pytest.mark.parametrize("domain", [DOMAIN_Z, DOMAIN_ZI])
def test_fraction_field_axioms_random(domain):
    rng = random.Random(13)
    one = Fraction.integer(domain, 1)
    for _ in range(1000):
        a = _random_fraction(rng, domain)
        b = _random_fraction(rng, domain)
        c = _random_fraction(rng, domain)
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a
        if not a.is_zero():
            assert a * a.inverse() == one


def test_gauss_rational_arithmetic():
    i = GaussRational.of(0, 1)
    assert i * i == GaussRational.of(-1)
    z = GaussRational(QQ(1, 2), QQ(-1, 3))
    assert z * z.conj() == GaussRational(z.abs2())
    assert (z / z) == GaussRational.of(1)


def test_fraction_to_gauss_rational():
    f = Fraction(gauss(1, 0), gauss(1, 1))
    # 1/(1+i) = (1-i)/2
    assert f.to_gauss_rational() == GaussRational(QQ(1, 2), QQ(-1, 2))
    g = Fraction(zelem(-3), zelem(6))
    assert g.to_gauss_rational() == GaussRational(QQ(-1, 2), QQ(0))


def test_elem_json_roundtrip():
    assert elem_to_json(zelem(-6)) == -6
    assert elem_to_json(gauss(2, -1)) == [2, -1]
    assert elem_from_json(DOMAIN_Z, -6) == zelem(-6)
    assert elem_from_json(DOMAIN_ZI, [2, -1]) == gauss(2, -1)
    with pytest.raises(errors.InvalidInput):
        elem_from_json(DOMAIN_Z, [1, 2])
