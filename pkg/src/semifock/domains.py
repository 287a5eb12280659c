"""Exact arithmetic in the integral domains Z and Z[i].

Elements are immutable and hashable; everything is arbitrary-precision
integer arithmetic, so equality is decidable and exact.  The same module
carries the two scalar types used downstream: ``Fraction`` (an element of
the fraction field Q(R) in reduced numerator/denominator form) and
``GaussRational`` (a complex number with rational real and imaginary
parts, the coefficient field for group-algebra elements).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as QQ

from .errors import (
    DivisionByZero,
    InvalidInput,
    UnsupportedDomain,
    ZeroElement,
)

DOMAIN_Z = "Z"
DOMAIN_ZI = "Zi"
DOMAINS = (DOMAIN_Z, DOMAIN_ZI)


@dataclass(frozen=True)
class DomainElem:
    """An element of Z (im == 0 forced) or Z[i], written re + im*i."""

    domain: str
    re: int
    im: int = 0

    def __post_init__(self) -> None:
        if self.domain not in DOMAINS:
            raise InvalidInput(f"unknown domain {self.domain!r}")
        if self.domain == DOMAIN_Z and self.im != 0:
            raise InvalidInput("elements of Z have no imaginary part")

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_unit(self) -> bool:
        return self.norm() == 1

    def norm(self) -> int:
        """Euclidean size: |r| on Z, re^2 + im^2 on Z[i]."""
        if self.domain == DOMAIN_Z:
            return abs(self.re)
        return self.re * self.re + self.im * self.im

    def conj(self) -> DomainElem:
        return DomainElem(self.domain, self.re, -self.im)

    def __add__(self, other: DomainElem) -> DomainElem:
        self._check(other)
        return DomainElem(self.domain, self.re + other.re, self.im + other.im)

    def __sub__(self, other: DomainElem) -> DomainElem:
        self._check(other)
        return DomainElem(self.domain, self.re - other.re, self.im - other.im)

    def __neg__(self) -> DomainElem:
        return DomainElem(self.domain, -self.re, -self.im)

    def __mul__(self, other: DomainElem) -> DomainElem:
        self._check(other)
        return DomainElem(
            self.domain,
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def _check(self, other: DomainElem) -> None:
        if self.domain != other.domain:
            raise InvalidInput(
                f"mixed domains {self.domain!r} and {other.domain!r}"
            )

    def sort_key(self) -> tuple[int, int, int]:
        """Deterministic total order used for windows and reports."""
        return (self.norm(), self.re, self.im)

    def __repr__(self) -> str:
        if self.domain == DOMAIN_Z:
            return f"Z({self.re})"
        return f"Zi({self.re}, {self.im})"


def zelem(n: int) -> DomainElem:
    return DomainElem(DOMAIN_Z, n)


def gauss(a: int, b: int = 0) -> DomainElem:
    return DomainElem(DOMAIN_ZI, a, b)


def one(domain: str) -> DomainElem:
    return DomainElem(domain, 1)


def zero(domain: str) -> DomainElem:
    return DomainElem(domain, 0)


def units(domain: str) -> tuple[DomainElem, ...]:
    """The unit group: {1, -1} for Z and {1, i, -1, -i} for Z[i]."""
    if domain == DOMAIN_Z:
        return (zelem(1), zelem(-1))
    return (gauss(1, 0), gauss(0, 1), gauss(-1, 0), gauss(0, -1))


@dataclass(frozen=True)
class UnitsDecomposition:
    """r = unit * positive_part with positive_part the canonical associate."""

    unit: DomainElem
    positive_part: DomainElem


def is_canonical(r: DomainElem) -> bool:
    """Canonical associate representatives: r > 0 on Z, first quadrant
    (re > 0, im >= 0) on Z[i]."""
    if r.domain == DOMAIN_Z:
        return r.re > 0
    return r.re > 0 and r.im >= 0


def canonical_associate(r: DomainElem) -> UnitsDecomposition:
    """Split a nonzero r as unit * canonical representative.

    Exactly one of the unit multiples of r is canonical, so the result is
    well defined and deterministic.
    """
    if r.is_zero():
        raise ZeroElement("no associate decomposition of 0")
    for u in units(r.domain):
        p = _unit_inverse(u) * r
        if is_canonical(p):
            return UnitsDecomposition(unit=u, positive_part=p)
    raise AssertionError("unreachable: some unit multiple is canonical")


def _unit_inverse(u: DomainElem) -> DomainElem:
    # Units have norm 1, so the inverse is the conjugate (or +-1 on Z).
    return u.conj() if u.domain == DOMAIN_ZI else u


def divides(r: DomainElem, s: DomainElem) -> DomainElem | None:
    """Exact quotient q with s = q * r, or None when r does not divide s."""
    if r.is_zero():
        raise ZeroElement("division by the zero element")
    r._check(s)
    if r.domain == DOMAIN_Z:
        if s.re % r.re == 0:
            return zelem(s.re // r.re)
        return None
    n = r.norm()
    t = s * r.conj()
    if t.re % n == 0 and t.im % n == 0:
        return gauss(t.re // n, t.im // n)
    return None


def _round_half_down(a: int, b: int) -> int:
    """Nearest integer to a/b (b > 0), ties rounded toward minus infinity."""
    return (2 * a + b - 1) // (2 * b)


def divmod_domain(s: DomainElem, r: DomainElem) -> tuple[DomainElem, DomainElem]:
    """Euclidean division s = q*r + rem with norm(rem) < norm(r).

    For Z[i] the quotient rounds each coordinate of s/r to the nearest
    integer, half-cases down; this makes the division (and hence gcd)
    deterministic.
    """
    if r.is_zero():
        raise ZeroElement("division by the zero element")
    r._check(s)
    if r.domain == DOMAIN_Z:
        q = _round_half_down(s.re, r.re) if r.re > 0 else -_round_half_down(s.re, -r.re)
        qe = zelem(q)
        return qe, s - qe * r
    n = r.norm()
    t = s * r.conj()
    q = gauss(_round_half_down(t.re, n), _round_half_down(t.im, n))
    return q, s - q * r


def gcd_domain(a: DomainElem, b: DomainElem) -> DomainElem:
    """Canonical gcd via the Euclidean algorithm; gcd(0, 0) = 0."""
    a._check(b)
    while not b.is_zero():
        _, rem = divmod_domain(a, b)
        a, b = b, rem
    if a.is_zero():
        return a
    return canonical_associate(a).positive_part


def factor_positive(n: DomainElem) -> tuple[DomainElem, ...]:
    """Prime factorization of a positive integer, ascending with multiplicity.

    Restricted to Z; Gaussian factorization is out of scope.
    """
    if n.domain != DOMAIN_Z:
        raise UnsupportedDomain("factorization only implemented over Z")
    m = n.re
    if m < 1:
        raise InvalidInput(f"need n >= 1, got {m}")
    factors: list[DomainElem] = []
    p = 2
    while p * p <= m:
        while m % p == 0:
            factors.append(zelem(p))
            m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        factors.append(zelem(m))
    return tuple(factors)


@dataclass(frozen=True)
class Fraction:
    """An element of the fraction field Q(R) in canonical reduced form.

    The stored pair satisfies: denominator nonzero and canonical (positive
    / first quadrant), and gcd(num, den) is a unit.
    """

    num: DomainElem
    den: DomainElem

    def __post_init__(self) -> None:
        self.num._check(self.den)
        if self.den.is_zero():
            raise DivisionByZero("fraction with zero denominator")
        num, den = self.num, self.den
        g = gcd_domain(num, den)
        if not g.is_zero() and not g.is_unit():
            num = divides(g, num)
            den = divides(g, den)
            assert num is not None and den is not None
        dec = canonical_associate(den)
        if not dec.unit.is_unit() or dec.positive_part != den:
            inv = _unit_inverse(dec.unit)
            num = inv * num
            den = dec.positive_part
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def from_elem(cls, r: DomainElem) -> Fraction:
        return cls(r, one(r.domain))

    @classmethod
    def integer(cls, domain: str, n: int) -> Fraction:
        return cls(DomainElem(domain, n), one(domain))

    @property
    def domain(self) -> str:
        return self.num.domain

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other: Fraction) -> Fraction:
        return Fraction(
            self.num * other.den + other.num * self.den,
            self.den * other.den,
        )

    def __sub__(self, other: Fraction) -> Fraction:
        return self + (-other)

    def __neg__(self) -> Fraction:
        return Fraction(-self.num, self.den)

    def __mul__(self, other: Fraction) -> Fraction:
        return Fraction(self.num * other.num, self.den * other.den)

    def inverse(self) -> Fraction:
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        return Fraction(self.den, self.num)

    def __truediv__(self, other: Fraction) -> Fraction:
        return self * other.inverse()

    def to_gauss_rational(self) -> GaussRational:
        """Rewrite num/den with a rational denominator (conjugate trick)."""
        n = self.den.norm() if self.domain == DOMAIN_ZI else self.den.re
        if self.domain == DOMAIN_ZI:
            t = self.num * self.den.conj()
            return GaussRational(QQ(t.re, n), QQ(t.im, n))
        return GaussRational(QQ(self.num.re, n), QQ(0))

    def __repr__(self) -> str:
        return f"Fraction({self.num!r}, {self.den!r})"


@dataclass(frozen=True)
class GaussRational:
    """A complex number re + im*i with exact rational parts."""

    re: QQ
    im: QQ = QQ(0)

    @classmethod
    def of(cls, re, im=0) -> GaussRational:
        return cls(QQ(re), QQ(im))

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def conj(self) -> GaussRational:
        return GaussRational(self.re, -self.im)

    def abs2(self) -> QQ:
        """|z|^2 as an exact rational."""
        return self.re * self.re + self.im * self.im

    def __add__(self, other: GaussRational) -> GaussRational:
        return GaussRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other: GaussRational) -> GaussRational:
        return GaussRational(self.re - other.re, self.im - other.im)

    def __neg__(self) -> GaussRational:
        return GaussRational(-self.re, -self.im)

    def __mul__(self, other: GaussRational) -> GaussRational:
        return GaussRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __truediv__(self, other: GaussRational) -> GaussRational:
        nrm = other.abs2()
        if nrm == 0:
            raise DivisionByZero("division by zero Gaussian rational")
        t = self * other.conj()
        return GaussRational(t.re / nrm, t.im / nrm)

    def to_complex(self) -> complex:
        return complex(float(self.re), float(self.im))

    __complex__ = to_complex

    def __repr__(self) -> str:
        return f"GaussRational({self.re}, {self.im})"


GR_ZERO = GaussRational(QQ(0), QQ(0))
GR_ONE = GaussRational(QQ(1), QQ(0))
GR_I = GaussRational(QQ(0), QQ(1))


def elem_to_json(r: DomainElem):
    """Scenario-file form: bare integer for Z, [re, im] pair for Z[i]."""
    if r.domain == DOMAIN_Z:
        return r.re
    return [r.re, r.im]


def elem_from_json(domain: str, data) -> DomainElem:
    if domain == DOMAIN_Z:
        if not isinstance(data, int):
            raise InvalidInput(f"expected integer for Z element, got {data!r}")
        return zelem(data)
    if isinstance(data, int):
        return gauss(data, 0)
    if isinstance(data, (list, tuple)) and len(data) == 2:
        return gauss(int(data[0]), int(data[1]))
    raise InvalidInput(f"expected [re, im] for Z[i] element, got {data!r}")
