"""Normal-form arithmetic in the semicrossed product of a module algebra.

An element is a finite sum  sum_r S_r a_r  with nonzero semigroup indices
r and group-algebra coefficients a_r.  Multiplication rewrites every
product into this normal form through the covariance relation
a S_r = S_r alpha_r(a), i.e. (S_r a)(S_s b) = S_{rs} alpha_s(a) b.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from .domains import (
    DomainElem,
    canonical_associate,
    divides,
    is_canonical,
    one,
    units,
)
from .errors import (
    AmbientMismatch,
    InvalidInput,
    NotADirectProduct,
    NotSubmodule,
    ZeroScalar,
)
from .groupalg import (
    GroupAlgElem,
    alpha_endo,
    convolve,
    induced_algebra_map,
    monomial,
    unit,
)
from .modules import (
    ModulePresentation,
    SubmoduleDesc,
    is_submodule,
    scalar_action,
    subgroup_presentation,
    submodule_membership,
)


class SemicrossedElem:
    """A finite sum  sum_r S_r a_r  in normal form (S on the left)."""

    __slots__ = ("presentation", "terms")

    def __init__(self, presentation: ModulePresentation, terms=()):
        self.presentation = presentation
        clean: dict[DomainElem, GroupAlgElem] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for r, a in items:
            if r.domain != presentation.domain:
                raise AmbientMismatch(
                    f"index domain {r.domain!r} does not match the module"
                )
            if r.is_zero():
                raise ZeroScalar("semigroup indices must be nonzero")
            if a.presentation != presentation:
                raise AmbientMismatch("coefficient over a different module")
            if a.is_zero():
                continue
            prev = clean.get(r)
            total = a if prev is None else prev + a
            if total.is_zero():
                clean.pop(r, None)
            else:
                clean[r] = total
        self.terms = clean

    def __eq__(self, other) -> bool:
        if not isinstance(other, SemicrossedElem):
            return NotImplemented
        return self.presentation == other.presentation and self.terms == other.terms

    def __ne__(self, other) -> bool:
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def is_zero(self) -> bool:
        return not self.terms

    def indices(self) -> list[DomainElem]:
        return sorted(self.terms, key=lambda r: r.sort_key())

    def __add__(self, other: SemicrossedElem) -> SemicrossedElem:
        self._check(other)
        merged = list(self.terms.items()) + list(other.terms.items())
        return SemicrossedElem(self.presentation, merged)

    def __sub__(self, other: SemicrossedElem) -> SemicrossedElem:
        return self + (-other)

    def __neg__(self) -> SemicrossedElem:
        return SemicrossedElem(
            self.presentation, {r: -a for r, a in self.terms.items()}
        )

    def __mul__(self, other: SemicrossedElem) -> SemicrossedElem:
        return sc_multiply(self, other)

    def _check(self, other: SemicrossedElem) -> None:
        if self.presentation != other.presentation:
            raise AmbientMismatch("operands live over different modules")

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = [
            f"S[{r.re},{r.im}]*({a!r})" if r.domain == "Zi" else f"S[{r.re}]*({a!r})"
            for r, a in sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())
        ]
        return " + ".join(bits)


def sc_monomial(r: DomainElem, a: GroupAlgElem) -> SemicrossedElem:
    return SemicrossedElem(a.presentation, [(r, a)])


def sc_one(presentation: ModulePresentation) -> SemicrossedElem:
    return sc_monomial(one(presentation.domain), unit(presentation))


def sc_from_algebra(a: GroupAlgElem) -> SemicrossedElem:
    """Embed the group algebra as the S_1 slice."""
    return sc_monomial(one(a.presentation.domain), a)


def sc_multiply(x: SemicrossedElem, y: SemicrossedElem) -> SemicrossedElem:
    """(S_r a)(S_s b) = S_{rs} alpha_s(a) b, extended bilinearly."""
    x._check(y)
    out: list[tuple[DomainElem, GroupAlgElem]] = []
    for r, a in x.terms.items():
        for s, b in y.terms.items():
            out.append((r * s, convolve(alpha_endo(s, a), b)))
    return SemicrossedElem(x.presentation, out)


def sc_compress(r: DomainElem, a: GroupAlgElem) -> GroupAlgElem:
    """The compression S_r^* a S_r, which equals alpha_r(a).

    On monomials this is the identity S_r^* U^m S_r = U^{r m}; the fock
    module cross-checks it against truncated matrices.
    """
    if r.is_zero():
        raise ZeroScalar("compression by the zero index")
    return alpha_endo(r, a)


@dataclass(frozen=True)
class SemicrossedQuotientMap:
    """Index-preserving map induced by a module quotient on coefficients."""

    algebra_map: object

    def __call__(self, x: SemicrossedElem) -> SemicrossedElem:
        pushed = [(r, self.algebra_map(a)) for r, a in x.terms.items()]
        return SemicrossedElem(self.algebra_map.target, pushed)


def induced_semicrossed_map(sub: SubmoduleDesc) -> SemicrossedQuotientMap:
    """Quotient map on semicrossed elements; needs a genuine submodule so
    the scalar actions upstairs and downstairs intertwine."""
    if not is_submodule(sub):
        raise NotSubmodule(
            "quotient by a non-submodule does not intertwine the actions"
        )
    return SemicrossedQuotientMap(induced_algebra_map(sub))


def induced_quotient_map(sub: SubmoduleDesc, x: SemicrossedElem) -> SemicrossedElem:
    return induced_semicrossed_map(sub)(x)


def invariant_subalgebra_check(
    sub: SubmoduleDesc,
    r_sample: list[DomainElem],
    x_sample: list[SemicrossedElem] | None = None,
) -> bool:
    """Does the subgroup span an invariant subalgebra?

    First the exact criterion: r*g must stay in the subgroup for every
    sampled r and every generator g.  Then, as a consistency check,
    products of sampled elements supported in the subgroup are computed
    once intrinsically (in subgroup coordinates) and once in the ambient
    algebra, and compared exactly.
    """
    for r in r_sample:
        for g in sub.generators:
            if not submodule_membership(sub, scalar_action(r, g)):
                return False
    if x_sample:
        emb = subgroup_presentation(sub)
        for i in range(len(x_sample)):
            for j in range(len(x_sample)):
                x, y = x_sample[i], x_sample[j]
                if not _product_agrees(sub, emb, x, y):
                    return False
    return True


def _convert_index(r: DomainElem, domain: str) -> DomainElem | None:
    if r.domain == domain:
        return r
    if r.im != 0:
        return None
    return DomainElem(domain, r.re)


def _to_intrinsic(emb, x: SemicrossedElem) -> SemicrossedElem | None:
    terms = []
    for r, a in x.terms.items():
        # a real index still acts on a subgroup presented as a plain group
        idx = _convert_index(r, emb.sub.domain)
        if idx is None:
            return None
        coords = []
        for m, c in a.terms.items():
            inner = emb.coordinatize(m)
            if inner is None:
                return None
            coords.append((inner, c))
        terms.append((idx, GroupAlgElem(emb.sub, coords)))
    return SemicrossedElem(emb.sub, terms)


def _from_intrinsic(emb, x: SemicrossedElem) -> SemicrossedElem:
    terms = []
    for r, a in x.terms.items():
        idx = _convert_index(r, emb.ambient.domain)
        outer = [(emb.embed(m), c) for m, c in a.terms.items()]
        terms.append((idx, GroupAlgElem(emb.ambient, outer)))
    return SemicrossedElem(emb.ambient, terms)


def _product_agrees(sub, emb, x, y) -> bool:
    xi = _to_intrinsic(emb, x)
    yi = _to_intrinsic(emb, y)
    if xi is None or yi is None:
        return False
    small = _from_intrinsic(emb, sc_multiply(xi, yi))
    big = sc_multiply(x, y)
    return small == big


def diagonal_part(x: SemicrossedElem) -> SemicrossedElem:
    """Restrict to unit indices (those whose canonical positive part is 1)."""
    kept = {
        r: a
        for r, a in x.terms.items()
        if canonical_associate(r).positive_part == one(r.domain)
    }
    return SemicrossedElem(x.presentation, kept)


@dataclass(frozen=True)
class SemigroupSplit:
    """A declared factorization R^x = S1 x S2 with S1 finitely enumerated."""

    domain: str
    first: tuple[DomainElem, ...]
    second_contains: Callable[[DomainElem], bool]

    def factorizations(self, r: DomainElem) -> list[tuple[DomainElem, DomainElem]]:
        out = []
        for s1 in self.first:
            q = divides(s1, r)
            if q is not None and self.second_contains(q):
                out.append((s1, q))
        return out

    def factor(self, r: DomainElem) -> tuple[DomainElem, DomainElem]:
        facs = self.factorizations(r)
        if len(facs) != 1:
            raise NotADirectProduct(
                f"index {r!r} has {len(facs)} factorizations through the split"
            )
        return facs[0]


def units_positives_split(domain: str) -> SemigroupSplit:
    """The shipped instance: unit group times canonical representatives."""
    return SemigroupSplit(domain, units(domain), is_canonical)


INNER_FIRST = "inner-first"
INNER_SECOND = "inner-second"


class IteratedSemicrossedElem:
    """Element of a twice-iterated semicrossed product with a declared
    bracketing: inner-first means (A x S1) x S2, keyed by (s1, s2)."""

    __slots__ = ("presentation", "bracketing", "terms")

    def __init__(self, presentation, bracketing, terms=()):
        if bracketing not in (INNER_FIRST, INNER_SECOND):
            raise InvalidInput(f"unknown bracketing {bracketing!r}")
        self.presentation = presentation
        self.bracketing = bracketing
        clean: dict[tuple[DomainElem, DomainElem], GroupAlgElem] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for key, a in items:
            if a.is_zero():
                continue
            prev = clean.get(key)
            total = a if prev is None else prev + a
            if total.is_zero():
                clean.pop(key, None)
            else:
                clean[key] = total
        self.terms = clean

    def __eq__(self, other) -> bool:
        if not isinstance(other, IteratedSemicrossedElem):
            return NotImplemented
        return (
            self.presentation == other.presentation
            and self.bracketing == other.bracketing
            and self.terms == other.terms
        )

    def __mul__(self, other: IteratedSemicrossedElem) -> IteratedSemicrossedElem:
        if (
            self.presentation != other.presentation
            or self.bracketing != other.bracketing
        ):
            raise AmbientMismatch("iterated elements with different structure")
        out = []
        for (t1, t2), a in self.terms.items():
            for (s1, s2), b in other.terms.items():
                # the outer index acts on coefficients only, fixing the
                # inner isometries; composing the two actions in the order
                # fixed by the bracketing
                if self.bracketing == INNER_FIRST:
                    moved = alpha_endo(s1, alpha_endo(s2, a))
                else:
                    moved = alpha_endo(s2, alpha_endo(s1, a))
                out.append(((t1 * s1, t2 * s2), convolve(moved, b)))
        return IteratedSemicrossedElem(self.presentation, self.bracketing, out)

    def flatten(self) -> SemicrossedElem:
        flat = [(s1 * s2, a) for (s1, s2), a in self.terms.items()]
        return SemicrossedElem(self.presentation, flat)


def iterate_element(
    x: SemicrossedElem, split: SemigroupSplit, bracketing: str
) -> IteratedSemicrossedElem:
    """Rewrite sum S_r a_r over the split as a nested element; raises
    NotADirectProduct when an index does not factor uniquely."""
    terms = []
    for r, a in x.terms.items():
        terms.append((split.factor(r), a))
    return IteratedSemicrossedElem(x.presentation, bracketing, terms)


def product_decomposition_check(
    presentation: ModulePresentation,
    split: SemigroupSplit,
    samples: int,
    rng: random.Random | None = None,
    index_pool: list[DomainElem] | None = None,
) -> bool:
    """Structure constants of the flat product agree with both iterated
    bracketings on random monomial pairs, exactly."""
    rng = rng or random.Random(0)
    if index_pool is None:
        if presentation.domain != "Z":
            raise InvalidInput("provide an index pool for Z[i] splits")
        from .domains import zelem

        index_pool = [zelem(k) for k in (-3, -2, -1, 1, 2, 3, 6, -6)]
    span = 4
    for _ in range(samples):
        r = rng.choice(index_pool)
        s = rng.choice(index_pool)
        x = sc_monomial(r, _random_monomial(presentation, rng, span))
        y = sc_monomial(s, _random_monomial(presentation, rng, span))
        flat = sc_multiply(x, y)
        for bracketing in (INNER_FIRST, INNER_SECOND):
            xi = iterate_element(x, split, bracketing)
            yi = iterate_element(y, split, bracketing)
            # also make sure the product index still factors uniquely
            split.factor(r * s)
            if (xi * yi).flatten() != flat:
                return False
    return True


def _random_monomial(presentation, rng, span) -> GroupAlgElem:
    from fractions import Fraction as QQ

    from .domains import GaussRational

    coords = [rng.randint(-span, span) for _ in range(presentation.rank)]
    coeff = GaussRational(
        QQ(rng.randint(-3, 3), rng.randint(1, 3)),
        QQ(rng.randint(-3, 3), rng.randint(1, 3)),
    )
    if coeff.is_zero():
        coeff = GaussRational(QQ(1))
    return monomial(presentation, presentation.element(coords), coeff)


def elem_to_json(x: SemicrossedElem) -> list:
    from . import groupalg
    from .domains import elem_to_json as idx_json

    out = []
    for r in x.indices():
        out.append({"index": idx_json(r), "coeff_poly": groupalg.elem_to_json(x.terms[r])})
    return out


def elem_from_json(pres: ModulePresentation, data) -> SemicrossedElem:
    from . import groupalg
    from .domains import elem_from_json as idx_from

    terms = []
    for item in data:
        r = idx_from(pres.domain, item["index"])
        terms.append((r, groupalg.elem_from_json(pres, item["coeff_poly"])))
    return SemicrossedElem(pres, terms)
