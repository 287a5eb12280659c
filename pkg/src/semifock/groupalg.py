"""The polynomial level of the group C*-algebra of a module.

Elements are finitely supported functions from module elements to exact
Gaussian-rational coefficients, multiplied by convolution; the monomial
supported at m is written U^m.  Everything here is exact except the
explicitly-marked float fallback of the Fourier transform.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction as QQ

from .domains import GR_ONE, DomainElem, GaussRational
from .errors import (
    AmbientMismatch,
    EmptyList,
    InfiniteGroup,
    InvalidInput,
    ZeroScalar,
)
from . import intlinalg
from .modules import (
    ModuleElem,
    ModulePresentation,
    QuotientMap,
    SubmoduleDesc,
    is_submodule,
    quotient_module,
    scalar_action,
    submodule_membership,
    intersect_subgroups,
)


class GroupAlgElem:
    """A finite sum  sum_m c_m U^m  with exact coefficients.

    Zero coefficients are never stored, so equality of the coefficient
    maps is equality of elements.
    """

    __slots__ = ("presentation", "terms")

    def __init__(self, presentation: ModulePresentation, terms=()):
        self.presentation = presentation
        clean: dict[ModuleElem, GaussRational] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for m, c in items:
            if m.presentation != presentation:
                raise AmbientMismatch("support element outside the ambient module")
            if c.is_zero():
                continue
            prev = clean.get(m)
            total = c if prev is None else prev + c
            if total.is_zero():
                clean.pop(m, None)
            else:
                clean[m] = total
        self.terms = clean

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupAlgElem):
            return NotImplemented
        return self.presentation == other.presentation and self.terms == other.terms

    def __ne__(self, other) -> bool:
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> list[ModuleElem]:
        return sorted(self.terms, key=lambda m: m.coords)

    def coeff(self, m: ModuleElem) -> GaussRational:
        return self.terms.get(m, GaussRational(QQ(0)))

    def _check(self, other: GroupAlgElem) -> None:
        if self.presentation != other.presentation:
            raise AmbientMismatch("operands live over different modules")

    def __add__(self, other: GroupAlgElem) -> GroupAlgElem:
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            prev = out.get(m)
            total = c if prev is None else prev + c
            if total.is_zero():
                out.pop(m, None)
            else:
                out[m] = total
        return GroupAlgElem(self.presentation, out)

    def __sub__(self, other: GroupAlgElem) -> GroupAlgElem:
        return self + (-other)

    def __neg__(self) -> GroupAlgElem:
        return GroupAlgElem(
            self.presentation, {m: -c for m, c in self.terms.items()}
        )

    def scale(self, c: GaussRational) -> GroupAlgElem:
        return GroupAlgElem(
            self.presentation, {m: c * v for m, v in self.terms.items()}
        )

    def __mul__(self, other: GroupAlgElem) -> GroupAlgElem:
        return convolve(self, other)

    def star(self) -> GroupAlgElem:
        return involution(self)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = [f"({c!r})U^{m.coords}" for m, c in sorted(
            self.terms.items(), key=lambda kv: kv[0].coords)]
        return " + ".join(bits)


def unit(presentation: ModulePresentation) -> GroupAlgElem:
    return GroupAlgElem(presentation, [(presentation.zero(), GR_ONE)])


def monomial(
    presentation: ModulePresentation, m: ModuleElem, coeff: GaussRational = GR_ONE
) -> GroupAlgElem:
    return GroupAlgElem(presentation, [(m, coeff)])


def convolve(a: GroupAlgElem, b: GroupAlgElem) -> GroupAlgElem:
    """(a*b)(g) = sum over m+n = g of a(m) b(n)."""
    a._check(b)
    out: dict[ModuleElem, GaussRational] = {}
    for m, cm in a.terms.items():
        for n, cn in b.terms.items():
            g = m + n
            c = cm * cn
            prev = out.get(g)
            total = c if prev is None else prev + c
            if total.is_zero():
                out.pop(g, None)
            else:
                out[g] = total
    return GroupAlgElem(a.presentation, out)


def involution(a: GroupAlgElem) -> GroupAlgElem:
    """a*(g) = conjugate(a(-g)); U^m becomes U^{-m} with conjugated weight."""
    return GroupAlgElem(
        a.presentation, {-m: c.conj() for m, c in a.terms.items()}
    )


def alpha_endo(r: DomainElem, a: GroupAlgElem) -> GroupAlgElem:
    """The endomorphism sending U^m to U^{r m}.

    When the r-action on the module is not injective, distinct monomials
    may land on the same image; their coefficients add.
    """
    if r.is_zero():
        raise ZeroScalar("alpha_0 is not defined")
    out: dict[ModuleElem, GaussRational] = {}
    for m, c in a.terms.items():
        g = scalar_action(r, m)
        prev = out.get(g)
        total = c if prev is None else prev + c
        if total.is_zero():
            out.pop(g, None)
        else:
            out[g] = total
    return GroupAlgElem(a.presentation, out)


def conditional_expectation(sub: SubmoduleDesc, a: GroupAlgElem) -> GroupAlgElem:
    """Keep the coefficients supported on the subgroup, drop the rest."""
    if sub.ambient != a.presentation:
        raise AmbientMismatch("subgroup of a different module")
    return GroupAlgElem(
        a.presentation,
        {m: c for m, c in a.terms.items() if submodule_membership(sub, m)},
    )


@dataclass(frozen=True)
class AlgebraQuotientMap:
    """Pushforward C[M] -> C[M/N] induced by a quotient of modules."""

    qmap: QuotientMap

    @property
    def source(self) -> ModulePresentation:
        return self.qmap.source

    @property
    def target(self) -> ModulePresentation:
        return self.qmap.target

    def __call__(self, a: GroupAlgElem) -> GroupAlgElem:
        if a.presentation != self.qmap.source:
            raise AmbientMismatch("element outside the source module")
        out: dict[ModuleElem, GaussRational] = {}
        for m, c in a.terms.items():
            g = self.qmap(m)
            prev = out.get(g)
            total = c if prev is None else prev + c
            if total.is_zero():
                out.pop(g, None)
            else:
                out[g] = total
        return GroupAlgElem(self.qmap.target, out)


def induced_algebra_map(sub: SubmoduleDesc) -> AlgebraQuotientMap:
    """Quotient pushforward by the subgroup generated by sub.

    The ring structure survives on the quotient exactly when the subgroup
    is a submodule; otherwise the target is a plain group presentation.
    """
    _, qmap = quotient_module(sub.ambient, sub, module_level=is_submodule(sub))
    return AlgebraQuotientMap(qmap)


def quotient_push(sub: SubmoduleDesc, a: GroupAlgElem) -> GroupAlgElem:
    """Push U^m to U^{m+N}, summing coefficients within cosets."""
    return induced_algebra_map(sub)(a)


@dataclass(frozen=True)
class CharacterRep:
    """A character of the module given by one exact rotation per coordinate.

    The value at an element with coordinates (m_1, ..., m_n) is the root
    of unity e^{2 pi i t} with t = sum m_j * rotations[j] (mod 1).  For a
    torsion coordinate with modulus d the rotation must have denominator
    dividing d, so the character is well defined.
    """

    presentation: ModulePresentation
    rotations: tuple[QQ, ...]

    def __post_init__(self) -> None:
        rots = tuple(QQ(r) % 1 for r in self.rotations)
        object.__setattr__(self, "rotations", rots)
        if len(rots) != self.presentation.rank:
            raise InvalidInput("one rotation per coordinate is required")
        a = self.presentation.free_rank
        for j, d in enumerate(self.presentation.invariant_factors):
            if (rots[a + j] * d) % 1 != 0:
                raise InvalidInput(
                    f"rotation {rots[a + j]} is not killed by the modulus {d}"
                )

    def rotation_of(self, m: ModuleElem) -> QQ:
        if m.presentation != self.presentation:
            raise AmbientMismatch("element outside the ambient module")
        t = sum((QQ(c) * r for c, r in zip(m.coords, self.rotations)), QQ(0))
        return t % 1

    def value(self, m: ModuleElem) -> GaussRational | complex:
        """Exact when the rotation lands on a fourth root of unity."""
        return rotation_value(self.rotation_of(m))

    def is_trivial_on(self, m: ModuleElem) -> bool:
        return self.rotation_of(m) == 0


_FOURTH_ROOTS = {
    QQ(0): GaussRational(QQ(1), QQ(0)),
    QQ(1, 4): GaussRational(QQ(0), QQ(1)),
    QQ(1, 2): GaussRational(QQ(-1), QQ(0)),
    QQ(3, 4): GaussRational(QQ(0), QQ(-1)),
}


def rotation_value(t: QQ) -> GaussRational | complex:
    t = t % 1
    exact = _FOURTH_ROOTS.get(t)
    if exact is not None:
        return exact
    return cmath.exp(2j * math.pi * float(t))


def evaluation_at_rotation(
    presentation: ModulePresentation, p: int, q: int
) -> CharacterRep:
    """Evaluation of C[Z] at the root of unity with angle p/q of a turn."""
    if presentation.rank != 1 or presentation.invariant_factors:
        raise InvalidInput("rotation evaluation expects the presentation Z")
    return CharacterRep(presentation, (QQ(p, q),))


def kernel_group(rep: CharacterRep | QuotientMap | AlgebraQuotientMap) -> SubmoduleDesc:
    """Generators of {g : rep sends U^g to 1}, computed exactly."""
    if isinstance(rep, AlgebraQuotientMap):
        rep = rep.qmap
    if isinstance(rep, CharacterRep):
        return _character_kernel(rep)
    if isinstance(rep, QuotientMap):
        return _quotient_kernel(rep)
    raise InvalidInput(f"cannot extract a kernel group from {type(rep).__name__}")


def _character_kernel(rep: CharacterRep) -> SubmoduleDesc:
    pres = rep.presentation
    n = pres.rank
    if n == 0:
        return SubmoduleDesc(pres, ())
    big_q = 1
    for r in rep.rotations:
        big_q = big_q * r.denominator // math.gcd(big_q, r.denominator)
    coeffs = [int(r * big_q) for r in rep.rotations]
    # solve sum c_j x_j == 0 (mod Q), one congruence row plus a slack column
    row = [coeffs + [big_q]]
    basis = intlinalg.kernel_basis(row, ncols=n + 1)
    return _span_from_vectors(pres, [z[:n] for z in basis])


def _quotient_kernel(qmap: QuotientMap) -> SubmoduleDesc:
    pres = qmap.source
    n = pres.rank
    if n == 0:
        return SubmoduleDesc(pres, ())
    rows = []
    slacks = []
    for p in qmap.positions:
        rows.append(list(qmap.u_matrix[p]))
        slacks.append(p)
    if not rows:
        gens = [g for g in pres.standard_generators()]
        return _span_from_vectors(pres, [list(g.coords) for g in gens])
    mat = [row[:] for row in rows]
    height = len(rows)
    free_count = qmap.target.free_rank
    for idx in range(height):
        col = [0] * height
        if idx >= free_count:
            col[idx] = -qmap.target.invariant_factors[idx - free_count]
        for i in range(height):
            mat[i].append(col[i])
    basis = intlinalg.kernel_basis(mat, ncols=n + height)
    return _span_from_vectors(pres, [z[:n] for z in basis])


def _span_from_vectors(pres: ModulePresentation, vectors) -> SubmoduleDesc:
    gens = []
    seen = set()
    for v in vectors:
        g = pres.element(v)
        if not g.is_zero() and g.coords not in seen:
            seen.add(g.coords)
            gens.append(g)
    return SubmoduleDesc(pres, tuple(gens))


def intersect_kernel_groups(reps: list) -> SubmoduleDesc:
    """The subgroup trivialized by every representation in the list."""
    if not reps:
        raise EmptyList("need at least one representation")
    return intersect_subgroups([kernel_group(r) for r in reps])


@dataclass(frozen=True)
class DualFunction:
    """Values of a Fourier transform on the (finite) dual group.

    Keys are character exponent tuples t, meaning the character with
    rotation t_j / d_j in coordinate j.  On the exact path the values are
    Gaussian rationals; otherwise complex floats.
    """

    presentation: ModulePresentation
    values: dict
    exact: bool

    def __getitem__(self, key):
        return self.values[tuple(key)]


def all_characters(pres: ModulePresentation) -> list[CharacterRep]:
    if not pres.is_finite():
        raise InfiniteGroup("the full dual is only enumerable for finite modules")
    out = []
    for t in pres.elements():
        rots = tuple(
            QQ(c, d) for c, d in zip(t.coords, pres.invariant_factors)
        )
        out.append(CharacterRep(pres, rots))
    return out


def fourier_transform(a: GroupAlgElem) -> DualFunction:
    """hat(a)(chi) = sum_m a(m) chi(m) over all characters of a finite module.

    Exact root-of-unity arithmetic when every character value is a fourth
    root of unity (exponent dividing 4); float fallback otherwise.
    """
    pres = a.presentation
    if not pres.is_finite():
        raise InfiniteGroup("Fourier transform needs a finite module")
    exponent = pres.invariant_factors[-1] if pres.invariant_factors else 1
    exact = 4 % exponent == 0
    values = {}
    for t in pres.elements():
        rots = tuple(QQ(c, d) for c, d in zip(t.coords, pres.invariant_factors))
        chi = CharacterRep(pres, rots)
        if exact:
            acc = GaussRational(QQ(0))
            for m, c in a.terms.items():
                acc = acc + c * chi.value(m)
        else:
            acc = 0j
            for m, c in a.terms.items():
                acc += c.to_complex() * complex(chi.value(m))
        values[t.coords] = acc
    return DualFunction(pres, values, exact)


def inverse_fourier(f: DualFunction) -> dict:
    """a(m) = (1/|M|) sum_chi hat(a)(chi) conj(chi(m)); keys are elements."""
    pres = f.presentation
    size = pres.size()
    out = {}
    for m in pres.elements():
        if f.exact:
            acc = GaussRational(QQ(0))
        else:
            acc = 0j
        for t in pres.elements():
            rots = tuple(
                QQ(c, d) for c, d in zip(t.coords, pres.invariant_factors)
            )
            chi = CharacterRep(pres, rots)
            v = f.values[t.coords]
            if f.exact:
                acc = acc + v * chi.value(m).conj()
            else:
                acc += v * complex(chi.value(m)).conjugate()
        if f.exact:
            out[m] = GaussRational(acc.re / size, acc.im / size)
        else:
            out[m] = acc / size
    return out


def inverse_fourier_elem(f: DualFunction) -> GroupAlgElem:
    """Exact-path inverse transform packaged as an algebra element."""
    if not f.exact:
        raise InvalidInput("inverse element recovery needs the exact path")
    vals = inverse_fourier(f)
    return GroupAlgElem(f.presentation, list(vals.items()))


def elem_to_json(a: GroupAlgElem) -> list:
    out = []
    for m in a.support():
        c = a.terms[m]
        out.append(
            {
                "element": list(m.coords),
                "coeff": [
                    c.re.numerator,
                    c.re.denominator,
                    c.im.numerator,
                    c.im.denominator,
                ],
            }
        )
    return out


def elem_from_json(pres: ModulePresentation, data) -> GroupAlgElem:
    terms = []
    for item in data:
        m = pres.element(item["element"])
        rn, rd, in_, id_ = item["coeff"]
        terms.append((m, GaussRational(QQ(rn, rd), QQ(in_, id_))))
    return GroupAlgElem(pres, terms)
