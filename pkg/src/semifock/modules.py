"""Finitely generated modules over Z and Z[i].

A module is presented by invariant-factor coordinates: the underlying
abelian group is Z^a + Z/d1 + ... + Z/dk with d1 | d2 | ... | dk, free
coordinates first.  A Z[i]-module is the same integer lattice together
with an explicit matrix giving the action of i; this makes "subgroup but
not submodule" phenomena directly expressible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction as QQ

from . import intlinalg
from .domains import DOMAIN_Z, DOMAIN_ZI, DOMAINS, DomainElem
from .errors import (
    DimensionMismatch,
    InvalidInput,
    NotSubmodule,
    TorsionPresent,
    ZeroScalar,
)

smith_normal_form = intlinalg.smith_normal_form


@dataclass(frozen=True)
class ModulePresentation:
    """Invariant-factor presentation of a finitely generated module."""

    domain: str
    free_rank: int
    invariant_factors: tuple[int, ...] = ()
    i_action: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self) -> None:
        if self.domain not in DOMAINS:
            raise InvalidInput(f"unknown domain {self.domain!r}")
        if self.free_rank < 0:
            raise InvalidInput("free rank must be nonnegative")
        facs = tuple(int(d) for d in self.invariant_factors)
        object.__setattr__(self, "invariant_factors", facs)
        for d in facs:
            if d < 2:
                raise InvalidInput(f"invariant factor {d} must be >= 2")
        for a, b in zip(facs, facs[1:]):
            if b % a != 0:
                raise InvalidInput(f"broken divisibility chain: {a} does not divide {b}")
        if self.domain == DOMAIN_Z:
            if self.i_action is not None:
                raise InvalidInput("i-action matrix only applies to Z[i]-modules")
            return
        n = self.rank
        if self.i_action is None:
            raise InvalidInput("a Z[i]-module needs an i-action matrix")
        t = tuple(tuple(int(x) for x in row) for row in self.i_action)
        object.__setattr__(self, "i_action", t)
        if len(t) != n or any(len(row) != n for row in t):
            raise DimensionMismatch(f"i-action matrix must be {n}x{n}")
        self._validate_i_action()

    def _validate_i_action(self) -> None:
        n = self.rank
        t = [list(row) for row in self.i_action]
        # i must map the relation lattice into itself ...
        for j, d in enumerate(self.invariant_factors):
            col = self.free_rank + j
            for i in range(n):
                v = d * t[i][col]
                if not self._in_relation_coord(i, v):
                    raise InvalidInput(
                        "i-action does not preserve the relation lattice"
                    )
        # ... and square to -1 modulo the relations.
        sq = intlinalg.mat_mul(t, t)
        for i in range(n):
            for j in range(n):
                v = sq[i][j] + (1 if i == j else 0)
                if not self._in_relation_coord(i, v):
                    raise InvalidInput("i-action squared is not -identity")

    def _in_relation_coord(self, i: int, v: int) -> bool:
        if i < self.free_rank:
            return v == 0
        return v % self.invariant_factors[i - self.free_rank] == 0

    @property
    def rank(self) -> int:
        """Number of coordinates (free plus torsion)."""
        return self.free_rank + len(self.invariant_factors)

    def is_finite(self) -> bool:
        return self.free_rank == 0

    def size(self) -> int | None:
        if not self.is_finite():
            return None
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out

    def reduce(self, coords) -> tuple[int, ...]:
        coords = list(coords)
        if len(coords) != self.rank:
            raise DimensionMismatch(
                f"expected {self.rank} coordinates, got {len(coords)}"
            )
        a = self.free_rank
        for j, d in enumerate(self.invariant_factors):
            coords[a + j] %= d
        return tuple(coords)

    def element(self, *coords) -> ModuleElem:
        if len(coords) == 1 and isinstance(coords[0], (list, tuple)):
            coords = tuple(coords[0])
        return ModuleElem(self, tuple(int(c) for c in coords))

    def zero(self) -> ModuleElem:
        return self.element([0] * self.rank)

    def standard_generators(self) -> list[ModuleElem]:
        n = self.rank
        return [
            self.element([1 if i == j else 0 for i in range(n)]) for j in range(n)
        ]

    def elements(self):
        """All elements of a finite module, in lexicographic order."""
        if not self.is_finite():
            raise InvalidInput("cannot enumerate an infinite module")
        for coords in itertools.product(*[range(d) for d in self.invariant_factors]):
            yield self.element(coords)

    def relation_columns(self) -> list[list[int]]:
        """Columns spanning the relation lattice, as an n x k row-major matrix."""
        n, a = self.rank, self.free_rank
        cols = len(self.invariant_factors)
        mat = [[0] * cols for _ in range(n)]
        for j, d in enumerate(self.invariant_factors):
            mat[a + j][j] = d
        return mat

    def __repr__(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.invariant_factors]
        body = " + ".join(parts) if parts else "0"
        tag = "" if self.domain == DOMAIN_Z else " over Z[i]"
        return f"<module {body}{tag}>"


@dataclass(frozen=True)
class ModuleElem:
    presentation: ModulePresentation
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", self.presentation.reduce(self.coords))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __add__(self, other: ModuleElem) -> ModuleElem:
        self._check(other)
        return ModuleElem(
            self.presentation,
            tuple(x + y for x, y in zip(self.coords, other.coords)),
        )

    def __sub__(self, other: ModuleElem) -> ModuleElem:
        return self + (-other)

    def __neg__(self) -> ModuleElem:
        return ModuleElem(self.presentation, tuple(-x for x in self.coords))

    def __mul__(self, n: int) -> ModuleElem:
        return ModuleElem(self.presentation, tuple(n * x for x in self.coords))

    __rmul__ = __mul__

    def _check(self, other: ModuleElem) -> None:
        if self.presentation != other.presentation:
            raise DimensionMismatch("elements of different modules")

    def __repr__(self) -> str:
        return f"m{self.coords}"


@dataclass(frozen=True)
class SubmoduleDesc:
    """A finite list of generators inside one ambient presentation.

    The generated object is the subGROUP spanned by the generators; use
    is_submodule to ask whether it is also closed under the ring action.
    """

    ambient: ModulePresentation
    generators: tuple[ModuleElem, ...]

    def __post_init__(self) -> None:
        gens = tuple(self.generators)
        for g in gens:
            if g.presentation != self.ambient:
                raise DimensionMismatch("generator outside the ambient module")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def span(cls, ambient: ModulePresentation, coords_list) -> SubmoduleDesc:
        return cls(ambient, tuple(ambient.element(c) for c in coords_list))

    def generator_matrix(self) -> list[list[int]]:
        n = self.ambient.rank
        return [[g.coords[i] for g in self.generators] for i in range(n)]

    def __repr__(self) -> str:
        return f"<subgroup gens={[g.coords for g in self.generators]}>"


def _hstack(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    if not a:
        return [row[:] for row in b]
    if not b:
        return [row[:] for row in a]
    return [ra + rb for ra, rb in zip(a, b)]


def action_matrix(pres: ModulePresentation, r: DomainElem) -> list[list[int]]:
    """The n x n integer matrix of m -> r*m on coordinates."""
    if r.domain != pres.domain:
        raise InvalidInput(f"scalar from {r.domain!r} acting on {pres.domain!r}-module")
    n = pres.rank
    mat = [[r.re if i == j else 0 for j in range(n)] for i in range(n)]
    if r.im != 0:
        t = pres.i_action
        for i in range(n):
            for j in range(n):
                mat[i][j] += r.im * t[i][j]
    return mat


def scalar_action(r: DomainElem, m: ModuleElem) -> ModuleElem:
    if r.is_zero():
        raise ZeroScalar("scalar action by zero")
    pres = m.presentation
    a = action_matrix(pres, r)
    return ModuleElem(pres, tuple(intlinalg.mat_vec(a, list(m.coords))))


def action_kernel(r: DomainElem, pres: ModulePresentation) -> SubmoduleDesc:
    """Generators of ker(m -> r*m), exact; empty iff the action is injective."""
    if r.is_zero():
        raise ZeroScalar("scalar action by zero")
    n = pres.rank
    stacked = _hstack(action_matrix(pres, r), pres.relation_columns())
    basis = intlinalg.kernel_basis(stacked, ncols=n + len(pres.invariant_factors))
    gens = []
    seen = set()
    for z in basis:
        g = pres.element(z[:n])
        if not g.is_zero() and g.coords not in seen:
            seen.add(g.coords)
            gens.append(g)
    return SubmoduleDesc(pres, tuple(gens))


def action_bijective(r: DomainElem, pres: ModulePresentation) -> bool:
    """Exact bijectivity of m -> r*m: trivial kernel plus surjectivity."""
    if action_kernel(r, pres).generators:
        return False
    n = pres.rank
    stacked = _hstack(action_matrix(pres, r), pres.relation_columns())
    width = n + len(pres.invariant_factors)
    for g in pres.standard_generators():
        if intlinalg.solve(stacked, list(g.coords), ncols=width) is None:
            return False
    return True


def submodule_membership(desc: SubmoduleDesc, m: ModuleElem) -> bool:
    """Is m an integer combination of the generators, modulo the relations?"""
    if m.presentation != desc.ambient:
        raise DimensionMismatch("element outside the ambient module")
    n = desc.ambient.rank
    if n == 0:
        return True
    stacked = _hstack(desc.generator_matrix(), desc.ambient.relation_columns())
    width = len(desc.generators) + len(desc.ambient.invariant_factors)
    if width == 0:
        return m.is_zero()
    return intlinalg.solve(stacked, list(m.coords), ncols=width) is not None


def module_closure(desc: SubmoduleDesc) -> SubmoduleDesc:
    """Close a generator list under the ring action (adds i-images)."""
    if desc.ambient.domain == DOMAIN_Z:
        return desc
    i_elem = DomainElem(DOMAIN_ZI, 0, 1)
    extra = [scalar_action(i_elem, g) for g in desc.generators]
    return SubmoduleDesc(desc.ambient, desc.generators + tuple(extra))


def is_submodule(desc: SubmoduleDesc) -> bool:
    """Closure of the generated subgroup under the ring action.

    Over Z every subgroup qualifies; over Z[i] it suffices to check that i
    maps each generator back into the subgroup.
    """
    if desc.ambient.domain == DOMAIN_Z:
        return True
    i_elem = DomainElem(DOMAIN_ZI, 0, 1)
    return all(
        submodule_membership(desc, scalar_action(i_elem, g)) for g in desc.generators
    )


def subgroup_equal(a: SubmoduleDesc, b: SubmoduleDesc) -> bool:
    return all(submodule_membership(b, g) for g in a.generators) and all(
        submodule_membership(a, g) for g in b.generators
    )


@dataclass(frozen=True)
class QuotientMap:
    """Coordinate projection M -> M/N coming out of quotient_module."""

    source: ModulePresentation
    target: ModulePresentation
    u_matrix: tuple[tuple[int, ...], ...]
    positions: tuple[int, ...]
    module_level: bool

    def __call__(self, m: ModuleElem) -> ModuleElem:
        if m.presentation != self.source:
            raise DimensionMismatch("element outside the source module")
        y = intlinalg.mat_vec([list(r) for r in self.u_matrix], list(m.coords))
        return self.target.element([y[p] for p in self.positions])


def quotient_module(
    pres: ModulePresentation,
    sub: SubmoduleDesc,
    module_level: bool = True,
) -> tuple[ModulePresentation, QuotientMap]:
    """Present M/N in invariant-factor form, with the projection map.

    With module_level=True (default) the generators must span a submodule
    and the quotient keeps the ring structure; module_level=False takes a
    plain group quotient, whose result is a Z-module presentation.
    """
    if sub.ambient != pres:
        raise DimensionMismatch("subgroup of a different module")
    really_module = is_submodule(sub)
    if module_level and not really_module:
        raise NotSubmodule(
            "generators are not closed under the ring action; "
            "pass module_level=False for a group-level quotient"
        )
    n = pres.rank
    rel = _hstack(sub.generator_matrix(), pres.relation_columns())
    if n == 0:
        target = ModulePresentation(DOMAIN_Z, 0)
        qmap = QuotientMap(pres, target, (), (), module_level)
        return target, qmap
    if not rel or not rel[0]:
        u = intlinalg.identity(n)
        moduli = [0] * n
    else:
        u, d, _ = intlinalg.smith_normal_form(rel)
        diag = intlinalg.diagonal(d)
        moduli = [diag[i] if i < len(diag) else 0 for i in range(n)]
    free_pos = [i for i in range(n) if moduli[i] == 0]
    tors_pos = [i for i in range(n) if moduli[i] >= 2]
    positions = tuple(free_pos + tors_pos)
    factors = tuple(moduli[i] for i in tors_pos)
    keep_i_action = module_level and pres.domain == DOMAIN_ZI
    if keep_i_action:
        uinv = intlinalg.unimodular_inverse(u)
        big = intlinalg.mat_mul(intlinalg.mat_mul(u, [list(r) for r in pres.i_action]), uinv)
        induced = tuple(
            tuple(big[p][q] for q in positions) for p in positions
        )
        target = ModulePresentation(DOMAIN_ZI, len(free_pos), factors, induced)
    else:
        target = ModulePresentation(DOMAIN_Z, len(free_pos), factors)
    qmap = QuotientMap(
        pres,
        target,
        tuple(tuple(row) for row in u),
        positions,
        module_level and really_module,
    )
    return target, qmap


@dataclass(frozen=True)
class TorsionDecomposition:
    free_rank: int
    invariant_factors: tuple[int, ...]
    torsion: SubmoduleDesc
    exponent: int | None

    @property
    def has_torsion(self) -> bool:
        return bool(self.invariant_factors)


def torsion_decomposition(pres: ModulePresentation) -> TorsionDecomposition:
    a = pres.free_rank
    gens = tuple(
        pres.standard_generators()[a + j] for j in range(len(pres.invariant_factors))
    )
    exponent = pres.invariant_factors[-1] if pres.invariant_factors else None
    return TorsionDecomposition(
        free_rank=a,
        invariant_factors=pres.invariant_factors,
        torsion=SubmoduleDesc(pres, gens),
        exponent=exponent,
    )


@dataclass(frozen=True)
class QModule:
    """The module of fractions, realized as a rational vector space.

    For a Z[i]-module the space is Q^dim with the inherited i-action
    matrix, so Q(R) scalars act through their rational coordinates.
    """

    domain: str
    dim: int
    i_action: tuple[tuple[int, ...], ...] | None = None

    def zero(self) -> tuple[QQ, ...]:
        return tuple(QQ(0) for _ in range(self.dim))

    def basis(self) -> list[tuple[QQ, ...]]:
        return [
            tuple(QQ(1 if i == j else 0) for i in range(self.dim))
            for j in range(self.dim)
        ]


def qmodule_scalar(
    space: QModule, r: DomainElem, v: tuple[QQ, ...]
) -> tuple[QQ, ...]:
    if r.is_zero():
        raise ZeroScalar("scalar action by zero")
    if r.domain != space.domain:
        raise InvalidInput("scalar from the wrong domain")
    out = [QQ(r.re) * x for x in v]
    if r.im != 0:
        t = space.i_action
        for i in range(space.dim):
            out[i] += QQ(r.im) * sum(
                QQ(t[i][j]) * v[j] for j in range(space.dim)
            )
    return tuple(out)


def qmodule_solve(
    space: QModule, r: DomainElem, target: tuple[QQ, ...]
) -> tuple[QQ, ...]:
    """The unique v with r*v == target; exact rational elimination."""
    if r.is_zero():
        raise ZeroScalar("cannot invert the zero action")
    n = space.dim
    mat = [[QQ(r.re if i == j else 0) for j in range(n)] for i in range(n)]
    if r.im != 0:
        for i in range(n):
            for j in range(n):
                mat[i][j] += QQ(r.im * space.i_action[i][j])
    aug = [mat[i] + [target[i]] for i in range(n)]
    for col in range(n):
        piv = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if piv is None:
            raise ZeroScalar("action is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        scale = aug[col][col]
        aug[col] = [x / scale for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    return tuple(aug[i][n] for i in range(n))


@dataclass(frozen=True)
class LocalizationMap:
    source: ModulePresentation
    target: QModule

    def __call__(self, m: ModuleElem) -> tuple[QQ, ...]:
        if m.presentation != self.source:
            raise DimensionMismatch("element outside the source module")
        return tuple(QQ(c) for c in m.coords[: self.source.free_rank])


def localize(
    pres: ModulePresentation,
) -> tuple[QModule, LocalizationMap, SubmoduleDesc]:
    """Invert all nonzero scalars: the torsion dies and the free part
    becomes a rational vector space."""
    a = pres.free_rank
    i_act = None
    if pres.domain == DOMAIN_ZI:
        i_act = tuple(tuple(pres.i_action[i][j] for j in range(a)) for i in range(a))
    space = QModule(pres.domain, a, i_act)
    tor = torsion_decomposition(pres).torsion
    return space, LocalizationMap(pres, space), tor


def envelope_module(
    pres: ModulePresentation,
) -> tuple[QModule, LocalizationMap]:
    """Localization of a torsion-free module; the embedding is injective
    and every nonzero scalar acts bijectively on the result."""
    if pres.invariant_factors:
        raise TorsionPresent(
            f"module has torsion {pres.invariant_factors}; no envelope module"
        )
    space, emb, _ = localize(pres)
    return space, emb


@dataclass(frozen=True)
class SubgroupEmbedding:
    """Intrinsic presentation of a generated subgroup.

    sub is the subgroup in its own invariant-factor coordinates; embed and
    coordinatize translate between those coordinates and the ambient ones.
    """

    ambient: ModulePresentation
    desc: SubmoduleDesc
    sub: ModulePresentation
    u_matrix: tuple[tuple[int, ...], ...]
    uinv_matrix: tuple[tuple[int, ...], ...]
    positions: tuple[int, ...]

    def embed(self, elem: ModuleElem) -> ModuleElem:
        if elem.presentation != self.sub:
            raise DimensionMismatch("element outside the subgroup presentation")
        k = len(self.u_matrix)
        y = [0] * k
        for j, p in enumerate(self.positions):
            y[p] = elem.coords[j]
        x = intlinalg.mat_vec([list(r) for r in self.uinv_matrix], y)
        total = self.ambient.zero()
        for xi, g in zip(x, self.desc.generators):
            total = total + xi * g
        return total

    def coordinatize(self, m: ModuleElem) -> ModuleElem | None:
        """Express an ambient element in subgroup coordinates, if possible."""
        if m.presentation != self.ambient:
            raise DimensionMismatch("element outside the ambient module")
        stacked = _hstack(
            self.desc.generator_matrix(), self.ambient.relation_columns()
        )
        width = len(self.desc.generators) + len(self.ambient.invariant_factors)
        z = intlinalg.solve(stacked, list(m.coords), ncols=width)
        if z is None:
            return None
        x = z[: len(self.desc.generators)]
        y = intlinalg.mat_vec([list(r) for r in self.u_matrix], x)
        return self.sub.element([y[p] for p in self.positions])


def subgroup_presentation(desc: SubmoduleDesc) -> SubgroupEmbedding:
    """Present the subgroup generated by desc in its own coordinates.

    The subgroup keeps the Z[i] structure exactly when it is closed under
    i; otherwise it is presented as a plain abelian group.
    """
    ambient = desc.ambient
    k = len(desc.generators)
    n = ambient.rank
    stacked = _hstack(desc.generator_matrix(), ambient.relation_columns())
    width = k + len(ambient.invariant_factors)
    full_kernel = intlinalg.kernel_basis(stacked, ncols=width) if n else [
        [1 if i == j else 0 for i in range(width)] for j in range(width)
    ]
    rel_cols = [z[:k] for z in full_kernel]
    rel = [[col[i] for col in rel_cols] for i in range(k)] if rel_cols else []
    if rel and rel[0]:
        u, d, _ = intlinalg.smith_normal_form(rel)
        diag = intlinalg.diagonal(d)
        moduli = [diag[i] if i < len(diag) else 0 for i in range(k)]
    else:
        u = intlinalg.identity(k)
        moduli = [0] * k
    free_pos = [i for i in range(k) if moduli[i] == 0]
    tors_pos = [i for i in range(k) if moduli[i] >= 2]
    positions = tuple(free_pos + tors_pos)
    factors = tuple(moduli[i] for i in tors_pos)
    uinv = intlinalg.unimodular_inverse(u) if k else []
    closed = is_submodule(desc)
    if ambient.domain == DOMAIN_ZI and closed:
        plain = ModulePresentation(DOMAIN_Z, len(free_pos), factors)
        probe = SubgroupEmbedding(
            ambient,
            desc,
            plain,
            tuple(tuple(r) for r in u),
            tuple(tuple(r) for r in uinv),
            positions,
        )
        i_elem = DomainElem(DOMAIN_ZI, 0, 1)
        cols = []
        for e in plain.standard_generators():
            img = probe.coordinatize(scalar_action(i_elem, probe.embed(e)))
            assert img is not None
            cols.append(list(img.coords))
        dim = plain.rank
        i_act = tuple(tuple(cols[j][i] for j in range(dim)) for i in range(dim))
        sub = ModulePresentation(DOMAIN_ZI, len(free_pos), factors, i_act)
    else:
        sub = ModulePresentation(DOMAIN_Z, len(free_pos), factors)
    return SubgroupEmbedding(
        ambient,
        desc,
        sub,
        tuple(tuple(r) for r in u),
        tuple(tuple(r) for r in uinv),
        positions,
    )


def intersect_subgroups(descs: list[SubmoduleDesc]) -> SubmoduleDesc:
    """Intersection of generated subgroups, via exact lattice intersection
    of their preimages in the coordinate lattice."""
    if not descs:
        raise InvalidInput("need at least one subgroup")
    ambient = descs[0].ambient
    for d in descs[1:]:
        if d.ambient != ambient:
            raise DimensionMismatch("subgroups of different modules")
    n = ambient.rank
    if n == 0:
        return SubmoduleDesc(ambient, ())
    current = _hstack(descs[0].generator_matrix(), ambient.relation_columns())
    for d in descs[1:]:
        other = _hstack(d.generator_matrix(), ambient.relation_columns())
        c = len(current[0]) if current and current[0] else 0
        o = len(other[0]) if other and other[0] else 0
        if c == 0 or o == 0:
            current = ambient.relation_columns()
            continue
        block = _hstack(current, [[-x for x in row] for row in other])
        kernel = intlinalg.kernel_basis(block, ncols=c + o)
        cols = []
        for z in kernel:
            col = intlinalg.mat_vec(current, z[:c])
            cols.append(col)
        current = (
            [[col[i] for col in cols] for i in range(n)] if cols else [[] for _ in range(n)]
        )
    gens = []
    seen = set()
    width = len(current[0]) if current and current[0] else 0
    for j in range(width):
        g = ambient.element([current[i][j] for i in range(n)])
        if not g.is_zero() and g.coords not in seen:
            seen.add(g.coords)
            gens.append(g)
    return SubmoduleDesc(ambient, tuple(gens))


def module_from_json(data: dict) -> ModulePresentation:
    """Scenario-file syntax: {"domain", "free_rank", "torsion", "i_action"?}."""
    domain = data.get("domain", DOMAIN_Z)
    free_rank = int(data.get("free_rank", 0))
    torsion = tuple(int(d) for d in data.get("torsion", ()))
    i_action = data.get("i_action")
    if i_action is not None:
        i_action = tuple(tuple(int(x) for x in row) for row in i_action)
    return ModulePresentation(domain, free_rank, torsion, i_action)


def module_to_json(pres: ModulePresentation) -> dict:
    out = {
        "domain": pres.domain,
        "free_rank": pres.free_rank,
        "torsion": list(pres.invariant_factors),
    }
    if pres.i_action is not None:
        out["i_action"] = [list(row) for row in pres.i_action]
    return out


def gaussian_line() -> ModulePresentation:
    """Z[i] as a module over itself: the lattice Z^2 with i rotating by 90
    degrees ((1,0) is 1 and (0,1) is i)."""
    return ModulePresentation(DOMAIN_ZI, 2, (), ((0, -1), (1, 0)))


def zmodule(free_rank: int, *torsion: int) -> ModulePresentation:
    return ModulePresentation(DOMAIN_Z, free_rank, tuple(torsion))
