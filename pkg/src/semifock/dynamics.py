"""Finite dynamical systems and finite generation of their function spaces.

A system is a set {0, ..., n-1} with a total map sigma.  The semigroup of
iterates acts on functions by pullback, f -> f o sigma^k, and the cyclic
subspace of f is the span of the constant 1 together with all pullback
iterates.  Everything is exact rational arithmetic; ranks come from a
reduced echelon form, never from floats.

The same span machinery drives the polynomial model of the square map on
[-1, 1], where pullback is the substitution t -> t^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as QQ

from .domains import GaussRational
from .errors import (
    DegreeOverflow,
    DimensionMismatch,
    EmptyFamily,
    InvalidInput,
    NotEquivariant,
    NotSurjective,
)

GR_ZERO = GaussRational(QQ(0))
GR_ONE = GaussRational(QQ(1))


@dataclass(frozen=True)
class FiniteDynSystem:
    size: int
    sigma: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.size <= 0:
            raise InvalidInput("need at least one point")
        sig = tuple(int(x) for x in self.sigma)
        object.__setattr__(self, "sigma", sig)
        if len(sig) != self.size:
            raise InvalidInput("sigma must assign an image to every point")
        for x in sig:
            if not 0 <= x < self.size:
                raise InvalidInput(f"sigma image {x} out of range")

    def is_identity(self) -> bool:
        return all(self.sigma[x] == x for x in range(self.size))

    def forward_orbit(self, z: int) -> set[int]:
        seen = set()
        x = z
        while x not in seen:
            seen.add(x)
            x = self.sigma[x]
        return seen


@dataclass(frozen=True)
class FuncOnX:
    system: FiniteDynSystem
    values: tuple[GaussRational, ...]

    def __post_init__(self) -> None:
        if len(self.values) != self.system.size:
            raise DimensionMismatch("one value per point is required")

    def pullback(self) -> FuncOnX:
        """f o sigma."""
        return FuncOnX(
            self.system, tuple(self.values[self.system.sigma[x]] for x in range(self.system.size))
        )

    def __add__(self, other: FuncOnX) -> FuncOnX:
        return FuncOnX(self.system, tuple(a + b for a, b in zip(self.values, other.values)))

    def __mul__(self, other: FuncOnX) -> FuncOnX:
        return FuncOnX(self.system, tuple(a * b for a, b in zip(self.values, other.values)))


def constant(system: FiniteDynSystem, value=1) -> FuncOnX:
    c = GaussRational(QQ(value))
    return FuncOnX(system, tuple(c for _ in range(system.size)))


def characteristic(system: FiniteDynSystem, point: int) -> FuncOnX:
    vals = [GR_ZERO] * system.size
    vals[point] = GR_ONE
    return FuncOnX(system, tuple(vals))


# ----------------------------------------------------------------------
# exact echelon spans (generic over a field with truthiness as "nonzero")

class SpanBasis:
    """Reduced echelon basis of a subspace, deterministic and exact."""

    __slots__ = ("rows", "pivots", "length")

    def __init__(self, length: int):
        self.length = length
        self.rows: list[tuple] = []
        self.pivots: list[int] = []

    @property
    def dim(self) -> int:
        return len(self.rows)

    def _reduce(self, vec):
        v = list(vec)
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if c:
                for j in range(self.length):
                    v[j] = v[j] - c * row[j]
        return v

    def add(self, vec) -> bool:
        """Insert a vector; returns True when the dimension grew."""
        if len(vec) != self.length:
            raise DimensionMismatch("vector of the wrong length")
        v = self._reduce(vec)
        pivot = next((j for j in range(self.length) if v[j]), None)
        if pivot is None:
            return False
        lead = v[pivot]
        v = [x / lead for x in v]
        for i, row in enumerate(self.rows):
            c = row[pivot]
            if c:
                self.rows[i] = tuple(x - c * y for x, y in zip(row, v))
        at = next(
            (i for i, p in enumerate(self.pivots) if p > pivot), len(self.pivots)
        )
        self.rows.insert(at, tuple(v))
        self.pivots.insert(at, pivot)
        return True

    def contains(self, vec) -> bool:
        return all(not x for x in self._reduce(vec))


def span_of(vectors, length: int) -> SpanBasis:
    basis = SpanBasis(length)
    for v in vectors:
        basis.add(v)
    return basis


# ----------------------------------------------------------------------
# orbits and cyclic subspaces

def orbit_components(system: FiniteDynSystem) -> list[list[int]]:
    """Weakly connected components of the functional graph x -> sigma(x),
    numbered by least element."""
    parent = list(range(system.size))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x in range(system.size):
        rx, ry = find(x), find(system.sigma[x])
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)
    groups: dict[int, list[int]] = {}
    for x in range(system.size):
        groups.setdefault(find(x), []).append(x)
    return [sorted(groups[k]) for k in sorted(groups)]


def _pullback_iterates(system: FiniteDynSystem, f: FuncOnX):
    """All distinct compositions f o sigma^k; the power tables of sigma
    eventually cycle, so this is a finite list."""
    table = tuple(range(system.size))
    seen_tables = set()
    out = []
    while table not in seen_tables:
        seen_tables.add(table)
        out.append(tuple(f.values[table[x]] for x in range(system.size)))
        table = tuple(system.sigma[table[x]] for x in range(system.size))
    return out


def cyclic_subspace(system: FiniteDynSystem, f: FuncOnX) -> SpanBasis:
    """Echelon span of {1} together with every pullback iterate of f."""
    vectors = [constant(system).values]
    vectors.extend(_pullback_iterates(system, f))
    return span_of(vectors, system.size)


def default_candidates(system: FiniteDynSystem) -> list[FuncOnX]:
    """All characteristic functions plus one function with distinct
    small-prime values."""
    out = [characteristic(system, x) for x in range(system.size)]
    primes = []
    p = 2
    while len(primes) < system.size:
        if all(p % q for q in primes):
            primes.append(p)
        p += 1
    out.append(
        FuncOnX(system, tuple(GaussRational(QQ(p)) for p in primes))
    )
    return out


def is_cyclic_witness(
    system: FiniteDynSystem, candidates: list[FuncOnX] | None = None
) -> FuncOnX | None:
    """First candidate whose cyclic subspace is everything, else None.

    None means "no witness found among the candidates", never a proof
    that the action is non-cyclic.
    """
    if candidates is None:
        candidates = default_candidates(system)
    for f in candidates:
        if cyclic_subspace(system, f).dim == system.size:
            return f
    return None


def cyclicity_verdict(
    system: FiniteDynSystem, candidates: list[FuncOnX] | None = None
) -> dict:
    """Witness search plus the one structural bound we can prove: under
    the identity map every cyclic subspace is spanned by {1, f}, so more
    than two points can never be cyclic."""
    witness = is_cyclic_witness(system, candidates)
    if witness is not None:
        return {"verdict": "cyclic", "witness": witness}
    if system.is_identity() and system.size > 2:
        return {"verdict": "non-cyclic", "witness": None}
    return {"verdict": "unknown", "witness": None}


def dense_orbit_generation(system: FiniteDynSystem) -> FuncOnX | None:
    """Search for a point whose forward orbit misses at most one point;
    its characteristic function is returned only when the full-span
    certificate is recomputed successfully."""
    for z in range(system.size):
        orbit = system.forward_orbit(z)
        if system.size - len(orbit) <= 1:
            f = characteristic(system, z)
            if cyclic_subspace(system, f).dim == system.size:
                return f
    return None


def multi_span(system: FiniteDynSystem, fs: list[FuncOnX]) -> SpanBasis:
    """Span of all products taking one factor from each cyclic subspace.

    Computed factor by factor: the span of n-fold products equals the
    span of pairwise products with the span built so far (bilinearity),
    which keeps at most |X| rows alive at every stage.
    """
    if not fs:
        raise EmptyFamily("need at least one generator")
    bases = [cyclic_subspace(system, f) for f in fs]
    acc = span_of([constant(system).values], system.size)
    for b in bases:
        nxt = SpanBasis(system.size)
        for left in acc.rows:
            for right in b.rows:
                nxt.add(tuple(a * c for a, c in zip(left, right)))
        acc = nxt
    for b in bases:
        for row in b.rows:
            assert acc.contains(row), "product span must contain each factor"
    assert acc.contains(constant(system).values)
    return acc


@dataclass
class GeneratorReport:
    functions: list[FuncOnX]
    count: int
    certified: bool
    fallback_components: list[int]


def generators_from_orbits(system: FiniteDynSystem) -> GeneratorReport:
    """One characteristic function per orbit component, with a recomputed
    full-span certificate; components whose single generator fails are
    enlarged to one characteristic function per point."""
    comps = orbit_components(system)
    gens = [characteristic(system, comp[0]) for comp in comps]
    if multi_span(system, gens).dim == system.size:
        return GeneratorReport(gens, len(gens), True, [])
    fallback = []
    final: list[FuncOnX] = []
    for idx, comp in enumerate(comps):
        rep = characteristic(system, comp[0])
        span = cyclic_subspace(system, rep)
        covers = all(
            span.contains(characteristic(system, x).values) for x in comp
        )
        if covers:
            final.append(rep)
        else:
            fallback.append(idx)
            final.extend(characteristic(system, x) for x in comp)
    certified = multi_span(system, final).dim == system.size
    return GeneratorReport(final, len(final), certified, fallback)


@dataclass
class PushforwardReport:
    functions: list[FuncOnX]
    certified: bool
    averaged: bool


def pushforward_generators(
    source: FiniteDynSystem,
    target: FiniteDynSystem,
    pi: list[int],
    fs: list[FuncOnX],
) -> PushforwardReport:
    """Transfer generators along an equivariant surjection.

    Functions constant on fibers push forward directly; others are
    averaged over the fiber, which is flagged in the report.
    """
    if len(pi) != source.size:
        raise DimensionMismatch("pi must be defined on every source point")
    if set(pi) != set(range(target.size)):
        raise NotSurjective("pi does not cover the target")
    for x in range(source.size):
        if pi[source.sigma[x]] != target.sigma[pi[x]]:
            raise NotEquivariant("pi does not intertwine the dynamics")
    fibers = [[x for x in range(source.size) if pi[x] == y] for y in range(target.size)]
    averaged = False
    images = []
    for f in fs:
        vals = []
        for y in range(target.size):
            fiber_vals = [f.values[x] for x in fibers[y]]
            if all(v == fiber_vals[0] for v in fiber_vals):
                vals.append(fiber_vals[0])
            else:
                averaged = True
                total = GR_ZERO
                for v in fiber_vals:
                    total = total + v
                vals.append(GaussRational(total.re / len(fiber_vals), total.im / len(fiber_vals)))
        images.append(FuncOnX(target, tuple(vals)))
    certified = multi_span(target, images).dim == target.size
    return PushforwardReport(images, certified, averaged)


# ----------------------------------------------------------------------
# the polynomial model: X = [-1, 1], sigma(t) = t^2

@dataclass(frozen=True)
class PolyFunc:
    """A polynomial with exact rational coefficients, low degree first."""

    coeffs: tuple[QQ, ...]

    def __post_init__(self) -> None:
        cs = [QQ(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else -1

    def compose_square(self) -> PolyFunc:
        """p(t) -> p(t^2), the pullback along the square map."""
        out = [QQ(0)] * (2 * len(self.coeffs))
        for k, c in enumerate(self.coeffs):
            out[2 * k] = c
        return PolyFunc(tuple(out))

    def __mul__(self, other: PolyFunc) -> PolyFunc:
        if not self.coeffs or not other.coeffs:
            return PolyFunc(())
        out = [QQ(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return PolyFunc(tuple(out))

    def vector(self, cap: int) -> tuple[QQ, ...]:
        if self.degree() > cap:
            raise DegreeOverflow(
                f"degree {self.degree()} exceeds the cap {cap}"
            )
        out = list(self.coeffs) + [QQ(0)] * (cap + 1 - len(self.coeffs))
        return tuple(out)


def poly(*coeffs) -> PolyFunc:
    return PolyFunc(tuple(QQ(c) for c in coeffs))


@dataclass
class PolySpan:
    cap: int
    basis: SpanBasis
    iterates: list[PolyFunc]

    def membership(self, g: PolyFunc) -> bool:
        return self.basis.contains(g.vector(self.cap))


def poly_cyclic_subspace(f: PolyFunc, depth: int, cap: int) -> PolySpan:
    """Exact span of {1, f, f o sigma, ..., f o sigma^depth} in monomial
    coordinates; raises DegreeOverflow when a substitution leaves the cap."""
    iterates = [f]
    for _ in range(depth):
        nxt = iterates[-1].compose_square()
        if nxt.degree() > cap:
            raise DegreeOverflow(
                f"iterate degree {nxt.degree()} exceeds the cap {cap}"
            )
        iterates.append(nxt)
    vectors = [poly(1).vector(cap)] + [p.vector(cap) for p in iterates]
    return PolySpan(cap, span_of(vectors, cap + 1), iterates)


# ----------------------------------------------------------------------
# scenario-file parsing

def system_from_json(data: dict) -> FiniteDynSystem:
    return FiniteDynSystem(int(data["size"]), tuple(int(x) for x in data["sigma"]))


def value_from_json(v) -> GaussRational:
    if isinstance(v, int):
        return GaussRational(QQ(v))
    if isinstance(v, (list, tuple)):
        if len(v) == 2:
            return GaussRational(QQ(int(v[0]), int(v[1])))
        if len(v) == 4:
            return GaussRational(QQ(int(v[0]), int(v[1])), QQ(int(v[2]), int(v[3])))
    raise InvalidInput(f"cannot parse the exact value {v!r}")


def func_from_json(system: FiniteDynSystem, values) -> FuncOnX:
    return FuncOnX(system, tuple(value_from_json(v) for v in values))
