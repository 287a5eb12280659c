"""Windowed numerical realization of the concrete representation on
l2(M) (x) l2(R^x).

The generators act on elementary tensors by
    S_r (v_n (x) u_s) = v_n (x) u_{rs}
    U^m (v_n (x) u_r) = v_{m r + n} (x) u_r
so on a finite window every operator is a partial permutation matrix with
0/1 entries.  Identities are only asserted on interior vectors: basis
vectors whose whole image chain under every factor of both sides stays in
the window.  That removes truncation artifacts by construction, so the
reported residuals are rounding-level or exactly zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import sparse

from .domains import DOMAIN_Z, DomainElem, divides, one, units, zelem, gauss
from .errors import (
    EmptyInterior,
    InfiniteQuotient,
    InvalidInput,
    OutOfWindow,
    WindowTooSmall,
)
from .modules import (
    ModuleElem,
    ModulePresentation,
    QuotientMap,
    SubmoduleDesc,
    is_submodule,
    quotient_module,
    scalar_action,
)
from .semicross import SemicrossedElem, sc_multiply


def semigroup_window(domain: str, bound: int) -> tuple[DomainElem, ...]:
    """Nonzero indices with |r| <= bound (Z) or norm(r) <= bound (Z[i]),
    in canonical order."""
    if bound < 1:
        raise InvalidInput("semigroup bound must be at least 1")
    out = []
    if domain == DOMAIN_Z:
        for k in range(1, bound + 1):
            out.append(zelem(k))
            out.append(zelem(-k))
    else:
        reach = int(math.isqrt(bound))
        for a in range(-reach, reach + 1):
            for b in range(-reach, reach + 1):
                if (a or b) and a * a + b * b <= bound:
                    out.append(gauss(a, b))
    return tuple(sorted(out, key=lambda r: r.sort_key()))


def module_window(pres: ModulePresentation, box: int | None) -> tuple[ModuleElem, ...]:
    """Free coordinates in [-box, box], torsion coordinates complete."""
    a = pres.free_rank
    if a > 0:
        if box is None:
            raise InvalidInput("an infinite module needs a box bound")
        if box < 0:
            raise InvalidInput("box bound must be nonnegative")
    ranges = [range(-box, box + 1) for _ in range(a)]
    ranges += [range(d) for d in pres.invariant_factors]
    import itertools

    elems = [pres.element(c) for c in itertools.product(*ranges)]
    return tuple(sorted(elems, key=lambda m: m.coords))


@dataclass(frozen=True)
class FockWindow:
    """A finite truncation of the canonical basis."""

    module_window: tuple[ModuleElem, ...]
    semigroup_window: tuple[DomainElem, ...]

    def __post_init__(self) -> None:
        if not self.module_window or not self.semigroup_window:
            raise WindowTooSmall("windows must be nonempty")
        mod_set = {m.coords for m in self.module_window}
        for m in self.module_window:
            if (-m).coords not in mod_set:
                raise InvalidInput("module window must be symmetric under negation")
        semi_set = {r for r in self.semigroup_window}
        domain = self.semigroup_window[0].domain
        for r in self.semigroup_window:
            if r.is_zero():
                raise InvalidInput("semigroup window contains zero")
            for u in units(domain):
                if u * r not in semi_set:
                    raise InvalidInput(
                        "semigroup window must be closed under unit multiplication"
                    )


def default_window(
    pres: ModulePresentation, module_box: int | None, semigroup_bound: int
) -> FockWindow:
    return FockWindow(
        module_window(pres, module_box),
        semigroup_window(pres.domain, semigroup_bound),
    )


class FockRep:
    """Sparse-matrix realization of the generators on one window.

    For a quotient representation the U-indices live in the source module
    and are pushed onto cosets through the projection; the plain
    representation has projection None and source == space.
    """

    def __init__(
        self,
        source: ModulePresentation,
        space: ModulePresentation,
        projection: QuotientMap | None,
        window: FockWindow,
    ):
        if window.module_window[0].presentation != space:
            raise InvalidInput("module window over the wrong presentation")
        if window.semigroup_window[0].domain != source.domain:
            raise InvalidInput("semigroup window over the wrong domain")
        if not any(m.is_zero() for m in window.module_window):
            raise WindowTooSmall("module window lacks 0")
        if one(source.domain) not in window.semigroup_window:
            raise WindowTooSmall("semigroup window lacks 1")
        self.source = source
        self.space = space
        self.projection = projection
        self.window = window
        self.mod_elems = list(window.module_window)
        self.semi_elems = list(window.semigroup_window)
        self.n_mod = len(self.mod_elems)
        self.n_semi = len(self.semi_elems)
        self.size = self.n_mod * self.n_semi
        self.basis = [(n, r) for n in self.mod_elems for r in self.semi_elems]
        self._mod_index = {m.coords: i for i, m in enumerate(self.mod_elems)}
        self._semi_index = {r: j for j, r in enumerate(self.semi_elems)}
        self._mod_coords = [m.coords for m in self.mod_elems]
        self._perm_cache: dict = {}
        self._mat_cache: dict = {}

    # ------------------------------------------------------------------
    # permutation arrays: perm[col] = row index, or -1 for a zero column

    def basis_index(self, n: ModuleElem, r: DomainElem) -> int:
        return self._mod_index[n.coords] * self.n_semi + self._semi_index[r]

    def _u_key(self, m: ModuleElem):
        return ("U", m.coords)

    def op_perm(self, kind: str, param) -> np.ndarray:
        if kind == "U":
            key = ("U", param.coords)
        else:
            key = (kind, param)
        cached = self._perm_cache.get(key)
        if cached is None:
            cached = self._build_perm(kind, param)
            self._perm_cache[key] = cached
        return cached

    def _build_perm(self, kind: str, param) -> np.ndarray:
        if kind == "U":
            return self._build_u_perm(param)
        if kind in ("S", "Sstar"):
            return self._build_s_perm(kind, param)
        raise InvalidInput(f"unknown operator kind {kind!r}")

    def _check_u_param(self, m: ModuleElem) -> None:
        if m.presentation != self.source:
            raise InvalidInput("U-index outside the source module")
        if self.projection is None and m.coords not in self._mod_index:
            raise OutOfWindow(f"module element {m.coords} outside the window")

    def _check_s_param(self, r: DomainElem) -> None:
        if r not in self._semi_index:
            raise OutOfWindow(f"semigroup index {r!r} outside the window")

    def _build_u_perm(self, m: ModuleElem) -> np.ndarray:
        self._check_u_param(m)
        a = self.space.free_rank
        moduli = self.space.invariant_factors
        perm = np.full(self.size, -1, dtype=np.int64)
        for j, r in enumerate(self.semi_elems):
            shift = scalar_action(r, m)
            if self.projection is not None:
                shift = self.projection(shift)
            sc = shift.coords
            for i, nc in enumerate(self._mod_coords):
                tc = tuple(
                    nc[k] + sc[k]
                    if k < a
                    else (nc[k] + sc[k]) % moduli[k - a]
                    for k in range(len(nc))
                )
                t = self._mod_index.get(tc, -1)
                if t >= 0:
                    perm[i * self.n_semi + j] = t * self.n_semi + j
        return perm

    def _build_s_perm(self, kind: str, r: DomainElem) -> np.ndarray:
        self._check_s_param(r)
        semi_map = np.full(self.n_semi, -1, dtype=np.int64)
        for j, s in enumerate(self.semi_elems):
            if kind == "S":
                t = self._semi_index.get(r * s, -1)
            else:
                q = divides(r, s)
                t = self._semi_index.get(q, -1) if q is not None else -1
            semi_map[j] = t
        offsets = np.arange(self.n_mod, dtype=np.int64) * self.n_semi
        tiled = np.tile(semi_map, self.n_mod)
        base = np.repeat(offsets, self.n_semi)
        perm = np.where(tiled >= 0, base + tiled, -1)
        return perm

    # ------------------------------------------------------------------
    # sparse matrices

    def op_matrix(self, kind: str, param) -> sparse.csr_matrix:
        if kind == "U":
            key = ("U", param.coords)
        else:
            key = (kind, param)
        cached = self._mat_cache.get(key)
        if cached is None:
            perm = self.op_perm(kind, param)
            cols = np.flatnonzero(perm >= 0)
            rows = perm[cols]
            data = np.ones(len(cols), dtype=np.complex128)
            cached = sparse.csr_matrix(
                (data, (rows, cols)), shape=(self.size, self.size)
            )
            self._mat_cache[key] = cached
        return cached

    def identity_matrix(self) -> sparse.csr_matrix:
        return sparse.identity(self.size, dtype=np.complex128, format="csr")

    # ------------------------------------------------------------------
    # words: a word [op1, op2, ..., opk] denotes op1 . op2 ... opk, i.e.
    # opk acts first

    def word_perm(self, word) -> np.ndarray:
        cur = np.arange(self.size, dtype=np.int64)
        for kind, param in reversed(word):
            perm = self.op_perm(kind, param)
            nxt = np.full(self.size, -1, dtype=np.int64)
            valid = cur >= 0
            nxt[valid] = perm[cur[valid]]
            cur = nxt
        return cur

    def word_matrix(self, word) -> sparse.csr_matrix:
        mat = self.identity_matrix()
        for kind, param in reversed(word):
            mat = self.op_matrix(kind, param) @ mat
        return mat


def build_fock(pres: ModulePresentation, window: FockWindow) -> FockRep:
    """The plain representation: U-indices and basis cosets coincide."""
    return FockRep(pres, pres, None, window)


def build_quotient_fock(
    pres: ModulePresentation,
    sub: SubmoduleDesc,
    semigroup: tuple[DomainElem, ...],
    coset_box: int | None = None,
) -> FockRep:
    """Representation on cosets of the subgroup generated by sub.

    The subgroup need not be a submodule: that failure mode is exactly
    what quotient_covariance_test detects.  Infinite quotients need a
    coset box bound.
    """
    target, qmap = quotient_module(pres, sub, module_level=False)
    if not target.is_finite() and coset_box is None:
        raise InfiniteQuotient(
            "the quotient is infinite; supply a coset box bound"
        )
    window = FockWindow(module_window(target, coset_box), semigroup)
    return FockRep(pres, target, qmap, window)


# ----------------------------------------------------------------------
# identity verification

IDENTITY_NAMES = (
    "unitary",
    "isometry",
    "group_rep",
    "semigroup_rep",
    "covariance",
    "additive_semigroup",
    "additive_module",
    "unit_element",
)


def default_m_sample(rep: FockRep, radius: int = 2) -> list[ModuleElem]:
    """Distinct U-indices with every coordinate in [-radius, radius]."""
    import itertools

    pres = rep.source
    coords_ranges = [range(-radius, radius + 1)] * pres.rank
    seen = set()
    out = []
    for c in itertools.product(*coords_ranges):
        m = pres.element(c)
        if m.coords not in seen:
            seen.add(m.coords)
            out.append(m)
    return out


def _default_r_sample(domain: str) -> list[DomainElem]:
    if domain == DOMAIN_Z:
        return [zelem(1), zelem(-1), zelem(2), zelem(3)]
    return [gauss(1, 0), gauss(0, 1), gauss(1, 1)]


def _u_in_window(rep: FockRep, m: ModuleElem) -> bool:
    if rep.projection is not None:
        return True
    return m.coords in rep._mod_index


def _s_in_window(rep: FockRep, r: DomainElem) -> bool:
    return r in rep._semi_index


def _identity_tuples(rep, name, m_sample, r_sample):
    """Yield (lhs_word, rhs_word) pairs; None marks a skipped tuple whose
    composite indices leave the declared windows."""
    u1 = one(rep.source.domain)
    if name == "unitary":
        for m in m_sample:
            if _u_in_window(rep, m) and _u_in_window(rep, -m):
                yield ([("U", -m), ("U", m)], [])
            else:
                yield None
    elif name == "isometry":
        for r in r_sample:
            if _s_in_window(rep, r):
                yield ([("Sstar", r), ("S", r)], [])
            else:
                yield None
    elif name == "group_rep":
        for m in m_sample:
            for n in m_sample:
                if all(_u_in_window(rep, x) for x in (m, n, m + n)):
                    yield ([("U", m), ("U", n)], [("U", m + n)])
                else:
                    yield None
    elif name == "semigroup_rep":
        for r in r_sample:
            for s in r_sample:
                if all(_s_in_window(rep, x) for x in (r, s, r * s)):
                    yield ([("S", r), ("S", s)], [("S", r * s)])
                else:
                    yield None
    elif name == "covariance":
        for m in m_sample:
            for r in r_sample:
                rm = scalar_action(r, m)
                if _s_in_window(rep, r) and _u_in_window(rep, m) and _u_in_window(rep, rm):
                    yield ([("U", m), ("S", r)], [("S", r), ("U", rm)])
                else:
                    yield None
    elif name == "additive_semigroup":
        for m in m_sample:
            for r in r_sample:
                for s in r_sample:
                    rs = r + s
                    if rs.is_zero():
                        continue
                    rm, sm = scalar_action(r, m), scalar_action(s, m)
                    ok = (
                        _s_in_window(rep, rs)
                        and _u_in_window(rep, m)
                        and _u_in_window(rep, rm)
                        and _u_in_window(rep, sm)
                    )
                    if ok:
                        yield (
                            [("U", m), ("S", rs)],
                            [("S", rs), ("U", rm), ("U", sm)],
                        )
                    else:
                        yield None
    elif name == "additive_module":
        for m in m_sample:
            for n in m_sample:
                for r in r_sample:
                    if not _s_in_window(rep, r):
                        yield None
                        continue
                    rm, rn = scalar_action(r, m), scalar_action(r, n)
                    ok = all(
                        _u_in_window(rep, x) for x in (m + n, rm, rn)
                    )
                    if ok:
                        yield (
                            [("U", m + n), ("S", r)],
                            [("S", r), ("U", rm), ("U", rn)],
                        )
                    else:
                        yield None
    elif name == "unit_element":
        yield ([("S", u1)], [])
        yield ([("U", rep.source.zero())], [])
    else:
        raise InvalidInput(f"unknown identity {name!r}")


def _word_pair_residual(
    rep: FockRep, lhs, rhs, with_matrices: bool
) -> tuple[int, float]:
    """Interior count and exact residual of two operator words.

    The words are compositions of 0/1 partial permutations, so a column
    of either side is a single basis vector (weight exactly 1.0) or zero;
    the residual on interior columns is 0 when the chased targets agree
    and sqrt(2) when they do not.  The sparse-matrix path recomputes the
    same number from the complex matrices as a cross-check.
    """
    p1 = rep.word_perm(lhs)
    p2 = rep.word_perm(rhs)
    cols = np.flatnonzero((p1 >= 0) & (p2 >= 0))
    if cols.size == 0:
        return 0, 0.0
    residual = 0.0 if bool(np.all(p1[cols] == p2[cols])) else math.sqrt(2.0)
    if with_matrices:
        m1 = rep.word_matrix(lhs)
        m2 = rep.word_matrix(rhs)
        diff = (m1 - m2).tocsc()[:, cols]
        mat_res = float(np.max(np.abs(diff.data))) if diff.nnz else 0.0
        residual = max(residual, mat_res)
    return int(cols.size), residual


def verify_proposition(
    rep: FockRep,
    m_sample: list[ModuleElem] | None = None,
    r_sample: list[DomainElem] | None = None,
    tol: float = 1e-9,
    matrix_check_tuples: int = 2,
) -> dict:
    """Check the eight generator identities on interior vectors.

    Returns a report with one entry per identity: interior coverage,
    maximal residual, and a pass flag at the given tolerance.  Raises
    EmptyInterior when an identity has no interior vector at all.
    """
    if m_sample is None:
        m_sample = default_m_sample(rep)
    if r_sample is None:
        r_sample = _default_r_sample(rep.source.domain)
    report = {"basis_size": rep.size, "tolerance": tol, "identities": []}
    all_pass = True
    for name in IDENTITY_NAMES:
        interior_count = 0
        interior_min = None
        max_residual = 0.0
        checked = 0
        skipped = 0
        extra = []
        for tup in _identity_tuples(rep, name, m_sample, r_sample):
            if tup is None:
                skipped += 1
                continue
            lhs, rhs = tup
            count, res = _word_pair_residual(
                rep, lhs, rhs, with_matrices=checked < matrix_check_tuples
            )
            interior_count += count
            interior_min = count if interior_min is None else min(interior_min, count)
            max_residual = max(max_residual, res)
            checked += 1
            if name == "unitary":
                extra.append(lhs[1][1])
        if name == "unitary":
            # adjoint comparison: U(m)^* agrees with U(-m) columnwise
            for m in extra:
                adj = rep.op_matrix("U", m).getH()
                neg = rep.op_matrix("U", -m)
                mask = rep.op_perm("U", -m) >= 0
                cols = np.flatnonzero(mask)
                diff = (adj - neg).tocsc()[:, cols]
                res = float(np.max(np.abs(diff.data))) if diff.nnz else 0.0
                max_residual = max(max_residual, res)
        if (checked == 0 and skipped > 0) or (checked > 0 and interior_count == 0):
            raise EmptyInterior(
                f"identity {name!r} has no interior vector; enlarge the window"
            )
        passed = checked > 0 and max_residual <= tol
        all_pass = all_pass and passed
        report["identities"].append(
            {
                "name": name,
                "interior_count": interior_count,
                "interior_min": 0 if interior_min is None else interior_min,
                "max_residual": max_residual,
                "tuples_checked": checked,
                "tuples_skipped": skipped,
                "pass": passed,
            }
        )
    report["pass"] = all_pass
    return report


# ----------------------------------------------------------------------
# semicrossed elements as matrices

def _monomial_words(x: SemicrossedElem) -> list[list]:
    words = []
    for r, a in x.terms.items():
        for m in a.terms:
            words.append([("S", r), ("U", m)])
    return words


def represent_semicrossed(rep: FockRep, x: SemicrossedElem) -> sparse.csr_matrix:
    """sum_r S(r) (sum_m a_r(m) U(m)) as a sparse complex matrix."""
    if x.presentation != rep.source:
        raise InvalidInput("element over a different module")
    total = sparse.csr_matrix((rep.size, rep.size), dtype=np.complex128)
    for r, a in x.terms.items():
        if not _s_in_window(rep, r):
            raise OutOfWindow(f"index {r!r} outside the semigroup window")
        acc = sparse.csr_matrix((rep.size, rep.size), dtype=np.complex128)
        for m, c in a.terms.items():
            if not _u_in_window(rep, m):
                raise OutOfWindow(f"support element {m.coords} outside the window")
            acc = acc + rep.op_matrix("U", m) * complex(c)
        total = total + rep.op_matrix("S", r) @ acc
    return total


def product_interior(
    rep: FockRep, x: SemicrossedElem, y: SemicrossedElem
) -> np.ndarray:
    """Columns whose chains stay in-window for every monomial of y, then
    every monomial of x applied after it, and every monomial of x*y."""
    mask = np.ones(rep.size, dtype=bool)
    words_x = _monomial_words(x)
    words_y = _monomial_words(y)
    for wy in words_y:
        py = rep.word_perm(wy)
        mask &= py >= 0
        for wx in words_x:
            px = rep.word_perm(wx)
            valid = py >= 0
            ok = np.zeros(rep.size, dtype=bool)
            ok[valid] = px[py[valid]] >= 0
            mask &= ok
    for wz in _monomial_words(sc_multiply(x, y)):
        mask &= rep.word_perm(wz) >= 0
    return mask


def product_consistency(
    rep: FockRep, x: SemicrossedElem, y: SemicrossedElem, tol: float = 1e-9
) -> tuple[bool, float, int]:
    """represent(x) @ represent(y) vs represent(x*y) on interior columns."""
    mask = product_interior(rep, x, y)
    cols = np.flatnonzero(mask)
    mx = represent_semicrossed(rep, x)
    my = represent_semicrossed(rep, y)
    mz = represent_semicrossed(rep, sc_multiply(x, y))
    diff = (mx @ my - mz).tocsc()[:, cols]
    residual = float(np.max(np.abs(diff.data))) if diff.nnz else 0.0
    return residual <= tol, residual, int(cols.size)


# ----------------------------------------------------------------------
# quotient covariance

def quotient_covariance_test(
    pres: ModulePresentation,
    sub: SubmoduleDesc,
    r_sample: list[DomainElem],
    tol: float = 1e-9,
    m_sample: list[ModuleElem] | None = None,
    semigroup_bound: int | None = None,
    coset_box: int | None = 6,
) -> tuple[bool, dict]:
    """Do the coset-space operators represent the covariance structure?

    Checks that U(r*n) acts as the identity on interior vectors for every
    generator n and sampled r, and that the covariance relation holds on
    the quotient space.  The observed verdict is predicted to equal
    is_submodule(sub); the report states both.
    """
    if semigroup_bound is None:
        semigroup_bound = max([2] + [r.norm() for r in r_sample])
    semis = semigroup_window(pres.domain, semigroup_bound)
    rep = build_quotient_fock(pres, sub, semis, coset_box=coset_box)
    if m_sample is None:
        m_sample = default_m_sample(rep, radius=1)
    ident = np.arange(rep.size, dtype=np.int64)
    trivial_ok = True
    max_residual = 0.0
    details = []
    for n in sub.generators:
        for r in r_sample:
            rn = scalar_action(r, n)
            perm = rep.op_perm("U", rn)
            mask = perm >= 0
            cols = np.flatnonzero(mask)
            if cols.size == 0:
                raise EmptyInterior("no interior vector for a trivialization check")
            fixed = bool(np.all(perm[cols] == ident[cols]))
            mat = rep.op_matrix("U", rn).tocsc()[:, cols]
            eye = sparse.identity(rep.size, dtype=np.complex128, format="csc")[:, cols]
            diff = mat - eye
            res = float(np.max(np.abs(diff.data))) if diff.nnz else 0.0
            max_residual = max(max_residual, res)
            ok = fixed and res <= tol
            trivial_ok = trivial_ok and ok
            details.append(
                {
                    "generator": list(n.coords),
                    "scalar": [r.re, r.im],
                    "acts_as_identity": ok,
                    "interior": int(cols.size),
                }
            )
    covariance_ok = True
    for m in m_sample:
        for r in r_sample:
            rm = scalar_action(r, m)
            lhs = [("U", m), ("S", r)]
            rhs = [("S", r), ("U", rm)]
            count, res = _word_pair_residual(rep, lhs, rhs, with_matrices=False)
            if count == 0:
                continue
            max_residual = max(max_residual, res)
            covariance_ok = covariance_ok and res <= tol
    observed = trivial_ok and covariance_ok
    predicted = is_submodule(sub)
    report = {
        "observed_covariant": observed,
        "predicted_is_submodule": predicted,
        "agree": observed == predicted,
        "trivialization_ok": trivial_ok,
        "covariance_ok": covariance_ok,
        "max_residual": max_residual,
        "checks": details,
        "basis_size": rep.size,
    }
    return observed, report


def matrix_coordinate_dump(mat: sparse.spmatrix) -> str:
    """Text dump in "row col re im" coordinate format, sorted."""
    coo = mat.tocoo()
    rows = sorted(zip(coo.row.tolist(), coo.col.tolist(), coo.data.tolist()))
    lines = [f"{r} {c} {v.real:.17g} {v.imag:.17g}" for r, c, v in rows]
    return "\n".join(lines)
