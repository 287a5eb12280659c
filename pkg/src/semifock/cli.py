"""Scenario-driven command line front end.

A scenario file (JSON, or TOML with the same keys) names a verification
suite and its parameters; running it exercises the mapped operations and
emits a human-readable summary plus an optional machine-readable JSON
report.  Exit codes: 0 all checks passed, 1 a check failed, 2 the file
could not be parsed or names an unknown kind.

Every scenario carries an RNG seed (default 0); rerunning the same file
with the same seed produces a byte-identical JSON report.
"""

from __future__ import annotations

import argparse
import json
import math
import random
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction as QQ
from pathlib import Path

try:
    import tomllib
except ImportError:  # Python 3.10
    import tomli as tomllib

from . import dynamics as dyn
from . import fock, groupalg, semicross
from .domains import GaussRational, elem_from_json, zelem
from .errors import InvalidInput, ParseError, SemifockError, UnsupportedKind
from .modules import (
    SubmoduleDesc,
    envelope_module,
    localize,
    module_from_json,
    qmodule_scalar,
    qmodule_solve,
    subgroup_equal,
    submodule_membership,
    torsion_decomposition,
)

REPORT_VERSION = 1


def _load_scenario(path: Path) -> dict:
    try:
        text = path.read_bytes()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    if path.suffix.lower() == ".toml":
        try:
            return tomllib.loads(text.decode("utf-8"))
        except (tomllib.TOMLDecodeError, UnicodeDecodeError) as exc:
            raise ParseError(f"invalid TOML in {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {path}: {exc}") from exc


def _module_of(params: dict, default=None):
    data = params.get("module")
    if data is None:
        if default is None:
            raise ParseError("scenario needs a 'module' entry")
        return default
    return module_from_json(data)


def _elems_of(pres, items):
    return [elem_from_json(pres.domain, x) for x in items]


# ----------------------------------------------------------------------
# scenario handlers: params, seed, tol -> (passed, report fragment)

def _run_fock_verify(params: dict, seed: int, tol: float):
    pres = _module_of(params)
    box = params.get("module_box", 64 if not pres.is_finite() else None)
    bound = params.get("semigroup_bound", 12)
    rep = fock.build_fock(pres, fock.default_window(pres, box, bound))
    m_sample = None
    if "m_radius" in params:
        m_sample = fock.default_m_sample(rep, radius=int(params["m_radius"]))
    r_sample = None
    if "r_sample" in params:
        r_sample = _elems_of(pres, params["r_sample"])
    report = fock.verify_proposition(rep, m_sample=m_sample, r_sample=r_sample, tol=tol)
    dump = params.get("dump_operator")
    if dump:
        kind = dump["kind"]
        param = (
            pres.element(dump["param"])
            if kind == "U"
            else elem_from_json(pres.domain, dump["param"])
        )
        text = fock.matrix_coordinate_dump(rep.op_matrix(kind, param))
        Path(dump["path"]).write_text(text + "\n", encoding="utf-8")
        report["dumped_to"] = dump["path"]
    return report["pass"], report


def _run_envelope(params: dict, seed: int, tol: float):
    pres = _module_of(params)
    rng = random.Random(seed)
    samples = int(params.get("samples", 20))
    dec = torsion_decomposition(pres)
    report: dict = {"has_torsion": dec.has_torsion}
    if dec.has_torsion:
        space, emb, kernel = localize(pres)
        report["localized_dim"] = space.dim
        kernel_matches = subgroup_equal(kernel, dec.torsion)
        sampled_ok = all(
            submodule_membership(dec.torsion, g) for g in kernel.generators
        )
        report["kernel_equals_torsion"] = kernel_matches and sampled_ok
        return report["kernel_equals_torsion"], report
    space, emb = envelope_module(pres)
    report["envelope_dim"] = space.dim
    injective = True
    for _ in range(samples):
        coords = [rng.randint(-9, 9) for _ in range(pres.rank)]
        m = pres.element(coords)
        if emb(m) == space.zero() and not m.is_zero():
            injective = False
    bijective = True
    for _ in range(samples):
        if pres.domain == "Z":
            r = zelem(rng.choice([x for x in range(-12, 13) if x != 0]))
        else:
            from .domains import gauss

            while True:
                r = gauss(rng.randint(-3, 3), rng.randint(-3, 3))
                if not r.is_zero():
                    break
        for v in space.basis():
            x = qmodule_solve(space, r, v)
            if qmodule_scalar(space, r, x) != v:
                bijective = False
    report["embedding_injective"] = injective
    report["scalar_action_bijective"] = bijective
    return injective and bijective, report


def _run_submodule_test(params: dict, seed: int, tol: float):
    pres = _module_of(params)
    sub = SubmoduleDesc.span(pres, params["subgroup"])
    r_sample = _elems_of(pres, params.get("r_sample", [1]))
    observed, report = fock.quotient_covariance_test(
        pres,
        sub,
        r_sample,
        tol=tol,
        coset_box=params.get("coset_box", 6),
        semigroup_bound=params.get("semigroup_bound"),
    )
    out = {
        "is_submodule": report["predicted_is_submodule"],
        "covariance": observed,
        "agree": report["agree"],
        "max_residual": report["max_residual"],
    }
    return report["agree"], out


def _run_trivialize(params: dict, seed: int, tol: float):
    pres = _module_of(params)
    facts = []
    ok = True
    if "subgroup" in params:
        sub = SubmoduleDesc.span(pres, params["subgroup"])
        got = groupalg.kernel_group(groupalg.induced_algebra_map(sub))
        match = subgroup_equal(got, sub)
        facts.append({"check": "quotient_kernel_equals_subgroup", "pass": match})
        ok = ok and match
    if "rotation" in params:
        p, q = (int(x) for x in params["rotation"])
        rep = groupalg.evaluation_at_rotation(pres, p, q)
        got = groupalg.kernel_group(rep)
        period = q // math.gcd(p, q)
        want = SubmoduleDesc.span(pres, [(period,)])
        match = subgroup_equal(got, want)
        facts.append(
            {"check": "rotation_kernel", "period": period, "pass": match}
        )
        ok = ok and match
    if params.get("counterexample"):
        # U^{1+k} - U^1 lands on 0 although neither exponent lies in N
        k = int(params.get("counterexample_k", 4))
        sub = SubmoduleDesc.span(pres, [(k,)])
        push = groupalg.induced_algebra_map(sub)
        witness = groupalg.monomial(pres, pres.element(1 + k)) - groupalg.monomial(
            pres, pres.element(1)
        )
        collapses = push(witness).is_zero()
        outside = not submodule_membership(sub, pres.element(1 + k))
        facts.append(
            {
                "check": "span_preimage_exceeds_subalgebra",
                "pass": collapses and outside,
            }
        )
        ok = ok and collapses and outside
    if not facts:
        raise ParseError("trivialize scenario needs 'subgroup' or 'rotation'")
    return ok, {"facts": facts}


def _run_product_decomp(params: dict, seed: int, tol: float):
    pres = _module_of(params)
    rng = random.Random(seed)
    samples = int(params.get("samples", 100))
    split = semicross.units_positives_split(pres.domain)
    pool = None
    if "indices" in params:
        pool = _elems_of(pres, params["indices"])
    decomposition_ok = semicross.product_decomposition_check(
        pres, split, samples, rng, index_pool=pool
    )
    diag_pairs = int(params.get("diagonal_pairs", 50))
    diag_ok = True
    for _ in range(diag_pairs):
        x = _random_unit_indexed(pres, rng)
        y = _random_unit_indexed(pres, rng)
        lhs = semicross.diagonal_part(semicross.sc_multiply(x, y))
        rhs = semicross.sc_multiply(
            semicross.diagonal_part(x), semicross.diagonal_part(y)
        )
        diag_ok = diag_ok and lhs == rhs
    report = {
        "structure_constants_agree": decomposition_ok,
        "diagonal_multiplicative": diag_ok,
        "samples": samples,
    }
    return decomposition_ok and diag_ok, report


def _random_unit_indexed(pres, rng):
    from .domains import units

    terms = []
    for _ in range(rng.randint(1, 2)):
        r = rng.choice(units(pres.domain))
        coords = [rng.randint(-3, 3) for _ in range(pres.rank)]
        c = GaussRational(QQ(rng.randint(-3, 3)), QQ(rng.randint(-2, 2)))
        if c.is_zero():
            c = GaussRational(QQ(1))
        terms.append((r, groupalg.monomial(pres, pres.element(coords), c)))
    return semicross.SemicrossedElem(pres, terms)


def _value_json(v: GaussRational) -> list:
    return [v.re.numerator, v.re.denominator, v.im.numerator, v.im.denominator]


def _run_dynamics(params: dict, seed: int, tol: float):
    system = dyn.system_from_json(params["system"])
    comps = dyn.orbit_components(system)
    verdict = dyn.cyclicity_verdict(system)
    gens = dyn.generators_from_orbits(system)
    dense = dyn.dense_orbit_generation(system)
    span = dyn.multi_span(system, gens.functions)
    witness = verdict["witness"]
    report = {
        "components": len(comps),
        "component_members": [list(c) for c in comps],
        "cyclicity": verdict["verdict"],
        "witness": None if witness is None else [_value_json(v) for v in witness.values],
        "generator_count": gens.count,
        "certified": gens.certified,
        "dimension": span.dim,
        "basis": [[_value_json(v) for v in row] for row in span.rows],
        "dense_orbit_witness": dense is not None,
    }
    ok = gens.certified and span.dim == system.size
    expect = params.get("expect", {})
    for key in ("components", "cyclicity", "generator_count", "certified", "dimension"):
        if key in expect:
            match = report[key] == expect[key]
            report[f"expected_{key}"] = expect[key]
            ok = ok and match
    return ok, report


def _run_poly_example(params: dict, seed: int, tol: float):
    cap = int(params.get("degree_cap", 8))
    depth = int(params.get("depth", 3))
    coeffs = params.get("poly", [0, 1])
    f = dyn.PolyFunc(tuple(QQ(c) for c in coeffs))
    span = dyn.poly_cyclic_subspace(f, depth, cap)
    report = {
        "basis_pivots": sorted(span.basis.pivots),
        "dimension": span.basis.dim,
    }
    ok = True
    for item in params.get("expect_member", []):
        got = span.membership(dyn.PolyFunc(tuple(QQ(c) for c in item)))
        ok = ok and got
    for item in params.get("expect_not_member", []):
        got = span.membership(dyn.PolyFunc(tuple(QQ(c) for c in item)))
        ok = ok and not got
    if params.get("cube_check", True):
        cube = f * f * f
        in_span = span.membership(cube) if cube.degree() <= cap else True
        report["cube_in_span"] = in_span
        report["not_an_algebra"] = not in_span
        ok = ok and not in_span
    if "expect_pivots" in params:
        ok = ok and report["basis_pivots"] == list(params["expect_pivots"])
    return ok, report


SCENARIOS = {
    "fock-verify": (
        _run_fock_verify,
        "windowed identity suite for the generator relations",
        {"module": "module description", "module_box": "int", "semigroup_bound": "int",
         "m_radius": "int", "r_sample": "[elem]", "dump_operator": "{kind,param,path}?"},
    ),
    "envelope": (
        _run_envelope,
        "localization / envelope module checks (injectivity, bijective scalars)",
        {"module": "module description", "samples": "int"},
    ),
    "submodule-test": (
        _run_submodule_test,
        "subgroup vs submodule via quotient-space covariance",
        {"module": "module description", "subgroup": "[[coords]]",
         "r_sample": "[elem]", "coset_box": "int"},
    ),
    "trivialize": (
        _run_trivialize,
        "kernel groups of quotient maps and rotation evaluations",
        {"module": "module description", "subgroup": "[[coords]]?",
         "rotation": "[p, q]?", "counterexample": "bool?"},
    ),
    "product-decomp": (
        _run_product_decomp,
        "units-times-positives decomposition and the unit diagonal",
        {"module": "module description", "samples": "int", "indices": "[elem]?",
         "diagonal_pairs": "int"},
    ),
    "dynamics": (
        _run_dynamics,
        "orbit components, cyclicity, and orbit generators of a finite system",
        {"system": "{size, sigma}", "expect": "{components?, cyclicity?, ...}"},
    ),
    "poly-example": (
        _run_poly_example,
        "the square-map polynomial span and its non-algebra witness",
        {"degree_cap": "int", "depth": "int", "poly": "[coeffs]",
         "expect_member": "[[coeffs]]?", "expect_not_member": "[[coeffs]]?"},
    ),
}


def run_scenario_data(data: dict, seed: int | None = None, tol: float | None = None) -> dict:
    kind = data.get("kind")
    if kind not in SCENARIOS:
        raise UnsupportedKind(f"unknown scenario kind {kind!r}")
    handler = SCENARIOS[kind][0]
    params = {k: v for k, v in data.items() if k not in ("kind", "seed", "tol")}
    eff_seed = int(data.get("seed", 0)) if seed is None else seed
    eff_tol = float(data.get("tol", 1e-9)) if tol is None else tol
    try:
        passed, fragment = handler(params, eff_seed, eff_tol)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad parameters for {kind!r}: {exc}") from exc
    except InvalidInput as exc:
        raise ParseError(f"bad parameters for {kind!r}: {exc}") from exc
    report = {
        "report_version": REPORT_VERSION,
        "kind": kind,
        "seed": eff_seed,
        "tolerance": eff_tol,
        "pass": bool(passed),
    }
    report.update(fragment)
    return report


def run_scenario(path: Path, seed: int | None, tol: float | None) -> dict:
    return run_scenario_data(_load_scenario(path), seed, tol)


def report_to_json(report) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def _print_human(report: dict, out) -> None:
    status = "PASS" if report["pass"] else "FAIL"
    print(f"[{status}] {report['kind']} (seed {report['seed']})", file=out)
    for key in sorted(report):
        if key in ("report_version", "kind", "seed", "pass", "identities", "checks"):
            continue
        print(f"  {key}: {report[key]}", file=out)
    for ident in report.get("identities", []):
        mark = "ok " if ident["pass"] else "BAD"
        print(
            f"  [{mark}] {ident['name']}: interior={ident['interior_count']}"
            f" max_residual={ident['max_residual']:.3g}",
            file=out,
        )


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="semifock",
        description="run verification scenarios for the semicrossed-product engine",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    runp = sub.add_parser("run", help="run one or more scenario files")
    runp.add_argument("scenario", nargs="+", type=Path)
    runp.add_argument("--json", type=Path, default=None, help="write a JSON report here")
    runp.add_argument("--seed", type=int, default=None, help="override the scenario seed")
    runp.add_argument("--tol", type=float, default=None, help="override the tolerance")
    runp.add_argument("--quiet", action="store_true", help="suppress the human summary")
    runp.add_argument(
        "--parallel", action="store_true",
        help="run independent scenarios concurrently",
    )
    listp = sub.add_parser("list-suites", help="describe the scenario kinds")
    listp.add_argument("--json", action="store_true", help="machine-readable catalog")

    args = parser.parse_args(argv)
    if args.command == "list-suites":
        if args.json:
            catalog = {
                kind: {"description": desc, "parameters": schema}
                for kind, (_, desc, schema) in sorted(SCENARIOS.items())
            }
            print(json.dumps(catalog, sort_keys=True, indent=2))
        else:
            for kind, (_, desc, schema) in sorted(SCENARIOS.items()):
                print(f"{kind}: {desc}")
                for key, val in schema.items():
                    print(f"    {key}: {val}")
        return 0

    try:
        if args.parallel and len(args.scenario) > 1:
            with ThreadPoolExecutor() as pool:
                reports = list(
                    pool.map(lambda p: run_scenario(p, args.seed, args.tol), args.scenario)
                )
        else:
            reports = [run_scenario(p, args.seed, args.tol) for p in args.scenario]
    except (ParseError, UnsupportedKind) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SemifockError as exc:
        print(f"check error: {exc}", file=sys.stderr)
        return 1

    if not args.quiet:
        for report in reports:
            _print_human(report, sys.stdout)
    if args.json is not None:
        if len(reports) == 1:
            payload = report_to_json(reports[0])
        else:
            payload = report_to_json(
                {"report_version": REPORT_VERSION, "reports": reports}
            )
        args.json.write_text(payload, encoding="utf-8")
    return 0 if all(r["pass"] for r in reports) else 1


if __name__ == "__main__":
    raise SystemExit(main())
