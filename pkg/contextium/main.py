"""Command line front end for contextium."""

import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Sequence

import numpy as np
from pydantic import ValidationError

from contextium.errors import ContextiumError, UsageError
from contextium.linalg import complex_pairs, fidelity, op_norm
from contextium.measures import global_bounds, mie, mie_with_diagnostics
from contextium.optimize import (
    OptimizationConfig,
    OptimizationProblem,
    certify,
    optimize_sum,
    smax_surface_sample,
)
from contextium.report import (
    ContextCheck,
    MajoranaReport,
    ValidationReport,
    dumps_csv,
    dumps_json,
    dumps_pairs_csv,
    format_pairs,
    format_table,
    kcbs_report,
    load_scenario,
    scenario_to_file,
)
from contextium.settings import Settings, get_settings
from contextium.spin import (
    Direction,
    StarPair,
    coefficient_discrepancy,
    max_uncertainty_residual,
    overlap_via_bargmann,
    state_from_stars,
    stars_from_state,
    triad_coefficients,
    variance_A,
)

logger = logging.getLogger(__name__)


def _parse_floats(text: str, count: int, what: str) -> list[float]:
    try:
        values = [float(x) for x in text.split(",")]
    except ValueError as exc:
        raise UsageError(f"cannot parse {what} {text!r}") from exc
    if len(values) != count:
        raise UsageError(f"{what} needs {count} comma-separated numbers, got {text!r}")
    return values


def parse_stars(text: str) -> StarPair:
    """'θm,φm;θn,φn' → StarPair."""
    parts = text.split(";")
    if len(parts) != 2:
        raise UsageError(f"stars must look like 'θm,φm;θn,φn', got {text!r}")
    (tm, pm), (tn, pn) = (_parse_floats(p, 2, "star") for p in parts)
    return StarPair.from_angles(tm, pm, tn, pn)


def parse_state(text: str) -> np.ndarray:
    """'re,im;re,im;re,im' → spin-1 amplitudes."""
    parts = text.split(";")
    if len(parts) != 3:
        raise UsageError(f"state must have three 're,im' amplitudes, got {text!r}")
    psi = np.array([complex(*_parse_floats(p, 2, "amplitude")) for p in parts])
    if np.linalg.norm(psi) == 0:
        raise UsageError("state has zero norm")
    return psi / np.linalg.norm(psi)


def parse_axis(text: str) -> Direction:
    theta, phi = _parse_floats(text, 2, "axis")
    return Direction.from_angles(theta, phi)


def _emit(args: argparse.Namespace, payload, table: Callable[[], str], csv: Callable[[], str]) -> str:
    if args.format == "json":
        return dumps_json(payload)
    if args.format == "csv":
        return csv()
    return table()


def cmd_mie(args: argparse.Namespace, settings: Settings) -> str:
    scenario = load_scenario(args.scenario)
    contexts = [scenario.context(args.context)] if args.context else list(scenario.contexts.values())
    records = [mie_with_diagnostics(ctx) for ctx in contexts]
    rows = [r.model_dump() for r in records]
    columns = ["name", "dim", "value", "one_minus_E", "dual_delta", "raw"]
    return _emit(
        args,
        records,
        lambda: format_table(
            rows,
            f"Mutual information energy ({scenario.source})",
            [
                {"key": "name", "name": "Context", "width": 12},
                {"key": "value", "name": "E", "width": 12},
                {"key": "one_minus_E", "name": "1-E", "width": 12},
                {"key": "dual_delta", "name": "Dual Δ", "width": 12},
            ],
        ),
        lambda: dumps_csv(rows, columns),
    )


BOUNDS_COLUMNS = [
    "name",
    "E",
    "one_minus_E",
    "kappa",
    "d_value",
    "spectral_bound",
    "purity_bound",
    "opnorm_bound",
    "hybrid_bound",
    "variance_product",
    "robertson_lhs",
]


def cmd_bounds(args: argparse.Namespace, settings: Settings) -> str:
    scenario = load_scenario(args.scenario)
    rho = scenario.state(args.state)
    report = global_bounds(scenario.family, rho, settings.threads)
    rows = [row.model_dump() for row in report.contexts] + [{"name": "total", **report.totals.model_dump()}]

    def table() -> str:
        body = format_table(
            rows,
            f"Bounds for state '{args.state}' (β = {report.beta:.6g})",
            [{"key": key, "name": key, "width": 12} for key in BOUNDS_COLUMNS],
        )
        flags = format_pairs(list(report.hierarchy.model_dump().items()) + [("D / hybrid", report.hybrid_fraction)], "Hierarchy")
        return body + flags

    return _emit(args, report, table, lambda: dumps_csv(rows, BOUNDS_COLUMNS))


def cmd_kcbs_report(args: argparse.Namespace, settings: Settings) -> str:
    report = kcbs_report(settings.threads, settings.seed)
    values = [(key, value) for key, value in report.model_dump().items() if key != "extremal"]
    max_d = report.extremal.random_axes_max_d
    return _emit(
        args,
        report,
        lambda: format_pairs(values + [("max D over random |0_u>", max_d)], "KCBS spin-1 scenario"),
        lambda: dumps_pairs_csv(values + [("random_axes_max_d", max_d)]),
    )


def _optimization_config(args: argparse.Namespace, settings: Settings) -> OptimizationConfig:
    try:
        return OptimizationConfig(starts=args.starts, max_iters=args.max_iters, tol=args.tol, seed=settings.seed)
    except ValidationError as exc:
        problems = "; ".join(f"--{str(err['loc'][0]).replace('_', '-')}: {err['msg']}" for err in exc.errors())
        raise UsageError(f"invalid optimizer settings: {problems}") from exc


def cmd_optimize(args: argparse.Namespace, settings: Settings) -> str:
    problem = OptimizationProblem.kcbs(args.n)
    config = _optimization_config(args, settings)
    print(f"🚀 Optimizing Σ ΔA·ΔC over {args.n} context(s), {config.starts} starts", file=sys.stderr)
    result = optimize_sum(problem, config, settings.threads)
    results = [result]
    if args.certify:
        print(f"🔍 Certifying on a {args.certify}^4 grid", file=sys.stderr)
        results.append(certify(problem, args.certify, config=config, threads=settings.threads))
    rows = [r.model_dump() for r in results]
    for row, r in zip(rows, results):
        row.update({"theta_m": r.best_stars.m.theta, "phi_m": r.best_stars.m.phi, "theta_n": r.best_stars.n.theta, "phi_n": r.best_stars.n.phi})
    columns = ["method", "n", "best_value", "reference_value", "theta_m", "phi_m", "theta_n", "phi_n", "converged", "axis_flagged"]
    payload = result if not args.certify else {"optimize": results[0], "certify": results[1]}
    return _emit(
        args,
        payload,
        lambda: format_table(rows, f"Maximum uncertainty, n = {args.n}", [{"key": key, "name": key, "width": 12} for key in columns]),
        lambda: dumps_csv(rows, columns),
    )


def cmd_surface(args: argparse.Namespace, settings: Settings) -> str:
    sample = smax_surface_sample(args.context, args.resolution, args.tol, tuple(args.with_contexts))
    residual_keys = [f"residual_{i}" for i in range(1, len(sample.contexts) + 1)]
    columns = ["theta_m", "phi_m", "theta_n", "phi_n", *residual_keys]
    rows = [
        dict(zip(columns, [float(x) for x in (*angles, *residuals)]))
        for angles, residuals in zip(sample.angles, sample.residuals)
    ]
    if not rows:
        print(f"⚠️  No grid point within {args.tol} of the surface at resolution {args.resolution}", file=sys.stderr)
    payload = {"contexts": list(sample.contexts), "resolution": args.resolution, "tol": args.tol, "points": rows}
    return _emit(
        args,
        payload,
        lambda: format_table(
            rows[:20], f"Surface sample, contexts {list(sample.contexts)}: {len(rows)} points (first 20)", [{"key": k, "name": k, "width": 12} for k in columns]
        ),
        lambda: dumps_csv(rows, columns),
    )


def cmd_majorana(args: argparse.Namespace, settings: Settings) -> str:
    if bool(args.stars) == bool(args.state):
        raise UsageError("give exactly one of --stars or --state")
    if args.stars:
        stars = parse_stars(args.stars)
        state = state_from_stars(stars)
    else:
        state = parse_state(args.state)
        stars = stars_from_state(state)
    round_trip = fidelity(state_from_stars(stars_from_state(state)), state)

    extra = {}
    if args.axis:
        k = parse_axis(args.axis)
        coefficients = triad_coefficients(state, k)
        extra = {
            "triad": coefficients.to_record(coefficient_discrepancy(stars, k, "symmetric")),
            "axial_discrepancy": coefficient_discrepancy(stars, k, "axial") if not stars.is_antipodal else 0.0,
            "bargmann_overlap": overlap_via_bargmann(stars, k),
            "variance": variance_A(state, k),
            "residual": max_uncertainty_residual(state, k),
        }
    report = MajoranaReport(stars=stars, state=complex_pairs(state), round_trip_fidelity=round_trip, **extra)

    def table() -> str:
        pairs = [
            ("m (θ, φ)", f"{stars.m.theta:.6g}, {stars.m.phi:.6g}"),
            ("n (θ, φ)", f"{stars.n.theta:.6g}, {stars.n.phi:.6g}"),
        ]
        pairs += [(f"c[{i}]", f"{re:.6g} {im:+.6g}i") for i, (re, im) in enumerate(report.state)]
        pairs.append(("round-trip fidelity", report.round_trip_fidelity))
        if report.triad is not None:
            pairs += [
                ("|K|^2", report.triad.K[0] ** 2 + report.triad.K[1] ** 2),
                ("variance A_k", report.variance),
                ("residual |K|^2 - 1/2", report.residual),
                ("closed-form discrepancy", report.triad.closed_form_discrepancy),
                ("axial discrepancy", report.axial_discrepancy),
            ]
        return format_pairs(pairs, "Majorana representation")

    def csv() -> str:
        values = [("theta_m", stars.m.theta), ("phi_m", stars.m.phi), ("theta_n", stars.n.theta), ("phi_n", stars.n.phi)]
        for i, (re, im) in enumerate(report.state):
            values += [(f"re_c{i}", re), (f"im_c{i}", im)]
        values.append(("round_trip_fidelity", report.round_trip_fidelity))
        if report.triad is not None:
            values += [
                ("K_abs2", report.triad.K[0] ** 2 + report.triad.K[1] ** 2),
                ("bargmann_overlap", report.bargmann_overlap),
                ("variance", report.variance),
                ("residual", report.residual),
                ("closed_form_discrepancy", report.triad.closed_form_discrepancy),
                ("axial_discrepancy", report.axial_discrepancy),
            ]
        return dumps_pairs_csv(values)

    return _emit(args, report, table, csv)


def cmd_validate(args: argparse.Namespace, settings: Settings) -> str:
    scenario = load_scenario(args.scenario)
    checks = [
        ContextCheck(
            name=name,
            observables=scenario.triples[name],
            E=mie(ctx),
            ab_blocks=list(ctx.ab.dims),
            cb_blocks=list(ctx.cb.dims),
            outer_commutator_norm=op_norm(ctx.outer_commutator),
        )
        for name, ctx in scenario.contexts.items()
    ]
    report = ValidationReport(
        source=scenario.source,
        dim=scenario.dim,
        observables=list(scenario.observables),
        states=list(scenario.states),
        contexts=checks,
    )
    if args.emit:
        Path(args.emit).write_text(dumps_json(scenario_to_file(scenario)))
        print(f"💾 Scenario written to {args.emit}", file=sys.stderr)
    rows = [c.model_dump() for c in checks]
    columns = ["name", "observables", "E", "ab_blocks", "cb_blocks", "outer_commutator_norm"]
    return _emit(
        args,
        report,
        lambda: f"✅ {scenario.source}: d={scenario.dim}, {len(scenario.observables)} observables, {len(scenario.states)} states\n"
        + format_table(rows, "Contexts", [{"key": k, "name": k, "width": 14} for k in columns]),
        lambda: dumps_csv(rows, columns),
    )


COMMANDS: dict[str, Callable[[argparse.Namespace, Settings], str]] = {
    "mie": cmd_mie,
    "bounds": cmd_bounds,
    "kcbs-report": cmd_kcbs_report,
    "optimize": cmd_optimize,
    "surface": cmd_surface,
    "majorana": cmd_majorana,
    "validate": cmd_validate,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["table", "json", "csv"], default="table", help="Output format")
    common.add_argument("--seed", type=int, default=None, help="Random seed (overrides CONTEXTIUM_SEED)")
    common.add_argument("--threads", type=int, default=None, help="Worker threads, 0 = one per core")
    common.add_argument(
        "--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"], default=None, help="Logging verbosity"
    )

    parser = argparse.ArgumentParser(prog="contextium", description="Quantum contextuality measures and bounds")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mie", parents=[common], help="Mutual information energy of scenario contexts")
    p.add_argument("--scenario", required=True, help="Built-in name or scenario JSON path")
    p.add_argument("--context", help="Context name or 1-based index (default: all)")

    p = sub.add_parser("bounds", parents=[common], help="Operational measure and its bound hierarchy")
    p.add_argument("--scenario", required=True, help="Built-in name or scenario JSON path")
    p.add_argument("--state", required=True, help="State name from the scenario")

    sub.add_parser("kcbs-report", parents=[common], help="Every KCBS spin-1 number in one report")

    p = sub.add_parser("optimize", parents=[common], help="Maximize Σ ΔA·ΔC over the first n KCBS contexts")
    p.add_argument("--n", type=int, required=True, help="Number of contexts (1-5)")
    p.add_argument("--starts", type=int, default=64, help="Random Nelder–Mead starts")
    p.add_argument("--max-iters", type=int, default=500, help="Iterations per start")
    p.add_argument("--tol", type=float, default=1e-6, help="Convergence and tie tolerance")
    p.add_argument("--certify", type=int, default=0, metavar="RES", help="Also run a RES^4 grid certificate")

    p = sub.add_parser("surface", parents=[common], help="Grid sample of a maximum-uncertainty surface")
    p.add_argument("--context", type=int, required=True, help="KCBS context index (1-5)")
    p.add_argument("--with", dest="with_contexts", type=int, action="append", default=[], help="Intersect with another context")
    p.add_argument("--resolution", type=int, default=50, help="Grid points per angle")
    p.add_argument("--tol", type=float, default=1e-3, help="Residual tolerance")

    p = sub.add_parser("majorana", parents=[common], help="Convert between star pairs and spin-1 states")
    p.add_argument("--stars", help="'θm,φm;θn,φn'")
    p.add_argument("--state", help="'re,im;re,im;re,im' in the (+1, 0, -1) basis")
    p.add_argument("--axis", help="'θ,φ' axis for the triad decomposition")

    p = sub.add_parser("validate", parents=[common], help="Load and check a scenario")
    p.add_argument("--scenario", required=True, help="Built-in name or scenario JSON path")
    p.add_argument("--emit", help="Write the validated scenario as JSON to this path")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    overrides = {key: getattr(args, key) for key in ("seed", "threads", "log_level") if getattr(args, key) is not None}
    settings = get_settings().model_copy(update=overrides)
    logging.basicConfig(level=settings.log_level, format="%(asctime)s %(levelname)s %(name)s: %(message)s")
    logger.debug("running %s with %s", args.command, settings.model_dump())

    try:
        if settings.threads < 0:
            raise UsageError(f"--threads must be 0 or positive, got {settings.threads}")
        output = COMMANDS[args.command](args, settings)
    except ContextiumError as exc:
        print(f"❌ {exc}", file=sys.stderr)
        return exc.exit_code
    sys.stdout.write(output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
