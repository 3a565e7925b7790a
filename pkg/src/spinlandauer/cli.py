"""Command-line interface: sweeps, erasure and capacity reports, Monte Carlo
verification, and analytic limit tables, with CSV/JSON output for plotting.

Exit codes: 0 success, 1 internal numeric error, 2 usage error,
3 verification failure.
"""

import argparse
import json
import math
import sys
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from . import __version__
from .erasure import ErasureReport, Rounding, analog_erasure_entropy, capacity, discrete_erasure_entropy, landauer_ratio, raw_state_count
from .meanfield import (
    NoConvergenceError,
    entropy_limits,
    entropy_per_spin,
    solve_magnetization,
    sweep,
)
from .models import ClassicalOn, DiscreteZq, parse_model
from .montecarlo import (
    DEFAULT_PROPOSAL_WIDTH,
    McConfig,
    energy_curve,
    entropy_by_integration,
    run_chain,
)
from .serialize import MC_CSV_COLUMNS, json_document, mc_csv, mc_rows, sweep_csv

LN2 = math.log(2.0)


def _fmt(x: float, digits: int = 6) -> str:
    if x is None:
        return ""
    if isinstance(x, float) and math.isinf(x):
        return "divergent"
    return f"{x:.{digits}f}"


def _build_manifest(command: str, args: argparse.Namespace) -> dict:
    params = {}
    for key, value in sorted(vars(args).items()):
        if key in ("func", "command") or value is None:
            continue
        params[key] = str(value)
    return {
        "command": command,
        "parameters": params,
        "tool_version": __version__,
        "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"),
    }


def _column_table(header, rows) -> str:
    widths = [len(h) for h in header]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    for row in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


def _emit(args, manifest: dict, data_payload: dict, table_text: str, csv_text: str) -> None:
    """Route the rendered result to stdout or --output, with its manifest."""
    if args.format == "json":
        text = json_document(manifest, data_payload)
    elif args.format == "csv":
        text = csv_text
    else:
        text = table_text
    if args.output:
        Path(args.output).write_text(text)
        if args.format != "json":
            Path(str(args.output) + ".manifest.json").write_text(
                json.dumps(manifest, indent=2) + "\n"
            )
    else:
        sys.stdout.write(text)


def _parse_grid_triplet(text: str, name: str):
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"{name} must look like <min>:<max>:<steps>, got {text!r}")
    lo, hi, steps = float(parts[0]), float(parts[1]), int(parts[2])
    if steps < 1:
        raise ValueError(f"{name}: steps must be >= 1, got {steps}")
    if not 0 < lo <= hi:
        raise ValueError(f"{name}: need 0 < min <= max, got {lo}..{hi}")
    return np.linspace(lo, hi, steps)


def cmd_sweep(args) -> int:
    model = parse_model(args.model)
    if args.t_steps < 1:
        raise ValueError(f"--t-steps must be >= 1, got {args.t_steps}")
    if not 0 < args.t_min <= args.t_max:
        raise ValueError(f"need 0 < --t-min <= --t-max, got {args.t_min}..{args.t_max}")
    if args.spacing == "linear":
        grid = np.linspace(args.t_min, args.t_max, args.t_steps)
    else:  # uniform in beta = 1/t
        grid = 1.0 / np.linspace(1.0 / args.t_max, 1.0 / args.t_min, args.t_steps)
    result = sweep(model, [float(t) for t in grid])
    limits = entropy_limits(model)

    print(f"model = {model.label}")
    print(f"t_c = {result.t_c!r}")
    print(f"S(t_c)/kN = {_fmt(limits.s_at_tc)}")
    print(f"S(t->0)/kN = {_fmt(limits.s_at_zero)}")

    header = ["t", "m", "entropy_per_spin", "free_energy_per_spin"]
    rows = [
        [_fmt(p.t), _fmt(p.m), _fmt(p.entropy_per_spin), _fmt(p.free_energy_per_spin)]
        for p in result.points
    ]
    manifest = _build_manifest("sweep", args)
    _emit(args, manifest, result.to_dict(), _column_table(header, rows), sweep_csv(result))
    if args.plot:
        from .plotting import plot_sweep

        plot_sweep(result, args.plot)
    return 0


def cmd_erase(args) -> int:
    model = parse_model(args.model)
    if isinstance(model, DiscreteZq):
        if args.delta is not None:
            raise ValueError("--delta does not apply to discrete models")
        report = ErasureReport(model=model, delta_s_per_spin=discrete_erasure_entropy(model.q))
    else:
        report = analog_erasure_entropy(model, delta=args.delta)

    lines = [("model", model.label), ("delta_S/kN", _fmt(report.delta_s_per_spin))]
    lines.append(("Q_min per spin", f"{_fmt(report.delta_s_per_spin)} kT"))
    if report.regulator:
        reg = report.regulator
        if reg.s_max is not None:
            lines.append(("s_max", _fmt(reg.s_max, 1)))
        lines.append(("Delta (min state volume)", _fmt(reg.delta)))
        if reg.hbar_eff is not None:
            lines.append(("hbar_eff", _fmt(reg.hbar_eff)))
    lines.append(("status", "conjectured" if report.conjectured else "exact"))
    table_text = "".join(f"{k} = {v}\n" for k, v in lines)

    csv_text = (
        "model,delta_s_per_spin,s_max,delta,hbar_eff,conjectured\n"
        + ",".join(
            [
                model.label,
                repr(report.delta_s_per_spin),
                repr(report.regulator.s_max) if report.regulator and report.regulator.s_max is not None else "",
                repr(report.regulator.delta) if report.regulator else "",
                repr(report.regulator.hbar_eff) if report.regulator and report.regulator.hbar_eff is not None else "",
                str(report.conjectured),
            ]
        )
        + "\n"
    )
    manifest = _build_manifest("erase", args)
    _emit(args, manifest, report.to_dict(), table_text, csv_text)
    return 0


def cmd_capacity(args) -> int:
    report = capacity(args.L, args.hbar, Rounding(args.rounding))
    raw = raw_state_count(args.L, args.hbar)
    log2_raw_momentum = math.log2(args.L / args.hbar)
    lines = [
        ("L (units of hbar_eff)", repr(args.L)),
        ("hbar_eff", repr(args.hbar)),
        ("raw state count 8*pi*L/hbar", _fmt(raw)),
        ("N_l", str(report.n_states)),
        ("bits = log2(N_l)", _fmt(report.bits)),
        ("Q_min", f"{_fmt(report.q_min_over_kT)} kT"),
        ("Landauer ratio Q_min/(kT ln 2)", _fmt(landauer_ratio(report))),
    ]
    table_text = "".join(f"{k} = {v}\n" for k, v in lines)
    table_text += (
        f"note: log2(L/hbar_eff) = {_fmt(log2_raw_momentum, 2)} counts raw momentum"
        " quanta; distinguishable logic states give the bits figure above\n"
    )
    csv_text = (
        "angular_momentum_L,hbar_eff,n_states,bits,q_min_over_kT\n"
        + ",".join(
            [
                repr(report.angular_momentum_L),
                repr(report.hbar_eff),
                str(report.n_states),
                repr(report.bits),
                repr(report.q_min_over_kT),
            ]
        )
        + "\n"
    )
    manifest = _build_manifest("capacity", args)
    _emit(args, manifest, report.to_dict(), table_text, csv_text)
    return 0


def cmd_limits(args) -> int:
    model = parse_model(args.model)
    limits = entropy_limits(model)
    payload = {
        "model": model.label,
        "s_at_tc": limits.s_at_tc,
        "s_at_zero": limits.s_at_zero,
        "delta_s": limits.delta_s,
    }
    table_text = (
        f"model = {model.label}\n"
        f"S(t_c)/kN = {_fmt(limits.s_at_tc)}\n"
        f"S(t->0)/kN = {_fmt(limits.s_at_zero)}\n"
        f"delta_S/kN = {_fmt(limits.delta_s)}\n"
    )
    csv_text = (
        "model,s_at_tc,s_at_zero,delta_s\n"
        + ",".join(
            [
                model.label,
                repr(limits.s_at_tc),
                repr(limits.s_at_zero) if not math.isinf(limits.s_at_zero) else "divergent",
                repr(limits.delta_s) if not math.isinf(limits.delta_s) else "divergent",
            ]
        )
        + "\n"
    )
    manifest = _build_manifest("limits", args)
    _emit(args, manifest, payload, table_text, csv_text)
    return 0


def _mc_model_tag(label: str) -> str:
    model = parse_model(label)
    if isinstance(model, ClassicalOn) and model.n == 3:
        return "on3"
    if isinstance(model, DiscreteZq) and model.q == 2:
        return "ising"
    raise ValueError(f"no Monte Carlo sampler for {label} (supported: on:3, zq:2)")


def cmd_mc(args) -> int:
    tag = _mc_model_tag(args.model)
    if (args.t is None) == (args.beta_grid is None):
        raise ValueError("pass exactly one of --t or --beta-grid")
    template = McConfig(
        model=tag,
        n_spins=args.n_spins,
        t=args.t if args.t is not None else 1.0,
        sweeps=args.sweeps,
        burn_in=args.burn_in,
        seed=args.seed,
        proposal_width=args.proposal_width,
    )
    if args.beta_grid is not None:
        grid = _parse_grid_triplet(args.beta_grid, "--beta-grid")
        curve = energy_curve(template, [float(b) for b in grid])
    else:
        trace = run_chain(template)
        curve = [(1.0 / args.t, trace)]

    s_infinite_t = math.log(4.0 * math.pi) if tag == "on3" else LN2
    entropies = None
    if args.entropy:
        entropies = entropy_by_integration(curve, s_infinite_t)

    rows = mc_rows(curve, entropies)
    payload = {
        "master_seed": args.seed,
        "points": [
            {
                "beta": beta,
                "trace": trace.to_dict(),
                "entropy": est.to_dict() if est else None,
            }
            for (beta, trace), est in zip(
                curve, [e for _, e in entropies] if entropies else [None] * len(curve)
            )
        ],
    }
    header = list(MC_CSV_COLUMNS)
    table_rows = [[_fmt(row[c]) for c in header] for row in rows]
    manifest = _build_manifest("mc", args)
    _emit(args, manifest, payload, _column_table(header, table_rows), mc_csv(rows))
    if args.plot:
        from .plotting import plot_mc_curve

        plot_mc_curve(rows, args.plot, s_reference=s_infinite_t if args.entropy else None)

    if not args.verify:
        return 0

    mf_model = ClassicalOn(3) if tag == "on3" else DiscreteZq(2)
    v_header = ["t", "m_mc", "m_mf", "|dm|", "m_budget", "s_mc", "s_mf", "|ds|", "s_budget", "status"]
    v_rows = []
    failures = 0
    ent_by_beta = {b: e for b, e in entropies} if entropies else {}
    for beta, trace in curve:
        t = trace.config.t
        m_mf = solve_magnetization(mf_model, t)
        dm = abs(trace.magnetization.mean - m_mf)
        m_budget = args.tol_m + 3.0 * trace.magnetization.std_error
        ok = dm <= m_budget
        s_cells = ["", "", "", ""]
        est = ent_by_beta.get(beta)
        # classical entropy diverges as t -> 0; compare only where finite-size
        # Monte Carlo can meaningfully track the analytic value
        if est is not None and t >= 0.15:
            s_mf = entropy_per_spin(mf_model, t)
            ds = abs(est.mean - s_mf)
            s_budget = args.tol_entropy + 3.0 * est.std_error
            if ds > s_budget:
                ok = False
            s_cells = [_fmt(est.mean), _fmt(s_mf), _fmt(ds), _fmt(s_budget)]
        if not ok:
            failures += 1
        v_rows.append(
            [_fmt(t), _fmt(trace.magnetization.mean), _fmt(m_mf), _fmt(dm), _fmt(m_budget)]
            + s_cells
            + ["pass" if ok else "FAIL"]
        )
    sys.stdout.write(_column_table(v_header, v_rows))
    if failures:
        print(f"verification FAILED at {failures} of {len(curve)} points", file=sys.stderr)
        return 3
    print(f"verification passed at all {len(curve)} points")
    return 0


def _add_common_output_flags(sub, plot: bool = False):
    sub.add_argument("--format", choices=("table", "csv", "json"), default="table",
                     help="output rendering (default: table)")
    sub.add_argument("--output", default=None, help="write the result here instead of stdout")
    if plot:
        sub.add_argument("--plot", default=None, help="also render a figure (PNG/PDF) to this path")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinlandauer",
        description="Spin-model thermodynamics and analog erasure-bound calculators.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("sweep", help="temperature sweep of a mean-field model")
    p.add_argument("--model", required=True, help="zq:<q> | on:<n> | spin:<s> | reg:<s_max>")
    p.add_argument("--t-min", type=float, required=True)
    p.add_argument("--t-max", type=float, required=True)
    p.add_argument("--t-steps", type=int, required=True)
    p.add_argument("--spacing", choices=("linear", "recip"), default="linear",
                   help="grid spacing in t (linear) or uniform in beta (recip)")
    _add_common_output_flags(p, plot=True)
    p.set_defaults(func=cmd_sweep)

    p = subs.add_parser("erase", help="erasure entropy and minimum reset heat")
    p.add_argument("--model", required=True, help="zq:<q> | reg:<s_max> | on:<n> (with --delta)")
    p.add_argument("--delta", type=float, default=None,
                   help="minimal configuration-volume quantum for classical O(n) models")
    _add_common_output_flags(p)
    p.set_defaults(func=cmd_erase)

    p = subs.add_parser("capacity", help="logic-state capacity of an angular momentum")
    p.add_argument("--L", type=float, required=True, help="angular momentum in units of hbar_eff")
    p.add_argument("--hbar", type=float, default=1.0, help="effective quantum (default 1)")
    p.add_argument("--rounding", choices=("trunc", "nearest"), default="trunc")
    _add_common_output_flags(p)
    p.set_defaults(func=cmd_capacity)

    p = subs.add_parser("mc", help="Curie-Weiss Metropolis sampling and verification")
    p.add_argument("--model", required=True, help="on:3 | zq:2")
    p.add_argument("--n-spins", type=int, default=1024)
    p.add_argument("--t", type=float, default=None, help="single reduced temperature")
    p.add_argument("--beta-grid", default=None, help="<min>:<max>:<steps>, ascending, min <= 0.01")
    p.add_argument("--sweeps", type=int, default=5000)
    p.add_argument("--burn-in", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--proposal-width", type=float, default=DEFAULT_PROPOSAL_WIDTH)
    p.add_argument("--entropy", action="store_true",
                   help="add thermodynamic-integration entropy columns (needs --beta-grid)")
    p.add_argument("--verify", action="store_true",
                   help="compare against the mean-field solution; exit 3 on failure")
    p.add_argument("--tol-m", type=float, default=0.02)
    p.add_argument("--tol-entropy", type=float, default=0.05)
    _add_common_output_flags(p, plot=True)
    p.set_defaults(func=cmd_mc)

    p = subs.add_parser("limits", help="analytic entropy limits at t_c and t -> 0")
    p.add_argument("--model", required=True, help="zq:<q> | on:<n> | spin:<s> | reg:<s_max>")
    _add_common_output_flags(p)
    p.set_defaults(func=cmd_limits)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except ValueError as exc:  # includes UnsupportedModelError and domain errors
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (NoConvergenceError, ArithmeticError) as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
