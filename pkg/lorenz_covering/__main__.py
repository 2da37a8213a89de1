"""
CLI entry point for lorenz_covering.

Usage:
    # Simulate L2 at canonical parameters
    python -m lorenz_covering simulate --system l2 --t1 50 --out l2.csv

    # Same run from a scenario file (flags override file values)
    python -m lorenz_covering simulate --scenario scenarios/l2_attractor.json --t1 80

    # Standard <-> normalized change of variables on a whole trajectory
    python -m lorenz_covering transform --direction std-to-l2 --in std.csv --out l2.csv

    # Coloring, factorization, extension
    python -m lorenz_covering cover --n 2 --in l2.csv --out covered.csv
    python -m lorenz_covering factor --in l2.csv --out l1.csv
    python -m lorenz_covering extend --n 3 --in l1.csv --out l3.csv

    # Chaos comparison
    python -m lorenz_covering lyapunov --system standard --t-total 2000 --seed 7
    python -m lorenz_covering chaos-table --systems l1,l2,l3 --workers 3 --report chaos.md

    # Equilibria and rendering
    python -m lorenz_covering fixed-points --system l2
    python -m lorenz_covering render --in l2.csv --proj x,z --out l2.svg

Exit codes: 0 success, 2 configuration or validation error, 3 numerical failure.
Relative --scenario names are also looked up in $LORENZ_COVERING_SCENARIO_DIR
(a .env file in the working directory is honoured).
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Callable

from pydantic import ValidationError
from rich import box
from rich.console import Console
from rich.markup import escape
from rich.panel import Panel
from rich.table import Table

from lorenz_covering.errors import (
    AxisDomainError,
    NumericalFailure,
    ParameterDomainError,
    ScenarioError,
    TrajectoryFormatError,
)

console = Console()
err_console = Console(stderr=True)
log = logging.getLogger("lorenz_covering.cli")

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERICAL = 3

_PARAM_NAMES = {
    "standard": ("sigma", "rayleigh", "b"),
    "normalized": ("mu", "beta", "gamma"),
}


# ── Flag parsing helpers ──────────────────────────────────────────────────────

def _floats(text: str, count: int, flag: str) -> tuple[float, ...]:
    try:
        values = tuple(float(v) for v in text.split(","))
    except ValueError as exc:
        raise ParameterDomainError(f"{flag} expects {count} comma-separated numbers, got {text!r}") from exc
    if len(values) != count:
        raise ParameterDomainError(f"{flag} expects {count} comma-separated numbers, got {text!r}")
    return values


def _params_dict(family: str, text: str | None) -> dict[str, float] | None:
    if text is None:
        return None
    names = _PARAM_NAMES["standard" if family == "standard" else "normalized"]
    return dict(zip(names, _floats(text, 3, "--params")))


def _system_spec(family: str, n: int | None, params: str | None):
    from lorenz_covering.dynamics.models import SystemSpec

    try:
        return SystemSpec.model_validate(
            {"family": family, "n": n, "params": _params_dict(family, params)}
        )
    except ValidationError as exc:
        raise ParameterDomainError(_first_error(exc)) from exc


def _covering(n: int):
    from lorenz_covering.covering.models import CoveringSpec

    try:
        return CoveringSpec(n=n)
    except ValidationError as exc:
        raise ParameterDomainError(f"fold count {_first_error(exc)}") from exc


def _parse_system_token(token: str, params: str | None):
    tok = token.strip().lower()
    if tok == "standard":
        return _system_spec("standard", None, params)
    if tok in ("l1", "l2"):
        return _system_spec(tok, None, params)
    if tok.startswith("l") and tok[1:].isdigit():
        return _system_spec("ln", int(tok[1:]), params)
    raise ParameterDomainError(f"unknown system {token!r} (use standard, l1, l2 or lK)")


def _first_error(exc: ValidationError) -> str:
    err = exc.errors()[0]
    key = ".".join(str(p) for p in err["loc"])
    return f"{key}: {err['msg']}" if key else err["msg"]


def _integrator_overrides(args: argparse.Namespace) -> dict[str, Any]:
    flags = {
        "mode": args.mode,
        "step": args.step,
        "rel_tol": args.rel_tol,
        "abs_tol": args.abs_tol,
        "max_step": args.max_step,
        "sample_interval": args.sample_interval,
    }
    out = {k: v for k, v in flags.items() if v is not None}
    if args.debug:
        out["debug"] = True
    return out


def _integrator_config(args: argparse.Namespace):
    from lorenz_covering.integrate.models import IntegratorConfig

    try:
        return IntegratorConfig(**_integrator_overrides(args))
    except ValidationError as exc:
        raise ParameterDomainError(_first_error(exc)) from exc


# ── Parser ────────────────────────────────────────────────────────────────────

def _add_system_flags(p: argparse.ArgumentParser, default: str | None = "l2") -> None:
    p.add_argument("--system", choices=["standard", "l2", "l1", "ln"], default=default,
                   help="Member of the class")
    p.add_argument("--n", type=int, default=None, help="Fold count (required for --system ln)")
    p.add_argument("--params", default=None, metavar="A,B,C",
                   help="sigma,rayleigh,b for standard; mu,beta,gamma otherwise (canonical when omitted)")


def _add_integrator_flags(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("integrator")
    g.add_argument("--mode", choices=["adaptive", "fixed"], default=None,
                   help="Dormand-Prince 5(4) or fixed-step RK4 (adaptive when omitted)")
    g.add_argument("--step", type=float, default=None, help="Step size, fixed mode (0.01 when omitted)")
    g.add_argument("--rel-tol", type=float, default=None, help="Relative tolerance (1e-9 when omitted)")
    g.add_argument("--abs-tol", type=float, default=None, help="Absolute tolerance (1e-12 when omitted)")
    g.add_argument("--max-step", type=float, default=None, help="Largest adaptive step (0.05 when omitted)")
    g.add_argument("--sample-interval", type=float, default=None,
                   help="Output cadence (0.01 when omitted)")
    g.add_argument("--debug", action="store_true", help="Record every accepted step in the metadata")


def _add_lyapunov_flags(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("lyapunov")
    g.add_argument("--t-total", type=float, default=2000.0, help="Accumulation time after the transient")
    g.add_argument("--tau", type=float, default=0.5, help="Renormalization interval")
    g.add_argument("--delta0", type=float, default=1e-8, help="Renormalized separation")
    g.add_argument("--transient", type=float, default=50.0, help="Discarded initial time")
    g.add_argument("--seed", type=int, default=0, help="Seed of the perturbation direction")
    g.add_argument("--rel-tol", type=float, default=1e-9, help="Integrator relative tolerance")


def _build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentDefaultsHelpFormatter
    parser = argparse.ArgumentParser(
        prog="lorenz-covering",
        description="Lorenz-type systems: normalization, covering-coloring, factorizations and extensions",
        formatter_class=fmt,
    )
    parser.add_argument("--verbose", "-v", action="store_true", help="DEBUG logging")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    # simulate
    p = sub.add_parser("simulate", help="Integrate a member of the class", formatter_class=fmt)
    p.add_argument("--scenario", default=None, metavar="FILE", help="Scenario JSON document")
    _add_system_flags(p, default=None)
    p.add_argument("--x0", default=None, metavar="X,Y,Z", help="Cartesian initial state (1,0.1,0.5 when omitted)")
    p.add_argument("--t0", type=float, default=None, help="Start time (0 when omitted)")
    p.add_argument("--t1", type=float, default=None, help="End time")
    p.add_argument("--normalize", action="store_true", help="Integrate the standard system as L2")
    p.add_argument("--cover", type=int, default=None, metavar="K", help="Apply the K-fold covering to the result")
    p.add_argument("--out", default=None, metavar="PATH", help="Trajectory CSV")
    p.add_argument("--svg", default=None, metavar="PATH", help="Also render an SVG projection")
    p.add_argument("--proj", default="x,y", help="Projection of --svg")
    _add_integrator_flags(p)

    # transform
    p = sub.add_parser("transform", help="Standard <-> normalized change of variables on a CSV",
                       formatter_class=fmt)
    p.add_argument("--direction", choices=["std-to-l2", "l2-to-std"], required=True)
    p.add_argument("--sigma", type=float, default=10.0)
    p.add_argument("--r", type=float, default=28.0, help="Rayleigh parameter (must exceed 1)")
    p.add_argument("--b", type=float, default=8.0 / 3.0)
    p.add_argument("--in", dest="input", required=True, metavar="PATH")
    p.add_argument("--out", required=True, metavar="PATH")

    # cover / factor
    p = sub.add_parser("cover", help="Map a trajectory through the K-fold covering and color it",
                       formatter_class=fmt)
    p.add_argument("--n", type=int, default=2, help="Fold count")
    p.add_argument("--in", dest="input", required=True, metavar="PATH")
    p.add_argument("--out", required=True, metavar="PATH")

    p = sub.add_parser("factor", help="Cover and erase the colors (L2 -> L1 by default)",
                       formatter_class=fmt)
    p.add_argument("--n", type=int, default=2, help="Fold count")
    p.add_argument("--in", dest="input", required=True, metavar="PATH")
    p.add_argument("--out", required=True, metavar="PATH")

    # extend
    p = sub.add_parser("extend", help="Simulate Ln from a lifted L1 initial condition", formatter_class=fmt)
    p.add_argument("--n", type=int, required=True, help="Fold count of the extension")
    p.add_argument("--in", dest="input", default=None, metavar="PATH",
                   help="L1 trajectory; its first sample is lifted")
    p.add_argument("--x0", default=None, metavar="X,Y,Z", help="L1 point to lift when --in is omitted")
    p.add_argument("--initial-color", type=int, default=0, help="Sheet of the lifted start point")
    p.add_argument("--lift-path", action="store_true",
                   help="Lift the whole --in trajectory instead of simulating")
    p.add_argument("--params", default=None, metavar="MU,BETA,GAMMA", help="Normalized parameters")
    p.add_argument("--t0", type=float, default=None, help="Start time (input start or 0)")
    p.add_argument("--t1", type=float, default=None, help="End time (input end when omitted)")
    p.add_argument("--out", required=True, metavar="PATH")
    _add_integrator_flags(p)

    # lyapunov
    p = sub.add_parser("lyapunov", help="Largest Lyapunov exponent", formatter_class=fmt)
    _add_system_flags(p)
    p.add_argument("--x0", default=None, metavar="X,Y,Z", help="Cartesian initial state")
    _add_lyapunov_flags(p)
    p.add_argument("--convergence", default=None, metavar="PATH", help="Write the running estimate as CSV")

    # chaos-table
    p = sub.add_parser("chaos-table", help="Compare lambda1 across the class", formatter_class=fmt)
    p.add_argument("--systems", default="l1,l2,l3", help="Comma-separated standard, l1, l2, lK")
    p.add_argument("--params", default=None, metavar="MU,BETA,GAMMA", help="Normalized parameters")
    _add_lyapunov_flags(p)
    p.add_argument("--workers", type=int, default=1, help="Rows computed in parallel")
    p.add_argument("--report", default=None, metavar="PATH", help="Markdown report")

    # fixed-points
    p = sub.add_parser("fixed-points", help="List the equilibria", formatter_class=fmt)
    _add_system_flags(p)

    # render
    p = sub.add_parser("render", help="SVG projection of a trajectory CSV", formatter_class=fmt)
    p.add_argument("--in", dest="input", required=True, metavar="PATH")
    p.add_argument("--proj", default="x,y", help="Two of x, y, z, radius, angle")
    p.add_argument("--out", required=True, metavar="PATH",
                   help="SVG file (path prefix with --all-projections)")
    p.add_argument("--all-projections", action="store_true", help="Write the xy, xz and yz projections")
    p.add_argument("--no-color", action="store_true", help="Ignore the color channel")
    p.add_argument("--title", default=None)
    return parser


# ── Output helpers ────────────────────────────────────────────────────────────

def _fmt_state(values) -> str:
    return "(" + ", ".join(f"{float(v):.6g}" for v in values) + ")"


def _read_input(path: Path):
    from lorenz_covering.io.csv_io import read_csv

    traj = read_csv(path)
    if len(traj) == 0:
        raise TrajectoryFormatError(f"{path} holds a header but no samples")
    return traj


def _print_trajectory_summary(title: str, traj, written: list[Path]) -> None:
    if len(traj) == 0:
        raise TrajectoryFormatError(f"{title} produced no samples")
    final = traj.cartesian().states[-1]
    lines = [
        f"  [bold]{'Samples:':<14}[/bold] {len(traj)}",
        f"  [bold]{'Duration:':<14}[/bold] {traj.times[-1] - traj.times[0]:.6g}  "
        f"(t = {traj.times[0]:.6g} .. {traj.times[-1]:.6g})",
        f"  [bold]{'Final state:':<14}[/bold] {_fmt_state(final)}",
    ]
    if traj.colors is not None:
        lines.append(f"  [bold]{'Colors seen:':<14}[/bold] {sorted(set(int(c) for c in traj.colors))}")
    console.print(Panel("\n".join(lines), title=f"[bold cyan]{escape(title)}[/bold cyan]",
                        border_style="cyan", expand=False))
    for path in written:
        console.print(f"  [green]✓[/green] [dim]{escape(str(path))}[/dim]")


# ── Subcommands ───────────────────────────────────────────────────────────────

def _scenario_from_args(args: argparse.Namespace):
    from lorenz_covering.io.models import Scenario
    from lorenz_covering.io.scenario import load_scenario, scenario_error_from

    doc: dict[str, Any] = {}
    if args.scenario:
        doc = load_scenario(args.scenario).model_dump(mode="json")

    if args.system is not None:
        system: dict[str, Any] = {"family": args.system, "n": args.n}
        base_system = doc.get("system") or {}
        if args.params is not None:
            system["params"] = _params_dict(args.system, args.params)
        elif base_system.get("family") == args.system:
            system["params"] = base_system.get("params")
        doc["system"] = system
    elif args.n is not None or args.params is not None:
        system = dict(doc.get("system") or {"family": "l2"})
        if args.n is not None:
            system["n"] = args.n
        if args.params is not None:
            system["params"] = _params_dict(system["family"], args.params)
        doc["system"] = system

    if args.x0 is not None:
        doc["initial_state"] = list(_floats(args.x0, 3, "--x0"))
    time = dict(doc.get("time") or {})
    if args.t0 is not None:
        time["t0"] = args.t0
    if args.t1 is not None:
        time["t1"] = args.t1
    doc["time"] = time
    doc["integrator"] = {**(doc.get("integrator") or {}), **_integrator_overrides(args)}
    if args.normalize:
        doc["normalize"] = True
    if args.cover is not None:
        doc["cover"] = args.cover
    if args.out or args.svg:
        outputs = []
        if args.out:
            outputs.append({"kind": "csv", "path": args.out})
        if args.svg:
            outputs.append({"kind": "svg", "path": args.svg, "projection": args.proj})
        doc["outputs"] = outputs

    try:
        return Scenario.model_validate(doc)
    except ValidationError as exc:
        raise scenario_error_from(exc) from exc


def _cmd_simulate(args: argparse.Namespace) -> int:
    from lorenz_covering.io.scenario import run_scenario, write_outputs

    scenario = _scenario_from_args(args)
    log.info("simulate %s over [%g, %g]", scenario.system.label, scenario.time.t0, scenario.time.t1)
    traj = run_scenario(scenario)
    written = write_outputs(traj, scenario)
    _print_trajectory_summary(f"simulate {scenario.system.label}", traj, written)
    return EXIT_OK


def _cmd_transform(args: argparse.Namespace) -> int:
    import numpy as np

    from lorenz_covering.dynamics.models import CartesianState, StandardParams, SystemSpec
    from lorenz_covering.dynamics.transforms import (
        params_normalize,
        state_denormalize,
        state_normalize,
    )
    from lorenz_covering.integrate.models import Trajectory
    from lorenz_covering.io.csv_io import write_csv

    try:
        params = StandardParams(sigma=args.sigma, rayleigh=args.r, b=args.b)
    except ValidationError as exc:
        raise ParameterDomainError(_first_error(exc)) from exc
    target = SystemSpec.l2(params_normalize(params))   # also enforces rayleigh > 1

    src = _read_input(args.input).cartesian()
    op = state_normalize if args.direction == "std-to-l2" else state_denormalize
    times = np.empty(len(src))
    states = np.empty_like(src.states)
    for i in range(len(src)):
        s, t = op(CartesianState.from_array(src.states[i]), float(src.times[i]), params)
        states[i] = s.as_array()
        times[i] = t

    meta = {k: v for k, v in src.meta.items() if k != "system"}
    meta["system"] = (target if args.direction == "std-to-l2" else SystemSpec.standard(params)).model_dump(
        mode="json"
    )
    meta["transform"] = {"direction": args.direction, "params": params.model_dump(mode="json")}
    out = Trajectory(times=times, states=states, colors=src.colors, meta=meta)
    written = write_csv(out, args.out)
    _print_trajectory_summary(f"transform {args.direction}", out, [written])
    return EXIT_OK


def _cmd_cover(args: argparse.Namespace) -> int:
    from lorenz_covering.covering.paths import cover_trajectory
    from lorenz_covering.io.csv_io import write_csv

    fold = _covering(args.n).n
    out = cover_trajectory(_read_input(args.input), fold)
    written = write_csv(out, args.out)
    _print_trajectory_summary(f"cover n={args.n}", out, [written])
    return EXIT_OK


def _cmd_factor(args: argparse.Namespace) -> int:
    from lorenz_covering.covering.paths import factor_trajectory
    from lorenz_covering.io.csv_io import write_csv

    fold = _covering(args.n).n
    out = factor_trajectory(_read_input(args.input), fold)
    written = write_csv(out, args.out)
    _print_trajectory_summary(f"factor n={args.n}", out, [written])
    return EXIT_OK


def _cmd_extend(args: argparse.Namespace) -> int:
    from lorenz_covering.covering.models import ColoredPoint
    from lorenz_covering.covering.paths import lift_trajectory
    from lorenz_covering.dynamics.models import CartesianState, SystemSpec
    from lorenz_covering.integrate.solver import simulate
    from lorenz_covering.io.csv_io import write_csv

    _covering(args.n)
    spec = _system_spec("ln", args.n, args.params)
    if args.input:
        base = _read_input(args.input)
        lifted = lift_trajectory(base, args.n, args.initial_color)
        if args.lift_path:
            written = write_csv(lifted, args.out)
            _print_trajectory_summary(f"lift n={args.n}", lifted, [written])
            return EXIT_OK
        s0 = CartesianState.from_array(lifted.cartesian().states[0])
        t0 = args.t0 if args.t0 is not None else float(base.times[0])
        t1 = args.t1 if args.t1 is not None else float(base.times[-1])
    else:
        if args.x0 is None:
            raise ParameterDomainError("extend needs --in or --x0")
        if args.lift_path:
            raise ParameterDomainError("--lift-path needs --in")
        if args.t1 is None:
            raise ParameterDomainError("extend with --x0 needs --t1")
        point = ColoredPoint(CartesianState(*_floats(args.x0, 3, "--x0")), args.initial_color, args.n)
        s0 = point.upstairs
        t0 = args.t0 if args.t0 is not None else 0.0
        t1 = args.t1

    traj = simulate(spec, s0, t0, t1, _integrator_config(args))
    traj.meta["lifted_from"] = {"fold": args.n, "initial_color": args.initial_color}
    written = write_csv(traj, args.out)
    _print_trajectory_summary(f"extend {spec.label}", traj, [written])
    return EXIT_OK


def _lyapunov_config(args: argparse.Namespace):
    from lorenz_covering.chaos.models import LyapunovConfig
    from lorenz_covering.integrate.models import IntegratorConfig

    try:
        return LyapunovConfig(
            t_total=args.t_total,
            tau=args.tau,
            delta0=args.delta0,
            transient=args.transient,
            seed=args.seed,
            integrator=IntegratorConfig(rel_tol=args.rel_tol),
        )
    except ValidationError as exc:
        raise ParameterDomainError(_first_error(exc)) from exc


def _cmd_lyapunov(args: argparse.Namespace) -> int:
    import pandas as pd

    from lorenz_covering.chaos.lyapunov import lyapunov_max
    from lorenz_covering.chaos.table import default_initial_state
    from lorenz_covering.dynamics.models import CartesianState

    spec = _system_spec(args.system, args.n, args.params)
    cfg = _lyapunov_config(args)
    s0 = CartesianState(*_floats(args.x0, 3, "--x0")) if args.x0 else default_initial_state(spec)
    est = lyapunov_max(spec, s0, cfg)

    unit = "standard time" if spec.fold is None else "normalized time"
    lines = [
        f"  [bold]{'lambda1:':<12}[/bold] {est.lambda1:.6f} ± {est.stderr(cfg.n_blocks):.6f}  (1/{unit})",
        f"  [bold]{'seed:':<12}[/bold] {cfg.seed}",
        f"  [bold]{'intervals:':<12}[/bold] {len(est.convergence)} × tau={cfg.tau:g}",
        f"  [bold]{'start:':<12}[/bold] {_fmt_state(s0.as_array())}",
    ]
    console.print(Panel("\n".join(lines), title=f"[bold cyan]lyapunov {spec.label}[/bold cyan]",
                        border_style="cyan", expand=False))
    if args.convergence:
        path = Path(args.convergence)
        path.parent.mkdir(parents=True, exist_ok=True)
        pd.DataFrame(est.convergence, columns=["t", "lambda1"]).to_csv(
            path, index=False, float_format="%.17g", lineterminator="\n"
        )
        console.print(f"  [green]✓[/green] [dim]{escape(str(path))}[/dim]")
    return EXIT_OK


def _cmd_chaos_table(args: argparse.Namespace) -> int:
    from lorenz_covering.chaos.report_generator import write_chaos_report
    from lorenz_covering.chaos.table import chaos_table

    specs = [_parse_system_token(tok, None if tok.strip().lower() == "standard" else args.params)
             for tok in args.systems.split(",") if tok.strip()]
    cfg = _lyapunov_config(args)
    rows = chaos_table(specs, cfg, workers=args.workers)

    table = Table(title=f"[bold cyan]Chaos comparison (seed {cfg.seed})[/bold cyan]",
                  box=box.ROUNDED)
    table.add_column("System", style="bold white")
    table.add_column("n", justify="right")
    table.add_column("lambda1", justify="right", style="green")
    table.add_column("stderr", justify="right")
    table.add_column("Status", style="dim")
    for row in rows:
        table.add_row(
            row.system,
            "-" if row.n is None else str(row.n),
            f"{row.lambda1:.5f}" if row.ok else "N/A",
            f"{row.stderr:.5f}" if row.stderr is not None else "N/A",
            "ok" if row.ok else escape(row.error or ""),
        )
    console.print(table)
    console.print(f"seed: {cfg.seed}")
    if args.report:
        path = write_chaos_report(rows, args.report, cfg)
        console.print(f"  [green]✓[/green] [dim]{escape(str(path))}[/dim]")
    return EXIT_OK if all(r.ok for r in rows) else EXIT_NUMERICAL


def _cmd_fixed_points(args: argparse.Namespace) -> int:
    from lorenz_covering.dynamics.fixed_points import fixed_points
    from lorenz_covering.dynamics.models import CoordKind

    spec = _system_spec(args.system, args.n, args.params)
    for fp in fixed_points(spec):
        line = _fmt_state(fp.state.as_array())
        if fp.coords == CoordKind.polar:
            line = f"polar {line}"
        if fp.degenerate:
            line += f"  degenerate: {fp.note}"
        console.print(line, highlight=False, markup=False)
    return EXIT_OK


def _cmd_render(args: argparse.Namespace) -> int:
    from lorenz_covering.io.chart_generator import render_projections, render_svg
    from lorenz_covering.io.models import ColorBy, RenderOptions, parse_projection

    try:
        parse_projection(args.proj)
    except ValueError as exc:
        raise ParameterDomainError(str(exc)) from exc
    traj = _read_input(args.input)
    options = RenderOptions(color_by=ColorBy.none if args.no_color else ColorBy.color, title=args.title)
    if args.all_projections:
        written = render_projections(traj, args.out, options)
        ok = bool(written)
    else:
        ok = render_svg(traj, args.proj, options, path=args.out) is not None
        written = [Path(args.out)] if ok else []
    if not ok:
        err_console.print("[yellow]matplotlib is not installed; install the 'render' extra[/yellow]")
        return EXIT_CONFIG
    for path in written:
        console.print(f"  [green]✓[/green] [dim]{escape(str(path))}[/dim]")
    return EXIT_OK


_COMMANDS: dict[str, Callable[[argparse.Namespace], int]] = {
    "simulate": _cmd_simulate,
    "transform": _cmd_transform,
    "cover": _cmd_cover,
    "factor": _cmd_factor,
    "extend": _cmd_extend,
    "lyapunov": _cmd_lyapunov,
    "chaos-table": _cmd_chaos_table,
    "fixed-points": _cmd_fixed_points,
    "render": _cmd_render,
}


# ── Entry point ───────────────────────────────────────────────────────────────

def main(argv: list[str] | None = None) -> int:
    from dotenv import find_dotenv, load_dotenv

    load_dotenv(find_dotenv(usecwd=True))
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
    )

    try:
        return _COMMANDS[args.command](args)
    except (AxisDomainError, NumericalFailure) as exc:
        err_console.print(f"[red]Numerical failure:[/red] {escape(str(exc))}", soft_wrap=True)
        return EXIT_NUMERICAL
    except (ParameterDomainError, ScenarioError, TrajectoryFormatError) as exc:
        err_console.print(f"[red]Error:[/red] {escape(str(exc))}", soft_wrap=True)
        return EXIT_CONFIG
    except ValidationError as exc:
        err_console.print(f"[red]Error:[/red] {escape(_first_error(exc))}", soft_wrap=True)
        return EXIT_CONFIG
    except ValueError as exc:
        err_console.print(f"[red]Error:[/red] {escape(str(exc))}", soft_wrap=True)
        return EXIT_CONFIG
    except OSError as exc:
        err_console.print(f"[red]Error:[/red] {escape(str(exc))}", soft_wrap=True)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
