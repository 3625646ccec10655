"""CLI commands for hyperturan."""

import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any

import typer
from loguru import logger
from rich.console import Console
from rich.table import Table

from hyperturan import __version__
from hyperturan.config.schema import Config
from hyperturan.errors import HyperturanError, ParseError

app = typer.Typer(
    name="hyperturan",
    help="hyperturan - alpha-spectral radii and Turan problems for uniform hypergraphs",
    no_args_is_help=True,
)

console = Console()

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NUMERIC = 2


@dataclass
class GlobalOptions:
    """Options given before the subcommand; applied on top of the loaded config."""

    threads: int | None = None
    seed: int | None = None
    tolerance: float | None = None
    json_output: bool = False


_OPTIONS = GlobalOptions()


def _configure_logging(level: str) -> None:
    logger.remove()
    logger.add(sys.stderr, level=level.upper())


def _load_runtime_config() -> Config:
    """Load config strictly and apply the global solver overrides."""
    from hyperturan.config.loader import ConfigLoadError, load_config

    try:
        config = load_config(strict=True)
    except ConfigLoadError as exc:
        console.print("[red]Error: Failed to load config.[/red]")
        console.print(f"Path: {exc.path}")
        console.print(f"Reason: {exc}")
        raise typer.Exit(EXIT_USAGE) from exc

    overrides: dict[str, Any] = {}
    if _OPTIONS.threads is not None:
        overrides["threads"] = _OPTIONS.threads
    if _OPTIONS.seed is not None:
        overrides["seed"] = _OPTIONS.seed
    if _OPTIONS.tolerance is not None:
        overrides["tolerance"] = _OPTIONS.tolerance
    if overrides:
        config = config.model_copy(update={"solver": config.solver.model_copy(update=overrides)})
    return config


def _fail(exc: HyperturanError) -> typer.Exit:
    console.print(f"[red]Error ({type(exc).__name__}):[/red] {exc}")
    return typer.Exit(exc.exit_code)


def _print_json(data: Any) -> None:
    # plain print keeps the payload machine-readable (no rich wrapping)
    print(json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False, default=str))


def _load_graph(builtin: str | None, file: Path | None):
    """Exactly one of --builtin / --file."""
    from hyperturan.hypergraph.builders import resolve_builtin
    from hyperturan.hypergraph.textio import read_hypergraph

    if (builtin is None) == (file is None):
        raise ParseError("give exactly one of --builtin or --file")
    if builtin is not None:
        return resolve_builtin(builtin)
    try:
        return read_hypergraph(file)
    except OSError as exc:
        raise ParseError(f"cannot read {file}: {exc.strerror or exc}") from exc


def _load_pattern(text: str):
    """A pattern file path, or a named pattern such as `chromatic:k=2,r=3`."""
    from hyperturan.patterns.pattern import read_pattern, resolve_pattern

    path = Path(text).expanduser()
    if path.is_file():
        return read_pattern(path)
    return resolve_pattern(text)


def version_callback(value: bool):
    if value:
        console.print(f"hyperturan v{__version__}")
        raise typer.Exit()


@app.callback()
def main(
    version: bool = typer.Option(None, "--version", callback=version_callback, is_eager=True),
    log_level: str = typer.Option("WARNING", "--log-level", help="Log level on stderr"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Shorthand for --log-level DEBUG"),
    threads: int | None = typer.Option(None, "--threads", min=1, help="Parallel solver threads"),
    seed: int | None = typer.Option(None, "--seed", help="Override the solver seed"),
    tolerance: float | None = typer.Option(
        None, "--tolerance", min=0.0, help="Override the residual tolerance"
    ),
    json_output: bool = typer.Option(False, "--json", help="Print results as JSON"),
):
    """hyperturan - spectral Turan problems for uniform hypergraphs."""
    _configure_logging("DEBUG" if verbose else log_level)
    _OPTIONS.threads = threads
    _OPTIONS.seed = seed
    _OPTIONS.tolerance = tolerance
    _OPTIONS.json_output = json_output


# ============================================================================
# Spectral radius
# ============================================================================


@app.command()
def spectral(
    builtin: str | None = typer.Option(None, "--builtin", "-b", help="e.g. K_3, edge:r=3"),
    file: Path | None = typer.Option(None, "--file", "-f", help="Hypergraph file (hg n r m)"),
    alpha: float = typer.Option(2.0, "--alpha", "-a", help="Norm exponent alpha >= 1"),
):
    """Compute lambda^(alpha) of one hypergraph."""
    from hyperturan.spectral.solver import alpha_spectral_radius
    from hyperturan.spectral.sweep import vector_stats

    config = _load_runtime_config()
    try:
        h = _load_graph(builtin, file)
        estimate = alpha_spectral_radius(h, alpha, config.solver)
    except HyperturanError as exc:
        raise _fail(exc) from exc

    stats = vector_stats(estimate.vector)
    if _OPTIONS.json_output:
        _print_json({"n": h.n, "r": h.r, "e": h.e, **estimate.as_dict(), **stats.as_dict()})
    else:
        console.print(f"lambda    = {estimate.value:.12g}")
        console.print(f"residual  = {estimate.residual:.3g}")
        console.print(f"x_min     = {stats.x_min:.12g}")
        console.print(f"ratio     = {stats.principal_ratio:.12g}")
        console.print(f"method    = {estimate.method} ({estimate.restarts_used} restarts)")
        if not estimate.converged:
            console.print("[yellow]Warning: solver did not reach the residual tolerance[/yellow]")
    if not estimate.converged:
        raise typer.Exit(EXIT_NUMERIC)


@app.command()
def sweep(
    builtin: str | None = typer.Option(None, "--builtin", "-b"),
    file: Path | None = typer.Option(None, "--file", "-f"),
    alphas: str = typer.Option(
        "1:100:log", "--alphas", help="`1,2,4` or `start:stop:log|lin[:points]`"
    ),
    output: Path | None = typer.Option(None, "--output", "-o", help="CSV path (default stdout)"),
):
    """Solve along an alpha grid and emit alpha,lambda,residual as CSV."""
    from hyperturan.spectral.sweep import alpha_sweep, parse_alpha_grid, sweep_csv

    config = _load_runtime_config()
    try:
        h = _load_graph(builtin, file)
        estimates = alpha_sweep(h, parse_alpha_grid(alphas), config.solver)
    except HyperturanError as exc:
        raise _fail(exc) from exc

    text = sweep_csv(estimates)
    if output is None:
        print(text, end="")
    else:
        output.write_text(text, encoding="utf-8")
        console.print(f"[green]✓[/green] Wrote {len(estimates)} rows to {output}")
    if not all(e.converged for e in estimates):
        raise typer.Exit(EXIT_NUMERIC)


# ============================================================================
# Constructions and densities
# ============================================================================


@app.command()
def construct(
    name: str = typer.Argument(..., help="Builder: edge, complete, turan, chromatic, ..."),
    n: int | None = typer.Option(None, "--n"),
    l: int | None = typer.Option(None, "--l"),  # noqa: E741
    k: int | None = typer.Option(None, "--k"),
    r: int | None = typer.Option(None, "--r"),
    sizes: str | None = typer.Option(None, "--sizes", help="Block sizes a-b-c (partite)"),
    graph: str | None = typer.Option(None, "--graph", help="Inner 2-graph (expansion)"),
    output: Path | None = typer.Option(None, "--output", "-o", help="File path (default stdout)"),
):
    """Build a named hypergraph and write it in the `hg n r m` format."""
    from hyperturan.hypergraph.builders import resolve_builtin
    from hyperturan.hypergraph.textio import format_hypergraph

    params = {"n": n, "l": l, "k": k, "r": r, "sizes": sizes}
    text = ",".join(f"{key}={value}" for key, value in params.items() if value is not None)
    if graph is not None:
        text = f"F={graph}" + (f",{text}" if text else "")
    try:
        h = resolve_builtin(f"{name}:{text}" if text else name)
    except HyperturanError as exc:
        raise _fail(exc) from exc

    if output is None:
        print(format_hypergraph(h), end="")
    else:
        output.write_text(format_hypergraph(h), encoding="utf-8")
        console.print(f"[green]✓[/green] Wrote n={h.n} r={h.r} e={h.e} to {output}")


@app.command()
def density(
    pattern: str = typer.Option(..., "--pattern", "-p", help="Pattern file or complete:l=3,r=2"),
    method: str = typer.Option(
        "simplex-optimization", "--method", help="simplex-optimization | finite-n-ratio"
    ),
):
    """Estimate the edge density pi(Col(P))."""
    from hyperturan.patterns.density import pattern_density

    if method not in ("simplex-optimization", "finite-n-ratio"):
        console.print(f"[red]Error: unknown method {method!r}[/red]")
        raise typer.Exit(EXIT_USAGE)
    config = _load_runtime_config()
    try:
        estimate = pattern_density(_load_pattern(pattern), config, method)  # type: ignore[arg-type]
    except HyperturanError as exc:
        raise _fail(exc) from exc

    if _OPTIONS.json_output:
        _print_json(estimate.as_dict())
        return
    console.print(f"pi        = {estimate.value:.12g} ({estimate.method})")
    console.print(f"simplex   = {estimate.simplex_value:.12g}")
    if estimate.extrapolated is not None:
        console.print(f"finite-n  = {estimate.extrapolated:.12g}")
    if estimate.last_ratio is not None:
        console.print(f"trace end = {estimate.last_ratio:.12g} (nonincreasing: "
                      f"{estimate.trace_nonincreasing})")
    for note in estimate.notes:
        console.print(f"[dim]{note}[/dim]")


# ============================================================================
# Extremal searches
# ============================================================================


@app.command()
def extremal(
    n: int = typer.Option(..., "--n", min=0),
    forbidden: list[str] = typer.Option([], "--forbidden", "-F", help="Forbidden builtin graph"),
    pattern: list[str] = typer.Option([], "--pattern", "-p", help="Pattern (Col(P) family)"),
    kind: str = typer.Option("spex", "--kind", help="ex | spex"),
    r: int | None = typer.Option(None, "--r", help="Uniformity (defaults to the family's)"),
    alpha: float = typer.Option(2.0, "--alpha", "-a"),
    mode: str = typer.Option("auto", "--mode", help="auto | exhaustive | iso"),
):
    """EX or SPEX over an F-free family (--forbidden) or a colourable family (--pattern)."""
    from hyperturan.extremal.colorable import ex_col_union, spex_col_union
    from hyperturan.extremal.search import spectral_extremal, turan_number
    from hyperturan.hypergraph.builders import resolve_builtin

    if kind not in ("ex", "spex") or mode not in ("auto", "exhaustive", "iso"):
        console.print(f"[red]Error: bad --kind {kind!r} or --mode {mode!r}[/red]")
        raise typer.Exit(EXIT_USAGE)
    if bool(forbidden) == bool(pattern):
        console.print("[red]Error: give --forbidden or --pattern (not both)[/red]")
        raise typer.Exit(EXIT_USAGE)

    config = _load_runtime_config()
    try:
        if pattern:
            patterns = [_load_pattern(p) for p in pattern]
            if kind == "ex":
                report = ex_col_union(patterns, n, config)
            else:
                report = spex_col_union(patterns, n, alpha, config)
        else:
            family = [resolve_builtin(f) for f in forbidden]
            uniformity = r if r is not None else family[0].r
            if kind == "ex":
                report = turan_number(family, n, uniformity, config, mode=mode)  # type: ignore[arg-type]
            else:
                report = spectral_extremal(
                    family, n, uniformity, alpha, config, mode=mode  # type: ignore[arg-type]
                )
    except HyperturanError as exc:
        raise _fail(exc) from exc

    if _OPTIONS.json_output:
        _print_json(report.as_dict())
    else:
        label = "ex" if report.kind == "EX" else f"lambda^({alpha:g})"
        console.print(f"{report.kind} n={report.n} r={report.r}: {label} = {report.optimum:.12g}")
        table = Table(title=f"{len(report.witnesses)} witness(es), mode {report.mode}")
        table.add_column("#", style="cyan")
        table.add_column("edges")
        table.add_column("value")
        table.add_column("composition")
        for i, w in enumerate(report.witnesses):
            comp = "-" if w.composition is None else "-".join(map(str, w.composition))
            table.add_row(str(i), str(w.graph.e), f"{w.value:.12g}", comp)
        console.print(table)
        for name, ok in sorted(report.audit.items()):
            console.print(f"  {'[green]✓[/green]' if ok else '[red]✗[/red]'} {name}")
        for note in report.notes:
            console.print(f"[dim]{note}[/dim]")
    if not report.passed:
        raise typer.Exit(EXIT_NUMERIC)


# ============================================================================
# Verification experiments
# ============================================================================


@app.command()
def verify(
    name: str = typer.Argument("all", help="Experiment name or `all`"),
    output_dir: Path | None = typer.Option(None, "--output-dir", "-o", help="Report directory"),
):
    """Run registered experiments; writes JSON + Markdown reports and exits 0 iff all pass."""
    from hyperturan.experiments.ledger import RunLedger
    from hyperturan.experiments.registry import resolve_experiments, run_experiment

    config = _load_runtime_config()
    try:
        specs = resolve_experiments(name)
    except HyperturanError as exc:
        raise _fail(exc) from exc

    out = output_dir.expanduser() if output_dir else config.output_path
    ledger = RunLedger(
        out,
        max_bytes=config.reports.ledger_max_bytes,
        max_archives=config.reports.ledger_max_archives,
    )
    table = Table(title="Verification")
    table.add_column("Experiment", style="cyan")
    table.add_column("Checks")
    table.add_column("Failures")
    table.add_column("Time")
    table.add_column("Status")

    all_passed = True
    summaries: list[dict[str, Any]] = []
    for spec in specs:
        report = run_experiment(spec, config)
        paths = report.write(out, markdown=config.reports.write_markdown)
        ledger.append(report)
        all_passed = all_passed and report.passed
        summaries.append({"experiment": spec.name, "passed": report.passed,
                          "report": str(paths[0])})
        status = "[green]pass[/green]" if report.passed else "[red]FAIL[/red]"
        if report.error:
            status = f"[red]error[/red] {report.error}"
        table.add_row(spec.name, str(len(report.records)), str(report.failures),
                      f"{report.wall_time:.1f}s", status)

    if _OPTIONS.json_output:
        _print_json({"passed": all_passed, "experiments": summaries})
    else:
        console.print(table)
        console.print(f"Reports in {out}")
    if not all_passed:
        raise typer.Exit(EXIT_NUMERIC)


experiments_app = typer.Typer(help="Browse registered experiments and past runs")
app.add_typer(experiments_app, name="experiments")


@experiments_app.command("list")
def experiments_list():
    """List registered experiments."""
    from hyperturan.experiments.registry import EXPERIMENTS

    table = Table(title="Experiments")
    table.add_column("Name", style="cyan", no_wrap=True)
    table.add_column("Claim")
    table.add_column("Source")
    table.add_column("Seed", no_wrap=True)
    for spec in EXPERIMENTS:
        seed = "-" if spec.seed is None else str(spec.seed)
        table.add_row(spec.name, spec.title, spec.location, seed)
    console.print(table)


@experiments_app.command("history")
def experiments_history(
    limit: int = typer.Option(20, "--limit", "-n", min=1),
    latest: bool = typer.Option(False, "--latest", help="Only the last run of each experiment"),
    output_dir: Path | None = typer.Option(None, "--output-dir", "-o"),
):
    """Show recent verify runs from the ledger."""
    from hyperturan.experiments.ledger import RunLedger

    config = _load_runtime_config()
    out = output_dir.expanduser() if output_dir else config.output_path
    ledger = RunLedger(out)
    entries = list(ledger.latest().values()) if latest else ledger.entries(limit)
    if not entries:
        console.print("No recorded runs.")
        return

    table = Table(title=f"Last {len(entries)} run(s)")
    table.add_column("Time")
    table.add_column("Experiment", style="cyan")
    table.add_column("Checks")
    table.add_column("Status")
    for entry in entries:
        status = "[green]pass[/green]" if entry.passed else "[red]FAIL[/red]"
        if entry.error:
            status = "[red]error[/red]"
        table.add_row(entry.ts, entry.experiment, str(entry.checks), status)
    console.print(table)


# ============================================================================
# Config
# ============================================================================

config_app = typer.Typer(help="Create and inspect ~/.hyperturan/config.json")
app.add_typer(config_app, name="config")


@config_app.command("init")
def config_init(
    force: bool = typer.Option(False, "--force", help="Reset every field to its default"),
):
    """Write the config file, keeping existing values and adding new fields."""
    from hyperturan.config.loader import (
        ConfigLoadError,
        file_config,
        get_config_path,
        read_config_data,
        save_config,
    )

    path = get_config_path()
    existed = path.exists()
    try:
        data = read_config_data(path) if existed and not force else {}
        config = file_config(data)
    except (ConfigLoadError, ValueError) as exc:
        console.print(f"[red]Error: cannot refresh {path}:[/red] {exc}")
        console.print("Fix the file or rerun with --force.")
        raise typer.Exit(EXIT_USAGE) from exc

    save_config(config, path)
    if not existed:
        console.print(f"[green]✓[/green] Created config at {path}")
    elif force:
        console.print(f"[green]✓[/green] Config reset to defaults at {path}")
    else:
        console.print(f"[green]✓[/green] Config refreshed at {path} (existing values preserved)")


@config_app.command("show")
def config_show():
    """Print the effective config and the HYPERTURAN_ variables that shaped it."""
    from hyperturan.config.loader import env_overrides, get_config_path

    config = _load_runtime_config()
    path = get_config_path()
    if not _OPTIONS.json_output:
        console.print(f"Config file: {path}" + ("" if path.exists() else " (not created, defaults)"))
    _print_json(config.model_dump(mode="json", by_alias=True))
    overrides = env_overrides()
    if overrides and not _OPTIONS.json_output:
        table = Table(title="Environment overrides")
        table.add_column("Variable", style="cyan", no_wrap=True)
        table.add_column("Value")
        for (section, name), value in overrides.items():
            table.add_row(f"HYPERTURAN_{section.upper()}__{name.upper()}", value)
        console.print(table)
