"""Command-line front end.

Subcommands: ``solve`` (paired equilibria for one scenario), ``table``
(reproduce one published table, optionally with a --diff against the
published values), ``sweep`` (one-parameter comparative statics),
``phi-curve`` (response-curve export), ``impact`` (aggregate market cost of
a price change), and ``mc-check`` (simulation check of the informed-share
formula).

Global flags: ``--config PATH`` (scenario file), ``--format csv|json``,
``--out PATH`` (write the document to a file instead of stdout),
``--seed N`` (Monte Carlo commands), ``--tol X`` (solver tolerance
override).  Exit codes: 0 success, 1 usage or validation error, 2 solver
failure.

The scenario config file is flat ``key = value`` text; ``#`` starts a
comment.  Recognized keys: ``marginal_cost``, ``fixed_cost``,
``population``, ``lambda``, ``uniform_ad_price`` and, per segment i (zero
based), ``segments[i].weight``, ``segments[i].alpha``,
``segments[i].ad_price``.  Unknown keys are rejected so typos cannot
silently skew a replication.  Unset keys fall back to the base case; if any
segment key is present the whole segment list must be given.
"""

from __future__ import annotations

import re
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import click

from . import reporting
from .equilibrium import MarketScenario, Segment, compare
from .errors import ParameterError, SolverError
from .info import InfoTechnology, informed_fraction_monte_carlo
from .published import TABLE_IDS
from .scenarios import SweepSpec, base_case, market_impact, run_table, sweep

_SCALAR_KEYS = ("marginal_cost", "fixed_cost", "population", "lambda", "uniform_ad_price")
_SEGMENT_KEY = re.compile(r"^segments\[(\d+)\]\.(weight|alpha|ad_price)$")


def parse_config_text(text: str) -> dict:
    """Parse flat key = value config text into {key: float}."""
    values: dict[str, float] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParameterError(f"config line {line_no}: expected 'key = value', got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        if key not in _SCALAR_KEYS and not _SEGMENT_KEY.match(key):
            raise ParameterError(f"config line {line_no}: unknown key {key!r}")
        if key in values:
            raise ParameterError(f"config line {line_no}: duplicate key {key!r}")
        try:
            values[key] = float(value.strip())
        except ValueError:
            raise ParameterError(
                f"config line {line_no}: value for {key!r} is not a number: {value.strip()!r}"
            ) from None
    return values


def scenario_from_config(values: dict) -> MarketScenario:
    """Build a scenario from parsed overrides; unset keys use the base case."""
    default = base_case()
    segment_fields: dict[int, dict[str, float]] = {}
    for key, value in values.items():
        match = _SEGMENT_KEY.match(key)
        if match:
            segment_fields.setdefault(int(match.group(1)), {})[match.group(2)] = value

    if segment_fields:
        indices = sorted(segment_fields)
        if indices != list(range(len(indices))):
            raise ParameterError(
                f"segment indices must be contiguous from 0, got {indices}"
            )
        segments = []
        for i in indices:
            fields = segment_fields[i]
            missing = {"weight", "alpha", "ad_price"} - fields.keys()
            if missing:
                raise ParameterError(
                    f"segments[{i}] is missing {sorted(missing)}; give all three fields"
                )
            segments.append(Segment(**fields))
        segments = tuple(segments)
    else:
        segments = default.segments

    return MarketScenario(
        marginal_cost=values.get("marginal_cost", default.marginal_cost),
        fixed_cost=values.get("fixed_cost", default.fixed_cost),
        population=values.get("population", default.population),
        uniform_ad_price=values.get("uniform_ad_price", default.uniform_ad_price),
        tech=InfoTechnology(values.get("lambda", default.tech.lam)),
        segments=segments,
    )


@dataclass(frozen=True)
class RunConfig:
    """Resolved global options for one CLI invocation."""

    scenario: MarketScenario
    fmt: str
    out: Optional[Path]
    seed: int
    tol: Optional[float]

    def emit(self, document: str) -> None:
        if self.out is None:
            sys.stdout.write(document)
        else:
            with open(self.out, "w", encoding="utf-8", newline="") as handle:
                handle.write(document)


@click.group()
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False, path_type=Path),
              default=None, help="Scenario config file (flat key = value text).")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv",
              show_default=True, help="Output document format.")
@click.option("--out", "out_path", type=click.Path(dir_okay=False, path_type=Path),
              default=None, help="Write the document to this file instead of stdout.")
@click.option("--seed", type=int, default=0, show_default=True,
              help="Random seed for Monte Carlo commands.")
@click.option("--tol", type=float, default=None,
              help="Override the solver root-finder tolerance.")
@click.pass_context
def cli(ctx, config_path, fmt, out_path, seed, tol):
    """Free-entry advertising equilibria with and without target marketing."""
    values = parse_config_text(config_path.read_text(encoding="utf-8")) if config_path else {}
    ctx.obj = RunConfig(
        scenario=scenario_from_config(values),
        fmt=fmt,
        out=out_path,
        seed=seed,
        tol=tol,
    )


@cli.command()
@click.pass_obj
def solve(cfg: RunConfig):
    """Solve both regimes for the configured scenario."""
    report = compare(cfg.scenario, xtol=cfg.tol)
    if cfg.fmt == "json":
        cfg.emit(reporting.report_to_json(report, cfg.scenario))
    else:
        cfg.emit(reporting.report_to_csv(report))


@cli.command()
@click.option("--id", "table_id", required=True, type=click.Choice(TABLE_IDS),
              help="Which published table to reproduce.")
@click.option("--diff", "show_diff", is_flag=True,
              help="Also emit published values and absolute deviations.")
@click.option("--variant", type=click.Choice(["tables", "text"]), default="tables",
              show_default=True, help="Targeted ad-price reading for group 2.")
@click.option("--plot", "plot_path", type=click.Path(dir_okay=False, path_type=Path),
              default=None, help="Render a figure of the table to this file.")
@click.pass_obj
def table(cfg: RunConfig, table_id, show_diff, variant, plot_path):
    """Reproduce one published simulation table."""
    rows = run_table(table_id, variant)
    if show_diff:
        document = (reporting.table_diff_to_json(table_id, rows) if cfg.fmt == "json"
                    else reporting.table_diff_to_csv(table_id, rows))
    else:
        document = (reporting.table_to_json(table_id, rows) if cfg.fmt == "json"
                    else reporting.table_to_csv(rows))
    cfg.emit(document)
    if plot_path is not None:
        from . import plotting

        plotting.save_table_figure(table_id, rows, plot_path)


@cli.command()
@click.option("--param", "parameter", required=True,
              help="Parameter to vary: w1, alpha1, alpha2, fixed_cost, lambda, "
                   "uniform_ad_price, or R<i>.")
@click.option("--values", "values_text", required=True,
              help="Comma-separated list of parameter values.")
@click.option("--plot", "plot_path", type=click.Path(dir_okay=False, path_type=Path),
              default=None, help="Render the sweep to this file.")
@click.pass_obj
def sweep_cmd(cfg: RunConfig, parameter, values_text, plot_path):
    """Solve the comparison across a range of one parameter."""
    try:
        values = tuple(float(v) for v in values_text.split(",") if v.strip())
    except ValueError:
        raise ParameterError(f"--values must be comma-separated numbers, got {values_text!r}") from None
    points = sweep(SweepSpec(base=cfg.scenario, parameter=parameter, values=values))
    document = (reporting.sweep_to_json(parameter, points) if cfg.fmt == "json"
                else reporting.sweep_to_csv(points))
    cfg.emit(document)
    if plot_path is not None:
        from . import plotting

        plotting.save_sweep_figure(parameter, points, plot_path)


cli.add_command(sweep_cmd, name="sweep")


@cli.command("phi-curve")
@click.option("--lambda", "lam", type=float, default=0.1, show_default=True,
              help="Message-exposure probability.")
@click.option("--max-a", type=float, default=40.0, show_default=True,
              help="Largest intensity to export.")
@click.option("--step", type=float, default=0.1, show_default=True,
              help="Intensity grid step.")
@click.option("--plot", "plot_path", type=click.Path(dir_okay=False, path_type=Path),
              default=None, help="Render the curve to this file.")
@click.pass_obj
def phi_curve(cfg: RunConfig, lam, max_a, step, plot_path):
    """Export the informed-fraction response curve."""
    if step <= 0.0:
        raise ParameterError(f"step must be positive, got {step!r}")
    if max_a < 0.0:
        raise ParameterError(f"max-a must be nonnegative, got {max_a!r}")
    tech = InfoTechnology(lam)
    count = int(max_a / step + 1e-9)
    intensities = [i * step for i in range(count + 1)]
    informed = [tech.phi(a) for a in intensities]
    document = (reporting.curve_to_json(lam, intensities, informed) if cfg.fmt == "json"
                else reporting.curve_to_csv(intensities, informed))
    cfg.emit(document)
    if plot_path is not None:
        from . import plotting

        plotting.save_curve_figure(intensities, informed, lam, plot_path)


@cli.command()
@click.option("--market-size", type=float, required=True,
              help="Market size in money units.")
@click.option("--price-change", type=float, required=True,
              help="Fractional price change (0.01 = 1%).")
@click.option("--offline-multiplier", type=float, default=1.0, show_default=True,
              help="Scale-up for purchases researched online but made offline.")
@click.option("--growth-multiplier", type=float, default=1.0, show_default=True,
              help="Scale-up for projected market growth.")
@click.pass_obj
def impact(cfg: RunConfig, market_size, price_change, offline_multiplier, growth_multiplier):
    """Scale a price change to aggregate consumer cost."""
    result = market_impact(market_size, price_change, offline_multiplier, growth_multiplier)
    cfg.emit(reporting.impact_to_json(result) if cfg.fmt == "json"
             else reporting.impact_to_csv(result))


@cli.command("mc-check")
@click.option("--lambda", "lam", type=float, default=0.1, show_default=True,
              help="Message-exposure probability.")
@click.option("--messages", type=int, default=4, show_default=True,
              help="Messages each simulated consumer is exposed to.")
@click.option("--trials", type=int, default=1_000_000, show_default=True,
              help="Number of simulated consumers.")
@click.pass_obj
def mc_check(cfg: RunConfig, lam, messages, trials):
    """Check the informed-share formula against simulation."""
    result = informed_fraction_monte_carlo(lam, messages, trials, cfg.seed)
    pairs = reporting.mc_check_pairs(lam, messages, trials, cfg.seed, result)
    cfg.emit(reporting.mc_check_to_json(pairs) if cfg.fmt == "json"
             else reporting.mc_check_to_csv(pairs))


def main(argv=None) -> int:
    """Run the CLI; returns the process exit code (0/1/2)."""
    try:
        cli.main(args=argv, prog_name="targetmark", standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.UsageError as exc:
        click.echo(f"error: {exc.format_message()}", err=True)
        return 1
    except click.ClickException as exc:
        click.echo(f"error: {exc.format_message()}", err=True)
        return 1
    except ParameterError as exc:
        click.echo(f"error: {exc}", err=True)
        return 1
    except SolverError as exc:
        click.echo(f"solver error: {exc}", err=True)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
