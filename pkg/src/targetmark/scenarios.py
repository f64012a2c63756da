"""Preset scenario families, table reproduction, sweeps, and market impact.

The presets rebuild the four published simulation tables: T1 varies the
responsive group's population share, T2 varies the gap between the two
purchase probabilities holding the blend fixed, T3 doubles fixed costs, and
T4 doubles the message-exposure probability.

Ad-price convention: the source parameter statement is ambiguous about which
group pays the premium targeted rate.  The defaults here, R1 = 0.0125 for
the responsive group and R2 = 0.0100, are the unique assignment that
reproduces all published table columns.  ``variant="text"`` switches the
second group to the premium rate as well (R2 = 0.0125), the reading implied
by the accompanying worked example (A2 near 0.09, Q2 near 0.62); both
parameterizations are runnable so the discrepancy can be studied directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Optional

from .equilibrium import ComparisonReport, MarketScenario, Segment, compare
from .errors import ParameterError, SolverError
from .info import InfoTechnology

TABLE_IDS = ("T1", "T2", "T3", "T4")

_COMMON = {"marginal_cost": 8.0, "fixed_cost": 50.0, "population": 1000.0,
           "uniform_ad_price": 0.01, "lambda": 0.10}
_AD_PRICES = {"tables": (0.0125, 0.0100), "text": (0.0125, 0.0125)}
_BASE_ALPHAS = (0.40, 0.04)
_WEIGHT_COLUMNS = (0.500, 0.250, 0.100, 0.050)
_ALPHA_COLUMNS = ((0.40, 0.04), (0.38, 0.06), (0.34, 0.10), (0.28, 0.16))


def _scenario(w1, alphas, ad_prices, fixed_cost, lam) -> MarketScenario:
    return MarketScenario(
        marginal_cost=_COMMON["marginal_cost"],
        fixed_cost=fixed_cost,
        population=_COMMON["population"],
        uniform_ad_price=_COMMON["uniform_ad_price"],
        tech=InfoTechnology(lam),
        segments=(
            Segment(weight=w1, alpha=alphas[0], ad_price=ad_prices[0]),
            Segment(weight=1.0 - w1, alpha=alphas[1], ad_price=ad_prices[1]),
        ),
    )


def base_case(variant: str = "tables") -> MarketScenario:
    """The two-segment base case: equal groups, alphas 0.40/0.04."""
    return _scenario(0.5, _BASE_ALPHAS, _ad_prices(variant),
                     _COMMON["fixed_cost"], _COMMON["lambda"])


def _ad_prices(variant: str) -> tuple[float, float]:
    try:
        return _AD_PRICES[variant]
    except KeyError:
        raise ParameterError(
            f"unknown ad-price variant {variant!r}; expected one of {sorted(_AD_PRICES)}"
        ) from None


def preset(table_id: str, variant: str = "tables") -> list[MarketScenario]:
    """The four scenarios behind one published table, in column order."""
    ad_prices = _ad_prices(variant)
    if table_id == "T1":
        return [_scenario(w1, _BASE_ALPHAS, ad_prices, 50.0, 0.10) for w1 in _WEIGHT_COLUMNS]
    if table_id == "T2":
        return [_scenario(0.5, alphas, ad_prices, 50.0, 0.10) for alphas in _ALPHA_COLUMNS]
    if table_id == "T3":
        return [_scenario(w1, _BASE_ALPHAS, ad_prices, 100.0, 0.10) for w1 in _WEIGHT_COLUMNS]
    if table_id == "T4":
        return [_scenario(w1, _BASE_ALPHAS, ad_prices, 50.0, 0.20) for w1 in _WEIGHT_COLUMNS]
    raise ParameterError(f"unknown table id {table_id!r}; expected one of {TABLE_IDS}")


@dataclass(frozen=True)
class TableRow:
    """One solved table column in the published row structure."""

    group1_weight: float
    group1_alpha: float
    group2_alpha: float
    blended_alpha: float
    uniform_ad: float
    uniform_quantity: float
    uniform_price: float
    group1_ad: float
    group2_ad: float
    group1_quantity: float
    group2_quantity: float
    targeted_price: float
    price_change_pct: float

    def __post_init__(self):
        blend = (self.group1_weight * self.group1_alpha
                 + (1.0 - self.group1_weight) * self.group2_alpha)
        if abs(blend - self.blended_alpha) > 1e-12:
            raise ParameterError(
                f"blended alpha {self.blended_alpha!r} inconsistent with "
                f"weights/alphas (expected {blend!r})"
            )


def table_row(scenario: MarketScenario, report: ComparisonReport) -> TableRow:
    """Flatten a two-segment comparison into the published row structure."""
    if len(scenario.segments) != 2:
        raise ParameterError(
            f"table rows require exactly 2 segments, got {len(scenario.segments)}"
        )
    first, second = scenario.segments
    return TableRow(
        group1_weight=first.weight,
        group1_alpha=first.alpha,
        group2_alpha=second.alpha,
        blended_alpha=scenario.blended_alpha,
        uniform_ad=report.uniform.ad_intensity,
        uniform_quantity=report.uniform.quantity,
        uniform_price=report.uniform.price,
        group1_ad=report.targeted.ad_intensities[0],
        group2_ad=report.targeted.ad_intensities[1],
        group1_quantity=report.targeted.quantities[0],
        group2_quantity=report.targeted.quantities[1],
        targeted_price=report.targeted.price,
        price_change_pct=report.price_change_fraction * 100.0,
    )


def run_table(table_id: str, variant: str = "tables") -> list[TableRow]:
    """Solve every column of one published table."""
    rows = []
    for index, scenario in enumerate(preset(table_id, variant)):
        try:
            rows.append(table_row(scenario, compare(scenario)))
        except SolverError as exc:
            raise SolverError(f"{table_id} column {index + 1}: {exc}") from exc
    return rows


_SCALAR_SWEEPS = ("fixed_cost", "lambda", "uniform_ad_price")
_PAIR_SWEEPS = ("w1", "alpha1", "alpha2")


def _sweep_parameters(base: MarketScenario) -> tuple[str, ...]:
    names = _SCALAR_SWEEPS + tuple(f"R{i + 1}" for i in range(len(base.segments)))
    if len(base.segments) == 2:
        names = _PAIR_SWEEPS + names
    return names


@dataclass(frozen=True)
class SweepSpec:
    """A one-parameter family around a base scenario.

    ``parameter`` is one of: ``w1`` (second weight renormalized), ``alpha1``
    or ``alpha2`` (the other alpha adjusted to hold the blend fixed; both
    require two segments), ``fixed_cost``, ``lambda``, ``uniform_ad_price``,
    or ``R<i>`` for segment i's ad price.
    """

    base: MarketScenario
    parameter: str
    values: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        allowed = _sweep_parameters(self.base)
        if self.parameter not in allowed:
            raise ParameterError(
                f"unknown sweep parameter {self.parameter!r}; expected one of {allowed}"
            )


@dataclass(frozen=True)
class SweepPoint:
    """One sweep evaluation; exactly one of report/error is set."""

    value: float
    report: Optional[ComparisonReport]
    error: Optional[str]


def _apply_parameter(base: MarketScenario, parameter: str, value: float) -> MarketScenario:
    segments = base.segments
    if parameter == "w1":
        first, second = segments
        return replace(base, segments=(replace(first, weight=value),
                                       replace(second, weight=1.0 - value)))
    if parameter in ("alpha1", "alpha2"):
        first, second = segments
        blend = base.blended_alpha
        if parameter == "alpha1":
            other = (blend - first.weight * value) / second.weight
            return replace(base, segments=(replace(first, alpha=value),
                                           replace(second, alpha=other)))
        other = (blend - second.weight * value) / first.weight
        return replace(base, segments=(replace(first, alpha=other),
                                       replace(second, alpha=value)))
    if parameter == "fixed_cost":
        return replace(base, fixed_cost=value)
    if parameter == "lambda":
        return replace(base, tech=InfoTechnology(value))
    if parameter == "uniform_ad_price":
        return replace(base, uniform_ad_price=value)
    index = int(parameter[1:]) - 1  # R<i>
    return replace(
        base,
        segments=tuple(
            replace(seg, ad_price=value) if i == index else seg
            for i, seg in enumerate(segments)
        ),
    )


def sweep(spec: SweepSpec) -> list[SweepPoint]:
    """Evaluate the comparison at every sweep value, in input order.

    Failures (invalid generated scenario or solver breakdown) are recorded
    on their point and do not abort the rest of the sweep.
    """
    points = []
    for value in spec.values:
        try:
            scenario = _apply_parameter(spec.base, spec.parameter, value)
            points.append(SweepPoint(value=value, report=compare(scenario), error=None))
        except (ParameterError, SolverError) as exc:
            points.append(SweepPoint(value=value, report=None, error=str(exc)))
    return points


@dataclass(frozen=True)
class MarketImpact:
    """Aggregate cost of a price change, scaled to a market size."""

    current_cost: float
    with_offline: float
    projected: float


def market_impact(
    market_size: float,
    price_change_fraction: float,
    offline_multiplier: float = 1.0,
    growth_multiplier: float = 1.0,
) -> MarketImpact:
    """Scale a fractional price change to aggregate consumer cost.

    ``current_cost`` is size times the absolute change; ``with_offline``
    additionally counts purchases researched online but completed offline;
    ``projected`` scales that by expected market growth.
    """
    if not (math.isfinite(market_size) and market_size >= 0.0):
        raise ParameterError(f"market size must be nonnegative, got {market_size!r}")
    current = market_size * abs(price_change_fraction)
    with_offline = current * offline_multiplier
    return MarketImpact(
        current_cost=float(current),
        with_offline=float(with_offline),
        projected=float(with_offline * growth_multiplier),
    )
