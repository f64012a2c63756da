"""Free-entry market equilibria with uniform and per-segment advertising.

A firm with constant marginal cost ``C`` and fixed cost ``F`` sells to a
population ``N`` split into consumer segments.  Segment ``i`` has population
share ``w_i``, purchase probability ``alpha_i`` conditional on being
informed, and a per-person advertising price ``R_i``.  At price ``P`` and
per-segment intensities ``A_i``, profit is

    (P - C) * sum_i alpha_i * w_i * N * phi(A_i)
        - sum_i R_i * A_i * w_i * N  -  F

Two regimes are solved, each under free entry (zero economic profit):

* Uniform advertising: a single intensity ``A`` bought at the uniform ad
  price ``R`` reaches everyone, so revenue works through the blended
  purchase probability ``G = sum_i w_i * alpha_i``.  The advertising
  first-order condition ``phi'(A) * G * (P - C) = R`` combined with zero
  profit eliminates the margin, leaving the scale-free identity

      phi(A) / phi'(A) - A = F / (R * N)

  whose left side increases strictly from 0, so the intensity root is
  unique.  The margin then follows from the first-order condition.

* Targeted advertising: one intensity per segment.  For a trial margin
  ``m`` the first-order conditions give ``A_i = phi'^-1(R_i / (alpha_i *
  m))``; the optimized profit is continuous and strictly increasing in
  ``m`` (envelope theorem: its derivative is total quantity sold), so the
  zero-profit margin is the unique root of a bracketed scalar root-find.

Residuals of the defining equations are reported on every solved
equilibrium, scaled by ``max(1, |rhs|)``, and are rejected above 1e-10.
All values here are immutable and the solvers are pure functions, so
everything is safe to share across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

import numpy as np
from scipy.optimize import brentq

from .errors import MarketNotViableError, ParameterError, SolverError
from .info import InfoTechnology

_RTOL = 4.0 * float(np.finfo(float).eps)  # tightest bracket rtol brentq accepts


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ParameterError(message)


def _finite(x) -> bool:
    return isinstance(x, (int, float)) and math.isfinite(x)


@dataclass(frozen=True)
class Segment:
    """One consumer group: population share, purchase probability, ad price.

    Zero-weight segments are legal inputs and are dropped at scenario
    validation.  ``alpha == 0`` marks a group advertising can never convert;
    solvers assign it zero intensity and zero sales by convention.
    """

    weight: float
    alpha: float
    ad_price: float

    def __post_init__(self):
        _require(
            _finite(self.weight) and 0.0 <= self.weight <= 1.0,
            f"segment weight must lie in [0, 1], got {self.weight!r}",
        )
        _require(
            _finite(self.alpha) and 0.0 <= self.alpha <= 1.0,
            f"segment alpha must lie in [0, 1], got {self.alpha!r}",
        )
        _require(
            _finite(self.ad_price) and self.ad_price > 0.0,
            f"segment ad_price must be positive, got {self.ad_price!r}",
        )


@dataclass(frozen=True)
class MarketScenario:
    """Full parameter set for one market.

    Segments with zero weight are dropped on construction; the remaining
    weights must sum to 1 (within 1e-12) and the blended purchase
    probability must be positive.
    """

    marginal_cost: float
    fixed_cost: float
    population: float
    uniform_ad_price: float
    tech: InfoTechnology
    segments: tuple[Segment, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "segments", tuple(s for s in self.segments if s.weight > 0.0)
        )
        _require(
            _finite(self.marginal_cost) and self.marginal_cost > 0.0,
            f"marginal_cost must be positive, got {self.marginal_cost!r}",
        )
        _require(
            _finite(self.fixed_cost) and self.fixed_cost >= 0.0,
            f"fixed_cost must be nonnegative, got {self.fixed_cost!r}",
        )
        _require(
            _finite(self.population) and self.population > 0.0,
            f"population must be positive, got {self.population!r}",
        )
        _require(
            _finite(self.uniform_ad_price) and self.uniform_ad_price > 0.0,
            f"uniform_ad_price must be positive, got {self.uniform_ad_price!r}",
        )
        _require(isinstance(self.tech, InfoTechnology), "tech must be an InfoTechnology")
        _require(len(self.segments) >= 1, "at least one positive-weight segment is required")
        total = math.fsum(s.weight for s in self.segments)
        _require(
            abs(total - 1.0) <= 1e-12,
            f"segment weights must sum to 1 within 1e-12, got {total!r}",
        )
        _require(self.blended_alpha > 0.0, "blended purchase probability must be positive")

    @property
    def blended_alpha(self) -> float:
        """G: the population-weighted purchase probability."""
        return math.fsum(s.weight * s.alpha for s in self.segments)


@dataclass(frozen=True)
class UniformEquilibrium:
    """Solved uniform-advertising free-entry equilibrium."""

    ad_intensity: float
    price: float
    margin: float
    quantity: float
    foc_residual: float
    zero_profit_residual: float

    def __post_init__(self):
        _require(self.ad_intensity > 0.0, "ad_intensity must be positive")
        _require(self.margin > 0.0, "margin must be positive")
        _require(abs(self.foc_residual) <= 1e-8, "foc_residual exceeds 1e-8")
        _require(abs(self.zero_profit_residual) <= 1e-8, "zero_profit_residual exceeds 1e-8")


@dataclass(frozen=True)
class TargetedEquilibrium:
    """Solved per-segment-advertising free-entry equilibrium.

    ``ad_intensities[i] == 0`` only for degenerate ``alpha == 0`` segments.
    """

    price: float
    margin: float
    ad_intensities: tuple[float, ...]
    quantities: tuple[float, ...]
    foc_residuals: tuple[float, ...]
    zero_profit_residual: float

    def __post_init__(self):
        _require(self.margin > 0.0, "margin must be positive")
        _require(all(a >= 0.0 for a in self.ad_intensities), "intensities must be nonnegative")
        _require(
            all(abs(r) <= 1e-8 for r in self.foc_residuals),
            "a per-segment foc_residual exceeds 1e-8",
        )
        _require(abs(self.zero_profit_residual) <= 1e-8, "zero_profit_residual exceeds 1e-8")


@dataclass(frozen=True)
class RegimeMetrics:
    """Diagnostics for one solved regime."""

    implied_elasticity: float
    ad_to_sales_ratio: float
    fixed_cost_share: float
    take_up_rates: tuple[float, ...]
    blended_take_up: float


@dataclass(frozen=True)
class ComparisonReport:
    """Paired equilibria for one scenario plus derived metrics.

    ``price_change_fraction`` is (targeted price - uniform price) / uniform
    price; negative values mean consumers gain from targeting.
    """

    uniform: UniformEquilibrium
    targeted: TargetedEquilibrium
    price_change_fraction: float
    uniform_metrics: RegimeMetrics
    targeted_metrics: RegimeMetrics


@dataclass(frozen=True)
class ShortRunResult:
    """Per-segment optimal advertising at a fixed price, before entry reacts."""

    profit: float
    revenue: float
    ad_intensities: tuple[float, ...]
    quantities: tuple[float, ...]


Equilibrium = Union[UniformEquilibrium, TargetedEquilibrium]


def uniform_profit(scenario: MarketScenario, price: float, ad_intensity: float) -> float:
    """Profit with one intensity for everyone at the uniform ad price."""
    margin = price - scenario.marginal_cost
    n = scenario.population
    revenue = margin * n * scenario.blended_alpha * scenario.tech.phi(ad_intensity)
    return revenue - scenario.fixed_cost - scenario.uniform_ad_price * ad_intensity * n


def targeted_profit(
    scenario: MarketScenario, price: float, ad_intensities: Sequence[float]
) -> float:
    """Profit with one intensity per segment at per-segment ad prices."""
    intensities = tuple(float(a) for a in ad_intensities)
    if len(intensities) != len(scenario.segments):
        raise ParameterError(
            f"expected {len(scenario.segments)} ad intensities, got {len(intensities)}"
        )
    margin = price - scenario.marginal_cost
    n = scenario.population
    revenue = margin * math.fsum(
        seg.alpha * seg.weight * n * scenario.tech.phi(a)
        for seg, a in zip(scenario.segments, intensities)
    )
    ad_cost = math.fsum(
        seg.ad_price * a * seg.weight * n
        for seg, a in zip(scenario.segments, intensities)
    )
    return revenue - ad_cost - scenario.fixed_cost


def solve_uniform(scenario: MarketScenario, *, xtol: float | None = None) -> UniformEquilibrium:
    """Solve the free-entry equilibrium under uniform advertising.

    The intensity solves ``phi(A)/phi'(A) - A = F/(R*N)`` (strictly
    increasing from 0 in A, hence a unique root, bracketed by doubling and
    closed by Brent in s = sqrt(A) space with Newton polishing); the margin
    then follows from ``m = R / (G * phi'(A))``.
    """
    xtol = 1e-14 if xtol is None else float(xtol)
    tech, n = scenario.tech, scenario.population
    r, g_bar = scenario.uniform_ad_price, scenario.blended_alpha
    k = tech.decay
    target = scenario.fixed_cost / (r * n)
    if target <= 0.0:
        raise MarketNotViableError(
            "zero fixed cost admits only the degenerate zero-advertising equilibrium"
        )

    def gap(s: float) -> float:
        # phi/phi' - A - F/(R*N) expressed in s = sqrt(A)
        return (2.0 * s / k) * math.expm1(k * s) - s * s - target

    s_hi = 1.0
    for _ in range(200):
        if gap(s_hi) > 0.0:
            break
        s_hi *= 2.0
    else:
        raise SolverError(f"could not bracket the uniform intensity; F/(R*N) = {target!r}")
    s = brentq(gap, 0.0, s_hi, xtol=xtol, rtol=_RTOL)
    for _ in range(2):  # Newton polish, driving the profit residual to rounding level
        slope = math.expm1(k * s) * (2.0 / k + 2.0 * s)
        s -= gap(s) / slope

    ad = s * s
    margin = r / (g_bar * tech.phi_prime(ad))
    price = scenario.marginal_cost + margin
    quantity = n * g_bar * tech.phi(ad)
    foc = (tech.phi_prime(ad) * g_bar * margin - r) / max(1.0, abs(r))
    ad_spend = r * ad * n
    zero = uniform_profit(scenario, price, ad) / max(1.0, scenario.fixed_cost + ad_spend)
    if abs(foc) > 1e-10 or abs(zero) > 1e-10:
        raise SolverError(
            f"uniform equilibrium residuals out of tolerance: foc={foc:.3e}, profit={zero:.3e}"
        )
    return UniformEquilibrium(
        ad_intensity=float(ad),
        price=float(price),
        margin=float(margin),
        quantity=float(quantity),
        foc_residual=float(foc),
        zero_profit_residual=float(zero),
    )


def uniform_ad_invariance_certificate(scenario_family: Iterable[MarketScenario]) -> bool:
    """True iff the solved uniform intensities agree to 1e-8 across the family.

    Certifies that the uniform intensity depends only on ``F/(R*N)`` and the
    exposure probability, not on segment composition: families that differ
    only in weights or alphas must pass, families varying F, R, N or lambda
    generally must not.
    """
    intensities = [solve_uniform(s).ad_intensity for s in scenario_family]
    if len(intensities) <= 1:
        return True
    return max(intensities) - min(intensities) <= 1e-8


def optimal_intensities(scenario: MarketScenario, margin: float) -> tuple[float, ...]:
    """Per-segment first-order-condition intensities at a given margin.

    ``alpha == 0`` segments get intensity 0: their marginal requirement is
    infinite and no finite intensity meets it.
    """
    if margin <= 0.0:
        raise ParameterError(f"margin must be positive, got {margin!r}")
    out = []
    for index, seg in enumerate(scenario.segments):
        if seg.alpha == 0.0:
            out.append(0.0)
            continue
        try:
            out.append(scenario.tech.inverse_phi_prime(seg.ad_price / (seg.alpha * margin)))
        except (ParameterError, SolverError) as exc:
            raise SolverError(f"intensity inversion failed for segment {index}: {exc}") from exc
    return tuple(out)


def _optimized_profit(scenario: MarketScenario, margin: float) -> float:
    price = scenario.marginal_cost + margin
    return targeted_profit(scenario, price, optimal_intensities(scenario, margin))


def margin_bracket(
    scenario: MarketScenario, *, max_doublings: int = 10
) -> tuple[float, float]:
    """Bracket the zero-profit margin: optimized profit < 0 at lo, > 0 at hi.

    The lower end starts at 1e-6 * marginal cost and halves until profit is
    negative (it always is near zero margin, where profit tends to -F); the
    upper end doubles from 1, capped at ``2**max_doublings``.
    """
    if scenario.fixed_cost <= 0.0:
        # optimized profit is positive for every positive margin, so the only
        # zero-profit point is the degenerate no-advertising limit
        raise MarketNotViableError(
            "zero fixed cost admits only the degenerate zero-advertising equilibrium"
        )
    lo = 1e-6 * scenario.marginal_cost
    for _ in range(200):
        if _optimized_profit(scenario, lo) < 0.0:
            break
        lo *= 0.5
    else:
        raise MarketNotViableError(
            "could not find a margin with negative profit; fixed cost may be zero"
        )
    hi = 1.0
    for _ in range(max_doublings + 1):
        if _optimized_profit(scenario, hi) > 0.0:
            break
        hi *= 2.0
    else:
        raise MarketNotViableError(
            f"no margin up to {hi:g} recovers fixed and advertising costs"
        )
    if not lo < hi:
        raise SolverError(f"degenerate margin bracket [{lo!r}, {hi!r}]")
    return lo, hi


def solve_targeted(scenario: MarketScenario, *, xtol: float | None = None) -> TargetedEquilibrium:
    """Solve the free-entry equilibrium under per-segment advertising.

    Outer bracketed root-find on the margin (Brent, then Newton polishing
    with the envelope derivative = total quantity); the inner step fixes
    each intensity from its first-order condition via the closed-form
    derivative inverse.
    """
    xtol = 1e-15 if xtol is None else float(xtol)
    lo, hi = margin_bracket(scenario)
    margin = brentq(
        lambda m: _optimized_profit(scenario, m), lo, hi, xtol=xtol, rtol=_RTOL
    )
    for _ in range(2):
        intensities = optimal_intensities(scenario, margin)
        quantity = math.fsum(
            seg.alpha * seg.weight * scenario.population * scenario.tech.phi(a)
            for seg, a in zip(scenario.segments, intensities)
        )
        if quantity <= 0.0:
            break
        margin -= targeted_profit(scenario, scenario.marginal_cost + margin, intensities) / quantity

    price = scenario.marginal_cost + margin
    intensities = optimal_intensities(scenario, margin)
    n = scenario.population
    quantities = tuple(
        float(seg.alpha * seg.weight * n * scenario.tech.phi(a))
        for seg, a in zip(scenario.segments, intensities)
    )
    focs = tuple(
        0.0
        if seg.alpha == 0.0
        else float(
            (scenario.tech.phi_prime(a) * seg.alpha * margin - seg.ad_price)
            / max(1.0, abs(seg.ad_price))
        )
        for seg, a in zip(scenario.segments, intensities)
    )
    ad_spend = math.fsum(
        seg.ad_price * a * seg.weight * n
        for seg, a in zip(scenario.segments, intensities)
    )
    zero = targeted_profit(scenario, price, intensities) / max(
        1.0, scenario.fixed_cost + ad_spend
    )
    if abs(zero) > 1e-10 or any(abs(f) > 1e-10 for f in focs):
        raise SolverError(
            f"targeted equilibrium residuals out of tolerance: profit={zero:.3e}, "
            f"focs={[f'{f:.3e}' for f in focs]}"
        )
    return TargetedEquilibrium(
        price=float(price),
        margin=float(margin),
        ad_intensities=tuple(float(a) for a in intensities),
        quantities=quantities,
        foc_residuals=focs,
        zero_profit_residual=float(zero),
    )


def short_run_targeted_profit(scenario: MarketScenario, fixed_price: float) -> ShortRunResult:
    """Optimal per-segment advertising at a fixed price, before entry reacts.

    Each intensity satisfies its first-order condition at the fixed margin;
    profit here is what targeting earns while price still sits at the level
    set without it.
    """
    margin = fixed_price - scenario.marginal_cost
    if margin <= 0.0:
        raise ParameterError(
            f"fixed price must exceed marginal cost {scenario.marginal_cost!r}, got {fixed_price!r}"
        )
    intensities = optimal_intensities(scenario, margin)
    n = scenario.population
    quantities = tuple(
        float(seg.alpha * seg.weight * n * scenario.tech.phi(a))
        for seg, a in zip(scenario.segments, intensities)
    )
    revenue = fixed_price * math.fsum(quantities)
    profit = targeted_profit(scenario, fixed_price, intensities)
    return ShortRunResult(
        profit=float(profit),
        revenue=float(revenue),
        ad_intensities=intensities,
        quantities=quantities,
    )


def targeting_worthwhile(scenario: MarketScenario) -> bool:
    """Whether reaching the responsive group merits its ad-price premium.

    For two segments ordered by purchase probability, targeting tilts
    intensity toward group 1 exactly when the ad-price ratio stays below the
    responsiveness ratio, ``R1/R2 < alpha1/alpha2`` (strict).  This governs
    relative intensities only; it does not by itself imply that free entry
    lowers the price.
    """
    if len(scenario.segments) != 2:
        raise ParameterError(
            f"worthwhile-targeting test requires exactly 2 segments, got {len(scenario.segments)}"
        )
    first, second = scenario.segments
    # cross-multiplied form of R1/R2 < alpha1/alpha2, safe for alpha2 == 0
    return first.ad_price * second.alpha < first.alpha * second.ad_price


def derived_metrics(equilibrium: Equilibrium, scenario: MarketScenario) -> RegimeMetrics:
    """Implied elasticity, ad-to-sales ratio, fixed-cost share, take-up rates.

    The elasticity is implied by the Lerner identity ``(P-C)/P = -1/eta``;
    take-up for segment i is units sold over potential buyers,
    ``Q_i / (alpha_i * w_i * N)``.
    """
    n = scenario.population
    if isinstance(equilibrium, UniformEquilibrium):
        phi_val = scenario.tech.phi(equilibrium.ad_intensity)
        quantities = tuple(seg.alpha * seg.weight * n * phi_val for seg in scenario.segments)
        ad_spend = scenario.uniform_ad_price * equilibrium.ad_intensity * n
    elif isinstance(equilibrium, TargetedEquilibrium):
        quantities = equilibrium.quantities
        ad_spend = math.fsum(
            seg.ad_price * a * seg.weight * n
            for seg, a in zip(scenario.segments, equilibrium.ad_intensities)
        )
    else:
        raise ParameterError(f"unsupported equilibrium type {type(equilibrium).__name__}")
    price = equilibrium.price
    total_quantity = math.fsum(quantities)
    take_ups = tuple(
        float(q / (seg.alpha * seg.weight * n)) if seg.alpha > 0.0 else 0.0
        for seg, q in zip(scenario.segments, quantities)
    )
    return RegimeMetrics(
        implied_elasticity=float(-price / equilibrium.margin),
        ad_to_sales_ratio=float(ad_spend / (price * total_quantity)),
        fixed_cost_share=float(
            scenario.fixed_cost
            / (scenario.marginal_cost * total_quantity + scenario.fixed_cost + ad_spend)
        ),
        take_up_rates=take_ups,
        blended_take_up=float(total_quantity / (scenario.blended_alpha * n)),
    )


def compare(scenario: MarketScenario, *, xtol: float | None = None) -> ComparisonReport:
    """Solve both regimes on one scenario and assemble the comparison."""
    uniform = solve_uniform(scenario, xtol=xtol)
    targeted = solve_targeted(scenario, xtol=xtol)
    return ComparisonReport(
        uniform=uniform,
        targeted=targeted,
        price_change_fraction=float((targeted.price - uniform.price) / uniform.price),
        uniform_metrics=derived_metrics(uniform, scenario),
        targeted_metrics=derived_metrics(targeted, scenario),
    )
