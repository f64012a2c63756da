"""Shared test helpers: randomized scenario generators."""

import numpy as np

from targetmark import InfoTechnology, MarketScenario, Segment


def random_scenario(rng: np.random.Generator, n_segments=None) -> MarketScenario:
    """A feasible random scenario inside the solver's documented search range.

    Ranges are chosen so the zero-profit margin always lies below the
    bracket cap of 2**10: alphas and ad prices are kept away from the
    extremes where the required markup explodes.
    """
    k = int(rng.integers(1, 4)) if n_segments is None else n_segments
    weights = rng.uniform(0.05, 1.0, size=k)
    weights = weights / weights.sum()
    segments = tuple(
        Segment(
            weight=float(w),
            alpha=float(rng.uniform(0.05, 1.0)),
            ad_price=float(rng.uniform(0.002, 0.03)),
        )
        for w in weights
    )
    return MarketScenario(
        marginal_cost=float(rng.uniform(1.0, 30.0)),
        fixed_cost=float(rng.uniform(1.0, 300.0)),
        population=float(rng.uniform(200.0, 5000.0)),
        uniform_ad_price=float(rng.uniform(0.002, 0.03)),
        tech=InfoTechnology(float(rng.uniform(0.05, 0.8))),
        segments=segments,
    )


def random_equal_price_scenario(rng: np.random.Generator) -> MarketScenario:
    """Two segments, distinct alphas, every ad price equal to the uniform one."""
    price = float(rng.uniform(0.002, 0.03))
    alpha_low = float(rng.uniform(0.05, 0.6))
    alpha_high = float(rng.uniform(alpha_low + 0.05, min(1.0, alpha_low + 0.9)))
    w1 = float(rng.uniform(0.1, 0.9))
    return MarketScenario(
        marginal_cost=float(rng.uniform(1.0, 30.0)),
        fixed_cost=float(rng.uniform(1.0, 300.0)),
        population=float(rng.uniform(200.0, 5000.0)),
        uniform_ad_price=price,
        tech=InfoTechnology(float(rng.uniform(0.05, 0.8))),
        segments=(
            Segment(weight=w1, alpha=alpha_high, ad_price=price),
            Segment(weight=1.0 - w1, alpha=alpha_low, ad_price=price),
        ),
    )
