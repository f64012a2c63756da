"""Free-entry advertising market equilibria with and without target marketing."""

from .errors import MarketNotViableError, ParameterError, SolverError
from .info import InfoTechnology, MonteCarloEstimate, informed_fraction_monte_carlo
from .equilibrium import (
    ComparisonReport,
    MarketScenario,
    RegimeMetrics,
    Segment,
    ShortRunResult,
    TargetedEquilibrium,
    UniformEquilibrium,
    compare,
    derived_metrics,
    margin_bracket,
    optimal_intensities,
    short_run_targeted_profit,
    solve_targeted,
    solve_uniform,
    targeted_profit,
    targeting_worthwhile,
    uniform_ad_invariance_certificate,
    uniform_profit,
)
from .scenarios import (
    TABLE_IDS,
    MarketImpact,
    SweepPoint,
    SweepSpec,
    TableRow,
    base_case,
    market_impact,
    preset,
    run_table,
    sweep,
    table_row,
)

__version__ = "0.1.0"

__all__ = [
    "ComparisonReport",
    "InfoTechnology",
    "MarketImpact",
    "MarketNotViableError",
    "MarketScenario",
    "MonteCarloEstimate",
    "ParameterError",
    "RegimeMetrics",
    "Segment",
    "ShortRunResult",
    "SolverError",
    "SweepPoint",
    "SweepSpec",
    "TABLE_IDS",
    "TableRow",
    "TargetedEquilibrium",
    "UniformEquilibrium",
    "base_case",
    "compare",
    "derived_metrics",
    "informed_fraction_monte_carlo",
    "margin_bracket",
    "market_impact",
    "optimal_intensities",
    "preset",
    "run_table",
    "short_run_targeted_profit",
    "solve_targeted",
    "solve_uniform",
    "sweep",
    "table_row",
    "targeted_profit",
    "targeting_worthwhile",
    "uniform_ad_invariance_certificate",
    "uniform_profit",
]
