"""Render solver results as CSV or JSON documents, and parse them back.

Documents are deterministic: fixed key order, shortest round-trip float
formatting, LF line endings, UTF-8.  JSON comparison documents re-parse to
the exact original values.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Optional, Sequence

from .equilibrium import (
    ComparisonReport,
    MarketScenario,
    RegimeMetrics,
    TargetedEquilibrium,
    UniformEquilibrium,
)
from .errors import ParameterError
from .info import MonteCarloEstimate
from .published import DIFF_NOTES, PRICE_CHANGE_LABEL, PUBLISHED, ROW_LABELS
from .scenarios import MarketImpact, SweepPoint, TableRow


def fmt(value: float) -> str:
    """Shortest decimal string that round-trips to the same float."""
    return repr(float(value))


def _csv_document(rows: Sequence[Sequence], trailing: Sequence[str] = ()) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    for line in trailing:
        buf.write(f"# {line}\n")
    return buf.getvalue()


def _json_document(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# --- comparison reports -------------------------------------------------

def scenario_to_dict(scenario: MarketScenario) -> dict:
    return {
        "marginal_cost": scenario.marginal_cost,
        "fixed_cost": scenario.fixed_cost,
        "population": scenario.population,
        "lambda": scenario.tech.lam,
        "uniform_ad_price": scenario.uniform_ad_price,
        "segments": [
            {"weight": s.weight, "alpha": s.alpha, "ad_price": s.ad_price}
            for s in scenario.segments
        ],
    }


def _metrics_to_dict(metrics: RegimeMetrics) -> dict:
    return {
        "implied_elasticity": metrics.implied_elasticity,
        "ad_to_sales_ratio": metrics.ad_to_sales_ratio,
        "fixed_cost_share": metrics.fixed_cost_share,
        "take_up_rates": list(metrics.take_up_rates),
        "blended_take_up": metrics.blended_take_up,
    }


def _metrics_from_dict(doc: dict) -> RegimeMetrics:
    return RegimeMetrics(
        implied_elasticity=doc["implied_elasticity"],
        ad_to_sales_ratio=doc["ad_to_sales_ratio"],
        fixed_cost_share=doc["fixed_cost_share"],
        take_up_rates=tuple(doc["take_up_rates"]),
        blended_take_up=doc["blended_take_up"],
    )


def report_to_dict(report: ComparisonReport, scenario: Optional[MarketScenario] = None) -> dict:
    doc = {}
    if scenario is not None:
        doc["scenario"] = scenario_to_dict(scenario)
    doc.update(
        {
            "uniform": {
                "ad_intensity": report.uniform.ad_intensity,
                "price": report.uniform.price,
                "margin": report.uniform.margin,
                "quantity": report.uniform.quantity,
                "foc_residual": report.uniform.foc_residual,
                "zero_profit_residual": report.uniform.zero_profit_residual,
            },
            "targeted": {
                "price": report.targeted.price,
                "margin": report.targeted.margin,
                "ad_intensities": list(report.targeted.ad_intensities),
                "quantities": list(report.targeted.quantities),
                "foc_residuals": list(report.targeted.foc_residuals),
                "zero_profit_residual": report.targeted.zero_profit_residual,
            },
            "price_change_fraction": report.price_change_fraction,
            "metrics": {
                "uniform": _metrics_to_dict(report.uniform_metrics),
                "targeted": _metrics_to_dict(report.targeted_metrics),
            },
        }
    )
    return doc


def report_from_dict(doc: dict) -> ComparisonReport:
    try:
        uni, tgt = doc["uniform"], doc["targeted"]
        return ComparisonReport(
            uniform=UniformEquilibrium(
                ad_intensity=uni["ad_intensity"],
                price=uni["price"],
                margin=uni["margin"],
                quantity=uni["quantity"],
                foc_residual=uni["foc_residual"],
                zero_profit_residual=uni["zero_profit_residual"],
            ),
            targeted=TargetedEquilibrium(
                price=tgt["price"],
                margin=tgt["margin"],
                ad_intensities=tuple(tgt["ad_intensities"]),
                quantities=tuple(tgt["quantities"]),
                foc_residuals=tuple(tgt["foc_residuals"]),
                zero_profit_residual=tgt["zero_profit_residual"],
            ),
            price_change_fraction=doc["price_change_fraction"],
            uniform_metrics=_metrics_from_dict(doc["metrics"]["uniform"]),
            targeted_metrics=_metrics_from_dict(doc["metrics"]["targeted"]),
        )
    except KeyError as exc:
        raise ParameterError(f"comparison document is missing field {exc}") from exc


def report_to_json(report: ComparisonReport, scenario: Optional[MarketScenario] = None) -> str:
    return _json_document(report_to_dict(report, scenario))


def report_from_json(text: str) -> ComparisonReport:
    return report_from_dict(json.loads(text))


def _flatten_report(report: ComparisonReport) -> list[tuple[str, float]]:
    pairs = [
        ("uniform.ad_intensity", report.uniform.ad_intensity),
        ("uniform.price", report.uniform.price),
        ("uniform.margin", report.uniform.margin),
        ("uniform.quantity", report.uniform.quantity),
        ("uniform.foc_residual", report.uniform.foc_residual),
        ("uniform.zero_profit_residual", report.uniform.zero_profit_residual),
        ("targeted.price", report.targeted.price),
        ("targeted.margin", report.targeted.margin),
    ]
    for i, (a, q, f) in enumerate(
        zip(report.targeted.ad_intensities, report.targeted.quantities,
            report.targeted.foc_residuals),
        start=1,
    ):
        pairs += [
            (f"targeted.ad_intensity_{i}", a),
            (f"targeted.quantity_{i}", q),
            (f"targeted.foc_residual_{i}", f),
        ]
    pairs.append(("targeted.zero_profit_residual", report.targeted.zero_profit_residual))
    pairs.append(("price_change_fraction", report.price_change_fraction))
    for regime, metrics in (("uniform", report.uniform_metrics),
                            ("targeted", report.targeted_metrics)):
        pairs += [
            (f"metrics.{regime}.implied_elasticity", metrics.implied_elasticity),
            (f"metrics.{regime}.ad_to_sales_ratio", metrics.ad_to_sales_ratio),
            (f"metrics.{regime}.fixed_cost_share", metrics.fixed_cost_share),
        ]
        pairs += [
            (f"metrics.{regime}.take_up_rate_{i}", rate)
            for i, rate in enumerate(metrics.take_up_rates, start=1)
        ]
        pairs.append((f"metrics.{regime}.blended_take_up", metrics.blended_take_up))
    return pairs


def report_to_csv(report: ComparisonReport) -> str:
    rows = [("field", "value")]
    rows += [(name, fmt(value)) for name, value in _flatten_report(report)]
    return _csv_document(rows)


# --- published tables ---------------------------------------------------

def _row_values(row: TableRow) -> tuple[float, ...]:
    return (
        row.group1_weight,
        row.group1_alpha,
        row.group2_alpha,
        row.blended_alpha,
        row.uniform_ad,
        row.uniform_quantity,
        row.uniform_price,
        row.group1_ad,
        row.group2_ad,
        row.group1_quantity,
        row.group2_quantity,
        row.targeted_price,
        row.price_change_pct,
    )


def table_grid(rows: Sequence[TableRow]) -> dict[str, tuple[float, ...]]:
    """Transpose solved columns into the published label -> values layout."""
    columns = [_row_values(r) for r in rows]
    return {label: tuple(col[i] for col in columns) for i, label in enumerate(ROW_LABELS)}


def table_to_csv(rows: Sequence[TableRow]) -> str:
    grid = table_grid(rows)
    header = ["row"] + [f"col_{i}" for i in range(1, len(rows) + 1)]
    body = [[label] + [fmt(v) for v in values] for label, values in grid.items()]
    return _csv_document([header] + body)


def table_to_json(table_id: str, rows: Sequence[TableRow]) -> str:
    grid = table_grid(rows)
    return _json_document(
        {
            "table": table_id,
            "columns": len(rows),
            "rows": {label: list(values) for label, values in grid.items()},
        }
    )


def _diff_round(label: str, value: float) -> float:
    # published precision: 1 decimal (percentage points) for the price
    # change row, 3 decimals everywhere else
    return round(value, 1 if label == PRICE_CHANGE_LABEL else 3)


def table_diff_records(table_id: str, rows: Sequence[TableRow]) -> list[dict]:
    grid = table_grid(rows)
    published = PUBLISHED[table_id]
    records = []
    for label in ROW_LABELS:
        for col, computed in enumerate(grid[label], start=1):
            rounded = _diff_round(label, computed)
            ref = published[label][col - 1]
            records.append(
                {
                    "row": label,
                    "column": col,
                    "computed": rounded,
                    "published": ref,
                    "abs_deviation": round(abs(rounded - ref), 12),
                }
            )
    return records


def diff_notes(table_id: str) -> tuple[str, ...]:
    return DIFF_NOTES["common"] + DIFF_NOTES[table_id]


def table_diff_to_csv(table_id: str, rows: Sequence[TableRow]) -> str:
    records = table_diff_records(table_id, rows)
    header = ["row", "column", "computed", "published", "abs_deviation"]
    body = [
        [r["row"], r["column"], fmt(r["computed"]), fmt(r["published"]),
         fmt(r["abs_deviation"])]
        for r in records
    ]
    return _csv_document([header] + body, trailing=diff_notes(table_id))


def table_diff_to_json(table_id: str, rows: Sequence[TableRow]) -> str:
    return _json_document(
        {
            "table": table_id,
            "records": table_diff_records(table_id, rows),
            "notes": list(diff_notes(table_id)),
        }
    )


# --- curves, sweeps, impact, Monte Carlo --------------------------------

def curve_to_csv(intensities: Sequence[float], informed: Sequence[float]) -> str:
    rows = [("ad_intensity", "informed_fraction")]
    rows += [(fmt(a), fmt(p)) for a, p in zip(intensities, informed)]
    return _csv_document(rows)


def curve_to_json(lam: float, intensities: Sequence[float], informed: Sequence[float]) -> str:
    return _json_document(
        {
            "lambda": lam,
            "points": [[float(a), float(p)] for a, p in zip(intensities, informed)],
        }
    )


_SWEEP_COLUMNS = (
    "value",
    "uniform_ad_intensity",
    "uniform_quantity",
    "uniform_price",
    "targeted_price",
    "price_change_pct",
    "error",
)


def sweep_to_csv(points: Sequence[SweepPoint]) -> str:
    rows = [_SWEEP_COLUMNS]
    for point in points:
        if point.report is None:
            rows.append((fmt(point.value), "", "", "", "", "", point.error))
        else:
            rep = point.report
            rows.append(
                (
                    fmt(point.value),
                    fmt(rep.uniform.ad_intensity),
                    fmt(rep.uniform.quantity),
                    fmt(rep.uniform.price),
                    fmt(rep.targeted.price),
                    fmt(rep.price_change_fraction * 100.0),
                    "",
                )
            )
    return _csv_document(rows)


def sweep_to_json(parameter: str, points: Sequence[SweepPoint]) -> str:
    return _json_document(
        {
            "parameter": parameter,
            "points": [
                {
                    "value": point.value,
                    "report": None if point.report is None else report_to_dict(point.report),
                    "error": point.error,
                }
                for point in points
            ],
        }
    )


def _pairs_to_csv(pairs: Sequence[tuple[str, float]]) -> str:
    rows = [("field", "value")]
    rows += [(name, str(value) if isinstance(value, int) else fmt(value))
             for name, value in pairs]
    return _csv_document(rows)


def impact_to_csv(impact: MarketImpact) -> str:
    return _pairs_to_csv(
        [
            ("current_cost", impact.current_cost),
            ("with_offline", impact.with_offline),
            ("projected", impact.projected),
        ]
    )


def impact_to_json(impact: MarketImpact) -> str:
    return _json_document(
        {
            "current_cost": impact.current_cost,
            "with_offline": impact.with_offline,
            "projected": impact.projected,
        }
    )


def mc_check_pairs(
    lam: float, messages: int, trials: int, seed: int, result: MonteCarloEstimate
) -> list[tuple[str, float]]:
    analytic = -((1.0 - lam) ** messages) + 1.0
    z = 0.0 if result.std_error == 0.0 else (result.estimate - analytic) / result.std_error
    return [
        ("lambda", lam),
        ("message_count", messages),
        ("trials", trials),
        ("seed", seed),
        ("estimate", result.estimate),
        ("std_error", result.std_error),
        ("analytic", analytic),
        ("abs_error", abs(result.estimate - analytic)),
        ("z_score", z),
    ]


def mc_check_to_csv(pairs: Sequence[tuple[str, float]]) -> str:
    return _pairs_to_csv(pairs)


def mc_check_to_json(pairs: Sequence[tuple[str, float]]) -> str:
    return _json_document(dict(pairs))
