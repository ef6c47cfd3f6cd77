"""Rendering and export of pipeline results.

Table output mimics the published presentation: one decimal, rank in
parentheses after the index. CSV and JSON exports carry full precision;
missing values are empty CSV cells / JSON nulls.
"""

from __future__ import annotations

import csv
import io
import json
import math
from decimal import ROUND_HALF_UP, Decimal

import numpy as np

from .classify import ClusterAssignment, ShiftReport
from .factor import FactorModel
from .manifest import PILLARS
from .pillar import FoiScores

FORMATS = ("table", "csv", "json")


def round_half_up(value: float, digits: int = 1) -> float:
    """Display rounding: half-up, unlike the banker's rounding builtin."""
    q = Decimal(10) ** -digits
    return float(Decimal(repr(value)).quantize(q, rounding=ROUND_HALF_UP))


def _fmt_cell(value: float, rank: int | None) -> str:
    if math.isnan(value):
        return ""
    shown = round_half_up(value, 1)
    text = f"{shown:.1f}".rstrip("0").rstrip(".") if shown == int(shown) else f"{shown:.1f}"
    return f"{text} ({rank})" if rank is not None else text


def scores_to_rows(scores: FoiScores) -> list[dict]:
    rows = []
    for i, code in enumerate(scores.countries):
        row: dict = {"country": code}
        for pillar in PILLARS:
            v = float(scores.index[pillar][i])
            row[f"{pillar.lower()}_index"] = None if math.isnan(v) else v
            row[f"{pillar.lower()}_rank"] = int(scores.rank[pillar][i]) if scores.rank is not None else None
        rows.append(row)
    return sorted(rows, key=lambda r: r["country"])


def render_scores(scores: FoiScores, fmt: str = "table") -> str:
    """Render pillar indices in one of the supported formats."""
    rows = scores_to_rows(scores)
    if fmt == "json":
        return json.dumps({"epoch": scores.epoch, "scores": rows}, indent=1, sort_keys=True) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        fields = ["country"] + [f"{p.lower()}_{k}" for p in PILLARS for k in ("index", "rank")]
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: ("" if row[k] is None else row[k]) for k in fields})
        return buf.getvalue()
    if fmt == "table":
        lines = [f"{'country':<10}" + "".join(f"{p + '-index':>12}" for p in PILLARS)]
        for row in rows:
            cells = [
                _fmt_cell(
                    row[f"{p.lower()}_index"] if row[f"{p.lower()}_index"] is not None else float("nan"),
                    row[f"{p.lower()}_rank"],
                )
                for p in PILLARS
            ]
            lines.append(f"{row['country']:<10}" + "".join(f"{c:>12}" for c in cells))
        return "\n".join(lines) + "\n"
    raise ValueError(f"format must be one of {FORMATS}, got {fmt!r}")


def assignments_to_rows(assignments: list[ClusterAssignment]) -> list[dict]:
    return [
        {
            "country": a.country,
            "levels": "".join(a.levels),
            "cluster": a.cluster_id,
            "label": a.label,
            "borderline": sorted(a.borderline),
        }
        for a in sorted(assignments, key=lambda a: a.country)
    ]


def render_assignments(assignments: list[ClusterAssignment], fmt: str = "table") -> str:
    rows = assignments_to_rows(assignments)
    if fmt == "json":
        return json.dumps({"assignments": rows}, indent=1, sort_keys=True) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(
            buf, fieldnames=["country", "levels", "cluster", "label", "borderline"], lineterminator="\n"
        )
        writer.writeheader()
        for row in rows:
            writer.writerow({**row, "borderline": ";".join(row["borderline"])})
        return buf.getvalue()
    if fmt == "table":
        lines = [f"{'country':<10}{'levels':<8}{'cluster':<9}{'label':<32}borderline"]
        for row in rows:
            lines.append(
                f"{row['country']:<10}{row['levels']:<8}{row['cluster']:<9}"
                f"{row['label']:<32}{','.join(row['borderline'])}"
            )
        return "\n".join(lines) + "\n"
    raise ValueError(f"format must be one of {FORMATS}, got {fmt!r}")


def render_shift(report: ShiftReport, fmt: str = "table") -> str:
    rows = [
        {
            "country": s.country,
            "from_cluster": s.from_cluster,
            "to_cluster": s.to_cluster,
            "delta_h": s.delta_h,
        }
        for s in report.shifts
    ]
    payload = {
        "epoch_from": report.epoch_from,
        "epoch_to": report.epoch_to,
        "shifts": rows,
        "transitions": report.transitions.tolist(),
        "upward": [s.country for s in report.upward],
        "downward": [s.country for s in report.downward],
        "stayers": [s.country for s in report.stayers],
    }
    if fmt == "json":
        return json.dumps(payload, indent=1, sort_keys=True) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(
            buf, fieldnames=["country", "from_cluster", "to_cluster", "delta_h"], lineterminator="\n"
        )
        writer.writeheader()
        writer.writerows(rows)
        return buf.getvalue()
    if fmt == "table":
        lines = [f"{'country':<10}{'from':>6}{'to':>6}{'delta_H':>9}"]
        for row in rows:
            lines.append(
                f"{row['country']:<10}{row['from_cluster']:>6}{row['to_cluster']:>6}{row['delta_h']:>+9d}"
            )
        lines.append("")
        lines.append("upward:   " + ", ".join(payload["upward"]))
        lines.append("downward: " + ", ".join(payload["downward"]))
        return "\n".join(lines) + "\n"
    raise ValueError(f"format must be one of {FORMATS}, got {fmt!r}")


def factor_model_to_json(model: FactorModel) -> str:
    """JSON document with loadings, eigenvalues, and diagnostics."""
    payload = {
        "variables": list(model.variables),
        "loadings": model.loadings.tolist(),
        "rotated_loadings": model.rotated_loadings.tolist(),
        "rotation": model.rotation.tolist(),
        "eigenvalues": model.eigenvalues.tolist(),
        "kmo": model.kmo,
        "bartlett": {
            "chi_square": model.bartlett.chi_square,
            "df": model.bartlett.df,
            "p_value": model.bartlett.p_value,
        },
        "variance_explained": model.variance_explained,
        "converged": model.converged,
    }
    return json.dumps(payload, indent=1, sort_keys=True) + "\n"


def factor_scores_to_csv(model: FactorModel, prefix: str = "factor") -> str:
    """Scores CSV with one row per country; missing scores are empty cells."""
    buf = io.StringIO()
    k = model.rotated_loadings.shape[1]
    fields = ["country"] + [f"{prefix}{j + 1}" for j in range(k)]
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(fields)
    scores = model.scores if model.scores is not None else np.full((len(model.score_rows), k), np.nan)
    for i, code in enumerate(model.score_rows):
        cells = ["" if math.isnan(v) else repr(float(v)) for v in scores[i]]
        writer.writerow([code, *cells])
    return buf.getvalue()


def write_text(text: str, destination) -> None:
    """Write rendered output; '-' or None means standard output."""
    if destination in (None, "-"):
        import sys

        sys.stdout.write(text)
        return
    with open(destination, "w", encoding="utf-8") as fh:
        fh.write(text)
