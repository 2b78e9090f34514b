"""JSON-ready report builders and the human-readable paradox table."""

from __future__ import annotations

import json
from dataclasses import asdict
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from importlib import resources
from typing import Any

from .degree_stats import (
    DistributionSummary,
    MallowsResult,
    PointModelValidation,
    TailBoundReport,
    chebyshev_tail_bound,
    mallows_check,
    summarize,
)
from .errors import PreconditionError
from .graph import Graph, degrees
from .paradox import ParadoxRow, ParadoxSummary, Verdict, paradox_summary, paradox_table

SCHEMA_VERSION = "1.0"


def load_schema() -> dict[str, Any]:
    text = resources.files("friendstats").joinpath("schema/report.schema.json").read_text("utf-8")
    return json.loads(text)


def fmt2(value: Fraction | float) -> str:
    """Two decimals, round-half-even, computed from the exact value."""
    with localcontext() as ctx:
        ctx.prec = 60
        if isinstance(value, Fraction):
            dec = Decimal(value.numerator) / Decimal(value.denominator)
        else:
            dec = Decimal(value)
        return str(dec.quantize(Decimal("0.01"), rounding=ROUND_HALF_EVEN))


def rational(value: Fraction | None) -> dict[str, Any] | None:
    if value is None:
        return None
    return {"exact": str(value), "value": float(value)}


def paradox_dict(s: ParadoxSummary) -> dict[str, Any]:
    return {
        "mu_f": rational(s.mu_f),
        "mu_ff_global": rational(s.mu_ff_global),
        "degree_variance": rational(s.degree_variance),
        "gap": rational(s.gap),
        "mean_local_ff": rational(s.mean_local_ff),
        "counts": {v.value: s.counts[v] for v in Verdict},
        "identity": "exact" if s.identity_holds else "violated",
    }


def row_dict(r: ParadoxRow) -> dict[str, Any]:
    return {
        "node": r.node,
        "f": r.f,
        "ff": r.ff,
        "local_ff_mean": rational(r.local_ff_mean),
        "verdict": r.verdict.value,
    }


def summary_dict(s: DistributionSummary) -> dict[str, Any]:
    d = asdict(s)
    d["skew_direction"] = s.skew_direction.value
    return d


def mallows_dict(m: MallowsResult) -> dict[str, Any]:
    return asdict(m)


def tail_dict(t: TailBoundReport) -> dict[str, Any]:
    d = asdict(t)
    d["vacuous"] = t.vacuous
    return d


def point_model_dict(points, v: PointModelValidation) -> dict[str, Any]:
    d = asdict(v)
    d["points"] = list(points)
    d["passed"] = v.passed
    return d


def distribution_section(values) -> tuple[dict[str, Any], list[str]]:
    """Summary, Mallows check and (when right-skewed) tail bound of a sequence."""
    s = summarize(values)
    m = mallows_check(s)
    notes = [f"Mallows: sigma ≥ {m.sigma_lower_bound:g} (observed sigma {s.std_dev:.6g})"]
    tail = None
    try:
        t = chebyshev_tail_bound(s, values)
    except PreconditionError as exc:
        notes.append(f"tail bound skipped: {exc}")
    else:
        tail = tail_dict(t)
        if t.vacuous:
            notes.append("tail bound is vacuous (clamped to 1)")
        if t.respected is False:
            notes.append(
                f"empirical exceedance {t.empirical:.4g} exceeds the bound {t.bound:.4g}"
            )
    notes.append("unimodality is not exploited; the Mallows bound is used as is")
    return {"summary": summary_dict(s), "mallows": mallows_dict(m), "tail_bound": tail}, notes


def analysis_report(g: Graph, source: dict[str, Any], *, table: bool = False) -> dict[str, Any]:
    notes: list[str] = []
    report: dict[str, Any] = {
        "schema_version": SCHEMA_VERSION,
        "command": "analyze",
        "source": source,
        "graph": {"n": g.n, "edges": g.edge_count},
        "paradox": None,
        "table": None,
        "distribution": None,
        "notes": notes,
    }
    if table:
        report["table"] = [row_dict(r) for r in paradox_table(g)]
    if not g.edges:
        notes.append("graph has no edges: paradox and distribution statistics are undefined")
        return report
    s = paradox_summary(g)
    report["paradox"] = paradox_dict(s)
    notes.append(
        f"identity mu_ff_global = mu_f + variance/mu_f: {'exact' if s.identity_holds else 'VIOLATED'}"
    )
    report["distribution"], dist_notes = distribution_section(degrees(g))
    notes.extend(dist_notes)
    return report


def render_table(g: Graph, title: str = "network") -> str:
    """Paradox table in the layout of the published examples (1-based ids)."""
    rows = paradox_table(g)
    head = f"Connectivity of {title}"
    if g.edges:
        head += f" (μ_FF(global) = {fmt2(paradox_summary(g).mu_ff_global)})"
    lines = [head, f"{'Node':<6}{'F(i)':<6}{'FF(i)':<7}{'μ_FF(i)':<9}verdict"]
    for r in rows:
        mean = "-" if r.local_ff_mean is None else fmt2(r.local_ff_mean)
        lines.append(f"{r.node + 1:<6}{r.f:<6}{r.ff:<7}{mean:<9}{r.verdict.value}")
    greater = sum(r.verdict is Verdict.GREATER for r in rows)
    lines.append(f"{greater}/{g.n} nodes have μ_FF(i) > F(i)")
    return "\n".join(lines) + "\n"


def dumps(report: dict[str, Any]) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
