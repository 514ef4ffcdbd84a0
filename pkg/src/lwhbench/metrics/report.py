"""Normalized metric reports, reference-table comparison and CSV/JSON/SVG output."""

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Dict, List, Optional
from xml.sax.saxutils import escape

from ..errors import InvalidArgument
from ..hashkit.registry import canonical_id
from .core import LOG_RATIO, erank, normalize_inverted_minmax, normalize_log_minmax
from .dataset import paper_records

# metric name -> record attribute (None for the derived erank)
METRIC_FIELDS = {
    "cpb": "cpb",
    "ram": "ram_bytes",
    "rom": "rom_bytes",
    "energy": "energy_nj",
    "erank": None,
}
METRICS = tuple(METRIC_FIELDS)
COST_METRICS = ("cpb", "ram", "rom", "energy")


def fmt(x):
    return format(x, ".6g")


def _round6(x):
    return None if x is None else float(fmt(x))


@dataclass(frozen=True)
class MetricRow:
    spec_id: str
    erank: float
    raw: Dict[str, float]
    normalized: Dict[str, float]
    fom: Optional[float] = None


@dataclass(frozen=True)
class MetricReport:
    rows: List[MetricRow]
    metrics: tuple
    active_metric: str
    ordering: List[str]
    orderings: Dict[str, List[str]]
    log_variant: str = LOG_RATIO
    published_erank: Dict[str, float] = field(default_factory=dict)

    def row(self, spec_id):
        for r in self.rows:
            if r.spec_id == spec_id:
                return r
        raise KeyError(spec_id)


def _raw_value(rec, metric):
    attr = METRIC_FIELDS[metric]
    return erank(rec) if attr is None else getattr(rec, attr)


def _order(rows, metric):
    if metric == "erank":
        key = lambda r: (-r.raw[metric], r.spec_id)
    else:
        key = lambda r: (r.raw[metric], r.spec_id)
    return [r.spec_id for r in sorted(rows, key=key)]


def build_report(records, metrics=None, active_metric="erank", log_variant=LOG_RATIO,
                 published_erank=None):
    """Normalize each metric column and order the rows.

    Cost columns (cpb, ram, rom, energy) use the inverted linear min-max so
    that the cheapest scores 1; erank uses the log min-max since it spans
    three orders of magnitude. Orderings are ascending for costs and
    descending for erank, ties broken by spec id.
    """
    records = list(records)
    if not records:
        raise InvalidArgument("a report needs at least one record")
    metrics = tuple(METRICS if metrics is None else metrics)
    for m in metrics:
        if m not in METRIC_FIELDS:
            raise InvalidArgument(f"unknown metric {m!r}; choose from {', '.join(METRICS)}")
    if active_metric not in metrics:
        raise InvalidArgument(f"active metric {active_metric!r} is not among {metrics}")
    seen = set()
    for rec in records:
        if rec.spec_id in seen:
            raise InvalidArgument(f"duplicate spec_id {rec.spec_id!r}")
        seen.add(rec.spec_id)
        rec.require_complete()

    raws = [{m: _raw_value(rec, m) for m in METRICS} for rec in records]
    columns = {}
    for m in metrics:
        col = [r[m] for r in raws]
        if m == "erank":
            columns[m] = normalize_log_minmax(col, variant=log_variant)
        else:
            columns[m] = normalize_inverted_minmax(col)

    rows = [
        MetricRow(rec.spec_id, raw["erank"], raw, {m: columns[m][i] for m in metrics})
        for i, (rec, raw) in enumerate(zip(records, raws))
    ]
    orderings = {m: _order(rows, m) for m in metrics}
    ordered = {r.spec_id: r for r in rows}
    rows = [ordered[i] for i in orderings[active_metric]]
    return MetricReport(rows, metrics, active_metric, orderings[active_metric], orderings,
                        log_variant, dict(published_erank or {}))


@dataclass(frozen=True)
class ComparisonRow:
    spec_id: str
    matched: bool
    deltas: Dict[str, Optional[float]]
    erank_delta: Optional[float] = None


def _rel(measured, reference):
    if measured is None or reference is None:
        return None
    return (measured - reference) / reference


def compare_to_paper(measured, reference=None):
    """Relative deltas (measured - reference) / reference per field and for E-RANK.

    Ids absent from the reference table come back with ``matched=False``.
    Fields missing from a measured fragment yield ``None``.
    """
    if reference is None:
        reference = paper_records()
    ref = {r.spec_id: r for r in reference}
    out = []
    for rec in measured:
        key = canonical_id(rec.spec_id)
        known = ref.get(key)
        if known is None:
            out.append(ComparisonRow(rec.spec_id, False, {m: None for m in COST_METRICS}))
            continue
        deltas = {m: _rel(getattr(rec, METRIC_FIELDS[m]), getattr(known, METRIC_FIELDS[m]))
                  for m in COST_METRICS}
        try:
            er = _rel(erank(rec), erank(known))
        except InvalidArgument:
            er = None
        out.append(ComparisonRow(rec.spec_id, True, deltas, er))
    return out


def comparison_to_csv(rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["spec_id", "matched"] + [f"{m}_delta" for m in COST_METRICS] + ["erank_delta"])
    for r in rows:
        cells = [r.deltas.get(m) for m in COST_METRICS] + [r.erank_delta]
        w.writerow([r.spec_id, "yes" if r.matched else "no"]
                   + ["" if c is None else fmt(c) for c in cells])
    return buf.getvalue()


def report_to_csv(report):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    pub = bool(report.published_erank)
    header = ["rank", "spec_id", "cpb", "ram", "rom", "energy_nj", "erank"]
    if pub:
        header.append("erank_published")
    header += [f"norm_{m}" for m in report.metrics]
    w.writerow(header)
    for i, r in enumerate(report.rows, 1):
        cells = [i, r.spec_id] + [fmt(r.raw[m]) for m in METRICS]
        if pub:
            p = report.published_erank.get(r.spec_id)
            cells.append("" if p is None else fmt(p))
        cells += [fmt(r.normalized[m]) for m in report.metrics]
        w.writerow(cells)
    return buf.getvalue()


def report_to_dict(report):
    return {
        "active_metric": report.active_metric,
        "log_variant": report.log_variant,
        "metrics": list(report.metrics),
        "ordering": list(report.ordering),
        "orderings": {m: list(v) for m, v in report.orderings.items()},
        "rows": [
            {
                "spec_id": r.spec_id,
                "raw": {m: _round6(r.raw[m]) for m in METRICS},
                "erank_published": _round6(report.published_erank.get(r.spec_id)),
                "normalized": {m: _round6(r.normalized[m]) for m in report.metrics},
            }
            for r in report.rows
        ],
    }


def report_to_json(report):
    return json.dumps(report_to_dict(report), indent=2) + "\n"


# heatmap palette endpoints: pale for score 0, dark for score 1
_LIGHT = (0xF7, 0xFB, 0xFF)
_DARK = (0x08, 0x30, 0x6B)


def shade(score):
    s = min(1.0, max(0.0, score))
    rgb = (round(a + (b - a) * s) for a, b in zip(_LIGHT, _DARK))
    return "#" + "".join(f"{c:02x}" for c in rgb)


def report_to_svg(report, title="Normalized scores (higher = better)"):
    """Heatmap: one row per function, one column per metric, darker is better."""
    cell_w, cell_h, label_w, top = 72, 20, 120, 44
    width = label_w + cell_w * len(report.metrics) + 10
    height = top + cell_h * len(report.rows) + 10
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="monospace" font-size="11">',
        f'<text x="4" y="14" font-size="12">{escape(title)}</text>',
    ]
    for j, m in enumerate(report.metrics):
        x = label_w + j * cell_w + cell_w // 2
        out.append(f'<text x="{x}" y="{top - 8}" text-anchor="middle">{escape(m)}</text>')
    for i, r in enumerate(report.rows):
        y = top + i * cell_h
        out.append(f'<text x="4" y="{y + 14}">{escape(r.spec_id)}</text>')
        for j, m in enumerate(report.metrics):
            s = r.normalized[m]
            x = label_w + j * cell_w
            ink = "#ffffff" if s > 0.5 else "#000000"
            out.append(
                f'<rect x="{x}" y="{y}" width="{cell_w}" height="{cell_h}" fill="{shade(s)}" '
                f'data-spec="{escape(r.spec_id)}" data-metric="{m}" data-score="{s:.6g}"/>'
            )
            out.append(
                f'<text x="{x + cell_w // 2}" y="{y + 14}" text-anchor="middle" fill="{ink}">{s:.2f}</text>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"
