"""Composite metrics, normalizations, rankings and report rendering."""

from .core import (LOG_PRINTED, LOG_RATIO, erank, fom, normalize_inverted_minmax,
                   normalize_log_minmax)
from .dataset import load_table2, paper_records, published_erank, records_from_csv
from .report import (COST_METRICS, METRICS, ComparisonRow, MetricReport, MetricRow,
                     build_report, compare_to_paper, comparison_to_csv, report_to_csv,
                     report_to_dict, report_to_json, report_to_svg, shade)

__all__ = [
    "COST_METRICS", "ComparisonRow", "LOG_PRINTED", "LOG_RATIO", "METRICS",
    "MetricReport", "MetricRow", "build_report", "compare_to_paper",
    "comparison_to_csv", "erank", "fom", "load_table2", "normalize_inverted_minmax",
    "normalize_log_minmax", "paper_records", "published_erank", "records_from_csv",
    "report_to_csv", "report_to_dict", "report_to_json", "report_to_svg", "shade",
]
