"""Exact certification of non-D-finite quarter-plane excursion series."""

import json as _json

from ._qwalk import (
    QwalkError,
    StepSet,
    check_tables,
    classify as _classify_raw,
    count_excursions,
    detect_period,
    eliminants,
    fixture_tags,
    group_order_from_alpha,
)

__all__ = [
    "QwalkError",
    "StepSet",
    "check_tables",
    "classify",
    "count_excursions",
    "detect_period",
    "eliminants",
    "fixture_tags",
    "group_order_from_alpha",
]


def classify(steps, precision=64, max_n=8, fit_n=0):
    """Run the full pipeline and return the report as a dict."""
    return _json.loads(_classify_raw(steps, precision, max_n, fit_n))
