"""Exact enumeration of Catalan words avoiding a three-letter dashed pattern.

A Catalan word starts at 1 and never climbs by more than one step at a
time.  This package counts those avoiding a given dashed (vincular)
pattern four independent ways: brute-force enumeration, closed forms,
dynamic-programming recurrences, and exact power-series expansion of the
generating functions, and it cross-checks the answers against frozen
reference tables.
"""

from .counting import (
    CLOSED_FORM_PATTERNS,
    RECURRENCE_PATTERNS,
    closed_form,
    count_by_recurrence,
    refined_table,
)
from .generate import count_avoiders, count_avoiders_many, gen_catalan
from .genfun import GENFUN_PATTERNS, aux_series, series_for
from .golden import GOLDEN_COUNTS, GOLDEN_PATTERNS, SERIES_21_1
from .words import (
    CatalanWord,
    VincularPattern,
    avoids,
    contains,
    parse_pattern,
    word_from_text,
)

__version__ = "0.1.0"

__all__ = [
    "CLOSED_FORM_PATTERNS",
    "CatalanWord",
    "GENFUN_PATTERNS",
    "GOLDEN_COUNTS",
    "GOLDEN_PATTERNS",
    "RECURRENCE_PATTERNS",
    "SERIES_21_1",
    "VincularPattern",
    "aux_series",
    "avoids",
    "closed_form",
    "contains",
    "count_avoiders",
    "count_avoiders_many",
    "count_by_recurrence",
    "gen_catalan",
    "parse_pattern",
    "refined_table",
    "series_for",
    "word_from_text",
    "__version__",
]
