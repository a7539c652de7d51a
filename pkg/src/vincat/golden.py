"""Frozen reference counts used by the verifier and the test suite.

The numbers live in plain text files under data/ so they can be read and
diffed without touching code.  They are treated as authoritative: when a
computed value disagrees with a row here, the computation is wrong.
"""

from importlib import resources


def _data_text(name: str) -> str:
    return resources.files("vincat").joinpath("data").joinpath(name).read_text(encoding="ascii")


def _parse_rows(text: str) -> dict:
    rows = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        head, *rest = line.split()
        rows[head] = tuple(int(c) for c in rest)
    return rows


def _parse_ints(text: str) -> tuple:
    out = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        out.extend(int(c) for c in line.split())
    return tuple(out)


GOLDEN_COUNTS = _parse_rows(_data_text("avoider_counts.txt"))
GOLDEN_PATTERNS = tuple(sorted(GOLDEN_COUNTS))
GOLDEN_MAX_N = 10

SERIES_21_1 = _parse_ints(_data_text("series_21_1.txt"))


def golden_row(pattern: str) -> tuple:
    """Reference counts for lengths 1..10, as a tuple."""
    try:
        return GOLDEN_COUNTS[pattern]
    except KeyError:
        raise ValueError(f"no reference row for pattern {pattern!r}") from None


def golden_count(pattern: str, n: int) -> int:
    row = golden_row(pattern)
    if not 1 <= n <= len(row):
        raise ValueError(f"reference counts cover lengths 1..{len(row)}, got {n}")
    return row[n - 1]
