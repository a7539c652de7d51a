import pytest

from vincat.generate import count_avoiders_many
from vincat.golden import GOLDEN_PATTERNS

ORACLE_MAX_N = 12


@pytest.fixture(scope="session")
def oracle12():
    """Brute-force counts for every reference pattern, lengths 1..12.

    Computed once per test run; the n = 12 pass enumerates all 208012
    Catalan words, so this takes a little while.
    """
    rows = {p: [] for p in GOLDEN_PATTERNS}
    for n in range(1, ORACLE_MAX_N + 1):
        for p, c in zip(GOLDEN_PATTERNS, count_avoiders_many(n, GOLDEN_PATTERNS)):
            rows[p].append(c)
    return {p: tuple(v) for p, v in rows.items()}
