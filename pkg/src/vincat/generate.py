"""Exhaustive generation of Catalan words and friends, plus the brute-force
counting oracle used to certify every fast method in this package."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .words import (
    CatalanWord,
    MarkedWord,
    VincularPattern,
    contains,
    parse_pattern,
    runs,
)

# Full enumeration of C_n words is practical up to about this length
# (C_12 = 208012); callers may go higher at their own expense.
DEFAULT_MAX_N = 12


def gen_catalan(n: int) -> Iterator[CatalanWord]:
    """All Catalan words of length n in lexicographic order."""
    if n <= 0:
        return
    word = [1] * n
    make = tuple.__new__
    while True:
        yield make(CatalanWord, word)
        i = n - 1
        while i > 0 and word[i] > word[i - 1]:
            i -= 1
        if i == 0:
            return
        word[i] += 1
        for j in range(i + 1, n):
            word[j] = 1


@dataclass(frozen=True)
class FamilySpec:
    """Constraints for :func:`gen_family`.

    Generates words over the alphabet 1..alphabet_bound obeying the growth
    rule w(i+1) <= wi + 1, with the first letter unconstrained unless
    required_first is given.  These are the auxiliary families behind the
    refined recurrences (no-level words, words pinned to start or end at a
    given letter, and so on).
    """

    alphabet_bound: int
    forbid_levels: bool = False
    required_last: int | None = None
    required_first: int | None = None
    avoid: VincularPattern | str | None = None
    allow_empty: bool = False

    def __post_init__(self):
        if self.alphabet_bound < 1:
            raise ValueError("alphabet_bound must be >= 1")
        for field in (self.required_last, self.required_first):
            if field is not None and not 1 <= field <= self.alphabet_bound:
                raise ValueError("required letter outside alphabet")


def gen_family(n: int, spec: FamilySpec) -> Iterator[tuple[int, ...]]:
    """All words of length n satisfying ``spec``, in lexicographic order.

    Yields plain tuples: family words need not start with 1, so they are
    generally not Catalan words.
    """
    if n < 0:
        raise ValueError("negative length")
    pattern = spec.avoid
    if isinstance(pattern, str):
        pattern = parse_pattern(pattern)
    if n == 0:
        if spec.allow_empty and spec.required_last is None and spec.required_first is None:
            yield ()
        return
    bound = spec.alphabet_bound
    word = [0] * n

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            result = tuple(word)
            if pattern is None or not contains(result, pattern):
                yield result
            return
        if i == 0:
            choices: Iterable[int] = (
                (spec.required_first,) if spec.required_first is not None
                else range(1, bound + 1)
            )
        else:
            choices = range(1, min(word[i - 1] + 1, bound) + 1)
        last = i == n - 1
        for c in choices:
            if spec.forbid_levels and i > 0 and c == word[i - 1]:
                continue
            if last and spec.required_last is not None and c != spec.required_last:
                continue
            word[i] = c
            yield from rec(i + 1)

    yield from rec(0)


def _mark_vectors(k: int) -> Iterator[tuple[bool, ...]]:
    """All mark vectors of length k with mark[0] True and no two adjacent
    marks."""
    if k == 0:
        return
    vec = [False] * k
    vec[0] = True

    def rec(i: int) -> Iterator[tuple[bool, ...]]:
        if i == k:
            yield tuple(vec)
            return
        vec[i] = False
        yield from rec(i + 1)
        if not vec[i - 1]:
            vec[i] = True
            yield from rec(i + 1)
            vec[i] = False

    yield from rec(1)


def gen_marked_increasing(n: int) -> Iterator[MarkedWord]:
    """All marked weakly increasing Catalan words of length n.

    Run lengths range over compositions of n; the first run is marked and
    no two consecutive runs are marked.  There are F(2n-1) of these.
    """
    if n <= 0:
        return

    def compositions(total: int) -> Iterator[list[int]]:
        if total == 0:
            yield []
            return
        for head in range(1, total + 1):
            for rest in compositions(total - head):
                yield [head] + rest

    for comp in compositions(n):
        letters = tuple(
            letter
            for letter, count in enumerate(comp, start=1)
            for _ in range(count)
        )
        for marks in _mark_vectors(len(comp)):
            yield MarkedWord(letters, marks)


@dataclass(frozen=True)
class Statistics:
    """Per-word statistics used by the refined recurrences."""

    max_letter: int
    last_letter: int
    ones_count: int
    one_runs: int
    has_level: bool
    first_level_index: int | None
    descent_count: int
    smallest_descent_bottom: int | None
    descent_tops: tuple[int, ...]


def stats(word: Sequence[int]) -> Statistics:
    """Compute all statistics in one pass.  Positions are 1-based."""
    if len(word) == 0:
        raise ValueError("statistics of the empty word are undefined")
    max_letter = word[0]
    ones = 1 if word[0] == 1 else 0
    one_runs = ones
    first_level = None
    descents = 0
    smallest_bottom = None
    tops = []
    prev = word[0]
    for i in range(1, len(word)):
        x = word[i]
        if x > max_letter:
            max_letter = x
        if x == 1:
            ones += 1
            if prev != 1:
                one_runs += 1
        if x == prev and first_level is None:
            first_level = i  # 1-based index of the first letter of the pair
        if x < prev:
            descents += 1
            tops.append(prev)
            if smallest_bottom is None or x < smallest_bottom:
                smallest_bottom = x
        prev = x
    return Statistics(
        max_letter=max_letter,
        last_letter=word[-1],
        ones_count=ones,
        one_runs=one_runs,
        has_level=first_level is not None,
        first_level_index=first_level,
        descent_count=descents,
        smallest_descent_bottom=smallest_bottom,
        descent_tops=tuple(tops),
    )


def count_avoiders(n: int, pattern: VincularPattern | str) -> int:
    """Number of Catalan words of length n avoiding the pattern, by direct
    enumeration.  This is the ground truth everything else is tested against."""
    if isinstance(pattern, str):
        pattern = parse_pattern(pattern)
    return sum(1 for w in gen_catalan(n) if not contains(w, pattern))


def count_avoiders_many(
    n: int, patterns: Sequence[VincularPattern | str]
) -> list[int]:
    """Avoider counts for several patterns in a single enumeration pass."""
    parsed = [parse_pattern(p) if isinstance(p, str) else p for p in patterns]
    counts = [0] * len(parsed)
    for w in gen_catalan(n):
        for k, p in enumerate(parsed):
            if not contains(w, p):
                counts[k] += 1
    return counts


def refined_counts(
    n: int,
    pattern: VincularPattern | str,
    keys: Sequence[str],
) -> dict[tuple, int]:
    """Group the avoiders of length n by the named statistics.

    ``keys`` are attribute names of :class:`Statistics`; the result maps
    tuples of their values (in the order given) to counts.
    """
    if isinstance(pattern, str):
        pattern = parse_pattern(pattern)
    keys = tuple(keys)
    for key in keys:
        if key not in Statistics.__dataclass_fields__:
            raise KeyError("unknown statistic %r" % key)
    out: dict[tuple, int] = {}
    for w in gen_catalan(n):
        if contains(w, pattern):
            continue
        st = stats(w)
        key = tuple(getattr(st, k) for k in keys)
        out[key] = out.get(key, 0) + 1
    return out
