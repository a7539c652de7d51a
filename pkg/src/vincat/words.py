"""Catalan words, vincular patterns, and the brute-force occurrence matcher.

A Catalan word is a word w1 w2 ... wn over the positive integers with
w1 = 1 and w(i+1) <= wi + 1.  A vincular (dashed) pattern is written as
dash-separated blocks of digits, e.g. "21-3" or "1-11"; letters inside a
block must occupy adjacent positions in any occurrence, while dashes allow
arbitrary gaps.  Matching is up to order isomorphism: equalities in the
pattern force equalities in the word, strict inequalities force strict
inequalities in the same direction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence


class PatternError(ValueError):
    """Raised for malformed pattern text or pattern structure."""


def validate_catalan(letters: Sequence[int]) -> bool:
    """True iff ``letters`` is a (nonempty) Catalan word."""
    if len(letters) == 0 or letters[0] != 1:
        return False
    prev = 1
    for x in letters[1:]:
        if x < 1 or x > prev + 1:
            return False
        prev = x
    return True


class CatalanWord(tuple):
    """A validated Catalan word.  Behaves as a tuple of its letters."""

    __slots__ = ()

    def __new__(cls, letters: Sequence[int]):
        letters = tuple(letters)
        if not validate_catalan(letters):
            raise ValueError("not a Catalan word: %r" % (letters,))
        return tuple.__new__(cls, letters)

    def __repr__(self) -> str:
        return "CatalanWord(%s)" % (word_to_text(self),)


def word_to_text(letters: Sequence[int]) -> str:
    """Compact text form: digit string if every letter is <= 9, else
    comma-separated."""
    if all(x <= 9 for x in letters):
        return "".join(str(x) for x in letters)
    return ",".join(str(x) for x in letters)


def word_from_text(text: str) -> CatalanWord:
    """Parse the output of :func:`word_to_text` back into a word."""
    text = text.strip()
    if not text:
        raise ValueError("empty word text")
    if "," in text:
        letters = [int(part) for part in text.split(",")]
    else:
        letters = [int(ch) for ch in text]
    return CatalanWord(letters)


@dataclass(frozen=True)
class VincularPattern:
    """A dashed pattern: a tuple of blocks, each a tuple of letters.

    The letters used must be exactly 1..k for some k (no gaps), so that
    order isomorphism is well defined against the canonical form.
    """

    sections: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.sections or any(len(s) == 0 for s in self.sections):
            raise PatternError("pattern needs at least one nonempty block")
        letters = self.letters
        alphabet = set(letters)
        if alphabet != set(range(1, max(alphabet) + 1)):
            raise PatternError(
                "pattern letters must cover 1..k with no gaps, got %s"
                % sorted(alphabet)
            )

    @property
    def letters(self) -> tuple[int, ...]:
        return tuple(x for sec in self.sections for x in sec)

    def __len__(self) -> int:
        return sum(len(s) for s in self.sections)

    @property
    def is_classical(self) -> bool:
        return all(len(s) == 1 for s in self.sections)

    @property
    def is_consecutive(self) -> bool:
        return len(self.sections) == 1

    def __str__(self) -> str:
        return "-".join("".join(str(x) for x in sec) for sec in self.sections)


def parse_pattern(text: str) -> VincularPattern:
    """Parse dashed pattern text like ``"12-3-21"``.

    Only single-digit letters 1..9 are accepted, which covers every pattern
    of interest here.
    """
    text = text.strip()
    if not text:
        raise PatternError("empty pattern text")
    sections = []
    for chunk in text.split("-"):
        if not chunk:
            raise PatternError("empty block in pattern %r" % text)
        block = []
        for ch in chunk:
            if ch < "1" or ch > "9":
                raise PatternError("bad pattern letter %r in %r" % (ch, text))
            block.append(int(ch))
        sections.append(tuple(block))
    return VincularPattern(tuple(sections))


@dataclass(frozen=True)
class Occurrence:
    """Positions (1-based) of one occurrence of a pattern in a word."""

    indices: tuple[int, ...]


def _cmp(a: int, b: int) -> int:
    return (a > b) - (a < b)


def _pattern_relations(letters: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """rel[i][j] = sign of letters[i] - letters[j], for i < j."""
    m = len(letters)
    return tuple(
        tuple(_cmp(letters[i], letters[j]) for j in range(m)) for i in range(m)
    )


def is_occurrence(
    word: Sequence[int], pattern: VincularPattern, indices: Sequence[int]
) -> bool:
    """Check that the 1-based ``indices`` really form an occurrence."""
    letters = pattern.letters
    if len(indices) != len(letters):
        return False
    if any(i < 1 or i > len(word) for i in indices):
        return False
    if any(indices[k] >= indices[k + 1] for k in range(len(indices) - 1)):
        return False
    pos = 0
    for sec in pattern.sections:
        for off in range(1, len(sec)):
            if indices[pos + off] != indices[pos + off - 1] + 1:
                return False
        pos += len(sec)
    vals = [word[i - 1] for i in indices]
    for i in range(len(vals)):
        for j in range(i + 1, len(vals)):
            if _cmp(vals[i], vals[j]) != _cmp(letters[i], letters[j]):
                return False
    return True


def _search(
    w: tuple[int, ...],
    sections: tuple[tuple[int, ...], ...],
    rel: tuple[tuple[int, ...], ...],
    tail_len: tuple[int, ...],
    si: int,
    start: int,
    placed_vals: list[int],
    placed_idx: list[int],
) -> tuple[int, ...] | None:
    """Depth-first placement of pattern blocks, leftmost match first."""
    if si == len(sections):
        return tuple(placed_idx)
    sec = sections[si]
    L = len(sec)
    n = len(w)
    q0 = len(placed_vals)
    for p in range(start, n - L - tail_len[si] + 1):
        ok = True
        for off in range(L):
            v = w[p + off]
            q = q0 + off
            relq = rel[q]  # relq[r] = sign(letters[q] - letters[r])
            for r in range(q0):
                if _cmp(v, placed_vals[r]) != relq[r]:
                    ok = False
                    break
            if not ok:
                break
            for r in range(q0, q):
                if _cmp(v, w[p + r - q0]) != relq[r]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            placed_vals.extend(w[p : p + L])
            placed_idx.extend(range(p, p + L))
            hit = _search(w, sections, rel, tail_len, si + 1, p + L, placed_vals, placed_idx)
            if hit is not None:
                return hit
            del placed_vals[q0:]
            del placed_idx[q0:]
    return None


def find_occurrence(
    word: Sequence[int], pattern: VincularPattern | str
) -> Occurrence | None:
    """First occurrence of ``pattern`` in ``word`` (leftmost block placement),
    or None if the word avoids the pattern."""
    if isinstance(pattern, str):
        pattern = parse_pattern(pattern)
    w = tuple(word)
    letters = pattern.letters
    if len(letters) > len(w):
        return None
    rel = [[0] * len(letters) for _ in range(len(letters))]
    for i in range(len(letters)):
        for j in range(len(letters)):
            rel[i][j] = _cmp(letters[i], letters[j])
    # rel is consulted as rel[q][r] with r < q; store rows for the later letter
    relrows = tuple(tuple(row) for row in rel)
    tail = []
    total = 0
    for sec in reversed(pattern.sections):
        tail.append(total)
        total += len(sec)
    tail_len = tuple(reversed(tail))
    hit = _search(w, pattern.sections, relrows, tail_len, 0, 0, [], [])
    if hit is None:
        return None
    return Occurrence(tuple(i + 1 for i in hit))


def contains(word: Sequence[int], pattern: VincularPattern | str) -> bool:
    """True iff the word contains at least one occurrence of the pattern."""
    if isinstance(pattern, str):
        pattern = parse_pattern(pattern)
    w = tuple(word)
    secs = pattern.sections
    if len(secs) == 2 and len(pattern) == 3:
        return _contains_3_two_blocks(w, pattern)
    return find_occurrence(w, pattern) is not None


def avoids(word: Sequence[int], pattern: VincularPattern | str) -> bool:
    """True iff the word has no occurrence of the pattern."""
    return not contains(word, pattern)


def _contains_3_two_blocks(w: tuple[int, ...], pattern: VincularPattern) -> bool:
    """Unrolled search for three-letter patterns with one dash (the common
    case in the tables); same exhaustive semantics as :func:`_search`."""
    a, b = pattern.sections
    n = len(w)
    if n < 3:
        return False
    letters = pattern.letters
    r01 = _cmp(letters[0], letters[1])
    r02 = _cmp(letters[0], letters[2])
    r12 = _cmp(letters[1], letters[2])
    if len(a) == 1:
        # x - yz: scan adjacent pairs, then look for an earlier single letter
        for j in range(1, n - 1):
            u, v = w[j], w[j + 1]
            if _cmp(u, v) != r12:
                continue
            for i in range(j):
                x = w[i]
                if _cmp(x, u) == r01 and _cmp(x, v) == r02:
                    return True
        return False
    # xy - z: scan adjacent pairs, then look for a later single letter
    for i in range(n - 2):
        x, y = w[i], w[i + 1]
        if _cmp(x, y) != r01:
            continue
        for k in range(i + 2, n):
            z = w[k]
            if _cmp(x, z) == r02 and _cmp(y, z) == r12:
                return True
    return False


def pattern_reverse_runs(pattern: VincularPattern) -> VincularPattern:
    """For a constant pattern 1^a1-...-1^ak, the reversed pattern
    1^ak-...-1^a1.  Only meaningful when every letter equals 1."""
    if set(pattern.letters) != {1}:
        raise PatternError("run reversal only defined for all-equal patterns")
    return VincularPattern(tuple(reversed(pattern.sections)))


def runs(letters: Sequence[int]) -> list[tuple[int, int]]:
    """Maximal runs of equal letters, as (letter, length) pairs."""
    out: list[tuple[int, int]] = []
    for x in letters:
        if out and out[-1][0] == x:
            out[-1] = (x, out[-1][1] + 1)
        else:
            out.append((x, 1))
    return out


@dataclass(frozen=True)
class MarkedWord:
    """A weakly increasing Catalan word together with marks on its runs.

    The first run is always marked and no two consecutive runs are both
    marked.  Weakly increasing Catalan words are exactly 1^e1 2^e2 ... m^em
    with every ei >= 1, so splitting the run list before each marked run
    yields sections whose letter ranges are consecutive.
    """

    letters: tuple[int, ...]
    marks: tuple[bool, ...]

    def __post_init__(self):
        if not validate_catalan(self.letters):
            raise ValueError("marked word letters must form a Catalan word")
        if any(b > a for a, b in zip(self.letters[1:], self.letters)):
            raise ValueError("marked word must be weakly increasing")
        rr = runs(self.letters)
        if len(self.marks) != len(rr):
            raise ValueError(
                "need one mark per run: %d runs, %d marks"
                % (len(rr), len(self.marks))
            )
        if not self.marks[0]:
            raise ValueError("first run must be marked")
        for a, b in zip(self.marks, self.marks[1:]):
            if a and b:
                raise ValueError("two consecutive runs are marked")

    def sections(self) -> list[tuple[int, ...]]:
        """Split at marked runs; each section starts with a marked run."""
        rr = runs(self.letters)
        out: list[list[int]] = []
        for (letter, length), marked in zip(rr, self.marks):
            if marked:
                out.append([])
            out[-1].extend([letter] * length)
        return [tuple(sec) for sec in out]

    def __str__(self) -> str:
        rr = runs(self.letters)
        parts = []
        for (letter, length), marked in zip(rr, self.marks):
            parts.append(str(letter) * length + ("*" if marked else ""))
        return " ".join(parts)

    @classmethod
    def from_text(cls, text: str) -> "MarkedWord":
        letters: list[int] = []
        marks: list[bool] = []
        for part in text.split():
            marked = part.endswith("*")
            if marked:
                part = part[:-1]
            letters.extend(int(ch) for ch in part)
            marks.append(marked)
        return cls(tuple(letters), tuple(marks))
