"""Constructive bijections between Catalan words and lattice paths.

The maps here witness the count identities behind several avoidance
classes: Catalan words correspond to Dyck paths, the no-level words to
Dyck paths without udu, and those in turn to Motzkin paths one step
shorter.  Each map comes with its inverse so round-trips can be checked
exhaustively, and the statistic-preservation claims (largest letter,
last letter) are real properties of the constructions rather than
afterthoughts.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import CatalanWord, MarkedWord, contains, runs, word_from_text


def _as_word(word) -> CatalanWord:
    if isinstance(word, CatalanWord):
        return word
    if isinstance(word, str):
        return word_from_text(word)
    return CatalanWord(word)

_DYCK_STEPS = {"u": 1, "d": -1}
_MOTZKIN_STEPS = {"u": 1, "d": -1, "h": 0}


def _check_steps(steps: str, alphabet: dict, closed: bool) -> None:
    height = 0
    for i, s in enumerate(steps):
        if s not in alphabet:
            raise ValueError("bad step %r at position %d" % (s, i))
        height += alphabet[s]
        if height < 0:
            raise ValueError("path dips below the axis at position %d" % i)
    if closed and height != 0:
        raise ValueError("path ends at height %d, expected 0" % height)


@dataclass(frozen=True)
class DyckPath:
    """A balanced u/d path staying weakly above the axis."""

    steps: str

    def __post_init__(self):
        _check_steps(self.steps, _DYCK_STEPS, closed=True)

    @property
    def semilength(self) -> int:
        return len(self.steps) // 2

    def avoids_udu(self) -> bool:
        return "udu" not in self.steps

    def __str__(self) -> str:
        return self.steps


@dataclass(frozen=True)
class MotzkinPath:
    """A u/d/h path staying weakly above the axis.  With left_factor
    set, the endpoint may sit at any height; otherwise it must close."""

    steps: str
    left_factor: bool = False

    def __post_init__(self):
        _check_steps(self.steps, _MOTZKIN_STEPS, closed=not self.left_factor)

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return self.steps


def _units(steps: str) -> list[str]:
    """Factor a closed path at its returns to the axis."""
    out = []
    height = 0
    start = 0
    for i, s in enumerate(steps):
        height += _MOTZKIN_STEPS[s]
        if height == 0:
            out.append(steps[start : i + 1])
            start = i + 1
    return out


def word_to_dyck(word) -> DyckPath:
    """The j-th up-step of the image ends at height equal to the j-th
    letter; down-steps fill the gaps.  A bijection onto Dyck paths."""
    w = _as_word(word)
    parts = []
    height = 0
    for letter in w:
        parts.append("d" * (height - letter + 1))
        parts.append("u")
        height = letter
    parts.append("d" * height)
    return DyckPath("".join(parts))


def dyck_to_word(path) -> CatalanWord:
    steps = path.steps if isinstance(path, DyckPath) else DyckPath(str(path)).steps
    if not steps:
        raise ValueError("the empty path corresponds to no word")
    letters = []
    height = 0
    for s in steps:
        height += _DYCK_STEPS[s]
        if s == "u":
            letters.append(height)
    return CatalanWord(letters)


def _as_dyck_steps(path) -> str:
    return path.steps if isinstance(path, DyckPath) else DyckPath(str(path)).steps


def _as_motzkin_steps(path) -> str:
    if isinstance(path, MotzkinPath):
        if path.left_factor:
            raise ValueError("map needs a closed path, not a left factor")
        return path.steps
    return MotzkinPath(str(path)).steps


def _shrink(steps: str) -> str:
    """Forward unit recursion: every unit but the last becomes
    u <image of interior> d; a nonempty last interior rides behind an
    h marker; a bare ud last unit disappears."""
    if not steps:
        return ""
    units = _units(steps)
    parts = ["u" + _shrink(unit[1:-1]) + "d" for unit in units[:-1]]
    interior = units[-1][1:-1]
    if interior:
        parts.append("h" + _shrink(interior))
    return "".join(parts)


def _grow(steps: str) -> str:
    """Inverse unit recursion, keyed to the leftmost h on the axis."""
    height = 0
    pos = None
    for i, s in enumerate(steps):
        if s == "h" and height == 0:
            pos = i
            break
        height += _MOTZKIN_STEPS[s]
    if pos is None:
        units = _units(steps)
        return "".join("u" + _grow(u[1:-1]) + "d" for u in units) + "ud"
    head, tail = steps[:pos], steps[pos + 1 :]
    units = _units(head)
    rebuilt = "".join("u" + _grow(u[1:-1]) + "d" for u in units)
    return rebuilt + "u" + _grow(tail) + "d"


def alpha(path) -> MotzkinPath:
    """Bijection from udu-free Dyck paths of semilength n to Motzkin
    paths of length n-1."""
    steps = _as_dyck_steps(path)
    if not steps:
        raise ValueError("need a nonempty path")
    if "udu" in steps:
        raise ValueError("path contains udu")
    return MotzkinPath(_shrink(steps))


def alpha_inv(path) -> DyckPath:
    steps = _as_motzkin_steps(path)
    return DyckPath(_grow(steps))


def in_beta_domain(path) -> bool:
    """True when every unit's interior is udu-free, i.e. any udu sits
    on the axis."""
    steps = _as_dyck_steps(path)
    return all("udu" not in unit[1:-1] for unit in _units(steps))


def beta(path) -> MotzkinPath:
    """Bijection from Dyck paths whose udu factors all touch the axis
    to Motzkin paths of the same semilength: axis-level ud becomes h,
    larger units recurse through the alpha construction."""
    steps = _as_dyck_steps(path)
    parts = []
    for unit in _units(steps):
        if unit == "ud":
            parts.append("h")
            continue
        interior = unit[1:-1]
        if "udu" in interior:
            raise ValueError("unit interior contains udu; path outside the domain")
        parts.append("u" + _shrink(interior) + "d")
    return MotzkinPath("".join(parts))


def beta_inv(path) -> DyckPath:
    steps = _as_motzkin_steps(path)
    parts = []
    for unit in _units(steps):
        if unit == "h":
            parts.append("ud")
        else:
            parts.append("u" + _grow(unit[1:-1]) + "d")
    return DyckPath("".join(parts))


def omega_to_avoider(marked: MarkedWord) -> CatalanWord:
    """Flatten a marked weakly increasing word: each section drops by
    its own minimum less one, so every descent bottom in the image is 1.
    Injective onto the 1-32 avoiders."""
    letters = []
    for section in marked.sections():
        base = section[0] - 1
        letters.extend(v - base for v in section)
    return CatalanWord(letters)


def transfer_runs(word) -> CatalanWord:
    """Carry the repeats of each value from its last run to its first
    run.  Maps the 11-1 avoiders onto the 1-11 avoiders, preserving the
    largest and last letters."""
    w = _as_word(word)
    if contains(w, "11-1"):
        raise ValueError("word has a repeat before a later copy; not in the source class")
    return _redistribute(w, to_first=True)


def transfer_runs_back(word) -> CatalanWord:
    w = _as_word(word)
    if contains(w, "1-11"):
        raise ValueError("word has a copy before a later repeat; not in the source class")
    return _redistribute(w, to_first=False)


def _redistribute(w: CatalanWord, to_first: bool) -> CatalanWord:
    rs = runs(w)
    total: dict[int, int] = {}
    nruns: dict[int, int] = {}
    for value, length in rs:
        total[value] = total.get(value, 0) + length
        nruns[value] = nruns.get(value, 0) + 1
    seen: dict[int, int] = {}
    letters = []
    for value, _ in rs:
        seen[value] = seen.get(value, 0) + 1
        takes_all = seen[value] == (1 if to_first else nruns[value])
        size = total[value] - nruns[value] + 1 if takes_all else 1
        letters.extend([value] * size)
    return CatalanWord(letters)


def is_smooth(word) -> bool:
    """True when adjacent letters differ by at most one."""
    w = _as_word(word)
    return all(abs(b - a) <= 1 for a, b in zip(w, w[1:]))
