"""Fast counting of pattern-avoiding Catalan words.

Two kinds of fast route live here: closed forms (powers, Fibonacci,
Motzkin and relatives, binomials) for the patterns whose avoiders have a
simple description, and bottom-up recurrence tables refined by word
statistics for the harder ones.  Both are certified against the
enumeration oracle in the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def motzkin(n: int) -> int:
    return _motzkin_list(n)[n]


def _motzkin_list(n: int) -> list[int]:
    m = [1] * (n + 1)
    for k in range(1, n + 1):
        m[k] = m[k - 1] + sum(m[i] * m[k - 2 - i] for i in range(k - 1))
    return m


def left_factor(n: int) -> int:
    """Number of prefixes of Motzkin paths with n-1 steps (A005773).

    Counted directly as lattice paths with steps +1/0/-1 staying at or
    above zero, with any final height.  left_factor(0) = 1 by convention.
    """
    if n <= 1:
        return 1
    steps = n - 1
    heights = [1] + [0] * steps
    for _ in range(steps):
        nxt = [0] * (steps + 1)
        for h, ways in enumerate(heights):
            if not ways:
                continue
            nxt[h] += ways
            if h + 1 <= steps:
                nxt[h + 1] += ways
            if h - 1 >= 0:
                nxt[h - 1] += ways
        heights = nxt
    return sum(heights)


def fibonacci(n: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def pow2(n: int) -> int:
    return 2**n


def pow3(n: int) -> int:
    return 3**n


_BASE = {
    "catalan": catalan,
    "motzkin": motzkin,
    "left_factor": left_factor,
    "fibonacci": fibonacci,
    "pow2": pow2,
    "pow3": pow3,
}


def base(name: str, n: int) -> int:
    """Look up a base sequence value by name."""
    try:
        fn = _BASE[name]
    except KeyError:
        raise KeyError("unknown base sequence %r" % name) from None
    if n < 0:
        raise ValueError("negative index")
    return fn(n)


# Patterns whose counting sequence has a closed form, n >= 1.
_CLOSED = {
    "1-12": lambda n: pow2(n - 1),
    "1-21": lambda n: pow2(n - 1),
    "1-23": lambda n: pow2(n - 1),
    "12-1": lambda n: pow2(n - 1),
    "12-3": lambda n: pow2(n - 1),
    "2-12": lambda n: fibonacci(2 * n - 1),
    "1-32": lambda n: fibonacci(2 * n - 1),
    "23-1": lambda n: fibonacci(2 * n - 1),
    "3-12": lambda n: (pow3(n - 1) + 1) // 2,
    "32-1": lambda n: (pow3(n - 1) + 1) // 2,
    "1-22": motzkin,
    "2-31": left_factor,
    "22-1": left_factor,
    "12-2": lambda n: binom(n, 2) + 1,
    "2-13": catalan,
    "13-2": catalan,
}

CLOSED_FORM_PATTERNS = tuple(sorted(_CLOSED))


def closed_form(pattern: str, n: int) -> int:
    """Closed-form avoider count, for the patterns that have one."""
    if pattern not in _CLOSED:
        raise KeyError("no closed form for pattern %r" % pattern)
    if n < 1:
        raise ValueError("need n >= 1")
    return _CLOSED[pattern](n)


@dataclass
class RefinedTable:
    """Recurrence output refined by word statistics.

    ``layers`` maps a layer name to a sparse dict of integer entries;
    ``axes`` names the indices of each layer (the first axis is always the
    word length n).  Missing entries are zero.
    """

    pattern: str
    size: int
    axes: dict[str, tuple[str, ...]] = field(default_factory=dict)
    layers: dict[str, dict[tuple, int]] = field(default_factory=dict)

    def get(self, layer: str, *key: int) -> int:
        return self.layers[layer].get(key, 0)

    def layer_at(self, layer: str, n: int) -> dict[tuple, int]:
        """All nonzero entries of a layer at length n, keyed without n."""
        return {
            key[1:]: value
            for key, value in self.layers[layer].items()
            if key[0] == n and value
        }


def _build_2_21(size: int) -> RefinedTable:
    # u[(n, m, a)] = avoiders of 2-21 with largest letter m, last letter a
    u: dict[tuple, int] = {}
    g = u.get
    for n in range(1, size + 1):
        u[(n, 1, 1)] = 1
    if size >= 2:
        u[(2, 2, 2)] = 1
    for n in range(3, size + 1):
        for m in range(2, n + 1):
            for a in range(1, m):
                u[(n, m, a)] = (
                    g((n - 1, m, a - 1), 0)
                    + g((n - 1, m, a), 0)
                    + g((n - 2, m - 1, m - 1), 0)
                )
            u[(n, m, m)] = (
                g((n - 1, m - 1, m - 1), 0)
                + g((n - 1, m, m - 1), 0)
                + g((n - 1, m, m), 0)
            )
    return RefinedTable(
        pattern="2-21",
        size=size,
        axes={"u": ("n", "max_letter", "last_letter")},
        layers={"u": u},
    )


def _build_3_21(size: int) -> RefinedTable:
    # Same refinement as 2-21; only the a < m branch differs.
    v: dict[tuple, int] = {}
    g = v.get
    for n in range(1, size + 1):
        v[(n, 1, 1)] = 1
    if size >= 2:
        v[(2, 2, 2)] = 1
    for n in range(3, size + 1):
        for m in range(2, n + 1):
            for a in range(1, m):
                v[(n, m, a)] = (
                    g((n - 1, m, a - 1), 0)
                    + g((n - 1, m, a), 0)
                    + g((n - 1, m, m), 0)
                )
            v[(n, m, m)] = (
                g((n - 1, m - 1, m - 1), 0)
                + g((n - 1, m, m - 1), 0)
                + g((n - 1, m, m), 0)
            )
    return RefinedTable(
        pattern="3-21",
        size=size,
        axes={"v": ("n", "max_letter", "last_letter")},
        layers={"v": v},
    )


def _build_21_2(size: int) -> RefinedTable:
    # u[(n, a)] = avoiders of 21-2 with last letter a
    u: dict[tuple, int] = {(1, 1): 1}
    g = u.get
    for n in range(2, size + 1):
        row_prev = [g((n - 1, j), 0) for j in range(n)]  # j = 0..n-1
        suffix = [0] * (n + 1)
        for j in range(n - 1, 0, -1):
            suffix[j] = suffix[j + 1] + row_prev[j]
        u[(n, 1)] = suffix[1]
        for a in range(2, n + 1):
            correction = 0
            for j in range(1, a):
                for m in range(j + 1, n - a + 1):
                    c = binom(m - 2, j - 1)
                    if c:
                        correction += c * g((n - m, a), 0)
            u[(n, a)] = suffix[a - 1] - correction
    return RefinedTable(
        pattern="21-2",
        size=size,
        axes={"u": ("n", "last_letter")},
        layers={"u": u},
    )


def _build_21_3(size: int) -> RefinedTable:
    v: dict[tuple, int] = {(1, 1): 1}
    g = v.get
    for n in range(2, size + 1):
        row_prev = [g((n - 1, j), 0) for j in range(n)]
        suffix = [0] * (n + 1)
        for j in range(n - 1, 0, -1):
            suffix[j] = suffix[j + 1] + row_prev[j]
        v[(n, 1)] = suffix[1]
        for a in range(2, n + 1):
            correction = 0
            for j in range(2, a):
                for m in range(j + 1, n - a + 2):
                    c = binom(m - 2, j - 1)
                    if c:
                        correction += c * g((n - m, a - 1), 0)
            v[(n, a)] = suffix[a - 1] - correction
    return RefinedTable(
        pattern="21-3",
        size=size,
        axes={"v": ("n", "last_letter")},
        layers={"v": v},
    )


def _build_31_2(size: int) -> RefinedTable:
    # w[(n, a, b)] = avoiders of 31-2 with a ones in b runs of ones and at
    # least one other letter (hence a <= n-1)
    w: dict[tuple, int] = {}
    if size >= 2:
        w[(2, 1, 1)] = 1
    g = w.get
    for n in range(3, size + 1):
        for a in range(1, n):
            for b in range(1, a + 1):
                lead = binom(a - 1, b - 1)
                if not lead:
                    continue
                total = binom(n - a, b - 1)
                for c in range(1, n - a):
                    for d in range(1, c + 1):
                        wcd = g((n - a, c, d), 0)
                        if wcd:
                            total += wcd * binom(c - d + 1, b - 1)
                if total:
                    w[(n, a, b)] = lead * total
    return RefinedTable(
        pattern="31-2",
        size=size,
        axes={"w": ("n", "ones_count", "one_runs")},
        layers={"w": w},
    )


def _build_11_2(size: int) -> RefinedTable:
    # m[(n, a)]  = level-free Catalan words of length n with last letter a
    # p[(n, a, b)] = words over 1..a obeying the growth rule, starting with
    #                b, avoiding 11-2; p_total[(n, a)] sums over b, with the
    #                empty word giving p_total[(0, a)] = 1
    mm: dict[tuple, int] = {}
    for n in range(1, size + 1):
        mm[(n, n)] = 1
    for n in range(2, size + 1):
        for a in range(1, n):
            total = mm.get((n - 1, a - 1), 0)
            for i in range(a + 1, n):
                total += mm.get((n - 1, i), 0)
            if total:
                mm[(n, a)] = total

    p: dict[tuple, int] = {}
    p_total: dict[tuple, int] = {}
    for a in range(1, size + 1):
        p_total[(0, a)] = 1
        for b in range(1, a + 1):
            p[(1, a, b)] = 1
        p_total[(1, a)] = a
    for n in range(2, size + 1):
        for a in range(1, size + 1):
            for b in range(1, a):
                total = p.get((n - 1, a, b + 1), 0) + p_total.get((n - 2, b), 0)
                for i in range(1, b):
                    total += p.get((n - 1, a, i), 0)
                p[(n, a, b)] = total
            p[(n, a, a)] = p_total.get((n - 1, a), 0)
            p_total[(n, a)] = sum(p.get((n, a, b), 0) for b in range(1, a + 1))
    return RefinedTable(
        pattern="11-2",
        size=size,
        axes={
            "m": ("n", "last_letter"),
            "p": ("n", "alphabet_bound", "first_letter"),
            "p_total": ("n", "alphabet_bound"),
        },
        layers={"m": mm, "p": p, "p_total": p_total},
    )


def _build_21_1(size: int) -> RefinedTable:
    # r[(n, m, a)] = avoiders of 21-1 with largest letter m, at least one
    # descent, smallest descent bottom a (1 <= a < m <= n-1)
    # r_total[(n, m)] = all avoiders with largest letter m
    r: dict[tuple, int] = {}
    rt: dict[tuple, int] = {}
    if size >= 1:
        rt[(1, 1)] = 1
    if size >= 2:
        rt[(2, 1)] = 1
        rt[(2, 2)] = 1
    if size >= 3:
        r[(3, 2, 1)] = 1
        rt[(3, 1)] = 1
        rt[(3, 2)] = binom(2, 1) + r[(3, 2, 1)]
        rt[(3, 3)] = 1
    for n in range(4, size + 1):
        for m in range(2, n):
            total = r.get((n - 1, m, 1), 0) + rt.get((n - 2, m - 1), 0)
            for i in range(1, m - 1):
                for j in range(i, n - m):
                    c = binom(j - 1, i - 1)
                    if c:
                        total += c * rt.get((n - j - 2, m - 1), 0)
            for i in range(1, m):
                for j in range(m - 1, n - i - 1):
                    c = binom(j - 1, m - 2)
                    if c:
                        total += c * rt.get((n - j - 2, i), 0)
            for i in range(2, m - 1):
                for j in range(m, n - 2):
                    rj = r.get((j, m - 1, i), 0)
                    if not rj:
                        continue
                    for k in range(1, min(i - 1, n - j - 2) + 1):
                        total += rj * rt.get((n - j - 2, k), 0)
            r[(n, m, 1)] = total
            for a in range(2, m):
                r[(n, m, a)] = sum(
                    r.get((n - i, m - 1, a - 1), 0) for i in range(1, n - m + 1)
                )
        for m in range(1, n):
            rt[(n, m)] = binom(n - 1, m - 1) + sum(
                r.get((n, m, a), 0) for a in range(1, m)
            )
        rt[(n, n)] = 1
    return RefinedTable(
        pattern="21-1",
        size=size,
        axes={
            "r": ("n", "max_letter", "smallest_descent_bottom"),
            "r_total": ("n", "max_letter"),
        },
        layers={"r": r, "r_total": rt},
    )


_BUILDERS = {
    "2-21": _build_2_21,
    "3-21": _build_3_21,
    "21-2": _build_21_2,
    "21-3": _build_21_3,
    "31-2": _build_31_2,
    "11-2": _build_11_2,
    "21-1": _build_21_1,
}

_CACHE: dict[str, RefinedTable] = {}


def refined_table(pattern: str, n: int) -> RefinedTable:
    """The refined recurrence table for ``pattern``, filled through
    length n (possibly further if a larger table is already cached)."""
    if pattern not in _BUILDERS:
        raise KeyError("no refined recurrence for pattern %r" % pattern)
    cached = _CACHE.get(pattern)
    if cached is None or cached.size < n:
        cached = _BUILDERS[pattern](n)
        _CACHE[pattern] = cached
    return cached


def _seq_22_1(size: int) -> list[int]:
    # a[n] = M(n-1) + sum M(i-1) a[n-i]
    mot = _motzkin_list(max(size, 1))
    a = [0] * (size + 1)
    for n in range(1, size + 1):
        a[n] = mot[n - 1] + sum(mot[i - 1] * a[n - i] for i in range(1, n))
    return a


def _seq_32_1(size: int) -> list[int]:
    b = [0] * (size + 1)
    if size >= 1:
        b[1] = 1
    for n in range(2, size + 1):
        b[n] = 2 * b[n - 1] + sum(
            pow2(m - 2) * b[n - m] for m in range(2, n)
        )
    return b


RECURRENCE_PATTERNS = (
    "2-21", "3-21", "11-2", "21-1", "21-2", "21-3", "22-1", "31-2", "32-1",
)


def count_by_recurrence(pattern: str, n: int) -> int:
    """Avoider count via the refined recurrences."""
    if n < 1:
        raise ValueError("need n >= 1")
    if pattern == "22-1":
        return _seq_22_1(n)[n]
    if pattern == "32-1":
        return _seq_32_1(n)[n]
    if pattern in ("2-21", "3-21"):
        table = refined_table(pattern, n)
        layer = "u" if pattern == "2-21" else "v"
        return sum(
            table.get(layer, n, m, a)
            for m in range(1, n + 1)
            for a in range(1, m + 1)
        )
    if pattern in ("21-2", "21-3"):
        table = refined_table(pattern, n)
        layer = "u" if pattern == "21-2" else "v"
        return sum(table.get(layer, n, a) for a in range(1, n + 1))
    if pattern == "31-2":
        table = refined_table(pattern, n)
        return 1 + sum(
            table.get("w", n, a, b)
            for a in range(1, n)
            for b in range(1, a + 1)
        )
    if pattern == "11-2":
        table = refined_table(pattern, n)
        total = motzkin(n - 1)
        for i in range(1, n):
            for j in range(1, i + 1):
                mij = table.get("m", i, j)
                if mij:
                    total += mij * table.get("p_total", n - i - 1, j)
        return total
    if pattern == "21-1":
        table = refined_table(pattern, n)
        return sum(table.get("r_total", n, m) for m in range(1, n + 1))
    raise KeyError("no recurrence for pattern %r" % pattern)
