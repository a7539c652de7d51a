"""Exact generating functions for the hard avoidance classes.

Nine patterns have no simple closed-form count; each one has an exact
expression for its avoider generating function (an explicit sum, an
iterated functional equation, or a continued-fraction style fixed
point).  This module evaluates those expressions as truncated rational
series.  All arithmetic runs over Fraction coefficients, with the
square roots of the published forms absorbed into the rescaled
Chebyshev quotients from the series module, so the final integrality
check on every coefficient is meaningful.

Conventions: series_for returns the avoider generating function with
constant term 1 (the empty word); the coefficient of t^n is the number
of length-n avoiders.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .series import (
    DEFAULT_ORDER,
    Series,
    cheb_ab,
    cheb_v,
    divide,
    one,
    poly,
    sqrt,
    t,
    zero,
)
from .words import VincularPattern, parse_pattern

# Extra working orders on top of the requested truncation.  Divisions
# that cancel a power of t shorten a series; the slack absorbs that so
# the final truncation never comes up short.
_SLACK = 6

GENFUN_PATTERNS = (
    "1-11",
    "11-2",
    "2-11",
    "2-21",
    "21-1",
    "21-2",
    "21-3",
    "3-21",
    "31-2",
)

AUX_NAMES = ("H", "J", "G", "Q", "K", "P2_11", "T", "MotzkinGF", "Mv", "Pv")


def _pattern_key(pattern) -> str:
    if isinstance(pattern, VincularPattern):
        return str(pattern)
    return str(parse_pattern(str(pattern)))


def _binom2(n: int) -> int:
    return math.comb(n, 2)


def _collapse_exponents(t_halves: int, u_halves: int) -> tuple[int, int]:
    """The raw formulas carry half-integer powers of t and 1+t; after
    rescaling the Chebyshev factors those must combine to whole powers.
    Exponents arrive here doubled; a stray half is an implementation bug."""
    if t_halves % 2 or u_halves % 2:
        raise AssertionError(
            "fractional exponent survived normalization: t^%s, (1+t)^%s"
            % (Fraction(t_halves, 2), Fraction(u_halves, 2))
        )
    return t_halves // 2, u_halves // 2


# ---------------------------------------------------------------------------
# auxiliary generating functions


def _growth_tail(m: int, W: int) -> Series:
    """No-level growth words over 1..m that end in m (H family).

    Index 0 is the empty family (zero series); for m >= 1 the series is
    (t/(1+t)) V_{m-1}/V_{m+1} in the rescaled Chebyshev quotients.
    """
    if m == 0:
        return zero(W)
    num = t(W) * cheb_v(m - 1, W)
    return divide(num, poly([1, 1], W) * cheb_v(m + 1, W))


def _growth_all(m: int, W: int) -> Series:
    """All no-level growth words over 1..m, empty word included (J family)."""
    return divide(one(W), cheb_v(m + 1, W))


def _no_level_ending_high(m: int, W: int) -> Series:
    """No-level Catalan words with largest letter m-1 ending in m-1
    (G family); the m = 1 member is the constant 1 by convention."""
    return divide(
        divide(t(W), poly([1, 1], W)) ** (m - 1), cheb_v(m, W)
    )


def _no_level_by_max(m: int, W: int) -> Series:
    """No-level Catalan words with largest letter exactly m (Q family)."""
    ratio = divide(t(W), poly([1, 1], W))
    return divide(ratio ** m, cheb_v(m, W) * cheb_v(m + 1, W))


def _section_weight(m: int, W: int) -> Series:
    """K family: the per-max-letter weight appearing in the product
    route for the 2-11 class."""
    ratio = divide(t(W), poly([1, 1], W))
    return divide(
        ratio ** (m - 1), poly([1, 1], W) * cheb_v(m, W) * cheb_v(m + 1, W)
    )


def _avoid_2_11_by_max(m: int, W: int) -> Series:
    """2-11 avoiders with largest letter m, assembled from the section
    decomposition: t * K_m * J_{m-1} / (1 - t - t H_{m-1})."""
    num = t(W) * _section_weight(m, W) * _growth_all(m - 1, W)
    den = poly([1, -1], W) - t(W) * _growth_tail(m - 1, W)
    return divide(num, den)


def _motzkin_gf(W: int) -> Series:
    """Motzkin number generating function, order W."""
    disc = sqrt(poly([1, -2, -3], W + 2))
    return divide(poly([1, -1], W + 2) - disc, poly([0, 0, 2], W + 2))


def _motzkin_head(W: int) -> Series:
    """T = 1 + t*M(t), order W, computed from its radical form."""
    disc = sqrt(poly([1, -2, -3], W + 1))
    return divide(poly([1, 1], W + 1) - disc, poly([0, 2], W + 1))


def _marks_gf(v, W: int) -> Series:
    """Distribution of no-level Catalan words by last letter: the
    coefficient of t^n v^(a-1) counts those of length n ending in a.
    v may be a scalar or a Series."""
    if not isinstance(v, Series):
        v = poly([Fraction(v)], W + 2)
    disc = sqrt(poly([1, -2, -3], W + 2))
    num = one(W + 2) + (1 - 2 * v) * t(W + 2) - disc
    den = 2 * (1 - v + (1 - v) * t(W + 2) + v * v * t(W + 2))
    return divide(num, den)


def _suffix_weight(v: Series, T: Series, W: int) -> Series:
    """a(v): weight of one non-final section in the 11-2 iteration."""
    num = (t(W) - v) * t(W) ** 3 * T ** 8
    den = poly([1, 1], W) ** 3 * (poly([1, 1], W) - v * T * T)
    return divide(num, den)


def _suffix_tail(v: Series, T: Series, W: int) -> Series:
    """b(v): weight of the final section in the 11-2 iteration."""
    num = t(W) * T ** 3 * (2 - T)
    den = (one(W) - v) * (one(W) + v - v * T) * (poly([1, 1], W) - v * T * T)
    return divide(num, den)


def _iterated_suffix_sum(v: Series, W: int) -> Series:
    """P(t; v, 1) = sum_{j>=0} b(v s^j) prod_{i<j} a(v s^i) with
    s = t T^2/(1+t); needs val(v) >= 1 so every b-denominator is a unit."""
    val = v.valuation()
    if val is None or val < 1:
        raise ValueError("iterated suffix sum needs an argument with positive valuation")
    T = _motzkin_head(W)
    s = divide(t(W) * T * T, poly([1, 1], W))
    return _shifted_product_sum(
        v1=v,
        shift=s,
        term=lambda u: _suffix_tail(u, T, W),
        factor=lambda u: _suffix_weight(u, T, W),
        W=W,
        bound=W // 4 + 2,
    )


def aux_series(name: str, param=None, order: int = DEFAULT_ORDER) -> Series:
    """Evaluate one of the named auxiliary generating functions.

    Indexed families take an integer index m >= 1: H (no-level growth
    words over 1..m ending in m), J (all no-level growth words over
    1..m), G (no-level Catalan words with max m-1 ending in m-1),
    Q (no-level Catalan words with max m), K (section weight for the
    2-11 product route), P2_11 (2-11 avoiders with max m).  T and
    MotzkinGF take no parameter.  Mv takes a scalar or Series marker
    value; Pv takes a Series argument with positive valuation.
    """
    if name not in AUX_NAMES:
        raise ValueError("unknown auxiliary series %r" % name)
    if order < 1:
        raise ValueError("order must be >= 1")
    W = order + 2
    if name in ("H", "J", "G", "Q", "K", "P2_11"):
        if not isinstance(param, int) or param < 1:
            raise ValueError("family %s needs an integer index >= 1" % name)
        fams = {
            "H": _growth_tail,
            "J": _growth_all,
            "G": _no_level_ending_high,
            "Q": _no_level_by_max,
            "K": _section_weight,
            "P2_11": _avoid_2_11_by_max,
        }
        out = fams[name](param, W)
    elif name == "T":
        out = _motzkin_head(W)
    elif name == "MotzkinGF":
        out = _motzkin_gf(W)
    elif name == "Mv":
        out = _marks_gf(param if param is not None else 1, W)
    else:
        if not isinstance(param, Series):
            raise ValueError("Pv needs a Series argument")
        out = _iterated_suffix_sum(param, W)
    if out.order < order:
        raise ValueError(
            "argument series too short for requested order %d" % order
        )
    return out.truncate(order)


# ---------------------------------------------------------------------------
# kernel-style evaluation engine


@dataclass(frozen=True)
class GfRecipe:
    """Evaluation plan for one generating function: which object, how
    to iterate it, how far to truncate, and where to stop summing.  The
    bound is sized so every dropped term has valuation beyond the
    internal working order (checked again at run time)."""

    pattern: str
    strategy: str
    order: int
    bound: int


_STRATEGIES = {
    "21-2": "iterated-functional",
    "21-3": "iterated-functional",
    "11-2": "iterated-functional",
    "21-1": "fixed-point-recursion",
    "2-21-last-equals-max": "explicit-sum",
}

KERNEL_RECIPES = tuple(sorted(_STRATEGIES))


def kernel_recipe(name: str, order: int = DEFAULT_ORDER) -> GfRecipe:
    if name not in _STRATEGIES:
        raise ValueError("no kernel recipe for %r" % name)
    if order < 1:
        raise ValueError("order must be >= 1")
    W = order + _SLACK
    if name == "21-2":
        # term j carries t^(2j)
        bound = W // 2 + 1
    elif name == "21-3":
        # term j carries t^(j(j+5)/2)
        bound = 1
        while bound * (bound + 5) // 2 <= W:
            bound += 1
    elif name == "11-2":
        # each section factor carries at least t^4
        bound = W // 4 + 2
    elif name == "21-1":
        # recursion argument gains one power of t per level
        bound = W + 1
    else:
        # term i carries t^(1 + i(i+7)/2)
        bound = 0
        while 1 + bound * (bound + 7) // 2 <= W:
            bound += 1
    return GfRecipe(name, _STRATEGIES[name], order, bound)


def _shifted_product_sum(
    v1: Series,
    shift: Series,
    term: Callable[[Series], Series],
    factor: Callable[[Series], Series],
    W: int,
    bound: int,
) -> Series:
    """sum_{j=1..bound} term(v_j) prod_{i<j} factor(v_i), where
    v_{j+1} = v_j * shift.  The shift must raise the valuation each
    step; the first dropped term must vanish through the working order."""
    sval = shift.valuation()
    if sval is None or sval < 1:
        raise ValueError(
            "substitution does not raise valuation; refusing non-contracting recipe"
        )
    total = zero(W)
    prod = one(W)
    v = v1
    for _ in range(bound):
        total = total + prod * term(v)
        prod = prod * factor(v)
        v = v * shift
        if prod.is_zero():
            return total
    dropped = prod * term(v)
    if not dropped.is_zero():
        raise AssertionError(
            "termination bound %d too small: dropped term still visible" % bound
        )
    return total


def _kernel_pieces(name: str, W: int):
    """x(t), the substitution images v_i = x (t/(1-t))^i, and the
    per-step factor for the two kernel-method classes."""
    shrink = poly([1, -1], W)
    gap = poly([1, -2], W)
    if name == "21-2":
        x = divide(shrink, gap)

        def kern(v: Series) -> Series:
            return one(W) + divide(v * v * t(W), one(W) - v) + divide(t(W) ** 2, gap)

        def fac(v: Series) -> Series:
            return divide(t(W) ** 2, gap * kern(v))

    else:
        rad = poly([1, -10, 37, -62, 46, -12, 1], W + 1)
        num = poly([1, -3, 2, -1], W + 1) - sqrt(rad)
        x = divide(num, poly([0, 2, -6, 2], W + 1))

        def kern(v: Series) -> Series:
            return (
                one(W)
                + divide(v * v * t(W), one(W) - v)
                + divide(v * t(W) ** 3, shrink * gap)
            )

        def fac(v: Series) -> Series:
            return divide(v * t(W) ** 2, gap * kern(v))

    return x, kern, fac


def _kernel_avoider_sum(name: str, W: int, bound: int) -> Series:
    """Solve the functional equation for 21-2 or 21-3 at the kernel
    root: (x-1)(1 + S1) / (1 + (1-x) S2) where S1 sums the iterated
    products and S2 the same with an extra 1/(1-v_j)."""
    x, _, fac = _kernel_pieces(name, W)
    shift = divide(t(W), poly([1, -1], W))
    v1 = x * shift
    s1 = _shifted_product_sum(v1, shift, fac, fac, W, bound)
    s2 = _shifted_product_sum(
        v1, shift, lambda v: divide(fac(v), one(W) - v), fac, W, bound
    )
    num = (x - 1) * (one(W) + s1)
    den = one(W) + (1 - x) * s2
    return divide(num, den)


def kernel_root(pattern: str, order: int = DEFAULT_ORDER) -> Series:
    """k(t; x(t)) for the two kernel-method classes.  The substitution
    x(t) is chosen to kill the kernel, so the result must be the zero
    series through the order; anything else is a transcription bug."""
    if pattern not in ("21-2", "21-3"):
        raise ValueError("kernel root defined for 21-2 and 21-3 only")
    W = order + 3
    x, kern, _ = _kernel_pieces(pattern, W)
    return kern(x).truncate(order)


def _max_letter_fixed_point(W: int, bound: int) -> Series:
    """The 21-1 avoider generating function from its fixed-point form.

    R(v) = t / (v(1-2t) - (1-t)^2 (v t^2 - (1-v)(1-2t))
                / ((1-t)(1-2t) - v t^3 R(v t/(1-t)))),
    evaluated at v = 1.  Each level multiplies the recursion argument
    by t/(1-t), so levels past the working order cannot matter; the
    recursion is cut there with a zero stand-in.
    """
    shrink = poly([1, -1], W)
    gap = poly([1, -2], W)
    shift = divide(t(W), shrink)

    def level(v: Series, depth: int) -> Series:
        if depth > bound or v.is_zero():
            return zero(W)
        inner = level(v * shift, depth + 1)
        correction = divide(
            shrink ** 2 * (v * t(W) ** 2 - (one(W) - v) * gap),
            shrink * gap - v * t(W) ** 3 * inner,
        )
        return divide(t(W), v * gap - correction)

    return level(one(W), 0)


def _last_equals_max_sum(W: int, bound: int) -> Series:
    """Generating function for 2-21 avoiders whose last letter equals
    their largest letter, from iterating the refined functional
    equation: t(1-2t) sum_i (-1)^i t^(i(i+7)/2) / prod_{j<=i} d_j with
    d_j = (1-2t)(1-t)^(j+1) - (1-t)^2 t^(j+1)."""
    shrink = poly([1, -1], W)
    gap = poly([1, -2], W)
    total = zero(W)
    prod = one(W)
    for i in range(bound + 1):
        d = gap * shrink ** (i + 1) - shrink ** 2 * t(W) ** (i + 1)
        prod = divide(prod, d)
        term = t(W) ** (1 + i * (i + 7) // 2) * gap * prod
        total = total + (-term if i % 2 else term)
    return total


def iterate_kernel(recipe: GfRecipe) -> Series:
    """Evaluate a kernel-style recipe to its series, truncated to the
    recipe's order.  Coefficient of t^n is the class count at size n
    (constant term 0; series_for adds the empty word)."""
    W = recipe.order + _SLACK
    if recipe.pattern in ("21-2", "21-3"):
        out = _kernel_avoider_sum(recipe.pattern, W, recipe.bound)
    elif recipe.pattern == "11-2":
        T = _motzkin_head(W)
        v1 = divide(t(W) * T, poly([1, 1], W))
        tail = _iterated_suffix_sum(v1, W)
        head = poly([1, 1], W) * t(W) * _motzkin_gf(W)
        out = head + divide(t(W) ** 2 * T, poly([1, 1], W)) * tail
    elif recipe.pattern == "21-1":
        out = _max_letter_fixed_point(W, recipe.bound)
    elif recipe.pattern == "2-21-last-equals-max":
        out = _last_equals_max_sum(W, recipe.bound)
    else:
        raise ValueError("no kernel recipe for %r" % recipe.pattern)
    if out.order < recipe.order:
        raise AssertionError("working slack exhausted for %s" % recipe.pattern)
    return out.truncate(recipe.order)


# ---------------------------------------------------------------------------
# per-pattern series


def _series_1_11(order: int) -> Series:
    W = order + _SLACK
    total = one(W)
    for m in range(1, W + 1):
        # raw half-exponents: t carries (2m+1) - 1 halves, 1+t carries
        # 2(m+1) - 1 - (2m+1) halves once the Chebyshev factors are rescaled
        te, ue = _collapse_exponents(2 * m, 2 * (m + 1) - 1 - (2 * m + 1))
        term = divide(
            t(W) ** te * poly([1, 1], W) ** ue,
            cheb_v(m, W) * cheb_v(m + 1, W),
        )
        total = total + term
    return total


def _series_2_11(order: int) -> Series:
    W = order + _SLACK
    total = one(W)
    for m in range(1, W + 1):
        te, ue = _collapse_exponents((3 * m + 3) - (m + 1) - 2, (m + 1) - (3 * m + 3))
        direct = divide(
            t(W) ** te,
            poly([1, 1], W) ** (-ue)
            * cheb_v(m, W)
            * cheb_v(m + 1, W)
            * cheb_v(m + 2, W),
        )
        sectioned = _avoid_2_11_by_max(m, W)
        if direct != sectioned:
            raise AssertionError(
                "2-11 closed form and section product disagree at max letter %d" % m
            )
        total = total + direct
    return total


def _series_2_21(order: int) -> Series:
    W = order + _SLACK
    shrink = poly([1, -1], W)
    gap = poly([1, -2], W)
    total = one(W) + divide(t(W), gap)
    i = 1
    while i * (i + 5) // 2 <= W:
        inner = zero(W)
        prod = one(W)
        for j in range(1, i + 1):
            d = gap * shrink ** j - shrink ** 2 * t(W) ** j
            inner = inner + divide(shrink ** j, d)
            prod = prod * d
        term = divide(t(W) ** (i * (i + 5) // 2) * gap * inner, prod)
        total = total + (term if i % 2 else -term)
        i += 1
    return total


def _series_3_21(order: int) -> Series:
    W = order + _SLACK
    shrink = poly([1, -1], W)
    gap = poly([1, -2], W)
    steep = poly([1, -3, 1], W)
    total = one(W) + divide(t(W), gap)
    i = 1
    while 2 * i + 1 <= W:
        inner = zero(W)
        prod = one(W)
        for j in range(1, i + 1):
            d = steep * shrink ** (j - 1) - gap * t(W) ** j
            inner = inner + divide(t(W) ** j, d)
            prod = prod * d
        term = divide(
            t(W) ** (2 * i) * shrink ** _binom2(i) * gap * inner, prod
        )
        total = total + (term if i % 2 else -term)
        i += 1
    return total


def _series_21_2(order: int) -> Series:
    W = order + _SLACK
    shrink = poly([1, -1], W)
    gap = poly([1, -2], W)
    num = t(W)
    den = gap
    aprod = one(W)
    bprod = one(W)
    j = 1
    while 2 * j + 1 <= W:
        aprod = aprod * (gap * shrink ** j - shrink * t(W) ** j)
        bprod = bprod * (
            gap * shrink ** (2 * j) - t(W) ** j * shrink ** (j + 1) + t(W) ** (2 * j + 1)
        )
        single = gap * shrink ** (j - 1) - t(W) ** j
        num = num + divide(
            t(W) ** (2 * j + 1) * shrink ** (_binom2(j - 1) - 1) * aprod, bprod
        )
        den = den - divide(
            t(W) ** (2 * j + 1) * gap * shrink ** (_binom2(j) - 1) * aprod,
            single * bprod,
        )
        j += 1
    ratio_route = divide(num, den)
    kernel_route = iterate_kernel(kernel_recipe("21-2", order))
    if ratio_route != kernel_route:
        raise AssertionError("21-2 ratio formula and kernel solve disagree")
    return one(W) + ratio_route


def _series_21_3(order: int) -> Series:
    return one(order) + iterate_kernel(kernel_recipe("21-3", order))


def _series_31_2(order: int) -> Series:
    W = order + _SLACK
    total = one(W) + divide(t(W), poly([1, -1], W))
    num_prod = one(W)
    den_prod = cheb_ab(1, W)[1]
    for i in range(1, W):
        num_prod = num_prod * cheb_ab(i, W)[0]
        den_prod = den_prod * cheb_ab(i + 1, W)[1]
        total = total + divide(t(W) ** (i + 1) * num_prod, den_prod)
    return total


def _series_11_2(order: int) -> Series:
    return one(order) + iterate_kernel(kernel_recipe("11-2", order))


def _series_21_1(order: int) -> Series:
    return one(order) + iterate_kernel(kernel_recipe("21-1", order))


_EVALUATORS = {
    "1-11": _series_1_11,
    "2-11": _series_2_11,
    "2-21": _series_2_21,
    "3-21": _series_3_21,
    "21-2": _series_21_2,
    "21-3": _series_21_3,
    "31-2": _series_31_2,
    "11-2": _series_11_2,
    "21-1": _series_21_1,
}


def series_for(pattern, order: int = DEFAULT_ORDER) -> Series:
    """Avoider generating function for one of the nine hard patterns.

    Raises ValueError for other patterns (their counts come from closed
    forms instead) and for any non-integer coefficient, which would
    mean the evaluation itself is broken.
    """
    key = _pattern_key(pattern)
    if key not in _EVALUATORS:
        raise ValueError(
            "no generating-function evaluator for %s; supported: %s"
            % (key, ", ".join(GENFUN_PATTERNS))
        )
    if order < 1:
        raise ValueError("order must be >= 1")
    out = _EVALUATORS[key](order)
    if out.order < order:
        raise AssertionError("working slack exhausted for %s" % key)
    out = out.truncate(order)
    out.integer_coefficients()
    return out
