import random
from fractions import Fraction

import pytest

from vincat.series import (
    DEFAULT_ORDER,
    Series,
    cheb_ab,
    cheb_v,
    compose,
    divide,
    one,
    poly,
    sqrt,
    t,
    zero,
)


def test_construction_and_coefficients():
    f = poly([1, 2, 3], order=5)
    assert f.order == 5
    assert f.coefficient(2) == 3
    assert f.coefficient(5) == 0
    with pytest.raises(IndexError):
        f.coefficient(6)
    with pytest.raises(ValueError):
        poly([1] * 8, order=3)
    with pytest.raises(ValueError):
        Series([])
    assert zero(4).is_zero()
    assert one(4).coefficient(0) == 1
    assert t(4).valuation() == 1
    assert zero(4).valuation() is None


def test_equality_through_shared_order():
    assert poly([1, 2], order=10) == poly([1, 2], order=4)
    assert poly([1, 2], order=10) != poly([1, 3], order=4)


def test_arithmetic():
    f = poly([1, 1], order=6)  # 1 + t
    g = poly([1, -1], order=6)  # 1 - t
    assert f * g == poly([1, 0, -1], order=6)
    assert f + 1 == poly([2, 1], order=6)
    assert 1 - f == poly([0, -1], order=6)
    assert (f - f).is_zero()
    assert 2 * f == poly([2, 2], order=6)
    # truncation order of a product is the smaller operand order
    assert (poly([1], order=9) * poly([1], order=3)).order == 3


def test_division_tracks_valuation():
    num = poly([0, 0, 1], order=10)  # t^2
    den = poly([0, 1], order=10)  # t
    q = num / den
    assert q == poly([0, 1], order=9)
    assert q.order == 9
    with pytest.raises(ZeroDivisionError):
        poly([1], order=5) / zero(5)
    with pytest.raises(ZeroDivisionError):
        poly([1], order=5) / poly([0, 1], order=5)
    geom = one(8) / poly([1, -1], order=8)
    assert all(geom.coefficient(k) == 1 for k in range(9))


def test_pow_including_negative():
    f = poly([1, 1], order=8)
    assert f**3 == poly([1, 3, 3, 1], order=8)
    assert f**0 == one(8)
    inv = f**-1
    assert (inv * f) == one(8)
    assert f**-2 == inv * inv


def test_sqrt_round_trip():
    f = poly([1, 2, 7, -1], order=12)
    r = sqrt(f)
    assert r * r == f
    with pytest.raises(ValueError):
        sqrt(poly([4], order=4))


def test_compose():
    f = poly([1, 1, 1], order=6)
    g = poly([0, 1, 1], order=6)
    h = compose(f, g)
    # 1 + (t + t^2) + (t + t^2)^2
    assert h == poly([1, 1, 2, 2, 1], order=6)
    with pytest.raises(ValueError):
        compose(f, poly([1, 1], order=6))


def test_integer_coefficients():
    f = poly([1, 2, 3], order=4)
    assert f.integer_coefficients() == [1, 2, 3, 0, 0]
    g = Series([1, Fraction(1, 2)])
    with pytest.raises(ValueError) as err:
        g.integer_coefficients()
    assert "t^1" in str(err.value)


def test_truncate():
    f = poly([1, 2, 3], order=8)
    assert f.truncate(2).order == 2
    with pytest.raises(ValueError):
        f.truncate(9)


def test_motzkin_from_square_root():
    disc = sqrt(poly([1, -2, -3], order=16))
    m = divide(1 - t(16) - disc, 2 * t(16) ** 2)
    assert m.order == 14
    assert m.integer_coefficients()[:8] == [1, 1, 2, 4, 9, 21, 51, 127]


def test_chebyshev_values():
    v2 = cheb_v(2, order=8)
    assert v2 * poly([1, 1], order=8) == one(8)
    v3 = cheb_v(3, order=8)
    assert v3 * poly([1, 1], order=8) == poly([1, -1], order=8)
    v4 = cheb_v(4, order=8)
    assert v4 * poly([1, 2, 1], order=8) == poly([1, -1, -1], order=8)
    alpha2, beta2 = cheb_ab(2, order=8)
    assert alpha2 == poly([1, -1, -1], order=8)
    assert beta2 == poly([1, -2], order=8)


def test_chebyshev_recurrence_holds():
    ratio = divide(t(12), poly([1, 1], order=12))
    for n in range(2, 7):
        lhs = cheb_v(n, order=12)
        assert lhs == cheb_v(n - 1, order=12) - ratio * cheb_v(n - 2, order=12)


def test_random_round_trips():
    rng = random.Random(991)
    for _ in range(30):
        coeffs = [1] + [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(12)]
        f = Series(coeffs)
        r = sqrt(f)
        assert r * r == f
        g = Series([Fraction(rng.randint(1, 9))] + [rng.randint(-5, 5) for _ in range(12)])
        assert divide(f * g, g) == f


def test_default_order():
    assert DEFAULT_ORDER == 24
    assert one().order == DEFAULT_ORDER
