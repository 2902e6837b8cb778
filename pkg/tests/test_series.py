from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from tiltgrowth.series import (MonicIntPoly, NotInImageError, OrderMismatchError, SymLaurent, WSeries, ZSeries,
                               chebyshev_P, compose_inverse_powers, rational_w_series, roots_of_unity_average,
                               w_to_z, z_to_w)
from tiltgrowth.sequences import b_fast_p2, b_sequence, mahler_r

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=20)


def _laurent_eval(poly, w):
    # P(w + 1/w) by exact rational arithmetic
    return sum(c * (w + 1 / w) ** k for k, c in enumerate(poly.coeffs))


@pytest.mark.parametrize("p,coeffs", [(2, [-2, 0, 1]), (3, [0, -3, 0, 1]), (5, [0, 5, 0, -5, 0, 1])])
def test_chebyshev_known(p, coeffs):
    assert list(chebyshev_P(p).coeffs) == coeffs


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11])
def test_chebyshev_defining_identity(p):
    for w in (Fraction(2), Fraction(3, 7), Fraction(-5, 2)):
        assert _laurent_eval(chebyshev_P(p), w) == w**p + w**-p


def test_chebyshev_rejects_small():
    with pytest.raises(ValueError):
        chebyshev_P(1)


def test_w_to_z_examples():
    assert w_to_z(WSeries([0, 1, 0, -1, 0, 1, 0, -1])).coeffs[:3] == (1, 0, 0)
    assert w_to_z(WSeries([0, 0, 1, 0, -2, 0, 3])).coeffs[:3] == (0, 1, 0)
    # w(1-w)/((1-w)(1+w^2)) = w/(1+w^2) = 1/z
    g = rational_w_series([0, 1, -1], [1, -1, 1, -1], 9)
    assert w_to_z(g) == ZSeries([1] + [0] * 8)


def test_w_to_z_rejects_constant():
    with pytest.raises(NotInImageError):
        w_to_z(WSeries([1, 1, 0]))


def test_z_to_w_order_mismatch():
    with pytest.raises(OrderMismatchError):
        z_to_w(ZSeries([1, 2, 3]), 10)


def test_z_to_w_inverse_z():
    assert list(z_to_w(ZSeries([1, 0, 0, 0, 0, 0, 0]), 7).coeffs) == [0, 1, 0, -1, 0, 1, 0, -1]


def test_char_zero_closed_form():
    # (sqrt((z+2)/(z-2)) - 1)/2 with z = w + 1/w is ((1+w)/(1-w) - 1)/2 = w/(1-w)
    from math import comb
    M = 10
    H = ZSeries([comb(n, n // 2) for n in range(M + 1)])
    g = z_to_w(H, M + 1)
    assert list(g.coeffs) == [0] + [1] * (M + 1)


@settings(max_examples=40, deadline=None)
@given(st.lists(rationals, min_size=1, max_size=12))
def test_round_trip(cs):
    c = ZSeries(cs)
    assert w_to_z(z_to_w(c, c.order + 1)) == c


@settings(max_examples=30, deadline=None)
@given(st.lists(rationals, min_size=3, max_size=10), st.lists(rationals, min_size=3, max_size=10), rationals)
def test_linearity(a, b, k):
    n = min(len(a), len(b))
    A, B = ZSeries(a[:n]), ZSeries(b[:n])
    P = chebyshev_P(2)
    assert compose_inverse_powers(A + B, P) == compose_inverse_powers(A, P) + compose_inverse_powers(B, P)
    assert compose_inverse_powers(A.scale(k), P) == compose_inverse_powers(A, P).scale(k)
    ga, gb = z_to_w(A, n), z_to_w(B, n)
    assert w_to_z(ga + gb) == w_to_z(ga) + w_to_z(gb)


def test_compose_examples():
    out = compose_inverse_powers(ZSeries([1, 0, 0, 0, 0, 0, 0]), chebyshev_P(2))
    assert list(out.coeffs) == [0, 1, 0, 2, 0, 4, 0]
    assert compose_inverse_powers(ZSeries.zero(8), chebyshev_P(3)) == ZSeries.zero(8)


def test_compose_first_nonzero():
    for p in (2, 3, 5):
        out = compose_inverse_powers(ZSeries([1] + [0] * 12), chebyshev_P(p))
        assert all(v == 0 for v in out.coeffs[: p - 1]) and out[p - 1] == 1


def test_p2_functional_equation():
    M = 30
    H = ZSeries(b_fast_p2(M).values)
    r = mahler_r(2, M)
    G = compose_inverse_powers(H, chebyshev_P(2))
    assert H - r - G - r * G == ZSeries.zero(M)


def test_averaging():
    assert list(roots_of_unity_average(WSeries([1, 1, 1, 1]), 2).coeffs) == [1, 0, 1, 0]


@pytest.mark.parametrize("p", [2, 3, 5])
def test_averaging_matches_substitution(p):
    M = 40
    F = z_to_w(ZSeries(b_sequence(p, M).values), M + 1)
    assert roots_of_unity_average(F, p) == F.substitute_power(p).truncate(M + 1)


@pytest.mark.parametrize("p,k", [(3, 1), (5, 2), (2, 1)])
def test_averaging_second_identity(p, k):
    # F(w^p) + 1 = A((w^k + w^-k) F(w)) for 1 <= k < p on the truncated range
    M = 30
    F = z_to_w(ZSeries(b_sequence(p, M + 2).values), M + 3)
    shifted = [0] * (M + 4)
    for m, a in enumerate(F.coeffs):
        if m + k <= M + 3:
            shifted[m + k] += a
        if m - k >= 0:
            shifted[m - k] += a
    prod = WSeries(shifted[: M + 1 - k])
    lhs = F.substitute_power(p).truncate(M - k)
    lhs = WSeries([lhs[0] + 1] + list(lhs.coeffs[1:]))
    assert roots_of_unity_average(prod, p).truncate(M - k) == lhs


@settings(max_examples=40, deadline=None)
@given(st.lists(rationals, min_size=2, max_size=15), st.sampled_from([2, 3, 5]))
def test_averaging_idempotent(cs, p):
    g = WSeries(cs)
    a = roots_of_unity_average(g, p)
    assert roots_of_unity_average(a, p) == a


def test_symlaurent_structure():
    x = SymLaurent({1: 1})
    assert (x * x).as_dict() == {2: 1, 0: 2}
    assert SymLaurent({2: 1, 0: 2}).at_one() == 4
    with pytest.raises(ValueError):
        SymLaurent.from_full({1: 1, -1: 2})
    with pytest.raises((TypeError, ValueError)):
        SymLaurent({1: Fraction(1, 2)})


def test_monic_poly_rejects_nonmonic():
    with pytest.raises(ValueError):
        MonicIntPoly([1, 2])
