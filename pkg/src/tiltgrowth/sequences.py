"""Exact b_n and l_n sequences and their derived monotonicity sequences.

b_n counts indecomposable summands of V^{(x)n} for the natural SL2 module V
in characteristic p, l_n counts composition factors.  ``p`` is a prime or
``math.inf`` (characteristic zero, where both are middle binomials).
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .series import WSeries, ZSeries, chebyshev_P, compose_inverse_powers, rational_w_series, w_to_z

INF = math.inf

KINDS = ("b", "l", "c", "dimL", "cantor")
NONNEGATIVE_KINDS = ("b", "l", "dimL", "cantor")

DEFAULT_FAST_P2_MAX = 4000
DEFAULT_MAHLER_MAX = 600


class InternalConsistencyError(ArithmeticError):
    """A pipeline produced a value that cannot be right (a bug, not bad input)."""


class PropertyViolation(AssertionError):
    """A proven inequality failed on computed data."""

    def __init__(self, message, n=None, values=None):
        super().__init__(message)
        self.n = n
        self.values = values


@dataclass(frozen=True)
class BigSequence:
    p: object
    values: tuple
    kind: str

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown sequence kind {self.kind!r}")
        object.__setattr__(self, "values", tuple(self.values))
        if self.kind in NONNEGATIVE_KINDS:
            for n, v in enumerate(self.values):
                if v < 0:
                    raise InternalConsistencyError(f"{self.kind}_{n} = {v} is negative")

    def __len__(self):
        return len(self.values)

    def __getitem__(self, n):
        return self.values[n]

    def __iter__(self):
        return iter(self.values)


@dataclass(frozen=True)
class RationalSequence:
    values: tuple
    kind: str

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))

    def __len__(self):
        return len(self.values)

    def __getitem__(self, n):
        return self.values[n]

    def __iter__(self):
        return iter(self.values)


def is_prime(p):
    if isinstance(p, bool) or not isinstance(p, int) or p < 2:
        return False
    return all(p % d for d in range(2, math.isqrt(p) + 1))


def _require_prime(p):
    if not is_prime(p):
        raise ValueError(f"p must be a prime, got {p!r}")


def _require_nmax(n_max):
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")


def b_char_zero(n_max):
    _require_nmax(n_max)
    return BigSequence(INF, [math.comb(n, n // 2) for n in range(n_max + 1)], "b")


@lru_cache(maxsize=8)
def _b_fast_p2(n_max):
    half = (n_max + 1) // 2
    b = [1]
    # b_{2n-1} = b_{2n} = sum_k C(n-1, k) 2^(n-1-k) b_k; b_k needed only for k < n
    for n in range(1, half + 1):
        row = 1  # C(n-1, k)
        acc = 0
        for k in range(n):
            acc += (row * b[k]) << (n - 1 - k)
            row = row * (n - 1 - k) // (k + 1)
        b.append(acc)
        b.append(acc)
    return tuple(b[: n_max + 1])


def b_fast_p2(n_max):
    _require_nmax(n_max)
    return BigSequence(2, _b_fast_p2(n_max), "b")


def mahler_r(p, order):
    """The coefficient r_p(z) of the functional equation as a ZSeries.

    In w it is w(1 - w^(p-1)) / ((1 - w)(1 + w^p)) = (w + ... + w^(p-1)) / (1 + w^p).
    """
    numer = [0] + [1] * (p - 1)
    denom = [1] + [0] * (p - 1) + [1]
    return w_to_z(rational_w_series(numer, denom, order + 1))


@lru_cache(maxsize=16)
def _b_mahler(p, n_max):
    r = mahler_r(p, n_max)
    P = chebyshev_P(p)
    known = []
    # b_0 .. b_{p-2} come from r alone; each stage extends the valid prefix
    # from K to p(K+1) - 1 terms because the z^(-n-1) coefficient of H(P(z))
    # only involves b_m with p(m+1) <= n+1.
    while len(known) < n_max + 1:
        K = len(known)
        order = min(n_max, p * (K + 1) - 2)
        rs = r.truncate(order)
        if K:
            G = compose_inverse_powers(ZSeries(known), P, order=order)
            H = rs + G + rs * G
        else:
            H = rs
        for n in range(K, order + 1):
            v = H[n]
            if not isinstance(v, int):
                raise InternalConsistencyError(f"b_{n} = {v} is not an integer (p={p})")
            if v < 0:
                raise InternalConsistencyError(f"b_{n} = {v} is negative (p={p})")
        known = list(H.coeffs)
    return tuple(known[: n_max + 1])


def b_mahler(p, n_max):
    """b_n from the functional equation H = r + (1 + r) H(P_p(z)), solved exactly."""
    _require_prime(p)
    _require_nmax(n_max)
    return BigSequence(p, _b_mahler(p, n_max), "b")


def b_sequence(p, n_max):
    """b_n by the cheapest exact route for this p."""
    if p == INF:
        return b_char_zero(n_max)
    if p == 2:
        return b_fast_p2(n_max)
    return b_mahler(p, n_max)


def length_h_series(p, order):
    """h(w) = prod_j (1 + w^(p^j) + ... + w^((2p-2)p^j)) up to w^order."""
    h = [0] * (order + 1)
    h[0] = 1
    step = 1
    while step <= order:
        # multiply in place by 1 + w^step + ... + w^((2p-2) step)
        new = list(h)
        for m in range(order + 1):
            if h[m]:
                for j in range(1, 2 * p - 1):
                    t = m + j * step
                    if t > order:
                        break
                    new[t] += h[m]
        h = new
        step *= p
    return WSeries(h)


@lru_cache(maxsize=16)
def _l_product(p, n_max):
    wh = length_h_series(p, n_max + 1).shift(1)
    z = w_to_z(wh)
    vals = z.coeffs[: n_max + 1]
    for n, v in enumerate(vals):
        if not isinstance(v, int):
            raise InternalConsistencyError(f"l_{n} = {v} is not an integer (p={p})")
    return tuple(vals)


def l_product(p, n_max):
    """l_n from w h(w) = L(z) with h the length product."""
    _require_prime(p)
    _require_nmax(n_max)
    return BigSequence(p, _l_product(p, n_max), "l")


def l_sequence(p, n_max):
    if p == INF:
        return BigSequence(INF, b_char_zero(n_max).values, "l")
    return l_product(p, n_max)


def psi_coeffs(p, n_max, b=None):
    """Coefficients c_n of -(1 - z^-2) sum (b_n / 2^n) z^(-n-1).

    c_n = b_{n-2} / 2^(n-2) - b_n / 2^n with b_{-1} = b_{-2} = 0.
    """
    _require_nmax(n_max)
    if b is None:
        b = b_sequence(p, n_max).values
    out = []
    for n in range(n_max + 1):
        prev = Fraction(b[n - 2], 2 ** (n - 2)) if n >= 2 else 0
        out.append(prev - Fraction(b[n], 2**n))
    return RationalSequence(out, "psi")


def second_difference_c(n_max, b=None, check=True):
    """c_n = b_{n+4} - 8 b_{n+2} + 16 b_n in characteristic 2, which is never negative."""
    _require_nmax(n_max)
    if b is None:
        b = b_fast_p2(n_max + 4).values
    out = []
    for n in range(n_max + 1):
        c = b[n + 4] - 8 * b[n + 2] + 16 * b[n]
        if check and c < 0:
            raise PropertyViolation(f"b_{n+4} - 8 b_{n+2} + 16 b_{n} = {c} < 0", n, (b[n], b[n + 2], b[n + 4]))
        out.append(c)
    return BigSequence(2, out, "c")


def gap_d(p, n_max, b=None, check=True):
    """d_n = 1 - b_{n+2} / (4 b_n) as exact fractions in [0, 1)."""
    _require_nmax(n_max)
    if b is None:
        b = b_sequence(p, n_max + 2).values
    out = []
    for n in range(n_max + 1):
        d = 1 - Fraction(b[n + 2], 4 * b[n])
        if check and d < 0:
            raise PropertyViolation(f"d_{n} = {d} < 0", n, (b[n], b[n + 2]))
        out.append(d)
    return RationalSequence(out, "d")
