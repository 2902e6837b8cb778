"""Explicit generating function F(w), its Mahler equation, exponents and oscillation.

F(w) = H(w + 1/w) = sum b_n (w + 1/w)^(-n-1).  Near w = 1 it behaves like
(1 - w)^(-e) times a p-multiplicatively periodic factor, e = log_p((p+1)/2).
"""

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .precision import mpf, workdps
from .sequences import INF, PropertyViolation, b_fast_p2, b_sequence, gap_d

DEFAULT_REL_TOL = mpmath.mpf("1e-20")
MAX_TERMS = 10_000


def _check_w(w):
    w = mpf(w) if not isinstance(w, mpmath.mpf) else w
    if not 0 < w < 1:
        raise ValueError(f"w must lie in (0, 1), got {w}")
    return w


def _check_p(p):
    if isinstance(p, bool) or not isinstance(p, int) or p < 2:
        raise ValueError(f"p must be a prime >= 2, got {p!r}")


def t_p(p, dps=None):
    """-1/2 log_p(2p^2/(p+1)); p = inf gives the limit -1/2."""
    with workdps(dps):
        if p == INF:
            return -mpmath.mpf(1) / 2
        _check_p(p)
        return -mpmath.log(mpmath.mpf(2 * p * p) / (p + 1), p) / 2


def beta(p, dps=None):
    """beta = t_p + 1 = 1/2 log_p((p+1)/2)."""
    with workdps(dps):
        if p == INF:
            return mpmath.mpf(1) / 2
        _check_p(p)
        return mpmath.log(mpmath.mpf(p + 1) / 2, p) / 2


def growth_exponent(p, dps=None):
    """e = log_p((p+1)/2), so that F(w) ~ F_0(w) (1 - w)^(-e)."""
    with workdps(dps):
        _check_p(p)
        return mpmath.log(mpmath.mpf(p + 1) / 2, p)


# x = exp(-s) throughout; expm1 keeps 1 - x^a accurate when s is tiny


def _one_minus(a, s):
    return -mpmath.expm1(-a * s)


def _r_term(p, s):
    """x (1 - x^(p-1)) / ((1 - x)(1 + x^p)) at x = exp(-s)."""
    return mpmath.exp(-s) * _one_minus(p - 1, s) / (_one_minus(1, s) * (1 + mpmath.exp(-p * s)))


def _g_factor(p, s):
    """(1 - x^(p+1)) / ((1 - x)(1 + x^p)) at x = exp(-s)."""
    return _one_minus(p + 1, s) / (_one_minus(1, s) * (1 + mpmath.exp(-p * s)))


def mahler_r(p, w, dps=None):
    with workdps(dps):
        w = _check_w(w)
        return w * (1 - w ** (p - 1)) / ((1 - w) * (1 + w**p))


def mahler_eigenvalue(p, w, dps=None):
    """lambda(w) = (w^(p+1) - 1) / ((w - 1)(1 + w^p))."""
    _check_p(p)
    with workdps(dps):
        w = _check_w(w)
        return (w ** (p + 1) - 1) / ((w - 1) * (1 + w**p))


def mahler_eigenvalue_limit(p):
    """lim_{w -> 1} lambda(w) = (p + 1)/2, exactly."""
    _check_p(p)
    return Fraction(p + 1, 2)


def eval_F(p, w, K=None, rel_tol=DEFAULT_REL_TOL, dps=None):
    """F(w) from the explicit sum over k of r(w^(p^k)) prod_{j<k} g(w^(p^j)).

    With K given, terms k = 0..K are summed; otherwise summation stops once a
    term falls below rel_tol times the running sum.  Returns (value, tail)
    where tail bounds the omitted terms by twice the first one left out.
    """
    _check_p(p)
    if K is not None and K < 0:
        raise ValueError("K must be >= 0")
    with workdps(dps):
        w = _check_w(w)
        v = -mpmath.log(w)
        total = mpmath.mpf(0)
        prod = mpmath.mpf(1)
        s = v
        k = 0
        while True:
            term = _r_term(p, s) * prod
            if K is not None and k > K:
                return total, 2 * abs(term)
            total += term
            prod *= _g_factor(p, s)
            s *= p
            k += 1
            if K is None and abs(term) < rel_tol * abs(total):
                nxt = _r_term(p, s) * prod
                return total, 2 * abs(nxt)
            if k > MAX_TERMS:
                raise ArithmeticError("explicit sum failed to converge")


def rescaled_F(p, w, dps=None):
    """F(w) ln(1/w)^e with e = log_p((p+1)/2)."""
    with workdps(dps):
        w = _check_w(w)
        val, _ = eval_F(p, w)
        return mpmath.power(-mpmath.log(w), growth_exponent(p)) * val


def functional_eq_residual(p, w, K=None, dps=None):
    """|F(w) - r - (1 + r) F(w^p)| with both sides from eval_F."""
    with workdps(dps):
        w = _check_w(w)
        r = mahler_r(p, w)
        lhs, _ = eval_F(p, w, K)
        rhs, _ = eval_F(p, w**p, K)
        return abs(lhs - r - (1 + r) * rhs)


def _pi_factor(p, s):
    return 2 * _g_factor(p, s) / (p + 1)


def eval_Pi(p, w, J=None, dps=None):
    """Pi(w) = prod_{j>=1} (2/(p+1)) g(w^(p^-j)); returns (value, tail).

    Factors approach 1 as j grows with deviation shrinking roughly by p^2 per
    step; tail is |log of the last factor| * p^2 / (p^2 - 1) as an estimate of
    the neglected log-product.  Without J the product stops at working precision.
    """
    _check_p(p)
    with workdps(dps):
        w = _check_w(w)
        return _pi_at(p, -mpmath.log(w), J)


def _pi_at(p, v, J=None):
    eps = mpmath.eps
    acc = mpmath.mpf(1)
    s = v
    j = 0
    dev = mpmath.mpf(0)
    while True:
        j += 1
        s /= p
        f = _pi_factor(p, s)
        acc *= f
        dev = abs(f - 1)
        if J is not None and j >= J:
            break
        if J is None and dev < eps:
            break
        if j > MAX_TERMS:
            raise ArithmeticError("Pi product failed to converge")
    return acc, dev * p * p / (p * p - 1)


def default_F0_range(p, v, digits=30):
    """Bilateral truncation [k_lo, k_hi] for F_0 at ln(1/w) = v.

    Negative k terms decay like ((p+1)/2)^k, positive ones like exp(-v p^k).
    """
    k_lo = -math.ceil(digits * math.log(10) / math.log((p + 1) / 2))
    k_hi = max(1, math.ceil(math.log(digits * math.log(10) / float(v), p)) + 2)
    return k_lo, k_hi


def eval_F0(p, w, k_lo=None, k_hi=None, J=None, dps=None):
    """Oscillating factor F_0(w) from its bilateral sum.

    Pi is computed directly at the lowest k and carried upward by
    Pi(x^p) = (2/(p+1)) g(x) Pi(x).
    """
    _check_p(p)
    with workdps(dps):
        w = _check_w(w)
        v = -mpmath.log(w)
        lo, hi = default_F0_range(p, v)
        k_lo = lo if k_lo is None else k_lo
        k_hi = hi if k_hi is None else k_hi
        if not k_lo < 0 < k_hi:
            raise ValueError("need k_lo < 0 < k_hi")
        lam = mpmath.mpf(p + 1) / 2
        s = v * mpmath.power(p, k_lo)
        pi, _ = _pi_at(p, s, J)
        weight = mpmath.power(lam, k_lo)
        total = mpmath.mpf(0)
        for _ in range(k_lo, k_hi + 1):
            total += _r_term(p, s) * pi * weight
            pi *= _pi_factor(p, s)
            s *= p
            weight *= lam
        return mpmath.power(v, growth_exponent(p)) * total


@dataclass(frozen=True)
class RatioProfile:
    p: object
    parity: str
    rows: tuple  # (n, r_n)
    window: tuple
    summary: tuple  # (min, argmin, max, argmax) over the window

    def window_extrema(self, lo, hi):
        return _extrema([(n, r) for n, r in self.rows if lo <= n <= hi])


PARITIES = ("even", "odd", "all")


def _extrema(rows):
    if not rows:
        raise ValueError("empty window")
    nmin, rmin = min(rows, key=lambda t: t[1])
    nmax, rmax = max(rows, key=lambda t: t[1])
    return rmin, nmin, rmax, nmax


def ratio_profile(p, n_max, parity="all", window=None, b=None, dps=None):
    """r_n = b_n / (n^t_p 2^n) for n >= 1 of the chosen parity."""
    if parity not in PARITIES:
        raise ValueError(f"parity must be one of {PARITIES}")
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    lo, hi = window if window is not None else (min(16, n_max), n_max)
    if not 1 <= lo <= hi <= n_max:
        raise ValueError(f"window {(lo, hi)} outside [1, {n_max}]")
    if b is None:
        b = b_sequence(p, n_max).values
    with workdps(dps):
        t = t_p(p)
        rows = []
        for n in range(1, n_max + 1):
            if (parity == "even" and n % 2) or (parity == "odd" and n % 2 == 0):
                continue
            r = mpf(Fraction(b[n], 2**n)) / mpmath.power(n, t)
            if not r > 0:
                raise PropertyViolation(f"ratio at n={n} is not positive", n, (b[n],))
            rows.append((n, r))
        summary = _extrema([(n, r) for n, r in rows if lo <= n <= hi])
        return RatioProfile(p, parity, tuple(rows), (lo, hi), summary)


def quadruple_ratio(n_max, b=None, dps=None):
    """a'_(4n) / a'_n for n = 1..n_max with a'_n = b_(2n) / 4^n (p = 2)."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if b is None:
        b = b_fast_p2(8 * n_max).values
    with workdps(dps):
        out = []
        for n in range(1, n_max + 1):
            q = Fraction(b[8 * n] * 4**n, b[2 * n] * 4 ** (4 * n))
            out.append((n, mpf(q)))
        return out


@dataclass(frozen=True)
class GapReport:
    n_max: int
    exponent: object  # -t_2 - 1
    sup: object
    argsup: int
    window: tuple
    all_nonnegative: bool


def gap_decay_check(n_max, window=None, b=None, dps=None):
    """d_n >= 0 exactly and the sup of d_n n^(t_2 + 1) over the window.

    d_n is O(n^(-t_2 - 1)), so d_n n^(t_2 + 1) stays bounded; t_2 + 1 > 0.
    """
    d = gap_d(2, n_max, b=b).values  # raises PropertyViolation on d_n < 0
    lo, hi = window if window is not None else (min(16, n_max), n_max)
    with workdps(dps):
        ex = t_p(2) + 1
        best, arg = None, None
        for n in range(max(lo, 1), hi + 1):
            val = mpf(d[n]) * mpmath.power(n, ex)
            if best is None or val > best:
                best, arg = val, n
        return GapReport(n_max, -ex, best, arg, (lo, hi), True)
