"""Cantor sequences, Cesaro staircases, simple-module dimensions and p-adic weights."""

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .characters import base_p_digits
from .precision import workdps
from .sequences import BigSequence, PropertyViolation
from .series import WSeries


def _check_base(p, least=2):
    if isinstance(p, bool) or not isinstance(p, int) or p < least:
        raise ValueError(f"p must be an integer >= {least}, got {p!r}")


def cantor_indicator(n, p):
    return 0 if 1 in base_p_digits(n, p) else 1


def cantor_seq(p, n_max):
    """ca_n = 1 iff the base-p expansion of n has no digit 1."""
    _check_base(p)
    return BigSequence(p, [cantor_indicator(n, p) for n in range(n_max + 1)], "cantor")


def cantor_tau(p, dps=None):
    """log_p(p - 1), the growth exponent of the Cantor partial sums."""
    _check_base(p)
    if p == 2:
        raise ValueError("the base-2 Cantor sequence is degenerate (only n = 0 avoids the digit 1)")
    with workdps(dps):
        return +mpmath.log(p - 1, p)


@dataclass(frozen=True)
class Staircase:
    p: int
    tau: object
    values: tuple  # values[n - 1] = C_n for n = 1..n_max
    running_min: tuple
    running_max: tuple

    def __getitem__(self, n):
        return self.values[n - 1]


def cesaro_staircase(p, n_max, dps=None):
    """C_n = n^-tau * sum_{k<=n} ca_k for n = 1..n_max, with running extrema."""
    _check_base(p, 3)
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    with workdps(dps):
        tau = cantor_tau(p)
        total = 1  # ca_0
        vals, lo, hi = [], [], []
        for n in range(1, n_max + 1):
            total += cantor_indicator(n, p)
            c = total / mpmath.power(n, tau)
            vals.append(c)
            lo.append(c if not lo else min(lo[-1], c))
            hi.append(c if not hi else max(hi[-1], c))
        return Staircase(p, tau, tuple(vals), tuple(lo), tuple(hi))


def dim_simple(p, n):
    """dim L_n = prod (n_j + 1) over the base-p digits of n."""
    _check_base(p)
    if n < 0:
        raise ValueError("n must be >= 0")
    return math.prod(d + 1 for d in base_p_digits(n, p))


def simple_dim_genfun(p, M):
    """Coefficients of f(z) = sum dim L_n z^n up to z^M and the residual of
    f(z) = (1 + 2z + ... + p z^(p-1)) f(z^p) on that range (always 0)."""
    _check_base(p)
    if M < p:
        raise ValueError("need M >= p")
    f = WSeries([dim_simple(p, n) for n in range(M + 1)])
    factor = WSeries.from_poly([j + 1 for j in range(p)], M)
    rhs = factor * f.substitute_power(p).truncate(M)
    residual = max(abs(a - b) for a, b in zip(f.coeffs, rhs.coeffs))
    if residual != 0:
        raise PropertyViolation(f"functional equation residual {residual} != 0", None, residual)
    return f.coeffs, residual


def sierpinski_tau(p, dps=None):
    """Dimension exponent of Pascal's triangle mod p: 1 + log_p((p + 1) / 2)."""
    _check_base(p)
    with workdps(dps):
        return 1 + mpmath.log(mpmath.mpf(p + 1) / 2, p)


def random_weight_tau(p, dps=None):
    """tau for a weight with independent uniform digits: (1/p) log_p(p!)."""
    _check_base(p)
    with workdps(dps):
        return mpmath.log(math.factorial(p), p) / p


def pascal_mod_grid(p, rows):
    """0/1 rows of Pascal's triangle mod p (1 where C(n, k) is nonzero mod p)."""
    _check_base(p)
    grid = []
    row = [1]
    for _ in range(rows):
        grid.append([1 if x else 0 for x in row])
        row = [1] + [(row[k - 1] + row[k]) % p for k in range(1, len(row))] + [1]
    return grid


def padic_digits(x, p, count):
    """First ``count`` p-adic digits of a rational with denominator prime to p."""
    x = Fraction(x)
    if x.denominator % p == 0:
        raise ValueError("denominator divisible by p")
    out = []
    for _ in range(count):
        d = (x.numerator * pow(x.denominator, -1, p)) % p
        out.append(d)
        x = (x - d) / p
    return out


def padic_digit_stream(p, x):
    """Eventually periodic p-adic digits of a rational x: (preperiod, period), least significant first."""
    x = Fraction(x)
    if x.denominator % p == 0:
        raise ValueError("denominator divisible by p")
    seen = {}
    digits = []
    while x not in seen:
        seen[x] = len(digits)
        d = (x.numerator * pow(x.denominator, -1, p)) % p
        digits.append(d)
        x = (x - d) / p
    start = seen[x]
    return tuple(digits[:start]), tuple(digits[start:])


def multiplicative_order(p, n):
    if math.gcd(p, n) != 1:
        raise ValueError(f"{p} is not a unit mod {n}")
    if n == 1:
        return 1
    N, acc = 1, p % n
    while acc != 1:
        acc = acc * p % n
        N += 1
    return N


def tau_lambda(p, q, m, n, dps=None):
    """Dimension exponent of the fractal attached to lambda = q - m/n.

    Returns (N, digits of r(lambda) most significant first, tau) where N is
    minimal with n | p^N - 1 and r(lambda) = m (p^N - 1) / n.
    """
    _check_base(p)
    if not (n > 0 and 0 < m <= n):
        raise ValueError("need 0 < m/n <= 1")
    if n % p == 0:
        raise ValueError(f"p = {p} divides n = {n}")
    lam = q - Fraction(m, n)
    if lam.denominator == 1 and lam > 0:
        raise ValueError("lambda must not be a positive integer")
    N = multiplicative_order(p, n)
    r = m * (p**N - 1) // n
    lsb = base_p_digits(r, p)
    lsb += [0] * (N - len(lsb))
    digits = tuple(reversed(lsb))
    with workdps(dps):
        tau = mpmath.fsum(mpmath.log(d + 1, p) for d in digits) / N
    return N, digits, tau


def _digit_at(digits, j):
    pre, per = digits
    if j < len(pre):
        return pre[j]
    if not per:
        return 0
    return per[(j - len(pre)) % len(per)]


def hilbert_series_L(p, digits, M):
    """prod_j (1 + w^(2 p^j) + ... + w^(2 n_j p^j)) up to w^M.

    ``digits`` is (preperiod, period), least significant first.
    """
    _check_base(p)
    if M < 1:
        raise ValueError("M must be >= 1")
    for d in tuple(digits[0]) + tuple(digits[1]):
        if not 0 <= d <= p - 1:
            raise ValueError(f"digit {d} outside [0, {p - 1}]")
    h = [0] * (M + 1)
    h[0] = 1
    j, step = 0, 2
    while step <= M:
        nj = _digit_at(digits, j)
        if nj:
            new = list(h)
            for m in range(M + 1):
                if h[m]:
                    for k in range(1, nj + 1):
                        t = m + k * step
                        if t > M:
                            break
                        new[t] += h[m]
            h = new
        j += 1
        step *= p
    return WSeries(h)


def cantor_h(w, dps=None):
    """h(w) = prod_{j>=0} (1 + w^(2*3^j)) evaluated numerically for 0 < w < 1."""
    with workdps(dps):
        w = mpmath.mpf(w)
        eps = mpmath.eps
        acc = mpmath.mpf(1)
        x = w * w
        while x > eps:
            acc *= 1 + x
            x = x**3
        return acc


def cantor_oscillation(w, M=40, dps=None):
    """h_0(w) = ln(1/w)^tau * prod_{m=-M}^{M} (1 + w^(2*3^m)) / 2^theta(m), tau = log_3 2."""
    with workdps(dps):
        w = mpmath.mpf(w)
        if not 0 < w < 1:
            raise ValueError("w must lie in (0, 1)")
        tau = mpmath.log(2, 3)
        v = -mpmath.log(w)
        acc = mpmath.mpf(1)
        for m in range(-M, M + 1):
            x = mpmath.exp(-2 * v * mpmath.power(3, m))
            acc *= (1 + x) / 2 if m < 0 else 1 + x
        return mpmath.power(v, tau) * acc
