"""Hurwitz zeta, complex Gamma and the Fourier coefficients L_n of the oscillation.

zeta(s, x) uses Euler-Maclaurin summation, Gamma(z) the Stirling series after
an upward recurrence shift (reflection for Re z < 1/2).  mpmath supplies the
arithmetic and Bernoulli numbers only.
"""

from dataclasses import dataclass

import mpmath

from .asymptotics import t_p
from .precision import workdps

TERM_CAP = 3**13
DEFAULT_N = {2: 10}
DEFAULT_N_OTHER = 6


class PoleError(ValueError):
    """Evaluation at a pole."""


class ResourceLimitError(RuntimeError):
    """Requested work exceeds the configured budget."""


def _cplx(z):
    return mpmath.mpc(z)


def _em_params(s):
    d = mpmath.mp.dps
    K = int(d + 2 * abs(s)) + 10
    M = int(d * 0.6) + 10
    return K, M


def _em_tail(s, a, log_a, M, eps):
    """Integral, half term and Bernoulli corrections at a = K + x."""
    a_s = mpmath.exp(-s * log_a)  # a^-s
    acc = a * a_s / (s - 1) + a_s / 2
    rising = s  # s (s+1) ... (s+2j-2)
    pw = a_s / a  # a^(-s-1)
    inv_a2 = 1 / (a * a)
    fact = mpmath.mpf(2)
    for j in range(1, M + 1):
        term = mpmath.bernoulli(2 * j) / fact * rising * pw
        acc += term
        if abs(term) < eps * abs(acc):
            break
        rising *= (s + 2 * j - 1) * (s + 2 * j)
        pw *= inv_a2
        fact *= (2 * j + 1) * (2 * j + 2)
    return acc


def hurwitz_zeta(s, x, dps=None):
    """zeta(s, x) = sum_{k>=0} (k + x)^-s for x > 0, s != 1."""
    return hurwitz_zeta_batch([s], x, dps=dps)[0]


def hurwitz_zeta_batch(s_list, x, dps=None):
    """zeta(s, x) for several s sharing the logs log(k + x)."""
    with workdps(dps):
        x = mpmath.mpf(x)
        if not x > 0:
            raise ValueError(f"x must be positive, got {x}")
        ss = [_cplx(s) for s in s_list]
        for s in ss:
            if s == 1:
                raise PoleError("zeta(s, x) has a pole at s = 1")
        if not ss:
            return []
        eps = mpmath.eps
        K = max(_em_params(s)[0] for s in ss)
        M = max(_em_params(s)[1] for s in ss)
        logs = [mpmath.log(k + x) for k in range(K + 1)]
        out = []
        for s in ss:
            head = mpmath.fsum(mpmath.exp(-s * lg) for lg in logs[:K])
            tail = _em_tail(s, K + x, logs[K], M, eps)
            val = head + tail
            out.append(val.real if s.imag == 0 else val)
        return out


def _log_gamma_stirling(z, eps):
    acc = (z - mpmath.mpf(1) / 2) * mpmath.log(z) - z + mpmath.log(2 * mpmath.pi) / 2
    inv = 1 / z
    inv2 = inv * inv
    pw = inv
    for k in range(1, 4 * mpmath.mp.dps):
        term = mpmath.bernoulli(2 * k) / (2 * k * (2 * k - 1)) * pw
        acc += term
        if abs(term) < eps:
            break
        pw *= inv2
    return acc


def complex_gamma(z, dps=None):
    """Gamma(z) for complex z off the nonpositive integers."""
    with workdps(dps):
        with mpmath.extradps(10):
            z = _cplx(z)
            if z.imag == 0 and z.real <= 0 and z.real == int(z.real):
                raise PoleError(f"Gamma has a pole at {z.real}")
            if z.real < 0.5:
                # Gamma(z) Gamma(1 - z) = pi / sin(pi z)
                val = mpmath.pi / (mpmath.sin(mpmath.pi * z) * complex_gamma(1 - z))
            else:
                shift = max(0, int(mpmath.mp.dps - abs(z)) + 1)
                w = z + shift
                val = mpmath.exp(_log_gamma_stirling(w, mpmath.eps))
                for k in range(shift):
                    val /= z + k
        val = +val
        return val.real if z.imag == 0 else val


def xi(beta, u, dps=None):
    """4^-beta zeta(beta, u/4)."""
    with workdps(dps):
        u = mpmath.mpf(u)
        if not u > 0:
            raise ValueError("u must be positive")
        return mpmath.power(4, -_cplx(beta)) * hurwitz_zeta(beta, u / 4)


def digit_sum_counts(p, N):
    """Multiplicities of m = sum_j k_j p^(N-j) over (k_1..k_N) in {-1, 0, 1}^N."""
    counts = {0: 1}
    for j in range(1, N + 1):
        step = p ** (N - j)
        new = {}
        for m, c in counts.items():
            for k in (-1, 0, 1):
                key = m + k * step
                new[key] = new.get(key, 0) + c
        counts = new
    return counts


@dataclass(frozen=True)
class FourierResult:
    p: int
    n: int
    N: int
    L_n: object
    S_magnitude: object
    h_n: object
    nu: int


def fourier_exponent(p, n):
    """log_p((p+1)/2) + 1 + 2 pi i n / ln p."""
    return mpmath.mpc(mpmath.log(mpmath.mpf(p + 1) / 2, p) + 1, 2 * mpmath.pi * n / mpmath.log(p))


def default_N(p):
    return DEFAULT_N.get(p, DEFAULT_N_OTHER)


def _check_budget(N, cap):
    if N < 1:
        raise ValueError("N must be >= 1")
    if 3**N > cap:
        raise ResourceLimitError(f"3^{N} = {3**N} digit-sum terms exceed the cap {cap}")


DIRECT_SHELLS = 8


def xi_digit_sum(p, N, betas, shells=DIRECT_SHELLS):
    """sum over (k_1..k_N) in {-1,0,1}^N of xi(beta, 2 + sum_j k_j p^-j), per beta.

    xi(beta, u) = sum_k (4k + u)^-beta.  Shells k < ``shells`` are summed
    directly over the distinct shifts y = sum_j k_j p^-j; for the rest
    (4k + 2 + y)^-beta is expanded in y, |y| < 1, which leaves the even
    moments of the digit measure times zeta(beta + j, shells + 1/2).
    """
    counts = digit_sum_counts(p, N)
    scale = mpmath.mpf(p) ** N
    pts = [(mpmath.mpf(m) / scale, c) for m, c in sorted(counts.items())]
    out = [mpmath.mpc(0) for _ in betas]
    for k in range(shells):
        for y, c in pts:
            lg = mpmath.log(4 * k + 2 + y)
            for i, b in enumerate(betas):
                out[i] += c * mpmath.exp(-b * lg)
    eps = mpmath.eps
    moments = {}

    def moment(j):
        if j not in moments:
            moments[j] = mpmath.fsum(c * y**j for y, c in pts)
        return moments[j]

    a = mpmath.mpf(shells) + mpmath.mpf(1) / 2
    for i, b in enumerate(betas):
        acc = mpmath.mpc(0)
        coef = mpmath.mpc(1)  # C(-b, j)
        j = 0
        while True:
            if j % 2 == 0:
                term = coef * moment(j) * mpmath.power(4, -b - j) * hurwitz_zeta(b + j, a)
                acc += term
                if j > abs(b) + 2 and abs(term) < eps * abs(acc):
                    break
            coef *= (-b - j) / (j + 1)
            j += 1
            if j > 20 * mpmath.mp.dps + 4 * abs(b):
                raise ArithmeticError("moment expansion failed to converge")
        out[i] += acc
    return out


def fourier_coefficients(p, ns, N=None, nu=None, cap=TERM_CAP, dps=None):
    """FourierResults for every n in ``ns``, sharing the digit-sum work."""
    if isinstance(p, bool) or not isinstance(p, int) or p < 2:
        raise ValueError(f"p must be a prime, got {p!r}")
    N = default_N(p) if N is None else N
    nu = 2 * p if nu is None else nu
    if nu < 2:
        raise ValueError("nu must be >= 2")
    _check_budget(N, cap)
    ns = list(ns)
    with workdps(dps):
        betas = [fourier_exponent(p, n) for n in ns]
        sums = xi_digit_sum(p, N, betas)
        tbar = t_p(p)
        out = []
        for n, b, S in zip(ns, betas, sums):
            pref = 2 * complex_gamma(b)
            if p == 2:
                pref /= mpmath.power(mpmath.log(2), 1 + 2j * mpmath.pi * n / mpmath.log(2))
            else:
                pref /= mpmath.log(p)
            L = pref * S / mpmath.mpf(p + 1) ** N
            h = L / complex_gamma(tbar + 1 + 2j * mpmath.pi * n / mpmath.log(nu))
            out.append(FourierResult(p, n, N, L, abs(S), h, nu))
        return out


def fourier_L(p, n, N=None, nu=None, cap=TERM_CAP, dps=None):
    return fourier_coefficients(p, [n], N, nu, cap, dps)[0]


def oscillation_reconstruct(p, y_grid, n_terms, N=None, nu=None, dps=None, coeffs=None):
    """Real partial Fourier synthesis sum_{|n|<=n_terms} L_(-n) e^(2 pi i n y).

    L_(-n) is taken as conj(L_n), so the output is real and 1-periodic in y.
    """
    with workdps(dps):
        if coeffs is None:
            coeffs = [r.L_n for r in fourier_coefficients(p, range(n_terms + 1), N, nu)]
        out = []
        for y in y_grid:
            y = mpmath.mpf(y)
            acc = mpmath.re(coeffs[0])
            for n in range(1, n_terms + 1):
                acc += 2 * mpmath.re(mpmath.conj(coeffs[n]) * mpmath.expjpi(2 * n * y))
            out.append(acc)
        return out


def oscillation_coordinate(p, w, dps=None):
    """y with F_0(w) matching the synthesis at y.

    The p = 2 coefficients carry the phase (ln 2)^(-2 pi i n / ln 2), which
    puts F_0 on y = log_2 log_2(1/w); the general-p coefficients carry none,
    giving y = log_p ln(1/w).
    """
    with workdps(dps):
        v = -mpmath.log(mpmath.mpf(w))
        if p == 2:
            v /= mpmath.log(2)
        return mpmath.log(v, p)
