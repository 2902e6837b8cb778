"""Exact truncated series in z^-1 and in w, linked by z = w + 1/w.

A :class:`ZSeries` of order M stores c_0..c_M for sum c_n z^(-n-1); a
:class:`WSeries` of order M stores a_0..a_M for sum a_m w^m.  Coefficients are
Python ints or :class:`fractions.Fraction` (ints are kept as ints so the big
integer pipelines never pay for Fraction arithmetic).  All values are
immutable.

The change of variables uses t = z^-1 = w / (1 + w^2).  Multiplying a w-series
by t is a division by 1 + w^2 followed by a shift, so both directions of the
conversion run in O(M^2) additions via Horner's rule.
"""

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational


class SeriesError(ValueError):
    pass


class OrderMismatchError(SeriesError):
    pass


class NotInImageError(SeriesError):
    pass


def _norm(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def _check_exact(coeffs):
    for c in coeffs:
        if isinstance(c, bool) or not isinstance(c, Rational):
            raise TypeError(f"series coefficients must be exact rationals, got {type(c).__name__}")


@dataclass(frozen=True)
class ZSeries:
    """sum_{n=0}^{M} c_n z^(-n-1), known up to O(z^(-M-2))."""

    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(_norm(c) for c in self.coeffs)
        if not coeffs:
            raise SeriesError("a ZSeries needs at least one coefficient (order >= 0)")
        _check_exact(coeffs)
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls, order):
        return cls((0,) * (order + 1))

    @classmethod
    def monomial(cls, k, order, coeff=1):
        """coeff * z^(-k), k >= 1."""
        if not 1 <= k <= order + 1:
            raise SeriesError(f"z^-{k} is not representable at order {order}")
        c = [0] * (order + 1)
        c[k - 1] = coeff
        return cls(c)

    @property
    def order(self):
        return len(self.coeffs) - 1

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, n):
        return self.coeffs[n]

    def truncate(self, order):
        if order > self.order:
            raise OrderMismatchError(f"cannot extend order {self.order} to {order}")
        return ZSeries(self.coeffs[: order + 1])

    def _common(self, other):
        if not isinstance(other, ZSeries):
            return NotImplemented
        m = min(self.order, other.order)
        return m

    def __add__(self, other):
        m = self._common(other)
        if m is NotImplemented:
            return m
        return ZSeries(a + b for a, b in zip(self.coeffs[: m + 1], other.coeffs[: m + 1]))

    def __sub__(self, other):
        m = self._common(other)
        if m is NotImplemented:
            return m
        return ZSeries(a - b for a, b in zip(self.coeffs[: m + 1], other.coeffs[: m + 1]))

    def __neg__(self):
        return ZSeries(-a for a in self.coeffs)

    def scale(self, k):
        return ZSeries(k * a for a in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, Rational):
            return self.scale(other)
        m = self._common(other)
        if m is NotImplemented:
            return m
        # z^(-i-1) * z^(-j-1) = z^(-(i+j+1)-1)
        a, b = self.coeffs, other.coeffs
        out = [0] * (m + 1)
        for i in range(m):
            ai = a[i]
            if not ai:
                continue
            for j in range(m - i):
                bj = b[j]
                if bj:
                    out[i + j + 1] += ai * bj
        return ZSeries(out)

    __rmul__ = __mul__

    def is_integral(self):
        return all(isinstance(c, int) for c in self.coeffs)


@dataclass(frozen=True)
class WSeries:
    """sum_{m=0}^{M} a_m w^m, known up to O(w^(M+1)).

    Coefficients are normally exact, but mpmath numbers are accepted as well
    so that high-precision real expansions can reuse the same container.
    """

    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(_norm(c) for c in self.coeffs)
        if not coeffs:
            raise SeriesError("a WSeries needs at least one coefficient (order >= 0)")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls, order):
        return cls((0,) * (order + 1))

    @classmethod
    def from_poly(cls, poly, order):
        """Truncate or zero-pad a polynomial given lowest degree first."""
        c = list(poly[: order + 1])
        c += [0] * (order + 1 - len(c))
        return cls(c)

    @property
    def order(self):
        return len(self.coeffs) - 1

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, m):
        return self.coeffs[m]

    def truncate(self, order):
        if order > self.order:
            raise OrderMismatchError(f"cannot extend order {self.order} to {order}")
        return WSeries(self.coeffs[: order + 1])

    def __add__(self, other):
        if not isinstance(other, WSeries):
            return NotImplemented
        m = min(self.order, other.order)
        return WSeries(a + b for a, b in zip(self.coeffs[: m + 1], other.coeffs[: m + 1]))

    def __sub__(self, other):
        if not isinstance(other, WSeries):
            return NotImplemented
        m = min(self.order, other.order)
        return WSeries(a - b for a, b in zip(self.coeffs[: m + 1], other.coeffs[: m + 1]))

    def __neg__(self):
        return WSeries(-a for a in self.coeffs)

    def scale(self, k):
        return WSeries(k * a for a in self.coeffs)

    def __mul__(self, other):
        if not isinstance(other, WSeries):
            return self.scale(other)
        m = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [0] * (m + 1)
        for i in range(m + 1):
            ai = a[i]
            if not ai:
                continue
            for j in range(m + 1 - i):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
        return WSeries(out)

    __rmul__ = __mul__

    def shift(self, k):
        """Multiply by w^k (k >= 0); the order grows by k."""
        return WSeries((0,) * k + self.coeffs)

    def substitute_power(self, k):
        """g(w) -> g(w^k), keeping order k*M."""
        out = [0] * (k * self.order + 1)
        for m, a in enumerate(self.coeffs):
            out[k * m] = a
        return WSeries(out)

    def evaluate(self, w):
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * w + a
        return acc


@dataclass(frozen=True)
class SymLaurent:
    """Integer Laurent polynomial in u invariant under u <-> 1/u.

    Only degrees >= 0 are stored, so the symmetry cannot be broken.
    """

    half: tuple  # sorted (degree, coefficient) pairs, nonzero coefficients only

    def __init__(self, half=None):
        items = dict(half or {})
        for d, c in items.items():
            if d < 0:
                raise SeriesError("SymLaurent stores nonnegative degrees only")
            if isinstance(c, bool) or not isinstance(c, int):
                raise TypeError("SymLaurent coefficients must be integers")
        object.__setattr__(self, "half", tuple(sorted((d, c) for d, c in items.items() if c)))

    @classmethod
    def from_full(cls, full):
        """Build from a dict over all degrees, rejecting asymmetric input."""
        for d, c in full.items():
            if full.get(-d, 0) != c:
                raise SeriesError(f"not symmetric: degree {d} has {c}, degree {-d} has {full.get(-d, 0)}")
        return cls({d: c for d, c in full.items() if d >= 0})

    def as_dict(self):
        return dict(self.half)

    def full(self):
        out = {}
        for d, c in self.half:
            out[d] = c
            out[-d] = c
        return out

    def __getitem__(self, d):
        return self.as_dict().get(abs(d), 0)

    @property
    def top_degree(self):
        return self.half[-1][0] if self.half else None

    def is_zero(self):
        return not self.half

    def __add__(self, other):
        out = self.as_dict()
        for d, c in other.half:
            out[d] = out.get(d, 0) + c
        return SymLaurent(out)

    def __sub__(self, other):
        out = self.as_dict()
        for d, c in other.half:
            out[d] = out.get(d, 0) - c
        return SymLaurent(out)

    def scale(self, k):
        return SymLaurent({d: k * c for d, c in self.half})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        a, b = self.full(), other.full()
        out = {}
        for i, ci in a.items():
            for j, cj in b.items():
                k = i + j
                if k >= 0:
                    out[k] = out.get(k, 0) + ci * cj
        return SymLaurent(out)

    __rmul__ = __mul__

    def times_x(self):
        """Multiply by u + 1/u."""
        h = self.as_dict()
        if not h:
            return self
        top = max(h)
        out = {}
        for k in range(0, top + 2):
            c = h.get(abs(k - 1), 0) + h.get(k + 1, 0)
            if c:
                out[k] = c
        return SymLaurent(out)

    def substitute_power(self, p):
        """u -> u^p."""
        return SymLaurent({p * d: c for d, c in self.half})

    def at_one(self):
        return sum(c if d == 0 else 2 * c for d, c in self.half)

    def __repr__(self):
        if not self.half:
            return "SymLaurent(0)"
        terms = []
        for d, c in reversed(self.half):
            terms.append(f"{c}" if d == 0 else f"{c}*(u^{d}+u^-{d})")
        return "SymLaurent(" + " + ".join(terms) + ")"


@dataclass(frozen=True)
class MonicIntPoly:
    """Monic integer polynomial in z, coefficients lowest degree first."""

    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        if not coeffs or coeffs[-1] != 1:
            raise SeriesError("leading coefficient must be 1")
        if any(isinstance(c, bool) or not isinstance(c, int) for c in coeffs):
            raise TypeError("MonicIntPoly coefficients must be integers")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __call__(self, z):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc


def chebyshev_P(p):
    """Monic P_p with P_p(w + 1/w) = w^p + w^-p, i.e. 2 T_p(z/2)."""
    if isinstance(p, bool) or not isinstance(p, int):
        raise TypeError("p must be an integer")
    if p < 2:
        raise ValueError(f"chebyshev_P needs p >= 2, got {p}")
    prev, cur = [2], [0, 1]  # P_0 = 2, P_1 = z
    for _ in range(p - 1):
        nxt = [0] + cur
        for i, c in enumerate(prev):
            nxt[i] -= c
        prev, cur = cur, nxt
    return MonicIntPoly(tuple(cur))


def _times_t(x):
    """Multiply a w-series (list, fixed length) by t = w / (1 + w^2)."""
    n = len(x)
    y = [0] * n
    # divide by 1 + w^2 and shift by one in the same pass
    for k in range(n - 1):
        v = x[k] - (y[k - 1] if k >= 2 else 0)
        y[k + 1] = v
    return y


def z_to_w(c, order):
    """Expand sum c_n z^(-n-1) in w via z^-1 = w / (1 + w^2), up to w^order."""
    if order < 0:
        raise ValueError("order must be >= 0")
    if order > c.order + 1:
        # c_{M+1} z^(-M-2) is unknown and would enter at w^(M+2)
        raise OrderMismatchError(f"a ZSeries of order {c.order} determines w-coefficients up to {c.order + 1} only")
    n_terms = min(c.order + 1, order)  # c_n starts at w^(n+1)
    acc = [0] * (order + 1)
    for n in range(n_terms - 1, -1, -1):
        acc[0] += c[n]
        acc = _times_t(acc)
    return WSeries(acc)


def w_to_z(g):
    """Invert :func:`z_to_w`: find c with sum c_n z^(-n-1) = g(w).

    The output has order g.order - 1.  A nonzero constant term has no
    preimage and raises :class:`NotInImageError`.
    """
    if g.order < 1:
        raise SeriesError("need a w-series of order >= 1")
    if g[0] != 0:
        raise NotInImageError(f"constant term {g[0]} has no preimage in z^-1 Q[[z^-1]]")
    cur = list(g.coeffs)
    out = []
    for _ in range(g.order):
        cn = cur[1]
        out.append(cn)
        # cur <- cur / t - c_n = cur * (1 + w^2) / w - c_n
        m = len(cur)
        nxt = [0] * (m - 1)
        for k in range(m - 1):
            nxt[k] = cur[k + 1] + (cur[k - 1] if k >= 1 else 0)
        nxt[0] -= cn
        if nxt[0] != 0:
            raise NotInImageError("triangular elimination left a nonzero residual")
        cur = nxt
    return ZSeries(out)


def _divide_by_poly(g, poly, n_out):
    """Solve poly(z) * y = g for y = sum_{e>=1} y_e z^-e.

    ``g`` is a list indexed by e for z^-e, e >= 0.  Returns y_1..y_{n_out}.
    """
    d = poly.degree
    a = poly.coeffs
    y = [0] * (n_out + 1)
    # coefficient of z^-e in P*y: sum_j a_j y_{e+j} = g_e
    for e_top in range(d, n_out + 1):
        e = e_top - d
        v = g[e] if e < len(g) else 0
        for j in range(d):
            yj = y[e + j]
            if yj:
                v -= a[j] * yj
        y[e_top] = v
    return y[1:]


def compose_inverse_powers(c, P, order=None):
    """z^-1-expansion of sum_n c_n P(z)^(-n-1), truncated at ``order``.

    ``order`` defaults to c.order.  Terms of c whose first contribution lies
    beyond the requested order are skipped, so a short prefix of c may be
    composed to a longer output.
    """
    if P.degree < 2:
        raise ValueError("compose_inverse_powers needs deg P >= 2")
    if order is None:
        order = c.order
    d = P.degree
    n_out = order + 1  # exponents z^-1 .. z^-(order+1)
    last = min(c.order, (order + 1) // d - 1)
    if last < 0:
        return ZSeries.zero(order)
    # Horner: S_n = (c_n + S_{n+1}) / P
    acc = [0] * (n_out + 1)  # index e -> z^-e, e >= 0
    for n in range(last, -1, -1):
        acc[0] = c[n]
        acc = [0] + _divide_by_poly(acc, P, n_out)
    return ZSeries(acc[1:])


def roots_of_unity_average(g, p):
    """(1/p) sum_j g(zeta^j w): keep exactly the w^m with p | m."""
    if p < 1:
        raise ValueError("p must be positive")
    return WSeries(a if m % p == 0 else 0 for m, a in enumerate(g.coeffs))


def rational_w_series(numer, denom, order):
    """w-expansion of numer(w) / denom(w); polynomials lowest degree first, denom(0) = 1."""
    if not denom or denom[0] != 1:
        raise SeriesError("denominator must have constant term 1")
    out = [0] * (order + 1)
    for m in range(order + 1):
        v = numer[m] if m < len(numer) else 0
        for j in range(1, min(m, len(denom) - 1) + 1):
            if denom[j]:
                v -= denom[j] * out[m - j]
        out[m] = v
    return WSeries(out)
