"""Brute-force oracle: SL2 characters in characteristic p and greedy decomposition.

Characters are symmetric Laurent polynomials in u.  Tilting characters come
from Donkin's tensor product formula, simple characters from Steinberg's.
Both families are unitriangular with respect to the highest weight, which is
what makes the greedy top-down subtraction exact.
"""

from dataclasses import dataclass
from functools import lru_cache

from .series import SymLaurent

DEFAULT_ORACLE_CAP = 200

TILTING = "tilting"
SIMPLE = "simple"


class NotInConeError(ValueError):
    """The character is not a nonnegative combination of the chosen basis."""


@dataclass(frozen=True)
class Character:
    poly: SymLaurent
    p: int = 0

    @property
    def dim(self):
        return self.poly.at_one()

    @property
    def top(self):
        return self.poly.top_degree

    def __mul__(self, other):
        return Character(self.poly * other.poly, self.p)


@dataclass(frozen=True)
class Decomposition:
    mults: tuple  # sorted (highest weight, multiplicity) pairs
    basis: str
    p: int

    def as_dict(self):
        return dict(self.mults)

    @property
    def total(self):
        return sum(m for _, m in self.mults)

    def reconstruct(self):
        acc = SymLaurent()
        for i, m in self.mults:
            acc = acc + basis_char(self.basis, self.p, i).poly.scale(m)
        return acc


def _check_p(p):
    if isinstance(p, bool) or not isinstance(p, int) or p < 2:
        raise ValueError(f"p must be a prime, got {p!r}")


@lru_cache(maxsize=None)
def _weyl(n):
    return SymLaurent({d: 1 for d in range(n % 2, n + 1, 2)})


def weyl_char(n):
    """u^n + u^(n-2) + ... + u^-n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return Character(_weyl(n))


def frobenius_twist(c, p):
    return Character(c.poly.substitute_power(p), p)


@lru_cache(maxsize=None)
def _tilting(p, i):
    if i <= p - 2:
        return _weyl(i)
    j = i - (p - 1)
    m, k = divmod(j, p)  # i = p*m + (p-1) + k with 0 <= k <= p-1
    base = _weyl(p - 1)
    if k:
        base = base * SymLaurent({k: 1})
    if m == 0:
        return base
    return _tilting(p, m).substitute_power(p) * base


def tilting_char(p, i):
    _check_p(p)
    if i < 0:
        raise ValueError(f"highest weight must be >= 0, got {i}")
    return Character(_tilting(p, i), p)


def base_p_digits(n, p):
    """Digits of n in base p, least significant first (empty for n = 0)."""
    digits = []
    while n:
        n, d = divmod(n, p)
        digits.append(d)
    return digits


@lru_cache(maxsize=None)
def _simple(p, n):
    acc = SymLaurent({0: 1})
    scale = 1
    for d in base_p_digits(n, p):
        if d:
            acc = acc * _weyl(d).substitute_power(scale)
        scale *= p
    return acc


def simple_char(p, n):
    _check_p(p)
    if n < 0:
        raise ValueError(f"highest weight must be >= 0, got {n}")
    return Character(_simple(p, n), p)


def basis_char(basis, p, i):
    if basis == TILTING:
        return tilting_char(p, i)
    if basis == SIMPLE:
        return simple_char(p, i)
    raise ValueError(f"unknown basis {basis!r}")


def greedy_decompose(c, basis, p):
    """Peel off basis characters from the top weight down.

    The top degree of what remains is unique and every basis character has
    top coefficient 1, so no tie-breaking is ever needed.
    """
    poly = c.poly if isinstance(c, Character) else c
    mults = {}
    while not poly.is_zero():
        d = poly.top_degree
        m = poly[d]
        if m < 0:
            raise NotInConeError(f"coefficient {m} at weight {d} in the {basis} basis (p={p})")
        mults[d] = mults.get(d, 0) + m
        poly = poly - basis_char(basis, p, d).poly.scale(m)
    return Decomposition(tuple(sorted(mults.items())), basis, p)


def tensor_power_char(n):
    poly = SymLaurent({0: 1})
    for _ in range(n):
        poly = poly.times_x()
    return Character(poly)


def _cap(n, cap):
    if n < 0:
        raise ValueError("n must be >= 0")
    if cap is not None and n > cap:
        raise ValueError(f"oracle limited to n <= {cap}, got {n}")


def oracle_b(p, n, cap=DEFAULT_ORACLE_CAP):
    _check_p(p)
    _cap(n, cap)
    return greedy_decompose(tensor_power_char(n), TILTING, p).total


def oracle_l(p, n, cap=DEFAULT_ORACLE_CAP):
    _check_p(p)
    _cap(n, cap)
    return greedy_decompose(tensor_power_char(n), SIMPLE, p).total


def oracle_sequences(p, n_max, cap=DEFAULT_ORACLE_CAP):
    """(b_0..b_n_max, l_0..l_n_max) from one pass of iterated tensoring."""
    _check_p(p)
    _cap(n_max, cap)
    bs, ls = [], []
    poly = SymLaurent({0: 1})
    for _ in range(n_max + 1):
        bs.append(greedy_decompose(poly, TILTING, p).total)
        ls.append(greedy_decompose(poly, SIMPLE, p).total)
        poly = poly.times_x()
    return bs, ls
