"""Property checks over computed sequences, each reporting its first counterexample.

Sequences can be passed in explicitly, which is how corrupted data is fed
through the same checks in tests.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .characters import oracle_sequences
from .sequences import b_sequence, l_sequence


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    checked: int
    counterexample: tuple = field(default=None)  # (n, values)

    def line(self):
        status = "PASS" if self.ok else "FAIL"
        tail = "" if self.ok else f"  first counterexample n={self.counterexample[0]} values={self.counterexample[1]}"
        return f"{status} {self.name} ({self.checked} cases){tail}"


def _scan(name, indices, bad):
    count = 0
    for n in indices:
        count += 1
        hit = bad(n)
        if hit is not None:
            return CheckResult(name, False, count, (n, hit))
    return CheckResult(name, True, count)


def check_mono(b):
    return _scan("b_{n+2} <= 4 b_n", range(len(b) - 2),
                 lambda n: (b[n], b[n + 2]) if b[n + 2] > 4 * b[n] else None)


def check_monotone(b):
    return _scan("b_n <= b_{n+1}", range(len(b) - 1),
                 lambda n: (b[n], b[n + 1]) if b[n] > b[n + 1] else None)


def check_length(l):
    return _scan("4 l_n >= l_{n+2}", range(len(l) - 2),
                 lambda n: (l[n], l[n + 2]) if 4 * l[n] < l[n + 2] else None)


def check_b_le_l(b, l):
    return _scan("b_n <= l_n", range(min(len(b), len(l))),
                 lambda n: (b[n], l[n]) if b[n] > l[n] else None)


def check_parity(seq, label, offset=-1):
    """seq[2n + offset] = seq[2n]: offset -1 for b, +1 for l."""
    name = f"{label}_(2n{'-1' if offset < 0 else '+1'}) = {label}_(2n)"
    idx = [n for n in range(len(seq) // 2 + 1) if 0 <= 2 * n + offset < len(seq) and 2 * n < len(seq)]
    return _scan(name, idx, lambda n: (seq[2 * n + offset], seq[2 * n]) if seq[2 * n + offset] != seq[2 * n] else None)


def check_small_n(b, p):
    top = len(b) if p == math.inf else min(len(b), p)
    return _scan("b_n = C(n, n/2) for n < p", range(top),
                 lambda n: (b[n], math.comb(n, n // 2)) if b[n] != math.comb(n, n // 2) else None)


def check_second_difference(b):
    return _scan("b_{n+4} - 8 b_{n+2} + 16 b_n >= 0", range(len(b) - 4),
                 lambda n: (b[n], b[n + 2], b[n + 4]) if b[n + 4] - 8 * b[n + 2] + 16 * b[n] < 0 else None)


def check_gap(b):
    def bad(n):
        d = 1 - Fraction(b[n + 2], 4 * b[n])
        return (b[n], b[n + 2]) if not 0 <= d < 1 else None
    return _scan("0 <= d_n < 1", range(len(b) - 2), bad)


def check_psi(b):
    def bad(n):
        c = Fraction(b[n - 2], 2 ** (n - 2)) - Fraction(b[n], 2**n)
        return (b[n - 2], b[n]) if c <= 0 else None
    return _scan("psi c_n > 0 for n >= 2", range(2, len(b)), bad)


def check_oracle(p, b, l, n_oracle):
    ob, ol = oracle_sequences(p, n_oracle)
    out = []
    for label, mine, ref in (("b", b, ob), ("l", l, ol)):
        out.append(_scan(f"{label}_n = oracle_{label}(n)", range(min(len(mine), n_oracle + 1)),
                         lambda n, m=mine, r=ref: (m[n], r[n]) if m[n] != r[n] else None))
    return out


def run_all(p, n_max, oracle_max=60, b=None, l=None):
    """Every property applicable to p over n <= n_max; returns CheckResults."""
    if b is None:
        b = b_sequence(p, n_max).values
    if l is None:
        l = l_sequence(p, n_max).values
    results = []
    if p != math.inf and oracle_max is not None and oracle_max >= 0:
        results += check_oracle(p, b, l, min(oracle_max, n_max))
    results += [check_mono(b), check_monotone(b), check_length(l), check_b_le_l(b, l),
                check_gap(b), check_small_n(b, p)]
    if p == 2:
        results += [check_parity(b, "b"), check_parity(l, "l", offset=1), check_second_difference(b), check_psi(b)]
    return results
