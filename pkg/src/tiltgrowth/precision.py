"""Working-precision handling for the mpmath-based modules."""

import os
from contextlib import contextmanager

import mpmath

ENV_VAR = "TILTGROWTH_PRECISION"
_FALLBACK_DPS = 60


def default_dps():
    raw = os.environ.get(ENV_VAR)
    if raw is None or not raw.strip():
        return _FALLBACK_DPS
    dps = int(raw)
    if dps < 15:
        raise ValueError(f"{ENV_VAR} must be at least 15, got {dps}")
    return dps


@contextmanager
def workdps(dps=None):
    """Run a block at ``dps`` decimal digits (default from the environment)."""
    with mpmath.workdps(dps if dps is not None else default_dps()):
        yield


def mpf(x):
    """Convert ints, Fractions and decimal strings to an mpf without going through float."""
    num = getattr(x, "numerator", None)
    den = getattr(x, "denominator", None)
    if num is not None and den is not None and not isinstance(x, float):
        return mpmath.mpf(num) / den
    return mpmath.mpf(x)
