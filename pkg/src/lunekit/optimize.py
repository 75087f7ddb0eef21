"""One-dimensional golden-section minimization for piecewise-smooth objectives."""

from __future__ import annotations

import math

__all__ = ["golden_section"]

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


def golden_section(f, lo: float, hi: float, tol: float = 1e-10, max_iter: int = 200):
    """Minimize f over [lo, hi]; returns (argmin, min).

    Endpoints are evaluated too, so a boundary minimum is never missed.
    """
    a, b = lo, hi
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    it = 0
    while abs(b - a) > tol and it < max_iter:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = f(d)
        it += 1
    x = 0.5 * (a + b)
    fx = f(x)
    for cand, fcand in ((lo, f(lo)), (hi, f(hi))):
        if fcand < fx:
            x, fx = cand, fcand
    return x, fx
