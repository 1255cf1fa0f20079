"""Deformed integer arithmetic.

The whole construction is built from one scalar function: the deformed
bracket [n] = sinh(n*t)/sinh(t), which degenerates to the plain integer n
at t = 0.  Everything downstream (block entries, coefficient lists, Gram
matrices) is a product/quotient of brackets under a square root, so the
conventions are fixed here once:

* ``raw_bracket``  -- sinh(n*t), no normalization.
* ``norm_bracket`` -- sinh(n*t)/sinh(t); the t -> 0 limit is taken exactly
  so that classical (t = 0) runs use pure integer arithmetic in floats.
* ``a1_element``   -- the canonical rank-1 lowering matrix element
  sqrt([j+1][P-j]) on a string of length P, the only place a square root
  of brackets enters a single string.
"""
from __future__ import annotations

import math

__all__ = ["raw_bracket", "norm_bracket", "a1_element"]


def raw_bracket(j: float, t: float) -> float:
    """sinh(j*t).  Odd in j; vanishes identically at t = 0."""
    return math.sinh(j * t)


def norm_bracket(j: float, t: float) -> float:
    """Deformed integer [j] = sinh(j*t)/sinh(t), with [j] -> j as t -> 0.

    The t = 0 case returns the integer exactly (no 0/0 evaluation), which
    keeps classical runs free of limit noise.
    """
    if t == 0.0:
        return float(j)
    return math.sinh(j * t) / math.sinh(t)


def a1_element(P: int, j: int, t: float) -> float:
    """Lowering element between positions j and j+1 of a length-P string.

    Equals sqrt([j+1][P-j]).  Valid for 0 <= j <= P-1; other j have no
    edge to act on and are a caller error rather than a zero.
    """
    if not 0 <= j <= P - 1:
        raise ValueError(f"string position j={j} outside [0, {P - 1}] for P={P}")
    return math.sqrt(norm_bracket(j + 1, t) * norm_bracket(P - j, t))
