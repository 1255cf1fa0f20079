"""Block-level matrix primitives on the weight diagram.

The two lowering generators act along the two line families of the
diagram:

* ``lambda_block`` -- action along a vertical line (k -> k+1 at fixed s).
  In the strand basis this is rectangular-diagonal: strand i carries an
  independent rank-1 string and contributes the canonical element
  sqrt([j+1][P_i - j]) at its local depth j.

* ``l_block`` -- action across lines (s -> s+1 at fixed k).  In the same
  basis this is bidiagonal with entries a_i * sqrt([..]) and
  b_i * sqrt([..]), where the coefficients (a_i, b_i) depend only on the
  transition s -> s+1, not on k.

Two closed-form candidate families for (a_i, b_i) are implemented,
``closed_form_b`` and ``closed_form_a``.  They differ by a shift in the
denominator brackets in the left region and by the sign of b_i in the
right region.  Only one of them can be right: ``solve_ab_numeric``
recovers the coefficients independently from the boundary-column lists
and a linear system, and arbitrates.  (``closed_form_a`` is the family
that survives; ``closed_form_b`` is kept so the disagreement stays
visible and testable.)

Regions: a transition s -> s+1 is "left" when s <= q-1 (multiplicities
still growing with s) and "right" when s >= q (shrinking).  On the seam
both parametrizations of the boundary data agree.

Index conventions: strand/list indices i are 1-based as in the formulas;
array storage is 0-based, so a_i == a[i-1].  Any bracket whose argument
is a nonpositive integer annihilates the whole product it appears in.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .diagram import Diagram, RepLabel, build_diagram
from .qnum import a1_element, norm_bracket

__all__ = [
    "REGION_LEFT",
    "REGION_RIGHT",
    "VARIANTS",
    "ABCoefficients",
    "BoundaryColumns",
    "ab_coefficients",
    "boundary_columns",
    "gram_block",
    "l_block",
    "lambda_block",
    "q_line_element",
    "solve_ab_numeric",
]

REGION_LEFT = "left"
REGION_RIGHT = "right"
VARIANTS = ("closed_form_b", "closed_form_a", "numeric_solver")

_DEGENERATE = 1e-12  # pivot floor for the numeric coefficient solver


def _bracket_prod(args, t: float) -> float:
    """Product of [a] over args, annihilated to 0 by any nonpositive a."""
    v = 1.0
    for a in args:
        if a <= 0:
            return 0.0
        v *= norm_bracket(a, t)
    return v


def _sqrt_ratio(nums, dens, t: float) -> float:
    """sqrt(prod [n] / prod [d]); 0 if the numerator annihilates.

    Numerators are tested first: wherever a coefficient vanishes by
    annihilation its denominator may degenerate too, and must not be
    evaluated.
    """
    nm = _bracket_prod(nums, t)
    if nm == 0.0:
        return 0.0
    dn = _bracket_prod(dens, t)
    if dn <= 0.0:
        raise ArithmeticError(f"nonpositive denominator brackets {tuple(dens)}")
    return math.sqrt(nm / dn)


# --------------------------------------------------------------------------
# closed-form coefficient families
# --------------------------------------------------------------------------

def _a_closed_left(p: int, q: int, s: int, i: int, t: float, variant: str) -> float:
    if variant == "closed_form_a":
        dens = [p + s + 4 - 2 * i, p + s + 3 - 2 * i]
    else:  # closed_form_b: denominator brackets shifted by one
        dens = [p + s + 3 - 2 * i, p + s + 2 - 2 * i]
    return _sqrt_ratio([s + 2 - i, q - s + i - 1, p + s + 3 - i], dens, t)


def _b_closed_left(p: int, q: int, s: int, i: int, t: float, variant: str) -> float:
    if variant == "closed_form_a":
        dens = [p + s + 2 - 2 * i, p + s + 3 - 2 * i]
    else:
        dens = [p + s + 3 - 2 * i, p + s + 4 - 2 * i]
    return -_sqrt_ratio([i, p + q + 2 - i, p + 1 - i], dens, t)


def _a_closed_right(p: int, q: int, s: int, i: int, t: float) -> float:
    r = p + 2 * q - s
    return _sqrt_ratio([i - 1, p + q + 3 - i, q + 2 - i],
                       [r + 3 - 2 * i, r + 4 - 2 * i], t)


def _b_closed_right(p: int, q: int, s: int, i: int, t: float, variant: str) -> float:
    r = p + 2 * q - s
    b = _sqrt_ratio([s - q + i, r + 2 - i, p + q - s + 1 - i],
                    [r + 3 - 2 * i, r + 2 - 2 * i], t)
    # closed_form_b takes b positive here; with the gauge a_i >= 0 the
    # defining relations force the opposite sign, which closed_form_a uses.
    return -b if variant == "closed_form_a" else b


def _check_region(label: RepLabel, s: int, region: str) -> None:
    p, q = label.p, label.q
    if region not in (REGION_LEFT, REGION_RIGHT):
        raise ValueError(f"unknown region {region!r}")
    if region == REGION_LEFT and not 0 <= s <= q - 1:
        raise ValueError(f"left-region transition needs 0 <= s <= {q - 1}, got s={s}")
    if region == REGION_RIGHT and not q <= s <= p + q - 1:
        raise ValueError(f"right-region transition needs {q} <= s <= {p + q - 1}, got s={s}")


@dataclass(frozen=True)
class ABCoefficients:
    """Transition coefficients (a_i, b_i) for one s -> s+1 crossing.

    ``a`` is indexed by the strand a_i couples straight across; ``b`` by
    the strand it shifts.  Out-of-range indices read as 0, which encodes
    the annihilation/truncation rules uniformly.
    """

    s: int
    region: str
    variant: str
    a: tuple[float, ...]
    b: tuple[float, ...]

    def a_at(self, i: int) -> float:
        return self.a[i - 1] if 1 <= i <= len(self.a) else 0.0

    def b_at(self, i: int) -> float:
        return self.b[i - 1] if 1 <= i <= len(self.b) else 0.0


@lru_cache(maxsize=None)
def _ab_cached(label: RepLabel, s: int, region: str, t: float, variant: str) -> ABCoefficients:
    p, q = label.p, label.q
    if variant == "numeric_solver":
        return solve_ab_numeric(label, s, region, t)
    if region == REGION_LEFT:
        a = tuple(_a_closed_left(p, q, s, i, t, variant) for i in range(1, s + 3))
        b = tuple(_b_closed_left(p, q, s, i, t, variant) for i in range(1, s + 2))
    else:
        n = min(q + 1, p + q - s)
        a = tuple(_a_closed_right(p, q, s, i, t) for i in range(1, n + 2))
        b = tuple(_b_closed_right(p, q, s, i, t, variant) for i in range(1, n + 1))
    return ABCoefficients(s=s, region=region, variant=variant, a=a, b=b)


def ab_coefficients(label: RepLabel, s: int, region: str, t: float,
                    variant: str = "closed_form_a") -> ABCoefficients:
    """Coefficients (a_i, b_i) of the bidiagonal s -> s+1 blocks.

    ``variant`` selects one of the two closed-form families or the
    numeric solver (see module docstring).
    """
    _check_region(label, s, region)
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    return _ab_cached(label, s, region, t, variant)


# --------------------------------------------------------------------------
# boundary-column lists and their k-dependent products
# --------------------------------------------------------------------------
#
# The first and last columns of the per-point rotation between the two
# strand bases factor into a k-independent list (l_i, m_i, one pair per
# line) times a product of brackets depending on k.  The left-region
# lists are stored with argument s = line-1; the right-region lists are
# the left ones under the mirror (p, q, s) -> (p+q-line, line, q-1) with
# an alternating overall sign.

def _left_l(p: int, q: int, s: int, i: int, t: float) -> float:
    if s < 0:  # line 0 carries the empty list convention [1]
        return 1.0 if i == 1 else 0.0
    if not 1 <= i <= s + 2:
        return 0.0
    num = ([s + 1 - u for u in range(i - 1)]
           + [q - s + u for u in range(i - 1)]
           + list(range(p + q - s + 1, p + q + 3 - i)))
    den = (list(range(1, i))
           + [p + s + 3 - i - u for u in range(i - 1)]
           + list(range(p + 2 - i, p + s + 4 - 2 * i)))
    nm = _bracket_prod(num, t)
    if nm == 0.0:
        return 0.0
    return math.sqrt(nm / _bracket_prod(den, t))


def _left_m(p: int, q: int, s: int, i: int, t: float) -> float:
    if s < 0:
        return 1.0 if i == 1 else 0.0
    if not 1 <= i <= s + 2:
        return 0.0
    num = ([s + 1 - u for u in range(i - 1)]
           + [p + q + 1 - u for u in range(i - 1)]
           + list(range(q - s + i - 1, q + 1)))
    den = (list(range(1, i))
           + [p + s + 3 - i - u for u in range(i - 1)]
           + list(range(p + 2 - i, p + s + 4 - 2 * i)))
    nm = _bracket_prod(num, t)
    if nm == 0.0:
        return 0.0
    return (-1) ** (i - 1) * math.sqrt(nm / _bracket_prod(den, t))


def _right_l(p: int, q: int, line: int, i: int, t: float) -> float:
    if not 1 <= i <= 1 + min(q, p + q - line):  # strand count of the line
        return 0.0
    return (-1) ** (line - q) * _left_l(p + q - line, line, q - 1, i, t)


def _right_m(p: int, q: int, line: int, i: int, t: float) -> float:
    if not 1 <= i <= 1 + min(q, p + q - line):
        return 0.0
    return (-1) ** (line - q) * _left_m(p + q - line, line, q - 1, i, t)


def _col_prod(num, den, t: float) -> float:
    nm = _bracket_prod(num, t)
    if nm == 0.0:
        return 0.0
    return math.sqrt(nm / _bracket_prod(den, t))


def _mcol_left(p: int, q: int, s: int, k: int, r: int, t: float) -> float:
    # first-column product at point k of left line s+1 (list argument s)
    num = [k - u for u in range(r - 1)] + [p - k + v for v in range(1, s + 3 - r)]
    den = [q + k - v for v in range(s + 1)]
    return _col_prod(num, den, t)


def _lcol_left(p: int, q: int, s: int, k: int, r: int, t: float) -> float:
    num = ([p + s - k + 1 - v for v in range(r - 1)]
           + [k - u for u in range(r - 1, s + 1)])
    den = [q + k - s - v for v in range(s + 1)]
    return _col_prod(num, den, t)


def _mcol_right(p: int, q: int, line: int, k: int, r: int, t: float) -> float:
    num = ([k + q - line - u for u in range(r - 1)]
           + [p - k + v for v in range(1, q + 2 - r)])
    den = [q + k - v for v in range(q)]
    return _col_prod(num, den, t)


def _lcol_right(p: int, q: int, line: int, k: int, r: int, t: float) -> float:
    num = ([p + q - k - v for v in range(r - 1)]
           + [k - (line - q) - u for u in range(r - 1, q)])
    den = [k + 1 - v for v in range(q)]
    return _col_prod(num, den, t)


# --------------------------------------------------------------------------
# generator blocks
# --------------------------------------------------------------------------

def lambda_block(diagram: Diagram, s: int, k: int, t: float) -> np.ndarray:
    """Block of the first lowering operator from (k, s) to (k+1, s).

    Shape (mult(k+1, s), mult(k, s)); entry (i, i) is the canonical
    string element of strand i at its local depth.  Strands that start or
    end between the two points appear only through the rectangular shape.
    """
    if not (diagram.has_point(k, s) and diagram.has_point(k + 1, s)):
        raise ValueError(f"no edge (k={k}, s={s}) -> (k+1, s) in the diagram")
    m_to, m_from = diagram.mult(k + 1, s), diagram.mult(k, s)
    L = diagram.L_top(s)
    d = k - diagram.k_top(s)
    B = np.zeros((m_to, m_from))
    for i in range(1, min(m_to, m_from) + 1):
        P = L - 2 * (i - 1)
        j = d - (i - 1)
        B[i - 1, i - 1] = a1_element(P, j, t)
    return B


def l_block(diagram: Diagram, k: int, s: int, t: float,
            variant: str = "closed_form_a") -> np.ndarray:
    """Block of the second lowering operator from (k, s) to (k, s+1).

    Shape (mult(k, s+1), mult(k, s)).  Left region: lower-bidiagonal,
    (i, i) = a_i sqrt([p+s+2-k-i]) and (i+1, i) = b_i sqrt([k+1-i]).
    Right region: upper-bidiagonal, (i, i) = b_i sqrt([q+k+1-s-i]) and
    (i, i+1) = a_{i+1} sqrt([p+q+1-k-i]).  Entries whose bracket argument
    is nonpositive vanish; rows/columns beyond the point multiplicities
    are truncated.
    """
    if not (diagram.has_point(k, s) and diagram.has_point(k, s + 1)):
        raise ValueError(f"no edge (k={k}, s={s}) -> (k, s+1) in the diagram")
    label = diagram.label
    p, q = label.p, label.q
    region = REGION_LEFT if s <= q - 1 else REGION_RIGHT
    ab = ab_coefficients(label, s, region, t, variant)
    m_to, m_from = diagram.mult(k, s + 1), diagram.mult(k, s)
    B = np.zeros((m_to, m_from))
    if region == REGION_LEFT:
        for i in range(1, m_from + 1):
            if i <= m_to:
                arg = p + s + 2 - k - i
                if arg > 0:
                    B[i - 1, i - 1] = ab.a_at(i) * math.sqrt(norm_bracket(arg, t))
            if i + 1 <= m_to:
                arg = k + 1 - i
                if arg > 0:
                    B[i, i - 1] = ab.b_at(i) * math.sqrt(norm_bracket(arg, t))
    else:
        for i in range(1, m_to + 1):
            if i <= m_from:
                arg = q + k + 1 - s - i
                if arg > 0:
                    B[i - 1, i - 1] = ab.b_at(i) * math.sqrt(norm_bracket(arg, t))
            if i + 1 <= m_from:
                arg = p + q + 1 - k - i
                if arg > 0:
                    B[i - 1, i] = ab.a_at(i + 1) * math.sqrt(norm_bracket(arg, t))
    return B


def q_line_element(diagram: Diagram, k: int, s: int, iota: int, t: float) -> float:
    """Outgoing string element of slant-line strand iota at (k, s) -> (k, s+1).

    Zero when the strand is absent or ends at (k, s).
    """
    e = s - diagram.s_top(k)
    Q = diagram.Q_top(k) - 2 * (iota - 1)
    j = e - (iota - 1)
    if 0 <= j <= Q - 1:
        return a1_element(Q, j, t)
    return 0.0


def gram_block(label: RepLabel, k: int, s: int, t: float) -> np.ndarray:
    """Source-side Gram matrix LᵀL of the s -> s+1 block at (k, s).

    Built directly from the closed-form tridiagonal entries, NOT by
    multiplying ``l_block`` outputs -- it is an independent formula path
    whose eigenvalues must reproduce the squared outgoing slant-line
    elements at (k, s).
    """
    diagram = build_diagram(label)
    if not (diagram.has_point(k, s) and diagram.has_point(k, s + 1)):
        raise ValueError(f"no edge (k={k}, s={s}) -> (k, s+1) in the diagram")
    p, q = label.p, label.q
    region = REGION_LEFT if s <= q - 1 else REGION_RIGHT
    ab = ab_coefficients(label, s, region, t, "closed_form_a")
    m = diagram.mult(k, s)
    G = np.zeros((m, m))

    def nb0(arg):
        return norm_bracket(arg, t) if arg > 0 else 0.0

    if region == REGION_LEFT:
        for i in range(1, m + 1):
            G[i - 1, i - 1] = (ab.a_at(i) ** 2 * nb0(p + s + 2 - k - i)
                               + ab.b_at(i) ** 2 * nb0(k + 1 - i))
        for i in range(1, m):
            off = ab.b_at(i) * ab.a_at(i + 1) * math.sqrt(
                nb0(k + 1 - i) * nb0(p + s + 1 - k - i))
            G[i - 1, i] = G[i, i - 1] = off
    else:
        for j in range(1, m + 1):
            G[j - 1, j - 1] = (ab.b_at(j) ** 2 * nb0(q + k + 1 - s - j)
                               + ab.a_at(j) ** 2 * nb0(p + q + 2 - k - j))
        for j in range(1, m):
            off = ab.b_at(j) * ab.a_at(j + 1) * math.sqrt(
                nb0(q + k + 1 - s - j) * nb0(p + q + 1 - k - j))
            G[j - 1, j] = G[j, j - 1] = off
    return G


# --------------------------------------------------------------------------
# rotation columns
# --------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _rotations(label: RepLabel, t: float) -> dict:
    """Rotation matrix at every point, built by marching up each slant line.

    Columns express the slant-line strand basis in the vertical-line
    strand basis.  Continuing strands propagate through the l-blocks;
    a newborn strand gets the orthogonal complement, signed so its last
    nonvanishing component is positive.
    """
    dg = build_diagram(label)
    p, q = label.p, label.q
    O: dict[tuple[int, int], np.ndarray] = {}
    for k in range(0, p + q + 1):
        s0, s1 = dg.s_top(k), dg.s_bot(k)
        O[(k, s0)] = np.array([[1.0]])
        for s in range(s0, s1):
            m_from, m_to = dg.mult(k, s), dg.mult(k, s + 1)
            Lb = l_block(dg, k, s, t, "closed_form_a")
            On = np.zeros((m_to, m_to))
            ncont = 0
            for iota in range(1, m_from + 1):
                lam = q_line_element(dg, k, s, iota, t)
                if lam > 1e-14:
                    On[:, iota - 1] = Lb @ O[(k, s)][:, iota - 1] / lam
                    ncont = iota
            if ncont not in (m_to, m_to - 1):
                raise RuntimeError(f"strand bookkeeping failed at (k={k}, s={s})")
            if ncont == m_to - 1:
                Qf, _ = np.linalg.qr(On[:, :ncont], mode="complete")
                v = Qf[:, ncont]
                nz = np.flatnonzero(np.abs(v) > 1e-9)
                if v[nz[-1]] < 0:
                    v = -v
                On[:, m_to - 1] = v
            err = np.abs(On.T @ On - np.eye(m_to)).max()
            if err > 1e-8:
                raise RuntimeError(
                    f"rotation at (k={k}, s={s + 1}) lost orthogonality ({err:.2e})")
            O[(k, s + 1)] = On
    return O


@dataclass(frozen=True)
class BoundaryColumns:
    """First/last rotation columns at a point, with their line-level lists."""

    k: int
    s: int
    region: str
    l: tuple[float, ...]
    m: tuple[float, ...]
    first_column: np.ndarray
    last_column: np.ndarray


def boundary_columns(label: RepLabel, k: int, s: int, region: str, t: float) -> BoundaryColumns:
    """Boundary columns of the rotation at (k, s).

    The lists (l_i, m_i) depend only on the line s; the columns multiply
    each list entry by a k-dependent bracket product.  On the fully
    layered window s <= k <= p the product is evaluated in closed form;
    elsewhere the columns come from the slant-line recursion.
    """
    p, q = label.p, label.q
    if region not in (REGION_LEFT, REGION_RIGHT):
        raise ValueError(f"unknown region {region!r}")
    if region == REGION_LEFT and s > q:
        raise ValueError(f"line s={s} is not in the left region (q={q})")
    if region == REGION_RIGHT and s < q:
        raise ValueError(f"line s={s} is not in the right region (q={q})")
    dg = build_diagram(label)
    if not dg.has_point(k, s):
        raise ValueError(f"no point (k={k}, s={s}) in the diagram")
    n = dg.n_strands(s)
    if region == REGION_LEFT:
        l_list = tuple(_left_l(p, q, s - 1, i, t) for i in range(1, n + 1))
        m_list = tuple(_left_m(p, q, s - 1, i, t) for i in range(1, n + 1))
    else:
        l_list = tuple(_right_l(p, q, s, i, t) for i in range(1, n + 1))
        m_list = tuple(_right_m(p, q, s, i, t) for i in range(1, n + 1))
    mult = dg.mult(k, s)
    if s <= k <= p and mult == n:
        if region == REGION_LEFT:
            first = np.array([m_list[r - 1] * _mcol_left(p, q, s - 1, k, r, t)
                              for r in range(1, mult + 1)])
            last = np.array([l_list[r - 1] * _lcol_left(p, q, s - 1, k, r, t)
                             for r in range(1, mult + 1)])
        else:
            first = np.array([m_list[r - 1] * _mcol_right(p, q, s, k, r, t)
                              for r in range(1, mult + 1)])
            last = np.array([l_list[r - 1] * _lcol_right(p, q, s, k, r, t)
                             for r in range(1, mult + 1)])
    else:
        Om = _rotations(label, t)[(k, s)]
        first = Om[:, 0].copy()
        last = Om[:, -1].copy()
    return BoundaryColumns(k=k, s=s, region=region, l=l_list, m=m_list,
                           first_column=first, last_column=last)


# --------------------------------------------------------------------------
# numeric arbitration solver
# --------------------------------------------------------------------------

def solve_ab_numeric(label: RepLabel, s: int, region: str, t: float) -> ABCoefficients:
    """Recover (a_i, b_i) from the boundary lists alone.

    Left region: the lists of lines s and s+1 satisfy one proportionality
    identity (a_i l_i + b_i l_{i+1} = 0) and one three-term recurrence in
    m, which solve the chain a_1 -> b_1 -> a_2 -> ... directly.

    Right region: for each i the pair (b_i, a_{i+1}) satisfies one
    k-independent m-recurrence plus an l-recurrence linear in the
    brackets of k; sampling the latter at two k values gives an
    overdetermined 3x2 system solved by least squares (a_1 = 0 is
    automatic).  Raises ArithmeticError naming (s, i) if a pivot or the
    system degenerates.
    """
    _check_region(label, s, region)
    p, q = label.p, label.q
    rt = math.sqrt(norm_bracket(s + 1, t))

    if region == REGION_LEFT:
        m_hi = [_left_m(p, q, s, i, t) for i in range(1, s + 4)]       # line s+1
        m_lo = [_left_m(p, q, s - 1, i, t) for i in range(1, s + 4)]   # line s
        l_hi = [_left_l(p, q, s, i, t) for i in range(1, s + 4)]
        a = [0.0] * (s + 2)
        b = [0.0] * (s + 1)
        if abs(m_lo[0]) < _DEGENERATE:
            raise ArithmeticError(f"degenerate list pivot at (s={s}, i=1)")
        a[0] = rt * m_hi[0] / m_lo[0]
        for i in range(1, s + 2):  # solve (b_i, a_{i+1}) in order
            if abs(l_hi[i]) < _DEGENERATE:
                raise ArithmeticError(f"degenerate list pivot at (s={s}, i={i + 1})")
            b[i - 1] = -a[i - 1] * l_hi[i - 1] / l_hi[i]
            if i + 1 <= s + 1:
                if abs(m_lo[i]) < _DEGENERATE:
                    raise ArithmeticError(f"degenerate list pivot at (s={s}, i={i + 1})")
                a[i] = (rt * m_hi[i] - b[i - 1] * m_lo[i - 1]) / m_lo[i]
        # the last m-recurrence is not used to solve anything: it is a
        # consistency check on the whole chain
        resid = abs(rt * m_hi[s + 2] - b[s] * m_lo[s + 1])
        if resid > 1e-6:
            raise ArithmeticError(
                f"inconsistent coefficient chain at (s={s}, i={s + 2}): {resid:.2e}")
        return ABCoefficients(s=s, region=region, variant="numeric_solver",
                              a=tuple(a), b=tuple(b))

    n = min(q + 1, p + q - s)
    m_lo = [_right_m(p, q, s, i, t) for i in range(1, n + 2)]      # line s
    m_hi = [_right_m(p, q, s + 1, i, t) for i in range(1, n + 1)]  # line s+1
    l_lo = [_right_l(p, q, s, i, t) for i in range(1, n + 2)]
    l_hi = [_right_l(p, q, s + 1, i, t) for i in range(1, n + 1)]
    rt2 = math.sqrt(norm_bracket(s - q + 1, t))
    a = [0.0] * (n + 1)
    b = [0.0] * n
    for i in range(1, n + 1):
        rows = [[m_lo[i - 1], m_lo[i]]]
        rhs = [rt * m_hi[i - 1]]
        for k in (s + 1, s + 2):
            rows.append([norm_bracket(q + k + 1 - s - i, t) * l_lo[i - 1],
                         norm_bracket(p + q + 1 - k - i, t) * l_lo[i]])
            rhs.append(norm_bracket(k - s, t) * rt2 * l_hi[i - 1])
        A = np.array(rows)
        y = np.array(rhs)
        sol, *_ = np.linalg.lstsq(A, y, rcond=None)
        resid = np.abs(A @ sol - y).max()
        if resid > 1e-6 * (1.0 + np.abs(y).max()):
            raise ArithmeticError(
                f"degenerate coefficient system at (s={s}, i={i}): residual {resid:.2e}")
        b[i - 1], a[i] = float(sol[0]), float(sol[1])
    return ABCoefficients(s=s, region=region, variant="numeric_solver",
                          a=tuple(a), b=tuple(b))
