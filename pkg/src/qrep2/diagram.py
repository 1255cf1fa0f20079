"""Weight-diagram geometry for the label (p, q).

States of the irreducible representation (p, q) live on integer points
(k, s) of a hexagonal (generally: hexagon degenerating to triangle)
diagram:

* ``s`` indexes the lines along which the second lowering operator moves
  (s -> s+1), running 0 .. p+q.
* ``k`` indexes the lines along which the first lowering operator moves
  (k -> k+1 at fixed s).
* the weight of every state at (k, s) is (p - 2k + s, q + k - 2s).

A vertical line s carries between 1 and min(s, q, p+q-s)+1 parallel
"strands": nested rank-1 strings of lengths L_top(s), L_top(s)-2, ...
The number of strands through a given point is its multiplicity; interior
points of a hexagonal layer have one strand per layer.  The same picture
applies transposed to the slanted lines of constant k (the strings of the
second lowering operator), with (p, q, s) -> (q, p, k).

Every multiplicity computed from the layer picture is cross-checked at
build time against an independent count of Gelfand-Tsetlin patterns per
weight, so a geometry bug cannot silently propagate downstream.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

__all__ = [
    "RepLabel",
    "DiagramPoint",
    "Line",
    "Diagram",
    "build_diagram",
    "multiplicity",
    "dimension",
    "strand_structure",
]


@dataclass(frozen=True)
class RepLabel:
    """Highest-weight label (p, q), normalized so that q <= p.

    A label given with q > p is swapped on construction (the two are dual;
    the swap is recorded so callers can report it).
    """

    p: int
    q: int
    swapped: bool = False

    @staticmethod
    def of(p: int, q: int) -> "RepLabel":
        if not (isinstance(p, int) and isinstance(q, int)):
            raise ValueError("label entries must be integers")
        if p < 0 or q < 0:
            raise ValueError(f"label entries must be nonnegative, got ({p}, {q})")
        if q > p:
            return RepLabel(q, p, swapped=True)
        return RepLabel(p, q)


@dataclass(frozen=True)
class DiagramPoint:
    k: int
    s: int
    h1: int
    h2: int
    mult: int


@dataclass(frozen=True)
class Line:
    """One string-carrying line of the diagram (fixed s, or fixed k).

    ``top``/``bot`` bound the running coordinate on the line, ``length_top``
    is the longest (outermost) string length, and ``strands[i-1]`` is the
    length of strand i (nested strings shrink by 2 per layer).
    """

    top: int
    bot: int
    length_top: int
    strands: tuple[int, ...]


@dataclass(frozen=True)
class Diagram:
    label: RepLabel
    points: dict[tuple[int, int], DiagramPoint] = field(repr=False)
    p_lines: dict[int, Line] = field(repr=False)
    q_lines: dict[int, Line] = field(repr=False)

    # -- vertical (fixed s) geometry ------------------------------------
    def k_top(self, s: int) -> int:
        return max(0, s - self.label.q)

    def k_bot(self, s: int) -> int:
        return min(self.label.p + s, self.label.p + self.label.q)

    def L_top(self, s: int) -> int:
        p, q = self.label.p, self.label.q
        return p + s if s <= q else p + 2 * q - s

    def n_strands(self, s: int) -> int:
        p, q = self.label.p, self.label.q
        return 1 + min(s, q, p + q - s)

    def s_values(self) -> range:
        return range(0, self.label.p + self.label.q + 1)

    # -- slanted (fixed k) geometry -------------------------------------
    def s_top(self, k: int) -> int:
        return max(0, k - self.label.p)

    def s_bot(self, k: int) -> int:
        return min(self.label.p + self.label.q, k + self.label.q)

    def Q_top(self, k: int) -> int:
        p, q = self.label.p, self.label.q
        return q + k if k <= p else q + 2 * p - k

    def q_n_strands(self, k: int) -> int:
        p, q = self.label.p, self.label.q
        return 1 + min(k, p, p + q - k)

    # -- per-point data --------------------------------------------------
    def mult(self, k: int, s: int) -> int:
        d = k - self.k_top(s)
        L = self.L_top(s)
        if not 0 <= d <= L:
            raise ValueError(f"point (k={k}, s={s}) is outside the diagram")
        return min(d, L - d, self.n_strands(s) - 1) + 1

    def weight(self, k: int, s: int) -> tuple[int, int]:
        p, q = self.label.p, self.label.q
        return (p - 2 * k + s, q + k - 2 * s)

    def has_point(self, k: int, s: int) -> bool:
        return 0 <= s <= self.label.p + self.label.q and self.k_top(s) <= k <= self.k_bot(s)

    def dimension(self) -> int:
        return sum(pt.mult for pt in self.points.values())


def _gt_weight_counts(p: int, q: int) -> dict[tuple[int, int], int]:
    """Independent multiplicity count from Gelfand-Tsetlin interlacing.

    Patterns for top row (p+q, q, 0); the weight of a pattern in the
    (h1, h2) convention used here is (2m11 - m12 - m22,
    2(m12 + m22) - m11 - p - 2q).
    """
    counts: dict[tuple[int, int], int] = {}
    for m12 in range(q, p + q + 1):
        for m22 in range(0, q + 1):
            for m11 in range(m22, m12 + 1):
                w = (2 * m11 - m12 - m22, 2 * (m12 + m22) - m11 - p - 2 * q)
                counts[w] = counts.get(w, 0) + 1
    return counts


@lru_cache(maxsize=None)
def build_diagram(label: RepLabel) -> Diagram:
    """Construct the full point/line geometry for a label.

    Raises RuntimeError if the layer multiplicities disagree with the
    Gelfand-Tsetlin count for any weight (internal consistency check).
    """
    p, q = label.p, label.q
    dg = Diagram(label=label, points={}, p_lines={}, q_lines={})
    weight_mult: dict[tuple[int, int], int] = {}
    for s in dg.s_values():
        for k in range(dg.k_top(s), dg.k_bot(s) + 1):
            h1, h2 = dg.weight(k, s)
            m = dg.mult(k, s)
            key = (k, s)
            if key in dg.points:
                raise RuntimeError(f"duplicate point {key}")
            dg.points[key] = DiagramPoint(k=k, s=s, h1=h1, h2=h2, mult=m)
            if (h1, h2) in weight_mult:
                raise RuntimeError(f"weight {(h1, h2)} hit by two points")
            weight_mult[(h1, h2)] = m
        L = dg.L_top(s)
        dg.p_lines[s] = Line(
            top=dg.k_top(s),
            bot=dg.k_bot(s),
            length_top=L,
            strands=tuple(L - 2 * (i - 1) for i in range(1, dg.n_strands(s) + 1)),
        )
    for k in range(0, p + q + 1):
        Q = dg.Q_top(k)
        dg.q_lines[k] = Line(
            top=dg.s_top(k),
            bot=dg.s_bot(k),
            length_top=Q,
            strands=tuple(Q - 2 * (i - 1) for i in range(1, dg.q_n_strands(k) + 1)),
        )
    gt = _gt_weight_counts(p, q)
    if gt != weight_mult:
        bad = {w: (weight_mult.get(w), gt.get(w))
               for w in set(gt) | set(weight_mult)
               if gt.get(w) != weight_mult.get(w)}
        raise RuntimeError(f"layer multiplicities disagree with pattern count at {bad}")
    return dg


def multiplicity(label: RepLabel, k: int, s: int) -> int:
    return build_diagram(label).mult(k, s)


def dimension(label: RepLabel) -> int:
    p, q = label.p, label.q
    return (p + 1) * (q + 1) * (p + q + 2) // 2


def strand_structure(diagram: Diagram, s: int) -> tuple[int, ...]:
    """String lengths of the strands on vertical line s, outermost first."""
    if s not in diagram.p_lines:
        raise ValueError(f"no line s={s} in diagram for {diagram.label}")
    return diagram.p_lines[s].strands
