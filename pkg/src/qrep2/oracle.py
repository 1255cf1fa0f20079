"""Independent ground-truth constructions.

Two oracles, deliberately sharing no construction code with the diagram
or block layers (only the bracket arithmetic and the GeneratorSet
container are reused):

* ``gt_enumerate`` -- classical state counting from interlacing patterns;
  fixes dimensions and weight multiplicities exactly.
* ``pbw_construct`` -- builds the representation brute-force from the
  highest-weight vector using nothing but the algebra relations: span
  candidate vectors X⁻_i * (states one level up), compute their Gram
  matrix by commuting raising operators through, orthonormalize, and
  read off matrix elements.  Works for any t at desk scale.

``invariant_compare`` then compares two constructions through
basis-independent data only (weights, trace invariants, singular value
multisets), which is what makes the oracle fit to arbitrate between
conflicting closed-form coefficient families.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .assembly import GeneratorSet
from .diagram import RepLabel
from .qnum import norm_bracket

__all__ = [
    "GTPattern",
    "InvariantComparison",
    "gt_enumerate",
    "invariant_compare",
    "pbw_construct",
]

PBW_DIM_CAP = 500


@dataclass(frozen=True)
class GTPattern:
    """Interlacing pattern m13 >= m12 >= m23 >= m22 >= m33, m12 >= m11 >= m22."""

    m13: int
    m23: int
    m33: int
    m12: int
    m22: int
    m11: int

    def weight(self) -> tuple[int, int]:
        top = self.m13 + self.m23 + self.m33
        return (2 * self.m11 - self.m12 - self.m22,
                2 * (self.m12 + self.m22) - self.m11 - top)


def gt_enumerate(label: RepLabel) -> list[GTPattern]:
    """All patterns with top row (p+q, q, 0), in lexicographic order."""
    p, q = label.p, label.q
    out = []
    for m12 in range(q, p + q + 1):
        for m22 in range(0, q + 1):
            for m11 in range(m22, m12 + 1):
                out.append(GTPattern(m13=p + q, m23=q, m33=0,
                                     m12=m12, m22=m22, m11=m11))
    return out


def pbw_construct(label: RepLabel, t: float) -> GeneratorSet:
    """Highest-weight construction from the relations alone.

    Proceeds level by level in the number of lowering steps (n1, n2).
    For each reachable weight the candidate vectors are X⁻_i applied to
    the orthonormal states one level up; their Gram matrix follows from
    [X⁺_i, X⁻_j] = δ_ij [h_i] and the known matrix elements of the upper
    levels.  Eigenvectors above the pivot cutoff become the new
    orthonormal states.
    """
    p, q = label.p, label.q
    dim_bound = (p + 1) * (q + 1) * (p + q + 2) // 2
    if dim_bound > PBW_DIM_CAP:
        raise ValueError(f"dimension {dim_bound} exceeds oracle cap {PBW_DIM_CAP}")

    def h_at(n1: int, n2: int) -> tuple[int, int]:
        return (p - 2 * n1 + n2, q + n1 - 2 * n2)

    spaces: dict[tuple[int, int], int] = {(0, 0): 1}
    elem = {1: {}, 2: {}}  # elem[i][W]: X⁻_i matrix from (W - e_i) into W
    for lev in range(1, 2 * (p + q) + 2):
        new = {}
        for n1 in range(0, lev + 1):
            n2 = lev - n1
            srcs = []
            if spaces.get((n1 - 1, n2), 0) > 0:
                srcs.append((1, (n1 - 1, n2)))
            if spaces.get((n1, n2 - 1), 0) > 0:
                srcs.append((2, (n1, n2 - 1)))
            if not srcs:
                continue
            sizes = [spaces[U] for (_, U) in srcs]
            offs = np.concatenate([[0], np.cumsum(sizes)])
            tot = int(offs[-1])
            G = np.zeros((tot, tot))
            for ai, (i, U) in enumerate(srcs):
                for bi, (j, V) in enumerate(srcs):
                    # <X⁻_i u_a, X⁻_j v_b> = (X⁻_j into U)(X⁻_i into V)ᵀ
                    #                        + δ_ij δ_ab [h_i(V)]
                    blk = np.zeros((sizes[ai], sizes[bi]))
                    MjU = elem[j].get(U)
                    MiV = elem[i].get(V)
                    if MjU is not None and MiV is not None and MjU.size and MiV.size:
                        blk = MjU @ MiV.T
                    if i == j:
                        blk = blk + np.eye(sizes[ai]) * norm_bracket(h_at(*V)[i - 1], t)
                    G[offs[ai]:offs[ai + 1], offs[bi]:offs[bi + 1]] = blk
            w, vec = np.linalg.eigh(G)
            cut = 1e-8 * max(float(G.diagonal().max(initial=0.0)), 1.0)
            keep = w > cut
            m = int(keep.sum())
            if m == 0:
                continue
            T = vec[:, keep] / np.sqrt(w[keep])
            new[(n1, n2)] = m
            for ai, (i, U) in enumerate(srcs):
                elem[i][(n1, n2)] = T.T @ G[:, offs[ai]:offs[ai + 1]]
        spaces.update(new)
        if not new:
            break

    order = sorted(spaces, key=lambda W: (W[0] + W[1], W[0]))
    gidx = {}
    n = 0
    for W in order:
        for i in range(spaces[W]):
            gidx[(W, i)] = n
            n += 1
    h1 = np.zeros(n, dtype=np.int64)
    h2 = np.zeros(n, dtype=np.int64)
    xm1 = np.zeros((n, n))
    xm2 = np.zeros((n, n))
    for W in order:
        hh = h_at(*W)
        for i in range(spaces[W]):
            h1[gidx[(W, i)]], h2[gidx[(W, i)]] = hh
        for i, xm in ((1, xm1), (2, xm2)):
            U = (W[0] - (i == 1), W[1] - (i == 2))
            M = elem[i].get(W)
            if M is None or U not in spaces:
                continue
            for r in range(M.shape[0]):
                for c in range(M.shape[1]):
                    xm[gidx[(W, r)], gidx[(U, c)]] = M[r, c]
    return GeneratorSet(label=label, t=t, h1=h1, h2=h2,
                        xp1=xm1.T.copy(), xm1=xm1,
                        xp2=xm2.T.copy(), xm2=xm2,
                        basis=None, variant=None)


@dataclass(frozen=True)
class InvariantComparison:
    dim: int
    weights_equal: bool
    trace_residual: float
    sv_residual: float
    tol: float

    @property
    def passed(self) -> bool:
        return (self.weights_equal and self.trace_residual <= self.tol
                and self.sv_residual <= self.tol)

    def to_dict(self) -> dict:
        return {"dim": self.dim, "weights_equal": self.weights_equal,
                "trace_residual": self.trace_residual,
                "sv_residual": self.sv_residual,
                "tol": self.tol, "passed": self.passed}


def invariant_compare(g1: GeneratorSet, g2: GeneratorSet,
                      tol: float = 1e-9) -> InvariantComparison:
    """Basis-independent comparison of two generator sets.

    Compares the weight multiset exactly and, relatively to 1+|value|,
    the traces of (X⁺₁X⁻₁)ⁿ, (X⁺₂X⁻₂)ⁿ, (X⁺₁X⁺₂X⁻₂X⁻₁)ⁿ for n = 1..3
    and the singular-value multisets of the two lowering operators.
    Dimension mismatch is a hard error, not a failed comparison.
    """
    if g1.dim != g2.dim:
        raise ValueError(f"dimension mismatch: {g1.dim} vs {g2.dim}")
    w1 = sorted(zip(g1.h1.tolist(), g1.h2.tolist()))
    w2 = sorted(zip(g2.h1.tolist(), g2.h2.tolist()))
    weights_equal = w1 == w2

    def products(g):
        return (g.xp1 @ g.xm1, g.xp2 @ g.xm2,
                g.xp1 @ g.xp2 @ g.xm2 @ g.xm1)

    trace_residual = 0.0
    for M1, M2 in zip(products(g1), products(g2)):
        P1 = np.eye(g1.dim)
        P2 = np.eye(g2.dim)
        for _ in range(3):
            P1 = P1 @ M1
            P2 = P2 @ M2
            t1, t2 = float(np.trace(P1)), float(np.trace(P2))
            trace_residual = max(trace_residual, abs(t1 - t2) / (1.0 + abs(t1)))

    sv_residual = 0.0
    for A1, A2 in ((g1.xm1, g2.xm1), (g1.xm2, g2.xm2)):
        s1 = np.sort(np.linalg.svd(A1, compute_uv=False))
        s2 = np.sort(np.linalg.svd(A2, compute_uv=False))
        sv_residual = max(sv_residual,
                          float((np.abs(s1 - s2) / (1.0 + s1)).max()))

    return InvariantComparison(dim=g1.dim, weights_equal=weights_equal,
                               trace_residual=trace_residual,
                               sv_residual=sv_residual, tol=tol)
