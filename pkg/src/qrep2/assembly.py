"""Global basis enumeration and generator assembly.

The global basis is one state per (point, strand) pair, ordered
lexicographically by (s, k, strand).  In this basis:

* h1, h2 are integer diagonal (the point weights),
* the first lowering operator is block rectangular-diagonal
  ((k, s) -> (k+1, s) blocks from ``lambda_block``),
* the second lowering operator is block bidiagonal
  ((k, s) -> (k, s+1) blocks from ``l_block``),
* raising operators are exact transposes.

Matrices are stored dense (the largest diagram at desk scale is a few
hundred states); serialization writes sparse coordinate triplets.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from pathlib import Path

import numpy as np
import scipy.io
import scipy.sparse

from .diagram import RepLabel, build_diagram
from .primitive import l_block, lambda_block

__all__ = [
    "BasisIndex",
    "GeneratorSet",
    "assemble",
    "cartan_R",
    "enumerate_basis",
    "load_json",
    "save_json",
    "save_matrix_market",
    "to_manifest",
]

GENERATOR_NAMES = ("h1", "h2", "xp1", "xm1", "xp2", "xm2")


@dataclass(frozen=True)
class BasisIndex:
    """Bidirectional map between (k, s, strand) states and 0..dim-1."""

    states: tuple[tuple[int, int, int], ...]
    position: dict[tuple[int, int, int], int] = field(repr=False)

    def __len__(self) -> int:
        return len(self.states)

    def index_of(self, k: int, s: int, strand: int) -> int:
        return self.position[(k, s, strand)]

    def state_of(self, index: int) -> tuple[int, int, int]:
        return self.states[index]


def enumerate_basis(label: RepLabel) -> BasisIndex:
    dg = build_diagram(label)
    states = []
    for s in dg.s_values():
        for k in range(dg.k_top(s), dg.k_bot(s) + 1):
            for strand in range(1, dg.mult(k, s) + 1):
                states.append((k, s, strand))
    return BasisIndex(states=tuple(states),
                      position={st: i for i, st in enumerate(states)})


@dataclass(frozen=True)
class GeneratorSet:
    """The six generator matrices of one representation.

    ``basis`` is None for constructions that use their own internal basis
    (e.g. the highest-weight oracle); all consumers that only need the
    matrices, label and t accept that.
    """

    label: RepLabel
    t: float
    h1: np.ndarray
    h2: np.ndarray
    xp1: np.ndarray
    xm1: np.ndarray
    xp2: np.ndarray
    xm2: np.ndarray
    basis: BasisIndex | None = None
    variant: str | None = None

    @property
    def dim(self) -> int:
        return self.h1.shape[0]


def assemble(label: RepLabel, t: float, variant: str = "closed_form_a") -> GeneratorSet:
    """Assemble the full generator set for a label.

    ``variant`` selects the coefficient family for the s -> s+1 blocks
    (see primitive module); the k -> k+1 blocks are variant-independent.
    """
    if t < 0:
        raise ValueError("deformation parameter t must be >= 0")
    dg = build_diagram(label)
    basis = enumerate_basis(label)
    n = len(basis)
    h1 = np.zeros(n, dtype=np.int64)
    h2 = np.zeros(n, dtype=np.int64)
    for (k, s, _), g in basis.position.items():
        h1[g], h2[g] = dg.weight(k, s)
    xm1 = np.zeros((n, n))
    xm2 = np.zeros((n, n))
    for s in dg.s_values():
        for k in range(dg.k_top(s), dg.k_bot(s) + 1):
            if k + 1 <= dg.k_bot(s):
                B = lambda_block(dg, s, k, t)
                for r in range(B.shape[0]):
                    for c in range(B.shape[1]):
                        if B[r, c] != 0.0:
                            xm1[basis.index_of(k + 1, s, r + 1),
                                basis.index_of(k, s, c + 1)] = B[r, c]
            if dg.has_point(k, s + 1):
                B = l_block(dg, k, s, t, variant)
                for r in range(B.shape[0]):
                    for c in range(B.shape[1]):
                        if B[r, c] != 0.0:
                            xm2[basis.index_of(k, s + 1, r + 1),
                                basis.index_of(k, s, c + 1)] = B[r, c]
    return GeneratorSet(label=label, t=t, h1=h1, h2=h2,
                        xp1=xm1.T.copy(), xm1=xm1,
                        xp2=xm2.T.copy(), xm2=xm2,
                        basis=basis, variant=variant)


def cartan_R(gen: GeneratorSet, i: int) -> np.ndarray:
    """Diagonal group-like element exp(t * h_i), i in {1, 2}."""
    if i not in (1, 2):
        raise ValueError("i must be 1 or 2")
    h = gen.h1 if i == 1 else gen.h2
    return np.diag(np.exp(gen.t * h.astype(float)))


# --------------------------------------------------------------------------
# serialization
# --------------------------------------------------------------------------

def _triplets(M: np.ndarray) -> list[dict]:
    rows, cols = np.nonzero(M)
    return [{"row": int(r), "col": int(c), "value": float(M[r, c])}
            for r, c in zip(rows.tolist(), cols.tolist())]


def _as_matrix(gen: GeneratorSet, name: str) -> np.ndarray:
    M = getattr(gen, name)
    if M.ndim == 1:  # h1/h2 are stored as diagonals
        return np.diag(M.astype(float))
    return M


def to_manifest(gen: GeneratorSet) -> dict:
    """JSON-ready dict: label, t, dim, basis table, sparse triplets."""
    if gen.basis is None:
        raise ValueError("generator set has no basis table to serialize")
    return {
        "label": {"p": gen.label.p, "q": gen.label.q},
        "t": gen.t,
        "dim": gen.dim,
        "basis": [{"k": k, "s": s, "strand": i, "index": g}
                  for g, (k, s, i) in enumerate(gen.basis.states)],
        "generators": {name: _triplets(_as_matrix(gen, name))
                       for name in GENERATOR_NAMES},
    }


def save_json(gen: GeneratorSet, path: str | Path) -> Path:
    path = Path(path)
    with open(path, "w") as fh:
        json.dump(to_manifest(gen), fh, indent=1)
        fh.write("\n")
    return path


def load_json(path: str | Path) -> GeneratorSet:
    """Rebuild a GeneratorSet from its JSON manifest, bit-exactly."""
    with open(path) as fh:
        doc = json.load(fh)
    label = RepLabel.of(int(doc["label"]["p"]), int(doc["label"]["q"]))
    n = int(doc["dim"])
    states = [None] * n
    for row in doc["basis"]:
        states[int(row["index"])] = (int(row["k"]), int(row["s"]), int(row["strand"]))
    basis = BasisIndex(states=tuple(states),
                       position={st: i for i, st in enumerate(states)})
    mats = {}
    for name in GENERATOR_NAMES:
        M = np.zeros((n, n))
        for tri in doc["generators"][name]:
            M[int(tri["row"]), int(tri["col"])] = float(tri["value"])
        mats[name] = M
    h1 = np.diag(mats["h1"]).astype(np.int64)
    h2 = np.diag(mats["h2"]).astype(np.int64)
    return GeneratorSet(label=label, t=float(doc["t"]), h1=h1, h2=h2,
                        xp1=mats["xp1"], xm1=mats["xm1"],
                        xp2=mats["xp2"], xm2=mats["xm2"],
                        basis=basis)


def save_matrix_market(gen: GeneratorSet, stem: str | Path) -> list[Path]:
    """Write one coordinate-format .mtx file per generator.

    Doubles are written with 17 significant digits, enough to round-trip
    exactly.
    """
    stem = Path(stem)
    written = []
    for name in GENERATOR_NAMES:
        M = scipy.sparse.coo_matrix(_as_matrix(gen, name))
        path = stem.with_name(f"{stem.name}.{name}.mtx")
        scipy.io.mmwrite(path, M, precision=17)
        written.append(path)
    return written


def perturbed(gen: GeneratorSet, which: str, row: int, col: int, eps: float) -> GeneratorSet:
    """Copy with one lowering-operator entry shifted by eps (transpose kept
    consistent).  Used by the fault-injection sensitivity tests."""
    if which not in ("xm1", "xm2"):
        raise ValueError("which must be 'xm1' or 'xm2'")
    M = getattr(gen, which).copy()
    M[row, col] += eps
    if which == "xm1":
        return replace(gen, xm1=M, xp1=M.T.copy())
    return replace(gen, xm2=M, xp2=M.T.copy())
