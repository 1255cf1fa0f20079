import numpy as np
import pytest
from scipy.linalg import block_diag

from qrep2.assembly import GeneratorSet, assemble, perturbed
from qrep2.diagram import RepLabel
from qrep2.verify import (check_columns_and_spectra, check_defining_relations,
                          check_irreducibility, check_recursion,
                          verify_representation)


@pytest.mark.parametrize("p,q,t", [(1, 0, 0.0), (2, 1, 0.3), (2, 2, 1.0)])
def test_defining_relations_pass(p, q, t):
    rep = check_defining_relations(assemble(RepLabel.of(p, q), t))
    assert rep.passed, rep.worst()
    cartan = next(c for c in rep.checks if c.name == "cartan_adjoint")
    assert cartan.residual == 0.0  # integer bookkeeping, no tolerance


def test_defining_relations_tight_when_undeformed():
    rep = check_defining_relations(assemble(RepLabel.of(2, 2), 0.0))
    assert rep.worst().residual < 1e-12


def test_recursion_vacuous_on_fundamental():
    rep = check_recursion(RepLabel.of(1, 0), 0.0)
    assert rep.passed and rep.worst().residual == 0.0


def test_recursion_undeformed():
    rep = check_recursion(RepLabel.of(2, 1), 0.0)
    assert rep.passed and rep.worst().residual < 1e-12


def test_recursion_deformed():
    rep = check_recursion(RepLabel.of(3, 2), 0.7)
    assert rep.passed and rep.worst().residual < 1e-9


@pytest.mark.parametrize("p,q,t", [(2, 1, 0.3), (2, 2, 1.0), (3, 2, 0.0)])
def test_columns_and_spectra(p, q, t):
    rep = check_columns_and_spectra(RepLabel.of(p, q), t)
    assert rep.passed, rep.worst()
    names = {c.name for c in rep.checks}
    assert {"lk1", "lk2", "lk3", "column_norms",
            "column_ratios", "gram_spectra"} <= names


def test_irreducibility():
    ok, rank = check_irreducibility(assemble(RepLabel.of(1, 0), 0.0))
    assert ok and rank == 3
    ok, rank = check_irreducibility(assemble(RepLabel.of(1, 1), 0.5))
    assert ok and rank == 8


def test_reducible_direct_sum_detected():
    g = assemble(RepLabel.of(1, 0), 0.0)
    two = GeneratorSet(label=g.label, t=g.t,
                       h1=np.concatenate([g.h1, g.h1]),
                       h2=np.concatenate([g.h2, g.h2]),
                       xp1=block_diag(g.xp1, g.xp1), xm1=block_diag(g.xm1, g.xm1),
                       xp2=block_diag(g.xp2, g.xp2), xm2=block_diag(g.xm2, g.xm2),
                       basis=None, variant=None)
    ok, rank = check_irreducibility(two)
    assert not ok and rank == 3  # the orbit never leaves the first copy


def test_corrupted_entry_is_caught():
    g = assemble(RepLabel.of(2, 1), 0.3)
    r, c = next(zip(*np.nonzero(g.xm2)))
    gp = perturbed(g, "xm2", int(r), int(c), 1e-3)
    rep = check_defining_relations(gp)
    assert not rep.passed
    mixed = [c for c in rep.checks if c.name.startswith("mixed")]
    pairs = [c for c in rep.checks if c.name.startswith("cartan_pair")]
    assert max(c.residual for c in mixed + pairs) > 1e-4


def test_full_suite_structure():
    reports = verify_representation(assemble(RepLabel.of(2, 1), 0.3))
    assert len(reports) == 4
    assert all(r.passed for r in reports)
    assert reports[-1].checks[0].name == "irreducibility"
