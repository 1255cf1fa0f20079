import math

import numpy as np
import pytest
from scipy.io import mmread

from qrep2.assembly import (GENERATOR_NAMES, assemble, cartan_R,
                            enumerate_basis, load_json, perturbed, save_json,
                            save_matrix_market, to_manifest)
from qrep2.diagram import RepLabel


def test_basis_sizes():
    assert len(enumerate_basis(RepLabel.of(1, 0))) == 3
    assert len(enumerate_basis(RepLabel.of(1, 1))) == 8
    assert len(enumerate_basis(RepLabel.of(2, 1))) == 15


def test_basis_repeated_weight_states_adjacent():
    b = enumerate_basis(RepLabel.of(1, 1))
    i1, i2 = b.index_of(1, 1, 1), b.index_of(1, 1, 2)
    assert i2 == i1 + 1
    assert b.state_of(i1) == (1, 1, 1)


def test_fundamental_matrices_undeformed():
    g = assemble(RepLabel.of(1, 0), 0.0)
    assert g.dim == 3
    nz1 = list(zip(*np.nonzero(g.xm1)))
    nz2 = list(zip(*np.nonzero(g.xm2)))
    assert len(nz1) == 1 and g.xm1[nz1[0]] == pytest.approx(1.0)
    assert len(nz2) == 1 and abs(g.xm2[nz2[0]]) == pytest.approx(1.0)
    assert g.h1.tolist() == [1, -1, 0]
    assert g.h2.tolist() == [0, 1, -1]


def test_raising_is_transpose():
    g = assemble(RepLabel.of(2, 2), 0.7)
    np.testing.assert_array_equal(g.xp1, g.xm1.T)
    np.testing.assert_array_equal(g.xp2, g.xm2.T)


def test_cartan_commutators_hold_exactly():
    g = assemble(RepLabel.of(2, 1), 0.3)
    for X, c1, c2 in ((g.xm1, -2, 1), (g.xm2, 1, -2)):
        D1 = g.h1[:, None] - g.h1[None, :]
        D2 = g.h2[:, None] - g.h2[None, :]
        assert np.all((D1 * X == c1 * X) | (X == 0))
        assert np.all((D2 * X == c2 * X) | (X == 0))


def test_group_like_element():
    g = assemble(RepLabel.of(1, 0), 0.0)
    np.testing.assert_array_equal(cartan_R(g, 1), np.eye(3))
    g = assemble(RepLabel.of(1, 0), math.log(2))
    np.testing.assert_allclose(np.diag(cartan_R(g, 1)), 2.0 ** g.h1, rtol=1e-15)
    with pytest.raises(ValueError):
        cartan_R(g, 3)


def test_negative_deformation_rejected():
    with pytest.raises(ValueError):
        assemble(RepLabel.of(1, 0), -0.5)


def test_manifest_schema():
    g = assemble(RepLabel.of(1, 1), 0.0)
    doc = to_manifest(g)
    assert doc["label"] == {"p": 1, "q": 1}
    assert doc["dim"] == 8
    assert len(doc["basis"]) == 8
    assert set(doc["generators"]) == set(GENERATOR_NAMES)
    assert {"row", "col", "value"} <= set(doc["generators"]["xm1"][0])


def test_json_round_trip_bit_exact(tmp_path):
    g = assemble(RepLabel.of(3, 2), 0.7)
    path = tmp_path / "rep.json"
    save_json(g, path)
    g2 = load_json(path)
    assert g2.label == g.label and g2.t == g.t
    for name in GENERATOR_NAMES:
        np.testing.assert_array_equal(getattr(g, name), getattr(g2, name))
    assert g2.h1.dtype == np.int64


def test_matrix_market_round_trip(tmp_path):
    g = assemble(RepLabel.of(2, 1), 1.0)
    paths = save_matrix_market(g, tmp_path / "rep")
    assert len(paths) == 6
    assert sorted(p.suffix for p in paths) == [".mtx"] * 6
    for path in paths:
        name = path.name.split(".")[-2]
        M = mmread(str(path)).toarray()
        want = np.diag(getattr(g, name).astype(float)) if name in ("h1", "h2") \
            else getattr(g, name)
        np.testing.assert_array_equal(M, want)


def test_variants_give_different_matrices():
    g4 = assemble(RepLabel.of(1, 1), 0.5, "closed_form_a")
    g31 = assemble(RepLabel.of(1, 1), 0.5, "closed_form_b")
    assert np.abs(g4.xm2 - g31.xm2).max() > 1e-3


def test_perturbed_updates_both_directions():
    g = assemble(RepLabel.of(1, 0), 0.0)
    gp = perturbed(g, "xm2", 2, 1, 1e-3)
    assert gp.xm2[2, 1] == pytest.approx(g.xm2[2, 1] + 1e-3)
    assert gp.xp2[1, 2] == gp.xm2[2, 1]
    with pytest.raises(ValueError):
        perturbed(g, "h1", 0, 0, 1e-3)
