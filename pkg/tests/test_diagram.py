from collections import Counter

import pytest

from qrep2.diagram import (RepLabel, build_diagram, dimension, multiplicity,
                           strand_structure)


def test_label_normalization_records_swap():
    lab = RepLabel.of(1, 2)
    assert (lab.p, lab.q) == (2, 1)
    assert lab.swapped
    assert not RepLabel.of(2, 1).swapped


def test_label_rejects_bad_input():
    with pytest.raises(ValueError):
        RepLabel.of(-1, 0)
    with pytest.raises(ValueError):
        RepLabel.of(1.5, 0)


def test_fundamental_diagram():
    dg = build_diagram(RepLabel.of(1, 0))
    assert len(dg.points) == 3
    assert all(pt.mult == 1 for pt in dg.points.values())
    weights = {dg.weight(k, s) for (k, s) in dg.points}
    assert weights == {(1, 0), (-1, 1), (0, -1)}


def test_adjoint_diagram():
    dg = build_diagram(RepLabel.of(1, 1))
    assert len(dg.points) == 7
    assert dg.dimension() == 8
    assert dg.mult(1, 1) == 2          # the zero-weight point
    assert dg.weight(1, 1) == (0, 0)


def test_fifteen_dimensional():
    dg = build_diagram(RepLabel.of(2, 1))
    assert dg.dimension() == 15
    assert dg.weight(dg.k_top(1), 1) == (3, -1)  # top of line s=1


def test_strand_structure():
    dg = build_diagram(RepLabel.of(2, 1))
    assert strand_structure(dg, 2) == (2, 0)
    dg = build_diagram(RepLabel.of(1, 1))
    assert strand_structure(dg, 1) == (2, 0)


def test_dimension_formula_vs_point_sum():
    for p in range(0, 6):
        for q in range(0, 6):
            lab = RepLabel.of(p, q)
            dg = build_diagram(lab)
            assert dg.dimension() == dimension(lab) == \
                (p + 1) * (q + 1) * (p + q + 2) // 2


def test_weight_multiset_reflection_symmetry():
    # the weight multiset is invariant under both simple reflections
    for (p, q) in [(1, 0), (1, 1), (2, 1), (3, 2), (2, 2)]:
        dg = build_diagram(RepLabel.of(p, q))
        wts = Counter()
        for (k, s), pt in dg.points.items():
            wts[dg.weight(k, s)] += pt.mult
        s1 = Counter({(-h1, h1 + h2): n for (h1, h2), n in wts.items()})
        s2 = Counter({(h1 + h2, -h2): n for (h1, h2), n in wts.items()})
        assert wts == s1 == s2


def test_boundary_points_are_simple():
    # points on the diagram boundary always carry a single strand
    for (p, q) in [(2, 1), (3, 2), (4, 2)]:
        dg = build_diagram(RepLabel.of(p, q))
        for s in dg.s_values():
            assert dg.mult(dg.k_top(s), s) == 1
            assert dg.mult(dg.k_bot(s), s) == 1


def test_multiplicity_helper_and_bounds():
    lab = RepLabel.of(2, 2)
    dg = build_diagram(lab)
    for (k, s) in dg.points:
        m = multiplicity(lab, k, s)
        assert 1 <= m <= dg.n_strands(s)
