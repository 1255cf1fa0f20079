import math

import numpy as np
import pytest

from qrep2.diagram import RepLabel, build_diagram
from qrep2.primitive import (REGION_LEFT, REGION_RIGHT, ab_coefficients,
                             boundary_columns, gram_block, l_block,
                             lambda_block, q_line_element, solve_ab_numeric)
from qrep2.qnum import norm_bracket

SQ2 = math.sqrt(2.0)


# -- vertical-line blocks ---------------------------------------------------

def test_lambda_block_smallest():
    dg = build_diagram(RepLabel.of(1, 1))
    np.testing.assert_allclose(lambda_block(dg, 0, 0, 0.0), [[1.0]])


def test_lambda_block_newborn_strand_row():
    # into a multiplicity-2 point: the new strand contributes a zero row
    dg = build_diagram(RepLabel.of(1, 1))
    B = lambda_block(dg, 1, 0, 0.0)
    np.testing.assert_allclose(B, [[SQ2], [0.0]])


def test_lambda_block_matches_bracket_pattern():
    # interior entries follow sqrt([k+2-i][p+s+1-k-i])
    p, q, s, t = 2, 1, 1, 0.3
    dg = build_diagram(RepLabel.of(p, q))
    for k in range(dg.k_top(s), dg.k_bot(s)):
        B = lambda_block(dg, s, k, t)
        for i in range(1, min(B.shape) + 1):
            want2 = (norm_bracket(k + 2 - i, t) * norm_bracket(p + s + 1 - k - i, t)
                     if (k + 2 - i > 0 and p + s + 1 - k - i > 0) else 0.0)
            assert B[i - 1, i - 1] ** 2 == pytest.approx(want2, abs=1e-12)


def test_lambda_block_needs_real_edge():
    dg = build_diagram(RepLabel.of(1, 0))
    with pytest.raises(ValueError):
        lambda_block(dg, 0, 1, 0.0)  # k=2 is off the diagram


# -- transition coefficients ------------------------------------------------

def test_coefficients_frozen_left_undeformed():
    ab = ab_coefficients(RepLabel.of(1, 1), 0, REGION_LEFT, 0.0)
    assert ab.a_at(1) == pytest.approx(0.7071067811865476, abs=1e-15)
    assert ab.b_at(1) == pytest.approx(-1.224744871391589, abs=1e-15)


def test_coefficients_frozen_left_deformed():
    ab = ab_coefficients(RepLabel.of(2, 2), 1, REGION_LEFT, 0.3)
    assert ab.a_at(1) == pytest.approx(0.6494423329371927, abs=1e-14)
    assert ab.b_at(1) == pytest.approx(-0.9353494838133778, abs=1e-14)
    assert ab.a_at(2) == pytest.approx(1.2126290956815715, abs=1e-14)
    assert ab.b_at(2) == pytest.approx(-2.226398391832708, abs=1e-14)


def test_coefficients_frozen_right():
    ab = ab_coefficients(RepLabel.of(3, 2), 2, REGION_RIGHT, 0.0)
    want = [(0.0, -0.7745966692414834),
            (0.7745966692414834, -1.2909944487358056),
            (1.2909944487358056, -2.449489742783178)]
    for i, (ai, bi) in enumerate(want, start=1):
        assert ab.a_at(i) == pytest.approx(ai, abs=1e-14)
        assert ab.b_at(i) == pytest.approx(bi, abs=1e-14)


def test_coefficients_out_of_range_read_zero():
    ab = ab_coefficients(RepLabel.of(1, 1), 0, REGION_LEFT, 0.0)
    assert ab.a_at(0) == ab.a_at(99) == 0.0
    assert ab.b_at(99) == 0.0


def test_coefficients_region_domains():
    lab = RepLabel.of(2, 1)
    with pytest.raises(ValueError):
        ab_coefficients(lab, 1, REGION_LEFT, 0.0)   # left needs s <= q-1
    with pytest.raises(ValueError):
        ab_coefficients(lab, 0, REGION_RIGHT, 0.0)  # right needs s >= q
    with pytest.raises(ValueError):
        ab_coefficients(lab, 0, "middle", 0.0)
    with pytest.raises(ValueError):
        ab_coefficients(lab, 1, REGION_RIGHT, 0.0, variant="closed_form_99")


def test_families_disagree():
    lab = RepLabel.of(2, 1)
    c31 = ab_coefficients(lab, 0, REGION_LEFT, 0.0, "closed_form_b")
    c4 = ab_coefficients(lab, 0, REGION_LEFT, 0.0, "closed_form_a")
    dev = max(abs(c31.a_at(i) - c4.a_at(i)) for i in (1, 2))
    assert dev > 1e-3  # the two printed families are genuinely different
    r31 = ab_coefficients(lab, 1, REGION_RIGHT, 0.0, "closed_form_b")
    r4 = ab_coefficients(lab, 1, REGION_RIGHT, 0.0, "closed_form_a")
    assert r31.b_at(1) == pytest.approx(-r4.b_at(1), abs=1e-14)  # sign flip


# -- cross-line blocks ------------------------------------------------------

def test_l_block_truncates_to_point_multiplicities():
    dg = build_diagram(RepLabel.of(1, 1))
    B = l_block(dg, 0, 0, 0.0)
    np.testing.assert_allclose(B, [[1.0]])
    assert l_block(dg, 1, 0, 0.0).shape == (2, 1)


def test_l_block_left_entry_pattern():
    p, q, t = 2, 2, 0.7
    lab = RepLabel.of(p, q)
    dg = build_diagram(lab)
    s = 1
    ab = ab_coefficients(lab, s, REGION_LEFT, t)
    for k in range(dg.k_top(s), dg.k_bot(s) + 1):
        B = l_block(dg, k, s, t)
        for i in range(1, min(B.shape[1], B.shape[0]) + 1):
            arg = p + s + 2 - k - i
            want = ab.a_at(i) * math.sqrt(norm_bracket(arg, t)) if arg > 0 else 0.0
            assert B[i - 1, i - 1] == pytest.approx(want, abs=1e-13)


def test_gram_block_smallest():
    np.testing.assert_allclose(gram_block(RepLabel.of(1, 1), 0, 0, 0.0), [[1.0]])


@pytest.mark.parametrize("p,q", [(2, 1), (3, 2), (2, 2)])
@pytest.mark.parametrize("t", [0.0, 0.7])
def test_gram_block_two_routes_agree(p, q, t):
    # closed tridiagonal formula vs actually multiplying the block
    lab = RepLabel.of(p, q)
    dg = build_diagram(lab)
    for (k, s) in dg.points:
        if not dg.has_point(k, s + 1):
            continue
        L = l_block(dg, k, s, t)
        np.testing.assert_allclose(gram_block(lab, k, s, t), L.T @ L, atol=1e-12)


@pytest.mark.parametrize("p,q", [(2, 1), (3, 2)])
def test_gram_spectrum_is_squared_outgoing_elements(p, q):
    lab = RepLabel.of(p, q)
    dg = build_diagram(lab)
    t = 0.3
    for (k, s) in dg.points:
        if not dg.has_point(k, s + 1):
            continue
        ev = np.sort(np.linalg.eigvalsh(gram_block(lab, k, s, t)))
        target = np.sort([q_line_element(dg, k, s, i, t) ** 2
                          for i in range(1, dg.mult(k, s) + 1)])
        np.testing.assert_allclose(ev, target, atol=1e-12)


# -- boundary columns -------------------------------------------------------

def test_boundary_lists_frozen_right():
    bc = boundary_columns(RepLabel.of(3, 2), 3, 3, REGION_RIGHT, 0.0)
    np.testing.assert_allclose(
        bc.m, [-0.7071067811865476, 2.1213203435596424, -2.23606797749979],
        atol=1e-14)
    np.testing.assert_allclose(
        bc.l, [-1.5811388300841898, -1.5811388300841898, -1.0], atol=1e-14)


def test_boundary_columns_unit_and_simple_points():
    lab = RepLabel.of(2, 1)
    dg = build_diagram(lab)
    for (k, s) in dg.points:
        region = REGION_LEFT if s <= lab.q else REGION_RIGHT
        bc = boundary_columns(lab, k, s, region, 0.3)
        assert np.linalg.norm(bc.first_column) == pytest.approx(1.0, abs=1e-10)
        assert np.linalg.norm(bc.last_column) == pytest.approx(1.0, abs=1e-10)
        if dg.mult(k, s) == 1:
            assert abs(bc.first_column[0]) == pytest.approx(1.0, abs=1e-10)


def test_boundary_columns_seam_parametrizations_agree():
    # on the seam line s == q both region labels describe the same data
    lab = RepLabel.of(3, 2)
    left = boundary_columns(lab, 2, 2, REGION_LEFT, 0.5)
    right = boundary_columns(lab, 2, 2, REGION_RIGHT, 0.5)
    np.testing.assert_allclose(left.l, right.l, atol=1e-12)
    np.testing.assert_allclose(left.m, right.m, atol=1e-12)
    np.testing.assert_allclose(left.first_column, right.first_column, atol=1e-12)


def test_boundary_columns_domain():
    lab = RepLabel.of(2, 1)
    with pytest.raises(ValueError):
        boundary_columns(lab, 0, 2, REGION_LEFT, 0.0)   # s > q is not left
    with pytest.raises(ValueError):
        boundary_columns(lab, 0, 0, REGION_RIGHT, 0.0)  # s < q is not right
    with pytest.raises(ValueError):
        boundary_columns(lab, 99, 1, REGION_LEFT, 0.0)  # no such point


# -- numeric arbitration ----------------------------------------------------

@pytest.mark.parametrize("t", [0.0, 0.3, 1.0])
def test_solver_reproduces_surviving_family(t):
    # includes q = 0 and p = q labels, and every tail line
    for p in range(0, 6):
        for q in range(0, p + 1):
            lab = RepLabel.of(p, q)
            for region, rng in ((REGION_LEFT, range(0, q)),
                                (REGION_RIGHT, range(q, p + q))):
                for s in rng:
                    ref = solve_ab_numeric(lab, s, region, t)
                    c4 = ab_coefficients(lab, s, region, t, "closed_form_a")
                    for i in range(1, len(ref.a) + 1):
                        assert abs(ref.a_at(i) - c4.a_at(i)) < 1e-10, (p, q, s, i)
                    for i in range(1, len(ref.b) + 1):
                        assert abs(ref.b_at(i) - c4.b_at(i)) < 1e-10, (p, q, s, i)


def test_solver_rejects_other_family():
    lab = RepLabel.of(2, 1)
    ref = solve_ab_numeric(lab, 0, REGION_LEFT, 0.0)
    c31 = ab_coefficients(lab, 0, REGION_LEFT, 0.0, "closed_form_b")
    dev = max(abs(ref.a_at(i) - c31.a_at(i)) for i in (1, 2))
    assert dev > 1e-3


def test_solver_available_as_variant():
    lab = RepLabel.of(3, 2)
    via_variant = ab_coefficients(lab, 1, REGION_LEFT, 0.5, "numeric_solver")
    direct = solve_ab_numeric(lab, 1, REGION_LEFT, 0.5)
    assert via_variant.a == direct.a and via_variant.b == direct.b
