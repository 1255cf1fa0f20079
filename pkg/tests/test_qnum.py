import math

import pytest

from qrep2.qnum import a1_element, norm_bracket, raw_bracket


def test_frozen_values():
    assert norm_bracket(3, 0.5) == pytest.approx(4.086161269630487, abs=1e-15)
    assert norm_bracket(2, math.log(2)) == pytest.approx(2.5, abs=1e-15)


def test_undeformed_is_exact_integer():
    for j in range(-6, 7):
        v = norm_bracket(j, 0.0)
        assert v == float(j)  # exact, not approximate


def test_oddness():
    for t in (0.0, 0.3, 1.0):
        for j in range(1, 8):
            assert norm_bracket(-j, t) == pytest.approx(-norm_bracket(j, t), abs=1e-14)


def test_small_deformation_limit():
    # [j]_t -> j as t -> 0, with quadratic error
    t = 1e-6
    for j in range(1, 21):
        assert abs(norm_bracket(j, t) - j) < 1e-6 * j * j


def test_raw_bracket_is_sinh():
    assert raw_bracket(3, 0.7) == pytest.approx(math.sinh(3 * 0.7), abs=1e-15)
    assert raw_bracket(0, 0.7) == 0.0


def test_string_element_palindrome():
    # sqrt([j+1][P-j]) is symmetric under j -> P-1-j
    for t in (0.0, 0.5):
        for P in range(1, 7):
            for j in range(P):
                assert a1_element(P, j, t) == pytest.approx(
                    a1_element(P, P - 1 - j, t), abs=1e-13)


def test_string_element_values():
    assert a1_element(1, 0, 0.0) == pytest.approx(1.0)
    assert a1_element(2, 0, 0.0) == pytest.approx(math.sqrt(2.0))
    assert a1_element(3, 1, 0.0) == pytest.approx(2.0)  # sqrt([2][2])


def test_string_element_domain():
    with pytest.raises(ValueError):
        a1_element(3, 3, 0.0)
    with pytest.raises(ValueError):
        a1_element(3, -1, 0.0)
    with pytest.raises(ValueError):
        a1_element(0, 0, 0.0)  # length-0 string has no elements
