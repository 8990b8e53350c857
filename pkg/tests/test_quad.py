from fractions import Fraction as F

import pytest
from hypothesis import given

from squarecontact.geometry import Rect, aspect_ratio
from squarecontact.quad import (
    Axis, NonPositiveInput, RatioOutOfRange, split_delta, split_three, vertical_split_delta,
)

from conftest import rationals


def test_split_three_example():
    top, sq, bottom = split_three(Rect(0, 0, 1, F(7, 2)), 2, F(1, 2))
    assert (top.height, sq.side, bottom.height) == (2, 1, F(1, 2))
    assert aspect_ratio(top) == 2 and aspect_ratio(bottom) == F(1, 2)
    assert sq.y == F(1, 2) and top.y == F(3, 2)


def test_split_three_vertical():
    gap = Rect(0, 0, F(7, 2), 1)
    left, sq, right = split_three(gap, F(1, 2), 2, Axis.VERTICAL_CUTS)
    assert aspect_ratio(left) == F(1, 2)
    assert aspect_ratio(right) == 2
    assert left.x == 0 and sq.x == 2 and right.x == 3
    assert sq.side == 1


def test_split_delta_values():
    assert split_delta(2, 3, F(1, 10)) == F(1, 10)
    assert split_delta(F(1, 3), 3, 1) == F(1, 3)
    with pytest.raises(NonPositiveInput):
        split_delta(0, 1, 1)


def test_out_of_window_is_reported():
    with pytest.raises(RatioOutOfRange) as exc:
        split_three(Rect(0, 0, 1, 4), 1, 1, eps=F(1, 2))
    assert exc.value.violation == F(1, 2)
    with pytest.raises(RatioOutOfRange):
        split_three(Rect(0, 0, 1, 2), 1, 1)


@given(rationals(F(1, 10), 10), rationals(F(1, 10), 10))
def test_exact_split_pieces_touch(alpha, beta):
    gap = Rect(3, -1, 2, 2 * (alpha + beta + 1))
    top, sq, bottom = split_three(gap, alpha, beta)
    assert aspect_ratio(top) == alpha and aspect_ratio(bottom) == beta
    assert top.area + sq.area + bottom.area == gap.area
    assert top.y == sq.top and bottom.top == sq.y


@given(rationals(F(1, 10), 10), rationals(F(1, 10), 10), rationals(F(1, 1000), 2), rationals(-1, 1, 97))
def test_vertical_window_keeps_right_piece_close(alpha, beta, eps, t):
    delta = vertical_split_delta(alpha, beta, eps)
    gamma0 = 1 / (1 / alpha + 1 / beta + 1)
    gamma = gamma0 + t * delta * F(99, 100)
    left, sq, right = split_three(Rect(0, 0, 1, gamma), alpha, beta, Axis.VERTICAL_CUTS)
    assert aspect_ratio(left) == alpha
    assert abs(aspect_ratio(right) - beta) < eps
