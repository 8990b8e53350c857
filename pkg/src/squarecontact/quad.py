"""Gap / square / gap splitting of a rectangle for single-vertex insertion."""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Optional, Tuple

from .geometry import FLIP_ANTI, Number, Q, Rect, Square, aspect_ratio


class Axis(Enum):
    HORIZONTAL_CUTS = "h"  # pieces stacked top to bottom
    VERTICAL_CUTS = "v"    # pieces side by side, left to right


class NonPositiveInput(ValueError):
    pass


class RatioOutOfRange(ValueError):
    def __init__(self, gamma, low, high, violation):
        self.gamma, self.low, self.high, self.violation = gamma, low, high, violation
        super().__init__(f"ratio {gamma} outside admissible ({low}, {high}) by {violation}")


def split_delta(alpha: Number, beta: Number, eps: Number) -> Fraction:
    alpha, beta, eps = Q(alpha), Q(beta), Q(eps)
    if min(alpha, beta, eps) <= 0:
        raise NonPositiveInput("alpha, beta and eps must be positive")
    return min(alpha, beta, Fraction(1), eps)


def vertical_split_delta(alpha: Number, beta: Number, eps: Number) -> Fraction:
    """Slack on the gap ratio for side-by-side pieces of ratios ``alpha`` and ``beta``.

    Works in reciprocal ratios: the rotated problem has targets 1/alpha, 1/beta.
    Any gap ratio within the returned slack of ``1/(1/alpha + 1/beta + 1)``
    leaves the right piece within ``eps`` of ``beta`` (and strictly positive).
    """
    alpha, beta, eps = Q(alpha), Q(beta), Q(eps)
    a, b = 1 / alpha, 1 / beta
    gamma0 = 1 / (a + b + 1)
    # |B' - b| < eta keeps B' > b/2, so |1/B' - beta| < 2*eta/b**2 <= eps
    eta = min(split_delta(a, b, eps), b / 2, eps * b * b / 2)
    # |gamma - gamma0| < d keeps gamma > gamma0/2, so |1/gamma - 1/gamma0| < 2*d/gamma0**2
    return min(gamma0 / 2, eta * gamma0 * gamma0 / 2)


def split_three(gap: Rect, alpha: Number, beta: Number,
                axis: Axis = Axis.HORIZONTAL_CUTS,
                eps: Optional[Number] = None) -> Tuple[Rect, Square, Rect]:
    """Cut ``gap`` into a piece of ratio exactly ``alpha``, a full-span square, and the rest.

    The first piece is on top (horizontal cuts) or on the left (vertical cuts).
    With ``eps`` given, the gap's ratio must lie strictly within
    ``split_delta(alpha, beta, eps)`` of ``alpha + beta + 1`` (in reciprocal
    ratios for vertical cuts); without it only positivity of the rest is checked.
    """
    alpha, beta = Q(alpha), Q(beta)
    if alpha <= 0 or beta <= 0:
        raise NonPositiveInput("alpha and beta must be positive")
    if axis is Axis.VERTICAL_CUTS:
        # (x, y) -> (-y, -x) sends the left piece to the top and inverts ratios
        a, sq, b = split_three(FLIP_ANTI.rect(gap), 1 / alpha, 1 / beta,
                               Axis.HORIZONTAL_CUTS, eps)
        return FLIP_ANTI.rect(a), FLIP_ANTI.square(sq), FLIP_ANTI.rect(b)

    gamma = aspect_ratio(gap)
    ideal = alpha + beta + 1
    if eps is not None:
        delta = split_delta(alpha, beta, eps)
        if abs(gamma - ideal) >= delta:
            raise RatioOutOfRange(gamma, ideal - delta, ideal + delta,
                                  abs(gamma - ideal) - delta)
    if gamma - alpha - 1 <= 0:
        raise RatioOutOfRange(gamma, alpha + 1, None, alpha + 1 - gamma)

    x = gap.width
    top_h = alpha * x
    square = Square(gap.x, gap.top - top_h - x, x)
    upper = Rect(gap.x, gap.top - top_h, x, top_h)
    lower = Rect(gap.x, gap.y, x, gap.height - top_h - x)
    return upper, square, lower
