"""Pell equations ``X^2 - D Y^2 = +-1`` via the continued fraction of sqrt(D)."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import isqrt


class PellError(ValueError):
    pass


class NegPellStatus(enum.Enum):
    """Reasons ``X^2 - D Y^2 = -1`` has no positive solution."""

    SQUARE = "square"
    UNSOLVABLE = "neg-pell-unsolvable"


@dataclass(frozen=True)
class PellPair:
    """Fundamental positive solution of ``a^2 - D b^2 = sign``."""

    D: int
    a: int
    b: int
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise PellError(f"sign must be +1 or -1, got {self.sign}")
        if self.a < 1 or self.b < 1:
            raise PellError(f"a and b must be positive, got ({self.a}, {self.b})")
        if self.a * self.a - self.D * self.b * self.b != self.sign:
            raise PellError(
                f"({self.a}, {self.b}) does not solve X^2 - {self.D} Y^2 = {self.sign}"
            )


def is_square(x: int) -> bool:
    return x >= 0 and isqrt(x) ** 2 == x


def sqrt_continued_fraction(D: int) -> tuple[int, list[int]]:
    """Return ``(a0, period)`` with sqrt(D) = [a0; period, period, ...].

    The period is empty when ``D`` is a perfect square.
    """
    if D < 1:
        raise PellError(f"D must be positive, got {D}")
    a0 = isqrt(D)
    if a0 * a0 == D:
        return a0, []
    period = []
    m, d, a = 0, 1, a0
    while a != 2 * a0:
        m = d * a - m
        d = (D - m * m) // d
        a = (a0 + m) // d
        period.append(a)
    return a0, period


def _convergent(a0: int, period: list[int], length: int) -> tuple[int, int]:
    """Numerator and denominator of the convergent after ``length`` partial quotients."""
    p_prev, p = 1, a0
    q_prev, q = 0, 1
    for i in range(length):
        a = period[i % len(period)]
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
    return p, q


def solve_neg_pell(D: int) -> PellPair | NegPellStatus:
    """Fundamental solution of ``X^2 - D Y^2 = -1``.

    Solvable exactly when the period of sqrt(D) has odd length; a perfect
    square ``D`` is reported as :attr:`NegPellStatus.SQUARE` (``D = 1`` has
    only the trivial ``(0, 1)``).
    """
    a0, period = sqrt_continued_fraction(D)
    if not period:
        return NegPellStatus.SQUARE
    if len(period) % 2 == 0:
        return NegPellStatus.UNSOLVABLE
    a, b = _convergent(a0, period, len(period) - 1)
    return PellPair(D, a, b, -1)


def solve_pos_pell(D: int) -> PellPair:
    """Fundamental solution of ``X^2 - D Y^2 = 1`` for non-square ``D``."""
    a0, period = sqrt_continued_fraction(D)
    if not period:
        raise PellError(f"D={D} is a perfect square")
    length = len(period) if len(period) % 2 == 0 else 2 * len(period)
    a, b = _convergent(a0, period, length - 1)
    return PellPair(D, a, b, 1)


def existence_criterion(t: int, n: int) -> PellPair | NegPellStatus:
    """Negative Pell data for ``D = t(n-1)``."""
    if t < 1 or n < 2:
        raise PellError(f"need t >= 1 and n >= 2, got t={t}, n={n}")
    return solve_neg_pell(t * (n - 1))


def aux_equation_scan(t: int, n: int, bound: int) -> tuple[int, int] | None:
    """Search ``(n-1) X^2 - t Y^2 = 1`` over ``1 <= X, Y <= bound``.

    Only meaningful when the negative Pell equation for ``t(n-1)`` is
    solvable and ``n != 2``; returns the first witness in increasing ``X``,
    or ``None``.
    """
    if n == 2:
        raise PellError("auxiliary equation is only defined for n != 2")
    if t < 2 or n < 3:
        raise PellError(f"need t >= 2 and n >= 3, got t={t}, n={n}")
    if bound < 1:
        raise PellError(f"bound must be positive, got {bound}")
    if not isinstance(existence_criterion(t, n), PellPair):
        raise PellError(f"negative Pell equation for D={t * (n - 1)} is not solvable")
    for X in range(1, bound + 1):
        rest = (n - 1) * X * X - 1
        if rest <= 0 or rest % t:
            continue
        Y2 = rest // t
        Y = isqrt(Y2)
        if Y * Y == Y2 and 1 <= Y <= bound:
            return (X, Y)
    return None
