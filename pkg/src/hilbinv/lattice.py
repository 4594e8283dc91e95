"""Algebraic Mukai lattice of a generic polarized K3 surface.

Vectors are triples ``(r, m, s)`` standing for ``(r, mH, s)`` in
``H^0 + NS(S) + H^4`` with ``NS(S) = ZH`` and ``H^2 = 2t``.  The rank-2
Neron-Severi lattice of ``S^[n]`` is written in the basis

    e1 = theta_n(0, -H, 0),   e2 = theta_n(1, 0, n - 1)

with Gram matrix ``diag(2t, -2(n-1))``.  Matrices act on column vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

Matrix = tuple[tuple[int, ...], ...]


class LatticeError(ValueError):
    pass


@dataclass(frozen=True)
class Surface:
    """Generic polarized K3 surface of degree ``2t``."""

    t: int

    def __post_init__(self):
        if not isinstance(self.t, int) or self.t < 1:
            raise LatticeError(f"t must be a positive integer, got {self.t!r}")

    @property
    def degree(self) -> int:
        return 2 * self.t

    @classmethod
    def from_degree(cls, degree: int) -> Surface:
        if degree < 2 or degree % 2:
            raise LatticeError(f"degree must be a positive even integer, got {degree}")
        return cls(degree // 2)


@dataclass(frozen=True, order=True)
class MukaiVector:
    r: int
    m: int
    s: int

    def __iter__(self):
        return iter((self.r, self.m, self.s))

    def __add__(self, other: MukaiVector) -> MukaiVector:
        return MukaiVector(self.r + other.r, self.m + other.m, self.s + other.s)

    def __sub__(self, other: MukaiVector) -> MukaiVector:
        return MukaiVector(self.r - other.r, self.m - other.m, self.s - other.s)

    def __neg__(self) -> MukaiVector:
        return MukaiVector(-self.r, -self.m, -self.s)

    def __rmul__(self, c: int) -> MukaiVector:
        return MukaiVector(c * self.r, c * self.m, c * self.s)

    def is_zero(self) -> bool:
        return self.r == 0 and self.m == 0 and self.s == 0

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.r, self.m, self.s)


def mukai_pairing(v: MukaiVector, w: MukaiVector, surf: Surface) -> int:
    return 2 * surf.t * v.m * w.m - v.r * w.s - w.r * v.s


def mukai_gram(t: int) -> Matrix:
    """Gram matrix of the Mukai pairing in the basis (1,0,0), (0,H,0), (0,0,1)."""
    return ((0, 0, -1), (0, 2 * t, 0), (-1, 0, 0))


def ideal_sheaf_vector(n: int) -> MukaiVector:
    """Mukai vector ``v_n = (1, 0, 1 - n)`` of the ideal sheaf of ``n`` points."""
    if n < 2:
        raise LatticeError(f"need at least two points, got n={n}")
    return MukaiVector(1, 0, 1 - n)


@dataclass(frozen=True)
class NsGram:
    t: int
    n: int

    def __post_init__(self):
        if self.t < 1:
            raise LatticeError(f"t must be positive, got {self.t}")
        if self.n < 2:
            raise LatticeError(f"n must be at least 2, got {self.n}")

    @property
    def gram(self) -> Matrix:
        return ((2 * self.t, 0), (0, -2 * (self.n - 1)))

    def embedding(self) -> Matrix:
        """3x2 matrix sending the NS basis into Num(S) (columns e1, e2)."""
        return ((0, 1), (-1, 0), (0, self.n - 1))


@dataclass(frozen=True)
class DiscriminantAction:
    """Action of an NS isometry on the discriminant groups.

    ``multiplier`` is the action on the cyclic group ``Z/2(n-1)`` generated
    by ``e2 / 2(n-1)``, the whole of ``A_{H^2(S^[n])}``.  The ``Z/2t`` factor
    carried by ``e1`` is reported separately as ``h_multiplier``; ``glue_ok``
    says the e1-coefficient of ``M e2`` is divisible by ``2(n-1)`` so that the
    image of ``e2 / 2(n-1)`` stays in the dual lattice.
    """

    modulus: int
    multiplier: int
    h_modulus: int
    h_multiplier: int
    glue_ok: bool

    def __post_init__(self):
        if self.modulus < 1 or self.h_modulus < 1:
            raise LatticeError("moduli must be positive")

    @property
    def is_identity(self) -> bool:
        return self.glue_ok and self.multiplier == 1 % self.modulus


def mat_mul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    if len(a[0]) != len(b):
        raise LatticeError(f"cannot multiply {len(a)}x{len(a[0])} by {len(b)}x{len(b[0])}")
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0])))
        for i in range(len(a))
    )


def transpose(a: Sequence[Sequence[int]]) -> Matrix:
    return tuple(tuple(row[j] for row in a) for j in range(len(a[0])))


def identity(size: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(size)) for i in range(size))


def det(a: Sequence[Sequence[int]]) -> int:
    size = len(a)
    if size == 1:
        return a[0][0]
    if size == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]
    return sum(
        (-1) ** j * a[0][j] * det([row[:j] + row[j + 1:] for row in a[1:]])
        for j in range(size)
    )


def apply(a: Sequence[Sequence[int]], v: MukaiVector) -> MukaiVector:
    r, m, s = (sum(a[i][k] * x for k, x in enumerate(v)) for i in range(3))
    return MukaiVector(r, m, s)


def discriminant_action(M: Sequence[Sequence[int]], gram: NsGram) -> DiscriminantAction:
    """Multipliers by which an NS isometry acts on ``Z/2t + Z/2(n-1)``."""
    if mat_mul(mat_mul(transpose(M), gram.gram), M) != gram.gram:
        raise LatticeError(f"matrix {M} is not an isometry of {gram.gram}")
    n1 = 2 * (gram.n - 1)
    h = 2 * gram.t
    # M e2 = u e1 + c e2 (second column), M e1 = c1 e1 + u1 e2 (first column)
    u, c = M[0][1], M[1][1]
    c1, u1 = M[0][0], M[1][0]
    multiplier = c % n1
    h_multiplier = c1 % h
    glue_ok = u % n1 == 0 and u1 % h == 0
    if gcd(multiplier, n1) != 1:
        raise LatticeError(f"multiplier {multiplier} is not a unit mod {n1}")
    return DiscriminantAction(n1, multiplier, h, h_multiplier, glue_ok)
