"""Lattice isometries attached to a derived-natural involution of S^[n]."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .lattice import (
    Matrix,
    MukaiVector,
    NsGram,
    apply,
    det,
    identity,
    ideal_sheaf_vector,
    mat_mul,
    transpose,
)
from .pell import PellPair


class IsometryError(ValueError):
    pass


def _check_square(M: Sequence[Sequence[int]]) -> int:
    size = len(M)
    if size == 0 or any(len(row) != size for row in M):
        raise IsometryError(f"expected a square matrix, got {M}")
    return size


def verify_isometry(M: Sequence[Sequence[int]], G: Sequence[Sequence[int]]) -> bool:
    """True iff ``M^T G M == G`` exactly."""
    size = _check_square(M)
    if _check_square(G) != size:
        raise IsometryError(f"dimension mismatch: {size}x{size} matrix, {len(G)}x{len(G)} Gram")
    return mat_mul(mat_mul(transpose(M), G), M) == tuple(tuple(row) for row in G)


def verify_involution(M: Sequence[Sequence[int]]) -> bool:
    size = _check_square(M)
    return mat_mul(M, M) == identity(size)


def _check_pair(t: int, n: int, p: PellPair) -> None:
    if p.sign != -1 or p.a * p.a - t * (n - 1) * p.b * p.b != -1:
        raise IsometryError(
            f"({p.a}, {p.b}) does not solve X^2 - {t * (n - 1)} Y^2 = -1"
        )


@dataclass(frozen=True)
class NsIsometry:
    """Action on NS(S^[n]) in the basis theta_n(0,-H,0), theta_n(1,0,n-1)."""

    entries: Matrix

    @property
    def det(self) -> int:
        return det(self.entries)


@dataclass(frozen=True)
class MukaiIsometry:
    """Action on Num(S) in the basis (1,0,0), (0,H,0), (0,0,1)."""

    entries: Matrix

    def __call__(self, v: MukaiVector) -> MukaiVector:
        return apply(self.entries, v)

    @property
    def det(self) -> int:
        return det(self.entries)


def ns_involution(t: int, n: int, p: PellPair) -> NsIsometry:
    _check_pair(t, n, p)
    a, b = p.a, p.b
    return NsIsometry((
        (2 * a * a + 1, -2 * (n - 1) * a * b),
        (2 * t * a * b, -2 * a * a - 1),
    ))


def mukai_extension(t: int, n: int, p: PellPair) -> MukaiIsometry:
    """Extension of the NS involution to Num(S) fixing ``v_n``."""
    _check_pair(t, n, p)
    a, b = p.a, p.b
    k = n - 1
    return MukaiIsometry((
        (-a * a, -2 * t * a * b, -t * b * b),
        (k * a * b, 2 * a * a + 1, a * b),
        (-k * k * t * b * b, -2 * t * k * a * b, -a * a),
    ))


def restrict_to_ns(tau: MukaiIsometry, gram: NsGram) -> Matrix:
    """Matrix of ``tau`` on the span of (0,-H,0) and (1,0,n-1).

    Raises if ``tau`` does not preserve that sublattice.
    """
    E = gram.embedding()
    image = mat_mul(tau.entries, E)
    # E has rows (0,1), (-1,0), (0,n-1): rows 0 and 1 determine the coordinates.
    cols = []
    for j in range(2):
        x1 = -image[1][j]
        x2 = image[0][j]
        coords = (x1, x2)
        if tuple(sum(E[i][k] * coords[k] for k in range(2)) for i in range(3)) != tuple(
            image[i][j] for i in range(3)
        ):
            raise IsometryError("tau does not preserve the NS sublattice")
        cols.append(coords)
    return ((cols[0][0], cols[1][0]), (cols[0][1], cols[1][1]))


def restriction_consistent(tau: MukaiIsometry, M: NsIsometry, gram: NsGram) -> bool:
    try:
        return restrict_to_ns(tau, gram) == M.entries
    except IsometryError:
        return False


def fixes_ideal_sheaf_vector(tau: MukaiIsometry, n: int) -> bool:
    v = ideal_sheaf_vector(n)
    return tau(v) == v

