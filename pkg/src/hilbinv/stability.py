"""Central charges Z_{omega, beta} for omega = xH, beta = yH, in exact arithmetic.

Along the path ``omega = lambda * omega_0`` only ``lambda^2`` is rational, so
a charge is stored as ``(re, im_coeff)`` with ``Im Z = lambda * im_coeff``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ._slabs import map_slabs, split_range
from .isometry import MukaiIsometry
from .lattice import MukaiVector, Surface
from .pell import PellPair

BASIS = (MukaiVector(1, 0, 0), MukaiVector(0, 1, 0), MukaiVector(0, 0, 1))


class StabilityError(ValueError):
    pass


@dataclass(frozen=True)
class StabilityParams:
    x: Fraction
    y: Fraction
    lambda0: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))
        object.__setattr__(self, "lambda0", Fraction(self.lambda0))
        if self.x <= 0:
            raise StabilityError(f"x must be positive, got {self.x}")
        if self.lambda0 < 0:
            raise StabilityError(f"lambda0 must be nonnegative, got {self.lambda0}")

    def lambda_sq(self, path: tuple[int, int] | None = None) -> Fraction:
        """``lambda^2 = 1 + 2(n-1) b lambda0`` for the path context ``(n, b)``."""
        if path is None:
            if self.lambda0 != 0:
                raise StabilityError("lambda0 > 0 needs a path context (n, b)")
            return Fraction(1)
        n, b = path
        return 1 + 2 * (n - 1) * b * self.lambda0

    def with_lambda0(self, lambda0) -> StabilityParams:
        return StabilityParams(self.x, self.y, lambda0)


@dataclass(frozen=True)
class ChargeValue:
    re: Fraction
    im_coeff: Fraction

    def __add__(self, other: ChargeValue) -> ChargeValue:
        return ChargeValue(self.re + other.re, self.im_coeff + other.im_coeff)

    def __neg__(self) -> ChargeValue:
        return ChargeValue(-self.re, -self.im_coeff)


def central_charge(
    surf: Surface,
    params: StabilityParams,
    v: MukaiVector,
    path: tuple[int, int] | None = None,
) -> ChargeValue:
    t = surf.t
    x, y = params.x, params.y
    lam2 = params.lambda_sq(path)
    re = lam2 * t * x * x * v.r + 2 * t * v.m * y - v.s - t * y * y * v.r
    im_coeff = 2 * t * x * (v.m - v.r * y)
    return ChargeValue(re, im_coeff)


def canonical_params(t: int, n: int, p: PellPair) -> StabilityParams:
    """The pair ``(omega_0, beta_0) = (H / tb, -a H / tb)`` fixed by the involution."""
    if p.a * p.a - t * (n - 1) * p.b * p.b != -1:
        raise StabilityError(f"({p.a}, {p.b}) does not solve X^2 - {t * (n - 1)} Y^2 = -1")
    return StabilityParams(Fraction(1, t * p.b), Fraction(-p.a, t * p.b))


def charge_invariance(tau: MukaiIsometry, surf: Surface, params: StabilityParams) -> bool:
    """True iff ``Z(tau e) == Z(e)`` on the basis of Num(S)."""
    if params.lambda0 != 0:
        raise StabilityError("charge invariance is checked at lambda0 = 0")
    return all(
        central_charge(surf, params, tau(e)) == central_charge(surf, params, e)
        for e in BASIS
    )


def _positivity_slab(t: int, n: int, a: int, b: int, r_lo: int, r_hi: int, bound: int):
    s_bound = (n - 1) * bound + bound
    for r in range(r_lo, r_hi + 1):
        for m in range(-bound, bound + 1):
            if a * r + t * m * b != 0:
                continue
            num = t * m * m + 1
            if num % r:
                continue
            s = num // r
            if abs(s) <= s_bound and (n - 1) * r <= s:
                return MukaiVector(r, m, s)
    return None


def spherical_positivity_scan(
    t: int, n: int, p: PellPair, bound: int, workers: int = 1
) -> MukaiVector | None:
    """Look for a spherical class with ``Im Z = 0``, ``r > 0`` and ``Re Z <= 0``.

    At the canonical parameters this reduces to integers with
    ``a r + t m b = 0``, ``t m^2 = r s - 1`` and ``(n-1) r <= s``.  Returns the
    lexicographically first such ``(r, m, s)`` with ``1 <= r <= bound``,
    ``|m| <= bound``, ``|s| <= n * bound``, or ``None``.
    """
    if bound < 1:
        raise StabilityError(f"bound must be positive, got {bound}")
    jobs = [(t, n, p.a, p.b, lo, hi, bound) for lo, hi in split_range(1, bound, workers)]
    for hit in map_slabs(_positivity_slab, jobs, workers):
        if hit is not None:
            return hit
    return None
