"""Potential walls for ``v_n`` along the path ``lambda -> sigma_{lambda omega_0, beta_0}``.

A class ``w = (r, m, s)`` lies on a potential wall at path parameter
``lambda0`` (``lambda^2 = 1 + 2(n-1) b lambda0``) when ``Z(w)`` and ``Z(v_n)``
are R-proportional, which reduces to

    2(n-1) m (bt + lambda0) + a ((n-1) r + s) = 0.

For ``m != 0`` this fixes ``lambda0``; for ``m == 0`` it holds for every
``lambda0`` or for none.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

from ._slabs import map_slabs, split_range
from .lattice import MukaiVector, Surface, ideal_sheaf_vector, mukai_pairing
from .pell import PellPair, solve_pos_pell
from .stability import canonical_params, central_charge


class WallError(ValueError):
    pass


class PathPosition(enum.Enum):
    ON_PATH = "on-path"
    OFF_PATH = "off-path"
    ALL_LAMBDA = "all-lambda"


@dataclass(frozen=True)
class WallOutcome:
    position: PathPosition
    lambda0: Fraction | None = None

    @property
    def on_path(self) -> bool:
        return self.position is not PathPosition.OFF_PATH


# wall type -> (<w,w>, <w,v_n>); the totally semistable type is (-2, k < 0) plus effectivity
BRILL_NOETHER = "brill_noether"
HILBERT_CHOW = "hilbert_chow"
LI_GIESEKER_UHLENBECK = "li_gieseker_uhlenbeck"
TOTALLY_SEMISTABLE = "totally_semistable"
WALL_TYPES = (BRILL_NOETHER, HILBERT_CHOW, LI_GIESEKER_UHLENBECK, TOTALLY_SEMISTABLE)
PROFILES = {
    BRILL_NOETHER: (-2, 0),
    HILBERT_CHOW: (0, 1),
    LI_GIESEKER_UHLENBECK: (0, 2),
}


@dataclass(frozen=True, order=True)
class WallCandidate:
    w: MukaiVector
    lambda0: Fraction | None
    profile: tuple[int, int]


@dataclass
class WallScanReport:
    bound: int
    witnesses: dict[str, list[WallCandidate]] = field(
        default_factory=lambda: {kind: [] for kind in WALL_TYPES}
    )
    on_path_checked: int = 0

    @property
    def empty(self) -> bool:
        return not any(self.witnesses.values())


def _check_criterion(t: int, n: int, p: PellPair) -> None:
    if p.a * p.a - t * (n - 1) * p.b * p.b != -1:
        raise WallError(f"({p.a}, {p.b}) does not solve X^2 - {t * (n - 1)} Y^2 = -1")


def on_wall(t: int, n: int, p: PellPair, lambda0, w: MukaiVector) -> bool:
    """Exact membership test at a given path parameter."""
    a, b = p.a, p.b
    return 2 * (n - 1) * w.m * (b * t + Fraction(lambda0)) + a * ((n - 1) * w.r + w.s) == 0


def wall_lambda0(t: int, n: int, p: PellPair, w: MukaiVector) -> WallOutcome:
    if w.is_zero():
        raise WallError("the zero vector does not define a wall")
    _check_criterion(t, n, p)
    a, b = p.a, p.b
    trace = (n - 1) * w.r + w.s
    if w.m == 0:
        if trace == 0:
            return WallOutcome(PathPosition.ALL_LAMBDA)
        return WallOutcome(PathPosition.OFF_PATH)
    lambda0 = Fraction(-a * trace, 2 * (n - 1) * w.m) - b * t
    if lambda0 >= 0:
        return WallOutcome(PathPosition.ON_PATH, lambda0)
    return WallOutcome(PathPosition.OFF_PATH, lambda0)


def pairing_profile(w: MukaiVector, n: int, t: int) -> tuple[int, int]:
    surf = Surface(t)
    return (mukai_pairing(w, w, surf), mukai_pairing(w, ideal_sheaf_vector(n), surf))


def effectivity_form(t: int, n: int, p: PellPair, lambda0, w: MukaiVector) -> Fraction:
    """``Re(Z(w) * conj(Z(v_n))) / lambda^0``: its sign is that of Re(Z(w)/Z(v_n))."""
    surf = Surface(t)
    params = canonical_params(t, n, p).with_lambda0(lambda0)
    path = (n, p.b)
    zw = central_charge(surf, params, w, path)
    zv = central_charge(surf, params, ideal_sheaf_vector(n), path)
    return zw.re * zv.re + params.lambda_sq(path) * zw.im_coeff * zv.im_coeff


def is_effective(t: int, n: int, p: PellPair, lambda0, w: MukaiVector) -> bool:
    if not on_wall(t, n, p, lambda0, w):
        raise WallError(f"{w.as_tuple()} is not on the wall at lambda0={lambda0}")
    if mukai_pairing(w, w, Surface(t)) < -2:
        return False
    return effectivity_form(t, n, p, lambda0, w) > 0


def _classify(t, n, p, w, outcome, profile):
    """Wall types for which ``w`` is a witness."""
    kinds = [kind for kind, prof in PROFILES.items() if profile == prof]
    if profile[0] == -2 and profile[1] < 0:
        lambda0 = outcome.lambda0 if outcome.lambda0 is not None else Fraction(0)
        if is_effective(t, n, p, lambda0, w):
            kinds.append(TOTALLY_SEMISTABLE)
    return kinds


def _wall_slab(t, n, a, b, r_lo, r_hi, bound):
    # every witness profile has <w,w> in {-2, 0}, so for r != 0 the entry s is
    # forced by 2 t m^2 - 2 r s = target; r == 0 needs m == 0 and frees s
    p = PellPair(t * (n - 1), a, b, -1)
    found = []
    checked = 0
    for r in range(r_lo, r_hi + 1):
        for m in range(-bound, bound + 1):
            if r == 0:
                if m != 0:
                    continue
                candidates = range(-bound, bound + 1)
            else:
                candidates = []
                for target in (-2, 0):
                    num = 2 * t * m * m - target
                    if num % (2 * r) == 0:
                        candidates.append(num // (2 * r))
            for s in candidates:
                if abs(s) > bound or (r == 0 and m == 0 and s == 0):
                    continue
                w = MukaiVector(r, m, s)
                outcome = wall_lambda0(t, n, p, w)
                if not outcome.on_path:
                    continue
                checked += 1
                profile = pairing_profile(w, n, t)
                for kind in _classify(t, n, p, w, outcome, profile):
                    found.append((kind, WallCandidate(w, outcome.lambda0, profile)))
    return found, checked


def scan_walls(t: int, n: int, p: PellPair, bound: int = 100, workers: int = 1) -> WallScanReport:
    """Collect on-path witnesses of every wall type among ``|r|, |m|, |s| <= bound``.

    Slabs of ``r`` may run in separate processes; witnesses are sorted so the
    report does not depend on the partitioning.
    """
    _check_criterion(t, n, p)
    if bound < 1:
        raise WallError(f"bound must be positive, got {bound}")
    jobs = [(t, n, p.a, p.b, lo, hi, bound) for lo, hi in split_range(-bound, bound, workers)]
    report = WallScanReport(bound)
    for found, checked in map_slabs(_wall_slab, jobs, workers):
        report.on_path_checked += checked
        for kind, cand in found:
            report.witnesses[kind].append(cand)
    for kind in WALL_TYPES:
        report.witnesses[kind].sort(key=lambda c: c.w.as_tuple())
    return report


class FlopVerdict(enum.Enum):
    EXCLUDED_ON_PATH = "ExcludedOnPath"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class FloppingResult:
    profile: tuple[int, int]
    discriminant: int
    verdict: FlopVerdict
    lambda0_upper: Fraction | None
    search_bound: int
    witnesses: tuple[WallCandidate, ...] = ()


def profile_discriminant(n: int, profile: tuple[int, int]) -> int:
    """``k^2 - 4 p (n-1)`` for ``<w,w> = 2p`` and ``<w,v_n> = k``."""
    p_val, k = profile
    return k * k - 4 * p_val * (n - 1)


def unit_discriminant_profiles(n: int, count: int = 4) -> list[tuple[int, int]]:
    """The first ``count`` profiles ``(p, k)``, ``k >= 1``, with discriminant 1."""
    out = []
    k = 1
    while len(out) < count:
        if (k * k - 1) % (4 * (n - 1)) == 0:
            out.append(((k * k - 1) // (4 * (n - 1)), k))
        k += 1
    return out


def profile_search(
    t: int, n: int, p: PellPair, profile: tuple[int, int], bound: int
) -> list[WallCandidate]:
    """On-path classes with the given profile and ``1 <= |m| <= bound``.

    With ``X = 2(n-1) r - k`` the profile is equivalent to
    ``X^2 - 4 t (n-1) m^2 = k^2 - 4p(n-1)``, so each ``m`` pins ``X`` up to sign.
    ``m = 0`` is never on the path unless ``X = 0``, i.e. zero discriminant.
    """
    p_val, k = profile
    D = t * (n - 1)
    disc = profile_discriminant(n, profile)
    hits = []
    for m in range(-bound, bound + 1):
        if m == 0:
            continue
        X2 = disc + 4 * D * m * m
        X = isqrt(X2)
        if X * X != X2:
            continue
        for x in {X, -X}:
            if (x + k) % (2 * (n - 1)):
                continue
            r = (x + k) // (2 * (n - 1))
            w = MukaiVector(r, m, (n - 1) * r - k)
            assert pairing_profile(w, n, t) == (2 * p_val, k)
            outcome = wall_lambda0(t, n, p, w)
            if outcome.on_path:
                hits.append(WallCandidate(w, outcome.lambda0, (2 * p_val, k)))
    return sorted(hits, key=lambda c: c.w.as_tuple())


def flopping_obstruction(
    t: int, n: int, p: PellPair, profile: tuple[int, int], search_bound: int = 100
) -> FloppingResult:
    """Decide whether a class of profile ``(p, k)`` can sit on the path.

    For discriminant 1 the profile equation is the positive Pell equation for
    ``D = t(n-1)`` in ``(X, 2m)``; minimality of its fundamental solution
    ``(x1, y1)`` bounds ``|m| / |X|`` from below and forces
    ``lambda0 <= a x1 / ((n-1) y1) - bt``, which is negative.  Other positive
    discriminants fall back to a direct search in ``m``.
    """
    _check_criterion(t, n, p)
    disc = profile_discriminant(n, profile)
    if disc <= 0:
        raise WallError(f"profile {profile} has discriminant {disc} <= 0")
    witnesses = tuple(profile_search(t, n, p, profile, search_bound))
    if disc != 1:
        return FloppingResult(profile, disc, FlopVerdict.INCONCLUSIVE, None, search_bound, witnesses)
    fund = solve_pos_pell(t * (n - 1))
    upper = Fraction(p.a * fund.a, (n - 1) * fund.b) - p.b * t
    if upper >= 0:
        return FloppingResult(profile, disc, FlopVerdict.INCONCLUSIVE, upper, search_bound, witnesses)
    if witnesses:
        raise WallError(
            f"profile {profile} excluded by the Pell bound but found on path: {witnesses[0]}"
        )
    return FloppingResult(profile, disc, FlopVerdict.EXCLUDED_ON_PATH, upper, search_bound, witnesses)
