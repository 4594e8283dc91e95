"""Classification of derived-natural involutions of S^[n] for a generic K3 of degree 2t."""

from __future__ import annotations

import enum
import json
import logging
from collections import Counter
from dataclasses import dataclass, field, replace
from functools import lru_cache
from importlib import resources

from ._slabs import map_slabs
from .isometry import (
    MukaiIsometry,
    NsIsometry,
    fixes_ideal_sheaf_vector,
    mukai_extension,
    ns_involution,
    restriction_consistent,
    verify_involution,
    verify_isometry,
)
from .lattice import DiscriminantAction, NsGram, Surface, discriminant_action, ideal_sheaf_vector, mukai_gram
from .pell import NegPellStatus, PellPair, aux_equation_scan, existence_criterion, solve_pos_pell
from .stability import (
    StabilityParams,
    canonical_params,
    central_charge,
    charge_invariance,
    spherical_positivity_scan,
)
from .walls import FloppingResult, WallScanReport, flopping_obstruction, scan_walls

log = logging.getLogger(__name__)


class ClassificationError(RuntimeError):
    """Criterion and verification disagree; carries the partial report."""

    def __init__(self, message: str, report: ClassificationReport | None = None):
        super().__init__(message)
        self.report = report


class Verdict(enum.Enum):
    NATURAL_COVERING = "NaturalCoveringInvolution"
    DERIVED_NATURAL = "DerivedNaturalInvolution"
    NO_INVOLUTION = "NoInvolution"


class BiregularityKind(enum.Enum):
    KNOWN_BIREGULAR = "KnownBiregular"
    BIRATIONAL_CERTIFIED_ON_PATH = "BirationalCertifiedOnPath"
    REQUIRES_EXTERNAL_CASE_LIST = "RequiresExternalCaseList"


@dataclass(frozen=True)
class Biregularity:
    kind: BiregularityKind
    source: str | None = None


@dataclass(frozen=True)
class CheckResult:
    passed: bool
    bound: int | None = None
    detail: str = ""


@dataclass(frozen=True)
class ClassifyOptions:
    scan_bound: int = 100
    positivity_bound: int = 200
    aux_bound: int = 10_000
    flop_profiles: tuple[tuple[int, int], ...] = ()
    flop_search_bound: int = 100
    workers: int = 1


@dataclass
class ClassificationReport:
    t: int
    n: int
    verdict: Verdict
    reason: str | None = None
    pell: PellPair | None = None
    pos_pell: PellPair | None = None
    ns_matrix: NsIsometry | None = None
    mukai_matrix: MukaiIsometry | None = None
    stability: StabilityParams | None = None
    discriminant: DiscriminantAction | None = None
    checks: dict[str, CheckResult] = field(default_factory=dict)
    wall_report: WallScanReport | None = None
    flops: list[FloppingResult] = field(default_factory=list)
    biregularity: Biregularity | None = None
    known_description: str | None = None

    @property
    def verdict_label(self) -> str:
        if self.verdict is Verdict.NO_INVOLUTION:
            return f"NoInvolution({self.reason})"
        return self.verdict.value

    @property
    def all_checks_pass(self) -> bool:
        return all(c.passed for c in self.checks.values())


@lru_cache(maxsize=1)
def _known_examples() -> dict[tuple[int, int], dict]:
    text = resources.files("hilbinv").joinpath("data/known_examples.json").read_text("utf-8")
    return {(e["t"], e["n"]): e for e in json.loads(text)["examples"]}


def known_examples_lookup(t: int, n: int) -> str | None:
    entry = _known_examples().get((t, n))
    return None if entry is None else entry["description"]


DEGREE_TWO_DESCRIPTION = (
    "natural covering involution phi^[n] induced by the covering involution of "
    "the double plane S -> P^2; Aut(S^[n]) = {phi^[n], id}. Any other non-natural "
    "birational automorphism, if one exists, acts by -1 on the discriminant group."
)


def _derived_natural(t: int, n: int, p: PellPair, options: ClassifyOptions) -> ClassificationReport:
    surf = Surface(t)
    gram = NsGram(t, n)
    M = ns_involution(t, n, p)
    tau = mukai_extension(t, n, p)
    params = canonical_params(t, n, p)
    pos = solve_pos_pell(p.D)
    disc = discriminant_action(M.entries, gram)

    checks = {
        "ns_isometry": CheckResult(verify_isometry(M.entries, gram.gram)),
        "ns_involution": CheckResult(verify_involution(M.entries)),
        "ns_det_minus_one": CheckResult(M.det == -1),
        "mukai_isometry": CheckResult(verify_isometry(tau.entries, mukai_gram(t))),
        "mukai_involution": CheckResult(verify_involution(tau.entries)),
        "mukai_det_minus_one": CheckResult(tau.det == -1),
        "fixes_v_n": CheckResult(fixes_ideal_sheaf_vector(tau, n)),
        "restriction_consistent": CheckResult(restriction_consistent(tau, M, gram)),
        "discriminant_identity": CheckResult(
            disc.is_identity, detail=f"multiplier {disc.multiplier} mod {disc.modulus}"
        ),
        "pos_pell_squares_neg_pell": CheckResult(
            (pos.a, pos.b) == (2 * p.a * p.a + 1, 2 * p.a * p.b)
        ),
        "charge_invariance": CheckResult(charge_invariance(tau, surf, params)),
        "im_charge_v_n_positive": CheckResult(
            central_charge(surf, params, ideal_sheaf_vector(n)).im_coeff > 0
        ),
    }
    hit = spherical_positivity_scan(t, n, p, options.positivity_bound, options.workers)
    checks["spherical_positivity"] = CheckResult(
        hit is None, options.positivity_bound, "" if hit is None else f"witness {hit.as_tuple()}"
    )
    if n != 2:
        aux = aux_equation_scan(t, n, options.aux_bound)
        checks["aux_equation_unsolvable"] = CheckResult(
            aux is None, options.aux_bound, "" if aux is None else f"witness {aux}"
        )
    walls = scan_walls(t, n, p, options.scan_bound, options.workers)
    checks["wall_scan_empty"] = CheckResult(walls.empty, options.scan_bound)
    flops = [
        flopping_obstruction(t, n, p, prof, options.flop_search_bound)
        for prof in options.flop_profiles
    ]

    entry = _known_examples().get((t, n))
    if entry is not None and entry["biregular"]:
        bireg = Biregularity(BiregularityKind.KNOWN_BIREGULAR, entry["source"])
    elif walls.empty:
        bireg = Biregularity(BiregularityKind.BIRATIONAL_CERTIFIED_ON_PATH)
    else:
        bireg = Biregularity(BiregularityKind.REQUIRES_EXTERNAL_CASE_LIST)

    return ClassificationReport(
        t, n, Verdict.DERIVED_NATURAL,
        pell=p, pos_pell=pos, ns_matrix=M, mukai_matrix=tau, stability=params,
        discriminant=disc, checks=checks, wall_report=walls, flops=flops,
        biregularity=bireg, known_description=known_examples_lookup(t, n),
    )


def classify(t: int, n: int, options: ClassifyOptions | None = None) -> ClassificationReport:
    if not isinstance(t, int) or not isinstance(n, int) or t < 1 or n < 2:
        raise ValueError(f"need integers t >= 1 and n >= 2, got t={t!r}, n={n!r}")
    options = options or ClassifyOptions()
    if t == 1:
        return ClassificationReport(
            t, n, Verdict.NATURAL_COVERING,
            biregularity=Biregularity(
                BiregularityKind.KNOWN_BIREGULAR, "covering involution of the double plane"
            ),
            known_description=DEGREE_TWO_DESCRIPTION,
        )
    outcome = existence_criterion(t, n)
    if isinstance(outcome, NegPellStatus):
        return ClassificationReport(t, n, Verdict.NO_INVOLUTION, reason=outcome.value)
    report = _derived_natural(t, n, outcome, options)
    failed = sorted(name for name, c in report.checks.items() if not c.passed)
    if failed:
        raise ClassificationError(
            f"t={t}, n={n}: Pell criterion holds but checks failed: {', '.join(failed)}", report
        )
    return report


@dataclass(frozen=True)
class CellError:
    t: int
    n: int
    message: str


@dataclass
class SweepResult:
    reports: list[ClassificationReport]
    errors: list[CellError]

    @property
    def summary(self) -> dict[str, int]:
        counts = Counter(r.verdict_label for r in self.reports)
        if self.errors:
            counts["error"] = len(self.errors)
        return dict(sorted(counts.items()))


def _classify_cell(t: int, n: int, options: ClassifyOptions):
    try:
        return classify(t, n, options)
    except (ClassificationError, ValueError) as exc:
        log.error("cell (t=%d, n=%d) failed: %s", t, n, exc)
        return CellError(t, n, str(exc))


def batch_sweep(
    t_range: range, n_range: range, options: ClassifyOptions | None = None, workers: int = 1
) -> SweepResult:
    """Classify every cell of ``t_range x n_range`` in ``(t, n)`` order."""
    if len(t_range) == 0 or len(n_range) == 0:
        raise ValueError("sweep ranges must be nonempty")
    options = options or ClassifyOptions()
    if workers > 1:
        # cells already run in parallel; keep each cell's scans sequential
        options = replace(options, workers=1)
    jobs = [(t, n, options) for t in t_range for n in n_range]
    reports, errors = [], []
    for out in map_slabs(_classify_cell, jobs, workers):
        (errors if isinstance(out, CellError) else reports).append(out)
    return SweepResult(reports, errors)
