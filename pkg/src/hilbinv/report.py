"""Text and JSON rendering of classification reports.

JSON output is versioned by ``schema_version``, has sorted keys, and writes
every integer as a decimal string and every rational as ``"p/q"`` so big
Pell solutions survive consumers with 64-bit or float numbers.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .classify import (
    Biregularity,
    BiregularityKind,
    CellError,
    CheckResult,
    ClassificationReport,
    SweepResult,
    Verdict,
)
from .isometry import MukaiIsometry, NsIsometry
from .lattice import DiscriminantAction, MukaiVector
from .pell import PellPair
from .stability import StabilityParams
from .walls import WALL_TYPES, FloppingResult, FlopVerdict, WallCandidate, WallScanReport

SCHEMA_VERSION = "1"
FORMATS = ("text", "json")


def _int(x: int | None) -> str | None:
    return None if x is None else str(x)


def _frac(x: Fraction | None) -> str | None:
    return None if x is None else str(x)


def _matrix(entries) -> list[list[str]]:
    return [[str(x) for x in row] for row in entries]


def _unmatrix(rows) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(x) for x in row) for row in rows)


def _opt(value, fn):
    return None if value is None else fn(value)


def _pell(p: PellPair) -> dict:
    return {"D": _int(p.D), "a": _int(p.a), "b": _int(p.b), "sign": _int(p.sign)}


def _unpell(d: dict) -> PellPair:
    return PellPair(int(d["D"]), int(d["a"]), int(d["b"]), int(d["sign"]))


def _candidate(c: WallCandidate) -> dict:
    return {
        "w": [str(x) for x in c.w.as_tuple()],
        "lambda0": _frac(c.lambda0),
        "profile": [str(x) for x in c.profile],
    }


def _uncandidate(d: dict) -> WallCandidate:
    r, m, s = (int(x) for x in d["w"])
    return WallCandidate(
        MukaiVector(r, m, s),
        _opt(d["lambda0"], Fraction),
        tuple(int(x) for x in d["profile"]),
    )


def _flop(f: FloppingResult) -> dict:
    return {
        "profile": [str(x) for x in f.profile],
        "discriminant": _int(f.discriminant),
        "verdict": f.verdict.value,
        "lambda0_upper": _frac(f.lambda0_upper),
        "search_bound": _int(f.search_bound),
        "witnesses": [_candidate(c) for c in f.witnesses],
    }


def _unflop(d: dict) -> FloppingResult:
    return FloppingResult(
        tuple(int(x) for x in d["profile"]),
        int(d["discriminant"]),
        FlopVerdict(d["verdict"]),
        _opt(d["lambda0_upper"], Fraction),
        int(d["search_bound"]),
        tuple(_uncandidate(c) for c in d["witnesses"]),
    )


def report_to_dict(report: ClassificationReport) -> dict[str, Any]:
    walls = report.wall_report
    disc = report.discriminant
    return {
        "t": _int(report.t),
        "n": _int(report.n),
        "degree": _int(2 * report.t),
        "verdict": report.verdict.value,
        "verdict_label": report.verdict_label,
        "reason": report.reason,
        "pell": _opt(report.pell, _pell),
        "pos_pell": _opt(report.pos_pell, _pell),
        "ns_matrix": _opt(report.ns_matrix, lambda m: _matrix(m.entries)),
        "mukai_matrix": _opt(report.mukai_matrix, lambda m: _matrix(m.entries)),
        "stability": _opt(report.stability, lambda s: {
            "x": _frac(s.x), "y": _frac(s.y), "lambda0": _frac(s.lambda0),
        }),
        "discriminant": _opt(disc, lambda d: {
            "modulus": _int(d.modulus),
            "multiplier": _int(d.multiplier),
            "h_modulus": _int(d.h_modulus),
            "h_multiplier": _int(d.h_multiplier),
            "glue_ok": d.glue_ok,
        }),
        "checks": {
            name: {"passed": c.passed, "bound": _int(c.bound), "detail": c.detail}
            for name, c in report.checks.items()
        },
        "wall_report": _opt(walls, lambda w: {
            "bound": _int(w.bound),
            "on_path_checked": _int(w.on_path_checked),
            "witnesses": {k: [_candidate(c) for c in v] for k, v in w.witnesses.items()},
        }),
        "flops": [_flop(f) for f in report.flops],
        "biregularity": _opt(report.biregularity, lambda b: {
            "kind": b.kind.value, "source": b.source,
        }),
        "known_description": report.known_description,
    }


def report_from_dict(d: dict[str, Any]) -> ClassificationReport:
    walls = None
    if d["wall_report"] is not None:
        w = d["wall_report"]
        walls = WallScanReport(
            int(w["bound"]),
            {k: [_uncandidate(c) for c in w["witnesses"].get(k, [])] for k in WALL_TYPES},
            int(w["on_path_checked"]),
        )
    return ClassificationReport(
        t=int(d["t"]),
        n=int(d["n"]),
        verdict=Verdict(d["verdict"]),
        reason=d["reason"],
        pell=_opt(d["pell"], _unpell),
        pos_pell=_opt(d["pos_pell"], _unpell),
        ns_matrix=_opt(d["ns_matrix"], lambda m: NsIsometry(_unmatrix(m))),
        mukai_matrix=_opt(d["mukai_matrix"], lambda m: MukaiIsometry(_unmatrix(m))),
        stability=_opt(d["stability"], lambda s: StabilityParams(
            Fraction(s["x"]), Fraction(s["y"]), Fraction(s["lambda0"]),
        )),
        discriminant=_opt(d["discriminant"], lambda x: DiscriminantAction(
            int(x["modulus"]), int(x["multiplier"]),
            int(x["h_modulus"]), int(x["h_multiplier"]), x["glue_ok"],
        )),
        checks={
            name: CheckResult(c["passed"], _opt(c["bound"], int), c["detail"])
            for name, c in d["checks"].items()
        },
        wall_report=walls,
        flops=[_unflop(f) for f in d["flops"]],
        biregularity=_opt(d["biregularity"], lambda b: Biregularity(
            BiregularityKind(b["kind"]), b["source"],
        )),
        known_description=d["known_description"],
    )


def _dumps(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def report_json(report: ClassificationReport) -> str:
    return _dumps({
        "schema_version": SCHEMA_VERSION,
        "kind": "classification",
        "report": report_to_dict(report),
    })


def sweep_json(result: SweepResult) -> str:
    return _dumps({
        "schema_version": SCHEMA_VERSION,
        "kind": "sweep",
        "reports": [report_to_dict(r) for r in result.reports],
        "errors": [{"t": _int(e.t), "n": _int(e.n), "message": e.message} for e in result.errors],
        "summary": {k: _int(v) for k, v in result.summary.items()},
    })


def parse_report_json(text: str) -> ClassificationReport:
    payload = json.loads(text)
    if payload.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema_version {payload.get('schema_version')!r}")
    return report_from_dict(payload["report"])


def parse_sweep_json(text: str) -> SweepResult:
    payload = json.loads(text)
    if payload.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema_version {payload.get('schema_version')!r}")
    return SweepResult(
        [report_from_dict(r) for r in payload["reports"]],
        [CellError(int(e["t"]), int(e["n"]), e["message"]) for e in payload["errors"]],
    )


def _fmt_matrix(entries, indent: str) -> list[str]:
    width = max(len(str(x)) for row in entries for x in row)
    return [indent + "[" + " ".join(str(x).rjust(width) for x in row) + "]" for row in entries]


def report_text(report: ClassificationReport) -> str:
    lines = [f"S^[{report.n}] on a generic K3 of degree {2 * report.t} (t={report.t})"]
    if report.verdict is Verdict.NATURAL_COVERING:
        lines.append("verdict: natural covering involution (degree 2)")
    elif report.verdict is Verdict.NO_INVOLUTION:
        why = {
            "square": f"t(n-1) = {report.t * (report.n - 1)} is a perfect square",
            "neg-pell-unsolvable": f"X^2 - {report.t * (report.n - 1)} Y^2 = -1 has no solution",
        }[report.reason]
        lines.append(f"verdict: no derived-natural involution ({why})")
    else:
        p = report.pell
        lines.append("verdict: derived-natural birational involution")
        lines.append(f"negative Pell X^2 - {p.D} Y^2 = -1: (a, b) = ({p.a}, {p.b})")
        if report.pos_pell is not None:
            q = report.pos_pell
            lines.append(f"positive Pell fundamental solution: ({q.a}, {q.b})")
        lines.append("NS(S^[n]) isometry (basis theta(0,-H,0), theta(1,0,n-1)):")
        lines += _fmt_matrix(report.ns_matrix.entries, "  ")
        lines.append("Num(S) isometry (basis (1,0,0), (0,H,0), (0,0,1)):")
        lines += _fmt_matrix(report.mukai_matrix.entries, "  ")
        s = report.stability
        lines.append(f"fixed stability parameters: omega = {s.x} H, beta = {s.y} H")
        d = report.discriminant
        lines.append(
            f"discriminant action: x{d.multiplier} on Z/{d.modulus}, "
            f"x{d.h_multiplier} on Z/{d.h_modulus}"
        )
        lines.append("checks:")
        for name, c in report.checks.items():
            bound = "" if c.bound is None else f" (bound {c.bound})"
            detail = f" [{c.detail}]" if c.detail else ""
            lines.append(f"  {'PASS' if c.passed else 'FAIL'} {name}{bound}{detail}")
        w = report.wall_report
        lines.append(f"wall scan (bound {w.bound}, {w.on_path_checked} on-path classes checked):")
        for kind in WALL_TYPES:
            lines.append(f"  {kind}: {len(w.witnesses[kind])} witnesses")
        for f in report.flops:
            extra = "" if f.lambda0_upper is None else f", lambda0 <= {f.lambda0_upper}"
            lines.append(
                f"flop profile (p, k) = {f.profile}: {f.verdict.value} "
                f"(discriminant {f.discriminant}{extra}, {len(f.witnesses)} on-path witnesses "
                f"with |m| <= {f.search_bound})"
            )
    if report.biregularity is not None:
        b = report.biregularity
        lines.append(f"biregularity: {b.kind.value}" + (f" ({b.source})" if b.source else ""))
    if report.known_description:
        lines.append(f"known description: {report.known_description}")
    return "\n".join(lines) + "\n"


def sweep_text(result: SweepResult) -> str:
    lines = [f"{'t':>4} {'n':>4}  verdict"]
    for r in result.reports:
        pell = f"  (a, b) = ({r.pell.a}, {r.pell.b})" if r.pell is not None else ""
        lines.append(f"{r.t:>4} {r.n:>4}  {r.verdict_label}{pell}")
    for e in result.errors:
        lines.append(f"{e.t:>4} {e.n:>4}  ERROR {e.message}")
    lines.append("summary: " + ", ".join(f"{k}={v}" for k, v in result.summary.items()))
    return "\n".join(lines) + "\n"


def render(report: ClassificationReport, format: str = "text") -> bytes:
    if format == "text":
        return report_text(report).encode("utf-8")
    if format == "json":
        return report_json(report).encode("utf-8")
    raise ValueError(f"unknown format {format!r}; expected one of {FORMATS}")


def render_sweep(result: SweepResult, format: str = "text") -> bytes:
    if format == "text":
        return sweep_text(result).encode("utf-8")
    if format == "json":
        return sweep_json(result).encode("utf-8")
    raise ValueError(f"unknown format {format!r}; expected one of {FORMATS}")
