"""Structured obstruction reports and the pipeline that fills them.

Reports are a line-oriented `key: value` text format with `---` separating
records in a stream; the emitter and parser round-trip losslessly.  All
polynomial fields hold canonical forms.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field, replace

from .groupring import format_group_elem, parse_group_elem, project
from .laurent import format_poly2
from .links import (
    analyze_closure,
    alexander_polynomial,
    braid_to_presentation,
    parse_braid,
    parse_presentation,
)
from .normdecide import BatteryCheck, Norm, NotNorm, SearchBounds, Verdict, decide


class PipelineError(ValueError):
    """Input is structurally valid but the pipeline cannot proceed."""


@dataclass(frozen=True)
class ObstructionReport:
    input_kind: str                      # "braid" | "presentation" | "poly"
    input_text: str                      # inline text or file identity
    p: int
    murasugi: str                        # canonical g,t text
    augment: tuple[int, ...]
    battery: tuple[BatteryCheck, ...]
    verdict: str                         # "norm" | "not-norm" | "inconclusive"
    linking_number: int | None = None
    delta: str | None = None             # canonical x,y text (link inputs)
    warnings: tuple[str, ...] = ()
    witness: str | None = None
    failed_check: str | None = None
    evidence: str | None = None
    reason: str | None = None
    max_coeff: int = 3
    max_tdeg: int = 0
    budget: int = 10_000_000
    time_ms: int = 0


VERDICT_EXIT = {"norm": 0, "not-norm": 1, "inconclusive": 2}


def verdict_name(v: Verdict) -> str:
    if isinstance(v, Norm):
        return "norm"
    if isinstance(v, NotNorm):
        return "not-norm"
    return "inconclusive"


def build_check_report(
    kind: str,
    text: str,
    p: int,
    bounds: SearchBounds | None = None,
    drop_relator: int | None = None,
) -> ObstructionReport:
    """Run the full pipeline for one input and assemble its report.

    Link inputs go braid/presentation -> Alexander polynomial -> projection;
    poly inputs are decided directly.
    """
    if p < 2:
        raise ValueError("the period p must be at least 2")
    if bounds is None:
        bounds = SearchBounds()
    started = time.monotonic()
    warnings: list[str] = []
    linking = None
    delta_text = None
    if kind == "poly":
        elem = parse_group_elem(text, p)
    else:
        if kind == "braid":
            braid = parse_braid(text)
            info = analyze_closure(braid)
            linking = info.linking_number
            pres = braid_to_presentation(braid)
        elif kind == "presentation":
            pres = parse_presentation(text)
            warnings.append("linking number unknown for presentation input")
        else:
            raise ValueError(f"unknown input kind {kind!r}")
        if linking == 0:
            warnings.append("linking number 0: outside the nontrivial-linking hypothesis")
        delta = alexander_polynomial(pres, drop_relator)
        delta_text = format_poly2(delta)
        elem = project(delta, p)
    if not elem:
        raise PipelineError(
            "Murasugi polynomial is zero; the norm decision applies only to "
            "nonzero polynomials (is the linking number zero?)"
        )
    elem = elem.canonical()
    verdict, battery_report = decide(elem, bounds)
    resolved_tdeg = (
        bounds.max_t_degree if bounds.max_t_degree is not None else elem.t_span() // 2
    )
    rep = ObstructionReport(
        input_kind=kind,
        input_text=text if kind != "presentation" else text.strip().splitlines()[0] + " ...",
        p=p,
        murasugi=format_group_elem(elem),
        augment=tuple(elem.augment()),
        battery=battery_report.checks,
        verdict=verdict_name(verdict),
        linking_number=linking,
        delta=delta_text,
        warnings=tuple(warnings),
        max_coeff=bounds.max_abs_coeff,
        max_tdeg=resolved_tdeg,
        budget=bounds.budget,
        time_ms=int((time.monotonic() - started) * 1000),
    )
    if isinstance(verdict, Norm):
        rep = replace(rep, witness=format_group_elem(verdict.witness))
    elif isinstance(verdict, NotNorm):
        rep = replace(rep, failed_check=verdict.check, evidence=verdict.evidence)
    else:
        rep = replace(rep, reason=verdict.reason, max_tdeg=verdict.max_t_degree)
    return rep


# ---------------------------------------------------------------------------
# emit / parse
# ---------------------------------------------------------------------------

def emit_report(rep: ObstructionReport) -> str:
    lines = [
        f"input_kind: {rep.input_kind}",
        f"input: {rep.input_text}",
        f"p: {rep.p}",
    ]
    if rep.linking_number is not None:
        lines.append(f"linking_number: {rep.linking_number}")
    lines.append("warnings: " + "; ".join(rep.warnings))
    if rep.delta is not None:
        lines.append(f"delta: {rep.delta}")
    lines.append(f"murasugi: {rep.murasugi}")
    lines.append("augment: " + ",".join(str(v) for v in rep.augment))
    for chk in rep.battery:
        lines.append(f"battery.{chk.name}: {chk.status}; {chk.evidence}")
    lines.append(f"verdict: {rep.verdict}")
    if rep.witness is not None:
        lines.append(f"witness: {rep.witness}")
    if rep.failed_check is not None:
        lines.append(f"failed_check: {rep.failed_check}")
    if rep.evidence is not None:
        lines.append(f"evidence: {rep.evidence}")
    if rep.reason is not None:
        lines.append(f"reason: {rep.reason}")
    lines.append(f"bounds: max_coeff={rep.max_coeff} max_tdeg={rep.max_tdeg} budget={rep.budget}")
    lines.append(f"time_ms: {rep.time_ms}")
    return "\n".join(lines) + "\n"


def parse_report(text: str) -> ObstructionReport:
    fields: dict[str, str] = {}
    battery: list[BatteryCheck] = []
    for raw in text.splitlines():
        line = raw.rstrip("\n")
        if not line.strip():
            continue
        key, sep, value = line.partition(": ")
        if not sep:
            key, value = line.rstrip(":"), ""
        if key.startswith("battery."):
            status, _, evidence = value.partition("; ")
            battery.append(BatteryCheck(key[len("battery."):], status, evidence))
        else:
            fields[key] = value
    bounds_parts = dict(kv.split("=") for kv in fields["bounds"].split())
    augment = tuple(int(v) for v in fields["augment"].split(",")) if fields["augment"] else ()
    warnings = tuple(w for w in fields.get("warnings", "").split("; ") if w)
    return ObstructionReport(
        input_kind=fields["input_kind"],
        input_text=fields["input"],
        p=int(fields["p"]),
        murasugi=fields["murasugi"],
        augment=augment,
        battery=tuple(battery),
        verdict=fields["verdict"],
        linking_number=int(fields["linking_number"]) if "linking_number" in fields else None,
        delta=fields.get("delta"),
        warnings=warnings,
        witness=fields.get("witness"),
        failed_check=fields.get("failed_check"),
        evidence=fields.get("evidence"),
        reason=fields.get("reason"),
        max_coeff=int(bounds_parts["max_coeff"]),
        max_tdeg=int(bounds_parts["max_tdeg"]),
        budget=int(bounds_parts["budget"]),
        time_ms=int(fields["time_ms"]),
    )


RECORD_SEPARATOR = "---"


def emit_stream(chunks: list[str]) -> str:
    return (RECORD_SEPARATOR + "\n").join(chunks)


def split_stream(text: str) -> list[str]:
    return [part for part in text.split(RECORD_SEPARATOR + "\n") if part.strip()]
