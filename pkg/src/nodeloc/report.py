"""Full-analysis reports over a topology document.

``analyze`` runs the per-k condition tables and the maximum-identifiability
bounds for the requested probing models, optionally cross-checked against
the brute-force engine, and packages everything with provenance so repeated
runs on the same input are byte-identical.  Reports serialize to stable JSON
or to a human-readable text table.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass
from typing import Any, Mapping

from ._version import __version__
from .conditions import (
    Identifiability,
    IdentifiabilityBounds,
    Verdict,
    cap_bounds,
    cap_verdicts,
    csp_bounds,
    csp_verdicts,
    up_bounds,
    up_verdicts,
)
from .document import TopologyDocument, emit_topology
from .ensemble import CoverProfile, cover_profile
from .errors import FormatError, InternalError, UsageError
from .oracle import CAP, CSP, DEFAULT_GUARD, max_identifiability, up_model

_MODEL_ORDER = ("CAP", "CSP", "UP")


@dataclass(frozen=True)
class ModelSection:
    kind: str
    verdicts: tuple[Verdict, ...]  # indexed by k starting at k_range[0]
    bounds: IdentifiabilityBounds
    oracle_max: int | None
    profile: CoverProfile | None


@dataclass(frozen=True)
class AnalysisReport:
    document: TopologyDocument
    sigma: int
    k_range: tuple[int, int]
    sections: tuple[ModelSection, ...]
    options: dict[str, Any]
    input_sha256: str


def analyze(
    doc: TopologyDocument,
    *,
    models: tuple[str, ...] | None = None,
    oracle: bool = False,
    guard: int = DEFAULT_GUARD,
    k_range: tuple[int, int] | None = None,
) -> AnalysisReport:
    """Run every requested analysis on the document.

    ``models`` defaults to CAP and CSP, plus UP when the document carries
    paths.  ``k_range`` restricts the verdict table (inclusive bounds);
    ``oracle`` adds brute-force results, refusing when the non-monitor count
    exceeds ``guard``.
    """
    topology = doc.to_topology()
    sigma = topology.sigma
    if sigma == 0:
        raise UsageError("every node is a monitor; there are no failures to analyze")
    if models is None:
        models = ("CAP", "CSP") + (("UP",) if doc.paths is not None else ())
    for kind in models:
        if kind not in _MODEL_ORDER:
            raise UsageError(f"unknown probing model {kind!r}")
    if "UP" in models and doc.paths is None:
        raise UsageError("UP analysis requested but the document has no paths")
    lo, hi = k_range if k_range is not None else (0, sigma)
    if not 0 <= lo <= hi <= sigma:
        raise UsageError(f"k range must satisfy 0 <= lo <= hi <= {sigma}")

    sections = []
    for kind in _MODEL_ORDER:
        if kind not in models:
            continue
        profile = None
        if kind == "CAP":
            verdicts = cap_verdicts(topology)
            bounds = cap_bounds(topology)
            model = CAP
        elif kind == "CSP":
            verdicts = csp_verdicts(topology)
            bounds = csp_bounds(topology)
            model = CSP
        else:
            ensemble = doc.to_ensemble(topology)
            profile = cover_profile(ensemble)
            verdicts = up_verdicts(profile)
            bounds = up_bounds(profile)
            model = up_model(ensemble)
        oracle_max = max_identifiability(topology, model, guard=guard) if oracle else None
        section = ModelSection(kind, verdicts[lo : hi + 1], bounds, oracle_max, profile)
        _validate_section(section, lo)
        sections.append(section)

    return AnalysisReport(
        document=doc,
        sigma=sigma,
        k_range=(lo, hi),
        sections=tuple(sections),
        options={"models": list(models), "oracle": oracle, "guard": guard, "k_range": [lo, hi]},
        input_sha256=hashlib.sha256(emit_topology(doc).encode("utf-8")).hexdigest(),
    )


def _validate_section(section: ModelSection, k_lo: int) -> None:
    dead = False
    for offset, verdict in enumerate(section.verdicts):
        if dead and verdict.value is not Identifiability.NOT_IDENTIFIABLE:
            raise InternalError(
                f"{section.kind} verdict table is not monotone at k={k_lo + offset}"
            )
        dead = dead or verdict.value is Identifiability.NOT_IDENTIFIABLE
    if section.oracle_max is not None:
        if not section.bounds.lower <= section.oracle_max <= section.bounds.upper:
            raise InternalError(
                f"{section.kind} oracle result {section.oracle_max} escapes the "
                f"reported bounds [{section.bounds.lower}, {section.bounds.upper}]"
            )


def _size_json(size: int | float) -> int | str:
    return "inf" if math.isinf(size) else int(size)


def report_payload(report: AnalysisReport) -> dict[str, Any]:
    """JSON-ready dict form of the report."""
    doc = report.document
    models: dict[str, Any] = {}
    for section in report.sections:
        entry: dict[str, Any] = {
            "verdicts": [
                {
                    "k": report.k_range[0] + offset,
                    "value": verdict.value.value,
                    "sufficient": verdict.sufficient_holds,
                    "necessary": verdict.necessary_holds,
                    "rationale": verdict.rationale,
                }
                for offset, verdict in enumerate(section.verdicts)
            ],
            "bounds": {
                "lower": section.bounds.lower,
                "upper": section.bounds.upper,
                "exact": section.bounds.exact,
                "applicable": section.bounds.applicable,
                "guard_note": section.bounds.guard_note,
            },
            "oracle": (
                None
                if section.oracle_max is None
                else {"max_identifiability": section.oracle_max}
            ),
        }
        if section.profile is not None:
            entry["cover_profile"] = {
                "sizes": {
                    doc.names[v]: _size_json(size)
                    for v, size in sorted(section.profile.cover_sizes.items())
                },
                "min_cover": _size_json(section.profile.min_cover),
                "unobserved": [doc.names[v] for v in sorted(section.profile.unobserved)],
            }
        models[section.kind] = entry
    return {
        "report_version": 1,
        "provenance": {
            "input_sha256": report.input_sha256,
            "options": report.options,
            "tool": f"nodeloc {__version__}",
        },
        "nodes": list(doc.names),
        "monitors": [doc.names[m] for m in sorted(doc.monitors)],
        "sigma": report.sigma,
        "models": models,
    }


def emit_report(report: AnalysisReport, fmt: str = "json") -> str:
    """Serialize a report; ``fmt`` is ``json`` or ``text``."""
    payload = report_payload(report)
    if fmt == "json":
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if fmt == "text":
        return render_text(payload)
    raise UsageError(f"unknown report format {fmt!r}")


def reformat_report(data: bytes | str, fmt: str) -> str:
    """Re-emit an existing report JSON file in the requested format."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        payload = json.loads(data)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not valid JSON: {exc}") from exc
    if not isinstance(payload, dict) or payload.get("report_version") != 1:
        raise FormatError("not a nodeloc report (missing report_version 1)")
    if fmt == "json":
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if fmt == "text":
        return render_text(payload)
    raise UsageError(f"unknown report format {fmt!r}")


def render_text(payload: Mapping[str, Any]) -> str:
    """Stable human-readable rendering of a report payload."""
    lines = [
        "node failure identifiability report",
        f"tool: {payload['provenance']['tool']}",
        f"input sha256: {payload['provenance']['input_sha256']}",
        f"nodes: {len(payload['nodes'])}  monitors: {', '.join(payload['monitors'])}"
        f"  non-monitors: {payload['sigma']}",
        "",
    ]
    for kind in sorted(payload["models"]):
        entry = payload["models"][kind]
        lines.append(f"model {kind}")
        lines.append("  k  verdict           sufficient  necessary  rationale")
        for row in entry["verdicts"]:
            lines.append(
                f"  {row['k']:<2} {row['value']:<17} "
                f"{'yes' if row['sufficient'] else 'no':<11} "
                f"{'yes' if row['necessary'] else 'no':<10} {row['rationale']}"
            )
        b = entry["bounds"]
        exact = f" exact {b['exact']}" if b["exact"] is not None else ""
        note = f"  ({b['guard_note']})" if b["guard_note"] else ""
        lines.append(
            f"  max identifiability in [{b['lower']}, {b['upper']}]{exact}"
            f"{'' if b['applicable'] else '  [formula guard failed]'}{note}"
        )
        if entry.get("oracle"):
            lines.append(
                f"  oracle max identifiability: {entry['oracle']['max_identifiability']}"
            )
        if "cover_profile" in entry:
            sizes = entry["cover_profile"]["sizes"]
            rendered = ", ".join(f"{name}={sizes[name]}" for name in sorted(sizes))
            lines.append(f"  cover sizes: {rendered}  (min {entry['cover_profile']['min_cover']})")
            if entry["cover_profile"]["unobserved"]:
                lines.append(
                    "  unobserved nodes: "
                    + ", ".join(entry["cover_profile"]["unobserved"])
                )
        lines.append("")
    return "\n".join(lines)
