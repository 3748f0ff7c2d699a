"""
Report generation: JSON payloads and the human-readable text layout.

Field elements print in the expression syntax accepted by the parser. With
``raw_coeffs`` they become coefficient records instead (conductor plus rationals over the
power basis) for machine consumers.
"""

from __future__ import annotations

import time
from contextlib import contextmanager
from fractions import Fraction
from typing import Any, Dict, Iterator, List, Optional

from . import __version__
from .fields import Cyc, Poly, RatFunc
from .invariance import InvarianceResult, Verdict, Witness
from .linalg import ExactMatrix, ExactVector

SCHEMA_VERSION = 1


@contextmanager
def timed(sink: Dict[str, Any]) -> Iterator[None]:
    """Record the elapsed wall time of the block in ``sink["timing_ms"]``."""
    start = time.perf_counter()
    try:
        yield
    finally:
        sink["timing_ms"] = round((time.perf_counter() - start) * 1000, 3)


def _raw_poly(p: Poly) -> Dict[str, Any]:
    return {"var": p.var, "coeffs": [element_to_json(c, raw=True) for c in p.coeffs]}


def element_to_json(x: Any, raw: bool = False) -> Any:
    if not raw:
        return str(x)
    if isinstance(x, Cyc):
        return {"conductor": x.conductor, "coeffs": [str(c) for c in x.coeffs]}
    if isinstance(x, RatFunc):
        num, den = x.parts()
        return {"num": _raw_poly(num), "den": _raw_poly(den)}
    if isinstance(x, Poly):
        return _raw_poly(x)
    if isinstance(x, (int, Fraction)):
        return {"conductor": 1, "coeffs": [str(Fraction(x))]}
    return str(x)


def matrix_to_json(m: ExactMatrix, raw: bool = False) -> List[List[Any]]:
    return [[element_to_json(a, raw) for a in row] for row in m.entries]


def vector_to_json(v: ExactVector, raw: bool = False) -> List[Any]:
    return [element_to_json(a, raw) for a in v]


def poly_to_json(p: Poly, raw: bool = False) -> Dict[str, Any]:
    """String form plus coefficients, lowest degree first."""
    return {
        "poly": str(p),
        "degree": p.degree,
        "coeffs": [element_to_json(c, raw) for c in p.coeffs],
    }


def _result_to_json(res: InvarianceResult, raw: bool) -> Dict[str, Any]:
    out: Dict[str, Any] = {
        "pattern": res.pattern.label(),
        "outcome": res.outcome,
        "solutions": [w.label() for w in res.witnesses],
    }
    if res.all_lines:
        out["all_lines"] = True
    if res.unresolved is not None:
        out["minimal_polynomial"] = poly_to_json(res.unresolved, raw)
    return out


def _witness_to_json(w: Witness, raw: bool) -> Dict[str, Any]:
    return {
        "label": w.label(),
        "dimension": w.dimension,
        "basis": [vector_to_json(v, raw) for v in w.basis],
    }


def _detail_to_json(value: Any, raw: bool) -> Any:
    if isinstance(value, (bool, str, int)) or value is None:
        return value
    if isinstance(value, list):
        return [_detail_to_json(v, raw) for v in value]
    return element_to_json(value, raw)


def verdict_to_json(v: Verdict, raw: bool = False) -> Dict[str, Any]:
    return {
        "status": v.status.value,
        "witnesses": [_witness_to_json(w, raw) for w in v.witnesses],
        "constraints": [poly_to_json(p, raw) for p in v.constraints],
        "trace": {
            str(d): [_result_to_json(r, raw) for r in results] for d, results in v.trace.items()
        },
        "unresolved": [
            {"pattern": p.label(), "minimal_polynomial": poly_to_json(m, raw)}
            for p, m in v.unresolved
        ],
        "details": {k: _detail_to_json(val, raw) for k, val in v.details.items()},
    }


def build_report(
    command: str,
    job: Dict[str, Any],
    result: Dict[str, Any],
    timing_ms: Optional[float] = None,
) -> Dict[str, Any]:
    """Top-level report; everything except ``timing_ms`` is reproducible."""
    return {
        "schema_version": SCHEMA_VERSION,
        "engine_version": __version__,
        "command": command,
        "job": job,
        "result": result,
        "timing_ms": timing_ms,
    }


def _render_value(value: Any, indent: str, lines: List[str]) -> None:
    if isinstance(value, dict):
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{indent}{k}:")
                _render_value(v, indent + "  ", lines)
            else:
                lines.append(f"{indent}{k}: {v}")
    elif isinstance(value, list):
        if value and all(isinstance(r, list) for r in value):
            for row in value:
                lines.append(indent + "[" + ", ".join(str(a) for a in row) + "]")
        else:
            for item in value:
                if isinstance(item, (dict, list)):
                    lines.append(f"{indent}-")
                    _render_value(item, indent + "  ", lines)
                else:
                    lines.append(f"{indent}- {item}")
    else:
        lines.append(f"{indent}{value}")


def render_text(report: Dict[str, Any]) -> str:
    """Banner layout: job echo, then one titled section per result entry."""
    lines = [
        "=" * 80,
        f"QPASCAL {report['command'].upper()} REPORT",
        "=" * 80,
        f"Engine version: {report['engine_version']}",
        f"Schema version: {report['schema_version']}",
        "",
        "JOB",
        "-" * 40,
    ]
    _render_value(report["job"], "  ", lines)
    lines.append("")
    for key, value in report["result"].items():
        lines.extend([key.upper().replace("_", " "), "-" * 40])
        _render_value(value, "  ", lines)
        lines.append("")
    lines.extend(
        [
            "=" * 80,
            "Indices are 0-based: e0..e(n) and rows/columns 0..n.",
            f"Elapsed: {report['timing_ms']} ms",
            "=" * 80,
        ]
    )
    return "\n".join(lines)
