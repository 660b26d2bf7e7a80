"""Machine-checkable verification certificates.

A certificate records the full chain of evidence behind one parameter
pair: the critical radius with its residual, the norm gap enclosure
(exact rationals serialized as integer strings so nothing is lost), the
sampled domination report and the quadrature cross-check.  Sampled
checks are labelled as such; only the exact-mode gap enclosure is a
proof-grade statement, and ``certified`` is set from it alone.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional

from . import __version__
from .domination import (
    DominationReport,
    DominationViolated,
    HypothesisViolated,
    NoInteriorRoot,
    critical_polynomial,
    critical_root,
    verify_domination,
)
from .family import Params, fraction_to_decimal
from .quadrature import CrossCheckReport, QuadratureGrid, QuadratureNotConverged, cross_check
from .series import DifferenceResult, norm_difference

SCHEMA = "korenblum.certificate.v1"

CHECK_ORDER = ("critical_root", "domination", "norm_gap", "cross_check")


def encode_fraction(x: Fraction) -> Dict[str, Any]:
    """Lossless JSON encoding of a rational, with a float rendering."""
    return {
        "numerator": str(x.numerator),
        "denominator": str(x.denominator),
        "float": float(x),
    }


def decode_fraction(d: Dict[str, Any]) -> Fraction:
    return Fraction(int(d["numerator"]), int(d["denominator"]))


def _domination_dict(report: DominationReport) -> Dict[str, Any]:
    return {
        "sampled_only": True,
        "c": report.c,
        "h_at_c": report.h_at_c,
        "h_at_1": report.h_at_1,
        "h_at_1_exact": report.h_at_1_exact,
        "pole_radius": report.pole_radius,
        "zero_radius": report.zero_radius,
        "grid_max_ratio": report.grid_max_ratio,
        "angular_peak_offset": report.angular_peak_offset,
        "radial_samples": report.radial_samples,
        "angular_samples": report.angular_samples,
        "tol": report.tol,
        "verdict": report.verdict,
    }


def _cross_check_dict(report: CrossCheckReport) -> Dict[str, Any]:
    return {
        "series_f": report.series_f,
        "quad_f_original": report.quad_f_original,
        "quad_f_substituted": report.quad_f_substituted,
        "series_g": report.series_g,
        "quad_g_original": report.quad_g_original,
        "quad_g_substituted": report.quad_g_substituted,
        "delta_quad": report.delta_quad,
        "max_discrepancy": report.max_discrepancy,
        "tol": report.tol,
        "passed": report.passed,
    }


def _norm_gap_dict(delta: DifferenceResult) -> Dict[str, Any]:
    if delta.mode == "exact":
        lower: Any = encode_fraction(delta.delta_lower)
        upper: Any = encode_fraction(delta.delta_upper)
    else:
        lower = float(delta.delta_lower)
        upper = float(delta.delta_upper)
    return {
        "mode": delta.mode,
        "truncation_index": delta.truncation_index,
        "lower": lower,
        "upper": upper,
        "certified": bool(delta.certifies),
    }


@dataclass
class Certificate:
    """JSON-shaped verification record; all fields are plain data."""

    params: Dict[str, Any]
    critical_radius: Optional[Dict[str, Any]]
    norm_gap: Optional[Dict[str, Any]]
    domination: Optional[Dict[str, Any]]
    cross_check: Optional[Dict[str, Any]]
    checks: List[Dict[str, Any]]
    passed: bool
    failed_check: Optional[str]
    wall_time_s: float
    schema: str = SCHEMA
    version: str = __version__

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema": self.schema,
            "version": self.version,
            "params": self.params,
            "critical_radius": self.critical_radius,
            "norm_gap": self.norm_gap,
            "domination": self.domination,
            "cross_check": self.cross_check,
            "checks": self.checks,
            "passed": self.passed,
            "failed_check": self.failed_check,
            "wall_time_s": self.wall_time_s,
        }

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Certificate":
        return cls(
            schema=data["schema"],
            version=data["version"],
            params=data["params"],
            critical_radius=data["critical_radius"],
            norm_gap=data["norm_gap"],
            domination=data["domination"],
            cross_check=data["cross_check"],
            checks=data["checks"],
            passed=data["passed"],
            failed_check=data["failed_check"],
            wall_time_s=data["wall_time_s"],
        )

    @classmethod
    def from_json(cls, text: str) -> "Certificate":
        return cls.from_dict(json.loads(text))

    def delta_lower_fraction(self) -> Optional[Fraction]:
        """Exact lower gap bound, when the certificate carries one."""
        if not self.norm_gap or self.norm_gap["mode"] != "exact":
            return None
        return decode_fraction(self.norm_gap["lower"])


def run_verification(
    params: Params,
    terms: int = 64,
    exact: bool = False,
    grid: Optional[QuadratureGrid] = None,
    root_tol: float = 1e-14,
    radial_samples: int = 256,
    angular_samples: int = 1024,
    domination_tol: float = 1e-12,
    cross_tol: float = 1e-8,
) -> Certificate:
    """Run the full verification chain and assemble a certificate.

    Checks run in a fixed order (critical root, domination, norm gap,
    quadrature cross-check) and stop at the first failure, which is
    recorded by name.
    """
    start = time.perf_counter()
    checks: List[Dict[str, Any]] = []
    failed: Optional[str] = None

    c_dict = None
    gap_dict = None
    dom_dict = None
    xc_dict = None

    c = None
    try:
        c = critical_root(params, tol=root_tol)
        c_dict = {
            "value": c,
            "residual": abs(float(critical_polynomial(params, c))),
            "tol": root_tol,
        }
        checks.append({"name": "critical_root", "passed": True})
    except (NoInteriorRoot, ArithmeticError) as exc:
        checks.append({"name": "critical_root", "passed": False, "error": str(exc)})
        failed = "critical_root"

    if failed is None:
        try:
            report = verify_domination(
                params,
                c,
                radial_samples=radial_samples,
                angular_samples=angular_samples,
                tol=domination_tol,
            )
            dom_dict = _domination_dict(report)
            ok = report.verdict == "pass"
            checks.append({"name": "domination", "passed": ok})
            if not ok:
                failed = "domination"
        except (DominationViolated, HypothesisViolated) as exc:
            checks.append({"name": "domination", "passed": False, "error": str(exc)})
            failed = "domination"

    if failed is None:
        delta = norm_difference(
            params, K=terms, mode="exact" if exact else "float", adaptive=exact
        )
        gap_dict = _norm_gap_dict(delta)
        ok = delta.certifies
        checks.append({"name": "norm_gap", "passed": ok})
        if not ok:
            failed = "norm_gap"

    if failed is None:
        try:
            xc = cross_check(params, grid=grid, tol=cross_tol, K=terms)
            xc_dict = _cross_check_dict(xc)
            checks.append({"name": "cross_check", "passed": xc.passed})
            if not xc.passed:
                failed = "cross_check"
        except QuadratureNotConverged as exc:
            checks.append({"name": "cross_check", "passed": False, "error": str(exc)})
            failed = "cross_check"

    return Certificate(
        params={"a": fraction_to_decimal(params.a), "n": params.n},
        critical_radius=c_dict,
        norm_gap=gap_dict,
        domination=dom_dict,
        cross_check=xc_dict,
        checks=checks,
        passed=failed is None,
        failed_check=failed,
        wall_time_s=time.perf_counter() - start,
    )
