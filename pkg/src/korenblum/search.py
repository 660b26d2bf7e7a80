"""Search over the coefficient a and the frequency n.

For fixed n the norm gap delta(a) = ||f||^2 - ||g||^2 is negative for
small a (at a = 0 it equals 1/(4(n+1)) - 1/8, which is -9/88 for
n = 10) and positive as a approaches 1, with a sign change at some a0
in between.  Coefficients above a0 give a certifiable gap, and the
critical radius c(a) grows with a, so the strongest bound comes from
certifying just above the sign change: the safety margin trades a
sliver of bound quality for a gap that is comfortably positive in
exact arithmetic.

The localization runs in double precision on rigorous enclosures (the
truncation index escalates automatically whenever an enclosure straddles
zero), and the final certificate at the backed off coefficient is
recomputed in exact rational arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple

from .domination import (
    DominationReport,
    DominationViolated,
    HypothesisViolated,
    NoInteriorRoot,
    critical_root,
    verify_domination,
)
from .family import Coefficient, Params, as_fraction
from .series import DEFAULT_TERMS, MAX_TERMS, DifferenceResult, norm_difference

# Best previously published upper bound for Korenblum's constant that
# this construction is measured against.
WANG_UPPER_BOUND = 0.67795
DEFAULT_SAFETY = 5e-6
# Certified coefficients are reported on a fixed decimal lattice so the
# certificate parameter stays a short exact decimal.
QUANTIZE_DECIMALS = 7


class InvalidBracket(ValueError):
    """The norm gap has the same certified sign at both bracket ends."""


class AmbiguousSign(ArithmeticError):
    """An enclosure straddles zero even at the maximum truncation index."""


class CertificationFailed(ArithmeticError):
    """The exact-mode gap at the candidate coefficient is not positive."""


def delta_of_a(
    n: int,
    a: Coefficient,
    K: int = DEFAULT_TERMS,
    mode: str = "float",
    adaptive: bool = False,
) -> DifferenceResult:
    """Norm gap enclosure at coefficient a and frequency n."""
    return norm_difference(Params(as_fraction(a), n), K=K, mode=mode, adaptive=adaptive)


def _certified_sign(
    n: int, a: float, K: int, max_terms: int = MAX_TERMS
) -> Tuple[int, DifferenceResult]:
    """Sign of delta(a) from a float enclosure, escalating K as needed."""
    terms = K
    while True:
        d = delta_of_a(n, a, K=terms)
        if d.delta_lower > 0:
            return 1, d
        if d.delta_upper < 0:
            return -1, d
        if terms >= max_terms:
            raise AmbiguousSign(
                f"delta enclosure straddles zero at a = {a!r}, n = {n} "
                f"even with {terms} terms"
            )
        terms = min(2 * terms, max_terms)


@dataclass(frozen=True)
class CoarseScan:
    """Float samples of delta over an a grid, with sign-change cells."""

    n: int
    a_values: Tuple[float, ...]
    deltas: Tuple[float, ...]
    sign_changes: Tuple[Tuple[float, float], ...]


def coarse_scan(
    n: int,
    a_values: Optional[Sequence[float]] = None,
    K: int = DEFAULT_TERMS,
) -> CoarseScan:
    """Sample delta(a) on a grid and record every sign-change cell.

    All sign changes are recorded rather than assuming there is exactly
    one; downstream code picks the rising change it can certify from.
    """
    if a_values is None:
        a_values = [i / 100 for i in range(1, 100)]
    values = [float(delta_of_a(n, a, K=K).midpoint) for a in a_values]
    changes = []
    for i in range(len(values) - 1):
        if values[i] == 0.0 or (values[i] > 0) != (values[i + 1] > 0):
            changes.append((float(a_values[i]), float(a_values[i + 1])))
    return CoarseScan(
        n=n,
        a_values=tuple(float(a) for a in a_values),
        deltas=tuple(values),
        sign_changes=tuple(changes),
    )


@dataclass(frozen=True)
class CriticalPoint:
    """Localized sign change of delta(a) at fixed n."""

    n: int
    a_star: float
    bracket: Tuple[float, float]
    rising: bool
    delta_at_star: DifferenceResult


def critical_a(
    n: int,
    bracket: Tuple[float, float],
    tol: float = 1e-10,
    K: int = DEFAULT_TERMS,
) -> CriticalPoint:
    """Bisect a sign change of delta(a) inside ``bracket``.

    Both endpoints must have certified (enclosure excludes zero) and
    opposite signs, else InvalidBracket.  Each midpoint sign is also
    certified, with the truncation index escalating automatically;
    an unresolvable midpoint raises AmbiguousSign.
    """
    a_lo, a_hi = float(bracket[0]), float(bracket[1])
    if not 0.0 < a_lo < a_hi < 1.0:
        raise ValueError(f"bracket must satisfy 0 < lo < hi < 1, got {bracket}")
    s_lo, _ = _certified_sign(n, a_lo, K)
    s_hi, _ = _certified_sign(n, a_hi, K)
    if s_lo == s_hi:
        raise InvalidBracket(
            f"delta has certified sign {s_lo:+d} at both ends of {bracket} for n = {n}"
        )
    while a_hi - a_lo > tol:
        mid = 0.5 * (a_lo + a_hi)
        s_mid, _ = _certified_sign(n, mid, K)
        if s_mid == s_lo:
            a_lo = mid
        else:
            a_hi = mid
    a_star = 0.5 * (a_lo + a_hi)
    return CriticalPoint(
        n=n,
        a_star=a_star,
        bracket=(a_lo, a_hi),
        rising=s_lo < 0,
        delta_at_star=delta_of_a(n, a_star, K=K),
    )


@dataclass(frozen=True)
class BoundCandidate:
    """A certified upper bound candidate: parameters, radius, evidence."""

    params: Params
    c: float
    delta_lower: Fraction
    certified: bool
    improves_wang: bool
    a_star: Optional[float]
    delta: DifferenceResult
    domination: DominationReport


def _quantize_up(value: float, decimals: int) -> Fraction:
    scale = 10 ** decimals
    return Fraction(math.ceil(value * scale), scale)


def best_bound(
    n: int,
    safety: float = DEFAULT_SAFETY,
    a: Optional[Coefficient] = None,
    K: int = DEFAULT_TERMS,
    bracket_tol: float = 1e-10,
    quantize_decimals: int = QUANTIZE_DECIMALS,
    radial_samples: int = 256,
    angular_samples: int = 1024,
) -> BoundCandidate:
    """Best certified radius for frequency n.

    Unless ``a`` is forced, locates the sign change a* of delta(a),
    backs off to the certified coefficient ceil((a* + safety) * 10^d) /
    10^d (rounding away from the sign change keeps the gap positive and
    the decimal short), then recomputes the gap in exact rational
    arithmetic, finds the critical radius and verifies domination on
    the annulus.  CertificationFailed reports a nonpositive exact gap;
    root and domination failures propagate from their modules.
    """
    if n < 2:
        raise ValueError(f"frequency must be at least 2, got {n}")
    if safety <= 0:
        raise ValueError(f"safety margin must be positive, got {safety}")

    a_star: Optional[float] = None
    if a is not None:
        a_cert = as_fraction(a)
    else:
        scan = coarse_scan(n, K=K)
        rising = None
        for lo, hi in scan.sign_changes:
            point = critical_a(n, (lo, hi), tol=bracket_tol, K=K)
            if point.rising:
                rising = point
                break
        if rising is None:
            raise CertificationFailed(
                f"no rising sign change of delta(a) detected for n = {n}"
            )
        a_star = rising.a_star
        a_cert = _quantize_up(a_star + safety, quantize_decimals)
    if not 0 < a_cert < 1:
        raise CertificationFailed(
            f"certified coefficient {a_cert} escaped the open unit interval"
        )

    params = Params(a_cert, n)
    delta = norm_difference(params, K=K, mode="exact", adaptive=True)
    if delta.delta_lower <= 0:
        raise CertificationFailed(
            f"exact norm gap at {params.describe()} is not positive: "
            f"delta_lower = {float(delta.delta_lower):.3e}"
        )
    c = critical_root(params)
    report = verify_domination(
        params, c, radial_samples=radial_samples, angular_samples=angular_samples
    )
    return BoundCandidate(
        params=params,
        c=c,
        delta_lower=delta.delta_lower,
        certified=True,
        improves_wang=c < WANG_UPPER_BOUND - 1e-9,
        a_star=a_star,
        delta=delta,
        domination=report,
    )


@dataclass(frozen=True)
class ScanRow:
    """One frequency's outcome: a candidate or the failure that stopped it."""

    n: int
    candidate: Optional[BoundCandidate]
    error: Optional[str]


@dataclass(frozen=True)
class ScanResult:
    """Certified candidates across frequencies.

    ``table`` orders successful rows by radius, largest first, with
    failed rows at the end; the strongest certified upper bound is the
    smallest radius, exposed as ``best``.
    """

    rows: Tuple[ScanRow, ...]

    def table(self) -> Tuple[ScanRow, ...]:
        done = [r for r in self.rows if r.candidate is not None]
        failed = [r for r in self.rows if r.candidate is None]
        done.sort(key=lambda r: r.candidate.c, reverse=True)
        return tuple(done + failed)

    @property
    def best(self) -> Optional[BoundCandidate]:
        candidates = [r.candidate for r in self.rows if r.candidate is not None]
        if not candidates:
            return None
        return min(candidates, key=lambda cand: cand.c)


def scan(
    n_values: Iterable[int],
    safety: float = DEFAULT_SAFETY,
    K: int = DEFAULT_TERMS,
    bracket_tol: float = 1e-10,
) -> ScanResult:
    """Run best_bound for each n, recording per-row failures and moving on."""
    rows = []
    for n in n_values:
        try:
            candidate = best_bound(n, safety=safety, K=K, bracket_tol=bracket_tol)
            rows.append(ScanRow(n=n, candidate=candidate, error=None))
        except (
            NoInteriorRoot,
            DominationViolated,
            HypothesisViolated,
            CertificationFailed,
            AmbiguousSign,
            InvalidBracket,
            ValueError,
        ) as exc:
            rows.append(ScanRow(n=n, candidate=None, error=f"{type(exc).__name__}: {exc}"))
    return ScanResult(rows=tuple(rows))
