"""Evaluators for every implemented renormalized-volume bound: the symmetric
(flat convex core) bounds, pointwise and integrated earthquake-variation
bounds, the aggregate bound for a filling built on short curves plus Bers
curves, the negativity thresholds derived from it, a prior-work comparator,
and the certificate assembler.

Sign convention: every *_bound value is an upper bound for the renormalized
volume (or for a |difference| of renormalized volumes, where noted); negative
output therefore certifies negativity, subject to the stated hypotheses.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import DomainError
from .hypmath import UniversalConstants, bc_L, bers_length_bound, coth, universal_constants
from .surface import (
    STATUS_ASSERTED,
    STATUS_CERTIFIED_HEURISTIC,
    CurveClassification,
    FNCoordinates,
    PantsDecomposition,
)
from .symmetrize import symmetric_target

__all__ = [
    "CLASS_COMPRESSIBLE_SHORT",
    "CLASS_COMPRESSIBLE_THICK",
    "CLASS_INCOMPRESSIBLE",
    "EarthquakeEntry",
    "EarthquakeSpec",
    "ComparatorResult",
    "BoundReport",
    "VERDICT_NEGATIVE",
    "VERDICT_NOT_CERTIFIED",
    "symmetric_vr_bound",
    "symmetric_vr_bound_bc",
    "dvr_pointwise_bound",
    "earthquake_variation_bound",
    "symmetrization_correction",
    "mainthm_bound",
    "threshold_A",
    "maldacena_comparator",
    "certify",
]

CLASS_COMPRESSIBLE_SHORT = "compressible_short"
CLASS_COMPRESSIBLE_THICK = "compressible_thick"
CLASS_INCOMPRESSIBLE = "incompressible"

VERDICT_NEGATIVE = "negative_certified"
VERDICT_NOT_CERTIFIED = "not_certified"


def _check_positive(name: str, value: float):
    if not (value > 0.0) or not math.isfinite(value):
        raise DomainError(f"{name} must be positive and finite, got {value!r}")


def symmetric_vr_bound(short_lengths: Sequence[float]) -> float:
    """Upper bound -(S/4)*sum(1/l_i) + (Q/4)*k for a filling of a symmetric
    surface whose k pants curves all have length in (0, 1].

    Negative whenever k >= 1, since S > Q and every l_i <= 1.
    """
    uc = universal_constants()
    total = 0.0
    for ln in short_lengths:
        _check_positive("curve length", ln)
        if ln > 1.0:
            raise DomainError(f"curve length {ln!r} exceeds 1; the symmetric bound needs l <= 1")
        total += 1.0 / ln
    k = len(short_lengths)
    return -0.25 * uc.S * total + 0.25 * uc.Q * k


def symmetric_vr_bound_bc(fixed_lengths: Sequence[float], rho: float) -> float:
    """Upper bound -pi/(4*L(rho)) * sum(l_i) for a filling with flat convex
    core, in terms of rho = half the length of the shortest simple closed
    compressible geodesic; valid only with a true lower bound for rho."""
    _check_positive("rho", rho)
    total = 0.0
    for ln in fixed_lengths:
        _check_positive("curve length", ln)
        total += ln
    return -math.pi / (4.0 * bc_L(rho)) * total


def dvr_pointwise_bound(length: float, inj: float, t: float) -> float:
    """Pointwise earthquake-derivative bound 3*length*coth^2(inj/2)*t."""
    _check_positive("curve length", length)
    _check_positive("injectivity radius", inj)
    if t < 0.0 or not math.isfinite(t):
        raise DomainError(f"twist magnitude must be >= 0 and finite, got {t!r}")
    return 3.0 * length * coth(0.5 * inj) ** 2 * t


@dataclass(frozen=True)
class EarthquakeEntry:
    curve_id: int
    length: float
    twist: float  # magnitude; direction does not enter the bound
    curve_class: str


@dataclass(frozen=True)
class EarthquakeSpec:
    """Multi-curve earthquake data for the general variation bound."""

    entries: tuple[EarthquakeEntry, ...]

    def __post_init__(self):
        for e in self.entries:
            if e.curve_class not in (CLASS_COMPRESSIBLE_SHORT, CLASS_COMPRESSIBLE_THICK,
                                     CLASS_INCOMPRESSIBLE):
                raise DomainError(f"unknown curve class {e.curve_class!r}")
            _check_positive(f"curve {e.curve_id} length", e.length)
            if e.twist < 0.0 or not math.isfinite(e.twist):
                raise DomainError(f"curve {e.curve_id} twist magnitude must be >= 0, got {e.twist!r}")
            if e.curve_class == CLASS_COMPRESSIBLE_SHORT and e.length > 1.0:
                raise DomainError(
                    f"curve {e.curve_id} is classed compressible_short but has length {e.length!r} > 1"
                )


def earthquake_variation_bound(spec: EarthquakeSpec) -> float:
    """Bound on |V_R(end) - V_R(start)| along a multi-curve earthquake path:
    sum of 3*l*coth^2(l/4)*t over compressible short curves, C*t*l over
    compressible thick curves, and 3*t*l over incompressible ones."""
    uc = universal_constants()
    total = 0.0
    for e in spec.entries:
        if e.curve_class == CLASS_COMPRESSIBLE_SHORT:
            total += 3.0 * e.length * coth(0.25 * e.length) ** 2 * e.twist
        elif e.curve_class == CLASS_COMPRESSIBLE_THICK:
            total += uc.C * e.twist * e.length
        else:
            total += 3.0 * e.twist * e.length
    return total


def symmetrization_correction(short_lengths: Sequence[float],
                              thick_lengths: Sequence[float]) -> float:
    """Cost of moving to the nearest symmetric surface with twists of length at
    most l/4: (3/4)*sum coth^2(l/4)*l^2 over short + (C/4)*sum l^2 over thick.

    Equals earthquake_variation_bound with t = l/4 on matching classes.
    """
    uc = universal_constants()
    total = 0.0
    for ln in short_lengths:
        _check_positive("curve length", ln)
        if ln > 1.0:
            raise DomainError(f"short curve length {ln!r} exceeds 1")
        total += 0.75 * coth(0.25 * ln) ** 2 * ln * ln
    for ln in thick_lengths:
        _check_positive("curve length", ln)
        total += 0.25 * uc.C * ln * ln
    return total


def _bulk_term(genus: int, k: int) -> float:
    # 27*C*pi*(3g-3-k)*(g-1)^2 == 81*coth^2(1/4)*pi*(3g-3-k)*(g-1)^2
    uc = universal_constants()
    return 27.0 * uc.C * math.pi * (3 * genus - 3 - k) * (genus - 1) ** 2


def mainthm_bound(genus: int, short_lengths: Sequence[float],
                  *, use_q_over_4: bool = False) -> float:
    """Aggregate upper bound for the filling built on the k declared short
    curves, completed by Bers pants curves:

        -(pi^3/sqrt(e)) * sum(1/l_i) + (9 + (3/4)*coth^2(1/4)) * k
        + 81*coth^2(1/4)*pi*(3g-3-k)*(g-1)^2

    Hypotheses (certified elsewhere): the k curves are disjoint, simple, of
    length <= 1, and no other geodesic loop has length <= 1.  With
    use_q_over_4 the rounded constant 9 is replaced by the tighter Q/4.
    """
    if not isinstance(genus, int) or genus < 2:
        raise DomainError(f"genus must be an integer >= 2, got {genus!r}")
    k = len(short_lengths)
    if k > 3 * genus - 3:
        raise DomainError(f"{k} short curves exceeds 3g-3 = {3 * genus - 3}")
    uc = universal_constants()
    inv_sum = 0.0
    for ln in short_lengths:
        _check_positive("curve length", ln)
        if ln > 1.0:
            raise DomainError(f"short curve length {ln!r} exceeds 1")
        inv_sum += 1.0 / ln
    nine = 0.25 * uc.Q if use_q_over_4 else 9.0
    # grouped so that the decomposition into the symmetric bound, the twist
    # correction and the slack (nine - Q/4)*k is reproducible term by term
    symmetric_part = -0.25 * uc.S * inv_sum + 0.25 * uc.Q * k
    return symmetric_part + (nine - 0.25 * uc.Q) * k + 0.25 * uc.C * k + _bulk_term(genus, k)


def threshold_A(genus: int, k1: int, k: int) -> float:
    """Largest admissible shortness threshold (pi^3/sqrt(e)) * k1 / B, where

        B = -(pi^3/sqrt(e))*(k-k1) + (9 + C/4)*k + 27*C*pi*(3g-3-k)*(g-1)^2.

    A surface with k1 geodesic loops shorter than this value (and k loops of
    length at most 1 total) admits a filling with negative volume bound.  The
    returned value is the open-bound supremum; callers needing strictness
    should scale by (1 - 1e-12).
    """
    if not isinstance(genus, int) or genus < 2:
        raise DomainError(f"genus must be an integer >= 2, got {genus!r}")
    if not (0 < k1 <= k <= 3 * genus - 3):
        raise DomainError(f"need 0 < k1 <= k <= 3g-3, got k1={k1!r}, k={k!r}, g={genus!r}")
    uc = universal_constants()
    pcube = 0.25 * uc.S  # pi^3/sqrt(e)
    b = -pcube * (k - k1) + (9.0 + 0.25 * uc.C) * k + _bulk_term(genus, k)
    if not b > 0.0:
        raise AssertionError(f"internal invariant failed: B = {b!r} <= 0")
    return pcube * k1 / b


@dataclass(frozen=True)
class ComparatorResult:
    """Outcome of the prior-work comparator bound for g-1 curves whose
    complement is a union of holed tori (a hypothesis this tool cannot check)."""

    applicable: bool
    value: Optional[float]
    sum_sqrt: float
    applicability_limit: float
    negativity_limit: float

    @property
    def negative(self) -> Optional[bool]:
        if not self.applicable:
            return None
        return self.sum_sqrt <= self.negativity_limit


def maldacena_comparator(genus: int, lengths: Sequence[float]) -> ComparatorResult:
    """Comparator bound pi*(g-1)*(3 - pi*(pi-2)*(g-1)/(sum sqrt(l_i))^2) for
    g-1 curves, applicable when (1/(pi-2))*(sum sqrt(l_i))^2 <= pi*(g-1)."""
    if not isinstance(genus, int) or genus < 2:
        raise DomainError(f"genus must be an integer >= 2, got {genus!r}")
    if len(lengths) != genus - 1:
        raise DomainError(f"comparator needs exactly g-1 = {genus - 1} lengths, got {len(lengths)}")
    for ln in lengths:
        _check_positive("curve length", ln)
    s = sum(math.sqrt(ln) for ln in lengths)
    applicability_limit = math.sqrt((math.pi - 2.0) * math.pi * (genus - 1))
    negativity_limit = math.sqrt(math.pi * (math.pi - 2.0) * (genus - 1) / 3.0)
    if s * s / (math.pi - 2.0) > math.pi * (genus - 1):
        return ComparatorResult(applicable=False, value=None, sum_sqrt=s,
                                applicability_limit=applicability_limit,
                                negativity_limit=negativity_limit)
    value = math.pi * (genus - 1) * (3.0 - math.pi * (math.pi - 2.0) * (genus - 1) / (s * s))
    return ComparatorResult(applicable=True, value=value, sum_sqrt=s,
                            applicability_limit=applicability_limit,
                            negativity_limit=negativity_limit)


@dataclass(frozen=True)
class BoundReport:
    """Everything certify evaluated: the bounds, the constants, the verdict and
    the provenance of every hypothesis that entered it."""

    genus: int
    k: int
    k1: int
    mainthm_value: float
    symmetric_value: float
    correction_value: float
    comparator_value: Optional[float]
    threshold_used: Optional[float]
    verdict: str
    hypothesis_provenance: dict
    constants: UniversalConstants
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "genus": self.genus,
            "k": self.k,
            "k1": self.k1,
            "mainthm_value": self.mainthm_value,
            "symmetric_value": self.symmetric_value,
            "correction_value": self.correction_value,
            "comparator_value": self.comparator_value,
            "thresholds": {"A": self.threshold_used, "k1": self.k1, "k": self.k},
            "verdict": self.verdict,
            "hypothesis_provenance": dict(self.hypothesis_provenance),
            "constants": self.constants.as_dict(),
            "details": dict(self.details),
        }


def _consistent_k1(genus: int, k: int, lengths: Sequence[float]) -> tuple[int, Optional[float]]:
    # largest k1 <= k such that at least k1 of the short lengths are strictly
    # below the threshold A(g, k1, k); 0 when no such k1 exists
    for k1 in range(k, 0, -1):
        a = threshold_A(genus, k1, k)
        if sum(1 for ln in lengths if ln < a) >= k1:
            return k1, a
    return 0, None


def certify(decomp: PantsDecomposition, fn: FNCoordinates,
            classification: CurveClassification, *,
            comparator_asserted: bool = False) -> BoundReport:
    """Evaluate every applicable bound for the filling that compresses the
    pants curves, and issue the verdict.

    The verdict is negative_certified exactly when the aggregate bound is
    negative and the no-other-short-geodesics hypothesis is certified or
    asserted; any hypothesis with status unknown blocks certification.  The
    comparator is evaluated only when its curve count matches (k = g-1) and
    the caller asserts its topological hypothesis; it never flips the verdict
    and is reported as a conditional side statement.
    """
    g = decomp.genus
    n = len(fn.lengths)
    if n != len(decomp.curves):
        raise DomainError(f"{n} coordinates for {len(decomp.curves)} curves")
    if (classification.short_set | classification.thick_set) != set(range(n)):
        raise DomainError("classification does not cover exactly the curve index range")
    for i in classification.short_set:
        if fn.lengths[i] > 1.0:
            raise DomainError(f"curve {i} is classified short but has length {fn.lengths[i]!r} > 1")

    sym = symmetric_target(fn)
    short_idx = sorted(classification.short_set)
    thick_idx = sorted(classification.thick_set)
    short_lengths = [fn.lengths[i] for i in short_idx]
    thick_lengths = [fn.lengths[i] for i in thick_idx]
    k = len(short_lengths)

    uc = universal_constants()
    bers = bers_length_bound(g)
    capped_thick = [min(ln, bers) for ln in thick_lengths]
    correction_capped = symmetrization_correction(short_lengths, capped_thick)
    correction_actual = symmetrization_correction(short_lengths, thick_lengths)

    mainthm_value = mainthm_bound(g, short_lengths)
    mainthm_value_q4 = mainthm_bound(g, short_lengths, use_q_over_4=True)
    symmetric_value = symmetric_vr_bound(short_lengths)

    comparator = None
    if comparator_asserted and k == g - 1:
        comparator = maldacena_comparator(g, short_lengths)

    k1, threshold = _consistent_k1(g, k, short_lengths) if k > 0 else (0, None)

    systole_ok = classification.systole_status in (STATUS_ASSERTED, STATUS_CERTIFIED_HEURISTIC)
    verdict = VERDICT_NEGATIVE if (mainthm_value < 0.0 and systole_ok) else VERDICT_NOT_CERTIFIED

    provenance = {
        "systole": classification.systole_status,
        "comparator_topology": "asserted_by_user" if comparator_asserted else "not_asserted",
        "thick_injectivity": ("implied_by_systole" if systole_ok else classification.systole_status),
        "bers_lengths": "theorem_bound",
    }
    details = {
        "correction_value_actual": correction_actual,
        "bers_length_cap": bers,
        "mainthm_value_q_over_4": mainthm_value_q4,
        "max_symmetrization_delta": max((abs(d) for d in sym.deltas), default=0.0),
        "comparator_negative": comparator.negative if comparator is not None else None,
        "comparator_applicable": comparator.applicable if comparator is not None else None,
    }
    if k == 0:
        details["reason"] = "no short curves (k = 0): the aggregate bound is positive"

    return BoundReport(
        genus=g,
        k=k,
        k1=k1,
        mainthm_value=mainthm_value,
        symmetric_value=symmetric_value,
        correction_value=correction_capped,
        comparator_value=(comparator.value if comparator is not None else None),
        threshold_used=threshold,
        verdict=verdict,
        hypothesis_provenance=provenance,
        constants=uc,
        details=details,
    )
