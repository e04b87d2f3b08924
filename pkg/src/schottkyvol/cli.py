"""Command-line front end: certificates for a surface file, threshold tables,
and a deterministic Monte-Carlo survey over random Fenchel-Nielsen data.

Exit codes: 0 = negative_certified, 1 = not_certified, 2 = input error.
Survey output is byte-identical for a fixed (seed, samples) pair regardless of
the worker count: each sample draws from its own counter-based stream keyed by
(seed, sample index) and results are merged in index order.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from . import __version__
from .bounds import BoundReport, VERDICT_NEGATIVE, certify
from .errors import (
    BudgetExceededError,
    DomainError,
    HolonomyError,
    NonHyperbolicError,
    ParseError,
    ValidationError,
)
from .fuchsian import build_holonomy, certify_systole
from .surface import (
    Curve,
    FNCoordinates,
    PantsDecomposition,
    classify_curves,
    parse_surface,
)

__all__ = ["main", "SurveyConfig", "run_survey", "chain_decomposition", "format_report"]


# ---------------------------------------------------------------------------
# certify

def format_report(report: BoundReport, notes: tuple[str, ...] = ()) -> str:
    lines = [
        f"surface: genus {report.genus}, {3 * report.genus - 3} pants curves, k = {report.k} short",
        (f"constants: S={report.constants.S:.10g} Q={report.constants.Q:.10g} "
         f"C={report.constants.C:.10g} eps0={report.constants.eps0:.10g}"),
        "bounds (upper bounds on the renormalized volume):",
        f"  aggregate (mainthm_value)  = {report.mainthm_value:.10g}",
        f"  symmetric surface          = {report.symmetric_value:.10g}",
        (f"  twist correction           = {report.correction_value:.10g}"
         f" (thick lengths capped at {report.details['bers_length_cap']:.10g};"
         f" actual {report.details['correction_value_actual']:.10g})"),
    ]
    if report.comparator_value is None:
        lines.append("  comparator                 = not evaluated")
    else:
        lines.append(
            f"  comparator                 = {report.comparator_value:.10g}"
            f" (conditional; negative: {report.details['comparator_negative']})"
        )
    if report.threshold_used is not None:
        lines.append(
            f"thresholds: k1 = {report.k1} curve(s) below "
            f"A(g={report.genus},k1={report.k1},k={report.k}) = {report.threshold_used:.6g}"
        )
    else:
        lines.append("thresholds: no curve below an applicable threshold (k1 = 0)")
    lines.append("hypotheses:")
    for name, status in sorted(report.hypothesis_provenance.items()):
        lines.append(f"  {name}: {status}")
    for note in notes:
        lines.append(f"note: {note}")
    lines.append(f"verdict: {report.verdict}")
    return "\n".join(lines) + "\n"


def _report_json(report: BoundReport) -> str:
    doc = report.to_dict()
    doc["schema_version"] = 1
    doc["tool_version"] = __version__
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _cmd_certify(args) -> int:
    try:
        text = Path(args.path).read_text(encoding="utf-8")
    except OSError as exc:
        print(f"error: cannot read {args.path}: {exc}", file=sys.stderr)
        return 2
    try:
        parsed = parse_surface(text)
    except (ParseError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    decomp, fn = parsed.decomposition, parsed.coordinates
    asserted = parsed.systole_asserted or args.assume_systole
    classification = classify_curves(fn, systole_asserted=asserted)
    notes = []
    if args.scan_depth is not None:
        try:
            rep = build_holonomy(decomp, fn)
            classification, candidates = certify_systole(
                rep, classification,
                cutoff=1.0, max_word_len=args.scan_depth, budget=args.scan_budget,
            )
            extra = [c for c in candidates if not c.simple_hint]
            notes.append(
                f"scan: depth {args.scan_depth}, {len(candidates)} candidate word(s) <= 1, "
                f"{len(extra)} beyond the pants-curve spellings; "
                f"systole status now {classification.systole_status}"
            )
        except BudgetExceededError as exc:
            print(f"warning: {exc}", file=sys.stderr)
            notes.append("scan: aborted on budget; systole status unchanged")
        except (HolonomyError, NonHyperbolicError) as exc:
            print(f"warning: holonomy scan failed: {exc}", file=sys.stderr)
            notes.append("scan: numerical failure; systole status unchanged")

    try:
        report = certify(decomp, fn, classification, comparator_asserted=args.comparator)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    if args.json:
        sys.stdout.write(_report_json(report))
    else:
        sys.stdout.write(format_report(report, tuple(notes)))
    return 0 if report.verdict == VERDICT_NEGATIVE else 1


# ---------------------------------------------------------------------------
# thresholds

def _cmd_thresholds(args) -> int:
    from .bounds import threshold_A

    if args.max_genus < 2:
        print("error: --max-genus must be >= 2", file=sys.stderr)
        return 2
    rows = []
    for g in range(2, args.max_genus + 1):
        for k in range(1, 3 * g - 2):
            for k1 in range(1, k + 1):
                rows.append((g, k1, k, threshold_A(g, k1, k)))
    if args.csv:
        sys.stdout.write("genus,k1,k,A\n")
        for g, k1, k, a in rows:
            sys.stdout.write(f"{g},{k1},{k},{a:.12g}\n")
    else:
        sys.stdout.write(f"{'genus':>5} {'k1':>4} {'k':>4} {'A(g,k1,k)':>16}\n")
        for g, k1, k, a in rows:
            sys.stdout.write(f"{g:>5} {k1:>4} {k:>4} {a:>16.10g}\n")
    return 0


# ---------------------------------------------------------------------------
# survey

def chain_decomposition(genus: int) -> PantsDecomposition:
    """Canonical linear pants decomposition: a self-glued pants at each end of
    a chain, with alternating single and double connections in between."""
    if genus < 2:
        raise DomainError(f"genus must be >= 2, got {genus!r}")
    n_pants = 2 * genus - 2
    curves: list[Curve] = []
    curves.append(Curve((0, 1), (0, 2), "end0"))
    for p in range(0, n_pants - 1, 2):
        curves.append(Curve((p, 0), (p + 1, 0), f"s{p}"))
        if p + 2 < n_pants:
            curves.append(Curve((p + 1, 1), (p + 2, 1), f"d{p}a"))
            curves.append(Curve((p + 1, 2), (p + 2, 2), f"d{p}b"))
    curves.append(Curve((n_pants - 1, 1), (n_pants - 1, 2), "end1"))
    return PantsDecomposition(num_pants=n_pants, curves=tuple(curves))


@dataclass(frozen=True)
class SurveyConfig:
    genus: int
    samples: int
    seed: int
    length_range: tuple[float, float]
    short_curve_count: Optional[int] = None
    workers: int = 1

    def __post_init__(self):
        if self.genus < 2:
            raise DomainError(f"genus must be >= 2, got {self.genus!r}")
        if self.samples < 1:
            raise DomainError(f"samples must be >= 1, got {self.samples!r}")
        if not (0 <= self.seed < 2**64):
            raise DomainError("seed must fit in 64 bits")
        lo, hi = self.length_range
        if not (0.0 < lo < hi) or not math.isfinite(hi):
            raise DomainError(f"need 0 < len-min < len-max, got {self.length_range!r}")
        if self.workers < 1:
            raise DomainError(f"workers must be >= 1, got {self.workers!r}")
        n = 3 * self.genus - 3
        k = self.short_curve_count
        if k is not None:
            if not (0 <= k <= n):
                raise DomainError(f"short-count must be in [0, {n}], got {k!r}")
            if k > 0 and lo > 1.0:
                raise DomainError("short-count > 0 needs len-min <= 1")
            if k < n and hi <= 1.0:
                raise DomainError(f"short-count < {n} needs len-max > 1")


def _sample_coordinates(cfg: SurveyConfig, index: int) -> FNCoordinates:
    # one counter-based stream per sample: Philox keyed by (seed, index)
    from numpy.random import Generator, Philox

    rng = Generator(Philox(key=(cfg.seed, index)))
    n = 3 * cfg.genus - 3
    lo, hi = cfg.length_range
    u_len = rng.random(n)
    u_twist = rng.random(n)
    lengths = []
    for i in range(n):
        a, b = lo, hi
        if cfg.short_curve_count is not None:
            if i < cfg.short_curve_count:
                b = min(hi, 1.0)
            else:
                a = max(lo, 1.0)
        lengths.append(math.exp(math.log(a) + u_len[i] * (math.log(b) - math.log(a))))
    twists = tuple(u_twist[i] * lengths[i] for i in range(n))
    return FNCoordinates(lengths=tuple(lengths), twists=twists)


def _survey_one(cfg: SurveyConfig, decomp: PantsDecomposition, index: int) -> bool:
    fn = _sample_coordinates(cfg, index)
    classification = classify_curves(fn, systole_asserted=True)  # asserted_by_sampler
    report = certify(decomp, fn, classification)
    return report.verdict == VERDICT_NEGATIVE


def _wilson_interval(successes: int, n: int) -> tuple[float, float]:
    z = 1.959963984540054  # 97.5 % normal quantile
    phat = successes / n
    denom = 1.0 + z * z / n
    center = (phat + z * z / (2 * n)) / denom
    half = z * math.sqrt(phat * (1.0 - phat) / n + z * z / (4.0 * n * n)) / denom
    return max(0.0, center - half), min(1.0, center + half)


def run_survey(cfg: SurveyConfig) -> str:
    """Run the survey and return the (deterministic) report document."""
    decomp = chain_decomposition(cfg.genus)
    indices = range(cfg.samples)
    if cfg.workers == 1:
        results = [_survey_one(cfg, decomp, i) for i in indices]
    else:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            results = list(pool.map(lambda i: _survey_one(cfg, decomp, i), indices))
    certified = sum(results)
    frac = certified / cfg.samples
    lo, hi = _wilson_interval(certified, cfg.samples)
    shorts = "-" if cfg.short_curve_count is None else str(cfg.short_curve_count)
    lines = [
        (f"survey genus={cfg.genus} samples={cfg.samples} seed={cfg.seed} "
         f"len_range=[{cfg.length_range[0]:.6g},{cfg.length_range[1]:.6g}] short_count={shorts}"),
        f"certified {certified}/{cfg.samples} fraction={frac:.6f}",
        f"wilson95 [{lo:.6f}, {hi:.6f}]",
        ("hypothesis systole=asserted_by_sampler: the sampler asserts that random twists "
         "create no extra geodesics of length <= 1 beyond the sampled pants curves; "
         "this is heuristic and not verified"),
    ]
    return "\n".join(lines) + "\n"


def _cmd_survey(args) -> int:
    try:
        cfg = SurveyConfig(
            genus=args.genus,
            samples=args.samples,
            seed=args.seed,
            length_range=(args.len_min, args.len_max),
            short_curve_count=args.short_count,
            workers=args.workers,
        )
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(run_survey(cfg))
    return 0


# ---------------------------------------------------------------------------

def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="schottkyvol",
        description=("Evaluate upper bounds on the renormalized volume of the Schottky "
                     "filling of a hyperbolic surface and certify negativity."),
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("certify", help="evaluate bounds for a surface file")
    p.add_argument("path", help="surface description file")
    p.add_argument("--json", action="store_true", help="emit the machine-readable report")
    p.add_argument("--scan-depth", type=int, default=None, metavar="N",
                   help="scan words up to length N to certify the systole hypothesis")
    p.add_argument("--scan-budget", type=int, default=10_000_000, metavar="N",
                   help="search-node budget for the scan (default 10^7)")
    p.add_argument("--assume-systole", action="store_true",
                   help="assert the no-other-short-geodesics hypothesis")
    p.add_argument("--comparator", action="store_true",
                   help="assert the comparator's topological hypothesis and evaluate it")
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("thresholds", help="print the shortness thresholds A(g, k1, k)")
    p.add_argument("--max-genus", type=int, required=True, metavar="G")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=_cmd_thresholds)

    p = sub.add_parser("survey", help="deterministic Monte-Carlo survey over random coordinates")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--len-min", type=float, required=True)
    p.add_argument("--len-max", type=float, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--short-count", type=int, default=None)
    p.set_defaults(func=_cmd_survey)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
