"""Twist normalization: reduce twists modulo full twists (which do not change
the Schottky filling), then move each twist to the nearest symmetric value in
{0, length/2} on the twist circle, recording the signed earthquake distances.

Each recorded distance has magnitude at most length/4.  At an exact tie the
move is in the negative direction (reduced twist length/4 -> target 0, reduced
twist 3*length/4 -> target length/2); either direction would be admissible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .surface import FNCoordinates

__all__ = ["SymmetrizationResult", "reduce_full_twists", "symmetric_target"]


@dataclass(frozen=True)
class SymmetrizationResult:
    symmetric_fn: FNCoordinates
    deltas: tuple[float, ...]
    reduced_fn: FNCoordinates


def _reduce(twist: float, length: float) -> float:
    # Python % uses the floor convention, so the representative is in [0, len);
    # guard the f.p. corner where a tiny negative twist rounds up to len itself.
    r = twist % length
    if r >= length:
        r = 0.0
    return r


def reduce_full_twists(fn: FNCoordinates) -> FNCoordinates:
    """Replace each twist by its representative in [0, length); lengths pass
    through unchanged.  The result describes an isometric Schottky filling."""
    reduced = tuple(_reduce(t, ln) for t, ln in zip(fn.twists, fn.lengths))
    return FNCoordinates(lengths=fn.lengths, twists=reduced)


def symmetric_target(fn: FNCoordinates) -> SymmetrizationResult:
    """Move every reduced twist to the nearest of {0, length/2, length == 0} on
    the twist circle; |delta| <= length/4 always, and the output twists are
    exactly 0.0 or length/2."""
    reduced_fn = reduce_full_twists(fn)
    sym_twists = []
    deltas = []
    for r, ln in zip(reduced_fn.twists, reduced_fn.lengths):
        half = 0.5 * ln
        # candidate targets on the circle, in tie-breaking priority order
        candidates = ((abs(r), 0.0, -r),                # target 0
                      (abs(r - half), half, half - r),  # target len/2
                      (ln - r, 0.0, ln - r))            # target len, stored as 0
        best = min(candidates, key=lambda c: c[0])
        sym_twists.append(best[1])
        deltas.append(best[2])
    sym_fn = FNCoordinates(lengths=fn.lengths, twists=tuple(sym_twists))
    return SymmetrizationResult(symmetric_fn=sym_fn, deltas=tuple(deltas), reduced_fn=reduced_fn)
