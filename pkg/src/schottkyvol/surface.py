"""Combinatorial and metric model of a closed surface presented by a marked
pants decomposition with Fenchel-Nielsen coordinates, plus the line-oriented
text format used to describe one.

Conventions
-----------
* A slot is a pair (pants index, position in {0,1,2}); every slot is used by
  exactly one curve, and a curve may pair two slots of the same pants.
* Twists are in length units; positive twist is a left earthquake.
* Lengths are hyperbolic (curvature -1); there is no unit field.
* The optional per-curve mark bit selects the other seam endpoint as the
  reference for the twist (equivalent to an offset of length/2); default 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ParseError, ValidationError

__all__ = [
    "Slot",
    "Curve",
    "PantsDecomposition",
    "FNCoordinates",
    "CurveClassification",
    "ParsedSurface",
    "parse_surface",
    "serialize_surface",
    "genus",
    "classify_curves",
    "STATUS_UNKNOWN",
    "STATUS_ASSERTED",
    "STATUS_CERTIFIED_HEURISTIC",
]

Slot = tuple[int, int]

STATUS_UNKNOWN = "unknown"
STATUS_ASSERTED = "asserted_by_user"
STATUS_CERTIFIED_HEURISTIC = "certified_heuristic"


@dataclass(frozen=True)
class Curve:
    """One pants curve: the two slots it glues, an optional user label and the
    marked-seam-endpoint bit."""

    slot_a: Slot
    slot_b: Slot
    label: str = ""
    mark: int = 0


@dataclass(frozen=True)
class PantsDecomposition:
    """Trivalent pants graph of a closed genus-g surface: 2g-2 pants, 3g-3
    curves, every slot used exactly once, connected."""

    num_pants: int
    curves: tuple[Curve, ...]

    def __post_init__(self):
        _validate_decomposition(self.num_pants, self.curves)

    @property
    def genus(self) -> int:
        return len(self.curves) // 3 + 1

    def slot_map(self) -> dict[Slot, tuple[int, int]]:
        """Map each slot to (curve index, side) with side 0 for slot_a."""
        out: dict[Slot, tuple[int, int]] = {}
        for i, c in enumerate(self.curves):
            out[c.slot_a] = (i, 0)
            out[c.slot_b] = (i, 1)
        return out

    def pants_adjacency(self) -> list[list[tuple[int, int]]]:
        """Per-pants list of (curve index, other pants) entries."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.num_pants)]
        for i, c in enumerate(self.curves):
            adj[c.slot_a[0]].append((i, c.slot_b[0]))
            adj[c.slot_b[0]].append((i, c.slot_a[0]))
        return adj


def _validate_decomposition(num_pants: int, curves: tuple[Curve, ...]):
    if num_pants < 1:
        raise ValidationError("a pants decomposition needs at least one pants")
    n_curves = len(curves)
    if n_curves % 3 != 0 or n_curves < 3:
        raise ValidationError(
            f"{n_curves} curves is not 3g-3 for any integer genus g >= 2"
        )
    g = n_curves // 3 + 1
    if num_pants != 2 * g - 2:
        raise ValidationError(
            f"{num_pants} pants with {n_curves} curves violates the count "
            f"2g-2 = {2 * g - 2} forced by 3g-3 = {n_curves}"
        )
    seen: dict[Slot, int] = {}
    for i, c in enumerate(curves):
        if c.slot_a == c.slot_b:
            raise ValidationError(f"curve {c.label or i} pairs slot {_slot_str(c.slot_a)} with itself")
        for slot in (c.slot_a, c.slot_b):
            p, s = slot
            if not (0 <= p < num_pants):
                raise ValidationError(f"curve {c.label or i} references unknown pants {p}")
            if s not in (0, 1, 2):
                raise ValidationError(f"curve {c.label or i} references slot position {s}, not in {{0,1,2}}")
            if slot in seen:
                raise ValidationError(
                    f"slot {_slot_str(slot)} used by curves {curves[seen[slot]].label or seen[slot]} "
                    f"and {c.label or i}"
                )
            seen[slot] = i
    if len(seen) != 3 * num_pants:
        missing = [(p, s) for p in range(num_pants) for s in (0, 1, 2) if (p, s) not in seen]
        raise ValidationError(f"unpaired slots: {', '.join(_slot_str(m) for m in missing)}")
    # connectivity of the pants graph
    reached = {0}
    frontier = [0]
    adj: list[set[int]] = [set() for _ in range(num_pants)]
    for c in curves:
        adj[c.slot_a[0]].add(c.slot_b[0])
        adj[c.slot_b[0]].add(c.slot_a[0])
    while frontier:
        p = frontier.pop()
        for q in adj[p]:
            if q not in reached:
                reached.add(q)
                frontier.append(q)
    if len(reached) != num_pants:
        stranded = sorted(set(range(num_pants)) - reached)
        raise ValidationError(f"pants graph is disconnected; unreachable pants: {stranded}")


def _slot_str(slot: Slot) -> str:
    return f"{slot[0]}.{slot[1]}"


@dataclass(frozen=True)
class FNCoordinates:
    """Per-curve hyperbolic length and twist (twist in length units, any real)."""

    lengths: tuple[float, ...]
    twists: tuple[float, ...]

    def __post_init__(self):
        if len(self.lengths) != len(self.twists):
            raise ValidationError(
                f"{len(self.lengths)} lengths vs {len(self.twists)} twists"
            )
        for i, ln in enumerate(self.lengths):
            if not (ln > 0.0) or not math.isfinite(ln):
                raise ValidationError(f"curve {i} length must be positive and finite, got {ln!r}")
        for i, tw in enumerate(self.twists):
            if not math.isfinite(tw):
                raise ValidationError(f"curve {i} twist must be finite, got {tw!r}")


@dataclass(frozen=True)
class CurveClassification:
    """Partition of the pants curves into short (length <= 1) and thick, plus
    the status of the no-other-short-geodesics hypothesis."""

    short_set: frozenset[int]
    thick_set: frozenset[int]
    systole_status: str

    def __post_init__(self):
        if self.short_set & self.thick_set:
            raise ValidationError("short and thick sets overlap")
        if self.systole_status not in (STATUS_UNKNOWN, STATUS_ASSERTED, STATUS_CERTIFIED_HEURISTIC):
            raise ValidationError(f"unknown systole status {self.systole_status!r}")


def classify_curves(fn: FNCoordinates, *, systole_asserted: bool = False) -> CurveClassification:
    """Split curves at the length-1 threshold (boundary included in short).

    The hypothesis that no other geodesic loop of length <= 1 exists cannot be
    decided from Fenchel-Nielsen data alone; it starts out 'unknown' (or
    'asserted_by_user') and is only upgraded to 'certified_heuristic' by the
    word scan in the fuchsian module.
    """
    short = frozenset(i for i, ln in enumerate(fn.lengths) if ln <= 1.0)
    thick = frozenset(range(len(fn.lengths))) - short
    status = STATUS_ASSERTED if systole_asserted else STATUS_UNKNOWN
    return CurveClassification(short_set=short, thick_set=thick, systole_status=status)


def genus(decomp: PantsDecomposition) -> int:
    """Genus g with 3g-3 curves and 2g-2 pants."""
    return decomp.genus


@dataclass(frozen=True)
class ParsedSurface:
    decomposition: PantsDecomposition
    coordinates: FNCoordinates
    systole_asserted: bool

    @property
    def genus(self) -> int:
        return self.decomposition.genus


def parse_surface(text: str) -> ParsedSurface:
    """Parse and validate a surface-description document.

    Grammar (one record per line, '#' starts a comment):
        genus <g>                                  optional, cross-checked
        pants <id>                                 one per pants
        curve <id> <pa>.<sa> <pb>.<sb> len=<float> twist=<float> [mark=<0|1>]
        assert systole_certified                   optional hypothesis flag
    """
    declared_genus = None
    pants_ids: list[str] = []
    pants_index: dict[str, int] = {}
    curve_rows = []  # (label, slot_a, slot_b, length, twist, mark)
    systole_asserted = False

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = line.split()
        if not tokens:
            continue
        kind = tokens[0]
        if kind == "genus":
            if len(tokens) != 2:
                raise ParseError("expected: genus <g>", line=lineno)
            try:
                declared_genus = int(tokens[1])
            except ValueError:
                raise ParseError(f"genus must be an integer, got {tokens[1]!r}",
                                 line=lineno, column=_col(raw, tokens[1])) from None
        elif kind == "pants":
            if len(tokens) != 2:
                raise ParseError("expected: pants <id>", line=lineno)
            pid = tokens[1]
            if pid in pants_index:
                raise ParseError(f"duplicate pants id {pid!r}", line=lineno, column=_col(raw, pid))
            pants_index[pid] = len(pants_ids)
            pants_ids.append(pid)
        elif kind == "curve":
            if len(tokens) < 6:
                raise ParseError(
                    "expected: curve <id> <pa>.<sa> <pb>.<sb> len=<float> twist=<float> [mark=<0|1>]",
                    line=lineno)
            label = tokens[1]
            slot_a = _parse_slot(tokens[2], pants_index, raw, lineno)
            slot_b = _parse_slot(tokens[3], pants_index, raw, lineno)
            kv = {}
            for tok in tokens[4:]:
                if "=" not in tok:
                    raise ParseError(f"expected key=value, got {tok!r}", line=lineno, column=_col(raw, tok))
                key, val = tok.split("=", 1)
                kv[key] = (val, tok)
            if "len" not in kv or "twist" not in kv:
                raise ParseError(f"curve {label!r} needs len= and twist=", line=lineno)
            length = _parse_float(kv["len"], raw, lineno)
            twist = _parse_float(kv["twist"], raw, lineno)
            mark = 0
            if "mark" in kv:
                if kv["mark"][0] not in ("0", "1"):
                    raise ParseError(f"mark must be 0 or 1, got {kv['mark'][0]!r}",
                                     line=lineno, column=_col(raw, kv["mark"][1]))
                mark = int(kv["mark"][0])
            unknown = set(kv) - {"len", "twist", "mark"}
            if unknown:
                raise ParseError(f"unknown curve attributes {sorted(unknown)}", line=lineno)
            curve_rows.append((label, slot_a, slot_b, length, twist, mark))
        elif kind == "assert":
            if tokens[1:] != ["systole_certified"]:
                raise ParseError("the only supported assertion is 'assert systole_certified'", line=lineno)
            systole_asserted = True
        else:
            raise ParseError(f"unknown record type {kind!r}", line=lineno, column=_col(raw, kind))

    curves = tuple(
        Curve(slot_a=sa, slot_b=sb, label=lab, mark=mk)
        for (lab, sa, sb, _, _, mk) in curve_rows
    )
    decomp = PantsDecomposition(num_pants=len(pants_ids), curves=curves)
    fn = FNCoordinates(
        lengths=tuple(row[3] for row in curve_rows),
        twists=tuple(row[4] for row in curve_rows),
    )
    if declared_genus is not None and declared_genus != decomp.genus:
        raise ValidationError(
            f"declared genus {declared_genus} but the decomposition has genus {decomp.genus}"
        )
    return ParsedSurface(decomposition=decomp, coordinates=fn, systole_asserted=systole_asserted)


def _col(raw: str, token: str) -> int:
    pos = raw.find(token)
    return pos + 1 if pos >= 0 else 1


def _parse_slot(token: str, pants_index: dict[str, int], raw: str, lineno: int) -> Slot:
    if "." not in token:
        raise ParseError(f"slot must look like <pants>.<position>, got {token!r}",
                         line=lineno, column=_col(raw, token))
    pid, _, pos = token.rpartition(".")
    if pid not in pants_index:
        raise ParseError(f"slot {token!r} references undeclared pants {pid!r}",
                         line=lineno, column=_col(raw, token))
    if pos not in ("0", "1", "2"):
        raise ParseError(f"slot position must be 0, 1 or 2, got {pos!r}",
                         line=lineno, column=_col(raw, token))
    return (pants_index[pid], int(pos))


def _parse_float(val_tok: tuple[str, str], raw: str, lineno: int) -> float:
    val, tok = val_tok
    try:
        out = float(val)
    except ValueError:
        raise ParseError(f"bad float {val!r}", line=lineno, column=_col(raw, tok)) from None
    return out


def serialize_surface(decomp: PantsDecomposition, fn: FNCoordinates,
                      *, systole_asserted: bool = False) -> str:
    """Canonical serializer; parse_surface(serialize_surface(...)) round-trips
    bit-exactly (floats written with repr)."""
    lines = [f"genus {decomp.genus}"]
    for p in range(decomp.num_pants):
        lines.append(f"pants {p}")
    for i, c in enumerate(decomp.curves):
        label = c.label or str(i)
        rec = (f"curve {label} {_slot_str(c.slot_a)} {_slot_str(c.slot_b)} "
               f"len={fn.lengths[i]!r} twist={fn.twists[i]!r}")
        if c.mark:
            rec += " mark=1"
        lines.append(rec)
    if systole_asserted:
        lines.append("assert systole_certified")
    return "\n".join(lines) + "\n"
