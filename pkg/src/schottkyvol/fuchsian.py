"""Fuchsian holonomy of the surface group from Fenchel-Nielsen data, and a
bounded-depth word scan for short closed geodesics.

Construction
------------
Each pair of pants is cut along its seams into two isometric right-angled
hexagons; walking the hexagon with left turns in the upper half-plane gives a
frame at one marked seam endpoint on each boundary, pointing along the
boundary with the pants interior on the left.  Pants are glued by matching
boundary frames across the curve: slide by the twist, then turn around.  With
this convention a positive twist is a left earthquake.

Group bookkeeping follows the pants graph: a spanning tree glues pants
directly, every non-tree curve contributes one stable-letter generator, and
boundary holonomies that cannot be expressed through the pants relation
X2*X1*X0 = 1 or a gluing relation are minted as fresh generators.  Words are
tuples of signed 1-based generator indices.

Killing all pants curves collapses every vertex group, so the quotient map to
the fundamental group of the handlebody (free on the non-tree curves) sends
minted generators to 1 and stable letters to free generators; a word is
compressible in the filling exactly when its image reduces to the empty word.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import BudgetExceededError, DomainError, HolonomyError, NonHyperbolicError
from .surface import (
    STATUS_CERTIFIED_HEURISTIC,
    CurveClassification,
    FNCoordinates,
    PantsDecomposition,
    Slot,
)

__all__ = [
    "HolonomyRepresentation",
    "GeodesicCandidate",
    "build_holonomy",
    "word_length",
    "short_geodesic_scan",
    "certify_systole",
    "handlebody_image",
    "is_compressible",
    "rho_upper_bound",
    "parse_word",
    "word_to_str",
    "free_reduce",
    "cyclic_reduce",
    "canonical_word",
    "invert_word",
]

Mat = tuple[float, float, float, float]
Word = tuple[int, ...]

_ID: Mat = (1.0, 0.0, 0.0, 1.0)
_DET_DRIFT_TOL = 1e-10
_RENORM_EVERY = 16


def _mul(m: Mat, n: Mat) -> Mat:
    a, b, c, d = m
    e, f, g, h = n
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def _det(m: Mat) -> float:
    return m[0] * m[3] - m[1] * m[2]


def _inv(m: Mat) -> Mat:
    a, b, c, d = m
    det = a * d - b * c
    return (d / det, -b / det, -c / det, a / det)


def _renorm(m: Mat) -> Mat:
    # drift guard is relative to the squared matrix norm: the determinant of a
    # binary64 matrix cannot be resolved more finely than ~ ||m||^2 * eps
    a, b, c, d = m
    det = a * d - b * c
    scale = max(1.0, a * a + b * b + c * c + d * d)
    if not math.isfinite(det) or abs(det - 1.0) >= _DET_DRIFT_TOL * scale:
        raise HolonomyError(f"determinant drifted to {det!r}; matrix {m!r}")
    s = math.sqrt(det)
    return (a / s, b / s, c / s, d / s)


_unitize = _renorm


def _trans(d: float) -> Mat:
    e = math.exp(0.5 * d)
    return (e, 0.0, 0.0, 1.0 / e)


def _rot(theta: float) -> Mat:
    c = math.cos(0.5 * theta)
    s = math.sin(0.5 * theta)
    return (c, s, -s, c)


_R90 = _rot(0.5 * math.pi)
_RPI = (0.0, 1.0, -1.0, 0.0)


def _max_abs(m: Mat) -> float:
    return max(abs(x) for x in m)


def _close_up_to_sign(m: Mat, n: Mat, tol: float) -> bool:
    scale = max(1.0, _max_abs(m), _max_abs(n))
    return (max(abs(x - y) for x, y in zip(m, n)) <= tol * scale
            or max(abs(x + y) for x, y in zip(m, n)) <= tol * scale)


# ---------------------------------------------------------------------------
# words

def free_reduce(word: Iterable[int]) -> Word:
    out: list[int] = []
    for letter in word:
        if letter == 0:
            raise DomainError("0 is not a valid letter (use signed 1-based indices)")
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def cyclic_reduce(word: Word) -> Word:
    w = list(word)
    while len(w) >= 2 and w[0] == -w[-1]:
        w = w[1:-1]
    return tuple(w)


def invert_word(word: Word) -> Word:
    return tuple(-letter for letter in reversed(word))


def canonical_word(word: Word) -> Word:
    """Lexicographically minimal representative over cyclic rotations of the
    word and of its inverse (the scan's deduplication key)."""
    n = len(word)
    if n == 0:
        return word
    best = None
    for v in (word, invert_word(word)):
        for i in range(n):
            rot = v[i:] + v[:i]
            if best is None or rot < best:
                best = rot
    return best


def parse_word(text: str) -> Word:
    """Compact word syntax: 'a'..'z' are generators 1..26, 'A'..'Z' their
    inverses.  Whitespace is ignored."""
    out = []
    for ch in text:
        if ch.isspace():
            continue
        if "a" <= ch <= "z":
            out.append(ord(ch) - ord("a") + 1)
        elif "A" <= ch <= "Z":
            out.append(-(ord(ch) - ord("A") + 1))
        else:
            raise DomainError(f"unexpected character {ch!r} in word")
    return tuple(out)


# ---------------------------------------------------------------------------
# pants geometry

def _seam_length(a_i: float, a_j: float, a_opp: float) -> float:
    # distance between two boundary geodesics of a pants with half-lengths a_*
    num = math.cosh(a_opp) + math.cosh(a_i) * math.cosh(a_j)
    den = math.sinh(a_i) * math.sinh(a_j)
    return math.acosh(num / den)


@dataclass(frozen=True)
class _PantsGeometry:
    lengths: tuple[float, float, float]
    seams: tuple[float, float, float]          # s01, s12, s20
    boundary_frames: tuple[Mat, Mat, Mat]      # at the marked seam endpoint of each boundary
    boundary_mats: tuple[Mat, Mat, Mat]        # local holonomy around each boundary


def _pants_geometry(lengths: Sequence[float]) -> _PantsGeometry:
    l0, l1, l2 = lengths
    a0, a1, a2 = 0.5 * l0, 0.5 * l1, 0.5 * l2
    try:
        s01 = _seam_length(a0, a1, a2)
        s12 = _seam_length(a1, a2, a0)
        s20 = _seam_length(a2, a0, a1)
    except (OverflowError, ValueError) as exc:
        raise HolonomyError(f"pants geometry failed for lengths {tuple(lengths)!r}: {exc}") from None
    sides = (a0, s01, a1, s12, a2, s20)
    frames = []
    cur = _ID
    for j, side in enumerate(sides):
        if j % 2 == 0:
            frames.append(cur)
        cur = _mul(_mul(cur, _trans(side)), _R90)
    if not all(math.isfinite(x) for x in cur):
        raise HolonomyError(f"hexagon walk overflowed for lengths {tuple(lengths)!r}")
    if not _close_up_to_sign(cur, _ID, 1e-9):
        raise HolonomyError(f"hexagon failed to close for lengths {tuple(lengths)!r}: {cur!r}")
    mats = []
    for frame, ln in zip(frames, (l0, l1, l2)):
        mats.append(_unitize(_mul(_mul(frame, _trans(ln)), _inv(frame))))
    x2x1x0 = _mul(mats[2], _mul(mats[1], mats[0]))
    if not _close_up_to_sign(x2x1x0, _ID, 1e-8):
        raise HolonomyError(f"pants relation violated for lengths {tuple(lengths)!r}: {x2x1x0!r}")
    return _PantsGeometry(lengths=(l0, l1, l2), seams=(s01, s12, s20),
                          boundary_frames=tuple(frames), boundary_mats=tuple(mats))


# ---------------------------------------------------------------------------
# representation

@dataclass(frozen=True)
class HolonomyRepresentation:
    """Discrete faithful representation of the surface group adapted to the
    pants decomposition.  Immutable after construction; safe to share."""

    genus: int
    generators: tuple[Mat, ...]
    generator_names: tuple[str, ...]
    generator_free_images: tuple[Word, ...]  # image in the handlebody free group
    curve_words: tuple[Word, ...]
    curve_lengths: tuple[float, ...]

    @property
    def rank(self) -> int:
        return len(self.generators)


@dataclass(frozen=True)
class GeodesicCandidate:
    word: Word
    length: float
    simple_hint: bool


def _glue_frame(anchor: Mat, tau: float, other_boundary_frame: Mat) -> Mat:
    # across-the-curve matching: slide by -tau (left earthquake positive), turn around
    return _mul(_mul(_mul(anchor, _trans(-tau)), _RPI), _inv(other_boundary_frame))


def build_holonomy(decomp: PantsDecomposition, fn: FNCoordinates) -> HolonomyRepresentation:
    """Build the holonomy representation realizing the given coordinates.

    Twists are realized by conjugating the gluing map with the translation of
    length twist along the curve axis; a full twist by the curve length is a
    Dehn twist and leaves every pants-curve trace unchanged.
    """
    n_curves = len(decomp.curves)
    if len(fn.lengths) != n_curves:
        raise DomainError(f"{len(fn.lengths)} coordinates for {n_curves} curves")
    slot_of = decomp.slot_map()

    # effective twist includes the marked-endpoint bit as a half-length offset
    tau = [fn.twists[i] + 0.5 * decomp.curves[i].mark * fn.lengths[i] for i in range(n_curves)]

    boundary_len = {}
    for i, c in enumerate(decomp.curves):
        boundary_len[c.slot_a] = fn.lengths[i]
        boundary_len[c.slot_b] = fn.lengths[i]
    pants_geo = [
        _pants_geometry([boundary_len[(p, s)] for s in (0, 1, 2)])
        for p in range(decomp.num_pants)
    ]

    # spanning tree by BFS over pants, exploring curves in index order
    adjacency = decomp.pants_adjacency()
    placement: list[Optional[Mat]] = [None] * decomp.num_pants
    placement[0] = _ID
    tree_curves: set[int] = set()
    queue = [0]
    while queue:
        p = queue.pop(0)
        for ci, other in sorted(adjacency[p]):
            if placement[other] is not None:
                continue
            c = decomp.curves[ci]
            if c.slot_a[0] == p:
                here, there = c.slot_a, c.slot_b
            else:
                here, there = c.slot_b, c.slot_a
            anchor = _mul(placement[p], pants_geo[p].boundary_frames[here[1]])
            placement[other] = _glue_frame(anchor, tau[ci], pants_geo[other].boundary_frames[there[1]])
            tree_curves.add(ci)
            queue.append(other)

    def global_frame(slot: Slot) -> Mat:
        p, s = slot
        return _mul(placement[p], pants_geo[p].boundary_frames[s])

    def global_boundary(slot: Slot) -> Mat:
        p, s = slot
        w = placement[p]
        return _unitize(_mul(_mul(w, pants_geo[p].boundary_mats[s]), _inv(w)))

    gx = {slot: global_boundary(slot) for slot in slot_of}
    for slot, m in gx.items():
        if not all(math.isfinite(x) for x in m):
            raise HolonomyError(f"holonomy overflowed at slot {slot}")

    # stable letters: one generator per non-tree curve, oriented a-side -> b-side
    gen_mats: list[Mat] = []
    gen_names: list[str] = []
    gen_free_images: list[Word] = []
    stable_gen_of_curve: dict[int, int] = {}
    free_letter = 0
    for ci, c in enumerate(decomp.curves):
        if ci in tree_curves:
            continue
        anchor = global_frame(c.slot_a)
        s_mat = _unitize(_mul(_mul(_mul(anchor, _trans(-tau[ci])), _RPI), _inv(global_frame(c.slot_b))))
        free_letter += 1
        gen_mats.append(s_mat)
        gen_names.append(f"t{len(stable_gen_of_curve)}")
        gen_free_images.append((free_letter,))
        stable_gen_of_curve[ci] = len(gen_mats)  # 1-based

    # gluing consistency: the b-side holonomy is conjugate-inverse of the a-side
    for ci, c in enumerate(decomp.curves):
        ga, gb = gx[c.slot_a], gx[c.slot_b]
        if ci in tree_curves:
            lhs = gb
        else:
            s = gen_mats[stable_gen_of_curve[ci] - 1]
            lhs = _mul(_mul(s, gb), _inv(s))
        if not _close_up_to_sign(lhs, _inv(ga), 1e-7):
            raise HolonomyError(
                f"gluing consistency failed for curve {c.label or ci}"
            )

    # symbolic layer: express every boundary slot as a word in the generators
    slot_words: dict[Slot, Word] = {}

    def apply_rules() -> bool:
        changed = False
        # tree gluings: opposite sides carry inverse words
        for ci in sorted(tree_curves):
            c = decomp.curves[ci]
            a, b = c.slot_a, c.slot_b
            if a in slot_words and b not in slot_words:
                slot_words[b] = free_reduce(invert_word(slot_words[a]))
                changed = True
            elif b in slot_words and a not in slot_words:
                slot_words[a] = free_reduce(invert_word(slot_words[b]))
                changed = True
        # pants relation X2*X1*X0 = 1 determines the third boundary from two
        for p in range(decomp.num_pants):
            slots = [(p, s) for s in (0, 1, 2)]
            known = [s in slot_words for s in slots]
            if sum(known) == 2:
                w = [slot_words.get(s) for s in slots]
                if not known[0]:
                    slot_words[slots[0]] = free_reduce(invert_word(w[1]) + invert_word(w[2]))
                elif not known[1]:
                    slot_words[slots[1]] = free_reduce(invert_word(w[2]) + invert_word(w[0]))
                else:
                    slot_words[slots[2]] = free_reduce(invert_word(w[0]) + invert_word(w[1]))
                changed = True
        # stable gluings: t * X_b * t^-1 = X_a^-1
        for ci, t in sorted(stable_gen_of_curve.items()):
            c = decomp.curves[ci]
            a, b = c.slot_a, c.slot_b
            if a in slot_words and b not in slot_words:
                slot_words[b] = free_reduce((-t,) + invert_word(slot_words[a]) + (t,))
                changed = True
            elif b in slot_words and a not in slot_words:
                slot_words[a] = free_reduce((t,) + invert_word(slot_words[b]) + (-t,))
                changed = True
        return changed

    all_slots = sorted(slot_of)
    minted = 0
    while True:
        while apply_rules():
            pass
        unknown = [s for s in all_slots if s not in slot_words]
        if not unknown:
            break
        slot = unknown[0]
        gen_mats.append(gx[slot])
        gen_names.append(f"x{minted}")
        gen_free_images.append(())
        minted += 1
        slot_words[slot] = (len(gen_mats),)

    # verify the symbolic layer reproduces the developed holonomy
    letter_mats = {}
    for i, m in enumerate(gen_mats, start=1):
        letter_mats[i] = m
        letter_mats[-i] = _inv(m)
    for slot in all_slots:
        m = _ID
        for letter in slot_words[slot]:
            m = _mul(m, letter_mats[letter])
        if not _close_up_to_sign(m, gx[slot], 1e-6):
            raise HolonomyError(f"word layer disagrees with holonomy at slot {slot}")

    # pants-curve trace invariant
    for ci, c in enumerate(decomp.curves):
        tr = abs(gx[c.slot_a][0] + gx[c.slot_a][3])
        want = 2.0 * math.cosh(0.5 * fn.lengths[ci])
        if abs(tr - want) > 1e-8 * max(1.0, want):
            raise HolonomyError(
                f"curve {c.label or ci}: |trace| = {tr!r} but 2cosh(l/2) = {want!r}"
            )

    curve_words = tuple(slot_words[c.slot_a] for c in decomp.curves)
    return HolonomyRepresentation(
        genus=decomp.genus,
        generators=tuple(gen_mats),
        generator_names=tuple(gen_names),
        generator_free_images=tuple(gen_free_images),
        curve_words=curve_words,
        curve_lengths=tuple(fn.lengths),
    )


# ---------------------------------------------------------------------------
# lengths of words

def _evaluate(rep: HolonomyRepresentation, word: Word) -> Mat:
    m = _ID
    for count, letter in enumerate(word, start=1):
        idx = abs(letter)
        if not 1 <= idx <= len(rep.generators):
            raise DomainError(f"letter {letter} outside generator range 1..{len(rep.generators)}")
        g = rep.generators[idx - 1]
        m = _mul(m, g if letter > 0 else _inv(g))
        if count % _RENORM_EVERY == 0:
            m = _renorm(m)
    return _renorm(m)


_TRACE_TOL = 1e-9


def word_length(rep: HolonomyRepresentation, word: Iterable[int]) -> float:
    """Translation length 2*arccosh(|trace|/2) of the group element spelled by
    the word.  The input is freely and cyclically reduced first (both preserve
    the trace); a word reducing to the identity is a domain error, and
    |trace| <= 2 + 1e-9 for a nontrivial word raises NonHyperbolicError."""
    w = cyclic_reduce(free_reduce(word))
    if not w:
        raise DomainError("word reduces to the empty word")
    m = _evaluate(rep, w)
    tr = abs(m[0] + m[3])
    if tr <= 2.0 + _TRACE_TOL:
        raise NonHyperbolicError(f"word {w!r} has |trace| = {tr!r} <= 2: not hyperbolic")
    return 2.0 * math.acosh(0.5 * tr)


def _near_identity(m: Mat) -> bool:
    return (max(abs(m[0] - 1.0), abs(m[1]), abs(m[2]), abs(m[3] - 1.0)) < 1e-6
            or max(abs(m[0] + 1.0), abs(m[1]), abs(m[2]), abs(m[3] + 1.0)) < 1e-6)


# ---------------------------------------------------------------------------
# scan

def _scan_shard(first: int, letter_mats: list[Mat], max_word_len: int,
                trace_cut: float, cutoff: float, budget: int) -> tuple[list[tuple[Word, float]], int]:
    """Enumerate canonical cyclically-reduced words whose first letter is
    `first` and also the minimum letter of the word."""
    nletters = len(letter_mats)
    allowed = [
        [nxt for nxt in range(first, nletters) if nxt != (prev ^ 1)]
        for prev in range(nletters)
    ]
    found: list[tuple[Word, float]] = []
    nodes = 0
    inv_first = first ^ 1

    def visit(word: list[int], prod: Mat):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceededError(
                f"scan exceeded its node budget of {budget}; "
                f"reduce max_word_len (= {max_word_len}) or raise the budget"
            )
        if word[-1] != inv_first:  # cyclically reduced
            tr = abs(prod[0] + prod[3])
            if tr <= trace_cut:
                if tr <= 2.0 + _TRACE_TOL:
                    # relation words spell the identity and are not geodesics;
                    # anything else this close to trace 2 is a broken rep
                    if not _near_identity(prod):
                        raise NonHyperbolicError(
                            f"scan met |trace| = {tr!r} <= 2 at word {tuple(word)!r}"
                        )
                else:
                    w = tuple(word)
                    if canonical_word_letters(w) == w:
                        length = 2.0 * math.acosh(0.5 * tr)
                        if length <= cutoff:
                            found.append((w, length))
        if len(word) < max_word_len:
            for nxt in allowed[word[-1]]:
                visit(word + [nxt], _mul(prod, letter_mats[nxt]))

    visit([first], letter_mats[first])
    return found, nodes


def _letters_to_signed(word: Word) -> Word:
    return tuple((letter >> 1) + 1 if (letter & 1) == 0 else -((letter >> 1) + 1) for letter in word)


def _signed_to_letters(word: Word) -> Word:
    return tuple((abs(x) - 1) * 2 + (0 if x > 0 else 1) for x in word)


def _invert_letters(word: Word) -> Word:
    return tuple(letter ^ 1 for letter in reversed(word))


def canonical_word_letters(word: Word) -> Word:
    n = len(word)
    best = word
    for v in (word, _invert_letters(word)):
        for i in range(n):
            rot = v[i:] + v[:i]
            if rot < best:
                best = rot
    return best


def short_geodesic_scan(rep: HolonomyRepresentation, cutoff: float, max_word_len: int,
                        *, budget: int = 10_000_000, workers: int = 1) -> list[GeodesicCandidate]:
    """All cyclically-reduced words of at most max_word_len letters whose
    closed geodesic has length <= cutoff, deduplicated by cyclic rotation and
    inversion and sorted by (length, word).

    One-sided heuristic: an empty result does not prove that no short geodesic
    exists beyond the words searched.  Words spelling the identity (relation
    words) are skipped.  The result is a deterministic set, independent of the
    worker count; the budget counts visited search-tree nodes.
    """
    if not (cutoff > 0.0) or not math.isfinite(cutoff):
        raise DomainError(f"cutoff must be positive and finite, got {cutoff!r}")
    if max_word_len < 1:
        raise DomainError(f"max_word_len must be >= 1, got {max_word_len!r}")
    if workers < 1:
        raise DomainError(f"workers must be >= 1, got {workers!r}")

    letter_mats = []
    for g in rep.generators:
        letter_mats.append(g)
        letter_mats.append(_inv(g))
    trace_cut = 2.0 * math.cosh(0.5 * cutoff) + 1e-12

    shards = list(range(len(letter_mats)))
    if workers == 1:
        results = [_scan_shard(f, letter_mats, max_word_len, trace_cut, cutoff, budget)
                   for f in shards]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(
                lambda f: _scan_shard(f, letter_mats, max_word_len, trace_cut, cutoff, budget),
                shards))

    total_nodes = sum(nodes for _, nodes in results)
    if total_nodes > budget:
        raise BudgetExceededError(
            f"scan visited {total_nodes} nodes, over the budget of {budget}; "
            f"reduce max_word_len (= {max_word_len}) or raise the budget"
        )

    curve_canon = {canonical_word_letters(_signed_to_letters(w)) for w in rep.curve_words}
    out = []
    for found, _ in results:
        for w, length in found:
            out.append(GeodesicCandidate(
                word=_letters_to_signed(w),
                length=length,
                simple_hint=w in curve_canon,
            ))
    out.sort(key=lambda cand: (cand.length, cand.word))
    return out


def certify_systole(rep: HolonomyRepresentation, classification: CurveClassification,
                    *, cutoff: float = 1.0, max_word_len: int = 6,
                    budget: int = 10_000_000, workers: int = 1,
                    ) -> tuple[CurveClassification, list[GeodesicCandidate]]:
    """Run the scan and upgrade the systole status to certified_heuristic when
    every candidate at or below the cutoff is accounted for by a declared
    pants curve (its geodesic or an iterate, matched by length to 1e-6).

    The certificate is one-sided and heuristic: it can fail to certify a true
    hypothesis (scan too shallow finds an unexplained word) and it cannot
    prove the hypothesis, only fail to refute it at this depth.
    """
    candidates = short_geodesic_scan(rep, cutoff, max_word_len, budget=budget, workers=workers)
    known: list[float] = []
    for ln in rep.curve_lengths:
        m = 1
        while m * ln <= cutoff + 1e-9:
            known.append(m * ln)
            m += 1
    unexplained = [
        cand for cand in candidates
        if not any(abs(cand.length - ln) <= 1e-6 for ln in known)
    ]
    if unexplained:
        return classification, candidates
    upgraded = CurveClassification(
        short_set=classification.short_set,
        thick_set=classification.thick_set,
        systole_status=STATUS_CERTIFIED_HEURISTIC,
    )
    return upgraded, candidates


# ---------------------------------------------------------------------------
# handlebody quotient

def handlebody_image(rep: HolonomyRepresentation, word: Iterable[int]) -> Word:
    """Image of the word in the fundamental group of the handlebody filling
    (free of rank g), as a reduced word in its free generators."""
    out: list[int] = []
    for letter in free_reduce(word):
        image = rep.generator_free_images[abs(letter) - 1]
        if letter < 0:
            image = invert_word(image)
        for x in image:
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
    return tuple(out)


def is_compressible(rep: HolonomyRepresentation, word: Iterable[int]) -> bool:
    """True when the word is null-homotopic in the handlebody filling."""
    return handlebody_image(rep, word) == ()


def rho_upper_bound(rep: HolonomyRepresentation,
                    candidates: Sequence[GeodesicCandidate] = ()) -> float:
    """Heuristic upper bound for half the length of the shortest simple closed
    compressible geodesic: every pants curve is simple and compressible, and
    scan candidates with trivial handlebody image are compressible (though not
    known simple).  Only an upper bound; a valid lower bound would need a
    systole algorithm, so bounds evaluated with this value are conditional."""
    best = min(rep.curve_lengths)
    for cand in candidates:
        if cand.length < best and is_compressible(rep, cand.word):
            best = cand.length
    return 0.5 * best


def word_to_str(rep: HolonomyRepresentation, word: Iterable[int]) -> str:
    parts = []
    for letter in word:
        name = rep.generator_names[abs(letter) - 1]
        parts.append(name if letter > 0 else name + "^-1")
    return "*".join(parts) if parts else "1"
