"""Genus g -> g+2 extension by splicing a decorated two-handle piece.

The splice excises one crossing of a filling pair and routes both curves
through a genus-2 piece carrying a pair of arcs that cross five times.
Combinatorially the piece is described by

  * order  -- the second arc visits the first arc's crossings in this
              order (a permutation of 1..5),
  * signs  -- crossing chirality at each of the five points, stored
              relative to the chirality of the excised vertex (the piece
              is mirrored when glued into a vertex of opposite sign; a
              fixed absolute chirality splices consistently at no vertex
              mix, which the derivation search confirms).

The template itself is pinned by its defining property: splicing it into
the torus pair gives a valid genus-3 pair, and splicing it into every
genus-3 pair at every vertex gives a valid genus-5 pair.  The search over
all 5! * 2^5 candidate decorations recovers it without any drawn figure.
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass
from itertools import permutations, product
from pathlib import Path
from typing import Iterable, Sequence

from .diagram import PairDiagram, diagram_of
from .enumeration import enumerate_filling
from .filling import FillingPermutation, GenusContext
from .perms import Permutation

_ALGO_VERSION = 1


@dataclass(frozen=True)
class ZTemplate:
    """Crossing decoration of the splice piece.

    order[m-1] = i means the second arc's m-th crossing is the first
    arc's i-th; signs[i-1] is the chirality at the first arc's i-th
    crossing, relative to the excised vertex.
    """

    order: tuple[int, int, int, int, int]
    signs: tuple[int, int, int, int, int]

    def __post_init__(self):
        if sorted(self.order) != [1, 2, 3, 4, 5]:
            raise ValueError("order must be a permutation of 1..5")
        if any(s not in (-1, 1) for s in self.signs):
            raise ValueError("signs must be +1/-1")

    @property
    def alpha_word(self) -> tuple[str, ...]:
        return tuple(f"x{i}" for i in range(1, 7))

    @property
    def beta_word(self) -> tuple[str, ...]:
        return tuple(f"y{i}" for i in range(1, 7))

    @property
    def incidence(self) -> tuple[tuple[int, int, int], ...]:
        """(crossing index along a, index along b, relative sign) triples."""
        along_b = {a: m for m, a in enumerate(self.order, start=1)}
        return tuple((i, along_b[i], self.signs[i - 1]) for i in range(1, 6))

    def swap_dual(self) -> "ZTemplate":
        """The same piece with the roles of the two arcs exchanged."""
        inv = [0] * 5
        for m, a in enumerate(self.order, start=1):
            inv[a - 1] = m
        dual_signs = tuple(-self.signs[self.order[m - 1] - 1] for m in range(1, 6))
        return ZTemplate(tuple(inv), dual_signs)

    def to_json(self) -> dict:
        return {"order": list(self.order), "signs": list(self.signs)}

    @classmethod
    def from_json(cls, data: dict) -> "ZTemplate":
        return cls(tuple(data["order"]), tuple(data["signs"]))


@dataclass(frozen=True)
class LSequence:
    """Strictly increasing attachment indices a_i <= 4i-3 for odd genus."""

    g: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.g % 2 == 0 or self.g < 3:
            raise ValueError("attachment sequences need odd genus >= 3")
        if len(self.entries) != (self.g - 1) // 2:
            raise ValueError("sequence length must be (g-1)/2")
        prev = 0
        for i, a in enumerate(self.entries, start=1):
            if a <= prev or a > 4 * i - 3:
                raise ValueError(f"entry {a} violates a_{i} <= {4 * i - 3} or monotonicity")
            prev = a


@dataclass(frozen=True)
class ZMatch:
    """One detected occurrence of the splice piece inside a filling pair."""

    position: int                # starting arc of the 6-arc run on alpha
    orientation: str             # "direct" (alpha carries a) or "swapped"
    chirality: int               # +1 as derived, -1 for the mirrored copy
    beta_start: int              # starting arc of the companion 6-arc run
    alpha_interior: tuple[int, ...]
    beta_interior: tuple[int, ...]
    interior_points: frozenset[int]
    endpoints: tuple[int, int, int, int]


# ----------------------------------------------------------------------
# Splice
# ----------------------------------------------------------------------


def _splice_diagram(d: PairDiagram, k: int, t: ZTemplate) -> PairDiagram:
    vsign = d.signs[k - 1]
    relabel = lambda x: x if x < k else x + 4
    block = [k - 1 + o for o in t.order]
    bseq: list[int] = []
    for entry in d.beta_seq:
        if entry == k:
            bseq.extend(block)
        else:
            bseq.append(relabel(entry))
    signs = [0] * (d.m + 4)
    for p in range(1, d.m + 1):
        if p != k:
            signs[relabel(p) - 1] = d.signs[p - 1]
    for i in range(5):
        signs[k - 1 + i] = t.signs[i] * vsign
    return PairDiagram(d.m + 4, tuple(bseq), tuple(signs))


def splice(fp: FillingPermutation, k: int, t: ZTemplate) -> FillingPermutation:
    """Excise crossing k and glue in the decorated piece.

    Crossing labels above k shift up by four and the five new crossings
    take labels k..k+4 along the first curve, so iterated splices are
    reproducible from the label data alone.  The result is validated as a
    genus-(g+2) filling permutation.
    """
    if not 1 <= k <= fp.ctx.i_min:
        raise ValueError("vertex out of range")
    d2 = _splice_diagram(diagram_of(fp), k, t)
    out = d2.to_filling_permutation()
    assert out.ctx.g == fp.ctx.g + 2
    return out


def build_from_sequence(seq: LSequence, t: ZTemplate) -> FillingPermutation:
    """Iterate the splice along an attachment sequence, torus upward.

    Stage i excises the crossing labelled seq.entries[i-1]; the caps
    4i - 3 guarantee the label exists at each stage.  Distinct sequences
    give distinct oriented pairs.
    """
    fp = FillingPermutation(GenusContext(1), Permutation([2, 3, 4, 1]))
    for a in seq.entries:
        fp = splice(fp, a, t)
    assert fp.ctx.g == seq.g
    return fp


# ----------------------------------------------------------------------
# Detection
# ----------------------------------------------------------------------


def detect_zpieces(fp: FillingPermutation, t: ZTemplate) -> list[ZMatch]:
    """All occurrences of the piece's crossing pattern, either framing.

    A direct match puts the a-role on the first curve; a swapped match
    (the piece's arc-exchange symmetry) puts it on the second.  A match
    may be mirrored, which flips all five signs at once.  Matches are
    deduplicated by their arc footprint, so the two framings of one
    occurrence collapse to a single record.

    Matching is purely by the crossing pattern (consecutive runs on both
    curves, visit order, signs).  The four run endpoints are reported on
    each match but not required to be distinct: at genus 3 the runs wrap
    around the whole curve, and even embedded occurrences may have the
    a-run's exit point equal to the b-run's entry point when the excised
    vertex's neighbours coincided that way in the parent pair.
    """
    d = diagram_of(fp)
    m = d.m
    if m < 5:
        return []
    wrap = lambda x: (x - 1) % m + 1
    bpos = {label: j for j, label in enumerate(d.beta_seq)}  # 0-based position
    found: dict[tuple[frozenset[int], frozenset[int]], ZMatch] = {}

    def pattern_match(order_obs, signs_obs) -> int | None:
        for chir in (1, -1):
            if order_obs == t.order and signs_obs == tuple(chir * s for s in t.signs):
                return chir
        return None

    def record(alpha_start: int, beta_start: int, orientation: str, chir: int,
               interior: Sequence[int], ends: tuple[int, int, int, int]) -> None:
        a_int = frozenset(wrap(alpha_start + i) for i in range(1, 5))
        b_int = frozenset(wrap(beta_start + i) for i in range(1, 5))
        key = (a_int, b_int)
        if key not in found:
            found[key] = ZMatch(
                position=alpha_start, orientation=orientation, chirality=chir,
                beta_start=beta_start,
                alpha_interior=tuple(wrap(alpha_start + i) for i in range(1, 5)),
                beta_interior=tuple(wrap(beta_start + i) for i in range(1, 5)),
                interior_points=frozenset(interior),
                endpoints=ends,
            )

    # direct: the first curve carries the a role, run = arcs k..k+5
    for k in range(1, m + 1):
        u = [wrap(k + i) for i in range(5)]
        positions = {bpos[x] for x in u}
        for j0 in positions:
            if not all((j0 + i) % m in positions for i in range(5)):
                continue
            visit = [d.beta_seq[(j0 + i) % m] for i in range(5)]
            order_obs = tuple(u.index(x) + 1 for x in visit)
            signs_obs = tuple(d.signs[x - 1] for x in u)
            chir = pattern_match(order_obs, signs_obs)
            if chir is None:
                continue
            ends = (wrap(k - 1), d.beta_seq[(j0 - 1) % m],
                    d.beta_seq[(j0 + 5) % m], wrap(k + 5))
            record(k, j0 + 1, "direct", chir, u, ends)

    # swapped: the second curve carries the a role, run = beta arcs r..r+5
    for r in range(1, m + 1):
        u = [d.beta_seq[(r - 1 + i) % m] for i in range(5)]
        uset = set(u)
        for c in u:
            if not all(wrap(c + i) in uset for i in range(5)):
                continue
            visit = [wrap(c + i) for i in range(5)]
            order_obs = tuple(u.index(x) + 1 for x in visit)
            signs_obs = tuple(-d.signs[x - 1] for x in u)
            chir = pattern_match(order_obs, signs_obs)
            if chir is None:
                continue
            ends = (d.beta_seq[(r - 2) % m], wrap(c - 1),
                    wrap(c + 5), d.beta_seq[(r + 4) % m])
            record(c, r, "swapped", chir, u, ends)

    return sorted(found.values(), key=lambda z: (z.position, z.orientation))


# ----------------------------------------------------------------------
# Derivation
# ----------------------------------------------------------------------


def _candidate_templates() -> Iterable[ZTemplate]:
    for order in permutations(range(1, 6)):
        for signs in product((-1, 1), repeat=5):
            yield ZTemplate(order, signs)


def _torus_diagram() -> PairDiagram:
    return diagram_of(FillingPermutation(GenusContext(1), Permutation([2, 3, 4, 1])))


def _passes(t: ZTemplate, torus: PairDiagram, g3_diagrams: list[PairDiagram],
            g3_set: set[Permutation]) -> bool:
    d3 = _splice_diagram(torus, 1, t)
    if not d3.is_filling_pair():
        return False
    if d3.to_filling_permutation().perm not in g3_set:
        return False
    for d in g3_diagrams:
        for k in range(1, 6):
            if not _splice_diagram(d, k, t).is_filling_pair():
                return False
    return True


def _g3_data():
    sols = enumerate_filling(GenusContext(3))
    return [diagram_of(s) for s in sols], {s.perm for s in sols}


def _cache_path() -> Path:
    root = os.environ.get("FILLPERM_CACHE_DIR")
    base = Path(root) if root else Path.home() / ".cache" / "fillperm"
    return base / f"ztemplate-v{_ALGO_VERSION}.json"


def _template_digest(t: ZTemplate) -> str:
    return hashlib.sha256(
        json.dumps(t.to_json(), sort_keys=True).encode()
    ).hexdigest()


def derive_template(use_cache: bool = True) -> ZTemplate:
    """Search the 3840 candidate decorations for the least valid one.

    Validity is checked against the independently enumerated genus-3
    solution set: the torus splice must land in it, and every genus-3
    solution must splice at every vertex.  The winner is cached on disk
    keyed by the algorithm version, with a content hash guarding the
    stored decoration.
    """
    path = _cache_path()
    if use_cache and path.exists():
        try:
            data = json.loads(path.read_text())
            if data.get("algo") == _ALGO_VERSION:
                t = ZTemplate.from_json(data["template"])
                if data.get("sha256") == _template_digest(t):
                    return t
        except (ValueError, KeyError):
            pass
    g3_diagrams, g3_set = _g3_data()
    torus = _torus_diagram()
    for t in _candidate_templates():
        if _passes(t, torus, g3_diagrams, g3_set):
            if use_cache:
                try:
                    path.parent.mkdir(parents=True, exist_ok=True)
                    path.write_text(json.dumps({
                        "algo": _ALGO_VERSION,
                        "template": t.to_json(),
                        "sha256": _template_digest(t),
                    }))
                except OSError:
                    pass
            return t
    raise RuntimeError("template derivation failed")


def derive_all_templates() -> list[ZTemplate]:
    """Every decoration passing the full validity sweep, in sort order."""
    g3_diagrams, g3_set = _g3_data()
    torus = _torus_diagram()
    return [t for t in _candidate_templates()
            if _passes(t, torus, g3_diagrams, g3_set)]
