"""Filling permutations: the symbol table, named permutations, validation,
surface reconstruction and orbit classification.

An oriented pair of curves (a, b) that fill a genus-g surface with the
minimal number 2g-1 of crossings cuts the surface into a single (8g-4)-gon.
Reading the directed-edge labels around that polygon defines a permutation
s of the 8g-4 labels, and s is characterised by three properties: it is an
(8g-4)-cycle, it respects the parity of the labels, and it solves

    s o iota o s = tau

where iota inverts every label and tau advances every label one sub-arc
along its own curve.  This module owns that characterisation and the
classification of solutions up to relabelling.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import NamedTuple

from .perms import Permutation, closure, from_cycles, identity


class Curve(Enum):
    ALPHA = "alpha"
    BETA = "beta"


class Direction(Enum):
    FORWARD = "forward"
    INVERSE = "inverse"


@dataclass(frozen=True)
class GenusContext:
    """Genus g together with the derived symbol counts."""

    g: int

    def __post_init__(self):
        if self.g < 1:
            raise ValueError("genus must be at least 1")

    @property
    def n(self) -> int:
        """Number of directed arc labels: 8g - 4."""
        return 8 * self.g - 4

    @property
    def i_min(self) -> int:
        """Minimal crossing count of a filling pair: 2g - 1."""
        return 2 * self.g - 1


@dataclass(frozen=True)
class SymbolInfo:
    curve: Curve
    arc_index: int
    direction: Direction


class CanonicalPerms(NamedTuple):
    Q: Permutation
    iota: Permutation
    tau: Permutation
    kappa: Permutation
    delta: Permutation
    eta: Permutation
    mu: Permutation


@lru_cache(maxsize=None)
def canonical_perms(ctx: GenusContext) -> CanonicalPerms:
    """The named permutations of the symbol set, genus-indexed.

    Q is the full rotation, iota = Q^(4g-2) the label inversion, tau the
    one-sub-arc advance, kappa/delta the basepoint rotations of the two
    curves, eta the direction flip of the first curve (index-preserving
    form) and mu the curve swap.  Cycles that degenerate to fewer than two
    entries are identity factors.
    """
    g = ctx.g
    n = ctx.n
    Q = from_cycles([list(range(1, n + 1))], n)
    iota = Q.power(4 * g - 2)
    tau = from_cycles(
        [
            list(range(1, 4 * g - 2, 2)),          # 1,3,...,4g-3
            list(range(2, 4 * g - 1, 2)),          # 2,4,...,4g-2
            list(range(8 * g - 5, 4 * g - 2, -2)),  # 8g-5,8g-7,...,4g-1
            list(range(8 * g - 4, 4 * g - 1, -2)),  # 8g-4,8g-6,...,4g
        ],
        n,
    )
    kappa = from_cycles(
        [
            list(range(1, 4 * g - 2, 2)),
            list(range(4 * g - 1, 8 * g - 4, 2)),  # 4g-1,4g+1,...,8g-5
        ],
        n,
    )
    delta = from_cycles(
        [
            list(range(2, 4 * g - 1, 2)),
            list(range(4 * g, 8 * g - 3, 2)),      # 4g,4g+2,...,8g-4
        ],
        n,
    )
    eta = from_cycles(
        [(2 * k - 1, 4 * g - 2 + 2 * k - 1) for k in range(1, 2 * g)], n
    )
    mu = from_cycles([(j, j + 1) for j in range(1, n, 2)], n)
    return CanonicalPerms(Q, iota, tau, kappa, delta, eta, mu)


def _reversal_index(g: int, k: int) -> int:
    # Arc k of a curve becomes arc (2g+1-k mod 2g-1) of the reversed curve.
    return (2 * g - k) % (2 * g - 1) + 1


@lru_cache(maxsize=None)
def alpha_reversal(ctx: GenusContext) -> Permutation:
    """Relabelling induced by reversing the first curve's direction.

    Reversing a curve renumbers its arcs along the new direction, so the
    flip pairs forward arc k with the inverse of arc 2g+1-k (mod 2g-1),
    not with its own inverse.  This is the form that commutes with tau
    and hence maps solutions of the filling equation to solutions; the
    index-preserving eta does not for g >= 2.
    """
    g = ctx.g
    pairs = []
    for k in range(1, 2 * g):
        m = _reversal_index(g, k)
        pairs.append((2 * k - 1, 4 * g - 2 + 2 * m - 1))
    return from_cycles(pairs, ctx.n)


@lru_cache(maxsize=None)
def beta_reversal(ctx: GenusContext) -> Permutation:
    """Relabelling induced by reversing the second curve's direction."""
    g = ctx.g
    pairs = []
    for k in range(1, 2 * g):
        m = _reversal_index(g, k)
        pairs.append((2 * k, 4 * g - 2 + 2 * m))
    return from_cycles(pairs, ctx.n)


def symbol_info(ctx: GenusContext, j: int) -> SymbolInfo:
    """Decode symbol j into (curve, arc index, direction).

    Symbols 1..4g-2 are the forward arcs a1,b1,a2,b2,...; symbol
    j+(4g-2) is the inverse of symbol j.
    """
    if not 1 <= j <= ctx.n:
        raise ValueError(f"symbol {j} out of range 1..{ctx.n}")
    half = 4 * ctx.g - 2
    direction = Direction.FORWARD
    if j > half:
        direction = Direction.INVERSE
        j -= half
    if j % 2:
        return SymbolInfo(Curve.ALPHA, (j + 1) // 2, direction)
    return SymbolInfo(Curve.BETA, j // 2, direction)


def symbol_of(ctx: GenusContext, curve: Curve, arc_index: int,
              direction: Direction = Direction.FORWARD) -> int:
    """Inverse of symbol_info."""
    if not 1 <= arc_index <= ctx.i_min:
        raise ValueError(f"arc index {arc_index} out of range 1..{ctx.i_min}")
    base = 2 * arc_index - 1 if curve is Curve.ALPHA else 2 * arc_index
    if direction is Direction.INVERSE:
        base += 4 * ctx.g - 2
    return base


def is_filling(ctx: GenusContext, p: Permutation) -> tuple[bool, str | None]:
    """Test the three filling conditions; on failure name the first broken one."""
    if p.n != ctx.n:
        raise ValueError("degree mismatch")
    if not p.is_n_cycle():
        return False, "not an n-cycle"
    if not p.is_parity_respecting():
        return False, "not parity respecting"
    cp = canonical_perms(ctx)
    if p.compose(cp.iota.compose(p)) != cp.tau:
        return False, "does not solve the filling equation"
    return True, None


@dataclass(frozen=True)
class FillingPermutation:
    """A validated solution of the filling equation.

    Encodes one oriented minimally intersecting filling pair; construction
    rejects anything that is not an n-cycle, not parity respecting, or not
    a solution.
    """

    ctx: GenusContext
    perm: Permutation

    def __post_init__(self):
        ok, why = is_filling(self.ctx, self.perm)
        if not ok:
            raise ValueError(f"not a filling permutation: {why}")

    def boundary_word(self) -> tuple[int, ...]:
        """The polygon's directed-edge labels in boundary order.

        This is the cycle of the permutation starting at symbol 1; every
        symbol appears exactly once.
        """
        word = [1]
        j = self.perm(1)
        while j != 1:
            word.append(j)
            j = self.perm(j)
        return tuple(word)

    def reconstruct(self) -> "SurfaceReport":
        return reconstruct(self)


@dataclass(frozen=True)
class SurfaceReport:
    """Result of gluing the labelled polygon back into a closed surface."""

    genus: int
    vertex_classes: tuple[tuple[int, ...], ...]
    alpha_is_single_curve: bool
    beta_is_single_curve: bool
    boundary_word: tuple[int, ...]


class ReconstructionError(RuntimeError):
    """Internal inconsistency while regluing a validated solution."""


def _corner_orbits(ctx: GenusContext, word: tuple[int, ...]) -> list[list[int]]:
    """Orbits of the quarter-turn corner map on polygon edge positions.

    Corner p sits after the edge at position p (0-based).  The map sends
    position p to the position of the label inverse to word[p+1]; its
    orbits are the vertex classes of the glued surface.
    """
    n = ctx.n
    half = 4 * ctx.g - 2
    pos_of = [0] * (n + 1)
    for p, s in enumerate(word):
        pos_of[s] = p
    inv = lambda s: s - half if s > half else s + half
    orbits: list[list[int]] = []
    seen = [False] * n
    for start in range(n):
        if seen[start]:
            continue
        orbit = []
        p = start
        while not seen[p]:
            seen[p] = True
            orbit.append(p)
            p = pos_of[inv(word[(p + 1) % n])]
        orbits.append(orbit)
    return orbits


def reconstruct(fp: FillingPermutation) -> SurfaceReport:
    """Glue each polygon edge to its inverse and report the surface.

    Checks carried out: every corner orbit has size exactly 4, there are
    2g-1 of them, and the arcs of each curve chain head-to-tail into one
    closed curve.  A validated filling permutation that failed any of
    these would indicate an implementation bug, hence the hard error.
    """
    ctx = fp.ctx
    n = ctx.n
    word = fp.boundary_word()
    orbits = _corner_orbits(ctx, word)
    if any(len(o) != 4 for o in orbits) or len(orbits) != ctx.i_min:
        raise ReconstructionError("corner orbits are not 4-valent")

    class_of_pos = [0] * n
    for cid, orbit in enumerate(orbits):
        for p in orbit:
            class_of_pos[p] = cid
    pos_of = [0] * (n + 1)
    for p, s in enumerate(word):
        pos_of[s] = p

    # head corner of the directed edge carrying symbol s
    head = lambda s: class_of_pos[pos_of[s]]
    # tail corner: the corner before the edge's position
    tail = lambda s: class_of_pos[(pos_of[s] - 1) % n]

    def single_curve(first_symbol: int) -> bool:
        arcs = ctx.i_min
        heads = [head(first_symbol + 2 * (k - 1)) for k in range(1, arcs + 1)]
        if len(set(heads)) != arcs:
            return False
        for k in range(1, arcs + 1):
            nxt = first_symbol + 2 * (k % arcs)
            if heads[k - 1] != tail(nxt):
                return False
        return True

    alpha_ok = single_curve(1)
    beta_ok = single_curve(2)

    # V - E + F with E = n/2, F = 1
    chi = len(orbits) - n // 2 + 1
    genus = (2 - chi) // 2
    return SurfaceReport(
        genus=genus,
        vertex_classes=tuple(tuple(p + 1 for p in o) for o in orbits),
        alpha_is_single_curve=alpha_ok,
        beta_is_single_curve=beta_ok,
        boundary_word=word,
    )


@lru_cache(maxsize=None)
def twisting_group(ctx: GenusContext) -> tuple[Permutation, ...]:
    """Relabellings mu^l kappa^k delta^j rev^i, deduplicated.

    These encode every re-orientation of an ordered pair: rotating the
    starting arc of either curve, reversing the first curve, and swapping
    the two curves.  At most 4*(2g-1)^2 elements.
    """
    cp = canonical_perms(ctx)
    rev = alpha_reversal(ctx)
    seen: set[Permutation] = set()
    order = 2 * ctx.g - 1
    kpow = [identity(ctx.n)]
    dpow = [identity(ctx.n)]
    for _ in range(order - 1):
        kpow.append(kpow[-1].compose(cp.kappa))
        dpow.append(dpow[-1].compose(cp.delta))
    for l in (0, 1):
        for k in range(order):
            for j in range(order):
                for i in (0, 1):
                    t = kpow[k].compose(dpow[j])
                    if i:
                        t = t.compose(rev)
                    if l:
                        t = cp.mu.compose(t)
                    seen.add(t)
    return tuple(sorted(seen))


@lru_cache(maxsize=None)
def twisting_closure(ctx: GenusContext) -> tuple[Permutation, ...]:
    """Group generated by the twisting set.

    The product set itself is not closed (composing a curve swap with a
    reversal yields the reversal of the other curve), so canonical class
    representatives minimise over this closure to make the classes a
    genuine partition.
    """
    return tuple(closure(twisting_group(ctx)))


@dataclass(frozen=True)
class OrbitClass:
    """Canonical representative of a filling permutation's twisting class."""

    ctx: GenusContext
    canonical: Permutation


def canonical_class_rep(ctx: GenusContext, p: Permutation) -> OrbitClass:
    """Lexicographically least conjugate under the twisting closure.

    Every conjugate is verified to be a filling permutation; a failure
    would mean the twisting relabellings are wrong and is reported as an
    internal error rather than a user error.
    """
    ok, why = is_filling(ctx, p)
    if not ok:
        raise ValueError(f"not a filling permutation: {why}")
    best: Permutation | None = None
    for t in twisting_closure(ctx):
        c = p.conjugate_by(t)
        ok, why = is_filling(ctx, c)
        if not ok:
            raise ReconstructionError(
                f"twisting conjugate left the solution set: {why}"
            )
        if best is None or c < best:
            best = c
    assert best is not None
    return OrbitClass(ctx, best)
