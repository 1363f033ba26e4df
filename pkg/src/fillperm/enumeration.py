"""Exhaustive generation of filling permutations via square roots.

Every filling permutation factors as iota o C where C squares to the
fixed-point-free involution iota o tau.  The involution splits into 2g-1
all-odd and 2g-1 all-even transpositions; the admissible square roots are
exactly the perfect matchings of odd transpositions with even ones, each
matched pair interleaved into a 4-cycle in one of two ways.  Enumerating
matchings in lexicographic order and interleaving bits within each
matching gives a deterministic stream of 2^(2g-1) * (2g-1)! candidates,
and the n-cycle test on iota o C filters out the solutions.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from itertools import islice, permutations
from math import factorial
from typing import Iterator, Sequence

from .filling import (
    FillingPermutation,
    GenusContext,
    canonical_perms,
    twisting_closure,
)
from .perms import Permutation

DEFAULT_GUARD = 5


class GuardExceeded(RuntimeError):
    """Requested genus is above the enumeration guard."""


def guard_limit() -> int:
    """Genus guard; override with the FILLPERM_GUARD environment variable."""
    return int(os.environ.get("FILLPERM_GUARD", DEFAULT_GUARD))


def check_guard(g: int, force: bool = False) -> None:
    limit = guard_limit()
    if force or g <= limit:
        return
    raise GuardExceeded(
        f"genus {g} exceeds the enumeration guard ({limit}); "
        f"the run would generate {root_count(g)} square roots. "
        "Set FILLPERM_GUARD or pass force=True to override."
    )


# ----------------------------------------------------------------------
# The base involution and its transpositions
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class BaseInvolution:
    """iota o tau together with its parity-tagged transpositions."""

    perm: Permutation
    odd: tuple[tuple[int, int], ...]
    even: tuple[tuple[int, int], ...]


def base_involution(ctx: GenusContext) -> BaseInvolution:
    """Compute iota o tau and split it into disjoint transpositions.

    The product is (1,4g+1)(2,4g+2)...(4g-4,8g-4)(4g-3,4g-1)(4g-2,4g):
    2g-1 transpositions of odd symbols and 2g-1 of even symbols.
    """
    cp = canonical_perms(ctx)
    invol = cp.iota.compose(cp.tau)
    odd: list[tuple[int, int]] = []
    even: list[tuple[int, int]] = []
    seen = set()
    for j in range(1, ctx.n + 1):
        if j in seen:
            continue
        k = invol(j)
        if k == j:
            raise AssertionError("iota o tau has a fixed point")
        seen.update((j, k))
        pair = (min(j, k), max(j, k))
        (odd if j % 2 else even).append(pair)
    odd.sort()
    even.sort()
    if len(odd) != ctx.i_min or len(even) != ctx.i_min:
        raise AssertionError("unexpected transposition split")
    return BaseInvolution(invol, tuple(odd), tuple(even))


@dataclass(frozen=True)
class TranspositionPairing:
    """A matching of odd with even transpositions plus interleaving bits.

    pairs[i] = (odd transposition, even transposition); bit 0 interleaves
    (a,b),(c,d) into the 4-cycle (a,c,b,d) and bit 1 into (a,d,b,c); either
    way the square is (a,b)(c,d).
    """

    ctx: GenusContext
    pairs: tuple[tuple[tuple[int, int], tuple[int, int]], ...]
    interleave_bits: tuple[int, ...]

    def realize(self) -> Permutation:
        images = list(range(1, self.ctx.n + 1))
        for ((a, b), (c, d)), bit in zip(self.pairs, self.interleave_bits):
            if bit:
                c, d = d, c
            images[a - 1] = c
            images[c - 1] = b
            images[b - 1] = d
            images[d - 1] = a
        return Permutation(images)


def root_count(g: int) -> int:
    """Number of admissible square roots: 2^(2g-1) * (2g-1)!."""
    return 2 ** (2 * g - 1) * factorial(2 * g - 1)


def iter_pairings(ctx: GenusContext) -> Iterator[TranspositionPairing]:
    """All pairings, lexicographic in the matching then in the bits."""
    base = base_involution(ctx)
    m = ctx.i_min
    for match in permutations(range(m)):
        paired = tuple((base.odd[i], base.even[match[i]]) for i in range(m))
        for bits in range(1 << m):
            bit_tuple = tuple((bits >> (m - 1 - i)) & 1 for i in range(m))
            yield TranspositionPairing(ctx, paired, bit_tuple)


def square_roots(ctx: GenusContext) -> Iterator[Permutation]:
    """Stream of the admissible square roots C of iota o tau."""
    for pairing in iter_pairings(ctx):
        yield pairing.realize()


# ----------------------------------------------------------------------
# Fast raw-array generation (the hot path for g = 4, 5)
# ----------------------------------------------------------------------


def _raw_tables(ctx: GenusContext):
    base = base_involution(ctx)
    half = 4 * ctx.g - 2
    n = ctx.n
    iota = [0] * (n + 1)
    for j in range(1, n + 1):
        iota[j] = j - half if j > half else j + half
    return base.odd, base.even, iota


def _iter_solution_images(
    ctx: GenusContext,
    start_rank: int = 0,
    stop_rank: int | None = None,
    check_roots: bool = False,
) -> Iterator[bytes]:
    """Yield image arrays (as bytes, symbols 1..n) of filling permutations.

    Ranks index matchings in lexicographic order; a worker owning the rank
    range [start, stop) reproduces exactly that slice of the deterministic
    stream.  With check_roots the square identity C*C = iota o tau is
    asserted for every candidate.
    """
    odd, even, iota = _raw_tables(ctx)
    m = ctx.i_min
    n = ctx.n
    C = [0] * (n + 1)
    invol = [0] * (n + 1)
    if check_roots:
        for a, b in odd + even:
            invol[a] = b
            invol[b] = a
    nbits = 1 << m
    for match in islice(permutations(range(m)), start_rank, stop_rank):
        evens = [even[match[i]] for i in range(m)]
        for bits in range(nbits):
            for i in range(m):
                a, b = odd[i]
                c, d = evens[i]
                if (bits >> (m - 1 - i)) & 1:
                    c, d = d, c
                C[a] = c
                C[c] = b
                C[b] = d
                C[d] = a
            if check_roots:
                for j in range(1, n + 1):
                    if C[C[j]] != invol[j]:
                        raise AssertionError("square root identity violated")
            # sigma = iota o C; walk the cycle through 1 with early exit
            steps = 1
            x = iota[C[1]]
            while x != 1:
                steps += 1
                x = iota[C[x]]
            if steps == n:
                yield bytes(iota[C[j]] for j in range(1, n + 1))


def _worker_solutions(args) -> list[bytes]:
    g, start, stop = args
    ctx = GenusContext(g)
    return list(_iter_solution_images(ctx, start, stop))


def _solution_images(ctx: GenusContext, jobs: int = 1) -> list[bytes]:
    """All filling-permutation image arrays, in deterministic stream order."""
    total = factorial(ctx.i_min)
    jobs = max(1, jobs)
    if jobs == 1 or total < 64:
        return list(_iter_solution_images(ctx))
    import multiprocessing as mp

    chunk = 16
    ranges = [(ctx.g, s, min(s + chunk, total)) for s in range(0, total, chunk)]
    out: list[bytes] = []
    with mp.Pool(jobs) as pool:
        for part in pool.imap(_worker_solutions, ranges, chunksize=8):
            out.extend(part)
    return out


def count_roots_verified(ctx: GenusContext) -> int:
    """Generate every admissible root, assert C*C = iota o tau, and count."""
    odd, even, iota = _raw_tables(ctx)
    m = ctx.i_min
    n = ctx.n
    invol = [0] * (n + 1)
    for a, b in odd + even:
        invol[a] = b
        invol[b] = a
    C = [0] * (n + 1)
    count = 0
    nbits = 1 << m
    for match in permutations(range(m)):
        evens = [even[match[i]] for i in range(m)]
        for bits in range(nbits):
            for i in range(m):
                a, b = odd[i]
                c, d = evens[i]
                if (bits >> (m - 1 - i)) & 1:
                    c, d = d, c
                C[a] = c
                C[c] = b
                C[b] = d
                C[d] = a
            for j in range(1, n + 1):
                if C[C[j]] != invol[j]:
                    raise AssertionError("square root identity violated")
            count += 1
    return count


# ----------------------------------------------------------------------
# Public enumeration API
# ----------------------------------------------------------------------


def enumerate_filling(
    ctx: GenusContext, *, jobs: int = 1, force: bool = False
) -> list[FillingPermutation]:
    """All filling permutations at the given genus, deterministic order."""
    check_guard(ctx.g, force)
    return [
        FillingPermutation(ctx, Permutation(list(img)))
        for img in _solution_images(ctx, jobs)
    ]


def _closure_tables(ctx: GenusContext) -> list[tuple[list[int], list[int]]]:
    tables = []
    for t in twisting_closure(ctx):
        timg = [0] + list(t.images)
        tinv = [0] * (ctx.n + 1)
        for j in range(1, ctx.n + 1):
            tinv[timg[j]] = j
        tables.append((timg, tinv))
    return tables


def _class_minima(ctx: GenusContext, images: Sequence[bytes]) -> list[bytes]:
    """Lexicographically least member of each twisting class, sorted.

    Sweeps the sorted solution list: the least remaining solution is the
    canonical representative of its class; its whole orbit is then
    discarded.  Independent of how the solutions were produced.
    """
    tables = _closure_tables(ctx)
    n = ctx.n
    alive = set(images)
    reps: list[bytes] = []
    for img in sorted(alive):
        if img not in alive:
            continue
        reps.append(img)
        sigma = (0,) + tuple(img)
        for timg, tinv in tables:
            conj = bytes(timg[sigma[tinv[x]]] for x in range(1, n + 1))
            alive.discard(conj)
    return reps


def class_representatives(
    ctx: GenusContext, *, jobs: int = 1, force: bool = False
) -> list[FillingPermutation]:
    """Canonical representative of every twisting class, sorted."""
    check_guard(ctx.g, force)
    images = _solution_images(ctx, jobs)
    return [
        FillingPermutation(ctx, Permutation(list(img)))
        for img in _class_minima(ctx, images)
    ]


def classify_solutions(
    ctx: GenusContext, solutions: Sequence[FillingPermutation]
) -> list[FillingPermutation]:
    """Class representatives of an already-enumerated solution list."""
    images = [bytes(fp.perm.images) for fp in solutions]
    return [
        FillingPermutation(ctx, Permutation(list(img)))
        for img in _class_minima(ctx, images)
    ]


def count_classes(ctx: GenusContext, *, jobs: int = 1, force: bool = False) -> int:
    """N(g): the number of twisting classes of filling permutations."""
    check_guard(ctx.g, force)
    return len(_class_minima(ctx, _solution_images(ctx, jobs)))


# ----------------------------------------------------------------------
# Bounds and the L-sequence count
# ----------------------------------------------------------------------


def count_Lg(g: int) -> int:
    """Number of strictly increasing sequences a_1 < ... < a_(g-1)/2
    with a_i <= 4i - 3, counted by dynamic programming."""
    if g % 2 == 0 or g < 3:
        raise ValueError("L-sequences are defined for odd g >= 3")
    length = (g - 1) // 2
    caps = [4 * i - 3 for i in range(1, length + 1)]
    # ways[v] = number of valid prefixes ending with value v
    ways = {v: 1 for v in range(1, caps[0] + 1)}
    for cap in caps[1:]:
        nxt: dict[int, int] = {}
        running = 0  # sum of ways over values < v
        for v in range(1, cap + 1):
            running += ways.get(v - 1, 0)
            nxt[v] = running
        ways = {v: c for v, c in nxt.items() if c}
    return sum(ways.values())


def upper_bound(g: int) -> int:
    """2^(2g-2) * (4g-5) * (2g-3)! for g >= 3."""
    if g < 3:
        raise ValueError("bounds not defined")
    return 2 ** (2 * g - 2) * (4 * g - 5) * factorial(2 * g - 3)


def lower_bound(g: int) -> Fraction:
    """Exact rational |L_g| / (4 (2g-1)^2) for odd g >= 3.

    The even-genus analogue hangs off a genus-4 seed rather than an
    L-sequence set and is not implemented; callers should treat even g
    as having no computed lower bound.
    """
    if g < 3:
        raise ValueError("bounds not defined")
    if g % 2 == 0:
        raise ValueError("not implemented (even-genus chain)")
    return Fraction(count_Lg(g), 4 * (2 * g - 1) ** 2)


@dataclass(frozen=True)
class BoundsReport:
    genus: int
    lower: Fraction | None
    upper: int
    root_count: int
    exact_N: int | None = None


def bounds_report(
    g: int, *, exact: bool = False, jobs: int = 1, force: bool = False
) -> BoundsReport:
    if g < 3:
        raise ValueError("bounds not defined")
    lower = lower_bound(g) if g % 2 else None
    exact_N = None
    if exact:
        exact_N = count_classes(GenusContext(g), jobs=jobs, force=force)
    return BoundsReport(g, lower, upper_bound(g), root_count(g), exact_N)


# ----------------------------------------------------------------------
# The exclusion family
# ----------------------------------------------------------------------


def excluded_roots(ctx: GenusContext, force: bool = False) -> Iterator[Permutation]:
    """Roots guaranteed not to yield an n-cycle, as a deterministic stream.

    Pair (1,4g+1) with either orientation of any even transposition; the
    image k of 1 under C forces sigma(1) = iota(k), whose transposition is
    then paired with (4g-3,4g-1) interleaved so that C(iota(k)) = 4g-1,
    which closes sigma's cycle: sigma(sigma(1)) = 1.  The remaining
    transpositions are matched freely, giving 2^(2g-2)*(2g-1)*(2g-3)!
    distinct roots, every one a member of the square-root stream.
    """
    if ctx.g < 3:
        raise ValueError("exclusion family needs g >= 3")
    check_guard(ctx.g, force)
    g = ctx.g
    base = base_involution(ctx)
    half = 4 * g - 2
    iota_of = lambda j: j - half if j > half else j + half
    first_odd = (1, 4 * g + 1)
    anchor_odd = (4 * g - 3, 4 * g - 1)
    if first_odd not in base.odd or anchor_odd not in base.odd:
        raise AssertionError("unexpected involution structure")
    free_odd = [t for t in base.odd if t not in (first_odd, anchor_odd)]
    m = ctx.i_min

    for ev in base.even:
        for flip in (0, 1):
            k, j = (ev[1], ev[0]) if flip else ev
            # 4-cycle (1, k, 4g+1, j): C(1) = k
            kprime = iota_of(k)
            ev2 = next(t for t in base.even if kprime in t)
            if ev2 == ev:
                raise AssertionError("forced transposition collides")
            jprime = ev2[0] if ev2[1] == kprime else ev2[1]
            # 4-cycle (kprime, 4g-1, jprime, 4g-3): C(kprime) = 4g-1
            fixed_cycles = [
                (1, k, 4 * g + 1, j),
                (kprime, 4 * g - 1, jprime, 4 * g - 3),
            ]
            free_even = [t for t in base.even if t not in (ev, ev2)]
            for match in permutations(range(m - 2)):
                for bits in range(1 << (m - 2)):
                    images = list(range(1, ctx.n + 1))
                    for a, c, b, d in fixed_cycles:
                        images[a - 1] = c
                        images[c - 1] = b
                        images[b - 1] = d
                        images[d - 1] = a
                    for i in range(m - 2):
                        a, b = free_odd[i]
                        c, d = free_even[match[i]]
                        if (bits >> (m - 3 - i)) & 1:
                            c, d = d, c
                        images[a - 1] = c
                        images[c - 1] = b
                        images[b - 1] = d
                        images[d - 1] = a
                    yield Permutation(images)


def excluded_root_count(g: int) -> int:
    """Size of the exclusion family: 2^(2g-2) * (2g-1) * (2g-3)!."""
    if g < 3:
        raise ValueError("exclusion family needs g >= 3")
    return 2 ** (2 * g - 2) * (2 * g - 1) * factorial(2 * g - 3)
