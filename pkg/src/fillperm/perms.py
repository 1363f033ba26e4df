"""Exact permutation arithmetic on the symbol set {1..n}.

Permutations are immutable, validated on construction, and totally ordered
by their image arrays so that lexicographic minimisation over a finite set
of conjugates is well defined.  All indexing is 1-based to match the usual
cycle-notation conventions; internally the image array carries a dummy
entry at index 0.
"""

from __future__ import annotations

import re
from math import lcm
from typing import Iterable, Iterator, Sequence


class PermutationError(ValueError):
    """Raised for text that does not describe a permutation."""


class ParseError(PermutationError):
    """Malformed permutation text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class Permutation:
    """A bijection of {1..n}, stored as the tuple of images of 1..n."""

    __slots__ = ("_img", "n")

    def __init__(self, images: Sequence[int]):
        n = len(images)
        if n < 1:
            raise PermutationError("not a permutation: empty image list")
        seen = [False] * (n + 1)
        for v in images:
            if not isinstance(v, int) or not 1 <= v <= n or seen[v]:
                raise PermutationError("not a permutation")
            seen[v] = True
        self.n = n
        self._img = (0,) + tuple(images)

    # -- basic access -------------------------------------------------

    def __call__(self, j: int) -> int:
        if not 1 <= j <= self.n:
            raise ValueError(f"symbol {j} out of range 1..{self.n}")
        return self._img[j]

    @property
    def images(self) -> tuple[int, ...]:
        """Images of 1..n as a plain tuple (no padding)."""
        return self._img[1:]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self._img == other._img

    def __hash__(self) -> int:
        return hash(self._img)

    def __lt__(self, other: "Permutation") -> bool:
        return self._img < other._img

    def __le__(self, other: "Permutation") -> bool:
        return self._img <= other._img

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"

    def __str__(self) -> str:
        return format_perm(self)

    # -- group operations ---------------------------------------------

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: (self*other)(x) = self(other(x))."""
        if self.n != other.n:
            raise ValueError("degree mismatch")
        a, b = self._img, other._img
        return Permutation([a[b[x]] for x in range(1, self.n + 1)])

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for j in range(1, self.n + 1):
            inv[self._img[j] - 1] = j
        return Permutation(inv)

    def power(self, k: int) -> "Permutation":
        """k-fold composition; k may be zero or negative."""
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = identity(self.n)
        while k:
            if k & 1:
                result = result.compose(base)
            base = base.compose(base)
            k >>= 1
        return result

    def conjugate_by(self, h: "Permutation") -> "Permutation":
        """h o self o h^-1 (relabelling of self along h)."""
        if self.n != h.n:
            raise ValueError("degree mismatch")
        out = [0] * self.n
        img, him = self._img, h._img
        for x in range(1, self.n + 1):
            out[him[x] - 1] = him[img[x]]
        return Permutation(out)

    # -- cycle structure ----------------------------------------------

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles, minimal element first, sorted by minimum.

        Fixed points are included as 1-cycles, so concatenating the
        cycles always recovers the full symbol set.
        """
        seen = [False] * (self.n + 1)
        out: list[tuple[int, ...]] = []
        for start in range(1, self.n + 1):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            j = self._img[start]
            while j != start:
                seen[j] = True
                cyc.append(j)
                j = self._img[j]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def order(self) -> int:
        return lcm(*(len(c) for c in self.cycles()))

    def is_identity(self) -> bool:
        return all(self._img[j] == j for j in range(1, self.n + 1))

    def is_n_cycle(self) -> bool:
        """True iff the permutation is a single cycle of full length."""
        count = 1
        j = self._img[1]
        while j != 1:
            count += 1
            j = self._img[j]
        return count == self.n

    def is_parity_respecting(self) -> bool:
        """True iff the image parity depends only on the symbol parity.

        Defined only for even degree.
        """
        if self.n % 2:
            raise ValueError("parity undefined")
        odd_to = self._img[1] % 2
        even_to = self._img[2] % 2
        for j in range(1, self.n + 1):
            want = odd_to if j % 2 else even_to
            if self._img[j] % 2 != want:
                return False
        return True


def identity(n: int) -> Permutation:
    return Permutation(list(range(1, n + 1)))


def from_cycles(cycles: Iterable[Sequence[int]], n: int) -> Permutation:
    """Build a permutation of degree n from disjoint cycles.

    Cycles with fewer than two entries are identity factors and may be
    listed or omitted freely.
    """
    images = list(range(1, n + 1))
    touched = [False] * (n + 1)
    for cyc in cycles:
        if len(cyc) < 2:
            continue
        for v in cyc:
            if not 1 <= v <= n:
                raise PermutationError(f"cycle value {v} out of range 1..{n}")
            if touched[v]:
                raise PermutationError(f"symbol {v} repeated across cycles")
            touched[v] = True
        for a, b in zip(cyc, cyc[1:]):
            images[a - 1] = b
        images[cyc[-1] - 1] = cyc[0]
    return Permutation(images)


_N_SPEC = re.compile(r"n\s*=\s*(\d+)")


def parse(text: str) -> Permutation:
    """Parse either image-list form "[2,3,4,1]" or cycle form "(1 3)(2 4)".

    Cycle form accepts space- or comma-separated symbols and an optional
    explicit degree token "n=K" (required whenever fixed points would be
    dropped from the cycles).
    """
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty permutation text", 0)
    if stripped.startswith("["):
        if not stripped.endswith("]"):
            raise ParseError("unterminated image list", len(text) - 1)
        body = stripped[1:-1].strip()
        if not body:
            raise ParseError("empty image list", 1)
        images = []
        for part in body.split(","):
            part = part.strip()
            if not re.fullmatch(r"-?\d+", part):
                raise ParseError(f"bad image entry {part!r}", text.find(part) if part else 1)
            images.append(int(part))
        return Permutation(images)

    n_match = _N_SPEC.search(stripped)
    degree = int(n_match.group(1)) if n_match else None
    cycle_text = _N_SPEC.sub("", stripped).strip()
    cycles: list[list[int]] = []
    pos = 0
    max_sym = 0
    while pos < len(cycle_text):
        ch = cycle_text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch != "(":
            raise ParseError(f"expected '(' but found {ch!r}", pos)
        end = cycle_text.find(")", pos)
        if end < 0:
            raise ParseError("unterminated cycle", pos)
        body = cycle_text[pos + 1:end].replace(",", " ")
        entries = body.split()
        cyc = []
        for entry in entries:
            if not entry.isdigit() or int(entry) < 1:
                raise ParseError(f"bad cycle entry {entry!r}", pos + 1)
            cyc.append(int(entry))
        if cyc:
            max_sym = max(max_sym, max(cyc))
            cycles.append(cyc)
        pos = end + 1
    if degree is None:
        if max_sym == 0:
            raise ParseError("cycle form needs symbols or an explicit n=K", 0)
        degree = max_sym
    if max_sym > degree:
        raise PermutationError("not a permutation: cycle symbol exceeds degree")
    return from_cycles(cycles, degree)


def format_perm(p: Permutation) -> str:
    """Canonical text: nontrivial cycles followed by an explicit degree."""
    parts = ["(" + " ".join(map(str, c)) + ")" for c in p.cycles() if len(c) > 1]
    body = "".join(parts) if parts else "()"
    return f"{body} n={p.n}"


def closure(generators: Iterable[Permutation]) -> list[Permutation]:
    """The group generated by the given permutations, as a sorted list.

    Only intended for small groups (the twisting groups used here have a
    few hundred elements at most).
    """
    gens = list(generators)
    if not gens:
        raise ValueError("closure of empty set")
    group: set[Permutation] = set(gens)
    frontier = list(gens)
    while frontier:
        nxt = []
        for a in frontier:
            for b in gens:
                c = a.compose(b)
                if c not in group:
                    group.add(c)
                    nxt.append(c)
        frontier = nxt
    return sorted(group)


def iter_all(n: int) -> Iterator[Permutation]:
    """All permutations of degree n in lexicographic order (tiny n only)."""
    from itertools import permutations as iperm

    for imgs in iperm(range(1, n + 1)):
        yield Permutation(imgs)
