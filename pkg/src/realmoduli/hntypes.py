"""Harder--Narasimhan types and the codimensions of their strata.

A type for rank ``r`` and degree ``d`` is a sequence of blocks
``((r_1, d_1), ..., (r_l, d_l))`` with ranks summing to ``r``, degrees
summing to ``d`` and strictly decreasing slopes ``d_i / r_i``.  The set of
types is infinite once ``r >= 2``; bounding the stratum codimension makes it
finite, which is what :func:`enumerate_types` exploits.

Slopes are always compared by cross-multiplication, never as fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

__all__ = ["HNType", "CurveData", "codim", "validate", "enumerate_types", "types_with_codim"]


@dataclass(frozen=True, order=True)
class HNType:
    """Ordered blocks ``(rank, degree)``; ordering is lexicographic on blocks."""

    blocks: tuple

    def __post_init__(self):
        blocks = tuple((int(r), int(d)) for r, d in self.blocks)
        if not blocks:
            raise ValueError("an HN type has at least one block")
        if any(r < 1 for r, _ in blocks):
            raise ValueError("block ranks must be positive")
        object.__setattr__(self, "blocks", blocks)

    @property
    def rank(self) -> int:
        return sum(r for r, _ in self.blocks)

    @property
    def degree(self) -> int:
        return sum(d for _, d in self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)


@dataclass(frozen=True)
class CurveData:
    """Genus ``g`` and number ``n`` of real circles of a real curve."""

    g: int
    n: int = 0

    def __post_init__(self):
        if self.g < 1:
            raise ValueError("genus must satisfy g >= 1")

    @property
    def maximal(self) -> bool:
        return self.n == self.g + 1

    def check_real(self) -> None:
        """Raise unless the curve data admits the real computations (real points, Harnack bound)."""
        if not 1 <= self.n <= self.g + 1:
            raise ValueError(f"n must satisfy 1 <= n <= g+1 (got n={self.n}, g={self.g})")


def codim(mu: HNType, g: int) -> int:
    """Codimension ``sum_{i<j} (r_j d_i - r_i d_j + r_i r_j (g-1))`` of the stratum of ``mu``.

    Only defined for types with at least two blocks.
    """
    if len(mu) < 2:
        raise ValueError("codimension is only defined for types with two or more blocks")
    blocks = mu.blocks
    total = 0
    for i, (ri, di) in enumerate(blocks):
        for rj, dj in blocks[i + 1 :]:
            total += rj * di - ri * dj + ri * rj * (g - 1)
    return total


def validate(mu: HNType, r: int, d: int) -> bool:
    """Check rank/degree sums and strictly decreasing slopes."""
    if mu.rank != r or mu.degree != d:
        return False
    return all(d1 * r2 > d2 * r1 for (r1, d1), (r2, d2) in zip(mu.blocks, mu.blocks[1:]))


def _walk(r: int, d: int, g: int, budget: int, prev):
    """Yield ``(blocks, codim)`` for types of ``(r, d)`` whose codimension fits in ``budget``.

    ``prev`` is the preceding block when enumerating a tail; the first block
    must then have strictly smaller slope, and a single block is allowed.
    """
    if prev is not None:
        pr, pd = prev
        if d * pr < pd * r:
            yield ((r, d),), 0
    for r1 in range(1, r):
        rest = r - r1
        base = r1 * rest * (g - 1)
        # cross codimension of the first block against the tail:
        #   r*d1 - r1*d + base, which is <= budget; slope condition gives r*d1 - r1*d >= 1
        lo = -((-(r1 * d + 1)) // r)
        hi = (budget - base + r1 * d) // r
        if prev is not None:
            pr, pd = prev
            # d1 / r1 < pd / pr
            hi = min(hi, (pd * r1 - 1) // pr)
        for d1 in range(lo, hi + 1):
            cross = r * d1 - r1 * d + base
            for tail, c in _walk(rest, d - d1, g, budget - cross, (r1, d1)):
                yield ((r1, d1),) + tail, cross + c


@lru_cache(maxsize=None)
def types_with_codim(r: int, d: int, g: int, cap: int) -> tuple:
    """Sorted ``(HNType, codim)`` pairs for all non-semistable types with codim <= cap."""
    if r < 1:
        raise ValueError("rank must be positive")
    if g < 1:
        raise ValueError("genus must satisfy g >= 1")
    if cap < 0:
        return ()
    found = sorted((HNType(blocks), c) for blocks, c in _walk(r, d, g, cap, None))
    return tuple(found)


def enumerate_types(r: int, d: int, g: int, cap: int) -> list:
    """All types in ``I_{r,d}`` other than the semistable one, with codimension at most ``cap``.

    Depth-first over blocks from the left.  Every pairwise codimension term
    is positive, so the first block's cross term against the tail already
    bounds its degree; the tail is enumerated with the leftover budget and a
    slope ceiling.  Output is lexicographic in the blocks.

    >>> [mu.blocks for mu in enumerate_types(2, 1, 2, 6)]
    [((1, 1), (1, 0)), ((1, 2), (1, -1)), ((1, 3), (1, -2))]
    """
    return [mu for mu, _ in types_with_codim(r, d, g, cap)]
