"""Vertex sets and axis-aligned subcubes of the hypercube Q_n.

Vertices of Q_n are identified with n-bit integers; coordinate i is bit i.
A VertexSet stores membership as one big integer (bit v set iff vertex v
is in the set), so subcube intersections are mask-and-popcount operations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import CapabilityError, DomainError

# Hard cap on materialized membership masks: 2^24 bits = 2 MiB per set.
# Layered sets beyond this are handled analytically (see stats.layered_distribution).
MASK_CAP = 24


def binomial(n: int, k: int) -> int:
    """C(n, k) as an exact integer; 0 when k < 0 or k > n."""
    if n < 0:
        raise DomainError(f"binomial: n must be >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


@dataclass(frozen=True)
class VertexSet:
    """A subset of the vertices of Q_n, as a 2^n-bit membership mask."""

    n: int
    bits: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise DomainError(f"dimension must be >= 0, got {self.n}")
        if self.n > MASK_CAP:
            raise CapabilityError(
                f"n={self.n} exceeds the materialized-mask cap {MASK_CAP}"
            )
        if self.bits < 0 or self.bits >> (1 << self.n):
            raise DomainError("membership mask has bits beyond 2^n")

    @classmethod
    def empty(cls, n: int) -> VertexSet:
        return cls(n, 0)

    @classmethod
    def full(cls, n: int) -> VertexSet:
        return cls(n, (1 << (1 << n)) - 1)

    @classmethod
    def from_vertices(cls, n: int, vertices: Iterable[int]) -> VertexSet:
        bits = 0
        for v in vertices:
            if not 0 <= v < (1 << n):
                raise DomainError(f"vertex {v} outside Q_{n}")
            bits |= 1 << v
        return cls(n, bits)

    def __contains__(self, v: int) -> bool:
        return 0 <= v < (1 << self.n) and bool((self.bits >> v) & 1)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def vertices(self) -> list[int]:
        """Members in ascending order."""
        return [v for v in range(1 << self.n) if (self.bits >> v) & 1]

    def complement(self) -> VertexSet:
        return VertexSet(self.n, self.bits ^ ((1 << (1 << self.n)) - 1))

    def symmetric_difference(self, other: VertexSet) -> VertexSet:
        if self.n != other.n:
            raise DomainError("ambient dimensions differ")
        return VertexSet(self.n, self.bits ^ other.bits)

    def to_json(self) -> dict:
        return {"n": self.n, "vertices": self.vertices()}

    @classmethod
    def from_json(cls, obj: dict) -> VertexSet:
        try:
            n = obj["n"]
            vertices = obj["vertices"]
        except (KeyError, TypeError) as exc:
            raise DomainError(f"malformed vertex-set object: {exc}") from exc
        if not isinstance(n, int):
            raise DomainError("'n' must be an integer")
        if any(vertices[i] >= vertices[i + 1] for i in range(len(vertices) - 1)):
            raise DomainError("'vertices' must be strictly ascending")
        return cls.from_vertices(n, vertices)


@dataclass(frozen=True)
class Subcube:
    """A d-dimensional axis-aligned subcube of Q_n.

    `free` marks the d variable coordinates; `base` fixes the values on the
    other coordinates.  Canonical form zeroes `base` on free positions, so
    vertex v lies in the subcube iff (v & ~free) == base.
    """

    n: int
    free: int
    base: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise DomainError(f"dimension must be >= 0, got {self.n}")
        full = (1 << self.n) - 1
        if not 0 <= self.free <= full or not 0 <= self.base <= full:
            raise DomainError("free/base masks outside Q_n")
        if self.base & self.free:
            raise DomainError("non-canonical subcube: base overlaps free mask")

    @property
    def dimension(self) -> int:
        return self.free.bit_count()

    def __contains__(self, v: int) -> bool:
        return (v & ~self.free) == self.base

    def intersects(self, other: Subcube) -> bool:
        """True iff the subcubes share a vertex (bases agree where both fix)."""
        if self.n != other.n:
            raise DomainError("subcubes live in different ambient dimensions")
        both_fixed = ~self.free & ~other.free & ((1 << self.n) - 1)
        return (self.base ^ other.base) & both_fixed == 0

    def vertex_mask(self) -> int:
        """Membership mask of the subcube's 2^d vertices, as one integer."""
        mask = 1 << self.base
        f = self.free
        while f:
            bit = f & -f
            mask |= mask << bit
            f ^= bit
        return mask


def subcube_vertices(q: Subcube) -> list[int]:
    """All 2^d vertices of the subcube, ascending."""
    if q.base & q.free:
        raise DomainError("non-canonical subcube")
    positions = [i for i in range(q.n) if (q.free >> i) & 1]
    d = len(positions)
    out = []
    for assign in range(1 << d):
        v = q.base
        for j, p in enumerate(positions):
            if (assign >> j) & 1:
                v |= 1 << p
        out.append(v)
    out.sort()
    return out


def _masks_of_popcount(n: int, d: int) -> Iterator[int]:
    """All n-bit masks with exactly d bits set, ascending (Gosper's hack)."""
    if d == 0:
        yield 0
        return
    v = (1 << d) - 1
    limit = 1 << n
    while v < limit:
        yield v
        c = v & -v
        r = v + c
        v = (((r ^ v) >> 2) // c) | r


def enumerate_subcubes(n: int, d: int) -> Iterator[Subcube]:
    """All C(n,d)*2^(n-d) d-subcubes of Q_n, in a fixed order.

    Order: free masks ascending as integers, then bases ascending.
    """
    if d < 0 or n < 0:
        raise DomainError("dimensions must be >= 0")
    if d > n:
        raise DomainError(f"subcube dimension {d} exceeds ambient dimension {n}")
    for free in _masks_of_popcount(n, d):
        fixed = [i for i in range(n) if not (free >> i) & 1]
        for assign in range(1 << (n - d)):
            base = 0
            for j, p in enumerate(fixed):
                if (assign >> j) & 1:
                    base |= 1 << p
            yield Subcube(n, free, base)


def subcube_count(n: int, d: int) -> int:
    """C(n,d) * 2^(n-d), the number of d-subcubes of Q_n."""
    if d > n:
        raise DomainError(f"subcube dimension {d} exceeds ambient dimension {n}")
    return binomial(n, d) << (n - d)
