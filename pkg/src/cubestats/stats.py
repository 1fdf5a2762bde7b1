"""Exact distributions of |A ∩ Q| over the d-subcubes Q of Q_n.

Three routes to the same quantity, kept deliberately independent so they
can cross-check each other:

* ``distribution``       -- direct per-subcube popcounts (the oracle),
* ``distribution_fast``  -- per free-mask coordinate folding (the fast path),
* ``layered_distribution`` -- analytic counts for layered sets, valid for n
  far beyond the materialized-mask cap.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .cube import VertexSet, binomial, enumerate_subcubes, subcube_count
from .errors import DomainError


@dataclass(frozen=True)
class SubcubeDistribution:
    """counts[s] = number of d-subcubes of Q_n containing exactly s points of A."""

    n: int
    d: int
    counts: tuple[int, ...]
    total: int

    def __post_init__(self) -> None:
        if len(self.counts) != (1 << self.d) + 1:
            raise DomainError("counts must have length 2^d + 1")
        if sum(self.counts) != self.total:
            raise DomainError("counts do not sum to the number of subcubes")

    def fraction(self, s: int) -> Fraction:
        """λ(n, d, s, A) as an exact rational."""
        if not 0 <= s <= (1 << self.d):
            raise DomainError(f"s={s} outside [0, 2^d]")
        return Fraction(self.counts[s], self.total)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "total": str(self.total),
            "counts": {str(s): str(c) for s, c in enumerate(self.counts) if c},
        }

    @classmethod
    def from_json(cls, obj: dict) -> SubcubeDistribution:
        try:
            n, d, total = obj["n"], obj["d"], int(obj["total"])
            raw = {int(s): int(c) for s, c in obj["counts"].items()}
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"malformed distribution object: {exc}") from exc
        counts = [0] * ((1 << d) + 1)
        for s, c in raw.items():
            if not 0 <= s <= (1 << d):
                raise DomainError(f"count index {s} outside [0, 2^d]")
            counts[s] = c
        return cls(n, d, tuple(counts), total)


@dataclass(frozen=True)
class LambdaBounds:
    """Interval enclosing the limit value λ(d,s), with provenance.

    lower_witness names the construction attaining the lower bound;
    upper_source is one of closed-form | generic | reference-constant.
    """

    d: int
    s: int
    lower: Fraction
    upper: Fraction
    lower_witness: str
    upper_source: str

    def __post_init__(self) -> None:
        if not 0 <= self.lower <= self.upper <= 1:
            raise DomainError("bounds must satisfy 0 <= lower <= upper <= 1")

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "s": self.s,
            "lower": str(self.lower),
            "upper": str(self.upper),
            "lower_witness": self.lower_witness,
            "upper_source": self.upper_source,
        }


@dataclass(frozen=True)
class LayeredSpec:
    """Union-of-layers selector: keep vertices whose weight mod k lies in T."""

    k: int
    T: frozenset[int]

    def __post_init__(self) -> None:
        if self.k < 1:
            raise DomainError("modulus k must be >= 1")
        if not self.T <= frozenset(range(self.k)):
            raise DomainError("T must be a subset of Z_k")


def distribution(A: VertexSet, d: int) -> SubcubeDistribution:
    """Exact distribution by direct enumeration over all d-subcubes."""
    n = A.n
    if d < 0 or d > n:
        raise DomainError(f"subcube dimension {d} outside [0, {n}]")
    counts = [0] * ((1 << d) + 1)
    for q in enumerate_subcubes(n, d):
        counts[(A.bits & q.vertex_mask()).bit_count()] += 1
    return SubcubeDistribution(n, d, tuple(counts), subcube_count(n, d))


def indicator_array(A: VertexSet) -> np.ndarray:
    """0/1 membership array of length 2^n, index = vertex."""
    size = 1 << A.n
    raw = A.bits.to_bytes((size + 7) // 8, "little")
    return np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")[
        :size
    ].astype(np.int32)


def _free_masks(n: int, d: int) -> list[int]:
    return [m for m in range(1 << n) if m.bit_count() == d]


def distribution_fast(A: VertexSet, d: int) -> SubcubeDistribution:
    """Same output as ``distribution`` via coordinate folding.

    For each free mask, d pairwise-fold passes over the 2^n indicator
    (ascending free-coordinate order) produce all 2^(n-d) subcube counts
    of that mask at once; the counts land in a histogram.  Intermediate
    sums stay below 2^d, well inside int32 for n <= 24.
    """
    n = A.n
    if d < 0 or d > n:
        raise DomainError(f"subcube dimension {d} outside [0, {n}]")
    tensor = indicator_array(A).reshape((2,) * n)
    hist = np.zeros((1 << d) + 1, dtype=np.int64)
    for free in _free_masks(n, d):
        folded = tensor
        # Ascending bit p is axis n-1-p; summing the largest axis first
        # keeps the remaining axis numbers valid.
        for p in [i for i in range(n) if (free >> i) & 1]:
            folded = folded.sum(axis=n - 1 - p)
        hist += np.bincount(
            np.atleast_1d(folded).ravel(), minlength=(1 << d) + 1
        ).astype(np.int64)
    counts = tuple(int(c) for c in hist)
    return SubcubeDistribution(n, d, counts, subcube_count(n, d))


def lambda_of_set(A: VertexSet, d: int, s: int) -> Fraction:
    """λ(n, d, s, A): fraction of d-subcubes meeting A in exactly s vertices."""
    if not 0 <= s <= (1 << d):
        raise DomainError(f"s={s} outside [0, 2^d]")
    return distribution_fast(A, d).fraction(s)


def layered_distribution(n: int, d: int, spec: LayeredSpec) -> SubcubeDistribution:
    """Distribution for the layered set selected by ``spec``, analytically.

    A subcube whose base has Hamming weight w meets the layered set in
    sum(C(d, i) for i with (w+i) mod k in T) vertices, and there are
    C(n,d)*C(n-d,w) such subcubes.  Exact for any n; no mask is built.
    """
    if d < 0 or d > n:
        raise DomainError(f"subcube dimension {d} outside [0, {n}]")
    k, T = spec.k, spec.T
    counts = [0] * ((1 << d) + 1)
    choose_free = binomial(n, d)
    for w in range(n - d + 1):
        s_w = sum(binomial(d, i) for i in range(d + 1) if (w + i) % k in T)
        counts[s_w] += choose_free * binomial(n - d, w)
    return SubcubeDistribution(n, d, tuple(counts), subcube_count(n, d))
