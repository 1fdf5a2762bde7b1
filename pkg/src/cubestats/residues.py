"""Binomial coefficient sums by residue class, with small-parameter checkers.

q_binsum(a, k, d) adds up C(d, i) over the indices i congruent to a mod k.
These sums control how many vertices of a weight-layered set fall in each
subcube, so the checkers here (non-equality of the k sums, classification
of the residue sets that make them equal) back the layered constructions.
"""

import cmath
import concurrent.futures
import math
from dataclasses import dataclass
from functools import lru_cache, partial
from typing import Iterable, Sequence

from .errors import DomainError

__all__ = [
    "ResidueSumTable",
    "Thm32Case",
    "Thm32Report",
    "q_binsum",
    "q_fourier",
    "residue_table",
    "thm32_q",
    "verify_prop31",
    "verify_thm32",
]


@lru_cache(maxsize=None)
def _binsum_row(k: int, d: int) -> tuple[int, ...]:
    if k < 1:
        raise DomainError("modulus must be at least 1")
    if d < 0:
        raise DomainError("dimension must be nonnegative")
    values = [0] * k
    for i in range(d + 1):
        values[i % k] += math.comb(d, i)
    return tuple(values)


def q_binsum(a: int, k: int, d: int) -> int:
    """Exact sum of C(d, i) over 0 <= i <= d with i = a (mod k)."""
    row = _binsum_row(k, d)
    if not 0 <= a < k:
        raise DomainError(f"residue {a} is outside range(0, {k})")
    return row[a]


@dataclass(frozen=True)
class ResidueSumTable:
    """All k residue-class sums of row d of Pascal's triangle."""

    k: int
    d: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.values) != self.k:
            raise DomainError("need exactly one value per residue class")
        if sum(self.values) != 1 << self.d:
            raise DomainError("residue sums must add up to 2^d")

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "d": self.d,
            "values": [str(v) for v in self.values],
        }


def residue_table(k: int, d: int) -> ResidueSumTable:
    return ResidueSumTable(k, d, _binsum_row(k, d))


def q_fourier(a: int, k: int, d: int) -> complex:
    """Root-of-unity evaluation of q_binsum, for cross-checking only.

    Computes (1/k) * sum_i w^(-i*a) * (1 + w^i)^d with w = exp(2*pi*I/k).
    Floating point, with an absolute error on the order of
    2^d * k * machine epsilon; q_binsum is the ground truth.
    """
    _binsum_row(k, d)
    if not 0 <= a < k:
        raise DomainError(f"residue {a} is outside range(0, {k})")
    total = 0j
    for i in range(k):
        w_i = cmath.exp(2j * cmath.pi * i / k)
        total += cmath.exp(-2j * cmath.pi * i * a / k) * (1 + w_i) ** d
    return total / k


def thm32_q(a: int, k: int, d: int, T: Iterable[int]) -> int:
    """Sum of C(d, i) over the i whose shifted residue (i + a) mod k lies in T."""
    row = _binsum_row(k, d)
    if not 0 <= a < k:
        raise DomainError(f"residue {a} is outside range(0, {k})")
    residues = set(T)
    if not residues <= set(range(k)):
        raise DomainError("T must be a subset of the residues mod k")
    return sum(row[(t - a) % k] for t in residues)


def verify_prop31(k: int, d: int) -> bool:
    """Check that the k residue sums of row d are not all equal.

    The claim being checked holds whenever 2 < k <= d; parameters outside
    that window are refused rather than reported as counterexamples.
    """
    if not 2 < k <= d:
        raise DomainError("requires 2 < k <= d")
    return len(set(_binsum_row(k, d))) > 1


@dataclass(frozen=True)
class Thm32Case:
    """A residue set T whose k shifted sums came out all equal at dimension d."""

    d: int
    subset: tuple[int, ...]
    values: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "T": list(self.subset),
            "values": [str(v) for v in self.values],
        }


@dataclass(frozen=True)
class Thm32Report:
    """Classification of the constant-sum residue sets found by verify_thm32."""

    k: int
    dims: tuple[int, ...]
    expected: tuple[Thm32Case, ...]
    violations: tuple[Thm32Case, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "dims": list(self.dims),
            "ok": self.ok,
            "expected": [case.to_json() for case in self.expected],
            "violations": [case.to_json() for case in self.violations],
        }

    def csv_rows(self) -> list[list[str]]:
        rows = [["k", "d", "T", "values", "verdict"]]
        for verdict, cases in (("expected", self.expected), ("violation", self.violations)):
            for case in cases:
                rows.append(
                    [
                        str(self.k),
                        str(case.d),
                        " ".join(str(t) for t in case.subset),
                        " ".join(str(v) for v in case.values),
                        verdict,
                    ]
                )
        return rows


def _constant_cases(k: int, dims: Sequence[int], masks: Sequence[int]) -> list[Thm32Case]:
    cases = []
    for mask in masks:
        subset = frozenset(i for i in range(k) if (mask >> i) & 1)
        for d in dims:
            values = tuple(thm32_q(a, k, d, subset) for a in range(k))
            if len(set(values)) == 1:
                cases.append(Thm32Case(d, tuple(sorted(subset)), values))
    return cases


def _classify(k: int, case: Thm32Case) -> bool:
    """True when the constant case is one of the four admissible families."""
    subset = set(case.subset)
    common = case.values[0]
    if not subset:
        return common == 0
    if subset == set(range(k)):
        return common == 1 << case.d
    if k % 2 == 0 and case.d >= 1:
        if subset == set(range(0, k, 2)) or subset == set(range(1, k, 2)):
            return common == 1 << (case.d - 1)
    return False


def verify_thm32(k: int, d_range: Iterable[int], workers: int = 1) -> Thm32Report:
    """Scan every residue set T mod k over the given dimensions.

    For each T whose k shifted sums are all equal, check that T is the empty
    set, all of Z_k, or (k even) one of the two parity classes, with common
    value 0, 2^d, or 2^(d-1) respectively.  Anything else is a violation.
    """
    if not 1 <= k <= 16:
        raise DomainError("subset enumeration supports 1 <= k <= 16")
    dims = tuple(sorted({int(d) for d in d_range}))
    if not dims:
        raise DomainError("need at least one dimension")
    if dims[0] < 0:
        raise DomainError("dimensions must be nonnegative")

    masks = list(range(1 << k))
    if workers > 1 and len(masks) >= 64:
        step = (len(masks) + workers - 1) // workers
        chunks = [masks[i : i + step] for i in range(0, len(masks), step)]
        scan = partial(_constant_cases, k, dims)
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
            cases = [case for chunk in pool.map(scan, chunks) for case in chunk]
    else:
        cases = _constant_cases(k, dims, masks)

    expected = tuple(c for c in cases if _classify(k, c))
    violations = tuple(c for c in cases if not _classify(k, c))
    return Thm32Report(k=k, dims=dims, expected=expected, violations=violations)
