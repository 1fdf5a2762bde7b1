"""Hadamard matrices: Sylvester and Paley I constructions plus tensor products.

Every constructor returns a validated matrix (H Hᵀ = order·I checked in
exact integer arithmetic), and ``hadamard_matrix`` resolves an order to
whichever construction reaches it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q % 2 == 0:
        return q == 2
    f = 3
    while f * f <= q:
        if q % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class HadamardMatrix:
    order: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = self.order
        if len(self.entries) != n or any(len(r) != n for r in self.entries):
            raise DomainError("entry grid does not match order")
        if any(e not in (1, -1) for r in self.entries for e in r):
            raise DomainError("entries must be +1 or -1")
        for i in range(n):
            for j in range(i, n):
                dot = sum(a * b for a, b in zip(self.entries[i], self.entries[j]))
                if dot != (n if i == j else 0):
                    raise DomainError("rows are not orthogonal: not a Hadamard matrix")

    def normalized(self) -> HadamardMatrix:
        """Negate rows, then columns, so the first column and row are all +1."""
        rows = [list(r) if r[0] == 1 else [-e for e in r] for r in self.entries]
        for c in range(self.order):
            if rows[0][c] == -1:
                for r in rows:
                    r[c] = -r[c]
        return HadamardMatrix(self.order, tuple(tuple(r) for r in rows))

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "rows": ["".join("+" if e == 1 else "-" for e in r) for r in self.entries],
        }

    @classmethod
    def from_json(cls, obj: dict) -> HadamardMatrix:
        try:
            order = obj["order"]
            rows = tuple(
                tuple(1 if ch == "+" else -1 for ch in row) for row in obj["rows"]
            )
            if any(set(row) - {"+", "-"} for row in obj["rows"]):
                raise DomainError("row strings must contain only + and -")
        except (KeyError, TypeError) as exc:
            raise DomainError(f"malformed Hadamard object: {exc}") from exc
        return cls(order, rows)


def hadamard_sylvester(m: int) -> HadamardMatrix:
    """Order 2^m by repeated doubling."""
    if m < 0:
        raise DomainError("m must be >= 0")
    rows = [[1]]
    for _ in range(m):
        rows = [r + r for r in rows] + [r + [-e for e in r] for r in rows]
    return HadamardMatrix(1 << m, tuple(tuple(r) for r in rows))


def hadamard_paley(q: int) -> HadamardMatrix:
    """Order q+1 from quadratic residues mod a prime q ≡ 3 (mod 4)."""
    if not _is_prime(q) or q % 4 != 3:
        raise DomainError("q must be a prime congruent to 3 mod 4")
    residues = {(x * x) % q for x in range(1, q)}
    chi = [0] + [1 if x in residues else -1 for x in range(1, q)]
    n = q + 1
    rows = [[0] * n for _ in range(n)]
    rows[0][0] = 1
    for j in range(1, n):
        rows[0][j] = 1
        rows[j][0] = -1
    for i in range(1, n):
        for j in range(1, n):
            rows[i][j] = 1 if i == j else chi[(i - j) % q]
    return HadamardMatrix(n, tuple(tuple(r) for r in rows))


def hadamard_tensor(a: HadamardMatrix, b: HadamardMatrix) -> HadamardMatrix:
    n, m = a.order, b.order
    rows = tuple(
        tuple(a.entries[i][j] * b.entries[k][l] for j in range(n) for l in range(m))
        for i in range(n)
        for k in range(m)
    )
    return HadamardMatrix(n * m, rows)


@lru_cache(maxsize=None)
def hadamard_matrix(order: int) -> HadamardMatrix | None:
    """A Hadamard matrix of the given order, or None if unreachable.

    Tries Sylvester (powers of two), Paley I (order-1 a prime ≡ 3 mod 4),
    then tensor products of reachable factors.
    """
    if order == 1:
        return hadamard_sylvester(0)
    if order == 2:
        return hadamard_sylvester(1)
    if order <= 0 or order % 4 != 0:
        return None
    if order & (order - 1) == 0:
        return hadamard_sylvester(order.bit_length() - 1)
    if _is_prime(order - 1) and (order - 1) % 4 == 3:
        return hadamard_paley(order - 1)
    a = 2
    while a * a <= order:
        if order % a == 0:
            left, right = hadamard_matrix(a), hadamard_matrix(order // a)
            if left is not None and right is not None:
                return hadamard_tensor(left, right)
        a += 2
    return None
