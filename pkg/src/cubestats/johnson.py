"""Generalized Johnson graph J(4s,2s,s), exact clique search, and ω(s).

Vertices are the 2s-element subsets of a 4s-element ground set, encoded
as bit masks; two vertices are adjacent when the subsets intersect in
exactly s elements.  ω(s) = 4s-1 exactly when a Hadamard matrix of order
4s exists, and such a matrix converts into a maximum clique certificate.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from functools import lru_cache

from .errors import CapabilityError, CertificateError, DomainError
from .hadamard import HadamardMatrix, hadamard_matrix

EXPLICIT_VERTEX_CAP = 5
DENSE_ADJACENCY_CAP = 4
_GREEDY_SCAN_CAP = 200_000


@dataclass(frozen=True)
class CliqueCertificate:
    """Clique in J(4s,2s,s): members are pairwise s-intersecting 2s-subsets."""

    s: int
    members: tuple[int, ...]

    def size(self) -> int:
        return len(self.members)

    def to_json(self) -> dict:
        return {
            "s": self.s,
            "members": [
                [e for e in range(4 * self.s) if (m >> e) & 1] for m in self.members
            ],
        }

    @classmethod
    def from_json(cls, obj: dict) -> CliqueCertificate:
        try:
            s = obj["s"]
            members = tuple(sum(1 << e for e in mem) for mem in obj["members"])
        except (KeyError, TypeError) as exc:
            raise DomainError(f"malformed clique object: {exc}") from exc
        return cls(s, members)


def johnson_adjacent(u: int, v: int, s: int) -> bool:
    return u != v and (u & v).bit_count() == s


def verify_clique(cert: CliqueCertificate) -> bool:
    s = cert.s
    ground = (1 << (4 * s)) - 1
    mem = cert.members
    if len(set(mem)) != len(mem):
        return False
    if any(m & ~ground or m.bit_count() != 2 * s for m in mem):
        return False
    return all(
        johnson_adjacent(mem[i], mem[j], s)
        for i in range(len(mem))
        for j in range(i + 1, len(mem))
    )


class JohnsonGraph:
    """Explicit J(4s,2s,s); vertices listed in subset-lexicographic order."""

    def __init__(self, s: int):
        if s < 1:
            raise DomainError("s must be >= 1")
        if s > EXPLICIT_VERTEX_CAP:
            raise CapabilityError(
                f"explicit vertex list capped at s <= {EXPLICIT_VERTEX_CAP}; "
                "use johnson_adjacent for implicit adjacency"
            )
        self.s = s
        self.vertices = tuple(
            sum(1 << e for e in combo)
            for combo in itertools.combinations(range(4 * s), 2 * s)
        )
        self._adjacency: list[int] | None = None

    def vertex_count(self) -> int:
        return len(self.vertices)

    def adjacent(self, u: int, v: int) -> bool:
        return johnson_adjacent(u, v, self.s)

    def adjacency_bitsets(self) -> list[int]:
        """adj[i] has bit j set iff vertices i and j are adjacent."""
        if self._adjacency is not None:
            return self._adjacency
        if self.s > DENSE_ADJACENCY_CAP:
            raise CapabilityError(
                f"dense adjacency capped at s <= {DENSE_ADJACENCY_CAP}"
            )
        verts = self.vertices
        n = len(verts)
        adj = [0] * n
        for i in range(n):
            vi = verts[i]
            row = 0
            for j in range(i + 1, n):
                if (vi & verts[j]).bit_count() == self.s:
                    row |= 1 << j
            adj[i] |= row
            # mirror the strictly-upper part
            for j in range(i + 1, n):
                if (row >> j) & 1:
                    adj[j] |= 1 << i
        self._adjacency = adj
        return adj


def johnson_graph(s: int) -> JohnsonGraph:
    return JohnsonGraph(s)


def hadamard_to_clique(H: HadamardMatrix) -> CliqueCertificate:
    """Maximum clique of size 4s-1 from a Hadamard matrix of order 4s.

    After normalization every row but the first has 2s entries of each
    sign, the -1 entries avoid column 0, and two distinct rows carry -1
    in exactly s common columns; those -1 supports are the members.
    """
    if H.order % 4 != 0 or H.order == 0:
        raise DomainError("order must be a positive multiple of 4")
    s = H.order // 4
    norm = H.normalized()
    members = tuple(
        sum(1 << c for c in range(H.order) if norm.entries[r][c] == -1)
        for r in range(1, H.order)
    )
    cert = CliqueCertificate(s, members)
    if not verify_clique(cert):
        raise CertificateError("Hadamard rows did not produce a valid clique")
    return cert


class _SearchTimeout(Exception):
    pass


class _CapReached(Exception):
    pass


def _color_order(cand: int, adj: list[int]) -> list[tuple[int, int]]:
    """Greedy color classes of the candidate set; returns (vertex, color) ascending."""
    out = []
    color = 0
    rest = cand
    while rest:
        color += 1
        avail = rest
        while avail:
            v = (avail & -avail).bit_length() - 1
            out.append((v, color))
            avail &= ~adj[v]
            avail &= ~(1 << v)
            rest &= ~(1 << v)
    return out


def max_clique(
    graph: JohnsonGraph, time_budget: float | None = None
) -> tuple[CliqueCertificate, bool]:
    """Deterministic branch-and-bound maximum clique.

    The bound at each node is min(greedy coloring count, 4s-1); reaching
    the a-priori cap 4s-1 ends the search immediately.  Returns the best
    clique found and whether optimality was proven within the budget.
    """
    s = graph.s
    cap = 4 * s - 1
    verts = graph.vertices
    adj = graph.adjacency_bitsets()
    n = len(verts)
    deadline = None if time_budget is None else time.monotonic() + time_budget
    best: list[int] = []

    def expand(clique: list[int], cand: int) -> None:
        if deadline is not None and time.monotonic() > deadline:
            raise _SearchTimeout
        for v, color in reversed(_color_order(cand, adj)):
            if len(clique) + color <= len(best):
                return
            clique.append(v)
            sub = cand & adj[v]
            if not sub:
                if len(clique) > len(best):
                    best[:] = clique
                    if len(best) >= cap:
                        raise _CapReached
            else:
                expand(clique, sub)
            clique.pop()
            cand &= ~(1 << v)

    optimal = True
    try:
        expand([], (1 << n) - 1)
    except _SearchTimeout:
        optimal = False
    except _CapReached:
        optimal = True
    cert = CliqueCertificate(s, tuple(verts[i] for i in best))
    return cert, optimal


def _greedy_clique(s: int) -> CliqueCertificate:
    """Lex-greedy clique via implicit adjacency; scan capped, any s."""
    members: list[int] = []
    for count, combo in enumerate(itertools.combinations(range(4 * s), 2 * s)):
        if count >= _GREEDY_SCAN_CAP:
            break
        m = sum(1 << e for e in combo)
        if all(johnson_adjacent(m, other, s) for other in members):
            members.append(m)
    return CliqueCertificate(s, tuple(members))


@dataclass(frozen=True)
class OmegaResult:
    s: int
    lower: int
    upper: int
    certificate: CliqueCertificate
    source: str

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    def to_json(self) -> dict:
        return {
            "s": self.s,
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "source": self.source,
            "certificate": self.certificate.to_json(),
        }


@lru_cache(maxsize=None)
def omega(
    s: int, policy: str = "auto", time_budget: float | None = None
) -> OmegaResult:
    """Clique number of J(4s,2s,s): exact 4s-1 when a Hadamard matrix of
    order 4s is constructible, otherwise the best enclosure available."""
    if s < 1:
        raise DomainError("s must be >= 1")
    if policy not in ("auto", "hadamard", "search"):
        raise DomainError(f"unknown omega policy: {policy}")
    cap = 4 * s - 1
    if policy in ("auto", "hadamard"):
        H = hadamard_matrix(4 * s)
        if H is not None:
            return OmegaResult(s, cap, cap, hadamard_to_clique(H), "hadamard")
        if policy == "hadamard":
            cert = _greedy_clique(s)
            return OmegaResult(s, cert.size(), cap, cert, "greedy")
    if s <= DENSE_ADJACENCY_CAP:
        cert, optimal = max_clique(johnson_graph(s), time_budget)
        upper = cert.size() if optimal else cap
        return OmegaResult(s, cert.size(), upper, cert, "search" if optimal else "search-partial")
    cert = _greedy_clique(s)
    return OmegaResult(s, cert.size(), cap, cert, "greedy")
