"""Lower-bound constructions as concrete vertex sets, plus bound formulas.

Each builder returns the exact set it promises; ``build_construction``
dispatches the JSON form and attaches the claim the construction
certifies, and ``best_bounds`` assembles the tightest known enclosure
of λ(d,s) from the closed forms, the constructions, and the stored
reference constants.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction

import numpy as np

from .cube import Subcube, VertexSet
from .errors import CertificateError, DomainError
from .gf2 import GF2Matrix, gf2_rank
from .johnson import CliqueCertificate, verify_clique
from .stats import LambdaBounds, LayeredSpec, layered_distribution
from .turan import turan_density

# Flag-algebra upper bounds quoted from the source remark; not
# reproducible at desk scale, stored verbatim and tagged as such.
REFERENCE_UPPER = {
    (2, 1): Fraction("0.68572"),
    (3, 1): Fraction("0.61005"),
    (4, 1): Fraction("0.60254"),
}


def _mask_from_bools(flags: np.ndarray) -> int:
    return int.from_bytes(
        np.packbits(flags.astype(np.uint8), bitorder="little").tobytes(), "little"
    )


# ---------------------------------------------------------------------------
# syndrome colorings
# ---------------------------------------------------------------------------


def syndrome_set(B: GF2Matrix, colors: set[int]) -> VertexSet:
    """A = {x : Bx in colors}, syndromes over GF(2)."""
    r, n = B.rows, B.cols
    for c in colors:
        if not 0 <= c < (1 << r):
            raise DomainError(f"color {c} is not an r-bit syndrome (r={r})")
    xs = np.arange(1 << n, dtype=np.uint32)
    synd = np.zeros(1 << n, dtype=np.uint32)
    for i, row_mask in enumerate(B.row_masks):
        synd |= (np.bitwise_count(xs & np.uint32(row_mask)).astype(np.uint32) & 1) << i
    member = np.isin(synd, np.fromiter(colors, dtype=np.uint32, count=len(colors)))
    return VertexSet(n, _mask_from_bools(member))


def spanning_fraction(B: GF2Matrix, d: int) -> Fraction:
    """Fraction of d-subsets of columns on which B has full row rank.

    Every d-subcube whose free set is such a subset meets a syndrome set
    with m colors in exactly m·2^(d-r) vertices, so this fraction is a
    certified lower bound on the corresponding λ.
    """
    if d < 0 or d > B.cols:
        raise DomainError(f"d={d} outside [0, {B.cols}]")
    hits = 0
    total = 0
    for cols in itertools.combinations(range(B.cols), d):
        total += 1
        if gf2_rank(B.restrict_columns(cols)) == B.rows:
            hits += 1
    return Fraction(hits, total)


# ---------------------------------------------------------------------------
# closed-form bound quantities
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def c_d(d: int) -> Fraction:
    """Probability that d uniform nonzero columns of F_2^d span it."""
    if d < 1:
        raise DomainError("d must be >= 1")
    out = Fraction(1)
    for i in range(1, d):
        out *= 1 - Fraction((1 << i) - 1, (1 << d) - 1)
    return out


@lru_cache(maxsize=None)
def c_dk(d: int, k: int) -> Fraction:
    """Probability that a (d-k) x d uniform binary matrix has full row rank."""
    if not 1 <= k <= d:
        raise DomainError(f"k={k} outside [1, d]")
    out = Fraction(1)
    for i in range(d - k):
        out *= 1 - Fraction(1 << i, 1 << d)
    return out


@lru_cache(maxsize=None)
def c_star(d: int, k: int) -> Fraction:
    """Full-row-rank probability for (d-k) x d with uniform NONZERO columns.

    Rank-evolution recurrence: a fresh nonzero column raises rank r with
    probability (2^(d-k) - 2^r)/(2^(d-k) - 1).
    """
    if not 1 <= k <= d:
        raise DomainError(f"k={k} outside [1, d]")
    m = d - k
    if m == 0:
        return Fraction(1)
    space = 1 << m
    dp = [Fraction(0)] * (m + 1)
    dp[0] = Fraction(1)
    for _ in range(d):
        nxt = [Fraction(0)] * (m + 1)
        for r, p in enumerate(dp):
            if not p:
                continue
            if r == m:
                nxt[r] += p
            else:
                up = Fraction(space - (1 << r), space - 1)
                nxt[r + 1] += p * up
                nxt[r] += p * (1 - up)
        dp = nxt
    return dp[m]


def c_star_enumerated(d: int, k: int) -> Fraction:
    """Oracle for c_star by enumerating all (2^(d-k)-1)^d column tuples."""
    if not 1 <= k <= d:
        raise DomainError(f"k={k} outside [1, d]")
    m = d - k
    if m == 0:
        return Fraction(1)
    nonzero = range(1, 1 << m)
    hits = 0
    total = 0
    for cols in itertools.product(nonzero, repeat=d):
        total += 1
        rows = [
            sum(((col >> r) & 1) << j for j, col in enumerate(cols)) for r in range(m)
        ]
        if gf2_rank(GF2Matrix(m, d, tuple(rows))) == m:
            hits += 1
    return Fraction(hits, total)


@lru_cache(maxsize=None)
def expected_single_fraction(d: int) -> Fraction:
    """(1 - 2^-d)^(2^d - 1): expected fraction of d-subcubes meeting a
    Bernoulli(2^-d) set in exactly one vertex."""
    if d < 1:
        raise DomainError("d must be >= 1")
    return Fraction((1 << d) - 1, 1 << d) ** ((1 << d) - 1)


def two_adic_split(s: int) -> tuple[int, int]:
    """s = 2^k · j with j odd."""
    if s < 1:
        raise DomainError("s must be >= 1")
    k = (s & -s).bit_length() - 1
    return k, s >> k


# ---------------------------------------------------------------------------
# concrete vertex sets
# ---------------------------------------------------------------------------


def bernoulli_set(n: int, d: int, seed: int) -> VertexSet:
    """Each vertex kept independently with probability exactly 2^(-d).

    Vertex v consumes bits v·d .. v·d+d-1 of the Philox(seed) byte
    stream (little-endian bit order within bytes) and is kept when all
    d bits are zero, so membership is reproducible per seed.
    """
    if d < 0 or d > n:
        raise DomainError(f"d={d} outside [0, n]")
    rng = np.random.Generator(np.random.Philox(key=seed))
    total_bits = (1 << n) * d
    raw = np.frombuffer(rng.bytes((total_bits + 7) // 8 + 1), dtype=np.uint8)
    bits = np.unpackbits(raw, bitorder="little")[:total_bits]
    keep = ~bits.reshape((1 << n), d).any(axis=1)
    return VertexSet(n, _mask_from_bools(keep))


def layered_set(n: int, spec: LayeredSpec) -> VertexSet:
    """All vertices whose Hamming weight lies in the residue set mod k."""
    weights = np.bitwise_count(np.arange(1 << n, dtype=np.uint32)).astype(np.int64)
    residues = np.fromiter(spec.T, dtype=np.int64, count=len(spec.T))
    member = np.isin(weights % spec.k, residues)
    return VertexSet(n, _mask_from_bools(member))


def parity_set(n: int) -> VertexSet:
    return layered_set(n, LayeredSpec(2, frozenset({0})))


def mod_weight_set(n: int, d: int) -> VertexSet:
    """Weights divisible by d+1; meets most d-subcubes in a single vertex."""
    if d < 0:
        raise DomainError("d must be >= 0")
    return layered_set(n, LayeredSpec(d + 1, frozenset({0})))


def weight_top_bottom_set(d: int) -> VertexSet:
    """Vertices of Q_{d+2} of weight 0 or d+1 (d+3 vertices)."""
    if d < 1:
        raise DomainError("d must be >= 1")
    n = d + 2
    verts = [0] + [v for v in range(1 << n) if v.bit_count() == d + 1]
    return VertexSet.from_vertices(n, verts)


def turan_extremal_set(d: int, s: int, clique: CliqueCertificate) -> VertexSet:
    """Rows of a (4s) x (d+2) zero-pattern matrix built from a clique.

    Columns are assigned to clique members round-robin in certificate
    order; the column for member Z is zero exactly on the rows in Z.
    Row r becomes a vertex of Q_{d+2}.  With w distinct members used,
    the set meets a π(d+2, w) fraction of d-subcubes in exactly s
    vertices (equality for honest cliques; duplicate rows collapse).
    """
    if s < 1:
        raise DomainError("s must be >= 1")
    if clique.s != s or not clique.members:
        raise CertificateError("clique certificate does not match s or is empty")
    if not verify_clique(clique):
        raise CertificateError("invalid clique certificate")
    n = d + 2
    used = clique.members[: min(len(clique.members), n)]
    verts = []
    for r in range(4 * s):
        v = 0
        for j in range(n):
            if not (used[j % len(used)] >> r) & 1:
                v |= 1 << j
        verts.append(v)
    return VertexSet.from_vertices(n, sorted(set(verts)))


def perturb_parity(A: VertexSet, cubes: list[Subcube]) -> VertexSet:
    """Complement A inside each listed subcube, sequentially."""
    bits = A.bits
    for q in cubes:
        if q.n != A.n:
            raise DomainError("subcube ambient dimension differs from the set")
        bits ^= q.vertex_mask()
    return VertexSet(A.n, bits)


def perturbation_preserves(n: int, d: int, cubes: list[Subcube]) -> bool:
    """Sufficient condition for the half-count claim to survive perturbation.

    Each perturbing subcube must have dimension at least n-d+1 (so it
    meets every d-subcube it touches in a subcube of dimension >= 1),
    and the perturbing subcubes must be pairwise disjoint (an overlapping
    pair can break the claim even with admissible dimensions).
    """
    if any(q.dimension < n - d + 1 for q in cubes):
        return False
    return all(
        not a.intersects(b) for i, a in enumerate(cubes) for b in cubes[i + 1 :]
    )


# ---------------------------------------------------------------------------
# construction dispatch
# ---------------------------------------------------------------------------

CONSTRUCTION_KINDS = (
    "syndrome",
    "layered",
    "turan_extremal",
    "parity",
    "perturbed_parity",
    "weight_top_bottom",
    "mod_weight",
    "bernoulli",
)


@dataclass(frozen=True)
class ConstructionResult:
    """A built set together with the claim its construction certifies.

    claim_value is the certified λ(n, claim_d, claim_s, set) as an exact
    rational, claim_relation is "eq" or "ge", and warning marks a claim
    whose preconditions were not met (emitted anyway, not guaranteed).
    """

    kind: str
    vertex_set: VertexSet
    claim_d: int | None
    claim_s: int | None
    claim_value: Fraction | None
    claim_relation: str
    warning: bool = False

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "set": self.vertex_set.to_json(),
            "claim": None
            if self.claim_value is None
            else {
                "d": self.claim_d,
                "s": self.claim_s,
                "lambda": str(self.claim_value),
                "relation": self.claim_relation,
                "warning": self.warning,
            },
        }


def _mod_weight_claim(n: int, d: int) -> Fraction:
    """Fraction of base weights ≡ 0 or 1 mod (d+1): the exact λ(n,d,1)."""
    dist = layered_distribution(n, d, LayeredSpec(d + 1, frozenset({0})))
    return dist.fraction(1)


def build_construction(spec: dict) -> ConstructionResult:
    """Build the vertex set a ConstructionSpec JSON object describes."""
    try:
        kind = spec["kind"]
    except (KeyError, TypeError) as exc:
        raise DomainError("construction spec needs a 'kind'") from exc
    if kind not in CONSTRUCTION_KINDS:
        raise DomainError(f"unknown construction kind: {kind}")
    try:
        return _BUILDERS[kind](spec)
    except KeyError as exc:
        raise DomainError(f"missing parameter for {kind}: {exc}") from exc


def _build_syndrome(spec: dict) -> ConstructionResult:
    B = GF2Matrix.from_json(spec["matrix"])
    colors = set(spec["colors"])
    d = spec.get("d", B.rows)
    A = syndrome_set(B, colors)
    s = len(colors) << max(d - B.rows, 0)
    frac = spanning_fraction(B, d) if d <= B.cols else Fraction(0)
    return ConstructionResult("syndrome", A, d, s, frac, "ge")


def _build_layered(spec: dict) -> ConstructionResult:
    lspec = LayeredSpec(spec["k"], frozenset(spec["T"]))
    A = layered_set(spec["n"], lspec)
    return ConstructionResult("layered", A, None, None, None, "eq")


def _build_turan(spec: dict) -> ConstructionResult:
    d, s = spec["d"], spec["s"]
    clique = CliqueCertificate.from_json(spec["clique"])
    A = turan_extremal_set(d, s, clique)
    used = min(len(clique.members), d + 2)
    return ConstructionResult(
        "turan_extremal", A, d, s, turan_density(d + 2, used), "eq"
    )


def _build_parity(spec: dict) -> ConstructionResult:
    n = spec["n"]
    d = spec.get("d", n)
    if d < 1:
        raise DomainError("parity claim needs d >= 1")
    A = parity_set(n)
    return ConstructionResult("parity", A, d, 1 << (d - 1), Fraction(1), "eq")


def _build_perturbed(spec: dict) -> ConstructionResult:
    n, d = spec["n"], spec["d"]
    cubes = [Subcube(n, q["free"], q["base"]) for q in spec["cubes"]]
    A = perturb_parity(parity_set(n), cubes)
    ok = perturbation_preserves(n, d, cubes)
    return ConstructionResult(
        "perturbed_parity", A, d, 1 << (d - 1), Fraction(1), "eq", warning=not ok
    )


def _build_wtb(spec: dict) -> ConstructionResult:
    d = spec["d"]
    A = weight_top_bottom_set(d)
    claim = Fraction(3, 4) if d >= 6 else None
    return ConstructionResult("weight_top_bottom", A, d, 1, claim, "eq")


def _build_mod_weight(spec: dict) -> ConstructionResult:
    n, d = spec["n"], spec["d"]
    A = mod_weight_set(n, d)
    return ConstructionResult("mod_weight", A, d, 1, _mod_weight_claim(n, d), "eq")


def _build_bernoulli(spec: dict) -> ConstructionResult:
    n, d = spec["n"], spec["d"]
    A = bernoulli_set(n, d, spec.get("seed", 0))
    return ConstructionResult("bernoulli", A, d, 1, None, "eq")


_BUILDERS = {
    "syndrome": _build_syndrome,
    "layered": _build_layered,
    "turan_extremal": _build_turan,
    "parity": _build_parity,
    "perturbed_parity": _build_perturbed,
    "weight_top_bottom": _build_wtb,
    "mod_weight": _build_mod_weight,
    "bernoulli": _build_bernoulli,
}


# ---------------------------------------------------------------------------
# best known enclosure of λ(d,s)
# ---------------------------------------------------------------------------


def best_bounds(d: int, s: int) -> LambdaBounds:
    """Tightest enclosure of the limit λ(d,s) assembled from all sources."""
    if d < 1:
        raise DomainError("d must be >= 1")
    top = 1 << d
    if not 0 <= s <= top:
        raise DomainError(f"s={s} outside [0, 2^d]")
    if s in (0, top) or 2 * s == top:
        witness = {0: "empty set", top: "full cube"}.get(s, "parity set")
        return LambdaBounds(d, s, Fraction(1), Fraction(1), witness, "closed-form")
    if 2 * s > top:
        # λ(d,s) = λ(d, 2^d - s) via complementation
        inner = best_bounds(d, top - s)
        return LambdaBounds(
            d,
            s,
            inner.lower,
            inner.upper,
            f"complement of: {inner.lower_witness}",
            inner.upper_source,
        )

    lower_candidates: list[tuple[Fraction, str]] = [
        (c_d(d), "syndrome (square matrix, nonzero columns)")
    ]
    k, _ = two_adic_split(s)
    if 1 <= k <= d:
        lower_candidates.append(
            (c_star(d, k), f"syndrome ({d - k} rows, nonzero columns)")
        )
    if s == 1:
        lower_candidates.append((expected_single_fraction(d), "Bernoulli(2^-d) set"))
        lower_candidates.append(
            (Fraction(2, d + 1), f"weights divisible by {d + 1}")
        )
    lower, lower_witness = max(lower_candidates, key=lambda t: t[0])

    upper_candidates: list[tuple[Fraction, str]] = []
    if s == 1:
        value = turan_density(d + 2, 3) if d < 6 else Fraction(3, 4)
        upper_candidates.append((value, "closed-form"))
    else:
        # π(d+2, ω(s)) with the a-priori cap ω(s) <= 4s-1; exact when a
        # Hadamard matrix of order 4s exists, an upper bound regardless.
        upper_candidates.append((turan_density(d + 2, 4 * s - 1), "closed-form"))
        generic = (1 - Fraction(1, 4 * s - 1)) * (1 + Fraction(1, d + 1))
        upper_candidates.append((min(generic, Fraction(1)), "generic"))
    if (d, s) in REFERENCE_UPPER:
        upper_candidates.append((REFERENCE_UPPER[(d, s)], "reference-constant"))
    upper, upper_source = min(upper_candidates, key=lambda t: t[0])
    return LambdaBounds(d, s, lower, upper, lower_witness, upper_source)
