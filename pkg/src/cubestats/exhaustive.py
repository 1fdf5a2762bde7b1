"""Brute-force oracle for λ(n,d,s) = max over all A of λ(n,d,s,A).

The search space of 2^(2^n) subsets is halved by complement symmetry:
only sets avoiding vertex 0 are enumerated, and each stands in for its
complement through counts[s] = counts_complement[2^d - s].  n <= 4 runs
plain; n = 5 additionally prunes by hypercube symmetries (coordinate
permutations and translations) and must be requested explicitly.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .cube import VertexSet, enumerate_subcubes, subcube_count
from .errors import CapabilityError, DomainError

PLAIN_MAX_N = 4
PRUNED_MAX_N = 5

_EVAL_CHUNK = 1 << 21
_ENUM_CHUNK = 1 << 24
_ORBIT_CAP = 1 << 11
_WALK_CAP = 1 << 25


def _cube_masks(n: int, d: int) -> list[int]:
    return [q.vertex_mask() for q in enumerate_subcubes(n, d)]


def _hist_matrix(masks: np.ndarray, cube_masks: list[int], d: int) -> np.ndarray:
    """hist[i, s] = number of d-subcubes meeting mask i in exactly s vertices."""
    hist = np.zeros((masks.size, (1 << d) + 1), dtype=np.uint8)
    rows = np.arange(masks.size)
    for cm in cube_masks:
        cnt = np.bitwise_count(masks & masks.dtype.type(cm)).astype(np.intp)
        hist[rows, cnt] += 1
    return hist


def _vertex_tuple(mask: int, n: int) -> tuple[int, ...]:
    return tuple(v for v in range(1 << n) if (mask >> v) & 1)


@lru_cache(maxsize=None)
def _plain_sweep(n: int, d: int) -> tuple[int, tuple[tuple[int, int], ...]]:
    """Per s: (max subcube count, lex-least witness mask), n <= 4."""
    cubes = _cube_masks(n, d)
    masks = np.arange(0, 1 << (1 << n), 2, dtype=np.uint32)
    hist = _hist_matrix(masks, cubes, d)
    total = subcube_count(n, d)
    full = (1 << (1 << n)) - 1
    top = 1 << d
    table = []
    for s in range(top + 1):
        direct = hist[:, s]
        mirror = hist[:, top - s]
        best = int(max(direct.max(), mirror.max()))
        cand = [int(m) for m in masks[direct == best]]
        cand += [full ^ int(m) for m in masks[mirror == best]]
        witness = min(cand, key=lambda m: _vertex_tuple(m, n))
        table.append((best, witness))
    return total, tuple(table)


# ---------------------------------------------------------------------------
# n = 5: orbit-pruned enumeration.
#
# The automorphisms used are translations x -> x ^ t and coordinate
# permutations, acting on membership masks as bit permutations.  A mask
# is kept only if it is no larger than each tested image that still
# avoids vertex 0; the smallest vertex-0-avoiding member of every orbit
# passes all such tests, so the surviving set is a superset of one
# representative per orbit and the maximum over it is exact.
# ---------------------------------------------------------------------------


def _coord_zero_mask(n: int, b: int) -> int:
    return sum(1 << v for v in range(1 << n) if not (v >> b) & 1)


def _translate_image(arr: np.ndarray, t: int, n: int) -> np.ndarray:
    out = arr
    for b in range(n):
        if (t >> b) & 1:
            c = arr.dtype.type(_coord_zero_mask(n, b))
            sh = arr.dtype.type(1 << b)
            out = ((out & c) << sh) | ((out >> sh) & c)
    return out


def _transposition_image(arr: np.ndarray, i: int, j: int, n: int) -> np.ndarray:
    """Image under the coordinate swap i <-> j (i < j)."""
    lo = sum(1 << v for v in range(1 << n) if (v >> i) & 1 and not (v >> j) & 1)
    keep = sum(1 << v for v in range(1 << n) if ((v >> i) & 1) == ((v >> j) & 1))
    sh = arr.dtype.type((1 << j) - (1 << i))
    lo_c = arr.dtype.type(lo)
    return (arr & arr.dtype.type(keep)) | ((arr & lo_c) << sh) | ((arr >> sh) & lo_c)


def _n5_filters() -> list:
    filters = []
    for b in reversed(range(5)):
        filters.append(lambda a, t=1 << b: _translate_image(a, t, 5))
    pairs = sorted(
        itertools.combinations(range(5), 2), key=lambda p: -((1 << p[1]) - (1 << p[0]))
    )
    for i, j in pairs:
        filters.append(lambda a, i=i, j=j: _transposition_image(a, i, j, 5))
    rest = [t for t in range(32) if t.bit_count() >= 2]
    for t in sorted(rest, key=lambda t: t.bit_count()):
        filters.append(lambda a, t=t: _translate_image(a, t, 5))
    return filters


_n5_cache: np.ndarray | None = None


def _n5_survivors() -> np.ndarray:
    """Vertex-0-avoiding masks surviving the symmetry filter, as uint32."""
    global _n5_cache
    if _n5_cache is not None:
        return _n5_cache
    filters = _n5_filters()
    one = np.uint64(1)
    parts = []
    for start in range(0, 1 << 32, 2 * _ENUM_CHUNK):
        m = np.arange(start, start + 2 * _ENUM_CHUNK, 2, dtype=np.uint64)
        for f in filters:
            img = f(m)
            # Images hitting vertex 0 leave the enumerated half-space and
            # cannot disqualify m.
            m = m[((img & one) != 0) | (m <= img)]
            if m.size == 0:
                break
        if m.size:
            parts.append(m.astype(np.uint32))
    _n5_cache = np.concatenate(parts) if parts else np.empty(0, np.uint32)
    return _n5_cache


@lru_cache(maxsize=None)
def _group_positions(n: int) -> np.ndarray:
    """Rows = group elements (perm then translate), columns = image of each vertex."""
    perms = list(itertools.permutations(range(n)))
    tbl = np.empty((len(perms) << n, 1 << n), dtype=np.uint8)
    row = 0
    for sigma in perms:
        base = [
            sum(((v >> i) & 1) << sigma[i] for i in range(n)) for v in range(1 << n)
        ]
        for t in range(1 << n):
            tbl[row] = [b ^ t for b in base]
            row += 1
    return tbl


def _orbit_min_tuple(mask: int, n: int, complement: bool) -> tuple[int, ...]:
    """Lex-least vertex tuple over the symmetry orbit of mask (or of its complement)."""
    if mask == 0 and not complement:
        return ()
    tbl = _group_positions(n)
    imgs = np.zeros(tbl.shape[0], dtype=np.uint64)
    one = np.uint64(1)
    for v in range(1 << n):
        if (mask >> v) & 1:
            imgs |= one << tbl[:, v].astype(np.uint64)
    if complement:
        imgs = np.uint64((1 << (1 << n)) - 1) ^ imgs
    imgs = np.unique(imgs)
    if imgs[0] == 0:
        return ()
    low = (imgs & (~imgs + one)).min()
    shortlist = imgs[(imgs & (~imgs + one)) == low]
    return min(_vertex_tuple(int(m), n) for m in shortlist)


def _sjt_swaps(n: int) -> list[tuple[int, int]]:
    """Adjacent-transposition sequence stepping through all n! permutations."""
    if n <= 1:
        return []
    inner = _sjt_swaps(n - 1)
    desc = [(i, i + 1) for i in range(n - 2, -1, -1)]
    asc = [(i, i + 1) for i in range(n - 1)]
    seq = list(desc)
    at_front = True
    for a, b in inner:
        if at_front:
            seq.append((a + 1, b + 1))
            seq.extend(asc)
        else:
            seq.append((a, b))
            seq.extend(desc)
        at_front = not at_front
    return seq


def _walk_steps(n: int) -> list[tuple[str, tuple[int, int] | int]]:
    """Generator sequence whose running products visit all 2^n n! symmetries.

    Between consecutive coordinate swaps, a Gray-code sweep of single-bit
    translations covers the whole translation coset, so every symmetry is
    reached exactly once by composing one more generator per step.
    """
    steps: list[tuple[str, tuple[int, int] | int]] = []
    for swap in [None] + list(_sjt_swaps(n)):
        if swap is not None:
            steps.append(("swap", swap))
        for j in range(1, 1 << n):
            steps.append(("xlate", (j & -j).bit_length() - 1))
    return steps


def _beats(img: np.ndarray, w: int) -> np.ndarray:
    """Elementwise: does the mask's vertex tuple precede champion w's?"""
    wv = img.dtype.type(w)
    one = img.dtype.type(1)
    diff = img ^ wv
    low = diff & (~diff + one)
    above = ~((low << one) - one)
    has_low = (img & low) != 0
    w_up = (wv & above) != 0
    img_up = (img & above) != 0
    return (diff != 0) & np.where(has_low, w_up, ~img_up)


def _walk_min_tuple(cands: np.ndarray, n: int) -> tuple[int, ...]:
    """Least vertex tuple over the symmetry orbits of all candidate masks.

    Walks the whole symmetry group, transforming the candidate array by a
    single generator per step, and keeps the best mask seen.  Linear in
    group order times candidate count, so it stays usable where expanding
    a full orbit per candidate would not.
    """
    img = np.unique(cands)
    champ = min(_orbit_min_tuple(int(m), n, False) for m in img[:64])

    def absorb(arr: np.ndarray) -> None:
        nonlocal champ
        w = sum(1 << v for v in champ)
        hits = arr[_beats(arr, w)]
        if hits.size:
            best = min(_vertex_tuple(int(m), n) for m in np.unique(hits))
            if best < champ:
                champ = best

    absorb(img)
    for kind, payload in _walk_steps(n):
        if champ == ():
            break
        if kind == "swap":
            i, j = payload
            img = _transposition_image(img, i, j, n)
        else:
            img = _translate_image(img, 1 << payload, n)
        absorb(img)
    return champ


@lru_cache(maxsize=None)
def _pruned_colmax(d: int) -> tuple[int, tuple[int, ...]]:
    """n = 5: total subcube count and per-column maxima over filtered masks."""
    surv = _n5_survivors()
    cubes = _cube_masks(5, d)
    col_max = np.zeros((1 << d) + 1, dtype=np.int64)
    for lo in range(0, surv.size, _EVAL_CHUNK):
        hist = _hist_matrix(surv[lo : lo + _EVAL_CHUNK], cubes, d)
        col_max = np.maximum(col_max, hist.max(axis=0))
    return subcube_count(5, d), tuple(int(x) for x in col_max)


@lru_cache(maxsize=None)
def _pruned_cell(d: int, s: int) -> tuple[int, int]:
    """n = 5: (best subcube count, lex-least witness mask) for one s."""
    n = 5
    total, col_max = _pruned_colmax(d)
    top = 1 << d
    best = max(col_max[s], col_max[top - s])
    surv = _n5_survivors()
    cubes = _cube_masks(n, d)
    full = np.uint32(0xFFFFFFFF)
    parts = []
    for lo in range(0, surv.size, _EVAL_CHUNK):
        chunk = surv[lo : lo + _EVAL_CHUNK]
        hist = _hist_matrix(chunk, cubes, d)
        # maximizers avoiding vertex 0, plus complements of the masks whose
        # mirror column attains the same count (counts[s] of the complement)
        if col_max[s] == best:
            parts.append(chunk[hist[:, s] == best])
        if col_max[top - s] == best:
            parts.append(full ^ chunk[hist[:, top - s] == best])
    cands = np.unique(np.concatenate(parts))
    if int(cands[0]) == 0:
        return best, 0
    if cands.size > _WALK_CAP:
        raise CapabilityError("witness tie set exceeds supported size")
    if cands.size <= _ORBIT_CAP:
        wit = min(_orbit_min_tuple(int(m), n, False) for m in cands)
    else:
        wit = _walk_min_tuple(cands, n)
    return best, sum(1 << v for v in wit)


def exhaustive_lambda(
    n: int, d: int, s: int, *, opt_in_n5: bool = False
) -> tuple[Fraction, VertexSet]:
    """Exact λ(n,d,s) with a lex-least maximizing witness.

    n <= 4 always works.  n = 5 requires opt_in_n5=True and takes minutes
    on first use (the survivor table is cached afterwards).
    """
    if n < 0 or d < 0 or d > n:
        raise DomainError(f"invalid dimensions n={n}, d={d}")
    if not 0 <= s <= (1 << d):
        raise DomainError(f"s={s} outside [0, 2^d]")
    if n <= PLAIN_MAX_N:
        total, table = _plain_sweep(n, d)
        count, witness = table[s]
    elif n == PRUNED_MAX_N and opt_in_n5:
        total, _ = _pruned_colmax(d)
        count, witness = _pruned_cell(d, s)
    elif n == PRUNED_MAX_N:
        raise CapabilityError("n=5 search requires explicit opt-in (orbit pruning)")
    else:
        raise CapabilityError(f"exhaustive search not supported for n={n}")
    return Fraction(count, total), VertexSet(n, witness)
