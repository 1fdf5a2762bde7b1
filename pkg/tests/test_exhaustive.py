"""Exact maxima over all vertex sets, and the symmetry-walk internals."""

import itertools
import math
import os
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubestats import (
    CapabilityError,
    DomainError,
    binomial,
    exhaustive_lambda,
    lambda_of_set,
    turan_density,
)
from cubestats.exhaustive import (
    _beats,
    _sjt_swaps,
    _transposition_image,
    _translate_image,
    _vertex_tuple,
    _walk_min_tuple,
    _walk_steps,
)


class TestSmallTables:
    def test_diagonal_pair_is_optimal_for_edges(self):
        val, wit = exhaustive_lambda(2, 1, 1)
        assert val == 1
        assert wit.vertices() == [0, 3]

    def test_antipodal_pair_for_squares_in_q3(self):
        val, wit = exhaustive_lambda(3, 2, 1)
        assert val == 1
        assert wit.vertices() == [0, 7]

    def test_q4_squares_single_point_matches_turan(self):
        val, wit = exhaustive_lambda(4, 2, 1)
        assert val == Fraction(5, 6)
        assert val == turan_density(4, 3)
        assert wit.vertices() == [0, 3, 13, 14]

    def test_trivial_occupancies_are_perfect(self):
        for n in range(1, 5):
            for d in range(n + 1):
                for s in (0, 1 << d) + (((1 << d) // 2,) if d else ()):
                    val, wit = exhaustive_lambda(n, d, s)
                    assert val == 1, (n, d, s)
                    assert lambda_of_set(wit, d, s) == 1

    def test_half_occupancy_witnesses(self):
        _, wit = exhaustive_lambda(4, 3, 4)
        assert wit.vertices() == [0, 1, 2, 3, 12, 13, 14, 15]
        _, wit = exhaustive_lambda(4, 1, 1)
        assert wit.vertices() == [0, 3, 5, 6, 9, 10, 12, 15]

    def test_whole_cube_witness(self):
        val, wit = exhaustive_lambda(4, 4, 3)
        assert val == 1
        assert wit.vertices() == [0, 1, 2]

    def test_witnesses_attain_reported_value(self):
        for n in range(5):
            for d in range(n + 1):
                for s in range((1 << d) + 1):
                    val, wit = exhaustive_lambda(n, d, s)
                    assert lambda_of_set(wit, d, s) == val

    def test_mirror_symmetry(self):
        for n in range(5):
            for d in range(n + 1):
                for s in range((1 << d) + 1):
                    a, _ = exhaustive_lambda(n, d, s)
                    b, _ = exhaustive_lambda(n, d, (1 << d) - s)
                    assert a == b

    def test_monotone_in_ambient_dimension(self):
        for d in range(3):
            for s in range((1 << d) + 1):
                vals = [exhaustive_lambda(n, d, s)[0] for n in range(d, 5)]
                assert all(x >= y for x, y in zip(vals, vals[1:]))

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            exhaustive_lambda(3, 4, 1)
        with pytest.raises(DomainError):
            exhaustive_lambda(3, 2, 5)

    def test_capability_gates(self):
        with pytest.raises(CapabilityError):
            exhaustive_lambda(5, 2, 1)
        with pytest.raises(CapabilityError):
            exhaustive_lambda(6, 2, 1, opt_in_n5=True)


# --- symmetry-walk internals ------------------------------------------------


def _apply_group_element(mask: int, perm: tuple[int, ...], t: int, n: int) -> int:
    img = 0
    for v in range(1 << n):
        if (mask >> v) & 1:
            w = sum(((v >> k) & 1) << perm[k] for k in range(n)) ^ t
            img |= 1 << w
    return img


def _full_orbit(mask: int, n: int) -> set[int]:
    return {
        _apply_group_element(mask, perm, t, n)
        for perm in itertools.permutations(range(n))
        for t in range(1 << n)
    }


class TestWalkMachinery:
    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_sjt_visits_every_permutation_once(self, n):
        swaps = _sjt_swaps(n)
        assert all(j == i + 1 for i, j in swaps)
        assert len(swaps) == math.factorial(n) - 1
        perm = list(range(n))
        seen = {tuple(perm)}
        for i, j in swaps:
            perm[i], perm[j] = perm[j], perm[i]
            seen.add(tuple(perm))
        assert len(seen) == math.factorial(n)

    @pytest.mark.parametrize("n", [2, 3])
    def test_walk_covers_group_uniformly(self, n):
        # push one seed mask through the walk; the images must cover its
        # orbit with uniform multiplicity group_order / orbit_size
        seed = 0b1011  # vertices {0, 1, 3}
        steps = _walk_steps(n)
        assert len(steps) == (1 << n) * math.factorial(n) - 1
        arr = np.array([seed], dtype=np.uint32)
        images = [seed]
        for kind, payload in steps:
            if kind == "swap":
                arr = _transposition_image(arr, payload[0], payload[1], n)
            else:
                arr = _translate_image(arr, 1 << payload, n)
            images.append(int(arr[0]))
        orbit = _full_orbit(seed, n)
        assert set(images) == orbit
        group = (1 << n) * math.factorial(n)
        mult = group // len(orbit)
        assert all(images.count(m) == mult for m in orbit)

    def test_swizzles_match_pointwise_action(self):
        rng = np.random.default_rng(7)
        n = 4
        masks = rng.integers(0, 1 << 16, size=50, dtype=np.uint32)
        ident = tuple(range(n))
        swapped = (1, 0, 2, 3)
        got = _transposition_image(masks, 0, 1, n)
        want = [_apply_group_element(int(m), swapped, 0, n) for m in masks]
        assert got.tolist() == want
        got = _translate_image(masks, 0b101, n)
        want = [_apply_group_element(int(m), ident, 0b101, n) for m in masks]
        assert got.tolist() == want

    @given(st.integers(0, (1 << 32) - 1), st.integers(0, (1 << 32) - 1))
    def test_beats_matches_tuple_order(self, a, w):
        arr = np.array([a], dtype=np.uint32)
        assert bool(_beats(arr, w)[0]) == (
            _vertex_tuple(a, 5) < _vertex_tuple(w, 5)
        )

    def test_beats_prefix_edge_cases(self):
        n = 5
        cases = [
            (0b0001, 0b0011),  # (0) vs (0,1): prefix is smaller
            (0b0011, 0b0001),
            (1 << 31, (1 << 31) | 1),  # top vertex involved, wraparound path
            ((1 << 31) | 1, 1 << 31),
            (0, 1),
            (1, 0),  # empty tuple precedes everything
        ]
        for a, w in cases:
            arr = np.array([a], dtype=np.uint32)
            assert bool(_beats(arr, w)[0]) == (
                _vertex_tuple(a, n) < _vertex_tuple(w, n)
            )

    @pytest.mark.parametrize("n", [3, 4])
    def test_walk_min_matches_orbit_expansion(self, n):
        rng = np.random.default_rng(n)
        for _ in range(12):
            k = int(rng.integers(1, 6))
            cands = rng.integers(0, 1 << (1 << n), size=k, dtype=np.uint64)
            cands = np.unique(cands.astype(np.uint32))
            want = min(
                _vertex_tuple(m, n)
                for c in cands
                for m in _full_orbit(int(c), n)
            )
            assert _walk_min_tuple(cands, n) == want


@pytest.mark.skipif(
    not os.environ.get("CUBESTATS_N5"),
    reason="n=5 survivor table takes minutes to build; set CUBESTATS_N5=1",
)
class TestAmbientFive:
    def test_q5_squares_single_point(self):
        val, wit = exhaustive_lambda(5, 2, 1, opt_in_n5=True)
        assert val == Fraction(4, 5)
        assert wit.vertices() == [0, 3, 12, 15, 21, 22, 25, 26]
        assert lambda_of_set(wit, 2, 1) == val

    def test_q5_cubes_single_point(self):
        val, wit = exhaustive_lambda(5, 3, 1, opt_in_n5=True)
        assert val == Fraction(4, 5)
        assert lambda_of_set(wit, 3, 1) == val

    def test_q5_codimension_one_all_perfect(self):
        for s in range(17):
            val, wit = exhaustive_lambda(5, 4, s, opt_in_n5=True)
            assert val == 1
            assert len(wit) == 2 * s
