"""Occupancy distributions: reference counter, bit-parallel version, layered."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubestats import (
    DomainError,
    LambdaBounds,
    LayeredSpec,
    SubcubeDistribution,
    VertexSet,
    distribution,
    distribution_fast,
    lambda_of_set,
    layered_distribution,
    layered_set,
    parity_set,
    subcube_count,
)


@st.composite
def vertex_sets(draw, max_n=7):
    n = draw(st.integers(0, max_n))
    mask = draw(st.integers(0, (1 << (1 << n)) - 1))
    return VertexSet(n, mask)


class TestDistribution:
    def test_single_vertex_on_edges(self):
        A = VertexSet.from_vertices(2, [0])
        dist = distribution(A, 1)
        assert dist.counts == (2, 2, 0)
        assert dist.total == 4

    def test_diagonal_pair_hits_every_edge_once(self):
        A = VertexSet.from_vertices(2, [0, 3])
        assert distribution(A, 1).counts == (0, 4, 0)
        assert lambda_of_set(A, 1, 1) == 1

    def test_parity_set_balances_squares(self):
        A = parity_set(4)
        dist = distribution_fast(A, 2)
        assert dist.counts[2] == dist.total == 24

    def test_empty_set(self):
        dist = distribution_fast(VertexSet.empty(3), 2)
        assert dist.counts[0] == dist.total == subcube_count(3, 2)

    def test_fraction_and_lambda_agree(self):
        A = VertexSet.from_vertices(3, [0, 1, 6])
        dist = distribution(A, 2)
        for s in range(5):
            assert dist.fraction(s) == lambda_of_set(A, 2, s)

    def test_d_out_of_range(self):
        with pytest.raises(DomainError):
            distribution(VertexSet.empty(2), 3)
        with pytest.raises(DomainError):
            distribution_fast(VertexSet.empty(2), -1)

    @given(vertex_sets(), st.data())
    @settings(max_examples=60, deadline=None)
    def test_fast_matches_reference(self, A, data):
        d = data.draw(st.integers(0, A.n))
        assert distribution_fast(A, d) == distribution(A, d)

    @given(vertex_sets(), st.data())
    @settings(max_examples=60, deadline=None)
    def test_complement_reverses_counts(self, A, data):
        d = data.draw(st.integers(0, A.n))
        dist = distribution_fast(A, d)
        comp = distribution_fast(A.complement(), d)
        assert comp.counts == dist.counts[::-1]


class TestLayered:
    @given(st.integers(1, 8), st.data())
    @settings(max_examples=40, deadline=None)
    def test_matches_materialized_set(self, n, data):
        d = data.draw(st.integers(0, n))
        k = data.draw(st.integers(1, 6))
        T = frozenset(data.draw(st.sets(st.integers(0, k - 1))))
        spec = LayeredSpec(k, T)
        assert layered_distribution(n, d, spec) == distribution_fast(
            layered_set(n, spec), d
        )

    def test_mod3_zero_class(self):
        spec = LayeredSpec(3, frozenset({0}))
        dist = layered_distribution(4, 2, spec)
        assert dist.fraction(1) == Fraction(3, 4)

    def test_scales_past_materializable_sizes(self):
        spec = LayeredSpec(2, frozenset({0}))
        dist = layered_distribution(120, 3, spec)
        assert dist.total == subcube_count(120, 3)
        # even-weight selector balances every 3-subcube: half in, half out
        assert dist.counts[4] == dist.total

    def test_full_and_empty_selectors(self):
        every = layered_distribution(6, 2, LayeredSpec(1, frozenset({0})))
        assert every.counts[4] == every.total
        none = layered_distribution(6, 2, LayeredSpec(1, frozenset()))
        assert none.counts[0] == none.total

    def test_spec_validation(self):
        with pytest.raises(DomainError):
            LayeredSpec(0, frozenset())
        with pytest.raises(DomainError):
            LayeredSpec(3, frozenset({3}))


class TestContainers:
    def test_distribution_json_roundtrip(self):
        dist = distribution_fast(VertexSet.from_vertices(3, [0, 5]), 2)
        assert SubcubeDistribution.from_json(dist.to_json()) == dist

    def test_distribution_validation(self):
        with pytest.raises(DomainError):
            SubcubeDistribution(2, 1, (1, 1), 2)  # wrong counts length
        with pytest.raises(DomainError):
            SubcubeDistribution(2, 1, (1, 1, 1), 4)  # bad total

    def test_bounds_ordering_enforced(self):
        with pytest.raises(DomainError):
            LambdaBounds(2, 1, Fraction(3, 4), Fraction(2, 3), "x", "generic")
        b = LambdaBounds(2, 1, Fraction(2, 3), Fraction(3, 4), "x", "generic")
        assert b.to_json()["lower"] == "2/3"
