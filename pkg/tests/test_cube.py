"""Vertex sets, subcubes, and the subcube enumerator."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubestats import (
    CapabilityError,
    DomainError,
    MASK_CAP,
    Subcube,
    VertexSet,
    binomial,
    enumerate_subcubes,
    subcube_count,
    subcube_vertices,
)


def test_binomial_matches_math_comb():
    for n in range(12):
        for k in range(-1, n + 2):
            assert binomial(n, k) == (math.comb(n, k) if 0 <= k <= n else 0)


class TestVertexSet:
    def test_from_vertices_roundtrip(self):
        A = VertexSet.from_vertices(3, [0, 3, 5])
        assert A.vertices() == [0, 3, 5]
        assert len(A) == 3
        assert 3 in A and 4 not in A

    def test_empty_and_full(self):
        assert len(VertexSet.empty(4)) == 0
        assert len(VertexSet.full(4)) == 16
        assert VertexSet.full(0).vertices() == [0]

    def test_complement(self):
        A = VertexSet.from_vertices(2, [0, 3])
        assert A.complement().vertices() == [1, 2]
        assert A.complement().complement() == A

    def test_symmetric_difference(self):
        A = VertexSet.from_vertices(3, [0, 1, 2])
        B = VertexSet.from_vertices(3, [2, 3])
        assert A.symmetric_difference(B).vertices() == [0, 1, 3]

    def test_json_roundtrip(self):
        A = VertexSet.from_vertices(4, [1, 2, 7, 15])
        assert VertexSet.from_json(A.to_json()) == A
        assert A.to_json() == {"n": 4, "vertices": [1, 2, 7, 15]}

    def test_json_rejects_unsorted(self):
        with pytest.raises(DomainError):
            VertexSet.from_json({"n": 3, "vertices": [2, 1]})

    def test_rejects_out_of_range(self):
        with pytest.raises(DomainError):
            VertexSet.from_vertices(2, [4])
        with pytest.raises(CapabilityError):
            VertexSet(MASK_CAP + 1, 0)

    @given(st.integers(0, 6), st.data())
    def test_complement_partitions(self, n, data):
        verts = data.draw(st.sets(st.integers(0, (1 << n) - 1)))
        A = VertexSet.from_vertices(n, verts)
        assert len(A) + len(A.complement()) == 1 << n
        assert A.symmetric_difference(A.complement()) == VertexSet.full(n)


class TestSubcube:
    def test_canonical_base_required(self):
        with pytest.raises(DomainError):
            Subcube(3, free=0b011, base=0b001)

    def test_dimension_and_vertices(self):
        q = Subcube(3, free=0b101, base=0b010)
        assert q.dimension == 2
        assert subcube_vertices(q) == [2, 3, 6, 7]
        assert all(v in q for v in (2, 3, 6, 7))
        assert 0 not in q

    def test_vertex_mask(self):
        q = Subcube(3, free=0b101, base=0b010)
        assert q.vertex_mask() == sum(1 << v for v in (2, 3, 6, 7))

    def test_intersects(self):
        a = Subcube(3, free=0b001, base=0b000)  # x00
        b = Subcube(3, free=0b100, base=0b001)  # 0x1 shares vertex 001
        c = Subcube(3, free=0b001, base=0b110)  # x11 disjoint from a
        assert a.intersects(b) and b.intersects(a)
        assert not a.intersects(c)
        assert a.intersects(a)

    @given(st.integers(1, 5), st.data())
    def test_intersects_matches_vertex_masks(self, n, data):
        full = (1 << n) - 1
        f1 = data.draw(st.integers(0, full))
        f2 = data.draw(st.integers(0, full))
        b1 = data.draw(st.integers(0, full)) & ~f1
        b2 = data.draw(st.integers(0, full)) & ~f2
        p, q = Subcube(n, f1, b1), Subcube(n, f2, b2)
        assert p.intersects(q) == bool(p.vertex_mask() & q.vertex_mask())


class TestEnumeration:
    def test_counts(self):
        for n in range(7):
            for d in range(n + 1):
                cubes = list(enumerate_subcubes(n, d))
                assert len(cubes) == subcube_count(n, d)
                assert len(cubes) == binomial(n, d) << (n - d)
                assert len(set(cubes)) == len(cubes)
                assert all(c.dimension == d for c in cubes)

    def test_edges_of_q3(self):
        edges = [subcube_vertices(q) for q in enumerate_subcubes(3, 1)]
        assert len(edges) == 12
        # every edge joins vertices at Hamming distance 1
        assert all(bin(u ^ v).count("1") == 1 for u, v in edges)

    def test_each_vertex_in_binomial_many_subcubes(self):
        n, d = 5, 2
        tally = [0] * (1 << n)
        for q in enumerate_subcubes(n, d):
            for v in subcube_vertices(q):
                tally[v] += 1
        assert all(t == binomial(n, d) for t in tally)

    def test_degenerate_dimensions(self):
        assert subcube_count(4, 0) == 16
        assert subcube_count(4, 4) == 1
        assert list(enumerate_subcubes(0, 0)) == [Subcube(0, 0, 0)]

    def test_out_of_range(self):
        with pytest.raises(DomainError):
            subcube_count(3, 4)
        with pytest.raises(DomainError):
            list(enumerate_subcubes(2, -1))
