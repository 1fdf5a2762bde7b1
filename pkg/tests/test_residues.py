"""Binomial sums along residue classes and the constant-subset search."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubestats import (
    DomainError,
    ResidueSumTable,
    binomial,
    q_binsum,
    q_fourier,
    residue_table,
    thm32_q,
    verify_prop31,
    verify_thm32,
)


def _direct(a: int, k: int, d: int) -> int:
    return sum(binomial(d, i) for i in range(d + 1) if i % k == a)


class TestBinsum:
    def test_pinned_values(self):
        assert q_binsum(0, 2, 4) == 8
        assert q_binsum(1, 2, 4) == 8
        assert [q_binsum(a, 3, 4) for a in range(3)] == [5, 5, 6]
        assert q_binsum(0, 1, 5) == 32

    def test_matches_direct_sum(self):
        for k in range(1, 8):
            for d in range(16):
                for a in range(k):
                    assert q_binsum(a, k, d) == _direct(a, k, d)

    @given(st.integers(1, 16), st.integers(0, 64), st.data())
    def test_rows_sum_to_power_of_two(self, k, d, data):
        a = data.draw(st.integers(0, k - 1))
        row = [q_binsum(b, k, d) for b in range(k)]
        assert sum(row) == 1 << d
        assert row[a] >= 0

    @given(st.integers(1, 12), st.integers(1, 48), st.data())
    def test_pascal_recurrence(self, k, d, data):
        a = data.draw(st.integers(0, k - 1))
        assert q_binsum(a, k, d) == q_binsum(a, k, d - 1) + q_binsum(
            (a - 1) % k, k, d - 1
        )

    def test_domain(self):
        with pytest.raises(DomainError):
            q_binsum(3, 3, 4)
        with pytest.raises(DomainError):
            q_binsum(0, 0, 4)
        with pytest.raises(DomainError):
            q_binsum(0, 2, -1)


class TestTable:
    def test_residue_table_contents(self):
        t = residue_table(3, 4)
        assert t.values == (5, 5, 6)
        assert t.to_json()["values"] == ["5", "5", "6"]

    def test_validation(self):
        with pytest.raises(DomainError):
            ResidueSumTable(3, 4, (5, 5))  # wrong length
        with pytest.raises(DomainError):
            ResidueSumTable(3, 4, (5, 5, 7))  # wrong total


class TestFourier:
    def test_matches_exact_on_grid(self):
        for k in range(1, 13):
            for d in range(0, 41, 4):
                for a in range(k):
                    approx = q_fourier(a, k, d)
                    exact = q_binsum(a, k, d)
                    assert abs(approx - exact) <= 5e-3 * (1 + (1 << d)), (a, k, d)

    def test_small_cases_tight(self):
        assert q_fourier(0, 4, 6) == pytest.approx(q_binsum(0, 4, 6), abs=1e-6)


class TestSubsetSums:
    def test_singleton_and_extremes(self):
        for a in range(3):
            assert thm32_q(a, 3, 7, frozenset()) == 0
            assert thm32_q(a, 3, 7, frozenset({0, 1, 2})) == 128

    def test_matches_direct_filter(self):
        for k in range(1, 6):
            for d in range(10):
                for mask in range(1 << k):
                    T = frozenset(t for t in range(k) if (mask >> t) & 1)
                    for a in range(k):
                        want = sum(
                            binomial(d, i)
                            for i in range(d + 1)
                            if (i + a) % k in T
                        )
                        assert thm32_q(a, k, d, T) == want

    def test_subset_validation(self):
        with pytest.raises(DomainError):
            thm32_q(0, 3, 4, frozenset({3}))


class TestNonConstancy:
    def test_holds_on_full_grid(self):
        for d in range(3, 17):
            for k in range(3, d + 1):
                assert verify_prop31(k, d), (k, d)

    def test_out_of_scope_rejected(self):
        with pytest.raises(DomainError):
            verify_prop31(2, 5)
        with pytest.raises(DomainError):
            verify_prop31(5, 4)


class TestConstantSubsetSearch:
    def test_small_modulus_classification(self):
        r = verify_thm32(2, [3])
        assert r.ok
        subsets = {frozenset(c.subset) for c in r.expected}
        assert subsets == {
            frozenset(),
            frozenset({0}),
            frozenset({1}),
            frozenset({0, 1}),
        }
        values = {c.values[0] for c in r.expected}
        assert values == {0, 4, 8}

    def test_odd_modulus_only_trivial_subsets(self):
        r = verify_thm32(3, range(3, 11))
        assert r.ok
        assert {frozenset(c.subset) for c in r.expected} == {
            frozenset(),
            frozenset({0, 1, 2}),
        }

    def test_constant_values_are_the_three_powers(self):
        for k in range(1, 7):
            r = verify_thm32(k, range(1, 13))
            assert r.ok
            for c in r.expected:
                assert len(set(c.values)) == 1
                assert c.values[0] in (0, 1 << (c.d - 1), 1 << c.d)

    def test_parallel_matches_serial(self):
        a = verify_thm32(6, range(6, 10), workers=1)
        b = verify_thm32(6, range(6, 10), workers=2)
        assert a == b

    def test_csv_header(self):
        rows = verify_thm32(2, [4]).csv_rows()
        assert rows[0] == ["k", "d", "T", "values", "verdict"]

    def test_modulus_cap(self):
        with pytest.raises(DomainError):
            verify_thm32(17, [17])
