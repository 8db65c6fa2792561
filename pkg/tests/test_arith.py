from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qwsed.arith import (
    Integer,
    RatioSqrt,
    Surd,
    Unrecognized,
    find_relation,
    fraction_gcd,
    integer_kernel,
    integer_relation,
    recognize,
    recognize_surd,
    relation_lattice,
    sqrt_class,
    squarefree_split,
    two_adic,
)
from qwsed.errors import TooManyValues, ZeroInput


class TestRecognize:
    def test_examples(self):
        assert recognize(2.00000000003) == Integer(2)
        assert recognize(1.7320508075) == RatioSqrt(1, 1, 3)
        assert recognize(1.1180339) == RatioSqrt(1, 2, 5)

    def test_negative(self):
        assert recognize(-math.sqrt(2)) == RatioSqrt(-1, 1, 2)

    def test_unrecognized(self):
        assert isinstance(recognize(math.pi), Unrecognized)

    @given(st.integers(-100, 100))
    def test_integers_round_trip(self, k):
        assert recognize(float(k)) == Integer(k)

    @given(st.integers(1, 8), st.integers(1, 8), st.sampled_from([2, 3, 5, 6, 7]))
    def test_ratio_sqrt_round_trip(self, p, q, delta):
        g = math.gcd(p, q)
        got = recognize(p / q * math.sqrt(delta))
        assert got == RatioSqrt(p // g, q // g, delta)

    def test_sqrt_class(self):
        assert sqrt_class(16) == Integer(4)
        assert sqrt_class(12) == RatioSqrt(2, 1, 3)
        assert squarefree_split(72) == (6, 2)


class TestTwoAdic:
    @pytest.mark.parametrize("k, nu", [(12, 2), (-2, 1), (7, 0), (1024, 10)])
    def test_examples(self, k, nu):
        assert two_adic(k) == nu

    def test_zero(self):
        with pytest.raises(ZeroInput):
            two_adic(0)


class TestIntegerRelation:
    def test_examples(self):
        assert integer_relation([math.sqrt(2), 2 * math.sqrt(2)], 4, 1e-9) == (2, -1)
        assert integer_relation([1, math.sqrt(2)], 10, 1e-9) is None
        assert integer_relation([1, 2, 3], 3, 1e-9) == (1, 1, -1)

    def test_odd_sum(self):
        assert find_relation([2, 4, 6], 4, 1e-12, odd_sum=True) == (1, 1, -1)
        assert find_relation([2.0, 4.0], 6, 1e-12, odd_sum=True) == (2, -1)
        # every relation of equal values is a multiple of (1, -1), so the sum is even
        assert find_relation([1.0, 1.0], 6, 1e-12, odd_sum=True) is None

    def test_too_many(self):
        with pytest.raises(TooManyValues):
            integer_relation([1.0] * 7, 2, 1e-9)

    @given(st.lists(st.integers(-5, 5), min_size=2, max_size=4), st.integers(1, 4))
    def test_found_relations_hold(self, ints, h):
        vals = [float(x) * math.sqrt(3) for x in ints]
        if not any(vals):
            return
        rel = integer_relation(vals, h, 1e-9)
        if rel is not None:
            assert any(rel) and max(abs(x) for x in rel) <= h
            assert abs(sum(r * v for r, v in zip(rel, vals))) <= 1e-9 * sum(abs(v) for v in vals)
            assert next(x for x in rel if x) > 0


class TestSurds:
    def test_arithmetic(self):
        a = Surd.make([(1, Fraction(1, 2)), (5, Fraction(1, 2))])
        assert abs(float(a) - (1 + math.sqrt(5)) / 2) < 1e-15
        assert (a - a).is_zero
        assert recognize_surd((1 + math.sqrt(5)) / 2) == a

    def test_relation_lattice(self):
        s2 = Surd.make([(2, 1)])
        basis = relation_lattice([s2, Surd.make([(2, 2)]), Surd.rational(1)])
        assert len(basis) == 1 and basis[0] in {(2, -1, 0), (-2, 1, 0)}
        assert relation_lattice([Surd.rational(1), s2]) == []

    @given(st.lists(st.lists(st.integers(-6, 6), min_size=4, max_size=4), min_size=1, max_size=3))
    def test_kernel_is_kernel(self, rows):
        for vec in integer_kernel(rows, 4):
            assert all(sum(r * x for r, x in zip(row, vec)) == 0 for row in rows)

    def test_fraction_gcd(self):
        assert fraction_gcd([Fraction(2, 3), Fraction(4, 9)]) == Fraction(2, 9)
        assert fraction_gcd([]) == 0
