"""Univariate core: squarefree parts, pole orders, gcd, interpolation."""

from fractions import Fraction as Q

import pytest
from hypothesis import given, settings, strategies as st

from parahiggs.poly import (
    RationalFunction,
    UniPoly,
    interpolate,
    is_squarefree,
    pole_order_at,
    poly_gcd,
    rational_roots,
    root_multiplicity,
    squarefree_part,
)

P = UniPoly.make
RF = RationalFunction.make


def small_polys(max_deg=4, min_deg=0, lo=-4, hi=4):
    return (
        st.lists(st.integers(lo, hi), min_size=min_deg + 1, max_size=max_deg + 1)
        .map(P)
        .filter(lambda p: not p.is_zero)
    )


class TestUniPolyBasics:
    def test_normalization_strips_trailing_zeros(self):
        assert P([1, 2, 0, 0]) == P([1, 2])
        assert P([0, 0]).is_zero
        assert P([]).degree == -1

    def test_ring_ops(self):
        p, q = P([1, 1]), P([-1, 1])  # 1+t, -1+t
        assert p * q == P([-1, 0, 1])
        assert p + q == P([0, 2])
        assert (p - p).is_zero
        assert p ** 3 == P([1, 3, 3, 1])

    def test_divmod(self):
        num = P([-1, 0, 0, 1])  # t^3 - 1
        quo, rem = num.divmod(P([-1, 1]))
        assert quo == P([1, 1, 1])
        assert rem.is_zero
        with pytest.raises(ArithmeticError):
            P([1, 1, 1]).exact_div(P([-1, 1]))

    def test_eval_and_derivative(self):
        p = P([2, 0, 3])  # 2 + 3t^2
        assert p(Q(1, 2)) == Q(11, 4)
        assert p.derivative() == P([0, 6])


class TestGcd:
    def test_known_gcd(self):
        a = P([-1, 1]) * P([2, 1]) * P([2, 1])
        b = P([2, 1]) * P([0, 1])
        assert poly_gcd(a, b) == P([2, 1])

    @given(small_polys(3), small_polys(3), small_polys(2))
    @settings(max_examples=60, deadline=None)
    def test_gcd_divides_both(self, a, b, c):
        a, b = a * c, b * c
        g = poly_gcd(a, b)
        assert a.divmod(g)[1].is_zero
        assert b.divmod(g)[1].is_zero
        # the planted factor divides the gcd
        assert g.divmod(poly_gcd(g, c))[1].is_zero


class TestSquarefreePart:
    def test_strips_double_root(self):
        # t^3 - t^2 -> t^2 - t
        assert squarefree_part(P([0, 0, -1, 1])) == P([0, -1, 1])

    def test_already_squarefree(self):
        p = P([0, -1, 0, 1])  # t^3 - t
        assert squarefree_part(p) == p

    def test_expanded_product(self):
        # (t-1)^2 (t+2) -> (t-1)(t+2), both sides expanded independently
        inp = P([-1, 1]) * P([-1, 1]) * P([2, 1])
        expected = P([-1, 1]) * P([2, 1])
        assert squarefree_part(inp) == expected.monic()

    def test_zero_rejected(self):
        with pytest.raises(ValueError, match="zero input"):
            squarefree_part(UniPoly.zero())

    @given(small_polys(2), small_polys(2))
    @settings(max_examples=60, deadline=None)
    def test_square_invariance(self, p, q):
        # squarefree_part(p^2 q) == squarefree_part(p q) for squarefree coprime p, q
        if not (is_squarefree(p) and is_squarefree(q)):
            return
        if poly_gcd(p, q).degree != 0:
            return
        assert squarefree_part(p * p * q) == squarefree_part(p * q)


class TestRationalRoots:
    def test_cubic(self):
        p = P([0, -1, 0, 1])  # t(t-1)(t+1)
        assert rational_roots(p) == [(Q(-1), 1), (Q(0), 1), (Q(1), 1)]

    def test_multiplicity_and_fractions(self):
        p = P([-1, 2]) ** 2 * P([0, 1]) ** 3  # (2t-1)^2 t^3
        assert rational_roots(p) == [(Q(0), 3), (Q(1, 2), 2)]

    def test_no_rational_roots(self):
        assert rational_roots(P([2, 0, 1])) == []  # t^2 + 2

    def test_root_multiplicity(self):
        p = P([-1, 1]) ** 3 * P([5, 1])
        assert root_multiplicity(p, 1) == 3
        assert root_multiplicity(p, 2) == 0


class TestInterpolate:
    def test_recovers_poly(self):
        p = P([1, -2, 0, Q(1, 3)])
        xs = [0, 1, -1, 2]
        assert interpolate(xs, [p(x) for x in xs]) == p

    @given(small_polys(4))
    @settings(max_examples=40, deadline=None)
    def test_roundtrip(self, p):
        xs = list(range(p.degree + 1))
        assert interpolate(xs, [p(x) for x in xs]) == p


class TestRationalFunction:
    def test_reduction_and_monic_den(self):
        f = RF(P([0, 2]), P([0, 0, 4]))  # 2t / 4t^2 = (1/2)/t
        assert f.num == P([Q(1, 2)])
        assert f.den == P([0, 1])

    def test_arithmetic(self):
        one_over_t = RF(P([1]), P([0, 1]))
        t = RF(P([0, 1]))
        assert (one_over_t * t) == RF(P([1]))
        assert (one_over_t + t).num == P([1, 0, 1])
        assert (t / t) == RF(P([1]))

    def test_pole_orders(self):
        # (t+1)/t^2 at 0 -> 2
        assert pole_order_at(RF(P([1, 1]), P([0, 0, 1])), 0) == 2
        # t^2/t at 0 -> -1 (a zero of order 1)
        assert pole_order_at(RF(P([0, 0, 1]), P([0, 1])), 0) == -1
        # 1/(t^2-1) at 1 -> 1
        assert pole_order_at(RF(P([1]), P([-1, 0, 1])), 1) == 1
        # zero function: regular everywhere
        assert pole_order_at(RationalFunction.zero(), 0) is None

    @given(small_polys(3), small_polys(3), small_polys(3), small_polys(3))
    @settings(max_examples=60, deadline=None)
    def test_pole_order_additive(self, a, b, c, d):
        f, g = RF(a, b), RF(c, d)
        at = Q(0)
        po = pole_order_at(f * g, at)
        if po is None:
            return
        assert po == pole_order_at(f, at) + pole_order_at(g, at)

    def test_json_roundtrip(self):
        f = RF(P([1, Q(-1, 2)]), P([0, 0, 3]))
        assert RationalFunction.from_json(f.to_json()) == f
