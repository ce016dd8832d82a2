from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from curvefoundry.polyring import (
    RatPoly,
    classify_cm,
    cm_polynomial,
    compose,
    cyclotomic,
    eval_at,
    factor_q,
    integrality_residues,
    inverse_mod,
    is_irreducible_q,
    poly_gcd,
    ratpoly_from_json,
    ratpoly_to_json,
    ResidueFilter,
    squarefree_decomposition,
)

X = RatPoly.x()

BN_Q = RatPoly.from_list([1, 6, 24, 36, 36])
BN_R = RatPoly.from_list([1, 6, 18, 36, 36])
BN_T = RatPoly.from_list([1, 0, 6])


def rationals():
    return st.fractions(
        max_denominator=6,
        min_value=Fraction(-9),
        max_value=Fraction(9),
    )


def polys(max_deg=5):
    return st.lists(rationals(), min_size=0, max_size=max_deg + 1).map(RatPoly.from_list)


class TestRingOps:
    def test_division_example(self):
        q, r = divmod(X * X - 1, X - 1)
        assert q == X + 1
        assert r.is_zero()

    def test_gcd_example(self):
        assert poly_gcd(X**4 - 1, X**2 - 1) == (X**2 - 1).monic()

    def test_compose_bn_cyclotomic(self):
        c = compose(cyclotomic(12), RatPoly.monomial(6, 2))
        assert c == RatPoly.from_list([1, 0, 0, 0, -36, 0, 0, 0, 1296])
        # equals r_BN(u) * r_BN(-u), checked by plain multiplication
        assert (c - BN_R * BN_R.shift_scale(-1)).is_zero()

    def test_divide_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            divmod(X, RatPoly.zero())

    @given(polys(), polys(), polys())
    @settings(max_examples=120, deadline=None)
    def test_ring_axioms(self, a, b, c):
        assert (a + b) * c == a * c + b * c
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a
        assert a - a == RatPoly.zero()

    @given(polys(3), polys(3))
    @settings(max_examples=60, deadline=None)
    def test_divmod_reconstructs(self, a, b):
        if b.is_zero():
            return
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.degree < b.degree

    @given(polys(3), polys(2), st.integers(min_value=-8, max_value=8))
    @settings(max_examples=80, deadline=None)
    def test_compose_commutes_with_eval(self, p, q, u):
        assert eval_at(compose(p, q), u) == eval_at(p, eval_at(q, u))

    def test_inverse_mod(self):
        # (2x^2 - 1) is sqrt(-3) in Q[x]/Phi12; its inverse times itself is 1
        s = RatPoly.from_list([-1, 0, 2])
        inv = inverse_mod(s, cyclotomic(12))
        assert (s * inv) % cyclotomic(12) == RatPoly.one()


class TestCyclotomic:
    def test_small(self):
        assert cyclotomic(1) == RatPoly.from_list([-1, 1])
        assert cyclotomic(12) == RatPoly.from_list([1, 0, -1, 0, 1])

    def test_k54(self):
        phi = cyclotomic(54)
        assert phi.degree == 18
        assert phi == RatPoly.from_list([1] + [0] * 8 + [-1] + [0] * 8 + [1])

    def test_product_identity_up_to_60(self):
        for k in range(1, 61):
            prod = RatPoly.one()
            for d in range(1, k + 1):
                if k % d == 0:
                    prod = prod * cyclotomic(d)
            assert prod == RatPoly.from_list([-1] + [0] * (k - 1) + [1]), k


class TestEval:
    def test_bn_at_one(self):
        assert eval_at(BN_R, 1) == 97
        assert eval_at(BN_Q, 1) == 103

    def test_constant_term(self):
        p = RatPoly.from_list([Fraction(7, 3), 1, 5])
        assert eval_at(p, 0) == Fraction(7, 3)


class TestIntegralityResidues:
    def test_integer_poly(self):
        assert integrality_residues(BN_Q, 2) == frozenset({0, 1})

    def test_brezing_weng_odd_k(self):
        # leading 1/4 family: integral exactly at odd x
        k = 5
        coeffs = [Fraction(0)] * (2 * k + 5)
        for e, c in [(2 * k + 4, 1), (2 * k + 2, 2), (2 * k, 1), (4, 1), (2, -2), (0, 1)]:
            coeffs[e] = Fraction(c, 4)
        q = RatPoly.from_list(coeffs)
        assert integrality_residues(q, 2) == frozenset({1})

    def test_kss16_is_proper_subset(self):
        kss16_q = RatPoly.from_list(
            [Fraction(n, 980) for n in [3125, 2398, 625, 0, 240, 152, 48, 0, 5, 2, 1]]
        )
        for mult in (1, 2, 3):
            res = integrality_residues(kss16_q, 980 * mult)
            assert 0 < len(res) < 980 * mult

    def test_residue_filter_matches_direct_scan(self):
        kss16_q = RatPoly.from_list(
            [Fraction(n, 980) for n in [3125, 2398, 625, 0, 240, 152, 48, 0, 5, 2, 1]]
        )
        filt = ResidueFilter.for_polys([kss16_q])
        direct = integrality_residues(kss16_q, 980)
        for u in range(980):
            assert filt.admits(u) == (u in direct)


class TestIrreducibility:
    def test_examples(self):
        assert is_irreducible_q(cyclotomic(12))
        assert not is_irreducible_q(X**2 - 1)
        assert is_irreducible_q(BN_R)

    def test_matches_sympy_on_random_polys(self):
        import random

        x = sp.symbols("x")
        rng = random.Random(5)
        for _ in range(60):
            deg = rng.randrange(1, 7)
            coeffs = [rng.randrange(-6, 7) for _ in range(deg)] + [rng.randrange(1, 7)]
            p = RatPoly.from_list(coeffs)
            sp_poly = sp.Poly(list(reversed(coeffs)), x)
            factors = sp_poly.factor_list()[1]
            sp_irred = len(factors) == 1 and factors[0][1] == 1
            assert is_irreducible_q(p) == sp_irred, coeffs

    def test_factor_q_reconstructs(self):
        import random

        rng = random.Random(9)
        for _ in range(30):
            deg = rng.randrange(1, 7)
            coeffs = [rng.randrange(-5, 6) for _ in range(deg)] + [rng.randrange(1, 6)]
            p = RatPoly.from_list(coeffs)
            const, factors = factor_q(p)
            prod = RatPoly.from_list([const])
            for fac, mult in factors:
                assert is_irreducible_q(fac)
                prod = prod * fac**mult
            assert prod == p, coeffs


class TestCmClassification:
    def test_bn_is_cfd_3(self):
        f = cm_polynomial(BN_Q, BN_T)
        assert f == RatPoly.from_list([3, 24, 84, 144, 108])
        cm = classify_cm(f)
        assert cm.kind == "CFD"
        assert cm.D == 3
        assert cm.y == RatPoly.from_list([1, 4, 6])
        assert (3 * cm.y * cm.y - f).is_zero()

    def test_bls12_identity(self):
        # q = (u-1)^2 (u^4-u^2+1)/3 + u, t = u+1: 3*(4q - t^2) = ((u-1)(2u^2-1))^2
        q = (X - 1) ** 2 * cyclotomic(12) * Fraction(1, 3) + X
        t = X + 1
        f = cm_polynomial(q, t)
        lhs = 3 * f
        rhs = ((X - 1) * (2 * X**2 - 1)) ** 2
        assert (lhs - rhs).is_zero()
        cm = classify_cm(f)
        assert cm.kind == "CFD" and cm.D == 3
        assert (cm.y - (X - 1) * (2 * X**2 - 1) * Fraction(1, 3)).is_zero()

    def test_constant_trace(self):
        q = BN_R + 1
        f = cm_polynomial(q, RatPoly.from_list([2]))
        assert f == 4 * q - 4

    def test_freeman_sparse(self):
        f = RatPoly.from_list([3, 10, 15])
        cm = classify_cm(f)
        assert cm.kind == "Sparse"
        assert cm.g == f
        assert cm.y == RatPoly.one()

    def test_cvd_shape(self):
        y = RatPoly.from_list([1, 6, 0, 54, 81])
        f = X * y * y
        cm = classify_cm(f)
        assert cm.kind == "CVD"
        assert (cm.g * cm.y * cm.y - f).is_zero()

    @given(polys(2), polys(2))
    @settings(max_examples=40, deadline=None)
    def test_classification_reconstructs(self, a, b):
        f = a * a * b
        if f.is_zero():
            return
        cm = classify_cm(f)
        assert (cm.g * cm.y * cm.y - f).is_zero()

    def test_squarefree_decomposition(self):
        p = (X - 1) ** 3 * (X + 2) ** 2 * (X**2 + 1)
        const, decomp = squarefree_decomposition(p)
        rebuilt = RatPoly.from_list([const])
        for fac, mult in decomp:
            rebuilt = rebuilt * fac**mult
        assert rebuilt == p
        assert sorted(e for _, e in decomp) == [1, 2, 3]


class TestJson:
    def test_round_trip(self):
        p = RatPoly.from_list([Fraction(-3, 980), 0, Fraction(5, 2), 7])
        data = ratpoly_to_json(p)
        assert data == [["-3", "980"], ["0", "1"], ["5", "2"], ["7", "1"]]
        assert ratpoly_from_json(data) == p
