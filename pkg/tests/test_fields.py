import cmath
import random
from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from nctorus.errors import DomainError, ReducibleError, ShapeError
from nctorus.fields import (
    AlgebraicNumber,
    RationalPoly,
    char_poly,
    companion,
    constants_member,
    is_irreducible,
    is_scalar_witness,
    parse_rational,
    roots_numeric,
)

F = Fraction
X = sympy.Symbol("x")

rationals = st.fractions(min_value=-1000, max_value=1000, max_denominator=1000)
monic = st.lists(rationals, min_size=1, max_size=12).map(lambda cs: RationalPoly(tuple(cs)))


def to_sympy(p):
    return sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(p.full)], X)


def poly(*coeffs):
    return RationalPoly(tuple(F(c) for c in coeffs))


SQRT2 = AlgebraicNumber.radical(2, 2)
CBRT2 = AlgebraicNumber.radical(2, 3)


class TestRationalPoly:
    def test_parse_and_print(self):
        assert str(RationalPoly.parse("-1,0")) == "x^2 - 1"
        assert str(RationalPoly.parse('["-7", "2", "0"]')) == "x^3 + 2*x - 7"
        assert str(RationalPoly.parse("1/2,-3/4")) == "x^2 - 3/4*x + 1/2"

    def test_floats_rejected(self):
        with pytest.raises(DomainError):
            parse_rational(0.5)
        with pytest.raises(DomainError):
            RationalPoly.parse("0.5,1")

    def test_degree_zero(self):
        with pytest.raises(DomainError):
            RationalPoly(())

    def test_from_roots(self):
        assert RationalPoly.from_roots([1, -1]) == poly(-1, 0)

    def test_json_round_trip(self):
        p = poly(F(-2, 3), 5, F(1, 7))
        assert RationalPoly.parse(p.to_json()) == p


class TestCompanion:
    def test_linear(self):
        assert companion(poly(F(3, 4))).entries == ((F(-3, 4),),)

    def test_x2_minus_1(self):
        assert companion(poly(-1, 0)).entries == ((0, 1), (1, 0))

    def test_golden(self):
        assert companion(poly(-1, -1)).entries == ((0, 1), (1, 1))

    @given(monic)
    def test_pattern(self, p):
        m = companion(p).entries
        n = p.degree
        for i in range(n):
            for j in range(n):
                if j == n - 1:
                    expected = -p.coeffs[i]
                elif i == j + 1:
                    expected = 1
                else:
                    expected = 0
                assert m[i][j] == expected

    @given(monic)
    def test_trace_det(self, p):
        m = companion(p)
        assert m.trace() == -p.coeffs[-1]
        assert m.det() == (-1) ** p.degree * p.coeffs[0]

    def test_sympy_det_oracle(self):
        p = poly(F(1, 3), -2, 0, F(5, 2))
        m = sympy.Matrix(companion(p).entries)
        assert m.det() == sympy.Rational(1, 3) == companion(p).det()


class TestCharPoly:
    @pytest.mark.parametrize("coeffs, text", [
        ((-1, 0), "x^2 - 1"),
        ((5,), "x + 5"),
        ((-7, 2, 0), "x^3 + 2*x - 7"),
    ])
    def test_examples(self, coeffs, text):
        assert str(char_poly(companion(poly(*coeffs)))) == text

    @settings(max_examples=60, deadline=None)
    @given(monic)
    def test_round_trip(self, p):
        assert char_poly(companion(p)) == p

    def test_sympy_oracle_general_matrix(self):
        rng = random.Random(4)
        for n in (1, 3, 5):
            a = [[F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(n)] for _ in range(n)]
            ref = sympy.Matrix(a).charpoly(X).all_coeffs()
            got = list(reversed(char_poly(a).full))
            assert [sympy.Rational(c.numerator, c.denominator) for c in got] == ref

    def test_not_square(self):
        with pytest.raises(ShapeError):
            char_poly([[1, 2]])


class TestIrreducible:
    @pytest.mark.parametrize("coeffs, expected", [
        ((-2, 0), True),
        ((-1, 0), False),
        ((-2, 0, 0), True),
        ((1, 0, 1, 0), False),  # (x^2 + 1)^2
        ((4, 0, 0, 0), False),  # x^4 + 4 = (x^2 + 2x + 2)(x^2 - 2x + 2)
        ((1, 0, 0, 0), True),   # cyclotomic x^4 + 1, reducible mod every prime
        ((0, 1), False),
        ((F(1, 3), 0, F(-1, 2)), True),
    ])
    def test_examples(self, coeffs, expected):
        assert is_irreducible(poly(*coeffs)) is expected

    @settings(max_examples=80, deadline=None)
    @given(st.lists(st.integers(-20, 20), min_size=1, max_size=8))
    def test_matches_sympy(self, cs):
        p = poly(*cs)
        assert is_irreducible(p) == to_sympy(p).is_irreducible

    def test_products_reducible(self):
        rng = random.Random(11)
        for _ in range(30):
            a = poly(*(rng.randint(-5, 5) for _ in range(rng.randint(1, 4))))
            b = poly(*(rng.randint(-5, 5) for _ in range(rng.randint(1, 4))))
            assert not is_irreducible(a * b)

    def test_degree_cap(self):
        with pytest.raises(DomainError):
            is_irreducible(poly(*([1] + [0] * 12)))


class TestRoots:
    def test_examples(self):
        assert roots_numeric(poly(-1, 0)) == pytest.approx([-1, 1])
        golden = roots_numeric(poly(-1, -1))
        assert golden == pytest.approx([(1 - 5 ** 0.5) / 2, (1 + 5 ** 0.5) / 2], abs=1e-12)
        assert sorted(roots_numeric(poly(1, 0)), key=lambda z: z.imag) == pytest.approx([-1j, 1j])

    @settings(max_examples=60, deadline=None)
    @given(st.lists(st.integers(-50, 50), min_size=1, max_size=10))
    def test_against_numpy(self, cs):
        p = poly(*cs)
        if to_sympy(p).sqf_part().degree() != p.degree:
            return  # repeated roots are ill-conditioned for both
        got = np.array(roots_numeric(p))
        ref = np.roots(p.as_floats())
        # greedy matching
        for r in ref:
            k = np.argmin(np.abs(got - r))
            assert abs(got[k] - r) < 1e-6 * max(1, abs(r))
            got = np.delete(got, k)

    @settings(max_examples=60, deadline=None)
    @given(monic.filter(lambda p: p.degree <= 8))
    def test_residual_bound(self, p):
        tol = 1e-10
        scale = 1 + max(abs(float(c)) for c in p.coeffs)
        for r in roots_numeric(p, tol):
            assert abs(p(complex(r))) < tol * scale * max(1, abs(r)) ** p.degree

    def test_unit_disc_plain_bound(self):
        # all roots of unity: the plain bound tol*(1 + max|c|) applies
        p = poly(-1, *([0] * 6))
        for r in roots_numeric(p, 1e-12):
            assert abs(p(r)) < 1e-12 * 2

    def test_conjugate_closed(self):
        rs = roots_numeric(poly(3, -1, 0, 2, 1))
        for r in rs:
            assert min(abs(r.conjugate() - s) for s in rs) < 1e-10


class TestAlgebraicNumber:
    def test_radicals(self):
        assert SQRT2.degree == 2 and abs(SQRT2.center - 2 ** 0.5) < 1e-14
        assert CBRT2.degree == 3 and abs(CBRT2.center - 2 ** (1 / 3)) < 1e-14

    def test_reducible_rejected(self):
        with pytest.raises(ReducibleError):
            AlgebraicNumber(poly(-4, 0))

    def test_isolating_discs(self):
        p = poly(-2, 0, 0, 0, 0)
        roots = [AlgebraicNumber(p, i) for i in range(5)]
        for a in roots:
            assert a.radius < 1e-10
            # disc contains a true root
            assert min(abs(a.center - 2 ** 0.2 * cmath.exp(2j * cmath.pi * k / 5)) for k in range(5)) <= a.radius
        for a in roots:
            for b in roots:
                if a.index < b.index:
                    assert abs(a.center - b.center) > a.radius + b.radius

    def test_near(self):
        assert AlgebraicNumber.near(poly(-2, 0), -1.4).center == pytest.approx(-2 ** 0.5)

    def test_index_range(self):
        with pytest.raises(DomainError):
            AlgebraicNumber(poly(-2, 0), 2)


class TestWitness:
    def test_examples(self):
        assert is_scalar_witness(SQRT2, poly(-2, 0))
        assert not is_scalar_witness(AlgebraicNumber.rational(1), poly(-2, 0))
        assert is_scalar_witness(SQRT2, poly(2, -2, -1))

    @settings(max_examples=40, deadline=None)
    @given(st.lists(rationals, min_size=1, max_size=4))
    def test_multiplication_invariance(self, cs):
        q = RationalPoly(tuple(cs))
        assert is_scalar_witness(SQRT2, poly(-2, 0) * q)
        assert is_scalar_witness(SQRT2, poly(-5, 0) * q) == is_scalar_witness(SQRT2, q)


class TestConstantsMember:
    def test_examples(self):
        assert not constants_member(SQRT2, 1) and constants_member(SQRT2, 2)
        assert not constants_member(CBRT2, 2) and constants_member(CBRT2, 3)
        seven_thirds = AlgebraicNumber.rational(F(7, 3))
        assert all(constants_member(seven_thirds, n) for n in range(1, 10))

    def test_bad_n(self):
        with pytest.raises(DomainError):
            constants_member(SQRT2, 0)

    def test_padding_witness(self):
        # a member of degree d < n is a root of the degree-n polynomial minpoly * x^(n-d)
        for n in range(2, 6):
            padded = poly(-2, 0) * poly(*([0] * (n - 2))) if n > 2 else poly(-2, 0)
            assert padded.degree == n and is_scalar_witness(SQRT2, padded)

    def test_zero_root_counts(self):
        # companion matrices with c0 = 0 are not excluded
        assert constants_member(AlgebraicNumber.rational(0), 1)

    @given(st.integers(1, 6), st.integers(1, 8))
    def test_monotone(self, k, n):
        a = AlgebraicNumber.radical(3, k) if k > 1 else AlgebraicNumber.rational(3)
        if constants_member(a, n):
            assert constants_member(a, n + 1)
        assert constants_member(a, n) == (k <= n)
