import cmath

import numpy as np
import pytest
from hypothesis import given, strategies as st

from nctorus.errors import (
    InvalidParametersError,
    PoleError,
    ShapeError,
    SingularParameterError,
    UnderdeterminedError,
    UnsupportedError,
)
from nctorus.ncpoly import NcPolynomial, gen, parse
from nctorus.representation import build_rep
from nctorus.sklyanin import (
    ProjectivePoint3,
    RelationSet,
    SklyaninParams,
    check_relations,
    jacobi_coeffs,
    on_curve,
    sklyanin_relations,
    solve_gamma,
    torus_relations,
    u_infinity_relations,
)
from nctorus.torus import RationalAngle

P = SklyaninParams
finite = st.floats(-50, 50, allow_nan=False, allow_infinity=False)
cplx = st.builds(complex, finite, finite)


def x(*idx):
    return NcPolynomial.word(*((i, 1) for i in idx))


class TestSolveGamma:
    def test_zero(self):
        assert solve_gamma(0, 0) == 0

    def test_underdetermined(self):
        with pytest.raises(UnderdeterminedError):
            solve_gamma(1, -1)

    def test_singular(self):
        # 1 + alpha*beta = 0 with alpha + beta = 2i
        with pytest.raises(SingularParameterError) as info:
            solve_gamma(1j, 1j)
        assert not isinstance(info.value, UnderdeterminedError)

    def test_one_one(self):
        assert solve_gamma(1, 1) == -1
        assert P(1, 1, -1).residual == 0

    @given(cplx, cplx)
    def test_output_satisfies_constraint(self, a, b):
        if abs(1 + a * b) < 1e-3:
            return
        g = solve_gamma(a, b)
        scale = 1 + abs(a) + abs(b) + abs(g) + abs(a * b * g)
        assert P(a, b, g).residual < 1e-14 * scale

    def test_from_alpha_beta(self):
        p = P.from_alpha_beta(0.5, 2j)
        assert p.is_valid

    def test_json(self):
        p = P.from_json('{"alpha": [1, 0], "beta": [1, 0], "gamma": "auto"}')
        assert p == P(1, 1, -1)
        assert P.from_json(p.to_json()) == p


class TestRelations:
    def test_zero_params(self):
        rs = sklyanin_relations(P(0, 0, 0))
        assert list(rs.relations[0::2]) == [x(1, 2) - x(2, 1), x(1, 3) - x(3, 1), x(1, 4) - x(4, 1)]
        # the other three open with an anticommutator
        for (i, j), r in zip([(1, 2), (1, 3), (1, 4)], rs.relations[1::2]):
            assert r.terms[:2] == (x(i, j) + x(j, i)).terms

    def test_count_and_degree(self):
        for p in (P(0, 0, 0), P(1, 1, -1), P.from_alpha_beta(0.3, -2j)):
            rs = sklyanin_relations(p)
            assert len(rs) == 6 and rs.n_gens == 4
            assert all(len(w) == 2 for r in rs.relations for _, w in r.terms)

    def test_beta_minus_one_family(self):
        rs = sklyanin_relations(P(1, -1, 5))
        assert rs.relations[2] == x(1, 3) - x(3, 1) + (x(4, 2) + x(2, 4))
        assert rs.to_strings()[2] == "x1x3 - x3x1 + x4x2 + x2x4"

    def test_invalid(self):
        with pytest.raises(InvalidParametersError):
            sklyanin_relations(P(1, 1, 1))

    @given(cplx)
    def test_family_always_valid(self, g):
        assert P(1, -1, g).residual == 0

    def test_family_fuzz(self):
        rng = np.random.default_rng(0)
        gs = rng.normal(size=1000) * 10 + 1j * rng.normal(size=1000) * 10
        assert all(P(1, -1, g).is_valid for g in gs)

    def test_generator_bound(self):
        with pytest.raises(Exception):
            RelationSet("bad", 2, [gen(3)])


class TestCheckRelations:
    def test_u_infinity_kills_x1(self):
        m = np.random.default_rng(3).normal(size=(3, 3))
        assert check_relations(u_infinity_relations(), [np.zeros((3, 3)), m]) == (True, 0.0)

    def test_u_infinity_identity(self):
        ok, res = check_relations(u_infinity_relations(), [np.eye(4), np.eye(4)])
        assert not ok and res == 1.0

    def test_u_infinity_nilpotent(self):
        # x1 = e12, x2 = diag(0, 1): x1x2 = e12, x2x1 = 0, x1^2 = 0
        x1 = np.array([[0, 1], [0, 0]])
        assert check_relations(u_infinity_relations(), [x1, np.diag([0, 1])])[1] == pytest.approx(1)
        # a central x2 leaves x1x2 - x2x1 = 0 = x1^2
        assert check_relations(u_infinity_relations(), [x1, np.eye(2)])[0]

    def test_zero_tuple_sklyanin(self):
        z = np.zeros((2, 2))
        assert check_relations(sklyanin_relations(P(1, 1, -1)), [z] * 4) == (True, 0.0)

    def test_torus_preset_against_rep(self):
        theta = RationalAngle(2, 7)
        rep = build_rep(theta, cmath.exp(0.4j), cmath.exp(1.3j))
        ok, res = check_relations(torus_relations(theta), rep.mats)
        assert ok and res < 1e-13

    def test_commuting_scalars_solve_zero_params(self):
        # at alpha=beta=gamma=0 the relations say x_i x_j = 0 = x_j x_i for i != j
        rs = sklyanin_relations(P(0, 0, 0))
        d = [np.diag(v) for v in ([1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1])]
        assert check_relations(rs, d)[0]
        assert not check_relations(rs, [np.eye(2)] * 4)[0]

    def test_shape_errors(self):
        with pytest.raises(ShapeError):
            check_relations(u_infinity_relations(), [np.eye(2)])
        with pytest.raises(ShapeError):
            check_relations(u_infinity_relations(), [np.eye(2), np.eye(3)])

    def test_inverse_rejected(self):
        with pytest.raises(UnsupportedError):
            check_relations(RelationSet("inv", 1, [gen(1, -1)]), [np.eye(2)])

    @given(st.floats(0.01, 1), st.integers(0, 2**32 - 1))
    def test_scale_covariance(self, lam, seed):
        rng = np.random.default_rng(seed)
        mats = [rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3)) for _ in range(4)]
        rs = sklyanin_relations(P.from_alpha_beta(0.7, -0.2 + 0.1j))
        _, r0 = check_relations(rs, mats)
        ok1, r1 = check_relations(rs, [lam * m for m in mats], tol=r0 * 1.01 + 1e-300)
        assert r1 == pytest.approx(lam**2 * r0, rel=1e-9)
        assert ok1


class TestJacobi:
    def test_zero(self):
        assert jacobi_coeffs(P(0, 0, 0)) == (1, 1)

    def test_one_one(self):
        assert jacobi_coeffs(P(1, 1, -1)) == (0, 1)

    def test_pole_c1(self):
        with pytest.raises(PoleError) as info:
            jacobi_coeffs(P(0, -1, 0.5))
        assert "c1" in str(info.value) and "c2" not in str(info.value)

    def test_pole_c2(self):
        with pytest.raises(PoleError, match="c2"):
            jacobi_coeffs(P(-1, 0, 1))

    def test_pole_both(self):
        with pytest.raises(PoleError) as info:
            jacobi_coeffs(P(1, -1, 1))
        assert "c1" in str(info.value) and "c2" in str(info.value)


class TestOnCurve:
    def test_examples(self):
        p = P(0, 0, 0)
        assert on_curve(p, ProjectivePoint3(0, 1, 1j, 0))
        assert not on_curve(p, ProjectivePoint3(1, 0, 0, 0))

    def test_zero_point(self):
        with pytest.raises(Exception):
            ProjectivePoint3(0, 0, 0, 0)

    def test_pole_propagates(self):
        with pytest.raises(PoleError):
            on_curve(P(0, -1, 0), ProjectivePoint3(1, 0, 0, 0))

    def test_constructed_point(self):
        # pick v, w, solve z from the second form and u from the first
        p = P.from_alpha_beta(0.3, 0.5 + 0.2j)
        c1, c2 = jacobi_coeffs(p)
        v, w = 1.2 - 0.3j, 0.7j
        z = cmath.sqrt(-(c1 * v * v + c2 * w * w))
        u = cmath.sqrt(-(v * v + w * w + z * z))
        assert on_curve(p, ProjectivePoint3(u, v, w, z))
        assert not on_curve(p, ProjectivePoint3(u, v, w, 2 * z))

    @given(cplx.filter(lambda c: abs(c) > 1e-6), st.booleans())
    def test_projective_invariance(self, lam, good):
        p = P(1, 1, -1)
        pt = ProjectivePoint3(1, 1j, 1, 1j) if good else ProjectivePoint3(1, 2, 0, 1)
        assert on_curve(p, pt) == on_curve(p, pt.scaled(lam)) == good
        assert on_curve(p, pt) == on_curve(p, pt.scaled(3))

    def test_json(self):
        pt = ProjectivePoint3.from_json("[[0, 0], [1, 0], [0, 1], [0, 0]]")
        assert pt == ProjectivePoint3(0, 1, 1j, 0)


def test_relation_text_round_trip():
    rs = sklyanin_relations(P.from_alpha_beta(0.25, 2))
    for s, r in zip(rs.to_strings(), rs.relations):
        assert parse(s, symbol="x") == r
