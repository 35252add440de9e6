"""Sklyanin algebra relations, the U-infinity relation and the Jacobi curve.

Relations are stored as ``LHS - RHS`` in the generator order they are
written, with generators printed as ``x1 ... x4``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .errors import (
    DomainError,
    InvalidParametersError,
    PoleError,
    ShapeError,
    SingularParameterError,
    UnderdeterminedError,
    UnsupportedError,
)
from .ncpoly import NcPolynomial, gen, substitute
from .torus import rho_of_theta

__all__ = [
    "SklyaninParams",
    "RelationSet",
    "ProjectivePoint3",
    "solve_gamma",
    "sklyanin_relations",
    "u_infinity_relations",
    "torus_relations",
    "check_relations",
    "jacobi_coeffs",
    "on_curve",
]

PARAM_TOL = 1e-12
# below this |1 + alpha*beta| counts as zero
SINGULAR_TOL = 1e-14


@dataclass(frozen=True)
class SklyaninParams:
    alpha: complex
    beta: complex
    gamma: complex

    def __post_init__(self):
        for f in ("alpha", "beta", "gamma"):
            object.__setattr__(self, f, complex(getattr(self, f)))

    @property
    def residual(self) -> float:
        a, b, g = self.alpha, self.beta, self.gamma
        return abs(a + b + g + a * b * g)

    @property
    def is_valid(self) -> bool:
        return self.residual < PARAM_TOL

    @classmethod
    def from_alpha_beta(cls, alpha: complex, beta: complex) -> "SklyaninParams":
        return cls(alpha, beta, solve_gamma(alpha, beta))

    @classmethod
    def from_json(cls, text: str) -> "SklyaninParams":
        """``{"alpha": [re, im], "beta": [re, im], "gamma": [re, im] | "auto"}``."""
        data = json.loads(text)
        try:
            a, b = _cpx(data["alpha"]), _cpx(data["beta"])
            g = data.get("gamma", "auto")
        except (KeyError, TypeError, AttributeError) as exc:
            raise DomainError("expected alpha, beta and gamma keys") from exc
        if g == "auto":
            return cls.from_alpha_beta(a, b)
        return cls(a, b, _cpx(g))

    def to_json(self) -> str:
        return json.dumps({k: [v.real, v.imag] for k, v in
                           (("alpha", self.alpha), ("beta", self.beta), ("gamma", self.gamma))})


def _cpx(v) -> complex:
    if isinstance(v, (list, tuple)) and len(v) == 2:
        return complex(float(v[0]), float(v[1]))
    if isinstance(v, (int, float)):
        return complex(v)
    raise DomainError(f"expected a complex number as [re, im], got {v!r}")


def solve_gamma(alpha: complex, beta: complex) -> complex:
    """``gamma = -(alpha + beta) / (1 + alpha*beta)``."""
    alpha, beta = complex(alpha), complex(beta)
    den = 1 + alpha * beta
    if abs(den) <= SINGULAR_TOL:
        if abs(alpha + beta) <= SINGULAR_TOL:
            raise UnderdeterminedError(
                "1 + alpha*beta = 0 and alpha + beta = 0: every gamma satisfies the constraint"
            )
        raise SingularParameterError("1 + alpha*beta = 0: no finite gamma")
    return -(alpha + beta) / den


@dataclass(frozen=True)
class RelationSet:
    name: str
    n_gens: int
    relations: tuple

    def __post_init__(self):
        object.__setattr__(self, "relations", tuple(self.relations))
        for r in self.relations:
            if r.n_gens > self.n_gens:
                raise DomainError(f"relation {r} uses more than {self.n_gens} generators")

    def __len__(self):
        return len(self.relations)

    def to_strings(self, symbol: str = "x") -> list[str]:
        return [r.to_string(symbol) for r in self.relations]


def _x(*idx: int) -> NcPolynomial:
    return NcPolynomial.word(*((i, 1) for i in idx))


def sklyanin_relations(p: SklyaninParams) -> RelationSet:
    """The six quadratic relations of ``S(alpha, beta, gamma)``."""
    if not p.is_valid:
        raise InvalidParametersError(
            f"alpha + beta + gamma + alpha*beta*gamma has modulus {p.residual:.3g} >= {PARAM_TOL}"
        )
    a, b, g = p.alpha, p.beta, p.gamma
    rels = [
        _x(1, 2) - _x(2, 1) - a * (_x(3, 4) + _x(4, 3)),
        _x(1, 2) + _x(2, 1) - (_x(3, 4) - _x(4, 3)),
        _x(1, 3) - _x(3, 1) - b * (_x(4, 2) + _x(2, 4)),
        _x(1, 3) + _x(3, 1) - (_x(4, 2) - _x(2, 4)),
        _x(1, 4) - _x(4, 1) - g * (_x(2, 3) + _x(3, 2)),
        _x(1, 4) + _x(4, 1) - (_x(2, 3) - _x(3, 2)),
    ]
    return RelationSet("sklyanin", 4, rels)


def u_infinity_relations() -> RelationSet:
    """``x1 x2 - x2 x1 - x1^2``."""
    return RelationSet("u_infinity", 2, [_x(1, 2) - _x(2, 1) - _x(1, 1)])


def torus_relations(theta) -> RelationSet:
    """``x2 x1 - exp(2 pi i theta) x1 x2`` for the 2-generator torus."""
    rho = rho_of_theta(theta)
    return RelationSet("torus", 2, [gen(2) * gen(1) - rho * (gen(1) * gen(2))])


def check_relations(rs: RelationSet, mats, tol: float = 1e-12) -> tuple[bool, float]:
    """Substitute ``mats`` for the generators and measure every relation.

    Returns ``(ok, max_residual)`` where residuals are spectral norms and
    ``ok`` means every residual is below ``tol``.
    """
    mats = [np.asarray(m, dtype=complex) for m in mats]
    if len(mats) != rs.n_gens:
        raise ShapeError(f"{rs.name} needs {rs.n_gens} matrices, got {len(mats)}")
    for r in rs.relations:
        if r.has_inverse():
            raise UnsupportedError(f"relation {r.to_string('x')} contains an inverse letter")
    worst = 0.0
    for r in rs.relations:
        worst = max(worst, float(np.linalg.norm(substitute(r, mats, allow_inverse=False), 2)))
    return worst < tol, worst


@dataclass(frozen=True)
class ProjectivePoint3:
    u: complex
    v: complex
    w: complex
    z: complex

    def __post_init__(self):
        for f in ("u", "v", "w", "z"):
            object.__setattr__(self, f, complex(getattr(self, f)))
        if not any(self.coords):
            raise DomainError("projective point cannot have all coordinates zero")

    @property
    def coords(self) -> tuple[complex, complex, complex, complex]:
        return self.u, self.v, self.w, self.z

    def scaled(self, lam: complex) -> "ProjectivePoint3":
        if lam == 0:
            raise DomainError("scale must be nonzero")
        return ProjectivePoint3(*(lam * c for c in self.coords))

    @classmethod
    def from_json(cls, text: str) -> "ProjectivePoint3":
        data = json.loads(text)
        if not isinstance(data, list) or len(data) != 4:
            raise ShapeError("expected four [re, im] pairs")
        return cls(*(_cpx(c) for c in data))


def jacobi_coeffs(p: SklyaninParams) -> tuple[complex, complex]:
    """``((1 - alpha)/(1 + beta), (1 + alpha)/(1 - gamma))``."""
    bad = []
    if p.beta == -1:
        bad.append("c1")
    if p.gamma == 1:
        bad.append("c2")
    if bad:
        raise PoleError(bad)
    return (1 - p.alpha) / (1 + p.beta), (1 + p.alpha) / (1 - p.gamma)


def on_curve(p: SklyaninParams, pt: ProjectivePoint3, tol: float = 1e-12) -> bool:
    """Whether ``pt`` lies on both quadrics of the Jacobi-form curve.

    Residuals are divided by the largest squared coordinate modulus so the
    verdict does not depend on the representative of ``pt``.
    """
    c1, c2 = jacobi_coeffs(p)
    u, v, w, z = pt.coords
    s = max(abs(c) for c in pt.coords) ** 2
    first = abs(u * u + v * v + w * w + z * z)
    second = abs(c1 * v * v + c2 * w * w + z * z)
    return first < tol * s and second < tol * s
