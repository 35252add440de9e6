"""Torus parameters: skew matrices, rational angles and the 2-d classifier.

Angles are measured in full turns throughout, so ``theta = 1`` is one
revolution and the commutation phase is ``exp(2*pi*i*theta)``.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Sequence, Union

import numpy as np

from .errors import DomainError, GridMismatchError, ShapeError

__all__ = [
    "SkewMatrix",
    "RationalAngle",
    "TorusPoint",
    "validate_skew",
    "rho_of_theta",
    "param_count",
    "k0_rank",
    "isom_2d",
    "fiber_count",
    "parse_angle",
    "DEFAULT_ISOM_TOL",
]

DEFAULT_ISOM_TOL = 1e-12
SKEW_FLOAT_TOL = 1e-15
UNIT_TOL = 1e-12
K0_MAX_N = 63


@dataclass(frozen=True)
class RationalAngle:
    """Reduced fraction ``p/q`` taken modulo one, normalised to ``0 <= p < q``."""

    p: int
    q: int = 1

    def __post_init__(self):
        p, q = int(self.p), int(self.q)
        if q <= 0:
            raise DomainError(f"denominator must be positive, got {q}")
        g = math.gcd(p, q)
        p, q = p // g, q // g
        object.__setattr__(self, "p", p % q)
        object.__setattr__(self, "q", q)

    @classmethod
    def from_fraction(cls, x) -> "RationalAngle":
        x = Fraction(x)
        return cls(x.numerator, x.denominator)

    @classmethod
    def parse(cls, text: str) -> "RationalAngle":
        """Parse ``"p/q"`` or an integer string."""
        num, _, den = text.strip().partition("/")
        try:
            return cls(int(num), int(den) if den else 1)
        except ValueError as exc:
            raise DomainError(f"not a rational angle: {text!r}") from exc

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.p, self.q)

    def __float__(self) -> float:
        return self.p / self.q

    @property
    def rho(self) -> complex:
        return rho_of_theta(self)

    def __neg__(self) -> "RationalAngle":
        return RationalAngle(-self.p, self.q)

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


Angle = Union[RationalAngle, Fraction, int, float]


def parse_angle(text: str) -> Angle:
    """``"p/q"`` parses to an exact :class:`RationalAngle`, anything else to float."""
    if "/" in text:
        return RationalAngle.parse(text)
    try:
        return RationalAngle(int(text))
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError as exc:
        raise DomainError(f"not an angle: {text!r}") from exc


def _exact(theta) -> Fraction | None:
    if isinstance(theta, RationalAngle):
        return theta.fraction
    if isinstance(theta, (Rational, Fraction)) and not isinstance(theta, bool):
        return Fraction(theta)
    return None


def rho_of_theta(theta: Angle) -> complex:
    """Unit complex number ``exp(2*pi*i*theta)``."""
    exact = _exact(theta)
    # reduce mod 1 first so large angles keep full precision
    t = float(exact % 1) if exact is not None else math.fmod(float(theta), 1.0)
    if not math.isfinite(t):
        raise DomainError(f"angle must be finite, got {theta!r}")
    return cmath.exp(2j * math.pi * t)


@dataclass(frozen=True)
class SkewMatrix:
    """Skew-symmetric parameter matrix of an ``n``-generator torus.

    Entries may be :class:`~fractions.Fraction` (exact) or float. Construction
    does not enforce skew-symmetry; use :func:`validate_skew`.
    """

    n: int
    entries: tuple

    @classmethod
    def from_array(cls, rows) -> "SkewMatrix":
        rows = [list(r) for r in rows]
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ShapeError(f"expected a square matrix, got row lengths {[len(r) for r in rows]}")
        return cls(n, tuple(tuple(r) for r in rows))

    @classmethod
    def from_upper(cls, n: int, upper: Sequence) -> "SkewMatrix":
        """Build from the strictly-upper entries in row-major order."""
        if n < 1:
            raise DomainError("n must be at least 1")
        upper = list(upper)
        if len(upper) != n * (n - 1) // 2:
            raise ShapeError(f"n={n} needs {n * (n - 1) // 2} upper entries, got {len(upper)}")
        zero = Fraction(0) if all(_exact(u) is not None for u in upper) else 0.0
        m = [[zero] * n for _ in range(n)]
        it = iter(upper)
        for i in range(n):
            for j in range(i + 1, n):
                v = next(it)
                m[i][j] = v
                m[j][i] = -v
        return cls(n, tuple(tuple(r) for r in m))

    @property
    def upper(self) -> list:
        return [self.entries[i][j] for i in range(self.n) for j in range(i + 1, self.n)]

    def to_numpy(self) -> np.ndarray:
        return np.array([[float(v) for v in row] for row in self.entries])

    def torus_point(self) -> "TorusPoint":
        return TorusPoint(tuple(rho_of_theta(t) for t in self.upper))

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "upper": [_angle_json(v) for v in self.upper]})

    @classmethod
    def from_json(cls, text: str) -> "SkewMatrix":
        data = json.loads(text)
        if isinstance(data, list):
            return cls.from_array([[_angle_from_json(v) for v in row] for row in data])
        try:
            n, upper = int(data["n"]), data["upper"]
        except (KeyError, TypeError) as exc:
            raise DomainError('expected {"n": int, "upper": [...]}') from exc
        return cls.from_upper(n, [_angle_from_json(v) for v in upper])


def _angle_json(v):
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, RationalAngle):
        return str(v)
    return float(v)


def _angle_from_json(v):
    if isinstance(v, str):
        try:
            return Fraction(v)
        except ValueError as exc:
            raise DomainError(f"not a rational: {v!r}") from exc
    if isinstance(v, int):
        return Fraction(v)
    return float(v)


def validate_skew(m) -> bool:
    """True iff ``m`` is skew-symmetric with zero diagonal.

    Exact entries are compared exactly; floats within ``1e-15``.
    """
    if not isinstance(m, SkewMatrix):
        m = SkewMatrix.from_array(m)
    n = m.n
    if len(m.entries) != n or any(len(r) != n for r in m.entries):
        raise ShapeError("matrix is not square")
    for i in range(n):
        for j in range(i, n):
            a, b = m.entries[i][j], m.entries[j][i]
            ea, eb = _exact(a), _exact(b)
            if ea is not None and eb is not None:
                if ea != -eb:
                    return False
            elif not (math.isfinite(a) and math.isfinite(b)) or abs(a + b) >= SKEW_FLOAT_TOL:
                return False
    # count of strictly-upper entries is n(n-1)/2 by construction of `upper`
    return len(m.upper) == n * (n - 1) // 2


@dataclass(frozen=True)
class TorusPoint:
    """Commutation phases ``rho_ij``, one per strictly-upper entry."""

    values: tuple

    def __post_init__(self):
        vals = tuple(complex(v) for v in self.values)
        for v in vals:
            if abs(abs(v) - 1.0) > UNIT_TOL:
                raise DomainError(f"torus point coordinate {v} is not unit modulus")
        object.__setattr__(self, "values", vals)

    @property
    def genus(self) -> int | None:
        """``g`` with ``len(values) == g(2g-1)``, or None if no such g."""
        k = len(self.values)
        g = round((1 + math.sqrt(1 + 8 * k)) / 4)
        return g if g >= 1 and g * (2 * g - 1) == k else None


def param_count(g: int | None = None, *, n: int | None = None) -> int:
    """Number of real parameters of the torus.

    ``param_count(g)`` gives ``g(2g-1)`` for ``n = 2g`` generators;
    ``param_count(n=n)`` counts strictly-upper entries ``n(n-1)/2`` directly.
    """
    if (g is None) == (n is None):
        raise TypeError("pass exactly one of g or n")
    if g is not None:
        if g < 1:
            raise DomainError(f"genus must be >= 1, got {g}")
        return g * (2 * g - 1)
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    return n * (n - 1) // 2


def k0_rank(n: int) -> int:
    """Rank ``2**(n-1)`` of K0 of the n-dimensional noncommutative torus."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if n > K0_MAX_N:
        raise OverflowError(f"k0_rank supports n <= {K0_MAX_N}, got {n}")
    return 1 << (n - 1)


def isom_2d(theta: Angle, theta_prime: Angle, tol: float = DEFAULT_ISOM_TOL) -> bool:
    """Whether the 2-d tori at ``theta`` and ``theta_prime`` are isomorphic.

    The criterion is ``theta' = +-theta (mod 1)``. Two exact inputs are
    compared exactly and ``tol`` is ignored; otherwise both are reduced to
    ``[0, 1)`` and compared by circular distance.
    """
    a, b = _exact(theta), _exact(theta_prime)
    if a is not None and b is not None:
        return (a - b) % 1 == 0 or (a + b) % 1 == 0
    if tol < 0:
        raise DomainError("tol must be non-negative")
    x, y = float(theta), float(theta_prime)
    if not (math.isfinite(x) and math.isfinite(y)):
        raise DomainError("angles must be finite")
    return _circle_dist(x - y) <= tol or _circle_dist(x + y) <= tol


def _circle_dist(t: float) -> float:
    r = t % 1.0
    return min(r, 1.0 - r)


def fiber_count(theta: RationalAngle, grid_q: int) -> int:
    """Number of grid angles ``k/grid_q`` isomorphic to ``theta``."""
    if not isinstance(theta, RationalAngle):
        theta = RationalAngle.from_fraction(theta)
    if grid_q < 1:
        raise DomainError("grid_q must be positive")
    if grid_q % theta.q:
        raise GridMismatchError(f"denominator {theta.q} does not divide grid size {grid_q}")
    # on the grid, k ~ theta iff k = +-p*(grid_q/q) mod grid_q
    k = theta.p * (grid_q // theta.q)
    return 1 if (2 * k) % grid_q == 0 else 2
