"""Companion matrices and the degree-bounded field of constants over Q.

A scalar matrix ``c*I`` equals a companion matrix exactly when ``c`` is a
root of its characteristic polynomial, so the constants realised inside
``n x n`` matrices over Q are the algebraic numbers of degree at most ``n``.
Everything on the exact path uses :class:`fractions.Fraction`.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Sequence

import numpy as np

from . import _modp
from .errors import DomainError, NonConvergenceError, ReducibleError, ShapeError

__all__ = [
    "RationalPoly",
    "CompanionMatrix",
    "AlgebraicNumber",
    "companion",
    "char_poly",
    "is_irreducible",
    "roots_numeric",
    "is_scalar_witness",
    "constants_member",
    "parse_rational",
    "MAX_IRREDUCIBLE_DEGREE",
]

MAX_IRREDUCIBLE_DEGREE = 12
_PRIMES = (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73)
# skip the rational-root screen when divisor enumeration would be expensive
_RATIONAL_ROOT_LIMIT = 10**12


def parse_rational(v) -> Fraction:
    """Exact rational from an int, a Fraction or a ``"p/q"`` / integer string."""
    if isinstance(v, bool) or isinstance(v, float):
        raise DomainError(f"expected an exact rational, got float {v!r}")
    if isinstance(v, (int, Fraction)):
        return Fraction(v)
    if isinstance(v, str):
        s = v.strip()
        if "." in s or "e" in s.lower():
            raise DomainError(f"expected p/q, got {v!r}")
        try:
            return Fraction(s)
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"not a rational: {v!r}") from exc
    raise DomainError(f"not a rational: {v!r}")


def _fmt_q(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


@dataclass(frozen=True)
class RationalPoly:
    """Monic ``x^n + c_(n-1) x^(n-1) + ... + c_0``; ``coeffs`` holds ``c_0 .. c_(n-1)``."""

    coeffs: tuple

    def __post_init__(self):
        cs = tuple(parse_rational(c) for c in self.coeffs)
        if not cs:
            raise DomainError("a monic polynomial needs degree >= 1")
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def from_full(cls, full: Sequence) -> "RationalPoly":
        """From all coefficients low to high; divides through by the leading one."""
        full = [parse_rational(c) for c in full]
        while full and full[-1] == 0:
            full.pop()
        if len(full) < 2:
            raise DomainError("degree must be at least 1")
        lead = full[-1]
        return cls(tuple(c / lead for c in full[:-1]))

    @classmethod
    def from_roots(cls, roots: Sequence) -> "RationalPoly":
        full = [Fraction(1)]
        for r in roots:
            full = _pmul(full, [-parse_rational(r), Fraction(1)])
        return cls.from_full(full)

    @classmethod
    def parse(cls, text: str) -> "RationalPoly":
        """``"-1,0"`` or ``'["-1", "0"]'``: the lower coefficients, low to high."""
        s = text.strip()
        if s.startswith("["):
            items = json.loads(s)
        else:
            items = [t for t in s.split(",") if t.strip()]
        return cls(tuple(parse_rational(c) for c in items))

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    @property
    def full(self) -> list[Fraction]:
        return list(self.coeffs) + [Fraction(1)]

    def __call__(self, x):
        acc = type(x)(1) if not isinstance(x, Fraction) else Fraction(1)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __mul__(self, other: "RationalPoly") -> "RationalPoly":
        if not isinstance(other, RationalPoly):
            return NotImplemented
        return RationalPoly.from_full(_pmul(self.full, other.full))

    def divmod(self, other: "RationalPoly") -> tuple[list[Fraction], list[Fraction]]:
        """Quotient and remainder, both as low-to-high coefficient lists."""
        return _pdivmod(self.full, other.full)

    def is_divisible_by(self, other: "RationalPoly") -> bool:
        return not self.divmod(other)[1]

    def __str__(self) -> str:
        parts = []
        for k, c in reversed(list(enumerate(self.full))):
            if c == 0:
                continue
            mag = abs(c)
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if not mono:
                body = _fmt_q(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{_fmt_q(mag)}*{mono}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def to_json(self) -> str:
        return json.dumps([_fmt_q(c) for c in self.coeffs])

    def as_floats(self) -> np.ndarray:
        """All coefficients, high to low, as floats (``numpy.polyval`` order)."""
        return np.array([float(c) for c in reversed(self.full)])


def _pmul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _pdivmod(a, b):
    a = list(a)
    while b and b[-1] == 0:
        b = b[:-1]
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        c = a[-1] / b[-1]
        k = len(a) - len(b)
        q[k] = c
        for i, bc in enumerate(b):
            a[k + i] -= c * bc
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return q, a


@dataclass(frozen=True)
class CompanionMatrix:
    n: int
    entries: tuple

    def trace(self) -> Fraction:
        return sum((self.entries[i][i] for i in range(self.n)), Fraction(0))

    def det(self) -> Fraction:
        return _det(self.entries)

    def to_json(self) -> str:
        return json.dumps([[_fmt_q(v) for v in row] for row in self.entries])


def companion(p: RationalPoly) -> CompanionMatrix:
    """Frobenius companion matrix: ones on the subdiagonal, ``-c_i`` down the last column."""
    if not isinstance(p, RationalPoly):
        raise DomainError("companion needs a monic RationalPoly")
    n = p.degree
    m = [[Fraction(0)] * n for _ in range(n)]
    for i in range(1, n):
        m[i][i - 1] = Fraction(1)
    for i, c in enumerate(p.coeffs):
        m[i][n - 1] = -c
    return CompanionMatrix(n, tuple(tuple(r) for r in m))


def char_poly(m) -> RationalPoly:
    """``det(xI - m)`` by the Faddeev-LeVerrier recurrence in exact arithmetic.

    Accepts a :class:`CompanionMatrix` or any square matrix of rationals.
    """
    rows = m.entries if isinstance(m, CompanionMatrix) else m
    a = [[parse_rational(v) for v in row] for row in rows]
    n = len(a)
    if n == 0 or any(len(r) != n for r in a):
        raise ShapeError("char_poly needs a non-empty square matrix")
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    mk = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_(k-1) + c_(n-k+1) I ;  c_(n-k) = -tr(A M_k) / k
        mk = _matmul(a, mk)
        for i in range(n):
            mk[i][i] += coeffs[n - k + 1]
        am = _matmul(a, mk)
        coeffs[n - k] = -sum((am[i][i] for i in range(n)), Fraction(0)) / k
    return RationalPoly(tuple(coeffs[:n]))


def _matmul(a, b):
    # row-by-row with zero entries of a skipped; companion matrices are sparse
    n = len(a)
    out = []
    for row in a:
        acc = [Fraction(0)] * n
        for k, v in enumerate(row):
            if v:
                bk = b[k]
                for j in range(n):
                    acc[j] += v * bk[j]
        out.append(acc)
    return out


def _det(rows) -> Fraction:
    a = [[Fraction(v) for v in r] for r in rows]
    n, det = len(a), Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            if f:
                for k in range(c, n):
                    a[r][k] -= f * a[c][k]
    return det


# -- irreducibility -------------------------------------------------------------

def _primitive_int(p: RationalPoly) -> list[int]:
    full = p.full
    den = reduce(lambda x, y: x * y // math.gcd(x, y), (c.denominator for c in full), 1)
    ints = [int(c * den) for c in full]
    g = reduce(math.gcd, ints)
    return [c // g for c in ints]


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _has_rational_root(f: list[int]) -> bool | None:
    if f[0] == 0:
        return True
    if abs(f[0]) > _RATIONAL_ROOT_LIMIT or abs(f[-1]) > _RATIONAL_ROOT_LIMIT:
        return None
    for a in _divisors(f[0]):
        for b in _divisors(f[-1]):
            if math.gcd(a, b) != 1:
                continue
            for s in (a, -a):
                # sum f_i s^i b^(n-i) == 0  <=>  f(s/b) == 0
                n = len(f) - 1
                if sum(c * s**i * b ** (n - i) for i, c in enumerate(f)) == 0:
                    return True
    return False


def is_irreducible(p: RationalPoly) -> bool:
    """Irreducibility over Q for degree <= 12.

    Screens for rational roots, then looks for a prime modulo which ``p``
    stays irreducible; if neither settles it, falls back to a full
    factorisation.
    """
    n = p.degree
    if n > MAX_IRREDUCIBLE_DEGREE:
        raise DomainError(f"irreducibility test supports degree <= {MAX_IRREDUCIBLE_DEGREE}, got {n}")
    if n == 1:
        return True
    f = _primitive_int(p)
    rr = _has_rational_root(f)
    if rr:
        return False
    if rr is False and n <= 3:
        return True
    for q in _PRIMES:
        if f[-1] % q and _modp.is_irreducible(f, q):
            return True
    return _sympy_irreducible(f)


def _sympy_irreducible(f: list[int]) -> bool:
    import sympy

    x = sympy.Symbol("x")
    factors = sympy.Poly(list(reversed(f)), x, domain="ZZ").factor_list()[1]
    return len(factors) == 1 and factors[0][1] == 1


# -- numeric roots --------------------------------------------------------------

def roots_numeric(p: RationalPoly, tol: float = 1e-12, max_iter: int = 500) -> list[complex]:
    """All ``n`` roots by Aberth-Ehrlich simultaneous iteration.

    Each returned root ``r`` satisfies
    ``|p(r)| < tol * (1 + max|c_i|) * max(1, |r|)**n``; for roots inside the
    unit disc that is the plain residual bound. Initial guesses are fixed
    points on a circle, so results are deterministic. Roots are returned
    sorted by real then imaginary part.
    """
    if tol <= 0:
        raise DomainError("tol must be positive")
    c = p.as_floats()
    n = p.degree
    scale = 1 + max(abs(float(v)) for v in p.coeffs)
    if n == 1:
        return [complex(-float(p.coeffs[0]))]
    dc = np.polyder(c)
    radius = max(abs(float(p.coeffs[0])) ** (1 / n), 0.5)
    z = radius * np.exp(1j * (2 * np.pi * np.arange(n) / n + 0.4))
    for _ in range(max_iter):
        pz = np.polyval(c, z)
        bound = tol * scale * np.maximum(1.0, np.abs(z)) ** n
        if np.all(np.abs(pz) < bound):
            break
        ratio = pz / np.polyval(dc, z)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1)
        inv = 1 / diff
        np.fill_diagonal(inv, 0)
        w = ratio / (1 - ratio * inv.sum(axis=1))
        w = np.where(np.isfinite(w), w, 0)
        z = z - w
        if np.all(np.abs(w) <= 4 * np.finfo(float).eps * np.maximum(np.abs(z), 1)):
            break
    pz = np.polyval(c, z)
    bound = tol * scale * np.maximum(1.0, np.abs(z)) ** n
    if not np.all(np.abs(pz) < bound):
        raise NonConvergenceError(f"root iteration did not reach tolerance for {p}", best=list(z))
    roots = [complex(v) for v in z]
    # real input: snap near-real roots and pair conjugates
    roots = [complex(r.real, 0.0) if abs(r.imag) <= tol * max(1.0, abs(r)) else r for r in roots]
    return sorted(roots, key=lambda r: (round(r.real, 9), r.imag))


def _exact_eval(full: list[Fraction], z: complex) -> tuple[Fraction, Fraction]:
    zr, zi = Fraction(z.real), Fraction(z.imag)
    ar, ai = Fraction(0), Fraction(0)
    for c in reversed(full):
        ar, ai = ar * zr - ai * zi + c, ar * zi + ai * zr
    return ar, ai


@lru_cache(maxsize=256)
def _isolated_roots(p: RationalPoly) -> tuple[tuple[complex, float], ...]:
    """Roots with disjoint inclusion discs ``n|p(z_i)| / prod|z_i - z_j|``.

    Disjoint discs each contain exactly one root, which certifies isolation.
    ``p`` is evaluated exactly at the float centres.
    """
    if p.degree == 1:
        return ((complex(-float(p.coeffs[0])), 0.0),)
    try:
        zs = roots_numeric(p, tol=1e-14)
    except NonConvergenceError:
        zs = roots_numeric(p)
    n = len(zs)
    out = []
    for i, zi in enumerate(zs):
        re, im = _exact_eval(p.full, zi)
        num = math.hypot(float(re), float(im))
        den = math.prod(abs(zi - zj) for j, zj in enumerate(zs) if j != i)
        if den == 0:
            raise NonConvergenceError(f"coincident root approximations for {p}", best=zs)
        out.append((zi, n * num / den * (1 + 1e-9) + 1e-300))
    for i, (zi, ri) in enumerate(out):
        for j, (zj, rj) in enumerate(out):
            if i < j and abs(zi - zj) <= ri + rj:
                raise NonConvergenceError(f"could not isolate the roots of {p}", best=zs)
    return tuple(out)


@dataclass(frozen=True)
class AlgebraicNumber:
    """A root of an irreducible monic ``minpoly`` picked out by index.

    ``index`` refers to the sorted root list of :func:`roots_numeric`;
    ``center`` and ``radius`` describe a disc containing that root and no
    other.
    """

    minpoly: RationalPoly
    index: int = 0

    def __post_init__(self):
        if not is_irreducible(self.minpoly):
            raise ReducibleError(f"{self.minpoly} is reducible over Q")
        if not 0 <= self.index < self.minpoly.degree:
            raise DomainError(f"root index {self.index} out of range")

    @classmethod
    def near(cls, minpoly: RationalPoly, approx: complex) -> "AlgebraicNumber":
        """The root of ``minpoly`` closest to ``approx``."""
        roots = _isolated_roots(minpoly)
        idx = min(range(len(roots)), key=lambda i: abs(roots[i][0] - approx))
        return cls(minpoly, idx)

    @classmethod
    def rational(cls, x) -> "AlgebraicNumber":
        return cls(RationalPoly((-parse_rational(x),)))

    @classmethod
    def radical(cls, a, k: int) -> "AlgebraicNumber":
        """Real positive ``a**(1/k)``; ``x^k - a`` must be irreducible."""
        a = parse_rational(a)
        return cls.near(RationalPoly((-a,) + (Fraction(0),) * (k - 1)), float(a) ** (1 / k))

    @property
    def degree(self) -> int:
        return self.minpoly.degree

    @property
    def center(self) -> complex:
        return _isolated_roots(self.minpoly)[self.index][0]

    @property
    def radius(self) -> float:
        return _isolated_roots(self.minpoly)[self.index][1]

    def __complex__(self) -> complex:
        return self.center


def is_scalar_witness(c: AlgebraicNumber, p: RationalPoly) -> bool:
    """Whether ``c`` is a root of ``p``, i.e. ``c.minpoly`` divides ``p`` exactly."""
    return p.is_divisible_by(c.minpoly)


def constants_member(c: AlgebraicNumber, n: int) -> bool:
    """Whether ``c`` lies in the field of constants of ``n x n`` matrices over Q.

    That field consists of the roots of degree-``n`` rational polynomials,
    so membership is ``deg(minpoly) <= n``.
    """
    if n < 1:
        raise DomainError("n must be >= 1")
    return c.degree <= n
