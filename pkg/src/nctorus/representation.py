"""Clock-and-shift representations of the rational rotation algebra.

At ``theta = p/q`` every irreducible representation is a ``q x q`` pair

    U1 = z1 * diag(1, w, ..., w^(q-1)),   U2 = z2 * S,   w = exp(2 pi i p/q),

with ``S e_j = e_(j-1 mod q)`` and boundary phases ``z1, z2`` on the unit
circle, so that ``U2 U1 = w U1 U2``. The universal norm of a polynomial is the
supremum over ``(z1, z2)``; :func:`norm_estimate` approximates it from below
on a grid of roots of unity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import DomainError, UnsupportedRankError
from .ncpoly import NcPolynomial, substitute
from .torus import RationalAngle

__all__ = [
    "TwistedRep",
    "NormResult",
    "clock_matrix",
    "shift_matrix",
    "build_rep",
    "evaluate",
    "spectral_norm",
    "norm_estimate",
    "converge_norm",
    "matrix_algebra_dim",
    "commutation_residual",
    "DEFAULT_TOL",
    "DEFAULT_GRID_START",
    "DEFAULT_GRID_CAP",
]

UNIT_TOL = 1e-12
DEFAULT_TOL = 1e-9
DEFAULT_GRID_START = 8
DEFAULT_GRID_CAP = 4096
# dense SVD up to this size, power iteration above
SVD_MAX_DIM = 64
POWER_RTOL = 1e-13
# complex entries per batch when evaluating a phase grid
_CHUNK_ENTRIES = 1 << 22


def clock_matrix(theta: RationalAngle) -> np.ndarray:
    q = theta.q
    return np.diag(np.exp(2j * np.pi * theta.p * np.arange(q) / q))


def shift_matrix(q: int) -> np.ndarray:
    # S e_j = e_{j-1 mod q}
    return np.roll(np.eye(q, dtype=complex), -1, axis=0)


def _as_angle(theta) -> RationalAngle:
    return theta if isinstance(theta, RationalAngle) else RationalAngle.from_fraction(theta)


@dataclass(frozen=True, eq=False)
class TwistedRep:
    q: int
    p: int
    z1: complex
    z2: complex
    U1: np.ndarray
    U2: np.ndarray

    @property
    def theta(self) -> RationalAngle:
        return RationalAngle(self.p, self.q)

    @property
    def mats(self) -> tuple[np.ndarray, np.ndarray]:
        return self.U1, self.U2

    def to_dict(self) -> dict:
        def enc(m):
            return [[[float(v.real), float(v.imag)] for v in row] for row in m]

        return {
            "p": self.p,
            "q": self.q,
            "z1": [self.z1.real, self.z1.imag],
            "z2": [self.z2.real, self.z2.imag],
            "U1": enc(self.U1),
            "U2": enc(self.U2),
        }


def build_rep(theta, z1: complex = 1, z2: complex = 1) -> TwistedRep:
    """Twisted clock/shift pair of dimension ``theta.q``."""
    theta = _as_angle(theta)
    z1, z2 = complex(z1), complex(z2)
    for name, z in (("z1", z1), ("z2", z2)):
        if abs(abs(z) - 1.0) > UNIT_TOL:
            raise DomainError(f"{name} = {z} is not unit modulus")
    U1 = z1 * clock_matrix(theta)
    U2 = z2 * shift_matrix(theta.q)
    U1.flags.writeable = False
    U2.flags.writeable = False
    return TwistedRep(theta.q, theta.p, z1, z2, U1, U2)


def commutation_residual(rep: TwistedRep) -> float:
    """Spectral norm of ``U2 U1 - exp(2 pi i p/q) U1 U2``."""
    w = np.exp(2j * np.pi * rep.p / rep.q)
    return float(np.linalg.norm(rep.U2 @ rep.U1 - w * rep.U1 @ rep.U2, 2))


def _check_rank(x: NcPolynomial):
    if x.n_gens > 2:
        raise UnsupportedRankError(f"only U1, U2 are represented; polynomial uses U{x.n_gens}")


def evaluate(x: NcPolynomial, rep: TwistedRep) -> np.ndarray:
    """Matrix of ``x`` in ``rep``; inverse letters become adjoints."""
    _check_rank(x)
    return substitute(x, [rep.U1, rep.U2])


def spectral_norm(a: np.ndarray, rtol: float = POWER_RTOL, max_iter: int = 20000) -> np.ndarray:
    """Largest singular value of each matrix in a ``(..., d, d)`` stack.

    Dense SVD for ``d <= 64``; otherwise power iteration on ``A^H A`` until
    the Rayleigh quotient settles to ``rtol``, with SVD for any stragglers.
    """
    a = np.asarray(a, dtype=complex)
    single = a.ndim == 2
    if single:
        a = a[None]
    d = a.shape[-1]
    if d <= SVD_MAX_DIM:
        out = np.linalg.svd(a, compute_uv=False)[..., 0]
    else:
        out = _power_norms(a.reshape(-1, d, d), rtol, max_iter).reshape(a.shape[:-2])
    return out[0] if single else out


def _power_norms(a: np.ndarray, rtol: float, max_iter: int) -> np.ndarray:
    rng = np.random.default_rng(0)
    b, d, _ = a.shape
    v = rng.standard_normal((b, d)) + 1j * rng.standard_normal((b, d))
    v /= np.linalg.norm(v, axis=1, keepdims=True)
    ah = np.conj(np.swapaxes(a, 1, 2))
    lam = np.zeros(b)
    done = np.zeros(b, dtype=bool)
    for _ in range(max_iter):
        w = np.einsum("bij,bj->bi", ah, np.einsum("bij,bj->bi", a, v))
        new = np.linalg.norm(w, axis=1)
        zero = new == 0
        done |= zero | (np.abs(new - lam) <= rtol * new)
        lam = new
        v = np.where(zero[:, None], v, w / np.where(zero, 1, new)[:, None])
        if done.all():
            break
    if not done.all():
        idx = ~done
        lam[idx] = np.linalg.svd(a[idx], compute_uv=False)[:, 0] ** 2
    return np.sqrt(lam)


def _phase_decomposition(x: NcPolynomial, theta: RationalAngle):
    """Split ``x(z1 C, z2 S) = sum z1^a z2^b A_ab`` with phase-free ``A_ab``."""
    C, S = clock_matrix(theta), shift_matrix(theta.q)
    blocks: dict[tuple[int, int], np.ndarray] = {}
    for c, w in x.terms:
        a = sum(e for i, e in w if i == 1)
        b = sum(e for i, e in w if i == 2)
        m = substitute(NcPolynomial(((c, w),)), [C, S])
        key = (a, b)
        blocks[key] = blocks[key] + m if key in blocks else m
    keys = list(blocks)
    return np.array(keys, dtype=int).reshape(-1, 2), np.stack([blocks[k] for k in keys])


def _grid_representatives(m: int, q: int) -> np.ndarray:
    # z -> w z (w a primitive q-th root) is a unitary equivalence, so only the
    # class of k*q mod m matters; keep the first k of each class
    _, idx = np.unique((np.arange(m) * q) % m, return_index=True)
    return np.sort(idx)


def effective_grid(m: int, q: int) -> int:
    """Number of inequivalent phases on an ``m``-point grid at denominator ``q``."""
    return m // math.gcd(m, q)


def norm_estimate(x: NcPolynomial, theta, phase_grid: int) -> float:
    """Max over the ``phase_grid x phase_grid`` roots-of-unity grid of ``||x(z1, z2)||``.

    A lower bound on the universal norm, non-decreasing along doubling grids.
    Grid points related by ``z -> exp(2 pi i p/q) z`` give unitarily
    equivalent representations and are evaluated once.
    """
    theta = _as_angle(theta)
    if phase_grid < 1:
        raise DomainError("phase_grid must be >= 1")
    _check_rank(x)
    if not x.terms:
        return 0.0
    exps, blocks = _phase_decomposition(x, theta)
    q = theta.q
    ks = _grid_representatives(phase_grid, q)
    ang = 2 * np.pi * ks / phase_grid
    k1, k2 = np.meshgrid(ang, ang, indexing="ij")
    k1, k2 = k1.ravel(), k2.ravel()
    flat = blocks.reshape(len(blocks), -1)
    chunk = max(1, _CHUNK_ENTRIES // (q * q))
    best = 0.0
    for s in range(0, k1.size, chunk):
        phase = np.exp(1j * (np.outer(k1[s:s + chunk], exps[:, 0]) + np.outer(k2[s:s + chunk], exps[:, 1])))
        mats = (phase @ flat).reshape(-1, q, q)
        best = max(best, float(spectral_norm(mats).max()))
    return best


class NormResult(NamedTuple):
    value: float
    grid: int
    converged: bool


def converge_norm(
    x: NcPolynomial,
    theta,
    tol: float = DEFAULT_TOL,
    *,
    start: int = DEFAULT_GRID_START,
    cap: int = DEFAULT_GRID_CAP,
) -> NormResult:
    """Refine :func:`norm_estimate` by doubling the grid until it stabilises.

    Returns the estimate at the first grid whose doubling changes it by less
    than ``tol``. A doubling that adds no inequivalent phases does not count
    as confirmation. If the cap is reached first, the value at the largest
    grid is returned with ``converged=False``.

    This is a stopping heuristic, not a bound: a doubling can leave the
    maximum unchanged even though a finer grid would raise it, so a
    ``converged`` value can still sit below the supremum over all phases.
    """
    if tol <= 0:
        raise DomainError("tol must be positive")
    theta = _as_angle(theta)
    m = start
    v = norm_estimate(x, theta, m)
    while 2 * m <= cap:
        v2 = norm_estimate(x, theta, 2 * m)
        grew = effective_grid(2 * m, theta.q) > effective_grid(m, theta.q)
        if grew and abs(v2 - v) < tol:
            return NormResult(v, m, True)
        m, v = 2 * m, v2
    return NormResult(v, m, False)


def matrix_algebra_dim(rep: TwistedRep, m: int, x: NcPolynomial | None = None) -> int:
    """Dimension ``m*q`` of ``M_m`` carried over ``rep``.

    Verifies that evaluating on the amplified generators ``I_m (x) U`` agrees
    with amplifying the evaluation.
    """
    if m < 1:
        raise DomainError("m must be >= 1")
    if x is None:
        x = NcPolynomial.parse("U1U2 + 2*U2'U1 - U1'")
    eye = np.eye(m)
    amplified = substitute(x, [np.kron(eye, rep.U1), np.kron(eye, rep.U2)])
    resid = np.abs(amplified - np.kron(eye, evaluate(x, rep))).max()
    if resid >= 1e-12:
        raise ArithmeticError(f"amplification does not commute with evaluation (residual {resid:.3g})")
    return m * rep.q
