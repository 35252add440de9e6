"""Experiments on the norm function and on the 2-d isomorphism classes.

The norm function ``theta -> ||x||`` lives on the whole circle; here it is
sampled at every reduced fraction with bounded denominator. A positive
spread between samples shows the function is not constant, which is what
rules out infinitely many mutually isomorphic tori accumulating at a point.
The scan demonstrates this on a grid. It does not prove anything about the
continuum.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from .errors import DomainError, InsufficientDataError
from .ncpoly import NcPolynomial
from .representation import DEFAULT_GRID_CAP, DEFAULT_TOL, converge_norm
from .torus import RationalAngle

__all__ = [
    "Sample",
    "ScanReport",
    "Witness",
    "convergents",
    "farey_angles",
    "norm_scan",
    "nonconstancy_witness",
    "fiber_classes",
    "finiteness_experiment",
    "DEFAULT_Q_MAX",
    "CSV_HEADER",
]

DEFAULT_Q_MAX = 20
CSV_HEADER = ("theta_num", "theta_den", "norm", "phase_grid", "converged")


def convergents(theta, q_max: int) -> list[RationalAngle]:
    """Continued-fraction convergents of ``theta`` with denominator ``<= q_max``.

    ``theta`` may be a float, a Fraction or a RationalAngle. Floats are
    expanded exactly from their binary value. A convergent equal to 1 is
    reported as ``0/1``, its value on the circle, and dropped if ``0/1`` is
    already listed.
    """
    if q_max < 1:
        raise DomainError("q_max must be >= 1")
    x = theta.fraction if isinstance(theta, RationalAngle) else Fraction(theta)
    out = []
    h0, h1, k0, k1 = 0, 1, 1, 0
    while True:
        a = x.numerator // x.denominator
        h0, h1 = h1, a * h1 + h0
        k0, k1 = k1, a * k1 + k0
        if k1 > q_max:
            break
        c = RationalAngle(h1, k1)
        if not out or c != out[-1]:
            out.append(c)
        frac = x - a
        if frac == 0:
            break
        x = 1 / frac
    return out


def farey_angles(q_max: int) -> list[RationalAngle]:
    """Every reduced ``p/q`` in ``[0, 1)`` with ``q <= q_max``, ascending."""
    if q_max < 1:
        raise DomainError("q_max must be >= 1")
    angles = {RationalAngle(p, q) for q in range(1, q_max + 1) for p in range(q)}
    return sorted(angles, key=lambda a: a.fraction)


class Sample(NamedTuple):
    theta: RationalAngle
    norm: float
    phase_grid: int
    converged: bool


@dataclass
class ScanReport:
    element: str
    samples: list
    tol: float = DEFAULT_TOL
    grid_cap: int = DEFAULT_GRID_CAP
    q_max: int = DEFAULT_Q_MAX
    seed: int = 0
    timestamp: str | None = None
    metadata: dict = field(default_factory=dict)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for s in self.samples:
            w.writerow([s.theta.p, s.theta.q, repr(float(s.norm)), s.phase_grid, str(s.converged).lower()])
        return buf.getvalue()

    def to_json(self) -> str:
        meta = {
            "element": self.element,
            "tol": self.tol,
            "grid_cap": self.grid_cap,
            "q_max": self.q_max,
            "seed": self.seed,
            "timestamp": self.timestamp,
            **self.metadata,
        }
        rows = [
            {"theta": str(s.theta), "norm": s.norm, "phase_grid": s.phase_grid, "converged": s.converged}
            for s in self.samples
        ]
        return json.dumps({"metadata": meta, "samples": rows}, indent=2, sort_keys=True) + "\n"


def norm_scan(
    x: NcPolynomial,
    q_max: int = DEFAULT_Q_MAX,
    tol: float = DEFAULT_TOL,
    *,
    grid_cap: int = DEFAULT_GRID_CAP,
    seed: int = 0,
    timestamp: str | None = None,
    workers: int = 1,
) -> ScanReport:
    """Refined norm estimate at every Farey angle up to ``q_max``.

    Samples that hit the grid cap are kept with ``converged=False``. With
    ``workers > 1`` angles run on a thread pool; the report is identical.
    """
    angles = farey_angles(q_max)

    def one(theta):
        r = converge_norm(x, theta, tol, cap=grid_cap)
        return Sample(theta, r.value, r.grid, r.converged)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            samples = list(pool.map(one, angles))
    else:
        samples = [one(t) for t in angles]
    return ScanReport(x.to_string(), samples, tol, grid_cap, q_max, seed, timestamp)


class Witness(NamedTuple):
    max_sample: Sample
    min_sample: Sample
    spread: float


def nonconstancy_witness(report: ScanReport) -> Witness:
    """Largest and smallest converged samples and their difference."""
    ok = [s for s in report.samples if s.converged]
    if len(ok) < 2:
        raise InsufficientDataError(f"need at least 2 converged samples, got {len(ok)}")
    hi = max(ok, key=lambda s: s.norm)
    lo = min(ok, key=lambda s: s.norm)
    return Witness(hi, lo, hi.norm - lo.norm)


def fiber_classes(grid_q: int) -> list[tuple[RationalAngle, ...]]:
    """Partition ``{k/grid_q}`` into isomorphism classes, ordered by least member."""
    if grid_q < 1:
        raise DomainError("grid_q must be >= 1")
    # theta' = -theta is the only partner isom_2d allows
    classes: list[tuple[RationalAngle, ...]] = []
    for k in range(grid_q // 2 + 1):
        t, u = RationalAngle(k, grid_q), RationalAngle(-k, grid_q)
        classes.append((t,) if t == u else (t, u))
    return classes


def finiteness_experiment(grid_q: int) -> list[int]:
    """Sizes of the isomorphism classes on the grid ``{k/grid_q}``.

    For 2-d tori every size is 1 or 2, with singletons only at 0 and 1/2.
    """
    if grid_q < 2:
        raise DomainError("grid_q must be >= 2")
    return [len(c) for c in fiber_classes(grid_q)]
