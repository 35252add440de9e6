"""Noncommutative tori and their finite-dimensional representations.

Submodules:

``torus``           skew parameter matrices, K0 rank, 2-d isomorphism classes
``ncpoly``          noncommutative Laurent polynomials and their text form
``representation``  clock-and-shift representations and norm estimation
``sklyanin``        Sklyanin relations and the Jacobi-form curve
``fields``          companion matrices and fields of constants over Q
``lab``             norm scans and fiber-count experiments
"""

from .errors import DomainError
from .fields import (
    AlgebraicNumber,
    CompanionMatrix,
    RationalPoly,
    char_poly,
    companion,
    constants_member,
    is_irreducible,
    is_scalar_witness,
    roots_numeric,
)
from .lab import ScanReport, convergents, finiteness_experiment, nonconstancy_witness, norm_scan
from .ncpoly import NcPolynomial, gen, harper
from .representation import (
    TwistedRep,
    build_rep,
    converge_norm,
    evaluate,
    matrix_algebra_dim,
    norm_estimate,
)
from .sklyanin import (
    ProjectivePoint3,
    RelationSet,
    SklyaninParams,
    check_relations,
    jacobi_coeffs,
    on_curve,
    sklyanin_relations,
    solve_gamma,
    u_infinity_relations,
)
from .torus import (
    RationalAngle,
    SkewMatrix,
    TorusPoint,
    fiber_count,
    isom_2d,
    k0_rank,
    param_count,
    rho_of_theta,
    validate_skew,
)

__version__ = "0.1.0"
