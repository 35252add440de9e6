"""
Sklyanin relations and the Jacobi curve
=======================================

Parameters ``(alpha, beta, gamma)`` must satisfy
``alpha + beta + gamma + alpha*beta*gamma = 0``; given alpha and beta the
third is solved for. The six quadratic relations can then be checked
against candidate matrices.
"""

import numpy as np

from nctorus import SklyaninParams, check_relations, sklyanin_relations, u_infinity_relations
from nctorus.sklyanin import ProjectivePoint3, jacobi_coeffs, on_curve

p = SklyaninParams.from_alpha_beta(0.5, 2.0)
print("gamma =", p.gamma, "residual", p.residual)
for r in sklyanin_relations(p).to_strings():
    print("  ", r, "= 0")

# zero matrices satisfy any homogeneous relation
zeros = [np.zeros((2, 2))] * 4
print(check_relations(sklyanin_relations(p), zeros))

# x1 x2 - x2 x1 = x1^2 fails for x1 = x2 = I by exactly 1
print(check_relations(u_infinity_relations(), [np.eye(2), np.eye(2)]))

# a point on both quadrics at alpha = beta = gamma = 0
p0 = SklyaninParams(0, 0, 0)
print(jacobi_coeffs(p0), on_curve(p0, ProjectivePoint3(0, 1, 1j, 0)))
