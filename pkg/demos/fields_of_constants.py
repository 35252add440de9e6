"""
Scalars hidden in companion matrices
====================================

A scalar matrix ``c*I`` can only equal a companion matrix when ``c`` is a
root of its characteristic polynomial. Over Q this means the scalars
reachable with ``n x n`` matrices are the algebraic numbers of degree at
most ``n``.
"""

from nctorus import AlgebraicNumber, RationalPoly, char_poly, companion, constants_member, roots_numeric
from nctorus.fields import is_scalar_witness

p = RationalPoly.parse("-7,2,0")          # x^3 + 2x - 7
C = companion(p)
for row in C.entries:
    print("  ".join(f"{str(v):>3}" for v in row))
print("char poly:", char_poly(C))          # exact, no floating point
print("roots:", [f"{r:.6f}" for r in roots_numeric(p)])

sqrt2 = AlgebraicNumber.radical(2, 2)
cbrt2 = AlgebraicNumber.radical(2, 3)
for n in range(1, 5):
    print(n, constants_member(sqrt2, n), constants_member(cbrt2, n))

# sqrt 2 divides out of any multiple of x^2 - 2
q = RationalPoly.parse("-2,0") * RationalPoly.parse("1/3,5")
print(q, is_scalar_witness(sqrt2, q))

# the root is pinned down by a disc that holds no other root
print(cbrt2.center, cbrt2.radius)
