"""
Which 2-d tori on a grid are isomorphic
=======================================

Two angles give isomorphic tori exactly when ``theta' = +-theta mod 1``.
On the grid ``k/N`` that pairs ``k`` with ``N - k``, so every class has one
or two members.
"""

from fractions import Fraction

from nctorus import convergents, finiteness_experiment, isom_2d
from nctorus.lab import fiber_classes

N = 12
for cls in fiber_classes(N):
    print(" ~ ".join(str(t) for t in cls))

# singletons sit at 0 and, for even N, at 1/2
print("sizes:", finiteness_experiment(N))

# float angles are compared on the circle with a tolerance
print(isom_2d(0.3, 0.7), isom_2d(0.3, 0.4))

# an irrational angle is reached through its convergents
golden = (5 ** 0.5 - 1) / 2
print([str(c) for c in convergents(golden, 100)])
print(float(abs(Fraction(golden) - convergents(golden, 100)[-1].fraction)))
