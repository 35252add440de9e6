"""
Norm of the Harper element across rational angles
=================================================

The element ``h = U1 + U1^-1 + U2 + U2^-1`` has norm 4 when the generators
commute and 2*sqrt(2) at angle 1/2. In between, the norm is read off the
clock-and-shift matrices at each ``p/q``, maximised over boundary phases.

Run with ``python demos/harper_scan.py [q_max]``.
"""

import sys

from nctorus import harper, nonconstancy_witness, norm_scan

q_max = int(sys.argv[1]) if len(sys.argv) > 1 else 12

# every reduced p/q with q <= q_max, refined until the phase grid stops mattering
report = norm_scan(harper(), q_max)

for s in report.samples:
    bar = "#" * int(round(10 * s.norm))
    print(f"{str(s.theta):>6}  {s.norm:.9f}  grid={s.phase_grid:<4} {bar}")

# p/q and (q-p)/q give the same value: the torus at theta is the torus at -theta
w = nonconstancy_witness(report)
print()
print(f"largest  {w.max_sample.norm:.9f} at {w.max_sample.theta}")
print(f"smallest {w.min_sample.norm:.9f} at {w.min_sample.theta}")
print(f"spread   {w.spread:.9f}")

# A positive spread means the norm is not constant on the grid. That is
# evidence on a finite sample, not a statement about the whole circle.
