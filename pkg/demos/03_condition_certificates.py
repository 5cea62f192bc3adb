"""
Grid certificates for the sufficient conditions
===============================================

Whether shifting helps depends on two second-order differences of the edge
weight f:

    delta1 = f(x+t, y) - f(x, y) + f(c-t, y) - f(c, y)
    delta2 = f(x+t, c-t) - f(x, c)

with x >= c > t >= 1.  For maximization both must be non-negative, and f has
to be increasing.  We scan every integer tuple up to a bound.
"""

import numpy as np

from bidx import IndexSpec
from bidx.conditions import check_conditions, deltas, replay

for spec in [IndexSpec.chi(1), IndexSpec.chi(1.5), IndexSpec.chi(3), IndexSpec.pl(2), IndexSpec.sei(2),
             IndexSpec.chi(0.5)]:
    rep = check_conditions(spec, "MAX", grid_bound=50)
    line = f"{spec.label:10} {rep.strictness}"
    if rep.counterexample:
        cex = rep.counterexample
        line += f"   first violation {cex.kind} at (x, c, t, y) = {cex.point}"
    print(line)

# The square-root weight fails right away: a concave f makes delta1 negative.
rep = check_conditions(IndexSpec.chi(0.5), "MAX", 50)
print("\nreplays:", replay(IndexSpec.chi(0.5), "MAX", rep.counterexample), rep.counterexample.values)

# For chi the second difference vanishes identically, since x+t + c-t = x+c.
x, c, t, y = np.array([9, 7, 5]), np.array([4, 6, 5]), np.array([1, 3, 2]), np.array([2, 8, 1])
print("chi_2.5 delta2:", deltas(IndexSpec.chi(2.5), x, c, t, y)[1])
