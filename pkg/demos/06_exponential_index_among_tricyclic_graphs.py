"""
Which tricyclic graph maximizes the exponential index?
======================================================

For SEI_a (edge weight a^du + a^dv) one could guess the G3 form, a
dominating vertex over a path P4.  The differences below are polynomials in
a, all positive for a > 1, and they put the K_{1,3} remainder (G4) on top.
The brute-force oracle agrees.
"""

from bidx import IndexSpec
from bidx.canon import canonical_form
from bidx.enumeration import extremal_search
from bidx.families import FamilyId, make_family
from bidx.theorems import SEI_DIFFERENCES, compare_families, verify_theorem

for a in (1.1, 1.5, 2, 3):
    diffs = {f"{x}-{y}": compare_families(IndexSpec.sei(a), FamilyId(x, 8), FamilyId(y, 8))
             for x, y in SEI_DIFFERENCES}
    print(f"a={a}: " + "  ".join(f"{k}={v:.4f}" for k, v in diffs.items()))

for n in range(5, 9):
    res = extremal_search(n, n + 2, IndexSpec.sei(1.5), "MAX")
    is_g4 = res.optimizers == (canonical_form(make_family("G4", n)),)
    print(f"n={n}: maximizer {res.optimizer_graph6[0]}  is G4: {is_g4}")

rep = verify_theorem("THM6", (5, 8), [1.5, 2])
print("\nfull check over n = 5..8:", "pass" if rep.overall else "FAIL",
      f"({sum(len(c.checks) for c in rep.cells)} checks)")
