"""
The G4 / G5 comparison as a binomial series
===========================================

chi_a(G4) - chi_a(G5) = (n+3)^a + 3(n+1)^a - 3(n+2)^a - n^a, a third finite
difference.  Expanding each power around n gives terms

    B_k = C(a, k) n^(a-k) (3 + 3^k - 3 * 2^k),

where the first three vanish.  The sign of B_3 then decides everything,
because the remaining terms shrink in absolute value.
"""

from bidx import IndexSpec
from bidx.families import FamilyId
from bidx.theorems import compare_families, series_expansion, sign_table_csv

for a in (1.25, 1.5, 2.5, 3.7):
    s = series_expansion("B", a, 6)
    exact = compare_families(IndexSpec.chi(a), FamilyId("G4", 6), FamilyId("G5", 6))
    print(f"a={a}: B_3={s.terms[3]:+.6f}  series={s.value:+.12f}  direct={exact:+.12f}  ({len(s.terms)} terms)")

print("\nsign of chi(G4) - chi(G5):")
print(sign_table_csv("CHI", [1, 1.25, 1.5, 2, 2.5, 3], range(5, 11)))

print("and for the general Platt index:")
print(sign_table_csv("PL", [1, 1.5, 2, 3], range(5, 11)))

# The tetracyclic analogue has a constant part 2(7^a - 6^a) in front.
s = series_expansion("A", 3, 6)
print("A series, a=3, n=6:", s.leading_constant, "+", s.partial_sums[-1], "=", s.value)
