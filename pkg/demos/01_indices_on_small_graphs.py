"""
Bond-incident-degree indices on small graphs
============================================

A BID index adds up one term per edge, and the term only looks at the two
end degrees.  Below we evaluate the built-in kinds on a few familiar graphs.
"""

from bidx import IndexSpec, evaluate_bid
from bidx.graph import complete_graph, cycle_graph, decode_graph6, path_graph, star_graph

graphs = {
    "P5": path_graph(5),
    "C5": cycle_graph(5),
    "S5": star_graph(5),
    "K4": complete_graph(4),
    "paw": decode_graph6("Cx"),
}

specs = [IndexSpec.chi(1), IndexSpec.chi(1.5), IndexSpec.pl(2), IndexSpec.sei(2), IndexSpec("PLATT")]

print(f"{'graph':6}" + "".join(f"{s.label:>14}" for s in specs))
for name, g in graphs.items():
    row = []
    for s in specs:
        v = evaluate_bid(s, g)
        # integer exponents stay on exact integers; everything else is a float
        row.append(str(v.exact_integer) if v.exact_integer is not None else f"{v.value:.4f}")
    print(f"{name:6}" + "".join(f"{x:>14}" for x in row))

# The first Zagreb index is chi with exponent 1, and the Platt number is
# M1 - 2m.  A quick sanity pass over the table above:
for name, g in graphs.items():
    m1 = evaluate_bid(IndexSpec("M1"), g).exact_integer
    assert evaluate_bid(IndexSpec("PLATT"), g).exact_integer == m1 - 2 * g.m

# Anything else can be plugged in as a custom edge weight
randic = IndexSpec("CUSTOM", custom_psi=lambda x, y: (x * y) ** -0.5, name="randic")
print("\nRandic index of P5:", round(evaluate_bid(randic, path_graph(5)).value, 6))
