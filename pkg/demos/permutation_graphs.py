"""
Permutation graphs and the forbidden catalog
============================================

Inversions of a permutation give a graph.  We look at the named catalog of
forbidden graphs, the permutations that realise them, and a few surprises.
"""

from itertools import permutations

from spiralwqo.graphs import (
    catalog, graph_iso, induced_subgraph_iso, is_split, path, perm_graph,
    realizing_permutations, to_graph6,
)
from spiralwqo.perm import format_compact, parse_perm
from spiralwqo.widdershins import in_W, is_skew_merged

print("G(2413) is P4:", graph_iso(perm_graph(parse_perm("2413")), path(4)))

cat = catalog()
for name, g in cat.items():
    print(f"{name:>14}  n={g.n}  m={g.num_edges():>2}  graph6={to_graph6(g)}")

# Split permutation graphs come from skew-merged permutations.
p = parse_perm("3142")
print("3142 split:", is_split(perm_graph(p)), " skew-merged:", is_skew_merged(p))

# Realisers of H, by scanning all permutations of length 6.
print("H is realised by", [format_compact(q) for q in realizing_permutations(cat["H"])])

# X160 has two more realisers than its usual pair, and one of them is in W.
found = realizing_permutations(cat["X160"])
print("X160 is realised by", [format_compact(q) for q in found])
print("members of W among them:", [format_compact(q) for q in found if in_W(q)])

# Two catalog graphs sit inside two others.
below = [(a, b) for a, b in permutations(cat, 2) if induced_subgraph_iso(cat[a], cat[b])]
print("comparable catalog pairs:", below)
