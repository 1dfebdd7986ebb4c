"""
Labelled antichains
===================

Two white endpoints are enough to stop paths embedding in one another, and
two white vertices do the same for the graphs W_k built from spirals.
"""

from itertools import combinations

from spiralwqo.graphs import cycle, induced_subgraph_iso
from spiralwqo.labelled import (
    antichain_check, format_labelled, labelled_embeds, labelled_path,
    prop1_construction, wk_graph,
)

# Without labels P4 sits inside P5; with white endpoints it does not.
p4, p5 = labelled_path(4), labelled_path(5)
print("P4 in P5 unlabelled:", induced_subgraph_iso(p4.graph, p5.graph))
print("P4 in P5 labelled:  ", labelled_embeds(p4, p5))
print("paths 3..12 form an antichain:", antichain_check([labelled_path(m) for m in range(3, 13)]))

# W_k: an independent set u_1..u_k, a clique v_1..v_k, and a staircase between.
w4 = wk_graph(4)
print(format_labelled(w4))
for k, ell in combinations(range(4, 9), 2):
    a, b = wk_graph(k), wk_graph(ell)
    print(f"W{k} -> W{ell}: unlabelled {induced_subgraph_iso(a.graph, b.graph)}, "
          f"labelled {labelled_embeds(a, b)}")

# Deleting a vertex from each long cycle and marking its neighbours white
# turns an unlabelled antichain into a labelled one.
relabelled = prop1_construction([cycle(m) for m in range(5, 10)])
print("cycles 5..9 after deletion:", antichain_check(relabelled))
