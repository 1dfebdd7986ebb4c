"""
Graphs labelled by a finite quasi-order, and labelled induced embedding.

A labelled graph (H, k) embeds in (G, l) when H is an induced subgraph of G
under a map sending each vertex v to some w with k(v) <= l(w).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Callable, Hashable, Iterable, Sequence

from .graphs import Graph, find_embedding, from_graph6, to_graph6

__all__ = [
    "LabelPoset", "LabelledGraph", "BLACK_WHITE", "TRIVIAL_POSET",
    "PosetMismatch", "TooSmall", "CannotDelete",
    "labelled_embeds", "wk_graph", "wk_vertex", "labelled_path",
    "antichain_check", "prop1_construction", "lowest_vertex",
    "format_labelled", "parse_labelled",
]


class PosetMismatch(ValueError):
    pass


class TooSmall(ValueError):
    pass


class CannotDelete(ValueError):
    pass


@dataclass(frozen=True, init=False)
class LabelPoset:
    """A finite quasi-order given by its elements and generating pairs
    a <= b; the reflexive-transitive closure is taken on construction."""
    elements: tuple
    relation: frozenset

    def __init__(self, elements: Iterable[Hashable], pairs: Iterable[tuple] = ()):
        elems = tuple(elements)
        rel = {(a, a) for a in elems}
        for a, b in pairs:
            if a not in elems or b not in elems:
                raise ValueError(f"pair ({a!r}, {b!r}) uses an unknown label")
            rel.add((a, b))
        changed = True
        while changed:
            changed = False
            for a, b in list(rel):
                for c, d in list(rel):
                    if b == c and (a, d) not in rel:
                        rel.add((a, d))
                        changed = True
        object.__setattr__(self, "elements", elems)
        object.__setattr__(self, "relation", frozenset(rel))

    def leq(self, a, b) -> bool:
        return (a, b) in self.relation


BLACK_WHITE = LabelPoset(("b", "w"))
TRIVIAL_POSET = LabelPoset(("*",))


@dataclass(frozen=True)
class LabelledGraph:
    graph: Graph
    labels: tuple
    poset: LabelPoset = BLACK_WHITE

    def __post_init__(self):
        if len(self.labels) != self.graph.n:
            raise ValueError("one label per vertex is required")
        for a in self.labels:
            if a not in self.poset.elements:
                raise ValueError(f"label {a!r} is not in the poset")


def format_labelled(lg: LabelledGraph) -> str:
    """graph6 line, then one label character per vertex."""
    return to_graph6(lg.graph) + "\n" + "".join(map(str, lg.labels))


def parse_labelled(text: str, poset: LabelPoset = BLACK_WHITE) -> LabelledGraph:
    g6, labels = text.strip().splitlines()
    return LabelledGraph(from_graph6(g6), tuple(labels.strip()), poset)


def labelled_embeds(pattern: LabelledGraph, host: LabelledGraph) -> bool:
    if pattern.poset != host.poset:
        raise PosetMismatch("labelled graphs use different label posets")
    leq = pattern.poset.leq
    k, ell = pattern.labels, host.labels
    return find_embedding(pattern.graph, host.graph,
                          lambda v, w: leq(k[v], ell[w])) is not None


# -- families ----------------------------------------------------------------

def wk_vertex(k: int, side: str, i: int) -> int:
    """Vertex index of u_i (side "u") or v_i (side "v") in wk_graph(k)."""
    return i - 1 if side == "u" else k + i - 1


def wk_graph(k: int) -> LabelledGraph:
    """
    u_1..u_k independent, v_1..v_k a clique, u_i ~ v_j iff i = j or
    i <= j - 2; u_1 and v_k white, every other vertex black.
    """
    if k < 4:
        raise TooSmall(f"W_k needs k >= 4, got {k}")
    edges = [(wk_vertex(k, "v", i), wk_vertex(k, "v", j))
             for i in range(1, k + 1) for j in range(i + 1, k + 1)]
    edges += [(wk_vertex(k, "u", i), wk_vertex(k, "v", j))
              for i in range(1, k + 1) for j in range(1, k + 1) if i == j or i <= j - 2]
    labels = ["b"] * (2 * k)
    labels[wk_vertex(k, "u", 1)] = "w"
    labels[wk_vertex(k, "v", k)] = "w"
    return LabelledGraph(Graph.from_edges(2 * k, edges), tuple(labels))


def labelled_path(m: int) -> LabelledGraph:
    if m < 3:
        raise TooSmall(f"labelled paths need m >= 3, got {m}")
    g = Graph.from_edges(m, [(i, i + 1) for i in range(m - 1)])
    return LabelledGraph(g, ("w",) + ("b",) * (m - 2) + ("w",))


def antichain_check(lgs: Sequence[LabelledGraph]) -> bool:
    """No member embeds in a different member (ordered pairs)."""
    lgs = list(lgs)
    posets = {lg.poset for lg in lgs}
    if len(posets) > 1:
        raise PosetMismatch("labelled graphs use different label posets")
    for a, b in permutations(range(len(lgs)), 2):
        if labelled_embeds(lgs[a], lgs[b]):
            return False
    return True


def lowest_vertex(g: Graph) -> int:
    return 0


def prop1_construction(graphs: Sequence[Graph],
                       pick: Callable[[Graph], int] = lowest_vertex) -> list[LabelledGraph]:
    """
    Delete a chosen vertex v from each graph and colour the rest white when
    adjacent to v, black otherwise.
    """
    out = []
    for g in graphs:
        if g.n == 0:
            raise CannotDelete("cannot delete a vertex from the empty graph")
        v = pick(g)
        keep = [w for w in range(g.n) if w != v]
        labels = tuple("w" if g.has_edge(v, w) else "b" for w in keep)
        out.append(LabelledGraph(g.induced(keep), labels))
    return out
