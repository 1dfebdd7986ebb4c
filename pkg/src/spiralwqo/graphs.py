"""
Small simple graphs, permutation graphs, and exact isomorphism machinery.

Vertices are 0..n-1 internally (vertex i corresponds to position i+1 of a
permutation).  Adjacency is a tuple of bitmasks, one per vertex.  Everything
here is exhaustive search tuned for graphs of at most a dozen or so vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import factorial
from typing import Callable, Iterable, Sequence

import networkx as nx

from .perm import Perm, all_perms

__all__ = [
    "Graph", "TooLarge", "perm_graph", "complement", "graph_iso", "canonical_form",
    "graph_from_canonical", "induced_subgraph_iso", "find_embedding", "is_split",
    "cycle", "path", "complete", "empty", "catalog", "CATALOG_NAMES", "CATALOG_REALIZERS",
    "realizing_permutations", "enumerate_graphs_avoiding",
    "to_graph6", "from_graph6",
]


class TooLarge(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError("adjacency must have one row per vertex")
        for v, row in enumerate(self.adj):
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            if row >> self.n:
                raise ValueError(f"vertex {v} has a neighbour out of range")
            for w in _bits(row):
                if not self.adj[w] >> v & 1:
                    raise ValueError(f"edge {v}-{w} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for a, b in edges:
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return cls(n, tuple(rows))

    def has_edge(self, a: int, b: int) -> bool:
        return bool(self.adj[a] >> b & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(a, b) for a in range(self.n) for b in _bits(self.adj[a]) if a < b]

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def degrees(self) -> list[int]:
        return [self.degree(v) for v in range(self.n)]

    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def induced(self, vertices: Sequence[int]) -> "Graph":
        idx = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            row = 0
            for w in _bits(self.adj[v]):
                if w in idx:
                    row |= 1 << idx[w]
            rows.append(row)
        return Graph(len(vertices), tuple(rows))

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_graph6(g: Graph) -> str:
    return nx.to_graph6_bytes(g.to_networkx(), header=False).decode("ascii").strip()


def from_graph6(text: str) -> Graph:
    h = nx.from_graph6_bytes(text.strip().encode("ascii"))
    return Graph.from_edges(h.number_of_nodes(), h.edges())


# -- constructions -----------------------------------------------------------

def perm_graph(pi: Perm) -> Graph:
    """Vertices are positions; i ~ j when i < j and pi(i) > pi(j)."""
    n = len(pi)
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)
                                if pi[i] > pi[j]])


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def empty(n: int) -> Graph:
    return Graph(n, (0,) * n)


# -- embedding ---------------------------------------------------------------

def _search_order(h: Graph) -> list[int]:
    # grow a connected order: next vertex has most already-ordered neighbours
    order: list[int] = []
    placed = 0
    remaining = set(range(h.n))
    deg = h.degrees()
    while remaining:
        best = max(remaining, key=lambda v: (bin(h.adj[v] & placed).count("1"), deg[v], -v))
        order.append(best)
        placed |= 1 << best
        remaining.discard(best)
    return order


def find_embedding(h: Graph, g: Graph,
                   compatible: Callable[[int, int], bool] | None = None) -> dict[int, int] | None:
    """
    An injective map of V(h) into V(g) preserving adjacency and
    non-adjacency (an induced copy), or None.

    ``compatible(hv, gv)`` restricts which host vertices a pattern vertex may
    use; labelled embedding is built on it.
    """
    if h.n > g.n:
        return None
    if h.n == 0:
        return {}
    order = _search_order(h)
    hdeg, gdeg = h.degrees(), g.degrees()
    # candidates passing the static filters (degree and label)
    static = []
    for hv in order:
        mask = 0
        for gv in range(g.n):
            if hdeg[hv] <= gdeg[gv] and h.n - hdeg[hv] <= g.n - gdeg[gv] and (
                    compatible is None or compatible(hv, gv)):
                mask |= 1 << gv
        if not mask:
            return None
        static.append(mask)
    # earlier pattern vertices (by order index) adjacent to each pattern vertex
    earlier_nbrs = []
    pos = {v: i for i, v in enumerate(order)}
    for t, hv in enumerate(order):
        earlier_nbrs.append([pos[w] for w in _bits(h.adj[hv]) if pos[w] < t])
    image = [0] * h.n
    gadj = g.adj

    def extend(t: int, used: int) -> bool:
        if t == h.n:
            return True
        expected = 0
        for s in earlier_nbrs[t]:
            expected |= 1 << image[s]
        cand = static[t] & ~used
        if earlier_nbrs[t]:
            cand &= gadj[image[earlier_nbrs[t][0]]]
        for gv in _bits(cand):
            if gadj[gv] & used == expected:
                image[t] = gv
                if extend(t + 1, used | 1 << gv):
                    return True
        return False

    if not extend(0, 0):
        return None
    return {hv: image[t] for t, hv in enumerate(order)}


def induced_subgraph_iso(h: Graph, g: Graph) -> bool:
    return find_embedding(h, g) is not None


def graph_iso(g: Graph, h: Graph) -> bool:
    """Exact isomorphism test by backtracking (an induced embedding between
    graphs of equal order and size is an isomorphism)."""
    if g.n != h.n or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return find_embedding(g, h) is not None


# -- canonical form ----------------------------------------------------------

def _refine(g: Graph, colors: list[int]) -> list[int]:
    # iterate colour refinement to a stable partition; new colours are ranks
    # of (old colour, sorted neighbour colours), so they are invariant
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in _bits(g.adj[v]))))
                for v in range(g.n)]
        rank = {s: r for r, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if len(rank) == len(set(colors)):
            return new
        colors = new


def _certificate(g: Graph, colors: list[int]) -> bytes:
    order = sorted(range(g.n), key=colors.__getitem__)
    bits = bytearray([g.n])
    acc, nbits = 0, 0
    for a, b in combinations(range(g.n), 2):
        acc = acc << 1 | g.has_edge(order[a], order[b])
        nbits += 1
        if nbits == 8:
            bits.append(acc)
            acc, nbits = 0, 0
    if nbits:
        bits.append(acc << (8 - nbits))
    return bytes(bits)


def _twin_key(g: Graph, v: int) -> tuple[int, int]:
    return (g.adj[v] | 1 << v, g.adj[v])


def canonical_form(g: Graph) -> bytes:
    """
    Lexicographically least adjacency string over all vertex orders reached
    by colour refinement plus individualisation.

    The search tree is isomorphism invariant, so two graphs are isomorphic
    iff their forms agree.  Twins (vertices with the same open or closed
    neighbourhood) are swapped by an automorphism, so only one twin per cell
    is individualised.
    """
    best: list[bytes] = []

    def search(colors: list[int]) -> None:
        colors = _refine(g, colors)
        ncolors = len(set(colors))
        if ncolors == g.n:
            cert = _certificate(g, colors)
            if not best or cert < best[0]:
                best[:] = [cert]
            return
        sizes: dict[int, int] = {}
        for c in colors:
            sizes[c] = sizes.get(c, 0) + 1
        target = min(c for c, s in sizes.items() if s > 1)
        cell = [v for v in range(g.n) if colors[v] == target]
        seen_open, seen_closed = set(), set()
        for v in cell:
            closed, open_ = _twin_key(g, v)
            # open twins share adj; closed twins share adj | self
            if open_ in seen_open or closed in seen_closed:
                continue
            seen_open.add(open_)
            seen_closed.add(closed)
            # individualise v: move it ahead of its cell
            search([2 * c + (0 if u == v or c != target else 1) for u, c in enumerate(colors)])

    if g.n == 0:
        return bytes([0])
    search([0] * g.n)
    return best[0]


def graph_from_canonical(form: bytes) -> Graph:
    n = form[0]
    edges = []
    for idx, (a, b) in enumerate(combinations(range(n), 2)):
        byte, off = divmod(idx, 8)
        if form[1 + byte] >> (7 - off) & 1:
            edges.append((a, b))
    return Graph.from_edges(n, edges)


# -- split graphs ------------------------------------------------------------

def is_split(g: Graph) -> bool:
    """Direct search for a clique whose complement is independent."""
    n = g.n
    full = (1 << n) - 1
    for mask in range(1 << n):
        clique_ok = all(g.adj[v] | 1 << v | ~mask & full == full for v in _bits(mask))
        if not clique_ok:
            continue
        rest = full & ~mask
        if all(not g.adj[v] & rest for v in _bits(rest)):
            return True
    return False


# -- catalog -----------------------------------------------------------------

CATALOG_NAMES = ("2K2", "C4", "C5", "net", "co-net", "rising-sun", "co-rising-sun",
                 "H", "co-H", "cross", "co-cross", "X168", "co-X168", "X160")

_REALIZED_BY = {
    "2K2": (2, 1, 4, 3),
    "C4": (3, 4, 1, 2),
    "H": (2, 3, 6, 1, 4, 5),
    "cross": (2, 3, 4, 6, 1, 5),
    "X168": (2, 3, 6, 5, 1, 4),
    "X160": (2, 8, 5, 3, 6, 4, 1, 7),
}

# rows of the permutation chart: graph name -> all permutations realising it
CATALOG_REALIZERS = {
    name: tuple(tuple(int(c) for c in s) for s in perms.split())
    for name, perms in {
        "2K2": "2143",
        "C4": "3412",
        "H": "236145 412563",
        "co-H": "365214 541632",
        "cross": "234615 261345 314562 512364",
        "co-cross": "265413 463215 516432 543162",
        "X168": "236514 362145 431562 512643",
        "co-X168": "265134 346215 415632 541263",
        "X160": "28536417 71463582",
    }.items()
}


def _net() -> Graph:
    # triangle a b c with pendants a' b' c'
    return Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])


def _rising_sun() -> Graph:
    # K4 on s1..s4 (0..3) with o1 ~ s1,s4; o2 ~ s3,s4; o3 ~ s2,s3
    k4 = list(combinations(range(4), 2))
    return Graph.from_edges(7, k4 + [(4, 0), (4, 3), (5, 2), (5, 3), (6, 1), (6, 2)])


def catalog() -> dict[str, Graph]:
    """The fourteen named forbidden graphs, keyed by CATALOG_NAMES."""
    out = {name: perm_graph(p) for name, p in _REALIZED_BY.items()}
    out["C5"] = cycle(5)
    out["net"] = _net()
    out["rising-sun"] = _rising_sun()
    out["co-net"] = complement(out["net"])
    out["co-rising-sun"] = complement(out["rising-sun"])
    for name in ("H", "cross", "X168"):
        out["co-" + name] = complement(out[name])
    return {name: out[name] for name in CATALOG_NAMES}


# -- realisers and enumeration -----------------------------------------------

def realizing_permutations(g: Graph, n: int | None = None) -> list[Perm]:
    """All permutations of length n whose permutation graph is isomorphic to
    g, by scanning all n! permutations."""
    if n is None:
        n = g.n
    if n > 9:
        raise TooLarge(f"scanning {factorial(n)} permutations is not supported")
    if n != g.n:
        return []
    target = canonical_form(g)
    m, degs = g.num_edges(), sorted(g.degrees())
    out = []
    for p in all_perms(n):
        pg = perm_graph(p)
        if pg.num_edges() != m or sorted(pg.degrees()) != degs:
            continue
        if canonical_form(pg) == target:
            out.append(p)
    return out


def _avoids(g: Graph, forbidden: Sequence[Graph]) -> bool:
    return not any(induced_subgraph_iso(f, g) for f in forbidden)


def enumerate_graphs_avoiding(forbidden: Sequence[Graph], max_n: int) -> set[bytes]:
    """
    Canonical forms of all graphs on 0..max_n vertices with no induced copy
    of any forbidden graph.

    Such graphs form a hereditary family, so every one on n vertices arises
    by adding a vertex to one on n - 1 vertices; we extend each class
    representative by every possible neighbourhood of the new vertex and
    deduplicate by canonical form.
    """
    forbidden = list(forbidden)
    level = {canonical_form(empty(0))} if _avoids(empty(0), forbidden) else set()
    found = set(level)
    rejected: set[bytes] = set()
    for n in range(1, max_n + 1):
        nxt: set[bytes] = set()
        for form in sorted(level):
            base = graph_from_canonical(form)
            for nbrs in range(1 << (n - 1)):
                rows = [row | ((nbrs >> v & 1) << (n - 1)) for v, row in enumerate(base.adj)]
                g = Graph(n, tuple(rows) + (nbrs,))
                cf = canonical_form(g)
                if cf in nxt or cf in rejected:
                    continue
                if _avoids(g, forbidden):
                    nxt.add(cf)
                else:
                    rejected.add(cf)
        found |= nxt
        level = nxt
    return found
