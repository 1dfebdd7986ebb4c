import random
from itertools import permutations

import networkx as nx
import pytest
from networkx.algorithms.isomorphism import GraphMatcher

from spiralwqo.graphs import (
    CATALOG_NAMES, CATALOG_REALIZERS, Graph, TooLarge, canonical_form, catalog,
    complement, complete, cycle, empty, enumerate_graphs_avoiding,
    find_embedding, from_graph6, graph_from_canonical, graph_iso,
    induced_subgraph_iso, is_split, path, perm_graph, realizing_permutations,
    to_graph6,
)
from spiralwqo.perm import all_perms, contains, inverse, parse_perm
from spiralwqo.widdershins import in_W, in_W_union_inverse, is_skew_merged


def P(s):
    return parse_perm(s)


def from_nx(h):
    h = nx.convert_node_labels_to_integers(h)
    return Graph.from_edges(h.number_of_nodes(), h.edges())


def relabel(g, rng):
    order = list(range(g.n))
    rng.shuffle(order)
    return Graph.from_edges(g.n, [(order[a], order[b]) for a, b in g.edges()])


ATLAS = [from_nx(h) for h in nx.graph_atlas_g()]  # every graph on <= 7 vertices


# -- construction ------------------------------------------------------------

def test_perm_graph_examples():
    assert graph_iso(perm_graph(P("2413")), path(4))
    assert graph_iso(perm_graph(P("3142")), path(4))
    assert graph_iso(perm_graph(P("2143")), catalog()["2K2"])
    assert perm_graph(P("12345")) == empty(5)
    assert perm_graph(P("54321")) == complete(5)


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0))
    with pytest.raises(ValueError):
        Graph(1, (0b1,))


def test_graph6_round_trip():
    for g in ATLAS[::7]:
        assert from_graph6(to_graph6(g)) == g
    assert to_graph6(perm_graph(P("2143"))) == "C`"


# -- isomorphism -----------------------------------------------------------

def test_canonical_form_counts_classes():
    counts = [0] * 8
    forms = set()
    for g in ATLAS:
        forms.add(canonical_form(g))
        counts[g.n] += 1
    assert counts == [1, 1, 2, 4, 11, 34, 156, 1044]
    assert len(forms) == len(ATLAS)


def test_canonical_form_invariant_under_relabelling():
    rng = random.Random(1)
    for g in ATLAS[::5]:
        form = canonical_form(g)
        for _ in range(3):
            assert canonical_form(relabel(g, rng)) == form
        assert graph_iso(g, graph_from_canonical(form))


def test_graph_iso_against_networkx():
    rng = random.Random(2)
    sample = rng.sample(ATLAS[200:], 60)
    for a in sample:
        for b in sample:
            if a.n == b.n and a.num_edges() == b.num_edges():
                assert graph_iso(a, b) == nx.is_isomorphic(a.to_networkx(), b.to_networkx())


def test_induced_embedding_against_networkx():
    rng = random.Random(3)
    small = [g for g in ATLAS if 2 <= g.n <= 4]
    hosts = rng.sample([g for g in ATLAS if g.n == 7], 40)
    for h in small:
        for g in hosts:
            want = GraphMatcher(g.to_networkx(), h.to_networkx()).subgraph_is_isomorphic()
            assert induced_subgraph_iso(h, g) == want


def test_embedding_is_a_witness():
    g = perm_graph(P("36285714"))
    m = find_embedding(path(4), g)
    assert m is not None
    for a in range(4):
        for b in range(a + 1, 4):
            assert path(4).has_edge(a, b) == g.has_edge(m[a], m[b])
    assert induced_subgraph_iso(g, g)
    assert find_embedding(complete(3), path(5)) is None


def test_pattern_containment_gives_induced_subgraph():
    rng = random.Random(4)
    for _ in range(200):
        pi = tuple(rng.sample(range(1, 9), 8))
        sigma = tuple(rng.sample(range(1, 5), 4))
        if contains(sigma, pi):
            assert induced_subgraph_iso(perm_graph(sigma), perm_graph(pi))


def test_two_k2_absent_from_w():
    two_k2 = catalog()["2K2"]
    for n in range(9):
        for p in all_perms(n):
            if n >= 4 and in_W(p):
                assert not induced_subgraph_iso(two_k2, perm_graph(p))


# -- complements and split graphs ------------------------------------------

def test_complement():
    cat = catalog()
    assert graph_iso(complement(cat["2K2"]), cat["C4"])
    for g in ATLAS[::11]:
        assert complement(complement(g)) == g
    assert cat["co-net"] == complement(cat["net"])


def test_split_examples():
    assert is_split(complete(5))
    assert not is_split(cycle(5))
    assert not is_split(cycle(4))
    assert is_split(empty(3))


def test_split_forbidden_subgraphs():
    bad = [catalog()["2K2"], cycle(4), cycle(5)]
    for g in ATLAS:
        assert is_split(g) == (not any(induced_subgraph_iso(f, g) for f in bad))


def test_split_permutation_graphs_are_skew_merged():
    for n in range(8):
        for p in all_perms(n):
            assert is_split(perm_graph(p)) == is_skew_merged(p)


# -- catalog ---------------------------------------------------------------

def test_catalog_shape():
    cat = catalog()
    assert tuple(cat) == CATALOG_NAMES
    assert (cat["net"].n, cat["net"].num_edges()) == (6, 6)
    assert cat["rising-sun"].n == 7
    assert graph_iso(cat["X160"], complement(cat["X160"]))
    for a, b in permutations(CATALOG_NAMES, 2):
        assert not graph_iso(cat[a], cat[b])


def test_catalog_containments():
    # two pairs in the list are comparable; every other pair is not
    cat = catalog()
    below = {(a, b) for a, b in permutations(CATALOG_NAMES, 2)
             if induced_subgraph_iso(cat[a], cat[b])}
    assert below == {("H", "co-rising-sun"), ("co-H", "rising-sun")}
    for a, b in below:
        assert GraphMatcher(cat[b].to_networkx(), cat[a].to_networkx()).subgraph_is_isomorphic()


def test_realizers_examples():
    cat = catalog()
    assert realizing_permutations(cat["H"], 6) == [P("236145"), P("412563")]
    assert realizing_permutations(complete(1), 1) == [(1,)]
    assert realizing_permutations(cycle(5), 5) == []
    with pytest.raises(TooLarge):
        realizing_permutations(empty(10), 10)


def test_realizers_brute_force():
    rng = random.Random(5)
    for g in rng.sample([g for g in ATLAS if g.n == 5], 10):
        want = [p for p in all_perms(5)
                if nx.is_isomorphic(perm_graph(p).to_networkx(), g.to_networkx())]
        assert realizing_permutations(g, 5) == want


def test_x160_has_four_realizers():
    # two inverse pairs; the chart row names only the first
    found = realizing_permutations(catalog()["X160"], 8)
    assert found == [P("28463517"), P("28536417"), P("71463582"), P("71536482")]
    assert inverse(P("28463517")) == P("71536482")
    assert in_W(P("71536482"))
    assert set(CATALOG_REALIZERS["X160"]) < set(found)


# -- enumeration -----------------------------------------------------------

def test_enumerate_avoiding_examples():
    edgeless = enumerate_graphs_avoiding([complete(2)], 3)
    assert edgeless == {canonical_form(empty(n)) for n in range(4)}
    everything = enumerate_graphs_avoiding([], 4)
    assert len(everything) == 1 + 1 + 2 + 4 + 11
    assert sum(form[0] == 4 for form in everything) == 11


def test_enumerate_avoiding_matches_atlas_filter():
    forbidden = [path(4), cycle(4)]
    want = {canonical_form(g) for g in ATLAS if g.n <= 6
            and not any(induced_subgraph_iso(f, g) for f in forbidden)}
    assert enumerate_graphs_avoiding(forbidden, 6) == want


def test_enumerate_avoiding_catalog_at_four():
    found = enumerate_graphs_avoiding(list(catalog().values()), 4)
    realised = {canonical_form(perm_graph(p)) for n in range(5)
                for p in all_perms(n) if in_W_union_inverse(p)}
    assert found == realised
