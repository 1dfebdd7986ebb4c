import random
from itertools import combinations

import pytest

from spiralwqo.graphs import (
    Graph, complete, cycle, graph_iso, induced_subgraph_iso, path, perm_graph,
)
from spiralwqo.labelled import (
    BLACK_WHITE, TRIVIAL_POSET, CannotDelete, LabelledGraph, LabelPoset,
    PosetMismatch, TooSmall, antichain_check, format_labelled, labelled_embeds,
    labelled_path, parse_labelled, prop1_construction, wk_graph, wk_vertex,
)
from spiralwqo.widdershins import spiral

CHAIN = LabelPoset(("b", "w"), [("b", "w")])


def random_graph(rng, n, p=0.5):
    return Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def test_poset_closure():
    poset = LabelPoset("abc", [("a", "b"), ("b", "c")])
    assert poset.leq("a", "c")
    assert not poset.leq("c", "a")
    assert BLACK_WHITE.leq("b", "b") and not BLACK_WHITE.leq("b", "w")
    with pytest.raises(ValueError):
        LabelPoset("ab", [("a", "z")])


def test_label_validation():
    with pytest.raises(ValueError):
        LabelledGraph(path(2), ("b",))
    with pytest.raises(ValueError):
        LabelledGraph(path(2), ("b", "x"))


def test_identity_embedding():
    lg = wk_graph(5)
    assert labelled_embeds(lg, lg)


def test_trivial_poset_is_plain_embedding():
    rng = random.Random(0)
    for _ in range(100):
        h, g = random_graph(rng, rng.randint(1, 4)), random_graph(rng, 6)
        lh = LabelledGraph(h, ("*",) * h.n, TRIVIAL_POSET)
        lg = LabelledGraph(g, ("*",) * g.n, TRIVIAL_POSET)
        assert labelled_embeds(lh, lg) == induced_subgraph_iso(h, g)


def test_raising_host_labels_keeps_embeddings():
    rng = random.Random(1)
    for _ in range(100):
        h, g = random_graph(rng, 3), random_graph(rng, 6)
        lh = LabelledGraph(h, tuple(rng.choice("bw") for _ in range(3)), CHAIN)
        low = tuple(rng.choice("bw") for _ in range(6))
        high = tuple("w" if a == "w" or rng.random() < 0.5 else "b" for a in low)
        if labelled_embeds(lh, LabelledGraph(g, low, CHAIN)):
            assert labelled_embeds(lh, LabelledGraph(g, high, CHAIN))


def test_poset_mismatch():
    a = LabelledGraph(path(2), ("b", "b"))
    b = LabelledGraph(path(2), ("b", "w"), CHAIN)
    with pytest.raises(PosetMismatch):
        labelled_embeds(a, b)
    with pytest.raises(PosetMismatch):
        antichain_check([a, b])


# -- W_k ---------------------------------------------------------------------

def test_wk_shape():
    w4 = wk_graph(4)
    assert (w4.graph.n, w4.graph.num_edges()) == (8, 13)
    assert w4.labels.count("w") == 2
    assert w4.labels[wk_vertex(4, "u", 1)] == "w"
    assert w4.labels[wk_vertex(4, "v", 4)] == "w"
    with pytest.raises(TooSmall):
        wk_graph(3)


@pytest.mark.parametrize("k", range(4, 13))
def test_wk_adjacency_rule(k):
    g = wk_graph(k).graph
    for i in range(1, k + 1):
        for j in range(1, k + 1):
            u, v = wk_vertex(k, "u", i), wk_vertex(k, "u", j)
            assert g.has_edge(wk_vertex(k, "v", i), wk_vertex(k, "v", j)) == (i != j)
            assert not g.has_edge(u, v)
            assert g.has_edge(u, wk_vertex(k, "v", j)) == (i == j or i <= j - 2)


@pytest.mark.parametrize("k", range(4, 10))
def test_wk_is_spiral_graph(k):
    assert graph_iso(wk_graph(k).graph, perm_graph(spiral(("standard", 2 * k))))


def test_wk_labelled_antichain_unlabelled_chain():
    fam = {k: wk_graph(k) for k in range(4, 11)}
    for k, ell in combinations(fam, 2):
        assert not labelled_embeds(fam[k], fam[ell])
        assert not labelled_embeds(fam[ell], fam[k])
        assert induced_subgraph_iso(fam[k].graph, fam[ell].graph)


def test_wk_with_one_label_dropped_embeds():
    # both white vertices are needed: recolour one black and W_4 fits in W_5
    w4, w5 = wk_graph(4), wk_graph(5)
    labels = list(w4.labels)
    labels[wk_vertex(4, "v", 4)] = "b"
    assert labelled_embeds(LabelledGraph(w4.graph, tuple(labels)), w5)


# -- labelled paths --------------------------------------------------------

def test_labelled_path_examples():
    p4 = labelled_path(4)
    assert p4.labels == ("w", "b", "b", "w")
    assert [v for v in range(4) if p4.graph.degree(v) == 1] == [0, 3]
    assert not labelled_embeds(labelled_path(4), labelled_path(5))
    assert induced_subgraph_iso(path(4), path(5))
    with pytest.raises(TooSmall):
        labelled_path(2)


def test_antichain_check_examples():
    assert antichain_check([wk_graph(k) for k in range(4, 8)])
    assert antichain_check([labelled_path(m) for m in range(3, 13)])
    assert not antichain_check([labelled_path(4), labelled_path(4)])
    assert antichain_check([])


# -- vertex deletion labelling -----------------------------------------------

def test_prop1_on_cycles():
    out = prop1_construction([cycle(m) for m in range(5, 10)])
    assert antichain_check(out)
    for m, lg in zip(range(5, 10), out):
        assert graph_iso(lg.graph, path(m - 1))
        assert lg.labels.count("w") == 2


def test_prop1_small_cases():
    (k1,) = prop1_construction([complete(2)])
    assert k1.graph.n == 1 and k1.labels == ("w",)
    with pytest.raises(CannotDelete):
        prop1_construction([Graph(0, ())])
    last = prop1_construction([cycle(5)], pick=lambda g: g.n - 1)[0]
    assert graph_iso(last.graph, path(4))


def test_text_round_trip():
    for lg in (wk_graph(4), labelled_path(6)):
        assert parse_labelled(format_labelled(lg)) == lg
