"""
Bounded recomputation of each computational claim, with a uniform report.

Each ``verify_*`` function returns a VerificationReport whose verdict is
PASS or FAIL; a FAIL always carries a counterexample that the relevant
module operation can re-check on its own.
"""

from __future__ import annotations

import json
import logging
import random
import time
from dataclasses import asdict, dataclass, field
from itertools import combinations, permutations

import numpy as np

from . import classes, graphs, labelled
from . import widdershins as spiral
from .perm import (
    Perm, all_perms, contains, format_compact, inverse, one_point_deletions,
    pattern_of, reverse_complement, rotate90, shortlex,
)

log = logging.getLogger(__name__)

CLAIMS = ("prop3.3", "cor3.5", "cor3.2", "prop4.3", "prop4.4", "fig1",
          "oracles", "monotonicity", "structure")


@dataclass
class VerificationReport:
    claim: str
    parameters: dict
    verdict: str
    counterexample: dict | None = None
    details: dict = field(default_factory=dict)
    wall_time: float | None = None

    @property
    def passed(self) -> bool:
        return self.verdict == "PASS"

    def to_json(self, timing: bool = True) -> str:
        d = asdict(self)
        if not timing:
            d["wall_time"] = None
        return json.dumps(d, sort_keys=True, ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        return cls(**json.loads(text))

    def to_text(self) -> str:
        lines = [f"claim: {self.claim}",
                 "parameters: " + " ".join(f"{k}={v}" for k, v in sorted(self.parameters.items())),
                 f"verdict: {self.verdict}"]
        for k, v in sorted(self.details.items()):
            if isinstance(v, list):
                v = " ".join(map(str, v))
            lines.append(f"{k}: {v}")
        if self.counterexample is not None:
            lines.append("counterexample: " + json.dumps(self.counterexample, sort_keys=True,
                                                         ensure_ascii=False))
        if self.wall_time is not None:
            lines.append(f"wall_time: {self.wall_time:.3f}s")
        return "\n".join(lines)


def _report(claim, params, failure, details, start) -> VerificationReport:
    return VerificationReport(claim, params, "FAIL" if failure else "PASS",
                              failure, details, round(time.perf_counter() - start, 3))


def _names(perms) -> list[str]:
    return [format_compact(p) for p in shortlex(perms)]


# -- permutations ------------------------------------------------------------

def verify_prop_3_3(max_len: int = 7, *, workers: int = 1, cache_dir=None) -> VerificationReport:
    start = time.perf_counter()
    found = classes.compute_basis(spiral.W_ORACLE, max_len, workers=workers,
                                  cache_dir=cache_dir)
    expected = [b for b in spiral.BASIS_W if len(b) <= max_len]
    failure = None
    if shortlex(found) != shortlex(expected):
        failure = {"missing": _names(set(expected) - set(found)),
                   "unexpected": _names(set(found) - set(expected))}
    return _report("prop3.3", {"max_len": max_len}, failure,
                   {"basis": _names(found), "size": len(found)}, start)


def verify_cor_3_5(max_len: int = 8, *, workers: int = 1, cache_dir=None) -> VerificationReport:
    start = time.perf_counter()
    w_inv = [inverse(b) for b in spiral.BASIS_W]
    found = classes.union_basis(spiral.BASIS_W, w_inv, max_len=max_len, workers=workers,
                                cache_dir=cache_dir, name="union[W|Winv]")
    expected = [b for b in spiral.BASIS_W_UNION_INVERSE if len(b) <= max_len]
    failure = None
    if shortlex(found) != shortlex(expected):
        failure = {"missing": _names(set(expected) - set(found)),
                   "unexpected": _names(set(found) - set(expected))}
    return _report("cor3.5", {"max_len": max_len}, failure,
                   {"basis": _names(found), "size": len(found)}, start)


def verify_cor_3_2(max_n: int = 10, *, workers: int = 1, cache_dir=None) -> VerificationReport:
    start = time.perf_counter()
    counts = classes.class_counts(spiral.W_ORACLE, max_n, workers=workers, cache_dir=cache_dir)
    series = spiral.gf_coefficients(max_n)
    failure = None
    for n, (a, b) in enumerate(zip(counts, series)):
        if a != b:
            failure = {"n": n, "enumerated": a, "series": b}
            break
    return _report("cor3.2", {"max_n": max_n}, failure,
                   {"counts": counts, "series": series}, start)


def verify_oracles(max_n: int = 9) -> VerificationReport:
    """Ring decomposition against 13-pattern avoidance on every permutation
    of length <= max_n (the latter through the vectorised kernel)."""
    start = time.perf_counter()
    failure = None
    checked = 0
    for n in range(max_n + 1):
        if n == 0:
            batch = np.zeros((1, 0), dtype=np.int8)
            perms = [()]
        else:
            batch = np.array(list(all_perms(n)), dtype=np.int8)
            perms = None
        by_basis = classes.avoids_all_batch(batch, spiral.BASIS_W)
        for idx in range(batch.shape[0]):
            p = perms[idx] if perms else tuple(int(v) for v in batch[idx])
            if spiral.in_W(p) != bool(by_basis[idx]):
                failure = {"perm": format_compact(p), "ring": spiral.in_W(p),
                           "basis": bool(by_basis[idx])}
                break
        checked += batch.shape[0]
        if failure:
            break
    return _report("oracles", {"max_n": max_n}, failure, {"checked": checked}, start)


def _member_sample(rng: random.Random, levels, max_n: int) -> Perm:
    n = rng.randint(0, max_n)
    return rng.choice(levels[n])


def verify_monotonicity(pairs: int = 10_000, max_n: int = 10, seed: int = 0,
                        *, cache_dir=None) -> VerificationReport:
    """Ring-word dominance implies containment, on random member pairs plus
    pairs built to be comparable (sigma a random pattern of pi)."""
    start = time.perf_counter()
    levels = classes.enumerate_class(spiral.W_ORACLE, max_n, cache_dir=cache_dir)
    rng = random.Random(seed)
    dominated = 0
    failure = None
    trials = []
    for _ in range(pairs):
        trials.append((_member_sample(rng, levels, max_n), _member_sample(rng, levels, max_n)))
    for _ in range(pairs):
        pi = _member_sample(rng, levels, max_n)
        keep = sorted(rng.sample(range(len(pi)), rng.randint(0, len(pi))))
        trials.append((pattern_of([pi[i] for i in keep]), pi))
    for sigma, pi in trials:
        ws, wp = spiral.ring_decompose(sigma), spiral.ring_decompose(pi)
        if classes.generalized_subword_leq(ws, wp, spiral.FOUR_CHAINS):
            dominated += 1
            if not contains(sigma, pi):
                failure = {"sigma": format_compact(sigma), "pi": format_compact(pi),
                           "w_sigma": spiral.format_word(ws), "w_pi": spiral.format_word(wp)}
                break
    return _report("monotonicity", {"pairs": pairs, "max_n": max_n, "seed": seed}, failure,
                   {"trials": len(trials), "dominated": dominated}, start)


# -- graphs ------------------------------------------------------------------

def union_members(max_n: int, *, cache_dir=None) -> list[list[Perm]]:
    return classes.enumerate_class(spiral.WUWINV_ORACLE, max_n, cache_dir=cache_dir)


def verify_chart(max_perm_n: int = 8) -> VerificationReport:
    """Every row of the graph/permutation chart, recomputed by brute force."""
    start = time.perf_counter()
    cat = graphs.catalog()
    rows = {}
    failure = None
    for name, listed in graphs.CATALOG_REALIZERS.items():
        g = cat[name]
        if g.n > max_perm_n:
            continue
        found = graphs.realizing_permutations(g, g.n)
        rows[name] = _names(found)
        if shortlex(found) != shortlex(listed) and failure is None:
            failure = {"graph": name, "listed": _names(listed), "found": _names(found),
                       "unlisted_members": _names(p for p in set(found) - set(listed)
                                                  if spiral.in_W_union_inverse(p))}
    return _report("chart", {"max_perm_n": max_perm_n}, failure, {"rows": json.dumps(rows)}, start)


def forward_violations(max_perm_n: int = 8, forbidden=None, *, cache_dir=None):
    """(perm, graph name) pairs with perm in W | W^-1 whose permutation graph
    contains a forbidden graph."""
    cat = graphs.catalog() if forbidden is None else forbidden
    out = []
    for level in union_members(max_perm_n, cache_dir=cache_dir):
        for p in level:
            g = graphs.perm_graph(p)
            for name, f in cat.items():
                if f.n <= g.n and graphs.induced_subgraph_iso(f, g):
                    out.append((p, name))
    return out


def unmatched_classes(max_graph_n: int = 7, forbidden=None, *, cache_dir=None) -> list[bytes]:
    """Canonical forms of graphs avoiding the forbidden list that are not the
    permutation graph of any member of W | W^-1 of the same order."""
    cat = graphs.catalog() if forbidden is None else forbidden
    avoiding = graphs.enumerate_graphs_avoiding(list(cat.values()), max_graph_n)
    realised = {graphs.canonical_form(graphs.perm_graph(p))
                for level in union_members(max_graph_n, cache_dir=cache_dir) for p in level}
    return sorted(avoiding - realised)


def verify_prop_4_3(max_graph_n: int = 7, max_perm_n: int = 8, *, cache_dir=None) -> VerificationReport:
    """
    Distinctness and antichain property of the fourteen graphs, the chart,
    and both inclusions at bounded size.  Every sub-check runs; the report
    lists each outcome and the counterexample is the first failure found.
    """
    start = time.perf_counter()
    cat = graphs.catalog()
    names = list(cat)
    failures = []
    same = [[a, b] for a, b in combinations(names, 2) if graphs.graph_iso(cat[a], cat[b])]
    if same:
        failures.append({"check": "distinct", "graphs": same[0]})
    below = [[a, b] for a, b in permutations(names, 2)
             if graphs.induced_subgraph_iso(cat[a], cat[b])]
    if below:
        failures.append({"check": "antichain", "graphs": below[0]})
    chart = verify_chart(max_perm_n)
    if not chart.passed:
        failures.append(dict(check="chart", **chart.counterexample))
    fwd = forward_violations(max_perm_n, cache_dir=cache_dir)
    if fwd:
        p, name = fwd[0]
        failures.append({"check": "forward", "perm": format_compact(p), "graph": name,
                         "graph6": graphs.to_graph6(graphs.perm_graph(p))})
    rev = unmatched_classes(max_graph_n, cache_dir=cache_dir)
    if rev:
        failures.append({"check": "reverse",
                         "graph6": graphs.to_graph6(graphs.graph_from_canonical(rev[0]))})
    details = {
        "isomorphic_pairs": ["=".join(pair) for pair in same],
        "contained_pairs": ["<=".join(pair) for pair in below],
        "chart": chart.verdict,
        "forward_violations": [f"{format_compact(p)}:{name}" for p, name in fwd],
        "unmatched_classes": len(rev),
    }
    return _report("prop4.3", {"max_graph_n": max_graph_n, "max_perm_n": max_perm_n},
                   failures[0] if failures else None, details, start)


def verify_prop_4_4(max_k: int = 9) -> VerificationReport:
    start = time.perf_counter()
    failure = None
    fam = {k: labelled.wk_graph(k) for k in range(4, max_k + 1)}
    for k in fam:
        if not graphs.graph_iso(fam[k].graph, graphs.perm_graph(spiral.spiral(("standard", 2 * k)))):
            failure = {"check": "spiral-graph", "k": k}
            break
    if failure is None:
        for k, ell in combinations(fam, 2):
            if labelled.labelled_embeds(fam[k], fam[ell]):
                failure = {"check": "labelled", "k": k, "l": ell}
                break
            if not graphs.induced_subgraph_iso(fam[k].graph, fam[ell].graph):
                failure = {"check": "unlabelled", "k": k, "l": ell}
                break
    return _report("prop4.4", {"max_k": max_k}, failure, {"members": len(fam)}, start)


def verify_fig1(max_m: int = 12) -> VerificationReport:
    start = time.perf_counter()
    paths = {m: labelled.labelled_path(m) for m in range(3, max_m + 1)}
    failure = None
    for a, b in permutations(paths, 2):
        if labelled.labelled_embeds(paths[a], paths[b]):
            failure = {"pattern": a, "host": b}
            break
    return _report("fig1", {"max_m": max_m}, failure, {"members": len(paths)}, start)


def verify_structure(max_n: int = 8) -> VerificationReport:
    """Round trips, spiral chains, downward closure, and the vertex-deletion
    labelling applied to chordless cycles."""
    start = time.perf_counter()
    failure = None
    levels = classes.enumerate_class(spiral.W_ORACLE, max_n)
    members = [set(level) for level in levels]
    for n, level in enumerate(levels):
        for p in level:
            if spiral.ring_compose(spiral.ring_decompose(p)) != p:
                failure = {"check": "ring-roundtrip", "perm": format_compact(p)}
            elif (inverse(inverse(p)) != p or reverse_complement(reverse_complement(p)) != p
                  or rotate90(p, 4) != p):
                failure = {"check": "symmetry-involution", "perm": format_compact(p)}
            elif rotate90(p) not in members[n]:
                failure = {"check": "rotation-closure", "perm": format_compact(p)}
            elif n and not all(q in members[n - 1] for q in one_point_deletions(p)):
                failure = {"check": "downward-closure", "perm": format_compact(p)}
            if failure:
                break
        if failure:
            break
    if failure is None:
        for o1 in spiral.ORIENTATIONS:
            for o2 in spiral.ORIENTATIONS:
                for m in range(4, 13):
                    if not contains(spiral.spiral((o1, m)), spiral.spiral((o2, m + 3))):
                        failure = {"check": "spiral-chain", "from": [o1, m], "to": [o2, m + 3]}
    if failure is None:
        cycles = [graphs.cycle(m) for m in range(5, 10)]
        if not labelled.antichain_check(labelled.prop1_construction(cycles)):
            failure = {"check": "deletion-labelling"}
    if failure is None:
        for g in graphs.catalog().values():
            if graphs.complement(graphs.complement(g)) != g:
                failure = {"check": "complement-involution", "graph6": graphs.to_graph6(g)}
    return _report("structure", {"max_n": max_n}, failure,
                   {"members": sum(map(len, levels))}, start)


def run_verify(claim: str, *, max_len=None, max_n=None, max_k=None, graph_n=None,
               perm_n=None, workers: int = 1, cache_dir=None) -> VerificationReport:
    if claim == "prop3.3":
        return verify_prop_3_3(max_len or 7, workers=workers, cache_dir=cache_dir)
    if claim == "cor3.5":
        return verify_cor_3_5(max_len or 8, workers=workers, cache_dir=cache_dir)
    if claim == "cor3.2":
        return verify_cor_3_2(10 if max_n is None else max_n, workers=workers,
                              cache_dir=cache_dir)
    if claim == "prop4.3":
        return verify_prop_4_3(graph_n or 7, perm_n or 8, cache_dir=cache_dir)
    if claim == "prop4.4":
        return verify_prop_4_4(max_k or 9)
    if claim == "fig1":
        return verify_fig1(max_len or 12)
    if claim == "oracles":
        return verify_oracles(9 if max_n is None else max_n)
    if claim == "monotonicity":
        return verify_monotonicity(max_n=max_n or 10, cache_dir=cache_dir)
    if claim == "structure":
        return verify_structure(max_n or 8)
    raise ValueError(f"unknown claim {claim!r}; choose from {', '.join(CLAIMS)}")
