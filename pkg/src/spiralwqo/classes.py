"""
Permutation classes given by a basis or by a membership test.

Classes are downward closed, so the members of length n are exactly the
one-point extensions of members of length n - 1 that pass the test.  Both
``enumerate_class`` and ``compute_basis`` walk the levels this way instead of
scanning all n! permutations.
"""

from __future__ import annotations

import hashlib
import logging
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from itertools import combinations
from pathlib import Path
from typing import Callable, Hashable, Iterable, Sequence

import numpy as np

from .perm import (
    Perm, contains, format_perm, one_point_deletions, one_point_extensions,
    parse_perm, shortlex,
)

log = logging.getLogger(__name__)

CACHE_FORMAT = "spiralwqo-levels-v1"


class DomainExceeded(ValueError):
    pass


class UnknownLetter(KeyError):
    pass


# -- bases -------------------------------------------------------------------

def avoids_all(pi: Perm, basis: Iterable[Perm]) -> bool:
    return not any(contains(b, pi) for b in basis)


def is_antichain(perms: Iterable[Perm]) -> bool:
    ps = list(perms)
    for a, b in combinations(ps, 2):
        if a == b or contains(a, b) or contains(b, a):
            return False
    return True


def read_basis(path) -> list[Perm]:
    with open(path, encoding="utf-8") as fh:
        return shortlex(parse_perm(line) for line in fh if line.strip())


def write_basis(path, basis: Iterable[Perm]) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for p in shortlex(basis):
            fh.write(format_perm(p) + "\n")


def _pair_bits(k: int) -> list[tuple[int, int]]:
    return list(combinations(range(k), 2))


def _pattern_code(values: Sequence[int]) -> int:
    code = 0
    for bit, (a, b) in enumerate(_pair_bits(len(values))):
        if values[a] > values[b]:
            code |= 1 << bit
    return code


def avoids_all_batch(perms: np.ndarray, basis: Iterable[Perm]) -> np.ndarray:
    """
    Vectorised avoidance test for many permutations of one length.

    ``perms`` is an (N, n) integer array.  Every k-subset of columns is
    encoded by its pairwise comparison bits, which determine the pattern
    uniquely, and looked up among the basis codes of length k.  Independent
    of the backtracking ``contains``.
    """
    perms = np.asarray(perms)
    count, n = perms.shape
    hit = np.zeros(count, dtype=bool)
    by_len: dict[int, list[int]] = {}
    for b in basis:
        by_len.setdefault(len(b), []).append(_pattern_code(b))
    for k, codes in by_len.items():
        if k == 0:
            hit[:] = True
            continue
        if k > n:
            continue
        table = np.zeros(1 << (k * (k - 1) // 2), dtype=bool)
        table[codes] = True
        pairs = _pair_bits(k)
        for cols in combinations(range(n), k):
            code = np.zeros(count, dtype=np.int64)
            for bit, (a, b) in enumerate(pairs):
                code |= (perms[:, cols[a]] > perms[:, cols[b]]).astype(np.int64) << bit
            hit |= table[code]
    return ~hit


# -- oracles -----------------------------------------------------------------

@dataclass(frozen=True)
class MembershipOracle:
    """A downward-closed membership test with a trusted length bound."""
    name: str
    test: Callable[[Perm], bool] = field(compare=False)
    max_len: float = math.inf

    def __call__(self, p: Perm) -> bool:
        return self.test(p)


def _always(p: Perm) -> bool:
    return True


ALWAYS = MembershipOracle("all", _always)


def basis_oracle(basis: Iterable[Perm], name: str | None = None) -> MembershipOracle:
    b = tuple(shortlex(set(basis)))
    if name is None:
        name = "av:" + ",".join("".join(map(str, p)) if len(p) <= 9 else
                                "-".join(map(str, p)) for p in b)
    return MembershipOracle(name, partial(avoids_all, basis=b))


def _either(p: Perm, first, second) -> bool:
    return avoids_all(p, first) or avoids_all(p, second)


# -- level walking -----------------------------------------------------------

def _check_domain(member: MembershipOracle, n: int) -> None:
    if n > member.max_len:
        raise DomainExceeded(
            f"oracle {member.name!r} is trusted up to length {member.max_len}, "
            f"asked for {n}")


def _classify(member: MembershipOracle, candidates: list[Perm], workers: int) -> list[bool]:
    if workers <= 1 or len(candidates) < 2000:
        return [bool(member(p)) for p in candidates]
    chunk = max(1, len(candidates) // (workers * 8))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(member.test, candidates, chunksize=chunk))


def _cache_path(cache_dir, member: MembershipOracle, n: int) -> Path:
    safe = "".join(c if c.isalnum() or c in "-_." else "_" for c in member.name)
    return Path(cache_dir) / safe / f"level_{n:02d}.txt"


def _load_level(cache_dir, member: MembershipOracle, n: int):
    if cache_dir is None:
        return None
    path = _cache_path(cache_dir, member, n)
    if not path.exists():
        return None
    with open(path, encoding="utf-8") as fh:
        header = fh.readline().rstrip("\n").split("\t")
        if header != [CACHE_FORMAT, member.name, str(n)]:
            return None
        return [tuple(map(int, line.split())) for line in fh]


def _store_level(cache_dir, member: MembershipOracle, n: int, perms: list[Perm]) -> None:
    if cache_dir is None:
        return
    path = _cache_path(cache_dir, member, n)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    with open(tmp, "w", encoding="utf-8") as fh:
        fh.write(f"{CACHE_FORMAT}\t{member.name}\t{n}\n")
        for p in perms:
            fh.write(" ".join(map(str, p)) + "\n")
    os.replace(tmp, path)


def _candidates(level: list[Perm]) -> list[Perm]:
    out: set[Perm] = set()
    for p in level:
        out |= one_point_extensions(p)
    return sorted(out)


def enumerate_class(member: MembershipOracle, max_n: int, *, workers: int = 1,
                    cache_dir=None) -> list[list[Perm]]:
    """
    Members of the class of each length 0..max_n, each list sorted.

    >>> [len(level) for level in enumerate_class(basis_oracle([(2, 1)]), 4)]
    [1, 1, 1, 1, 1]
    """
    _check_domain(member, max_n)
    levels: list[list[Perm]] = [[()] if member(()) else []]
    for n in range(1, max_n + 1):
        cached = _load_level(cache_dir, member, n)
        if cached is not None:
            levels.append(cached)
            continue
        cands = _candidates(levels[-1])
        verdicts = _classify(member, cands, workers)
        level = [p for p, ok in zip(cands, verdicts) if ok]
        log.info("%s: %d members of length %d", member.name, len(level), n)
        _store_level(cache_dir, member, n, level)
        levels.append(level)
    return levels


def class_counts(member: MembershipOracle, max_n: int, **kw) -> list[int]:
    return [len(level) for level in enumerate_class(member, max_n, **kw)]


def compute_basis(member: MembershipOracle, max_len: int, *, workers: int = 1,
                  cache_dir=None) -> list[Perm]:
    """
    Minimal non-members of length <= max_len, in shortlex order.

    A minimal non-member has every one-point deletion in the class, so it is
    an extension of a member of the previous level.
    """
    _check_domain(member, max_len)
    if not member(()):
        return [()]
    basis: list[Perm] = []
    prev: list[Perm] = [()]
    for n in range(1, max_len + 1):
        prev_set = set(prev)
        cands = _candidates(prev)
        cached = _load_level(cache_dir, member, n)
        if cached is not None:
            members = set(cached)
            verdicts = [p in members for p in cands]
        else:
            verdicts = _classify(member, cands, workers)
        level = []
        for p, ok in zip(cands, verdicts):
            if ok:
                level.append(p)
            elif one_point_deletions(p) <= prev_set:
                basis.append(p)
        if cached is None:
            _store_level(cache_dir, member, n, level)
        log.info("%s: length %d, %d members, %d basis elements so far",
                 member.name, n, len(level), len(basis))
        prev = level
    return shortlex(basis)


def union_basis(basis_c: Iterable[Perm], basis_d: Iterable[Perm], *,
                max_len: int | None = None, workers: int = 1,
                cache_dir=None, name: str | None = None) -> list[Perm]:
    """
    Basis of Av(C) | Av(D).

    The search bound defaults to maxlen(C) + maxlen(D), which is complete;
    a smaller ``max_len`` gives the basis elements up to that length only.
    """
    c = tuple(shortlex(set(basis_c)))
    d = tuple(shortlex(set(basis_d)))
    if not c or not d:
        # Av({}) is everything, so the union is too
        return []
    bound = max(map(len, c)) + max(map(len, d))
    if max_len is None:
        max_len = bound
    if name is None:
        # distinct bases must never share cached levels
        digest = hashlib.sha1(repr((c, d)).encode()).hexdigest()[:12]
        name = f"union-{digest}"
    member = MembershipOracle(name,
                              partial(_either, first=c, second=d))
    return compute_basis(member, min(max_len, bound), workers=workers,
                         cache_dir=cache_dir)


# -- generalized subword order -----------------------------------------------

@dataclass(frozen=True)
class LetterOrder:
    """A quasi-order on letters: ``leq(a, b)``, plus an alphabet check."""
    leq: Callable[[Hashable, Hashable], bool]
    valid: Callable[[Hashable], bool] = lambda a: True

    def check(self, letter) -> None:
        if not self.valid(letter):
            raise UnknownLetter(letter)


def generalized_subword_leq(v: Sequence, w: Sequence, order: LetterOrder) -> bool:
    """
    True iff v embeds in w with each letter of v below its image.

    Greedy: match each letter of v to the earliest admissible letter of w
    after the previous match.  Taking the earliest match never hurts, because
    it leaves a superset of positions for the remaining letters.
    """
    for letter in v:
        order.check(letter)
    for letter in w:
        order.check(letter)
    i = 0
    for a in v:
        while i < len(w) and not order.leq(a, w[i]):
            i += 1
        if i == len(w):
            return False
        i += 1
    return True
