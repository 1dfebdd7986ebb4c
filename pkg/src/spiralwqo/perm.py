"""
Permutations in one-line notation.

A permutation of length n is a plain tuple holding each of 1..n exactly once;
the empty tuple is the empty permutation.  Tuples keep the hot search loops
cheap and hash well, so every function here takes and returns tuples.

>>> contains((2, 5, 4, 1, 3), (3, 6, 2, 8, 5, 7, 1, 4))
True
>>> direct_sum((2, 1), (2, 1))
(2, 1, 4, 3)
"""

from __future__ import annotations

from itertools import permutations
from typing import Iterable, Sequence

__all__ = [
    "Perm", "InvalidPermutation", "InvalidPointSet", "EmptyPermutation",
    "make_perm", "is_perm", "parse_perm", "format_perm", "format_compact",
    "standardize", "plot", "pattern_of",
    "contains", "inverse", "reverse_complement", "rotate90",
    "direct_sum", "skew_sum", "sum_components", "skew_components",
    "proper_intervals", "one_point_deletions", "one_point_extensions",
    "identity", "all_perms", "shortlex",
]

Perm = tuple  # tuple[int, ...] holding 1..n

EMPTY_SYMBOL = "ε"


class InvalidPermutation(ValueError):
    pass


class InvalidPointSet(ValueError):
    pass


class EmptyPermutation(ValueError):
    pass


def is_perm(values: Sequence[int]) -> bool:
    n = len(values)
    return sorted(values) == list(range(1, n + 1))


def make_perm(values: Iterable[int]) -> Perm:
    """Validate and freeze a sequence of values into a permutation."""
    p = tuple(int(v) for v in values)
    if not is_perm(p):
        raise InvalidPermutation(f"not a permutation of 1..{len(p)}: {p}")
    return p


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def all_perms(n: int):
    """All permutations of length n in lexicographic order."""
    return permutations(range(1, n + 1))


def shortlex(perms: Iterable[Perm]) -> list[Perm]:
    """Sort by length, then lexicographically."""
    return sorted(perms, key=lambda p: (len(p), p))


# -- text form ---------------------------------------------------------------

def parse_perm(text: str) -> Perm:
    """
    Parse "3 1 4 2", "3,1,4,2", the compact "3142" (n <= 9) or "ε".

    >>> parse_perm("3142")
    (3, 1, 4, 2)
    >>> parse_perm("ε")
    ()
    """
    s = text.strip()
    if s in (EMPTY_SYMBOL, "e", "eps", ""):
        return ()
    if " " in s or "," in s:
        parts = s.replace(",", " ").split()
    else:
        parts = list(s)
        if len(parts) > 9:
            raise InvalidPermutation(
                f"compact form is only accepted for n <= 9: {text!r}")
    try:
        return make_perm(int(tok) for tok in parts)
    except ValueError as exc:
        raise InvalidPermutation(f"cannot parse permutation {text!r}") from exc


def format_perm(p: Perm) -> str:
    if not p:
        return EMPTY_SYMBOL
    return " ".join(map(str, p))


def format_compact(p: Perm) -> str:
    """Digit-string form, falling back to spaces when n > 9."""
    if not p:
        return EMPTY_SYMBOL
    if len(p) > 9:
        return format_perm(p)
    return "".join(map(str, p))


# -- plots -------------------------------------------------------------------

def standardize(points: Iterable[tuple]) -> Perm:
    """
    Read off the permutation labelling a generic point set.

    Points are sorted by x and each is replaced by the rank of its y value.
    Coordinates may be any mutually comparable numbers.

    >>> standardize([(2, -2), (1, 2), (-2, 1), (-1, -5)])
    (3, 1, 4, 2)
    """
    pts = list(points)
    xs = [x for x, _ in pts]
    ys = [y for _, y in pts]
    if len(set(xs)) != len(xs) or len(set(ys)) != len(ys):
        raise InvalidPointSet("point set is not generic (repeated coordinate)")
    rank = {y: r for r, y in enumerate(sorted(ys), start=1)}
    return tuple(rank[y] for _, y in sorted(pts))


def plot(p: Perm) -> list[tuple[int, int]]:
    return [(i, v) for i, v in enumerate(p, start=1)]


def pattern_of(values: Sequence[int]) -> Perm:
    """Standardize a sequence of distinct values (positions are implicit)."""
    order = sorted(range(len(values)), key=values.__getitem__)
    out = [0] * len(values)
    for r, i in enumerate(order, start=1):
        out[i] = r
    return tuple(out)


# -- containment -------------------------------------------------------------

def _value_bounds(sigma: Perm) -> tuple[list[int], list[int]]:
    # For each pattern position j, the earlier pattern positions holding the
    # nearest smaller and nearest larger value (-1 when there is none).
    lo, hi = [], []
    for j, s in enumerate(sigma):
        below = [(sigma[t], t) for t in range(j) if sigma[t] < s]
        above = [(sigma[t], t) for t in range(j) if sigma[t] > s]
        lo.append(max(below)[1] if below else -1)
        hi.append(min(above)[1] if above else -1)
    return lo, hi


_bounds_cache: dict[Perm, tuple[list[int], list[int]]] = {}


def contains(sigma: Perm, pi: Perm) -> bool:
    """
    True iff some subsequence of ``pi`` is order-isomorphic to ``sigma``.

    Backtracking over pattern positions.  When matching pattern entry j the
    candidate value must sit strictly between the images of the earlier
    pattern entries with the nearest smaller and nearest larger values, and
    enough positions must remain for the rest of the pattern.
    """
    k, n = len(sigma), len(pi)
    if k > n:
        return False
    if k == 0:
        return True
    if k == n:
        return tuple(sigma) == tuple(pi)
    bounds = _bounds_cache.get(sigma)
    if bounds is None:
        bounds = _bounds_cache[sigma] = _value_bounds(sigma)
    lo, hi = bounds
    img = [0] * k

    def extend(j: int, start: int) -> bool:
        lo_v = img[lo[j]] if lo[j] >= 0 else 0
        hi_v = img[hi[j]] if hi[j] >= 0 else n + 1
        last = n - (k - j)
        for i in range(start, last + 1):
            v = pi[i]
            if lo_v < v < hi_v:
                img[j] = v
                if j + 1 == k or extend(j + 1, i + 1):
                    return True
        return False

    return extend(0, 0)


# -- symmetries --------------------------------------------------------------

def inverse(p: Perm) -> Perm:
    """Reflect the plot about y = x."""
    out = [0] * len(p)
    for i, v in enumerate(p, start=1):
        out[v - 1] = i
    return tuple(out)


def reverse_complement(p: Perm) -> Perm:
    """Reflect the plot about y = -x (equivalently, a half turn)."""
    n = len(p)
    return tuple(n + 1 - v for v in reversed(p))


def rotate90(p: Perm, times: int = 1) -> Perm:
    """Rotate the plot a quarter turn counter-clockwise, ``times`` times."""
    for _ in range(times % 4):
        # (x, y) -> (-y, x)
        p = standardize((-y, x) for x, y in plot(p))
    return p


# -- sums --------------------------------------------------------------------

def direct_sum(pi: Perm, sigma: Perm) -> Perm:
    k = len(pi)
    return tuple(pi) + tuple(v + k for v in sigma)


def skew_sum(pi: Perm, sigma: Perm) -> Perm:
    ell = len(sigma)
    return tuple(v + ell for v in pi) + tuple(sigma)


def _split_points(p: Perm, skew: bool) -> list[int]:
    # prefix lengths c (0 < c < n) at which p splits as a (skew) sum
    n = len(p)
    cuts = []
    running = 0
    lowest = n + 1
    for c, v in enumerate(p[:-1], start=1):
        if skew:
            lowest = min(lowest, v)
            if lowest == n - c + 1:
                cuts.append(c)
        else:
            running = max(running, v)
            if running == c:
                cuts.append(c)
    return cuts


def _components(p: Perm, skew: bool) -> list[Perm]:
    if not p:
        raise EmptyPermutation("the empty permutation has no components")
    bounds = [0] + _split_points(p, skew) + [len(p)]
    return [pattern_of(p[a:b]) for a, b in zip(bounds, bounds[1:])]


def sum_components(p: Perm) -> list[Perm]:
    """
    Finest decomposition ``p = a1 + a2 + ...`` into sum-indecomposables.

    >>> sum_components((2, 1, 4, 3))
    [(2, 1), (2, 1)]
    """
    return _components(p, skew=False)


def skew_components(p: Perm) -> list[Perm]:
    return _components(p, skew=True)


# -- intervals ---------------------------------------------------------------

def proper_intervals(p: Perm) -> list[tuple[int, int]]:
    """All 1-indexed ranges [a, b] with 2 <= b - a + 1 <= n - 1 whose values
    are contiguous, sorted lexicographically."""
    n = len(p)
    out = []
    for a in range(n):
        lo = hi = p[a]
        for b in range(a + 1, n):
            lo = min(lo, p[b])
            hi = max(hi, p[b])
            size = b - a + 1
            if size >= n:
                break
            if hi - lo + 1 == size:
                out.append((a + 1, b + 1))
    return out


# -- one-point moves ---------------------------------------------------------

def one_point_deletions(p: Perm) -> set[Perm]:
    if not p:
        raise EmptyPermutation("cannot delete from the empty permutation")
    out = set()
    for i, v in enumerate(p):
        out.add(tuple(w - (w > v) for w in p[:i] + p[i + 1:]))
    return out


def one_point_extensions(p: Perm) -> set[Perm]:
    """All permutations of length n + 1 obtained by inserting one point."""
    n = len(p)
    out = set()
    for v in range(1, n + 2):
        shifted = tuple(w + (w >= v) for w in p)
        for i in range(n + 1):
            out.add(shifted[:i] + (v,) + shifted[i:])
    return out
