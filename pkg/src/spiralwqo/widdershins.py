"""
Widdershins spirals and the class W of their patterns.

The standard spiral starts with p1 and p2 (p2 northwest of p1) and adds pins
in the repeating order left, down, right, up.  Its points are placed on the
integer scheme

    p(4t+1) = ( 2+2t, -2-2t)     p(4t+2) = ( 1+2t,  2+2t)
    p(4t+3) = (-2-2t,  1+2t)     p(4t+4) = (-1-2t, -5-2t)

so that the origin is the spiral's centre: the x-axis runs between p1 and
p3, the y-axis between p4 and p2.  The other three spirals are quarter-turn
rotations of it.  Every member of W is built from the empty permutation by
corner points (1+a, a+1, 1-a, a-1) and central insertions into spirals; a
word over the letters below records one such build, innermost step first.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .classes import LetterOrder, MembershipOracle, UnknownLetter, avoids_all
from .perm import (
    Perm, direct_sum, inverse, rotate90, skew_sum, standardize,
    sum_components, skew_components,
)

__all__ = [
    "ORIENTATIONS", "QUADRANTS", "SpiralSpec", "SigmaLetter",
    "SpiralTooShort", "NotInW", "InvalidLetter",
    "spiral", "spiral_points", "central_insert", "ring_compose", "ring_decompose",
    "parse_word", "format_word", "FOUR_CHAINS",
    "in_W", "in_W_via_basis", "in_W_inverse", "in_W_union_inverse",
    "W_ORACLE", "WINV_ORACLE", "WUWINV_ORACLE", "SKEW_MERGED_ORACLE", "SEPARABLE_ORACLE",
    "BASIS_W", "BASIS_W_UNION_INVERSE", "SKEW_MERGED_BASIS", "SEPARABLE_BASIS",
    "gf_coefficients", "is_skew_merged", "is_separable",
]

ORIENTATIONS = ("standard", "rot90", "rot180", "rot270")
QUADRANTS = ("NE", "NW", "SW", "SE")

# quadrant of p1 relative to the centre, per orientation
_FIRST_POINT_QUADRANT = {"standard": "SE", "rot90": "NE", "rot180": "NW", "rot270": "SW"}
_ORIENTATION_OF = {q: o for o, q in _FIRST_POINT_QUADRANT.items()}

SKEW_MERGED_BASIS = ((2, 1, 4, 3), (3, 4, 1, 2))
SEPARABLE_BASIS = ((2, 4, 1, 3), (3, 1, 4, 2))

BASIS_W = tuple(tuple(int(c) for c in s) for s in (
    "2143 2413 3412 314562 412563 415632 431562 512364 512643 "
    "516432 541263 541632 543162").split())

BASIS_W_UNION_INVERSE = tuple(tuple(int(c) for c in s) for s in (
    "2143 3412 234615 236145 236514 261345 265134 265413 314562 346215 "
    "362145 365214 412563 415632 431562 463215 512364 512643 516432 "
    "541263 541632 543162 28536417 71463582").split())


class SpiralTooShort(ValueError):
    pass


class NotInW(ValueError):
    pass


class InvalidLetter(ValueError):
    pass


@dataclass(frozen=True)
class SpiralSpec:
    orientation: str = "standard"
    length: int = 4

    def __post_init__(self):
        if self.orientation not in ORIENTATIONS:
            raise ValueError(f"unknown orientation {self.orientation!r}")
        if self.length < 4:
            raise SpiralTooShort(f"spirals have length >= 4, got {self.length}")

    @property
    def quarter_turns(self) -> int:
        return ORIENTATIONS.index(self.orientation)

    @property
    def first_point_quadrant(self) -> str:
        return _FIRST_POINT_QUADRANT[self.orientation]


@dataclass(frozen=True, order=True)
class SigmaLetter:
    quadrant: str
    k: int

    def __post_init__(self):
        if self.quadrant not in QUADRANTS:
            raise InvalidLetter(f"unknown quadrant {self.quadrant!r}")
        if not (self.k == 1 or self.k >= 4):
            raise InvalidLetter(f"letter index must be 1 or >= 4, got {self.k}")

    def __str__(self):
        return f"{self.quadrant}{self.k}"


def spiral_points(m: int) -> list[tuple[int, int]]:
    """Integer coordinates of the first m points of the standard spiral."""
    pts = []
    for i in range(m):
        t, r = divmod(i, 4)
        pts.append(((2 + 2 * t, -2 - 2 * t), (1 + 2 * t, 2 + 2 * t),
                    (-2 - 2 * t, 1 + 2 * t), (-1 - 2 * t, -5 - 2 * t))[r])
    return pts


def _rotate_points(points, turns: int):
    for _ in range(turns % 4):
        points = [(-y, x) for x, y in points]
    return points


def _spec(spec) -> SpiralSpec:
    if isinstance(spec, SpiralSpec):
        return spec
    orientation, length = spec
    return SpiralSpec(orientation, length)


def spiral(spec) -> Perm:
    """
    >>> spiral(SpiralSpec("standard", 5))
    (4, 1, 5, 3, 2)
    """
    spec = _spec(spec)
    return standardize(_rotate_points(spiral_points(spec.length), spec.quarter_turns))


def _central_points(spec: SpiralSpec, alpha: Perm):
    # alpha is given in the final frame; build in the standard frame and turn
    turns = spec.quarter_turns
    a = rotate90(alpha, -turns) if alpha else ()
    m = len(a)
    scale = 2 * (m + 1)
    pts = [(scale * x, scale * y, False) for x, y in spiral_points(spec.length)]
    pts += [(2 * i - (m + 1), 2 * v - (m + 1), True) for i, v in enumerate(a, start=1)]
    for _ in range(turns % 4):
        pts = [(-y, x, tag) for x, y, tag in pts]
    return pts


def central_insert(spec, alpha: Perm = ()) -> Perm:
    """
    Place ``alpha`` at the centre of a spiral; ``alpha`` becomes an interval.

    >>> central_insert(SpiralSpec("standard", 4), (1,))
    (4, 1, 3, 5, 2)
    """
    spec = _spec(spec)
    return standardize((x, y) for x, y, _ in _central_points(spec, tuple(alpha)))


@lru_cache(maxsize=None)
def _template(orientation: str, k: int, m: int):
    # (spiral values by position with the centre block zeroed, block start
    # position, block start value) for a centre of size m
    pts = _central_points(SpiralSpec(orientation, k), tuple(range(1, m + 1)))
    pts.sort()
    ys = sorted(y for _, y, _ in pts)
    rank = {y: r for r, y in enumerate(ys, start=1)}
    values = [rank[y] for _, y, _ in pts]
    tags = [tag for _, _, tag in pts]
    if m:
        pos0 = tags.index(True)
        val0 = min(v for v, tag in zip(values, tags) if tag)
    else:
        pos0 = val0 = 0
    outer = tuple(0 if tag else v for v, tag in zip(values, tags))
    return outer, pos0, val0


# -- ring words --------------------------------------------------------------

def _corner(letter_quadrant: str, alpha: Perm) -> Perm:
    if letter_quadrant == "SW":
        return direct_sum((1,), alpha)
    if letter_quadrant == "NE":
        return direct_sum(alpha, (1,))
    if letter_quadrant == "NW":
        return skew_sum((1,), alpha)
    return skew_sum(alpha, (1,))


def ring_compose(word) -> Perm:
    """
    Build the permutation a ring word describes, innermost letter first.

    >>> ring_compose(parse_word("SW1.SW1"))
    (1, 2)
    """
    p: Perm = ()
    for letter in word:
        if letter.k == 1:
            p = _corner(letter.quadrant, p)
        else:
            p = central_insert(SpiralSpec(_ORIENTATION_OF[letter.quadrant], letter.k), p)
    return p


def _decompose_step(pi: Perm):
    """One outer layer of pi as (letter, inner permutation), or None."""
    n = len(pi)
    if pi[0] == 1:
        return SigmaLetter("SW", 1), tuple(v - 1 for v in pi[1:])
    if pi[-1] == n:
        return SigmaLetter("NE", 1), pi[:-1]
    if pi[0] == n:
        return SigmaLetter("NW", 1), pi[1:]
    if pi[-1] == 1:
        return SigmaLetter("SE", 1), tuple(v - 1 for v in pi[:-1])
    # A (skew) decomposable permutation in W has an increasing (decreasing)
    # summand, which would have been caught as a corner point above.
    if len(sum_components(pi)) > 1 or len(skew_components(pi)) > 1:
        return None
    for k in range(4, n + 1):
        m = n - k
        for orientation in ORIENTATIONS:
            outer, pos0, val0 = _template(orientation, k, m)
            ok = True
            for i in range(n):
                if m and pos0 <= i < pos0 + m:
                    if not val0 <= pi[i] < val0 + m:
                        ok = False
                        break
                elif pi[i] != outer[i]:
                    ok = False
                    break
            if ok:
                letter = SigmaLetter(_FIRST_POINT_QUADRANT[orientation], k)
                inner = tuple(v - val0 + 1 for v in pi[pos0:pos0 + m]) if m else ()
                return letter, inner
    return None


@lru_cache(maxsize=None)
def _decompose(pi: Perm):
    if not pi:
        return ()
    step = _decompose_step(pi)
    if step is None:
        return None
    letter, inner = step
    rest = _decompose(inner)
    if rest is None:
        return None
    return rest + (letter,)


def ring_decompose(pi: Perm) -> tuple[SigmaLetter, ...]:
    """
    A ring word for pi, raising NotInW when pi has none.

    >>> format_word(ring_decompose((3, 1, 4, 2)))
    'SE4'
    """
    word = _decompose(tuple(pi))
    if word is None:
        raise NotInW(f"{pi} is not in W")
    return word


def format_word(word) -> str:
    return ".".join(map(str, word)) if word else "ε"


def parse_word(text: str) -> tuple[SigmaLetter, ...]:
    text = text.strip()
    if text in ("", "ε", "e"):
        return ()
    out = []
    for tok in text.split("."):
        tok = tok.strip()
        try:
            out.append(SigmaLetter(tok[:2].upper(), int(tok[2:])))
        except (ValueError, IndexError) as exc:
            raise InvalidLetter(f"bad letter {tok!r}") from exc
    return tuple(out)


def _four_chain_leq(a: SigmaLetter, b: SigmaLetter) -> bool:
    return a.quadrant == b.quadrant and a.k <= b.k


def _valid_letter(a) -> bool:
    return (isinstance(a, SigmaLetter) and a.quadrant in QUADRANTS
            and (a.k == 1 or a.k >= 4))


FOUR_CHAINS = LetterOrder(_four_chain_leq, _valid_letter)


# -- membership --------------------------------------------------------------

def in_W(pi: Perm) -> bool:
    return _decompose(tuple(pi)) is not None


def in_W_via_basis(pi: Perm) -> bool:
    return avoids_all(pi, BASIS_W)


def in_W_inverse(pi: Perm) -> bool:
    return in_W(inverse(pi))


def in_W_union_inverse(pi: Perm) -> bool:
    return in_W(pi) or in_W(inverse(pi))


def is_skew_merged(pi: Perm) -> bool:
    return avoids_all(pi, SKEW_MERGED_BASIS)


def is_separable(pi: Perm) -> bool:
    return avoids_all(pi, SEPARABLE_BASIS)


W_ORACLE = MembershipOracle("W", in_W)
WINV_ORACLE = MembershipOracle("Winv", in_W_inverse)
WUWINV_ORACLE = MembershipOracle("WuWinv", in_W_union_inverse)
SKEW_MERGED_ORACLE = MembershipOracle("skew-merged", is_skew_merged)
SEPARABLE_ORACLE = MembershipOracle("separable", is_separable)


# -- counting ----------------------------------------------------------------

_GF_NUM = (1, -4, 3)
_GF_DEN = (1, -5, 6, -2, -1, -3)


def gf_coefficients(max_n: int) -> list[int]:
    """
    Series coefficients of (1 - 4x + 3x^2) / (1 - 5x + 6x^2 - 2x^3 - x^4 - 3x^5).

    >>> gf_coefficients(5)
    [1, 1, 2, 6, 21, 77]
    """
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    c: list[int] = []
    for n in range(max_n + 1):
        acc = _GF_NUM[n] if n < len(_GF_NUM) else 0
        for j in range(1, len(_GF_DEN)):
            if n - j >= 0:
                acc -= _GF_DEN[j] * c[n - j]
        c.append(acc)
    return c
