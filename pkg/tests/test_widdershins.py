import random

import pytest
import sympy

from spiralwqo.classes import enumerate_class
from spiralwqo.perm import (
    all_perms, contains, direct_sum, inverse, one_point_deletions, parse_perm,
    pattern_of, reverse_complement, rotate90, skew_sum,
)
from spiralwqo.widdershins import (
    BASIS_W, BASIS_W_UNION_INVERSE, ORIENTATIONS, InvalidLetter, NotInW,
    SigmaLetter, SpiralSpec, SpiralTooShort, W_ORACLE, central_insert,
    format_word, gf_coefficients, in_W, in_W_union_inverse, in_W_via_basis,
    is_separable, is_skew_merged, parse_word, ring_compose, ring_decompose,
    spiral,
)


def P(s):
    return parse_perm(s)


@pytest.fixture(scope="module")
def w_levels():
    return enumerate_class(W_ORACLE, 8)


# -- spirals -----------------------------------------------------------------

def test_spiral_examples():
    assert spiral(("standard", 4)) == P("3142")
    assert spiral(SpiralSpec("standard", 5)) == P("41532")


def test_spiral_too_short():
    with pytest.raises(SpiralTooShort):
        spiral(("standard", 3))
    with pytest.raises(ValueError):
        SpiralSpec("sideways", 5)


@pytest.mark.parametrize("m", range(4, 17))
def test_orientations_are_rotations(m):
    base = spiral(("standard", m))
    for turns, o in enumerate(ORIENTATIONS):
        assert spiral((o, m)) == rotate90(base, turns)
    assert spiral(("rot180", m)) == reverse_complement(base)


@pytest.mark.parametrize("m", range(5, 17))
def test_spiral_prefix(m):
    # dropping the newest, outermost point leaves the previous spiral
    for o in ORIENTATIONS:
        longer, shorter = spiral((o, m)), spiral((o, m - 1))
        assert any(pattern_of(longer[:i] + longer[i + 1:]) == shorter for i in range(m))


@pytest.mark.parametrize("m", range(4, 17))
def test_spirals_are_skew_merged_members(m):
    for o in ORIENTATIONS:
        p = spiral((o, m))
        assert is_skew_merged(p)
        assert in_W(p)


def test_first_point_quadrants():
    assert [SpiralSpec(o, 4).first_point_quadrant for o in ORIENTATIONS] == \
        ["SE", "NE", "NW", "SW"]


# -- central insertion -------------------------------------------------------

def test_central_insert_examples():
    std4 = SpiralSpec("standard", 4)
    assert central_insert(std4) == P("3142")
    assert central_insert(std4, (1,)) == P("41352")


def _is_interval(p, positions):
    vals = sorted(p[i] for i in positions)
    return vals == list(range(vals[0], vals[0] + len(vals)))


@pytest.mark.parametrize("seed", range(20))
def test_central_insert_properties(seed):
    rng = random.Random(seed)
    o = rng.choice(ORIENTATIONS)
    m = rng.randint(4, 10)
    alpha = tuple(rng.sample(range(1, 6), rng.randint(1, 5)))
    alpha = pattern_of(alpha)
    out = central_insert((o, m), alpha)
    assert len(out) == m + len(alpha)
    # alpha sits in consecutive positions, takes consecutive values, and what
    # remains is the spiral itself
    for start in range(len(out) - len(alpha) + 1):
        block = range(start, start + len(alpha))
        if _is_interval(out, block) and pattern_of(out[start:start + len(alpha)]) == alpha:
            rest = out[:start] + out[start + len(alpha):]
            if pattern_of(rest) == spiral((o, m)):
                break
    else:
        pytest.fail(f"{alpha} not found as the centre of {out}")


# -- ring words --------------------------------------------------------------

def test_ring_word_examples():
    assert format_word(ring_decompose(P("3142"))) == "SE4"
    assert ring_decompose(P("3142")) == (SigmaLetter("SE", 4),)
    assert format_word(ring_decompose(P("41352"))) == "SW1.SE4"
    assert ring_compose(()) == ()
    assert ring_compose(parse_word("SW1.SW1")) == P("12")
    assert format_word(()) == "ε"
    with pytest.raises(NotInW):
        ring_decompose(P("2143"))


def test_corner_letters():
    alpha = P("3142")
    w = ring_decompose(alpha)
    assert ring_compose(w + parse_word("SW1")) == direct_sum((1,), alpha)
    assert ring_compose(w + parse_word("NE1")) == direct_sum(alpha, (1,))
    assert ring_compose(w + parse_word("NW1")) == skew_sum((1,), alpha)
    assert ring_compose(w + parse_word("SE1")) == skew_sum(alpha, (1,))


def test_bad_letters():
    with pytest.raises(InvalidLetter):
        SigmaLetter("SE", 3)
    with pytest.raises(InvalidLetter):
        SigmaLetter("UP", 4)
    with pytest.raises(InvalidLetter):
        parse_word("SE4.X")


def test_ring_round_trip(w_levels):
    for level in w_levels:
        for p in level:
            word = ring_decompose(p)
            assert ring_compose(word) == p
            assert parse_word(format_word(word)) == word


def test_membership_examples():
    assert in_W(P("3142"))
    assert not in_W(P("2413"))
    assert in_W(())
    assert in_W_via_basis(P("3142")) and not in_W_via_basis(P("2413"))
    assert not is_skew_merged(P("2143"))
    assert is_skew_merged(()) and is_separable(())


def test_oracles_agree_to_length_8():
    for n in range(9):
        for p in all_perms(n):
            assert in_W(p) == in_W_via_basis(p)


# -- closure -----------------------------------------------------------------

def test_downward_closed(w_levels):
    members = [set(level) for level in w_levels]
    for n in range(1, len(w_levels)):
        for p in w_levels[n]:
            assert one_point_deletions(p) <= members[n - 1]


def test_closed_under_corners_and_rotations(w_levels):
    members = set().union(*w_levels)
    for p in set().union(*w_levels[:8]):
        for q in (direct_sum((1,), p), direct_sum(p, (1,)),
                  skew_sum((1,), p), skew_sum(p, (1,))):
            assert q in members
        assert rotate90(p) in members


def test_not_closed_under_inverse():
    eights = [b for b in BASIS_W_UNION_INVERSE if len(b) == 8]
    assert sorted(eights) == [P("28536417"), P("71463582")]
    assert inverse(eights[0]) == eights[1]
    assert any(in_W(p) != in_W(inverse(p)) for p in all_perms(6))


def test_union_with_inverse():
    for p in all_perms(6):
        assert in_W_union_inverse(p) == (in_W(p) or in_W(inverse(p)))


@pytest.mark.parametrize("m", range(4, 13))
def test_spiral_chain(m):
    for o1 in ORIENTATIONS:
        for o2 in ORIENTATIONS:
            assert contains(spiral((o1, m)), spiral((o2, m + 3)))


def test_basis_elements_are_minimal_non_members():
    for b in BASIS_W:
        assert not in_W(b)
        assert all(in_W(d) for d in one_point_deletions(b))


# -- counting ----------------------------------------------------------------

def test_gf_matches_series_expansion():
    x = sympy.symbols("x")
    f = (1 - 4 * x + 3 * x**2) / (1 - 5 * x + 6 * x**2 - 2 * x**3 - x**4 - 3 * x**5)
    series = sympy.series(f, x, 0, 31).removeO()
    assert gf_coefficients(30) == [int(series.coeff(x, n)) for n in range(31)]


def test_gf_values():
    assert gf_coefficients(5) == [1, 1, 2, 6, 21, 77]
    # the three basis elements of length 4 are the only exclusions there
    assert gf_coefficients(4)[4] == 24 - sum(len(b) == 4 for b in BASIS_W)
    big = gf_coefficients(200)[-1]
    assert big > 2**63


def test_gf_matches_enumeration(w_levels):
    assert [len(level) for level in w_levels] == gf_coefficients(8)


def test_gf_rejects_negative():
    with pytest.raises(ValueError):
        gf_coefficients(-1)
