"""
Widdershins spirals and ring words
==================================

Spirals are built from integer pin coordinates, and every member of the
downward closure W peels apart into a word of corner points and spirals.
"""

from spiralwqo.perm import format_perm, parse_perm
from spiralwqo.widdershins import (
    ORIENTATIONS, central_insert, format_word, gf_coefficients, in_W,
    ring_compose, ring_decompose, spiral,
)

# The standard spiral grows one pin at a time, turning counter-clockwise.
for m in range(4, 10):
    print(f"spiral of length {m}:", format_perm(spiral(("standard", m))))

# The other orientations are quarter turns of the standard one.
for o in ORIENTATIONS:
    print(f"{o:>8}:", format_perm(spiral((o, 8))))

# Central insertion puts a permutation inside a spiral as an interval.
inner = parse_perm("21")
print("21 inside the length-5 spiral:", format_perm(central_insert(("standard", 5), inner)))

# Ring words read from the inside out.
for text in ("3142", "41352", "71536482", "2143"):
    p = parse_perm(text)
    if in_W(p):
        word = ring_decompose(p)
        assert ring_compose(word) == p
        print(f"{text}: {format_word(word)}")
    else:
        print(f"{text}: not in W")

# Counting members of each length.
print("counts:", gf_coefficients(12))
