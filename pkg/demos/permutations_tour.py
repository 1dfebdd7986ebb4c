"""
Permutations and patterns
=========================

A quick walk through the permutation toolkit: parsing, containment,
the symmetries of the square, and sums.
"""

from spiralwqo.perm import (
    contains, direct_sum, format_perm, inverse, parse_perm, proper_intervals,
    reverse_complement, rotate90, skew_sum, sum_components,
)

# Permutations are plain tuples; the parser takes spaced or compact text.
pi = parse_perm("36285714")
sigma = parse_perm("25413")
print("pi =", format_perm(pi))
print("sigma =", format_perm(sigma))

# sigma is a pattern of pi when some subsequence of pi is order-isomorphic to it
print("sigma <= pi:", contains(sigma, pi))
print("2413 <= 3142:", contains(parse_perm("2413"), parse_perm("3142")))

# Inverse, reverse-complement and quarter turns act on the plot of a permutation.
p = parse_perm("3142")
print("inverse(3142) =", format_perm(inverse(p)))
print("rc(3142) =", format_perm(reverse_complement(p)))
print("four quarter turns:", format_perm(rotate90(p, 4)))

# Sums glue plots diagonally; the components come back out again.
two = parse_perm("21")
print("21 + 21 =", format_perm(direct_sum(two, two)))
print("1 - 12 =", format_perm(skew_sum((1,), parse_perm("12"))))
print("components of 2143:", [format_perm(c) for c in sum_components(parse_perm("2143"))])

# 3142 has no proper intervals; the identity has lots.
print("intervals of 3142:", proper_intervals(p))
print("intervals of 1234:", proper_intervals(parse_perm("1234")))
