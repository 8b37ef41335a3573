"""Comparing spaces through distance order alone.

Weak similarity forgets the actual distance values and keeps their
relative order; the rank matrix is the complete invariant, and the
canonical form makes it comparable across point relabelings.
"""

from starmetric import (
    canonical_form,
    rank_matrix,
    validate_semimetric,
    weak_similarity_bijection,
    weakly_similar,
    x4_space,
    y4_space,
)

print("== rank matrices forget scale ==")
small = validate_semimetric(
    ["a", "b", "c"], [["0", "1", "5"], ["1", "0", "5"], ["5", "5", "0"]]
)
huge = validate_semimetric(
    ["a", "b", "c"], [["0", "7", "1000"], ["7", "0", "1000"], ["1000", "1000", "0"]]
)
print("small ranks:", rank_matrix(small))
print("huge ranks: ", rank_matrix(huge))
print("weakly similar?", weakly_similar(small, huge))

print()
print("== the bijection is produced, not just asserted ==")
renamed = validate_semimetric(
    ["x", "y", "z"], [["0", "9", "9"], ["9", "0", "2"], ["9", "2", "0"]]
)
phi = weak_similarity_bijection(small, renamed)
print("mapping:", phi)

print()
print("== the two obstruction patterns are not weakly similar ==")
print("spectra sizes differ (4 vs 3):", weakly_similar(x4_space(), y4_space()))

print()
print("== canonical forms are relabeling-invariant keys ==")
fa = canonical_form(small)
fb = canonical_form(renamed)
print("digest small:  ", fa.digest[:16], "...")
print("digest renamed:", fb.digest[:16], "...")
print("equal?", fa == fb)
print("minimal rank matrix:", fa.ranks)
