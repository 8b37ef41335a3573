"""The exhaustive small-space catalogue and the equivalence sweeps.

Every weak-similarity class of small ultrametric spaces is enumerated as
a ranked hierarchy, then the characterizations are checked class by
class with zero tolerance for discrepancies.
"""

from starmetric import (
    center_extension_probe,
    enumerate_classes,
    find_forbidden_quadruple,
    is_us,
    verify_obstruction_equivalence,
    verify_tree_equivalence,
)

print("== class counts up to weak similarity ==")
for n in range(1, 7):
    classes = list(enumerate_classes(n))
    us = sum(1 for s in classes if is_us(s))
    print(f"n={n}: {len(classes):3d} classes ({us} star-generated, {len(classes) - us} obstructed)")

print()
print("== star-generability vs the four-point obstruction, exhaustively ==")
for n in (4, 5, 6):
    rep = verify_obstruction_equivalence(n)
    print(
        f"n={n}: {rep.classes} classes, kinds {dict(rep.kind_counts)}, "
        f"discrepancies: {len(rep.discrepancies)}"
    )

print()
print("== star-generability vs tree-generability at four points ==")
rep = verify_tree_equivalence()
print(f"classes checked: {rep.classes_checked}, discrepancies: {len(rep.discrepancies)}")
for w in rep.five_point_witnesses:
    print(
        f"five-point witness: tree_generated={w.tree_generated}, "
        f"star_generated={w.star_generated}, obstruction={w.obstruction_kind}"
    )

print()
print("== one-point center extension on every obstruction-free class ==")
attempts = successes = 0
for n in range(1, 7):
    for s in enumerate_classes(n):
        if find_forbidden_quadruple(s) is None:
            attempts += 1
            successes += center_extension_probe(s).success
print(f"extension succeeded on {successes}/{attempts} obstruction-free classes")
