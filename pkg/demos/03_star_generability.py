"""Deciding star-generability two independent ways, with witnesses.

A finite ultrametric space is generated by a labeled star iff it has a
center point realizing every other point's nearest-neighbor distance,
and equivalently iff it contains no four-point obstruction: two pairs
strictly closer than their common cross distance.
"""

from starmetric import (
    CardinalityThree,
    build_star,
    find_centers,
    find_forbidden_quadruple,
    format_tree_text,
    generate_ultrametric,
    path_tree_y4,
    reorder,
    semimetric_us_check,
    validate_semimetric,
    x4_space,
    y4_space,
)

print("== the two four-point obstruction patterns ==")
for space, name in ((x4_space(), "unequal pairs"), (y4_space(), "equal pairs")):
    rep = find_forbidden_quadruple(space)
    print(
        f"{name}: kind {rep.kind}, pairs ({rep.x},{rep.z}) at {rep.small1} and "
        f"({rep.y},{rep.w}) at {rep.small2}, cross distance {rep.big}"
    )
    print("  centers:", find_centers(space) or "(none)")

print()
print("== build a generating star from a center ==")
space = validate_semimetric(
    ["c", "u", "v", "w"],
    [
        ["0", "1", "1/2", "1/3"],
        ["1", "0", "1", "1"],
        ["1/2", "1", "0", "1/2"],
        ["1/3", "1", "1/2", "0"],
    ],
)
centers = find_centers(space)
print("centers:", centers)
star = build_star(space, centers[0])
print(format_tree_text(star).rstrip())
regenerated = generate_ultrametric(star)
print("regenerates exactly?", reorder(regenerated, space.points) == space)

print()
print("== a five-point space that is tree-generated but not star-generated ==")
five = generate_ultrametric(path_tree_y4())
rep = find_forbidden_quadruple(five)
print(f"obstruction {rep.kind} on points ({rep.x}, {rep.y}, {rep.z}, {rep.w})")

print()
print("== the semimetric three-way check ==")
rep = semimetric_us_check(five)
print("statements (self, every-4-star, every-4-tree):", rep.in_us, rep.every4_us, rep.every4_tree)
triangle = validate_semimetric(["a", "b", "c"], [["0", "3", "4"], ["3", "0", "5"], ["4", "5", "0"]])
try:
    semimetric_us_check(triangle)
except CardinalityThree as exc:
    print("three points are excluded:", exc)
    print("  individual statements still evaluated:", exc.report.to_json())
