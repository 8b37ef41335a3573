"""Vertex-labeled trees and the path-maximum distance they generate.

A tree generates an ultrametric exactly when no edge has both endpoint
labels zero; stars admit a closed form that we cross-check against the
generic path traversal.
"""

from starmetric import (
    LabeledStarGraph,
    LabeledTree,
    generate_ultrametric,
    generating_violation,
    is_ultrametric,
    path_tree_x4,
    star_distance,
    to_dot,
)

print("== the path-max rule on a labeled path ==")
tree = path_tree_x4()  # labels 2, 2, 3, 1, 1 along a five-vertex path
space = generate_ultrametric(tree)
print("labels:", [str(l) for l in tree.labels])
for u, v in (("v1", "v2"), ("v4", "v5"), ("v1", "v4")):
    print(f"d({u}, {v}) = {space.d(u, v)}")
print("ultrametric?", is_ultrametric(space))

print()
print("== the generating condition ==")
bad = LabeledTree.of([("a", 0), ("b", 0), ("c", 2)], [("a", "b"), ("b", "c")])
print("zero-zero edge found:", generating_violation(bad))

print()
print("== stars have a closed-form distance ==")
star = LabeledStarGraph.of("c", 0, [("u", "1/2"), ("v", "1/3"), ("w", 2)])
star_space = generate_ultrametric(star)
for a, b in (("u", "v"), ("c", "w"), ("u", "w")):
    closed = star_distance(star, a, b)
    assert closed == star_space.d(a, b)
    print(f"d({a}, {b}) = {closed} (closed form == path traversal)")

print()
print("== DOT export for rendering ==")
print(to_dot(star))
