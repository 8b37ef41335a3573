"""Building, validating, and probing finite semimetric spaces.

Everything is exact rational arithmetic: distances come in as integers,
decimal strings, or p/q strings, and every comparison downstream is an
exact order comparison.
"""

from starmetric import (
    SpaceError,
    distance_spectrum,
    is_ultrametric,
    restrict,
    space_to_json,
    ultrametric_violation,
    validate_semimetric,
)

print("== validating a matrix ==")
space = validate_semimetric(
    ["a", "b", "c", "d"],
    [
        ["0", "1/2", "2", "2"],
        ["1/2", "0", "2", "2"],
        ["2", "2", "0", "0.75"],
        ["2", "2", "0.75", "0"],
    ],
)
print("points:", space.points)
print("d(c, d) =", space.d("c", "d"), "(parsed from the decimal string '0.75')")
print("spectrum:", [str(v) for v in distance_spectrum(space)])
print("ultrametric?", is_ultrametric(space))

print()
print("== a violation comes back as a witness, not a boolean ==")
triangle = validate_semimetric(
    ["a", "b", "c"],
    [["0", "3", "4"], ["3", "0", "5"], ["4", "5", "0"]],
)
w = ultrametric_violation(triangle)
print(f"d({w.x},{w.y}) = {w.lhs} exceeds max(d({w.x},{w.z}), d({w.z},{w.y})) = {w.rhs}")

print()
print("== the axioms are checked one at a time ==")
for rows in (
    [["0", "1"], ["2", "0"]],   # asymmetric
    [["0", "0"], ["0", "0"]],   # zero off the diagonal
    [["1", "1"], ["1", "0"]],   # nonzero diagonal
):
    try:
        validate_semimetric(["a", "b"], rows)
    except SpaceError as exc:
        print(f"{type(exc).__name__}: {exc}")

print()
print("== restriction inherits order and stays ultrametric ==")
sub = restrict(space, ["d", "a", "c"])
print("restricted points (source order kept):", sub.points)
print("still ultrametric?", is_ultrametric(sub))
print("JSON form:", space_to_json(sub))
