"""Symbolic infinite stars and rays: compactness, duality, completion.

Infinite label streams are presented as an explicit prefix plus a tail
law, so compactness questions are decided exactly instead of sampled.
"""

from fractions import Fraction as F

from starmetric import (
    ConstantTail,
    GeometricTail,
    HarmonicTail,
    StarSpec,
    dplus,
    dplus_compact_subset,
    generate_ultrametric,
    is_compact_star,
    ray_distance,
    ray_to_completion,
    ray_truncation_tree,
    star_to_ray,
)

print("== compactness is decided from the presentation ==")
for spec, label in (
    (StarSpec(0, tail=HarmonicTail(F(1))), "center 0, labels 1, 1/2, 1/3, ..."),
    (StarSpec(F(1, 4), tail=HarmonicTail(F(1))), "center labeled 1/4"),
    (StarSpec(0, tail=ConstantTail(F(1))), "center 0, constant labels 1"),
):
    rep = is_compact_star(spec)
    extra = f" at epsilon={rep.epsilon}" if rep.epsilon is not None else ""
    print(f"{label}: compact={rep.compact} ({rep.reason}{extra})")

print()
print("== sorting a compact star gives a decreasing ray ==")
spec = StarSpec(0, exceptional=(F(1, 2), F(2)), tail=HarmonicTail(F(1)))
ray = star_to_ray(spec)
print("merged labels:", [str(x) for x in ray.labels(7)], "...")
print("d(x3, x7) = label(3) =", ray_distance(ray, 3, 7))

print()
print("== the closed form agrees with the explicit path metric ==")
oracle = generate_ultrametric(ray_truncation_tree(ray, 12))
agree = all(
    oracle.d(f"x{m}", f"x{n}") == ray_distance(ray, m, n)
    for m in range(1, 13)
    for n in range(1, 13)
)
print("path-max oracle agreement on 12 points:", agree)

print()
print("== completing a ray adds a single point ==")
geo = star_to_ray(StarSpec(0, tail=GeometricTail(F(1), F(1, 2))))
model = ray_to_completion(geo)
print("added point:", model.added_point)
print("d(x0, x3) =", model.distance(0, 3))
print("completion star is compact:", is_compact_star(model.star).compact)
print("round trip reproduces the stream:", list(star_to_ray(model.star).labels(64)) == list(geo.labels(64)))

print()
print("== the max-based line ==")
print("dplus(1/3, 1/2) =", dplus("1/3", "1/2"))
print("dplus(3, 3) =", dplus(3, 3))
for tail, zero, label in (
    (HarmonicTail(F(1)), True, "{1/n} with 0"),
    (HarmonicTail(F(1)), False, "{1/n} without 0"),
    (ConstantTail(F(1)), True, "constant tail"),
):
    rep = dplus_compact_subset((), tail, include_zero=zero)
    print(f"{label}: compact={rep.compact} ({rep.reason})")
