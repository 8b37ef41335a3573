"""Deciding whether an ultrametric space is generated by a labeled star graph.

Membership is decided two independent ways: by searching for a center
point whose distances realize every other point's nearest-neighbor
distance, and by searching for the four-point obstruction pattern (two
pairs strictly closer than the common cross distance).  Both routes come
with extracted witnesses and are cross-checked in the test harness.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .spaces import (
    FiniteSemimetricSpace,
    ZERO,
    is_ultrametric,
    reorder,
    ultrametric_violation,
    validate_semimetric,
)
from .trees import LabeledStarGraph, LabeledTree


class DecisionError(ValueError):
    """Base class for decision-procedure failures."""


class NotUltrametric(DecisionError):
    """Operation requires an ultrametric space."""


class NotACenter(DecisionError):
    """Requested point does not satisfy the center criterion."""


class NotFourPoints(DecisionError):
    """Operation is defined for four-point spaces only."""


class InternalInconsistency(DecisionError):
    """The constructive search and the exhaustive oracle disagreed.

    This should be unreachable for valid ultrametric input; raising loudly
    here is a built-in theorem check, not dead code.
    """


class CardinalityThree(DecisionError):
    """Three-point spaces are excluded from the semimetric equivalence.

    The individual statements are still evaluated and attached as
    ``.report``, flagged non-equivalent.
    """

    def __init__(self, report: "UsCheckReport"):
        super().__init__("the three statements need not agree for card X = 3")
        self.report = report


KIND_X4 = "X4"
KIND_Y4 = "Y4"


@dataclass(frozen=True)
class QuadrupleReport:
    """Four-point obstruction witness.

    The cross distances d(x,y) = d(x,w) = d(z,y) = d(z,w) all equal
    ``big``; the within-pair distances ``small1 = d(x,z)`` and
    ``small2 = d(y,w)`` are strictly smaller.  ``kind`` is Y4 when the two
    small distances coincide and X4 otherwise.
    """

    x: str
    y: str
    z: str
    w: str
    big: Fraction
    small1: Fraction
    small2: Fraction
    kind: str

    def to_json(self) -> dict:
        return {
            "x": self.x,
            "y": self.y,
            "z": self.z,
            "w": self.w,
            "big": str(self.big),
            "small1": str(self.small1),
            "small2": str(self.small2),
            "kind": self.kind,
        }


def x4_space() -> FiniteSemimetricSpace:
    """Four points, pair distances 1 and 2, every cross distance 3."""
    return validate_semimetric(
        ["p1", "p2", "p3", "p4"],
        [
            ["0", "3", "1", "3"],
            ["3", "0", "3", "2"],
            ["1", "3", "0", "3"],
            ["3", "2", "3", "0"],
        ],
    )


def y4_space() -> FiniteSemimetricSpace:
    """Four points, both pair distances 2, every cross distance 3."""
    return validate_semimetric(
        ["p1", "p2", "p3", "p4"],
        [
            ["0", "3", "2", "3"],
            ["3", "0", "3", "2"],
            ["2", "3", "0", "3"],
            ["3", "2", "3", "0"],
        ],
    )


def path_tree_x4() -> LabeledTree:
    """Five-vertex path whose metric restricts to the unequal-pairs obstruction."""
    return LabeledTree.of(
        [("v1", 2), ("v2", 2), ("v3", 3), ("v4", 1), ("v5", 1)],
        [("v1", "v2"), ("v2", "v3"), ("v3", "v4"), ("v4", "v5")],
    )


def path_tree_y4() -> LabeledTree:
    """Five-vertex path whose metric restricts to the equal-pairs obstruction."""
    return LabeledTree.of(
        [("v1", 2), ("v2", 2), ("v3", 3), ("v4", 2), ("v5", 2)],
        [("v1", "v2"), ("v2", "v3"), ("v3", "v4"), ("v4", "v5")],
    )


def _require_ultrametric(s: FiniteSemimetricSpace) -> None:
    w = ultrametric_violation(s)
    if w is not None:
        raise NotUltrametric(
            f"d({w.x},{w.y}) = {w.lhs} > {w.rhs} = max(d({w.x},{w.z}), d({w.z},{w.y}))"
        )


def _row_minima(s: FiniteSemimetricSpace) -> list[Fraction]:
    """Nearest-neighbor distance of every point (needs >= 2 points)."""
    d = s.dist
    n = len(s.points)
    return [min(d[i][j] for j in range(n) if j != i) for i in range(n)]


def find_centers(s: FiniteSemimetricSpace) -> tuple[str, ...]:
    """Points x0 with d(x0, x) <= d(y, x) for all x != x0, y != x.

    Equivalently: x0 realizes every other point's nearest-neighbor
    distance.  Returned in input order; may be empty.
    """
    _require_ultrametric(s)
    n = len(s.points)
    if n == 1:
        return s.points
    d = s.dist
    mins = _row_minima(s)
    centers = []
    for i in range(n):
        if all(d[i][j] == mins[j] for j in range(n) if j != i):
            centers.append(s.points[i])
    return tuple(centers)


def is_us(s: FiniteSemimetricSpace) -> bool:
    """True iff the space is generated by some labeled star graph."""
    return bool(find_centers(s))


def build_star(s: FiniteSemimetricSpace, x0: str) -> LabeledStarGraph:
    """Star with center x0 and leaf labels d(x, x0); regenerates ``s`` exactly."""
    centers = find_centers(s)
    if x0 not in centers:
        raise NotACenter(f"{x0!r} does not satisfy the center criterion (centers: {list(centers)})")
    i0 = s.index(x0)
    return LabeledStarGraph.of(
        x0,
        ZERO,
        [(p, s.dist[i0][j]) for j, p in enumerate(s.points) if j != i0],
    )


def _normalized_report(s: FiniteSemimetricSpace, xi: int, yi: int, zi: int, wi: int) -> QuadrupleReport:
    # pairs {x,z} and {y,w}; order inside each pair by index, then put the
    # smaller pair distance first, indices breaking ties
    d = s.dist
    xi, zi = (xi, zi) if xi < zi else (zi, xi)
    yi, wi = (yi, wi) if yi < wi else (wi, yi)
    s1, s2 = d[xi][zi], d[yi][wi]
    if (s1, xi, zi) > (s2, yi, wi):
        xi, zi, yi, wi = yi, wi, xi, zi
        s1, s2 = s2, s1
    return QuadrupleReport(
        x=s.points[xi],
        y=s.points[yi],
        z=s.points[zi],
        w=s.points[wi],
        big=d[xi][yi],
        small1=s1,
        small2=s2,
        kind=KIND_Y4 if s1 == s2 else KIND_X4,
    )


def exhaustive_quadruple_scan(s: FiniteSemimetricSpace) -> QuadrupleReport | None:
    """Scan every 4-subset for the obstruction pattern (oracle route).

    Deterministic: subsets by ascending index, first matching subset wins,
    normalized report.  Assumes an ultrametric input; on arbitrary
    semimetrics it is just a pattern scan.
    """
    d = s.dist
    n = len(s.points)
    for quad in combinations(range(n), 4):
        found = []
        for (p, q), (r, t) in (
            ((quad[0], quad[1]), (quad[2], quad[3])),
            ((quad[0], quad[2]), (quad[1], quad[3])),
            ((quad[0], quad[3]), (quad[1], quad[2])),
        ):
            big = d[p][r]
            if d[p][t] == big and d[q][r] == big and d[q][t] == big and d[p][q] < big and d[r][t] < big:
                found.append(_normalized_report(s, p, q, r, t))
        if found:
            return min(found, key=lambda rep: (rep.small1, rep.small2, rep.x, rep.z, rep.y, rep.w))
    return None


def find_forbidden_quadruple(s: FiniteSemimetricSpace) -> QuadrupleReport | None:
    """Four-point obstruction witness, or None when the space is star-generated.

    Constructive search: with l(x) the nearest-neighbor distance, locate
    the first pair d(x,y) > max(l(x), l(y)) and extract the two closer
    partners z, w.  Should the extraction ever degenerate the exhaustive
    scan takes over, and a disagreement between the two routes raises
    InternalInconsistency.
    """
    _require_ultrametric(s)
    n = len(s.points)
    if n < 4:
        return None
    d = s.dist
    mins = _row_minima(s)
    for i in range(n):
        for j in range(i + 1, n):
            if d[i][j] <= (mins[i] if mins[i] >= mins[j] else mins[j]):
                continue
            zi = next(k for k in range(n) if k != i and d[i][k] == mins[i])
            wi = next(k for k in range(n) if k != j and d[j][k] == mins[j])
            if zi == wi or zi == j or wi == i:
                # cannot happen for ultrametric input; fall back to the oracle
                rep = exhaustive_quadruple_scan(s)
                if rep is None:
                    raise InternalInconsistency(
                        f"obstruction pair ({s.points[i]}, {s.points[j]}) found "
                        "but the exhaustive scan sees no quadruple"
                    )
                return rep
            return _normalized_report(s, i, j, zi, wi)
    return None


def four_point_tree_generable(s: FiniteSemimetricSpace) -> bool:
    """True iff some point sits at diameter distance from the three others."""
    if len(s.points) != 4:
        raise NotFourPoints(f"need exactly 4 points, got {len(s.points)}")
    _require_ultrametric(s)
    d = s.dist
    diam = max(d[i][j] for i in range(4) for j in range(i + 1, 4))
    return any(all(d[i][j] == diam for j in range(4) if j != i) for i in range(4))


@dataclass(frozen=True)
class UsCheckReport:
    """The three star-generability statements, evaluated independently.

    ``in_us``: the space itself is ultrametric and star-generated.
    ``every4_us``: every 4-subset is ultrametric and star-generated.
    ``every4_tree``: every 4-subset is ultrametric and tree-generable.
    ``cardinality_ok`` is False exactly when card X = 3, where the three
    statements need not agree.
    """

    in_us: bool
    every4_us: bool
    every4_tree: bool
    cardinality_ok: bool

    @property
    def agree(self) -> bool:
        return self.in_us == self.every4_us == self.every4_tree

    def to_json(self) -> dict:
        return {
            "in_us": self.in_us,
            "every4_us": self.every4_us,
            "every4_tree": self.every4_tree,
            "cardinality_ok": self.cardinality_ok,
        }


def semimetric_us_check(s: FiniteSemimetricSpace, allow_cardinality_three: bool = False) -> UsCheckReport:
    """Evaluate the three statements on an arbitrary finite semimetric space.

    Star generation forces ultrametricity, so statement (in_us) is decided
    as is_ultrametric plus the center criterion.  For card X = 3 a
    CardinalityThree error carrying the report is raised unless
    ``allow_cardinality_three`` is set.
    """
    n = len(s.points)
    in_us = is_ultrametric(s) and bool(find_centers(s))
    every4_us = True
    every4_tree = True
    if n >= 4:
        for quad in combinations(s.points, 4):
            sub = reorder(s, quad)
            if not is_ultrametric(sub):
                every4_us = False
                every4_tree = False
                break
            if every4_us and not find_centers(sub):
                every4_us = False
            if every4_tree and not four_point_tree_generable(sub):
                every4_tree = False
            if not every4_us and not every4_tree:
                break
    report = UsCheckReport(in_us, every4_us, every4_tree, cardinality_ok=(n != 3))
    if n == 3 and not allow_cardinality_three:
        raise CardinalityThree(report)
    return report
