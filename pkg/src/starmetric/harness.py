"""Exhaustive catalogue of small ultrametric spaces up to weak similarity.

A weak-similarity class of an n-point ultrametric space is the same thing
as a ranked hierarchy: a rooted merge tree on n unlabeled leaves whose
internal nodes carry levels 1..k, strictly increasing toward the root,
with every level used.  Enumeration walks canonical hierarchy encodings
directly (sorted child tuples), so no post-hoc isomorphism filtering is
needed; a brute-force rank-matrix oracle guards the bijection at small n
in the test suite.

On top of the catalogue sit the two equivalence sweeps (star-generability
vs the four-point obstruction; star-generability vs tree-generability at
four points) and the one-point center-extension probe.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Optional

from .decision import (
    KIND_X4,
    KIND_Y4,
    exhaustive_quadruple_scan,
    find_centers,
    find_forbidden_quadruple,
    four_point_tree_generable,
    is_us,
    path_tree_x4,
    path_tree_y4,
)
from .spaces import (
    FiniteSemimetricSpace,
    distance_spectrum,
    is_ultrametric,
    ultrametric_violation,
)
from .trees import generate_ultrametric

MAX_POINTS = 8

LEAF: tuple = ()


class BoundExceeded(ValueError):
    """Requested point count is outside the supported enumeration range."""


class PreconditionFailed(ValueError):
    """Probe input must be ultrametric and free of four-point obstructions."""


def _node_leaves(node) -> int:
    if node == LEAF:
        return 1
    return sum(_node_leaves(c) for c in node[1])


def _node_levels(node, acc: set) -> None:
    if node == LEAF:
        return
    acc.add(node[0])
    for c in node[1]:
        _node_levels(c, acc)


@dataclass(frozen=True)
class RankedHierarchy:
    """Canonical encoding of a leveled merge tree.

    A node is either the empty tuple (a leaf) or ``(level, children)``
    with at least two children sorted by encoding; child levels are
    strictly below the parent level and the used levels form 1..k.
    """

    root: tuple

    def __post_init__(self):
        levels: set[int] = set()
        _node_levels(self.root, levels)
        k = len(levels)
        if levels and levels != set(range(1, k + 1)):
            raise ValueError(f"levels must be exactly 1..k, got {sorted(levels)}")

        def walk(node, bound: Optional[int]) -> None:
            if node == LEAF:
                return
            level, children = node
            if bound is not None and level >= bound:
                raise ValueError(f"child level {level} not below parent level {bound}")
            if len(children) < 2:
                raise ValueError("internal nodes need at least two children")
            if tuple(sorted(children)) != tuple(children):
                raise ValueError("children must be sorted (canonical encoding)")
            for c in children:
                walk(c, level)

        walk(self.root, None)
        if self.root == LEAF and k != 0:
            raise ValueError("a bare leaf uses no levels")

    @property
    def leaf_count(self) -> int:
        return _node_leaves(self.root)

    @property
    def level_count(self) -> int:
        levels: set[int] = set()
        _node_levels(self.root, levels)
        return len(levels)

    def rank_matrix(self) -> tuple[tuple[int, ...], ...]:
        """rank(x, y) = level of the least common ancestor; 0 on the diagonal."""
        n = self.leaf_count
        ranks = [[0] * n for _ in range(n)]
        counter = [0]

        def walk(node) -> list[int]:
            if node == LEAF:
                idx = counter[0]
                counter[0] += 1
                return [idx]
            level, children = node
            groups = [walk(c) for c in children]
            for gi in range(len(groups)):
                for gj in range(gi + 1, len(groups)):
                    for a in groups[gi]:
                        for b in groups[gj]:
                            ranks[a][b] = ranks[b][a] = level
            return [a for g in groups for a in g]

        walk(self.root)
        return tuple(tuple(row) for row in ranks)

    def to_space(self, prefix: str = "p") -> FiniteSemimetricSpace:
        """Representative space with the rank values themselves as distances."""
        ranks = self.rank_matrix()
        n = len(ranks)
        names = tuple(f"{prefix}{i + 1}" for i in range(n))
        rows = tuple(tuple(Fraction(v) for v in row) for row in ranks)
        return FiniteSemimetricSpace(names, rows)


@lru_cache(maxsize=None)
def _subsets(levels: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    out: list[tuple[int, ...]] = [()]
    for x in levels:
        out += [s + (x,) for s in out]
    return tuple(out)


@lru_cache(maxsize=None)
def _canonical_trees(m: int, levels: tuple[int, ...]) -> tuple[tuple, ...]:
    """All canonical hierarchies with m leaves using exactly these levels."""
    if m == 1:
        return (LEAF,) if not levels else ()
    if not levels:
        return ()
    top = levels[-1]
    below = levels[:-1]
    pool: list[tuple[tuple, int, frozenset]] = []
    for size in range(1, m):
        for sub in _subsets(below):
            for enc in _canonical_trees(size, sub):
                pool.append((enc, size, frozenset(sub)))
    pool.sort(key=lambda item: item[0])
    need_all = frozenset(below)
    results: list[tuple] = []
    chosen: list[tuple] = []

    def pick(start: int, size_left: int, still_needed: frozenset) -> None:
        if size_left == 0:
            if not still_needed and len(chosen) >= 2:
                results.append((top, tuple(chosen)))
            return
        for idx in range(start, len(pool)):
            enc, size, used = pool[idx]
            if size > size_left:
                continue
            chosen.append(enc)
            pick(idx, size_left - size, still_needed - used)
            chosen.pop()

    pick(0, m, need_all)
    return tuple(sorted(results))


def enumerate_hierarchies(n: int) -> Iterator[RankedHierarchy]:
    """All ranked hierarchies on n leaves, canonical order, one per class."""
    if not 1 <= n <= MAX_POINTS:
        raise BoundExceeded(f"supported point counts are 1..{MAX_POINTS}, got {n}")
    if n == 1:
        yield RankedHierarchy(LEAF)
        return
    for k in range(1, n):
        for enc in _canonical_trees(n, tuple(range(1, k + 1))):
            yield RankedHierarchy(enc)


def enumerate_classes(n: int) -> Iterator[FiniteSemimetricSpace]:
    """One representative space per weak-similarity class of n-point ultrametrics."""
    for h in enumerate_hierarchies(n):
        yield h.to_space()


@dataclass(frozen=True)
class ClassDiscrepancy:
    space: FiniteSemimetricSpace
    details: str

    def to_json(self) -> dict:
        from .spaces import space_to_json

        return {"space": space_to_json(self.space), "details": self.details}


@dataclass(frozen=True)
class ObstructionSweepReport:
    """Per-class results of the star-generability vs obstruction sweep."""

    n: int
    classes: int
    us_classes: int
    obstructed_classes: int
    kind_counts: tuple[tuple[str, int], ...]
    discrepancies: tuple[ClassDiscrepancy, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.discrepancies

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "classes": self.classes,
            "us_classes": self.us_classes,
            "obstructed_classes": self.obstructed_classes,
            "kind_counts": dict(self.kind_counts),
            "discrepancies": [d.to_json() for d in self.discrepancies],
            "ok": self.ok,
        }


def _obstruction_row(space: FiniteSemimetricSpace) -> tuple[bool, Optional[str], bool]:
    us = is_us(space)
    quad = find_forbidden_quadruple(space)
    oracle = exhaustive_quadruple_scan(space)
    routes_agree = (quad is None) == (oracle is None)
    return us, None if quad is None else quad.kind, routes_agree


def verify_obstruction_equivalence(n: int, jobs: int = 1) -> ObstructionSweepReport:
    """Check is_us <=> no four-point obstruction over every class of size n.

    Also cross-checks the constructive quadruple search against the
    exhaustive scan; any disagreement lands in the discrepancy list.
    """
    spaces = list(enumerate_classes(n))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_obstruction_row, spaces, chunksize=16))
    else:
        rows = [_obstruction_row(space) for space in spaces]
    us_classes = 0
    obstructed = 0
    kinds: dict[str, int] = {KIND_X4: 0, KIND_Y4: 0}
    discrepancies: list[ClassDiscrepancy] = []
    for space, (us, kind, routes_agree) in zip(spaces, rows):
        if us:
            us_classes += 1
        if kind is not None:
            obstructed += 1
            kinds[kind] += 1
        if us != (kind is None):
            discrepancies.append(
                ClassDiscrepancy(space, f"is_us={us} but obstruction kind={kind}")
            )
        if not routes_agree:
            discrepancies.append(
                ClassDiscrepancy(space, "constructive and exhaustive quadruple routes disagree")
            )
    return ObstructionSweepReport(
        n=n,
        classes=len(spaces),
        us_classes=us_classes,
        obstructed_classes=obstructed,
        kind_counts=tuple(sorted(kinds.items())),
        discrepancies=tuple(discrepancies),
    )


def small_tree_generable(s: FiniteSemimetricSpace) -> bool:
    """Is an ultrametric space on at most 4 points generated by a labeled tree?

    Four points use the diameter criterion; fewer points run an exhaustive
    search over tree shapes, label assignments drawn from the distance
    spectrum, and vertex bijections.  (Any generating labeling can be
    rewritten with labels from the spectrum, so the search is complete.)
    """
    n = len(s.points)
    if n > 4:
        raise BoundExceeded("tree generability is only decided for n <= 4")
    if n == 4:
        return four_point_tree_generable(s)
    if n == 1:
        return True
    values = distance_spectrum(s)
    if n == 2:
        # a single edge with both labels equal to the distance
        return True
    # n == 3: path a - b - c over every bijection and label assignment
    pts = s.points
    orders = [
        (pts[0], pts[1], pts[2]),
        (pts[0], pts[2], pts[1]),
        (pts[1], pts[0], pts[2]),
    ]
    for order in orders:
        for la in values:
            for lb in values:
                for lc in values:
                    a, b, c = order
                    if (
                        max(la, lb) == s.d(a, b)
                        and max(lb, lc) == s.d(b, c)
                        and max(la, lb, lc) == s.d(a, c)
                    ):
                        return True
    return False


@dataclass(frozen=True)
class FivePointWitness:
    """A tree-generated five-point space that is not star-generated."""

    space: FiniteSemimetricSpace
    tree_generated: bool
    star_generated: bool
    obstruction_kind: Optional[str]

    def to_json(self) -> dict:
        from .spaces import space_to_json

        return {
            "space": space_to_json(self.space),
            "tree_generated": self.tree_generated,
            "star_generated": self.star_generated,
            "obstruction_kind": self.obstruction_kind,
        }


@dataclass(frozen=True)
class TreeEquivalenceReport:
    """Star-generability vs tree-generability over every class with n <= 4."""

    classes_checked: int
    discrepancies: tuple[ClassDiscrepancy, ...]
    five_point_witnesses: tuple[FivePointWitness, ...]

    @property
    def ok(self) -> bool:
        return not self.discrepancies and all(
            w.tree_generated and not w.star_generated for w in self.five_point_witnesses
        )

    def to_json(self) -> dict:
        return {
            "classes_checked": self.classes_checked,
            "discrepancies": [d.to_json() for d in self.discrepancies],
            "five_point_witnesses": [w.to_json() for w in self.five_point_witnesses],
            "ok": self.ok,
        }


def verify_tree_equivalence() -> TreeEquivalenceReport:
    """Check is_us <=> tree-generable on all classes with n <= 4.

    The two five-point path-generated spaces certify that the bound 4 is
    sharp: tree-generated by construction yet not star-generated.
    """
    checked = 0
    discrepancies: list[ClassDiscrepancy] = []
    for n in range(1, 5):
        for space in enumerate_classes(n):
            checked += 1
            us = is_us(space)
            tg = small_tree_generable(space)
            if us != tg:
                discrepancies.append(
                    ClassDiscrepancy(space, f"is_us={us} but tree_generable={tg}")
                )
    witnesses = []
    for tree in (path_tree_x4(), path_tree_y4()):
        space = generate_ultrametric(tree)
        quad = find_forbidden_quadruple(space)
        witnesses.append(
            FivePointWitness(
                space=space,
                tree_generated=True,
                star_generated=is_us(space),
                obstruction_kind=None if quad is None else quad.kind,
            )
        )
    return TreeEquivalenceReport(
        classes_checked=checked,
        discrepancies=tuple(discrepancies),
        five_point_witnesses=tuple(witnesses),
    )


@dataclass(frozen=True)
class ProbeReport:
    """Outcome of the one-point center-extension attempt.

    Exploratory only: a failure is reported, never treated as a
    refutation of anything; the note labels it unresolved.
    """

    success: bool
    added_point: str
    extension: FiniteSemimetricSpace
    extension_ultrametric: bool
    added_is_center: bool
    note: str

    def to_json(self) -> dict:
        from .spaces import space_to_json

        return {
            "success": self.success,
            "added_point": self.added_point,
            "extension": space_to_json(self.extension),
            "extension_ultrametric": self.extension_ultrametric,
            "added_is_center": self.added_is_center,
            "note": self.note,
        }


def center_extension_probe(s: FiniteSemimetricSpace) -> ProbeReport:
    """Adjoin a point at every point's nearest-neighbor distance and test it.

    Requires an ultrametric space without four-point obstructions.  When
    the extension is ultrametric with the new point a center, the input
    embeds into a star-generated space.
    """
    w = ultrametric_violation(s)
    if w is not None:
        raise PreconditionFailed(f"input is not ultrametric: d({w.x},{w.y}) = {w.lhs} > {w.rhs}")
    if find_forbidden_quadruple(s) is not None:
        raise PreconditionFailed("input contains a four-point obstruction")
    name = "c0"
    serial = 0
    while name in s.points:
        serial += 1
        name = f"c{serial}"
    n = len(s.points)
    d = s.dist
    if n == 1:
        gaps = [Fraction(1)]
    else:
        gaps = [min(d[i][j] for j in range(n) if j != i) for i in range(n)]
    names = s.points + (name,)
    rows = [list(row) + [gaps[i]] for i, row in enumerate(d)]
    rows.append(gaps + [Fraction(0)])
    extension = FiniteSemimetricSpace(names, tuple(tuple(r) for r in rows))
    ext_ultra = is_ultrametric(extension)
    added_center = ext_ultra and name in find_centers(extension)
    success = ext_ultra and added_center
    note = (
        "extension is star-generated with the added point as center"
        if success
        else "unresolved: the one-point extension failed; this is not counterevidence"
    )
    return ProbeReport(
        success=success,
        added_point=name,
        extension=extension,
        extension_ultrametric=ext_ultra,
        added_is_center=added_center,
        note=note,
    )
