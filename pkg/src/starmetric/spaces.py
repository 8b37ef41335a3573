"""Finite semimetric and ultrametric spaces over exact rational distances.

All objects are immutable and all operations are pure: validation either
returns a new space or raises the first violated axiom, and predicates
return witnesses instead of mutating state.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .rational import rat

ZERO = Fraction(0)


class SpaceError(ValueError):
    """Base class for semimetric validation failures."""


class MalformedMatrix(SpaceError):
    """Input is not a square matrix matching the point list."""


class DuplicateName(SpaceError):
    """A point identifier occurs more than once."""


class NonzeroDiagonal(SpaceError):
    """d(x, x) must be 0."""


class AsymmetricMatrix(SpaceError):
    """d(x, y) must equal d(y, x)."""


class NegativeDistance(SpaceError):
    """Distances must be nonnegative."""


class ZeroOffDiagonal(SpaceError):
    """d(x, y) = 0 is only allowed for x = y."""


class EmptySubset(SpaceError):
    """Restriction requires at least one point."""


class UnknownPoint(SpaceError):
    """A point identifier is not part of the space."""


@dataclass(frozen=True)
class TripleWitness:
    """An ordered triple breaking the strong triangle inequality.

    ``lhs = d(x, y)`` strictly exceeds ``rhs = max(d(x, z), d(z, y))``.
    """

    x: str
    y: str
    z: str
    lhs: Fraction
    rhs: Fraction

    def to_json(self) -> dict:
        return {
            "x": self.x,
            "y": self.y,
            "z": self.z,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
        }


@dataclass(frozen=True)
class FiniteSemimetricSpace:
    """Named points plus an exact, symmetric, positive off-diagonal matrix."""

    points: tuple[str, ...]
    dist: tuple[tuple[Fraction, ...], ...]

    @cached_property
    def _index(self) -> dict[str, int]:
        return {p: i for i, p in enumerate(self.points)}

    def __len__(self) -> int:
        return len(self.points)

    def index(self, point: str) -> int:
        try:
            return self._index[point]
        except KeyError:
            raise UnknownPoint(f"unknown point {point!r}") from None

    def d(self, u: str, v: str) -> Fraction:
        return self.dist[self.index(u)][self.index(v)]


def validate_semimetric(points: Sequence[str], rows: Sequence[Sequence]) -> FiniteSemimetricSpace:
    """Check the semimetric axioms and return the validated space.

    Point names are checked first, then the matrix is scanned row-major;
    the first violated axiom is raised, which keeps error output
    deterministic for golden tests.
    """
    names = tuple(points)
    if not names:
        raise MalformedMatrix("a space needs at least one point")
    seen: set[str] = set()
    for name in names:
        if not isinstance(name, str) or not name:
            raise MalformedMatrix(f"point names must be nonempty strings, got {name!r}")
        if name in seen:
            raise DuplicateName(f"duplicate point name {name!r}")
        seen.add(name)
    n = len(names)
    if len(rows) != n:
        raise MalformedMatrix(f"matrix has {len(rows)} rows for {n} points")
    mat: list[tuple[Fraction, ...]] = []
    for i, row in enumerate(rows):
        if len(row) != n:
            raise MalformedMatrix(f"row {i} has {len(row)} entries for {n} points")
        try:
            mat.append(tuple(rat(x) for x in row))
        except (ValueError, TypeError) as exc:
            raise MalformedMatrix(f"row {i}: {exc}") from exc
    for i in range(n):
        if mat[i][i] != 0:
            raise NonzeroDiagonal(f"d({names[i]}, {names[i]}) = {mat[i][i]} != 0")
        for j in range(i + 1, n):
            a, b = mat[i][j], mat[j][i]
            if a != b:
                raise AsymmetricMatrix(f"d({names[i]}, {names[j]}) = {a} != {b} = d({names[j]}, {names[i]})")
            if a < 0:
                raise NegativeDistance(f"d({names[i]}, {names[j]}) = {a} < 0")
            if a == 0:
                raise ZeroOffDiagonal(f"d({names[i]}, {names[j]}) = 0 for distinct points")
    return FiniteSemimetricSpace(names, tuple(mat))


def ultrametric_violation(s: FiniteSemimetricSpace) -> TripleWitness | None:
    """First triple with d(x,y) > max(d(x,z), d(z,y)), or None.

    Pairs {x, y} are scanned by ascending index (i < j), probe point z by
    index; the scan order is part of the contract so witnesses are stable.
    """
    d = s.dist
    n = len(s.points)
    for i in range(n):
        di = d[i]
        for j in range(i + 1, n):
            dij = di[j]
            dj = d[j]
            for k in range(n):
                if k == i or k == j:
                    continue
                rhs = di[k] if di[k] >= dj[k] else dj[k]
                if dij > rhs:
                    return TripleWitness(s.points[i], s.points[j], s.points[k], dij, rhs)
    return None


def is_ultrametric(s: FiniteSemimetricSpace) -> bool:
    """True iff every triple satisfies the strong triangle inequality."""
    return ultrametric_violation(s) is None


def distance_spectrum(s: FiniteSemimetricSpace) -> tuple[Fraction, ...]:
    """Sorted deduplicated set of distance values; always starts at 0."""
    return tuple(sorted({v for row in s.dist for v in row}))


def reorder(s: FiniteSemimetricSpace, order: Iterable[str]) -> FiniteSemimetricSpace:
    """Subspace over ``order``, with points in exactly that order."""
    names = tuple(order)
    if not names:
        raise EmptySubset("need at least one point")
    if len(set(names)) != len(names):
        raise DuplicateName(f"duplicate point in {names!r}")
    idx = [s.index(p) for p in names]
    dist = tuple(tuple(s.dist[a][b] for b in idx) for a in idx)
    return FiniteSemimetricSpace(names, dist)


def restrict(s: FiniteSemimetricSpace, subset: Iterable[str]) -> FiniteSemimetricSpace:
    """Induced subspace; point order inherited from ``s``."""
    want = list(subset)
    for p in want:
        s.index(p)
    chosen = set(want)
    if not chosen:
        raise EmptySubset("need at least one point")
    return reorder(s, tuple(p for p in s.points if p in chosen))


def space_to_json(s: FiniteSemimetricSpace) -> dict:
    """JSON form with distances as exact rational strings."""
    return {
        "points": list(s.points),
        "dist": [[str(v) for v in row] for row in s.dist],
    }


def space_from_json(obj) -> FiniteSemimetricSpace:
    if not isinstance(obj, dict) or "points" not in obj or "dist" not in obj:
        raise MalformedMatrix("space JSON needs 'points' and 'dist' keys")
    return validate_semimetric(obj["points"], obj["dist"])
