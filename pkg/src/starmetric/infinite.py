"""Symbolic presentations of infinite labeled stars and rays.

Infinite objects are never enumerated: compactness and limit questions
are answered exactly from a small closed algebra of tail laws, and finite
truncations are produced only for cross-checking against the path-max
oracle.  Also houses the max-based ultrametric on nonnegative rationals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from .rational import rat
from .spaces import FiniteSemimetricSpace, ZERO
from .trees import LabeledStarGraph, LabeledTree, NotGenerating


class InfiniteModelError(ValueError):
    """Base class for symbolic-presentation failures."""


class NotCompact(InfiniteModelError):
    """Operation requires a compact star presentation."""


class FiniteSpec(InfiniteModelError):
    """Operation requires an infinite presentation."""


class NotDecreasingToZero(InfiniteModelError):
    """Ray labels must be non-increasing, positive, with limit zero."""


class NegativeInput(InfiniteModelError):
    """Inputs must be nonnegative rationals."""


class IndexOutOfRange(InfiniteModelError):
    """Index outside the representable range of the presentation."""


class MalformedPresentation(InfiniteModelError):
    """Presentation violates its declared structure."""


class TailLaw:
    """Closed-form law for the labels beyond the explicit part.

    Each law answers membership counts for superlevel sets exactly, which
    is what keeps compactness decidable without sampling.  The algebra is
    deliberately small (harmonic, geometric, constant, none); extend by
    subclassing with the same four members.
    """

    finite = False
    # strictly decreasing with limit 0
    decreasing_to_zero = False
    # > 0 when the labels converge to a positive constant
    positive_limit: Optional[Fraction] = None

    def label(self, n: int) -> Fraction:
        raise NotImplementedError

    def count_ge(self, eps: Fraction) -> Optional[int]:
        """How many indices n >= 1 have label(n) >= eps; None means infinitely many."""
        raise NotImplementedError

    def to_json(self) -> dict:
        raise NotImplementedError


@dataclass(frozen=True)
class HarmonicTail(TailLaw):
    """label(n) = c / n."""

    c: Fraction

    def __post_init__(self):
        object.__setattr__(self, "c", rat(self.c))
        if self.c <= 0:
            raise MalformedPresentation(f"harmonic coefficient must be positive, got {self.c}")

    decreasing_to_zero = True

    def label(self, n: int) -> Fraction:
        return self.c / n

    def count_ge(self, eps: Fraction) -> Optional[int]:
        if eps <= 0:
            return None
        return math.floor(self.c / eps)

    def to_json(self) -> dict:
        return {"kind": "harmonic", "c": str(self.c)}


@dataclass(frozen=True)
class GeometricTail(TailLaw):
    """label(n) = a * r**n with 0 < r < 1."""

    a: Fraction
    r: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", rat(self.a))
        object.__setattr__(self, "r", rat(self.r))
        if self.a <= 0:
            raise MalformedPresentation(f"geometric scale must be positive, got {self.a}")
        if not (0 < self.r < 1):
            raise MalformedPresentation(f"geometric ratio must satisfy 0 < r < 1, got {self.r}")

    decreasing_to_zero = True

    def label(self, n: int) -> Fraction:
        return self.a * self.r**n

    def count_ge(self, eps: Fraction) -> Optional[int]:
        if eps <= 0:
            return None
        count = 0
        value = self.a * self.r
        while value >= eps:
            count += 1
            value *= self.r
        return count

    def to_json(self) -> dict:
        return {"kind": "geometric", "a": str(self.a), "r": str(self.r)}


@dataclass(frozen=True)
class ConstantTail(TailLaw):
    """label(n) = q for every n."""

    q: Fraction

    def __post_init__(self):
        object.__setattr__(self, "q", rat(self.q))
        if self.q < 0:
            raise NegativeInput(f"constant label must be nonnegative, got {self.q}")
        object.__setattr__(self, "positive_limit", self.q)

    def label(self, n: int) -> Fraction:
        return self.q

    def count_ge(self, eps: Fraction) -> Optional[int]:
        if eps <= 0:
            return None
        return 0 if self.q < eps else None

    def to_json(self) -> dict:
        return {"kind": "constant", "q": str(self.q)}


@dataclass(frozen=True)
class FiniteTail(TailLaw):
    """No labels beyond the explicit part."""

    finite = True

    def label(self, n: int) -> Fraction:
        raise IndexOutOfRange(f"finite presentation has no tail label {n}")

    def count_ge(self, eps: Fraction) -> Optional[int]:
        return 0

    def to_json(self) -> dict:
        return {"kind": "finite"}


def tail_from_json(obj) -> TailLaw:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise MalformedPresentation("tail JSON needs a 'kind' key")
    kind = obj["kind"]
    if kind == "harmonic":
        return HarmonicTail(rat(obj["c"]))
    if kind == "geometric":
        return GeometricTail(rat(obj["a"]), rat(obj["r"]))
    if kind == "constant":
        return ConstantTail(rat(obj["q"]))
    if kind == "finite":
        return FiniteTail()
    raise MalformedPresentation(f"unknown tail kind {kind!r}")


def _tail_labels(tail: TailLaw, skip: int) -> Iterator[Fraction]:
    n = skip + 1
    while True:
        yield tail.label(n)
        n += 1


@dataclass(frozen=True)
class StarSpec:
    """Labeled star presented as center label + exceptional leaf labels + tail law.

    ``tail_skip`` consumes the first indices of the tail law, which keeps
    harmonic tails representable after part of the stream has been merged
    into the explicit prefix elsewhere.
    """

    center_label: Fraction
    exceptional: tuple[Fraction, ...] = ()
    tail: TailLaw = FiniteTail()
    tail_skip: int = 0

    def __post_init__(self):
        object.__setattr__(self, "center_label", rat(self.center_label))
        object.__setattr__(self, "exceptional", tuple(rat(x) for x in self.exceptional))
        if self.center_label < 0:
            raise NegativeInput(f"center label {self.center_label} < 0")
        if any(x < 0 for x in self.exceptional):
            raise NegativeInput("leaf labels must be nonnegative")
        if self.tail_skip < 0:
            raise MalformedPresentation("tail_skip must be nonnegative")
        if self.center_label == 0:
            # every center-leaf edge needs a positively labeled endpoint
            if any(x == 0 for x in self.exceptional):
                raise NotGenerating("center and some exceptional leaf are both labeled zero")
            limit = self.tail.positive_limit
            if not self.tail.finite and not self.tail.decreasing_to_zero and (limit is None or limit == 0):
                raise NotGenerating("center label zero with zero tail labels")

    @property
    def finite(self) -> bool:
        return self.tail.finite

    def leaf_labels(self, limit: Optional[int] = None) -> Iterator[Fraction]:
        """Leaf labels in presentation order: exceptional first, then the tail."""
        emitted = 0
        for x in self.exceptional:
            if limit is not None and emitted >= limit:
                return
            yield x
            emitted += 1
        if self.tail.finite:
            return
        for x in _tail_labels(self.tail, self.tail_skip):
            if limit is not None and emitted >= limit:
                return
            yield x
            emitted += 1

    def to_json(self) -> dict:
        obj = {
            "center_label": str(self.center_label),
            "exceptional": [str(x) for x in self.exceptional],
            "tail": self.tail.to_json(),
        }
        if self.tail_skip:
            obj["skip"] = self.tail_skip
        return obj

    @classmethod
    def from_json(cls, obj) -> "StarSpec":
        if not isinstance(obj, dict) or "center_label" not in obj or "tail" not in obj:
            raise MalformedPresentation("star JSON needs 'center_label' and 'tail' keys")
        return cls(
            center_label=rat(obj["center_label"]),
            exceptional=tuple(rat(x) for x in obj.get("exceptional", [])),
            tail=tail_from_json(obj["tail"]),
            tail_skip=int(obj.get("skip", 0)),
        )


@dataclass(frozen=True)
class CompactnessReport:
    """Outcome of the compactness decision with the failing reason, if any."""

    compact: bool
    reason: str
    epsilon: Optional[Fraction] = None

    def to_json(self) -> dict:
        obj = {"compact": self.compact, "reason": self.reason}
        if self.epsilon is not None:
            obj["epsilon"] = str(self.epsilon)
        return obj


def is_compact_star(spec: StarSpec) -> CompactnessReport:
    """Decide compactness of the generated space exactly from the presentation.

    Finite presentations are compact outright.  An infinite star generates
    a compact space iff the center label is zero and every superlevel set
    of labels is finite, which only the decreasing-to-zero tails satisfy.
    """
    if spec.finite:
        return CompactnessReport(True, "finite")
    if spec.center_label > 0:
        return CompactnessReport(False, "CenterLabelPositive")
    limit = spec.tail.positive_limit
    if limit is not None and limit > 0:
        # infinitely many labels >= limit
        return CompactnessReport(False, "InfiniteA_eps", epsilon=limit)
    return CompactnessReport(True, "compact")


@dataclass(frozen=True)
class RaySpec:
    """One-way infinite path labels: explicit prefix plus tail law.

    With the ``decreasing`` flag the presentation is validated to be
    non-increasing and positive, which unlocks the closed-form distance
    label(min(m, n)).  Non-monotone presentations stay legal; distances
    then fall back to the path maximum over the index range.
    """

    prefix: tuple[Fraction, ...] = ()
    tail: TailLaw = FiniteTail()
    tail_skip: int = 0
    decreasing: bool = False

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(rat(x) for x in self.prefix))
        if any(x < 0 for x in self.prefix):
            raise NegativeInput("ray labels must be nonnegative")
        if self.tail_skip < 0:
            raise MalformedPresentation("tail_skip must be nonnegative")
        if self.decreasing:
            if any(x <= 0 for x in self.prefix):
                raise MalformedPresentation("a decreasing ray needs strictly positive labels")
            for a, b in zip(self.prefix, self.prefix[1:]):
                if a < b:
                    raise MalformedPresentation(f"prefix not non-increasing: {a} < {b}")
            if not self.tail.finite:
                first = self.tail.label(self.tail_skip + 1)
                if first <= 0:
                    raise MalformedPresentation("a decreasing ray needs strictly positive labels")
                if self.prefix and self.prefix[-1] < first:
                    raise MalformedPresentation(
                        f"prefix/tail junction not non-increasing: {self.prefix[-1]} < {first}"
                    )

    @property
    def finite(self) -> bool:
        return self.tail.finite

    @property
    def length(self) -> Optional[int]:
        return len(self.prefix) if self.finite else None

    @property
    def decreasing_to_zero(self) -> bool:
        return self.decreasing and not self.finite and self.tail.decreasing_to_zero

    def label(self, n: int) -> Fraction:
        if n < 1:
            raise IndexOutOfRange(f"ray indices start at 1, got {n}")
        if n <= len(self.prefix):
            return self.prefix[n - 1]
        if self.finite:
            raise IndexOutOfRange(f"index {n} beyond the {len(self.prefix)} explicit labels")
        return self.tail.label(n - len(self.prefix) + self.tail_skip)

    def labels(self, limit: int) -> Iterator[Fraction]:
        for n in range(1, limit + 1):
            yield self.label(n)

    def to_json(self) -> dict:
        obj = {
            "prefix": [str(x) for x in self.prefix],
            "tail": self.tail.to_json(),
            "decreasing": self.decreasing,
        }
        if self.tail_skip:
            obj["skip"] = self.tail_skip
        return obj

    @classmethod
    def from_json(cls, obj) -> "RaySpec":
        if not isinstance(obj, dict) or "tail" not in obj:
            raise MalformedPresentation("ray JSON needs a 'tail' key")
        return cls(
            prefix=tuple(rat(x) for x in obj.get("prefix", [])),
            tail=tail_from_json(obj["tail"]),
            tail_skip=int(obj.get("skip", 0)),
            decreasing=bool(obj.get("decreasing", False)),
        )


def ray_distance(r: RaySpec, m: int, n: int) -> Fraction:
    """d(x_m, x_n): label(min(m, n)) on decreasing rays, else the path max."""
    if m == n:
        r.label(m)  # still bounds-checked
        return ZERO
    lo, hi = (m, n) if m < n else (n, m)
    if r.decreasing:
        r.label(hi)
        return r.label(lo)
    return max(r.label(i) for i in range(lo, hi + 1))


def star_to_ray(spec: StarSpec) -> RaySpec:
    """Sort the leaves of a compact infinite star into a decreasing ray.

    Exceptional labels are merged into the decreasing tail stream; on ties
    the exceptional label comes first, so the round trip through the
    completion is reproducible.
    """
    if spec.finite:
        raise FiniteSpec("the presentation is finite; no ray arises")
    report = is_compact_star(spec)
    if not report.compact:
        raise NotCompact(f"not compact: {report.reason}")
    prefix: list[Fraction] = []
    next_tail = spec.tail_skip + 1
    for e in sorted(spec.exceptional, reverse=True):
        while spec.tail.label(next_tail) > e:
            prefix.append(spec.tail.label(next_tail))
            next_tail += 1
        prefix.append(e)
    return RaySpec(
        prefix=tuple(prefix),
        tail=spec.tail,
        tail_skip=next_tail - 1,
        decreasing=True,
    )


def ray_truncation_tree(r: RaySpec, k: int) -> LabeledTree:
    """First k ray vertices as an explicit labeled path (path-max oracle input)."""
    if k < 1:
        raise IndexOutOfRange("truncation needs at least one point")
    names = [f"x{i}" for i in range(1, k + 1)]
    return LabeledTree.of(
        [(name, r.label(i + 1)) for i, name in enumerate(names)],
        [(names[i], names[i + 1]) for i in range(k - 1)],
    )


def ray_truncation_space(r: RaySpec, k: int) -> FiniteSemimetricSpace:
    """Metric on the first k ray vertices via the closed-form distance."""
    if k < 1:
        raise IndexOutOfRange("truncation needs at least one point")
    names = tuple(f"x{i}" for i in range(1, k + 1))
    rows = tuple(
        tuple(ray_distance(r, i, j) for j in range(1, k + 1)) for i in range(1, k + 1)
    )
    return FiniteSemimetricSpace(names, rows)


@dataclass(frozen=True)
class CompletionModel:
    """Completion of a decreasing-to-zero ray: one added point closes the space.

    The added point sits at distance label(n) from vertex n, i.e. it is
    the center of a compact star over the ray vertices.
    """

    added_point: str
    star: StarSpec
    ray: RaySpec

    def distance(self, m: int, n: int) -> Fraction:
        """Distance over indices; index 0 names the added point."""
        if m < 0 or n < 0:
            raise IndexOutOfRange("indices start at 0 for the added point")
        if m == n:
            return ZERO
        if m == 0:
            return self.ray.label(n)
        if n == 0:
            return self.ray.label(m)
        return ray_distance(self.ray, m, n)

    def truncation_space(self, k: int) -> FiniteSemimetricSpace:
        """Added point plus the first k ray vertices."""
        names = (self.added_point,) + tuple(f"x{i}" for i in range(1, k + 1))
        rows = tuple(
            tuple(self.distance(i, j) for j in range(k + 1)) for i in range(k + 1)
        )
        return FiniteSemimetricSpace(names, rows)

    def to_json(self) -> dict:
        return {
            "added_point": self.added_point,
            "star": self.star.to_json(),
            "ray": self.ray.to_json(),
        }


def ray_to_completion(r: RaySpec, added_point: str = "x0") -> CompletionModel:
    """Complete a decreasing-to-zero ray by adjoining its limit point.

    The result is the compact star with center ``added_point`` labeled 0
    and the ray labels as leaf labels.
    """
    if not r.decreasing_to_zero:
        raise NotDecreasingToZero(
            "ray must be flagged decreasing with an infinite tail of limit zero"
        )
    star = StarSpec(
        center_label=ZERO,
        exceptional=r.prefix,
        tail=r.tail,
        tail_skip=r.tail_skip,
    )
    return CompletionModel(added_point=added_point, star=star, ray=r)


def dplus(p, q) -> Fraction:
    """Max-based ultrametric on nonnegative rationals: 0 when equal, else max."""
    p = rat(p)
    q = rat(q)
    if p < 0 or q < 0:
        raise NegativeInput(f"dplus needs nonnegative inputs, got {p}, {q}")
    return ZERO if p == q else max(p, q)


def dplus_space(values) -> FiniteSemimetricSpace:
    """Finite sample of nonnegative rationals as a space under dplus."""
    vals = [rat(v) for v in values]
    if len(set(vals)) != len(vals):
        raise MalformedPresentation("sample values must be distinct")
    names = tuple(str(v) for v in vals)
    rows = tuple(tuple(dplus(a, b) for b in vals) for a in vals)
    return FiniteSemimetricSpace(names, rows)


@dataclass(frozen=True)
class CompactSubsetReport:
    """Compactness verdict for a presented subset of the dplus line."""

    compact: bool
    finite: bool
    reason: str
    witness: tuple[Fraction, ...] = ()

    def to_json(self) -> dict:
        obj = {"compact": self.compact, "finite": self.finite, "reason": self.reason}
        if self.witness:
            obj["witness"] = [str(x) for x in self.witness]
        return obj


def dplus_compact_subset(explicit, tail: TailLaw = FiniteTail(), include_zero: bool = False) -> CompactSubsetReport:
    """Decide compactness of {t_1 > t_2 > ...} (optionally with 0) under dplus.

    Finite sets are compact and flagged as such.  An infinite presentation
    is compact iff it strictly decreases to zero and zero itself belongs
    to the set; otherwise the emitted witness is a truncation of a
    sequence with no convergent subsequence inside the set.
    """
    values = tuple(rat(x) for x in explicit)
    for x in values:
        if x <= 0:
            raise MalformedPresentation(f"explicit values must be positive, got {x}")
    for a, b in zip(values, values[1:]):
        if a <= b:
            raise MalformedPresentation(f"explicit values must strictly decrease: {a} before {b}")
    if tail.finite:
        return CompactSubsetReport(True, True, "finite sets are compact")
    witness = values[:4] + tuple(tail.label(n) for n in range(1, 5))
    if not tail.decreasing_to_zero:
        return CompactSubsetReport(
            False, False, "tail labels do not strictly decrease to 0", witness
        )
    if values and values[-1] <= tail.label(1):
        return CompactSubsetReport(
            False, False, "presentation not strictly decreasing at the prefix/tail junction", witness
        )
    if not include_zero:
        return CompactSubsetReport(
            False,
            False,
            "0 is the only possible limit point and it is missing from the set",
            witness,
        )
    return CompactSubsetReport(True, False, "strictly decreasing to 0 with 0 included")
