"""Validation, ultrametricity witnesses, spectra, restriction, JSON round trips."""

from fractions import Fraction
from random import Random

import pytest

from starmetric import (
    AsymmetricMatrix,
    DuplicateName,
    EmptySubset,
    MalformedMatrix,
    NegativeDistance,
    NonzeroDiagonal,
    UnknownPoint,
    ZeroOffDiagonal,
    distance_spectrum,
    generate_ultrametric,
    is_ultrametric,
    reorder,
    restrict,
    space_from_json,
    space_to_json,
    ultrametric_violation,
    validate_semimetric,
    x4_space,
    y4_space,
)
from helpers import random_tree


def test_single_point_valid():
    s = validate_semimetric(["a"], [["0"]])
    assert s.points == ("a",)
    assert s.dist == ((Fraction(0),),)


def test_x4_fixture_valid_and_ultrametric():
    s = x4_space()
    assert len(s) == 4
    assert is_ultrametric(s)


@pytest.mark.parametrize(
    "points,rows,exc",
    [
        (["a", "b"], [["0", "0"], ["0", "0"]], ZeroOffDiagonal),
        (["a", "b"], [["0", "1"], ["2", "0"]], AsymmetricMatrix),
        (["a", "b"], [["0", "-1"], ["-1", "0"]], NegativeDistance),
        (["a", "b"], [["1", "2"], ["2", "0"]], NonzeroDiagonal),
        (["a", "a"], [["0", "1"], ["1", "0"]], DuplicateName),
        (["a", "b"], [["0", "1"]], MalformedMatrix),
        (["a", "b"], [["0"], ["1", "0"]], MalformedMatrix),
        ([], [], MalformedMatrix),
        (["a", "b"], [["0", "x"], ["x", "0"]], MalformedMatrix),
    ],
)
def test_validation_errors(points, rows, exc):
    with pytest.raises(exc):
        validate_semimetric(points, rows)


def test_first_violation_wins():
    # row-major scan: the diagonal problem in row 0 beats the asymmetry in row 1
    with pytest.raises(NonzeroDiagonal):
        validate_semimetric(["a", "b", "c"], [["1", "1", "1"], ["2", "0", "1"], ["1", "1", "0"]])


def test_validate_idempotent_on_own_output():
    s = y4_space()
    again = validate_semimetric(s.points, s.dist)
    assert again == s


def test_ultrametric_witness_345_triangle():
    s = validate_semimetric(["a", "b", "c"], [["0", "3", "4"], ["3", "0", "5"], ["4", "5", "0"]])
    w = ultrametric_violation(s)
    assert w is not None
    assert w.lhs == 5 and w.rhs == 4
    assert not is_ultrametric(s)


def test_two_point_spaces_vacuously_ultrametric():
    s = validate_semimetric(["a", "b"], [["0", "7"], ["7", "0"]])
    assert is_ultrametric(s)


def test_generated_trees_are_ultrametric():
    rng = Random(7)
    for _ in range(60):
        tree = random_tree(rng, rng.randint(1, 12))
        assert is_ultrametric(generate_ultrametric(tree))


def test_spectrum_fixtures():
    assert distance_spectrum(x4_space()) == (0, 1, 2, 3)
    assert distance_spectrum(y4_space()) == (0, 2, 3)
    single = validate_semimetric(["a"], [["0"]])
    assert distance_spectrum(single) == (0,)


def test_restrict_identity_and_single():
    s = x4_space()
    assert restrict(s, s.points) == s
    one = restrict(s, ["p2"])
    assert one.points == ("p2",)
    assert one.dist == ((Fraction(0),),)


def test_restrict_preserves_order_and_spectrum_subset():
    rng = Random(3)
    for _ in range(40):
        tree = random_tree(rng, rng.randint(2, 9))
        s = generate_ultrametric(tree)
        pts = list(s.points)
        rng.shuffle(pts)
        sub = restrict(s, pts[: rng.randint(1, len(pts))])
        assert list(sub.points) == [p for p in s.points if p in set(sub.points)]
        assert set(distance_spectrum(sub)) <= set(distance_spectrum(s))
        assert is_ultrametric(sub)  # hereditary


def test_restrict_errors():
    s = x4_space()
    with pytest.raises(EmptySubset):
        restrict(s, [])
    with pytest.raises(UnknownPoint):
        restrict(s, ["p1", "nope"])
    with pytest.raises(DuplicateName):
        reorder(s, ["p1", "p1"])


def test_reorder_round_trip():
    s = x4_space()
    back = reorder(reorder(s, ("p3", "p1", "p4", "p2")), s.points)
    assert back == s


def test_json_round_trip_exact():
    s = validate_semimetric(
        ["a", "b", "c"],
        [["0", "1/3", "0.25"], ["1/3", "0", "1/3"], ["0.25", "1/3", "0"]],
    )
    assert s.d("a", "c") == Fraction(1, 4)
    obj = space_to_json(s)
    assert obj["dist"][0][1] == "1/3"
    assert space_from_json(obj) == s


def test_json_requires_keys():
    with pytest.raises(MalformedMatrix):
        space_from_json({"points": ["a"]})
    with pytest.raises(MalformedMatrix):
        space_from_json([1, 2])


def test_float_entries_rejected():
    with pytest.raises(MalformedMatrix):
        validate_semimetric(["a", "b"], [[0, 0.5], [0.5, 0]])
