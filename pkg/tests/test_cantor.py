from fractions import Fraction

import pytest

from sdreal import (
    F_MINUS,
    F_PLUS,
    IDENTITY,
    Interval,
    Palm,
    PalmState,
    cantor_step,
    cantor_tree,
    hausdorff_interval_unions,
    ifs_iterate,
    truncate,
    value_cover,
)


def test_attractor_maps():
    assert F_MINUS.apply(Fraction(1)) == Fraction(-1, 3)
    assert F_PLUS.apply(Fraction(-1)) == Fraction(1, 3)
    # fixed points sit at the carrier endpoints
    assert F_MINUS.apply(Fraction(-1)) == -1
    assert F_PLUS.apply(Fraction(1)) == 1


def test_palm_state_invariant():
    PalmState(IDENTITY)
    with pytest.raises(ValueError):
        PalmState(Palm(Fraction(2), Fraction(0)))
    with pytest.raises(ValueError):
        PalmState(Palm(Fraction(1, 2), Fraction(3, 4)))


def test_step_from_identity():
    children = cantor_step(PalmState(IDENTITY))
    assert sorted(children) == [-1, 1]
    assert children[-1].palm == Palm(Fraction(2, 3), Fraction(-1, 3))
    assert children[1].palm == Palm(Fraction(2, 3), Fraction(1, 3))


def test_step_general_case_left_leaning():
    children = cantor_step(PalmState(Palm(Fraction(2, 3), Fraction(-1, 3))))
    assert sorted(children) == [-1, 0]
    assert children[-1].palm == Palm(Fraction(4, 9), Fraction(-5, 9))
    assert children[0].palm == Palm(Fraction(4, 9), Fraction(2, 9))


def test_step_easy_case():
    children = cantor_step(PalmState(Palm(Fraction(1, 3), Fraction(0))))
    assert sorted(children) == [0]
    assert children[0].palm == Palm(Fraction(2, 3), Fraction(0))


def test_tree_truncation_goldens():
    tree = cantor_tree()
    assert truncate(tree, 1).words == ((), (-1,), (1,))
    assert tuple(w for w in truncate(tree, 2).words if len(w) == 2) == (
        (-1, -1),
        (-1, 0),
        (1, 0),
        (1, 1),
    )


def test_tree_cover_golden():
    assert value_cover(cantor_tree(), 1) == [
        Interval(Fraction(-1), Fraction(0)),
        Interval(Fraction(0), Fraction(1)),
    ]


def test_states_stay_inside_unit_and_branch_narrow():
    frontier = [PalmState(IDENTITY)]
    for _ in range(8):
        nxt = []
        for state in frontier:
            children = cantor_step(state)
            assert 1 <= len(children) <= 2
            for child in children.values():
                # PalmState construction re-checks the invariant; assert explicitly
                assert child.palm.slope + abs(child.palm.offset) <= 1
                nxt.append(child)
        frontier = nxt


def test_ifs_iterate_goldens():
    assert ifs_iterate(0) == [Interval(Fraction(-1), Fraction(1))]
    assert ifs_iterate(1) == [
        Interval(Fraction(-1), Fraction(-1, 3)),
        Interval(Fraction(1, 3), Fraction(1)),
    ]
    assert ifs_iterate(2) == [
        Interval(Fraction(-1), Fraction(-7, 9)),
        Interval(Fraction(-5, 9), Fraction(-1, 3)),
        Interval(Fraction(1, 3), Fraction(5, 9)),
        Interval(Fraction(7, 9), Fraction(1)),
    ]


def test_ifs_iterate_shape():
    for n in range(0, 8):
        level = ifs_iterate(n)
        assert len(level) == 2 ** n
        for iv in level:
            assert iv.width == 2 * Fraction(3) ** (-n)
        for left, right in zip(level, level[1:]):
            assert left.hi < right.lo


def test_cover_tracks_ifs_iterates():
    for n in range(0, 7):
        distance = hausdorff_interval_unions(value_cover(cantor_tree(), n), ifs_iterate(n))
        assert distance <= Fraction(2) ** (1 - n) + 2 * Fraction(3) ** (-n)


def test_zero_is_excluded_from_deep_covers():
    for n in range(3, 9):
        assert all(not iv.contains(Fraction(0)) for iv in value_cover(cantor_tree(), n))


def test_endpoints_stay_covered():
    for n in range(0, 9):
        cover = value_cover(cantor_tree(), n)
        assert any(iv.contains(Fraction(-1)) for iv in cover)
        assert any(iv.contains(Fraction(1)) for iv in cover)


def test_extraction_is_deterministic():
    assert truncate(cantor_tree(), 6) == truncate(cantor_tree(), 6)
