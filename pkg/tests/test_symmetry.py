import json

import pytest

from gridiv import core
from gridiv.core import BoardShape, Division
from gridiv.symmetry import (
    GROUP,
    GroupElement as G,
    apply_isometry,
    direct_orbits,
    fixed_count,
    i2_closed_form,
    orbit_count,
    permutation,
)


def test_identity_and_involutions():
    for d in core.enumerate_divisions((2, 3), 3):
        assert apply_isometry(d, G.IDENTITY) == d
        for g in GROUP:
            assert apply_isometry(apply_isometry(d, g), g) == d


def test_horizontal_middle_split_fixed_by_rotation():
    d = Division.from_labels((2, 5), [0, 1] * 5)
    assert apply_isometry(d, G.ROTATE180) == d
    assert apply_isometry(d, G.MIRROR_H) == d
    assert apply_isometry(d, G.MIRROR_V) == d


@pytest.mark.parametrize("shape", [(2, 4), (3, 5), (4, 4), (1, 6)])
def test_permutations_compose_like_klein_group(shape):
    def compose(p, q):  # p after q
        return [p[q[i]] for i in range(len(q))]

    perm = {g: permutation(shape, g) for g in GROUP}
    assert perm[G.IDENTITY] == list(range(BoardShape(*shape).size))
    assert compose(perm[G.MIRROR_H], perm[G.MIRROR_V]) == perm[G.ROTATE180]
    for a in GROUP:
        for b in GROUP:
            assert compose(perm[a], perm[b]) == perm[a.compose(b)]
        assert compose(perm[a], perm[a]) == perm[G.IDENTITY]


def test_mirror_h_swaps_rows():
    assert permutation((2, 3), G.MIRROR_H) == [1, 0, 3, 2, 5, 4]
    assert permutation((2, 3), G.MIRROR_V) == [4, 5, 2, 3, 0, 1]


def test_fixed_count_examples():
    assert fixed_count((2, 4), 2, G.IDENTITY) == 28
    assert fixed_count((2, 4), 2, G.ROTATE180) == 4
    assert fixed_count((2, 4), 2, G.MIRROR_V) == 4


@pytest.mark.parametrize("n", range(1, 7))
def test_two_piece_fixed_points_and_orbits(n):
    oc = orbit_count((2, n), 2)
    assert [oc.fixed[g] for g in (G.IDENTITY, G.ROTATE180, G.MIRROR_H, G.MIRROR_V)] == [2 * n * n - n, n, n, n]
    assert oc.up_to_isometry == n * (n + 1) // 2 == i2_closed_form(n)


def test_orbit_examples():
    assert orbit_count((2, 4), 2).up_to_isometry == 10
    assert orbit_count((2, 1), 2).up_to_isometry == 1
    divs = core.enumerate_divisions((2, 3), 3)
    assert orbit_count((2, 3), 3).up_to_isometry == len(direct_orbits(divs))


def test_closed_form_values():
    assert i2_closed_form(1) == 1
    assert i2_closed_form(4) == 10
    assert i2_closed_form(6) == orbit_count((2, 6), 2).up_to_isometry == 21


def test_orbits_partition_divisions():
    divs = core.enumerate_divisions((3, 3), 3)
    orbits = direct_orbits(divs)
    assert sum(len(o) for o in orbits) == len(divs)
    assert set().union(*orbits) == set(divs)
    for o in orbits:
        assert len(o) in (1, 2, 4)


def test_rotation_fixed_two_pieces_are_congruent():
    # a piece mapped onto the other by rotation has the same size
    for n in range(1, 7):
        for d in core.enumerate_divisions((2, n), 2):
            if apply_isometry(d, G.ROTATE180) == d:
                a, b = d.pieces()
                assert len(a) == len(b)


def test_non_identity_fixed_two_pieces_have_zero_or_two_vertical_cuts():
    for n in range(1, 7):
        for d in core.enumerate_divisions((2, n), 2):
            vertical = sum(1 for a, b in d.cuts() if b - a == 2)
            for g in GROUP[1:]:
                if apply_isometry(d, g) == d:
                    assert vertical in (0, 2)


def test_json_report():
    doc = json.loads(orbit_count((2, 4), 2).to_json())
    assert doc == {"m": 2, "n": 4, "k": 2, "fixed": {"e": 28, "r180": 4, "mH": 4, "mV": 4}, "orbits": 10}
