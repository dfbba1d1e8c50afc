"""Branched covers: genus bookkeeping, components, points, nodal models,
and the conjugation-search isomorphism test."""
import pytest
from hypothesis import given

from trigonal import (
    BranchedCover,
    CoverPoint,
    NodalCoverModel,
    Permutation,
    are_isomorphic,
    arithmetic_genus,
    components,
    conjugate,
    fiber_points,
    genus,
    label_cycles,
    nodal_isomorphism,
    ramification_profile,
)
from trigonal.covers import point_on

from conftest import permutations, transitive_covers


def two_sheet_cover(transposition_count):
    flip = Permutation((2, 1))
    return BranchedCover.from_pairs(
        2, [(f"w{i}", flip) for i in range(transposition_count)]
    )


def test_cover_validation():
    flip = Permutation((2, 1))
    with pytest.raises(ValueError):
        BranchedCover.from_pairs(2, [("a", flip), ("a", flip)])  # duplicate label
    with pytest.raises(ValueError):
        BranchedCover.from_pairs(2, [("a", Permutation.identity(2))])
    with pytest.raises(ValueError):
        BranchedCover.from_pairs(3, [("a", flip)])  # degree mismatch
    with pytest.raises(ValueError):
        BranchedCover.from_pairs(2, [("a", flip), ("b", flip), ("c", flip)])  # product


def test_hyperelliptic_genus():
    # 2g+2 simple branch points on a double cover give genus g
    for g in range(0, 5):
        assert genus(two_sheet_cover(2 * g + 2)) == g


def test_trigonal_genus_from_ten_transpositions():
    t12 = Permutation.from_cycles(3, [(1, 2)])
    t13 = Permutation.from_cycles(3, [(1, 3)])
    t23 = Permutation.from_cycles(3, [(2, 3)])
    perms = [t12, t12, t13, t13, t23, t23, t12, t12, t13, t13]
    cover = BranchedCover.from_pairs(3, [(f"w{i}", p) for i, p in enumerate(perms)])
    assert cover.is_connected()
    assert cover.total_ramification() == 10
    assert genus(cover) == 3


def test_genus_demands_connected_cover():
    flip = Permutation((2, 1, 4, 3))
    cover = BranchedCover.from_pairs(4, [("a", flip), ("b", flip)])
    assert not cover.is_connected()
    with pytest.raises(ValueError):
        genus(cover)


def test_perm_at_defaults_to_identity():
    cover = two_sheet_cover(2)
    assert cover.perm_at("w0").images == (2, 1)
    assert cover.perm_at("absent").is_identity()


def test_ramification_profile():
    cover = BranchedCover.from_pairs(
        4,
        [
            ("a", Permutation.from_cycles(4, [(1, 2, 3)])),
            ("b", Permutation.from_cycles(4, [(1, 3, 2)])),
        ],
    )
    assert ramification_profile(cover, "a") == (3, 1)
    assert ramification_profile(cover, "absent") == (1, 1, 1, 1)


def test_components_split_and_restrict():
    flip = Permutation((2, 1, 4, 3))
    other = Permutation((2, 1, 3, 4))
    cover = BranchedCover.from_pairs(
        4, [("a", flip), ("b", other), ("c", other), ("d", flip)]
    )
    parts = components(cover)
    assert [part.sheets for part in parts] == [(1, 2), (3, 4)]
    first = parts[0].cover
    assert first.degree == 2 and set(first.labels) == {"a", "b", "c", "d"}
    # the second orbit sees only the (3 4) action of the flips
    second = parts[1].cover
    assert set(second.labels) == {"a", "d"}
    assert genus(second) == 0
    assert parts[1].to_parent(1) == 3 and parts[1].from_parent(4) == 2


def test_cover_points_canonicalize_rotation():
    assert CoverPoint("a", (3, 1, 2)) == CoverPoint("a", (1, 2, 3))
    assert CoverPoint("a", (2, 3, 1)).cycle == (1, 2, 3)
    assert CoverPoint("a", (5,)).ramification_index == 1
    assert CoverPoint("a", (1, 2, 3)).ramification_index == 3
    mapped = CoverPoint("a", (1, 2)).mapped(Permutation((3, 4, 1, 2)))
    assert mapped == CoverPoint("a", (3, 4))


def test_label_cycles_and_fiber_points():
    cover = BranchedCover.from_pairs(
        3,
        [
            ("a", Permutation.from_cycles(3, [(1, 2)])),
            ("b", Permutation.from_cycles(3, [(1, 2)])),
        ],
    )
    assert label_cycles(cover, "a") == ((1, 2), (3,))
    assert label_cycles(cover, "zz") == ((1,), (2,), (3,))
    assert fiber_points(cover, "a") == (CoverPoint("a", (1, 2)), CoverPoint("a", (3,)))
    assert point_on(cover, "a", (3,)) == CoverPoint("a", (3,))
    with pytest.raises(ValueError):
        point_on(cover, "a", (1, 3))


def test_arithmetic_genus_counts_nodes_and_components():
    flip = Permutation((2, 1, 4, 3))
    other = Permutation((2, 1, 3, 4))
    cover = BranchedCover.from_pairs(
        4, [("a", flip), ("b", other), ("c", other), ("d", flip)]
    )
    parts = components(cover)
    assert [genus(part.cover) for part in parts] == [1, 0]
    # genus-1 and genus-0 components glued at two points: p_a = 1 + 0 + 2 - 2 + 1
    nodes = (
        (point_on(cover, "a", (1, 2)), point_on(cover, "a", (3, 4))),
        (point_on(cover, "d", (1, 2)), point_on(cover, "d", (3, 4))),
    )
    model = NodalCoverModel(cover, nodes)
    assert arithmetic_genus(model) == 2
    assert arithmetic_genus(NodalCoverModel(cover, nodes[:1])) == 1
    assert arithmetic_genus(NodalCoverModel(cover, ())) == 0


def test_nodal_model_rejects_reused_points():
    cover = two_sheet_cover(4)
    p = point_on(cover, "w0", (1, 2))
    q = point_on(cover, "w1", (1, 2))
    r = point_on(cover, "w2", (1, 2))
    with pytest.raises(ValueError):
        NodalCoverModel(cover, ((p, p),))
    with pytest.raises(ValueError):
        NodalCoverModel(cover, ((p, q), (p, r)))
    with pytest.raises(ValueError):
        NodalCoverModel(cover, ((p, CoverPoint("w9", (1, 2))),))  # label off the cover
    with pytest.raises(ValueError):
        NodalCoverModel(cover, ((p, CoverPoint("w1", (1,))),))  # not a fibre cycle


@given(transitive_covers(4))
def test_connected_cover_genus_is_a_nonnegative_integer(cover):
    assert genus(cover) >= 0


@given(transitive_covers(5), permutations(5))
def test_conjugate_covers_are_isomorphic(cover, rho):
    twisted = BranchedCover.from_pairs(
        cover.degree,
        [(label, conjugate(perm, rho)) for label, perm in zip(cover.labels, cover.monodromy)],
    )
    iso = are_isomorphic(cover, twisted)
    assert iso is not None
    for label in cover.labels:
        assert conjugate(cover.perm_at(label), iso) == twisted.perm_at(label)


def test_isomorphism_requires_matching_labels():
    a = two_sheet_cover(2)
    flip = Permutation((2, 1))
    b = BranchedCover.from_pairs(2, [("x", flip), ("y", flip)])
    with pytest.raises(ValueError):
        are_isomorphic(a, b)


def test_isomorphism_distinguishes_cycle_structure():
    t12 = Permutation.from_cycles(3, [(1, 2)])
    t13 = Permutation.from_cycles(3, [(1, 3)])
    t23 = Permutation.from_cycles(3, [(2, 3)])
    a = BranchedCover.from_pairs(3, [("u", t12), ("v", t12), ("w", t13), ("x", t13)])
    b = BranchedCover.from_pairs(3, [("u", t12), ("v", t23), ("w", t23), ("x", t12)])
    assert are_isomorphic(a, a) is not None
    # same labelwise profiles, but no single conjugation aligns all four
    assert are_isomorphic(a, b) is None


def test_nodal_isomorphism_must_respect_nodes():
    flip = Permutation((2, 1, 4, 3))
    other = Permutation((2, 1, 3, 4))
    cover = BranchedCover.from_pairs(
        4, [("a", flip), ("b", other), ("c", other), ("d", flip)]
    )
    nodes = ((point_on(cover, "b", (3,)), point_on(cover, "b", (4,))),)
    model = NodalCoverModel(cover, nodes)
    same = nodal_isomorphism(model, model)
    assert same is not None
    shifted = NodalCoverModel(
        cover, ((point_on(cover, "c", (3,)), point_on(cover, "c", (4,))),)
    )
    assert nodal_isomorphism(model, shifted) is None
