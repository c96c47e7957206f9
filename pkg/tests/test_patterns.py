from fractions import Fraction
from itertools import product

import pytest

from okounkov.errors import UnsupportedError, ValidationError
from okounkov.patterns import (dyck_paths, fflv_minkowski_decomposition, fflv_polytope,
                               fundamental_fflv, gz_lattice, gz_polytope, gz_table)
from okounkov.polytope import (count_lattice_points, ehrhart_count, equals, lattice_points,
                               minkowski_combination, normalized_volume)
from okounkov.rootdata import (DominantWeight, GroupType, degree_oracle, from_multiplicities,
                               weyl_dim)

H = Fraction(1, 2)


def W(fam, rank, *lam):
    return DominantWeight.of(fam, rank, lam)


def grid(fam, rank, top=2):
    g = GroupType(fam, rank)
    return [from_multiplicities(g, m) for m in product(range(top + 1), repeat=rank)]


def test_table_shapes():
    assert gz_table(GroupType("A", 3)).rotated_profile() == (3, 2, 1)
    assert gz_table(GroupType("C", 3)).rotated_profile() == (1, 2, 3, 2, 1)
    assert gz_table(GroupType("B", 3)).rotated_profile() == (1, 2, 3, 2, 1)
    assert gz_table(GroupType("D", 4)).rotated_profile() == (1, 2, 3, 3, 2, 1)
    for f in "ABCD":
        g = GroupType(f, 3)
        assert len(gz_table(g).cells) == g.flag_dimension


@pytest.mark.parametrize("fam, rank", [("A", 3), ("B", 3), ("C", 3), ("D", 4)])
def test_interlacing_inequality_count(fam, rank):
    g = GroupType(fam, rank)
    w = from_multiplicities(g, [1] * rank)
    count = 2 * g.flag_dimension
    if fam == "D":
        # the last y of each odd row has no upper-right entry; the extras bound it instead
        count += -(rank - 1) + 2 * (rank - 2) + 1
    assert len(gz_polytope(w).ineqs) == count


def test_gz_examples():
    assert count_lattice_points(gz_polytope(W("A", 2, 1, 0, -1))) == 8
    assert count_lattice_points(gz_polytope(W("C", 2, 1, 0))) == 4
    for f, r in [("A", 2), ("B", 2), ("C", 3), ("D", 3)]:
        zero = from_multiplicities(GroupType(f, r), [0] * r)
        pts = lattice_points(gz_polytope(zero), gz_lattice(zero))
        assert pts == [(0,) * GroupType(f, r).flag_dimension]


def test_dyck_path_examples():
    a2 = GroupType("A", 2)
    assert [len(p.cells) for p in dyck_paths(a2, 1, 2)] == [1]
    (long,) = dyck_paths(a2, 1, 3)
    assert len(long.cells) == 3
    # columns strictly increase along a path
    for i in range(1, 4):
        for j in range(i + 1, 5):
            for p in dyck_paths(GroupType("A", 3), i, j):
                cols = [c[1] for c in p.cells]
                assert cols == list(range(cols[0], cols[0] + len(cols)))
                assert 2 * i - 1 <= cols[0] and cols[-1] <= 2 * j - 3


def test_dyck_path_errors():
    with pytest.raises(UnsupportedError):
        dyck_paths(GroupType("B", 2), 1, 2)
    with pytest.raises(ValidationError):
        dyck_paths(GroupType("A", 2), 2, 2)
    with pytest.raises(UnsupportedError):
        fflv_polytope(W("D", 3, 1, 0, 0))


def test_type_c_paths_may_end_in_the_zero_column():
    ends = {p.cells[-1] for p in dyck_paths(GroupType("C", 2), 1, 3)}
    assert len(ends) > 1 and {c[1] for c in ends} == {3}


def test_fflv_examples():
    w = W("A", 2, 1, 0, -1)
    p = fflv_polytope(w)
    want = {(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 0, 1), (0, 1, 1), (0, 2, 0)}
    assert set(lattice_points(p)) == want
    assert normalized_volume(p) == 6
    assert equals(p, fflv_polytope(W("A", 2, 3, 2, 1)))
    assert count_lattice_points(fflv_polytope(W("C", 2, 1, 1))) == 5


def test_minkowski_decomposition():
    assert fflv_minkowski_decomposition(W("C", 2, 1, 1)) == [(2, 1)]
    assert fflv_minkowski_decomposition(W("A", 2, 1, 0, -1)) == [(1, 1), (2, 1)]
    assert fflv_minkowski_decomposition(W("C", 2, 2, 1)) == [(1, 1), (2, 1)]
    with pytest.raises(UnsupportedError):
        fflv_minkowski_decomposition(W("B", 2, 1, 0))


@pytest.mark.parametrize("w", grid("A", 2) + grid("C", 2) + grid("A", 3, 1), ids=str)
def test_fflv_is_sum_of_fundamentals(w):
    dec = fflv_minkowski_decomposition(w)
    if not dec:
        return
    parts = [fundamental_fflv(w.group, k) for k, _ in dec]
    assert equals(fflv_polytope(w), minkowski_combination(parts, [m for _, m in dec]))


@pytest.mark.parametrize("w", grid("A", 2) + grid("C", 2), ids=str)
def test_counts_match_representation_dimension(w):
    for k in (1, 2, 3):
        wk = w.scaled(k)
        n = weyl_dim(wk)
        assert ehrhart_count(gz_polytope(w), k) == n
        assert ehrhart_count(fflv_polytope(w), k) == n


@pytest.mark.parametrize("w", [w for w in grid("A", 2) + grid("C", 2) if all(w.multiplicities())], ids=str)
def test_volumes_match_degree(w):
    assert normalized_volume(gz_polytope(w)) == normalized_volume(fflv_polytope(w)) == degree_oracle(w)


@pytest.mark.parametrize("w", grid("D", 3, 1) + [W("D", 4, 1, 0, 0, 0), W("D", 4, H, H, H, -H)], ids=str)
def test_type_d_counts(w):
    assert count_lattice_points(gz_polytope(w), gz_lattice(w)) == weyl_dim(w)


@pytest.mark.parametrize("w", grid("B", 2) + [W("B", 3, H, H, H), W("B", 3, 1, 1, 0), W("B", 3, 3 * H, H, H)], ids=str)
def test_type_b_counts_with_half_edge_lattice(w):
    assert count_lattice_points(gz_polytope(w), gz_lattice(w)) == weyl_dim(w)


def test_type_b_alternative_lattices_undercount():
    w = W("B", 2, 1, 1)
    full = weyl_dim(w)
    assert count_lattice_points(gz_polytope(w), gz_lattice(w, "standard")) < full
    assert count_lattice_points(gz_polytope(w), gz_lattice(w, "index2")) < full
    with pytest.raises(ValidationError):
        gz_lattice(w, "other")
