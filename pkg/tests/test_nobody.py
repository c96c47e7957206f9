from fractions import Fraction

import pytest

from okounkov.errors import DimensionError, ValidationError
from okounkov.exactalg import SparsePolynomial as P
from okounkov.nobody import (certify, compare_with_reference, coordinate_permutations,
                             fundamental_body, fundamental_image, lattice_count_check,
                             newton_polytope, no_body_lower_bound, reference_polytope)
from okounkov.patterns import fflv_polytope
from okounkov.polytope import (HPolytope, contains, equals, f_vector, hull, normalized_volume,
                               v_to_h)
from okounkov.rootdata import DominantWeight, GroupType, from_multiplicities, fundamental_weight
from okounkov.schubertcell import build_cell
from okounkov.valuation import fundamental_space, product_generators, valuation_image

A2, B2, C2, D3 = GroupType("A", 2), GroupType("B", 2), GroupType("C", 2), GroupType("D", 3)
ADJOINT_POINTS = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 0, 1), (0, 1, 1), (0, 2, 0)]


def b2_system(l1, l2):
    """The explicit B2 inequalities in omega coordinates (l1, l2)."""
    rows = [(tuple(-int(i == j) for j in range(4)), 0) for i in range(4)]
    rows += [((1, 0, 0, 0), l1), ((0, 0, 1, 0), l2),
             ((2, 1, 2, 2), 2 * (l1 + l2)), ((2, 1, 1, 1), 2 * l1 + l2)]
    return HPolytope(4, rows)


def test_fundamental_bodies_type_a():
    assert equals(fundamental_body(A2, 1), hull([(0, 0, 0), (0, 1, 0), (1, 0, 0)]))
    assert equals(fundamental_body(C2, 1), fflv_polytope(fundamental_weight(C2, 1)))


def test_fundamental_bodies_type_b():
    p1 = hull([(0, 0, 0, 0), (1, 0, 0, 0), (0, 2, 0, 0), (0, 0, 0, 1)])
    p2 = hull([(0, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)])
    assert equals(fundamental_body(B2, 1), p1)
    assert equals(fundamental_body(B2, 2), p2)
    assert len(fundamental_image(B2, 1)) == 5


def test_fundamental_bodies_type_d():
    p1 = {(0, 0, 0, 0, 0, 0), (1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0), (0, 0, 0, 1, 0, 0),
          (0, 0, 0, 0, 0, 1), (0, 1, 0, 1, 0, 0)}
    p2 = {(0, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0), (0, 0, 0, 0, 0, 1)}
    p3 = {(0, 0, 0, 0, 0, 0), (0, 0, 0, 1, 0, 0), (0, 0, 0, 0, 1, 0), (0, 0, 0, 0, 0, 1)}
    for k, want in zip((1, 2, 3), (p1, p2, p3)):
        assert set(fundamental_body(D3, k).vertices) == want


def test_lower_bound_examples():
    for k in (1, 2):
        assert equals(no_body_lower_bound(fundamental_weight(A2, k)), fundamental_body(A2, k))
    adj = DominantWeight(A2, (1, 0, -1))
    assert equals(no_body_lower_bound(adj), hull(ADJOINT_POINTS))
    w = from_multiplicities(B2, (2, 1))
    p1, p2 = fundamental_body(B2, 1), fundamental_body(B2, 2)
    from okounkov.polytope import minkowski_combination
    assert equals(no_body_lower_bound(w), minkowski_combination([p1, p2], [2, 1]))


@pytest.mark.parametrize("group, m", [(A2, (1, 1)), (C2, (1, 1)), (B2, (1, 1)), (C2, (2, 1)),
                                      (D3, (1, 1, 1)), (GroupType("A", 3), (1, 1, 1))], ids=str)
def test_superadditivity_is_an_equality(group, m):
    cell = build_cell(group)
    spaces = [fundamental_space(cell, k) for k in range(1, group.rank + 1)]
    image = valuation_image(product_generators(spaces, list(m)), cell.order)
    assert equals(hull(image), no_body_lower_bound(from_multiplicities(group, m)))


def test_certify_adjoint():
    res = certify(DominantWeight(A2, (1, 0, -1)))
    assert res.certified and res.matches_fflv
    assert res.normalized_volume == res.degree == 6
    assert res.warnings == ()


def test_certify_b2_regular_weight():
    res = certify(from_multiplicities(B2, (1, 1)))
    assert res.weight.lam == (Fraction(3, 2), Fraction(1, 2))
    assert res.certified and res.matches_fflv is None
    assert set(v_to_h(res.body).ineqs) == set(b2_system(1, 1).ineqs)


def test_certify_zero_and_irregular():
    zero = certify(from_multiplicities(C2, (0, 0)))
    assert zero.certified and zero.normalized_volume == 0 and zero.degree == 0
    assert len(zero.body.vertices) == 1
    irr = certify(from_multiplicities(C2, (1, 0)))
    assert irr.degree == 0 and irr.normalized_volume == 0
    assert irr.certified and irr.image_dimension == 3 and irr.relative_volume == irr.image_degree
    assert any("not regular" in msg for msg in irr.warnings)


def test_compare_verdicts():
    w = DominantWeight(C2, (2, 1))
    rep = compare_with_reference(w, reference_polytope(w, "fflv"))
    assert rep.verdict == "equal"
    assert rep.diagnostics["body_ehrhart"] == rep.diagnostics["reference_ehrhart"]
    b = from_multiplicities(B2, (1, 1))
    rep = compare_with_reference(b, fflv_polytope(w))
    assert rep.verdict == "incomparable"
    assert rep.diagnostics["body_f_vector"] != rep.diagnostics["reference_f_vector"]
    res = certify(b)
    assert compare_with_reference(b, res.body, result=res).verdict == "equal"
    assert compare_with_reference(b, result=res).verdict == "certified"


def test_compare_inclusion_and_errors():
    w = DominantWeight(A2, (1, 0, -1))
    big = fflv_polytope(w.scaled(2))
    rep = compare_with_reference(w, big)
    assert rep.verdict == "proper-inclusion" and rep.diagnostics["inclusion"] == "body in reference"
    with pytest.raises(DimensionError):
        compare_with_reference(w, fflv_polytope(DominantWeight(C2, (1, 0))))
    with pytest.raises(ValidationError):
        reference_polytope(w, "string")


def test_gz_reference_is_a_different_polytope():
    w = DominantWeight(A2, (2, 1, 0))
    rep = compare_with_reference(w, reference_polytope(w, "gz"))
    # same Ehrhart data, different coordinates
    assert rep.diagnostics["body_ehrhart"] == rep.diagnostics["reference_ehrhart"]


def test_newton_polytopes():
    x1, x2 = P.variable(2, 0), P.variable(2, 1)
    sq = newton_polytope(1 + 2 * x1 + x2 + 3 * x1 * x2)
    assert equals(sq, hull([(0, 0), (1, 0), (0, 1), (1, 1)]))
    assert normalized_volume(sq) == 2
    assert newton_polytope(P.constant(2, 5)).vertices == ((0, 0),)
    assert equals(newton_polytope(x1 + x2 ** 3), hull([(1, 0), (0, 3)]))
    with pytest.raises(ValidationError):
        newton_polytope(P.zero(2))


def test_coordinate_permutations():
    p = hull([(0, 0), (2, 0), (0, 1)])
    q = hull([(0, 0), (0, 2), (1, 0)])
    assert coordinate_permutations(p, q) == [(1, 0)]
    assert coordinate_permutations(p, p) == [(0, 1)]
    assert coordinate_permutations(p, hull([(0, 0), (1, 1)])) == []


def test_lattice_count_check():
    out = lattice_count_check(DominantWeight(C2, (1, 0)), ks=(1, 2))
    assert out["weyl_dim"] == out["gz"] == out["fflv"] == [4, 10]


def test_body_contains_lower_bounds_of_smaller_weights():
    big = certify(from_multiplicities(C2, (2, 1))).body
    small = certify(from_multiplicities(C2, (1, 1))).body
    assert f_vector(big) == f_vector(fflv_polytope(DominantWeight(C2, (2, 1))))
    # 0 lies in every fundamental body, so bodies grow with the weight
    assert contains(big, small)
