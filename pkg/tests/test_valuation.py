from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from okounkov.errors import ResourceError, UndefinedValuationError, ValidationError
from okounkov.exactalg import SparsePolynomial as P
from okounkov.patterns import fflv_polytope
from okounkov.rootdata import GroupType, fundamental_weight, weyl_dim
from okounkov.schubertcell import build_cell
from okounkov.valuation import (admissible_column_sets, diagonal_rule_failures, diagonal_valuation,
                                fundamental_space, lowest_term_valuation, minor_space,
                                plucker_coordinates, product_generators, spin_rows,
                                span_valuation_image, valuation_image, valuation_of_ratio)

ADJOINT_POINTS = {(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 0, 1), (0, 1, 1), (0, 2, 0)}


def xs(n=3):
    return [P.variable(n, i) for i in range(n)]


def adjoint_orbit_polynomials():
    """Entries of g E13 g^-1 for g lower unitriangular with entries x1, x2, x3."""
    x1, x2, x3 = xs()
    col = [P.constant(3, 1), x1, x2]                 # g e1
    row = [x1 * x3 - x2, -x3, P.constant(3, 1)]      # e3^T g^-1
    return [a * b for a in col for b in row]


def span_rank(polys):
    monos = sorted({e for f in polys for e in f.support()})
    rows = [[Fraction(f.coefficient(m)) for m in monos] for f in polys]
    r = 0
    for c in range(len(monos)):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                t = rows[i][c] / rows[r][c]
                rows[i] = [a - t * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return r


def test_example_valuations():
    x1, x2, x3 = xs()
    assert lowest_term_valuation(x1 * x2 - x1 ** 2 * x3) == (1, 1, 0)
    assert lowest_term_valuation(P.constant(3, 1)) == (0, 0, 0)
    assert lowest_term_valuation(x2 ** 2 - x1 * x2 * x3) == (0, 2, 0)
    with pytest.raises(UndefinedValuationError):
        lowest_term_valuation(P.zero(3))


def test_valuation_of_ratio():
    x1, x2, x3 = xs()
    f = x1 * x2 - x1 ** 2 * x3
    assert valuation_of_ratio(f, f) == (0, 0, 0)
    assert valuation_of_ratio(x1 * x2, x1) == (0, 1, 0)
    assert valuation_of_ratio(f, x2) == (1, 0, 0)


def test_listed_generators_give_the_eight_points():
    x1, x2, x3 = xs()
    one = P.constant(3, 1)
    gens = [one, x1, x2, x3, x1 * x2 - x1 ** 2 * x3, x1 * x3, x2 * x3, x2 ** 2 - x1 * x2 * x3]
    assert valuation_image(gens) == ADJOINT_POINTS


def test_orbit_construction_spans_the_same_space():
    orbit = adjoint_orbit_polynomials()
    assert span_rank(orbit) == 8
    assert span_valuation_image(orbit) == ADJOINT_POINTS


def test_type_a_minor_spaces():
    cell = build_cell(GroupType("A", 2))
    y = {pos: P.variable(3, cell.variable_index(pos)) for pos in cell.independent_positions}
    one = P.constant(3, 1)
    assert set(minor_space(cell, 1).generators) == {one, y[(1, 1)], y[(1, 2)]}
    want = {one, y[(2, 1)], y[(1, 1)] - y[(1, 2)] * y[(2, 1)]}
    assert set(minor_space(cell, 2).generators) == want


@pytest.mark.parametrize("fam, rank", [("A", 3), ("B", 3), ("C", 3), ("D", 4)])
def test_every_space_contains_one(fam, rank):
    cell = build_cell(GroupType(fam, rank))
    for k in range(1, rank + 1):
        assert P.constant(cell.d, 1) in fundamental_space(cell, k).generators


@pytest.mark.parametrize("fam, rank", [(f, r) for f in "ABCD" for r in (2, 3)] + [("D", 4), ("A", 4)])
def test_span_image_has_representation_dimension(fam, rank):
    g = GroupType(fam, rank)
    cell = build_cell(g)
    for k in range(1, rank + 1):
        space = fundamental_space(cell, k)
        img = span_valuation_image(space.generators, cell.order)
        assert len(img) == weyl_dim(fundamental_weight(g, k)) == span_rank(list(space.generators))


def test_spinors_square_to_pluckers():
    cell = build_cell(GroupType("B", 2))
    space = fundamental_space(cell, 2)
    assert space.kind == "spinor"
    pl = plucker_coordinates(cell, space.rows)
    for s, cols in zip(space.generators, space.columns):
        p = pl[cols]
        e, c = p.lowest_term()
        assert (s * s).scale(c) == p


def test_spin_rows():
    assert spin_rows(build_cell(GroupType("B", 3)), 3) == (1, 2, 3)
    assert spin_rows(build_cell(GroupType("D", 3)), 2) == (1, 2, 4)
    assert spin_rows(build_cell(GroupType("C", 3)), 3) is None
    assert admissible_column_sets(4, 2) == [(1, 2), (1, 3), (2, 4), (3, 4)]


def test_products_for_the_adjoint_weight():
    cell = build_cell(GroupType("A", 2))
    spaces = [minor_space(cell, 1), minor_space(cell, 2)]
    prods = product_generators(spaces, [1, 1])
    assert len(prods) == 9
    assert valuation_image(prods, cell.order) == ADJOINT_POINTS


def test_product_generators_edge_cases():
    cell = build_cell(GroupType("A", 2))
    s = minor_space(cell, 1)
    assert product_generators([s], [1]) == list(s.generators)
    assert product_generators([s, s], [0, 0]) == [P.constant(3, 1)]
    with pytest.raises(ResourceError):
        product_generators([s], [7])
    with pytest.raises(ResourceError):
        product_generators([s], [5], product_cap=100)
    with pytest.raises(ValidationError):
        product_generators([s], [1, 1])
    with pytest.raises(ValidationError):
        product_generators([s], [-1])


def test_type_c_vector_points_avoid_shared_dyck_paths():
    cell = build_cell(GroupType("C", 2))
    pts = span_valuation_image(minor_space(cell, 1).generators, cell.order)
    assert all(set(p) <= {0, 1} for p in pts)
    h = fflv_polytope(fundamental_weight(GroupType("C", 2), 1))
    paths = [a for a, b in h.ineqs if all(x >= 0 for x in a)]
    for p in pts:
        for a in paths:
            assert sum(x * y for x, y in zip(a, p)) <= 1


@pytest.mark.parametrize("fam, rank", [("A", 2), ("A", 3), ("A", 4), ("A", 5), ("C", 2), ("C", 3)])
def test_diagonal_rule_types_a_c(fam, rank):
    assert diagonal_rule_failures(build_cell(GroupType(fam, rank))) == []


def test_diagonal_rule_fails_in_type_b():
    cell = build_cell(GroupType("B", 2))
    k, rows, cols, diag, val = diagonal_rule_failures(cell, limit=1)[0]
    assert (k, rows, cols) == (2, (1, 2), (1, 2))
    assert diag == diagonal_valuation(cell, rows, cols) == (0, 2, 2, 0)
    assert val == (0, 0, 0, 2)


small = st.dictionaries(st.tuples(*[st.integers(0, 2)] * 3), st.integers(-3, 3), max_size=4).map(lambda t: P(3, t))


@settings(max_examples=60)
@given(st.lists(small, min_size=1, max_size=6))
def test_span_image_size_is_rank(polys):
    img = span_valuation_image(polys)
    assert len(img) == span_rank(polys)
    assert valuation_image([f for f in polys if not f.is_zero()]) <= img


@given(small.filter(lambda f: not f.is_zero()), small.filter(lambda f: not f.is_zero()))
def test_valuation_additivity(f, g):
    vf, vg = lowest_term_valuation(f), lowest_term_valuation(g)
    assert lowest_term_valuation(f * g) == tuple(a + b for a, b in zip(vf, vg))
