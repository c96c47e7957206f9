from fractions import Fraction

import pytest

from okounkov.errors import UnsupportedError, ValidationError
from okounkov.exactalg import SparsePolynomial
from okounkov.rootdata import GroupType
from okounkov.schubertcell import (FormSpec, build_cell, flag_conditions, independent_positions,
                                   row_vectors, verify_flag_conditions, y_ordering)

GROUPS = [GroupType(f, r) for f in "ABCD" for r in (2, 3, 4)]


def var(cell, pos, power=1):
    e = [0] * cell.d
    e[cell.variable_index(pos)] = power
    return e


@pytest.mark.parametrize("g", GROUPS, ids=str)
def test_dimension_matches_group(g):
    cell = build_cell(g)
    assert cell.d == g.flag_dimension == len(cell.independent_positions)


def test_type_a_ordering_n4():
    pos = y_ordering(independent_positions(GroupType("A", 3)))
    assert pos == [(1, 3), (1, 2), (2, 2), (1, 1), (2, 1), (3, 1)]


def test_type_c_boxed_positions_n6():
    pos = independent_positions(GroupType("C", 3))
    # strictly above the antidiagonal i + j = n + 1
    assert set(pos) == {(i, j) for i in range(1, 7) for j in range(1, 7) if i + j <= 6 and i <= j}
    assert len(pos) == 9


def test_type_a_rows():
    cell = build_cell(GroupType("A", 2))
    rows = row_vectors(cell)
    one = SparsePolynomial.constant(3, 1)
    zero = SparsePolynomial.zero(3)
    assert rows[2] == (one, zero, zero)
    assert rows[0][2] == one
    assert [rows[0][0], rows[0][1]] == [SparsePolynomial.variable(3, cell.variable_index((1, j))) for j in (1, 2)]


def test_type_b_n5_dependent_diagonal():
    cell = build_cell(GroupType("B", 2))
    e, c = cell.entry(2, 2).lowest_term()
    assert list(e) == var(cell, (2, 3), 2)
    # <v2, v2> = 2 x22 + x23^2 + 2 x21 x24 = 0
    assert c == Fraction(-1, 2)


def test_type_c_n4_dependent_entry():
    cell = build_cell(GroupType("C", 2))
    assert list(cell.entry(2, 1).lowest_term()[0]) == var(cell, (1, 2))


@pytest.mark.parametrize("g", [g for g in GROUPS if g.family != "A"], ids=str)
def test_flag_conditions_hold(g):
    cell = build_cell(g)
    assert verify_flag_conditions(cell, FormSpec.for_group(g))


@pytest.mark.parametrize("g", [g for g in GROUPS if g.family != "A"], ids=str)
def test_elimination_orders_agree(g):
    assert build_cell(g, "rows").entries == build_cell(g, "worklist").entries


@pytest.mark.parametrize("g", [GroupType(f, 2) for f in "BCD"] + [GroupType("C", 3)], ids=str)
def test_any_perturbation_breaks_a_condition(g):
    cell = build_cell(g)
    form = FormSpec.for_group(g)
    for pos in cell.dependent_positions():
        bumped = cell.with_entry(pos, cell.entry(*pos) + 1)
        assert not verify_flag_conditions(bumped, form), pos


def test_form_errors():
    with pytest.raises(UnsupportedError):
        FormSpec.for_group(GroupType("A", 2))
    with pytest.raises(UnsupportedError):
        verify_flag_conditions(build_cell(GroupType("A", 2)), FormSpec.standard("symmetric", 3))
    with pytest.raises(ValidationError):
        FormSpec.standard("symplectic", 5)
    with pytest.raises(ValidationError):
        build_cell(GroupType("C", 2), elimination="random")


def test_symplectic_form_is_alternating():
    f = FormSpec.standard("symplectic", 4)
    for p in range(4):
        for q in range(4):
            assert f.gram[p][q] == -f.gram[q][p]


def test_flag_conditions_order():
    # row by row; inside a row the first index decreases
    assert flag_conditions(GroupType("C", 2)) == [(1, 2), (1, 3)]
    assert flag_conditions(GroupType("B", 2)) == [(1, 1), (2, 2), (1, 2), (2, 3), (1, 3), (1, 4)]


def _claimed_lowest(cell, i, j):
    """Expected exponent of the lowest term of the dependent entry ``x_ij``."""
    fam, r = cell.group.family, cell.group.rank
    if i > j:
        return var(cell, (j, i))
    if fam == "B":
        return var(cell, (i, r + 1), 2)
    if fam == "D" and i < r:
        e = var(cell, (i, r))
        e[cell.variable_index((i, r + 1))] += 1
        return e
    return None


@pytest.mark.parametrize("g", [g for g in GROUPS if g.family != "A"], ids=str)
def test_lowest_terms_of_dependent_entries(g):
    cell = build_cell(g)
    for i, j in cell.dependent_positions():
        f = cell.entry(i, j)
        want = _claimed_lowest(cell, i, j)
        if want is None:
            # x_rr in type D: the pairing with the unit at (r, r+1) forces 0
            assert (g.family, i, j) == ("D", g.rank, g.rank)
            assert f.is_zero()
        else:
            assert list(f.lowest_term()[0]) == want, (i, j)
