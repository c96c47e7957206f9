"""Lowest-term valuation and the section spaces it is evaluated on.

Sections of the line bundle of a fundamental weight are restricted to the
open cell and de-homogenized by the minor on the last ``k`` columns (a
nonzero constant on the cell), so they become polynomials in the cell
coordinates.  For the spin weights of types B and D the sections are pure
spinor coordinates, recovered as exact square roots of the Plücker
coordinates indexed by admissible column sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, Sequence

from .errors import ResourceError, UndefinedValuationError, ValidationError
from .exactalg import SparsePolynomial, VariableOrder, determinant, exact_sqrt
from .rootdata import GroupType
from .schubertcell import CellModel

ValuationPoint = tuple[int, ...]

DEFAULT_DEGREE_CAP = 6
DEFAULT_PRODUCT_CAP = 10**6


@dataclass(frozen=True)
class MinorSpace:
    """Spanning set of the sections of one fundamental weight on the cell.

    ``kind`` is ``"plucker"`` for minors of the first ``k`` rows and
    ``"spinor"`` for pure spinor coordinates; ``rows`` records which rows of
    the cell matrix span the isotropic subspace used.
    """

    group: GroupType
    k: int
    generators: tuple[SparsePolynomial, ...]
    kind: str = "plucker"
    rows: tuple[int, ...] = ()
    columns: tuple[tuple[int, ...], ...] = ()


def lowest_term_valuation(f: SparsePolynomial, order: VariableOrder | None = None) -> ValuationPoint:
    """Exponent vector of the lowest monomial of ``f``."""
    if f.is_zero():
        raise UndefinedValuationError("the zero function has no valuation")
    return f.lowest_term(order)[0]


def valuation_of_ratio(f: SparsePolynomial, g: SparsePolynomial,
                       order: VariableOrder | None = None) -> ValuationPoint:
    a = lowest_term_valuation(f, order)
    b = lowest_term_valuation(g, order)
    return tuple(x - y for x, y in zip(a, b))


def _normalize_sign(f: SparsePolynomial, order: VariableOrder) -> SparsePolynomial:
    return -f if f.lowest_term(order)[1] < 0 else f


def _minor(cell: CellModel, rows: Sequence[int], cols: Sequence[int]) -> SparsePolynomial:
    return determinant([[cell.entry(i, j) for j in cols] for i in rows])


def _unit_columns(cell: CellModel, rows: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted(cell.n + 1 - i for i in rows))


def plucker_coordinates(cell: CellModel, rows: Sequence[int]) -> dict[tuple[int, ...], SparsePolynomial]:
    """All maximal minors of the given rows divided by their unit minor."""
    rows = tuple(rows)
    base = _minor(cell, rows, _unit_columns(cell, rows))
    if not base.is_constant() or base.is_zero():
        raise AssertionError("unit minor is not a nonzero constant")
    c = base.coefficient((0,) * cell.d)
    out = {}
    for cols in combinations(range(1, cell.n + 1), len(rows)):
        out[cols] = _minor(cell, rows, cols).scale(Fraction(1) / c)
    return out


def minor_space(cell: CellModel, k: int) -> MinorSpace:
    """Plücker coordinates of ``V^k`` restricted to the cell.

    Zero minors are dropped, signs are normalized so that every lowest
    coefficient is positive, and duplicates are removed.
    """
    if not 1 <= k <= cell.group.rank:
        raise IndexError(f"k={k} outside 1..{cell.group.rank}")
    rows = tuple(range(1, k + 1))
    gens, cols_used, seen = [], [], set()
    for cols, f in plucker_coordinates(cell, rows).items():
        if f.is_zero():
            continue
        f = _normalize_sign(f, cell.order)
        if f in seen:
            continue
        seen.add(f)
        gens.append(f)
        cols_used.append(cols)
    return MinorSpace(cell.group, k, tuple(gens), "plucker", rows, tuple(cols_used))


def spin_rows(cell: CellModel, k: int) -> tuple[int, ...] | None:
    """Rows spanning the maximal isotropic subspace of a spin weight.

    ``None`` if ``k`` is not a spin index of the group.
    """
    fam, r = cell.group.family, cell.group.rank
    if fam == "B" and k == r:
        return tuple(range(1, r + 1))
    if fam == "D" and k == r:
        return tuple(range(1, r + 1))
    if fam == "D" and k == r - 1:
        return tuple(range(1, r)) + (r + 1,)
    return None


def admissible_column_sets(n: int, r: int) -> list[tuple[int, ...]]:
    """Column sets containing one index from each pair ``{j, n+1-j}``, ``j <= r``."""
    out = []
    for choice in product((0, 1), repeat=r):
        out.append(tuple(sorted(j if c == 0 else n + 1 - j for j, c in zip(range(1, r + 1), choice))))
    return sorted(out)


def spinor_space(cell: CellModel, k: int) -> MinorSpace:
    """Pure spinor coordinates of the isotropic subspace for spin index ``k``."""
    rows = spin_rows(cell, k)
    if rows is None:
        raise ValidationError(f"k={k} is not a spin index of {cell.group}")
    r = cell.group.rank
    pl = plucker_coordinates(cell, rows)
    gens, cols_used = [], []
    for cols in admissible_column_sets(cell.n, r):
        p = pl[cols]
        if p.is_zero():
            continue
        # spinors square to Plücker coordinates only up to constants
        p = p.scale(Fraction(1) / p.lowest_term(cell.order)[1])
        gens.append(exact_sqrt(p))
        cols_used.append(cols)
    return MinorSpace(cell.group, k, tuple(gens), "spinor", rows, tuple(cols_used))


def fundamental_space(cell: CellModel, k: int) -> MinorSpace:
    """Sections of the k-th fundamental weight: Plücker or spinor."""
    if not 1 <= k <= cell.group.rank:
        raise IndexError(f"k={k} outside 1..{cell.group.rank}")
    if spin_rows(cell, k) is not None:
        return spinor_space(cell, k)
    return minor_space(cell, k)


def product_generators(spaces: Sequence[MinorSpace], multiplicities: Sequence[int],
                       degree_cap: int = DEFAULT_DEGREE_CAP,
                       product_cap: int = DEFAULT_PRODUCT_CAP) -> list[SparsePolynomial]:
    """All products choosing one generator per factor, space ``i`` used ``m_i`` times."""
    if len(spaces) != len(multiplicities):
        raise ValidationError("spaces and multiplicities must be aligned")
    if any(m < 0 for m in multiplicities):
        raise ValidationError("multiplicities must be non-negative")
    if not spaces:
        raise ValidationError("at least one space is needed")
    total = sum(multiplicities)
    if total > degree_cap:
        raise ResourceError(f"total degree {total} exceeds cap {degree_cap}", total)
    count = 1
    for s, m in zip(spaces, multiplicities):
        count *= len(s.generators) ** m
    if count > product_cap:
        raise ResourceError(f"{count} products exceed cap {product_cap}", count)
    nvars = spaces[0].generators[0].nvars
    factors: list[Sequence[SparsePolynomial]] = []
    for s, m in zip(spaces, multiplicities):
        factors.extend([s.generators] * m)
    out = []
    for choice in product(*factors):
        f = SparsePolynomial.constant(nvars, 1)
        for g in choice:
            f = f * g
        out.append(f)
    return out


def valuation_image(polys: Iterable[SparsePolynomial],
                    order: VariableOrder | None = None) -> set[ValuationPoint]:
    """Distinct valuations of the given (nonzero) polynomials."""
    return {lowest_term_valuation(f, order) for f in polys}


def span_valuation_image(polys: Iterable[SparsePolynomial],
                         order: VariableOrder | None = None) -> set[ValuationPoint]:
    """Valuations of all nonzero elements of the linear span of ``polys``.

    Gaussian elimination on lowest terms produces a basis with pairwise
    distinct lowest monomials; their exponents are exactly the values taken
    by the valuation on the span, and their number is its dimension.
    """
    basis: dict[ValuationPoint, SparsePolynomial] = {}
    for f in polys:
        while not f.is_zero():
            e, c = f.lowest_term(order)
            pivot = basis.get(e)
            if pivot is None:
                basis[e] = f
                break
            f = f - pivot.scale(Fraction(c) / pivot.lowest_term(order)[1])
    return set(basis)


def submatrix_minors(cell: CellModel, k: int):
    """Every square minor of the top-left ``k x (n-k)`` block, as ``(rows, cols, poly)``."""
    n = cell.n
    for size in range(1, min(k, n - k) + 1):
        for rows in combinations(range(1, k + 1), size):
            for cols in combinations(range(1, n - k + 1), size):
                yield rows, cols, _minor(cell, rows, cols)


def diagonal_valuation(cell: CellModel, rows: Sequence[int], cols: Sequence[int]) -> ValuationPoint | None:
    """Sum of the valuations of the diagonal entries; ``None`` if one of them is 0."""
    total = [0] * cell.d
    for i, j in zip(rows, cols):
        e = cell.entry(i, j)
        if e.is_zero():
            return None
        for t, x in enumerate(lowest_term_valuation(e, cell.order)):
            total[t] += x
    return tuple(total)


def diagonal_rule_failures(cell: CellModel, limit: int | None = None):
    """Minors of ``A_{k,n-k}`` whose valuation is not that of their diagonal term."""
    out = []
    for k in range(1, cell.n):
        for rows, cols, f in submatrix_minors(cell, k):
            diag = diagonal_valuation(cell, rows, cols)
            val = None if f.is_zero() else lowest_term_valuation(f, cell.order)
            if diag != val:
                out.append((k, rows, cols, diag, val))
                if limit is not None and len(out) >= limit:
                    return out
    return out
