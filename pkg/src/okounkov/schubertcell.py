"""Coordinates on the open Schubert cell of a classical flag variety.

A flag in general position with the standard flag is the row flag of an
``n x n`` matrix with units on the antidiagonal and zeros below it::

    x11 x12 ... x1,n-1  1
    x21 x22 ...   1     0
    ...
    1    0  ...   0     0

Row ``i`` is ``v_i = e_{n+1-i} + sum_j x_ij e_j`` and ``V^k`` is spanned by
the first ``k`` rows.  Positions are 1-based ``(row, column)`` pairs.

For the orthogonal and symplectic groups the bilinear form pairs ``e_p``
with ``e_{n+1-p}``; the flag conditions are ``<v_a, v_b> = 0`` whenever
``a + b <= n``.  Each condition is linear with a unit (or 2) coefficient in
the entry ``x_ba`` and is solved for it, so the dependent entries become
polynomials in the independent ones.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import UnsupportedError, ValidationError
from .exactalg import SparsePolynomial, VariableOrder
from .rootdata import GroupType

Position = tuple[int, int]


@dataclass(frozen=True)
class FormSpec:
    """Bilinear form pairing ``e_p`` with ``e_{n+1-p}``."""

    kind: str
    n: int
    gram: tuple[tuple[int, ...], ...] = field(repr=False)

    @classmethod
    def for_group(cls, group: GroupType) -> "FormSpec":
        if group.family == "A":
            raise UnsupportedError("type A carries no invariant form")
        kind = "symplectic" if group.family == "C" else "symmetric"
        return cls.standard(kind, group.n)

    @classmethod
    def standard(cls, kind: str, n: int) -> "FormSpec":
        if kind not in ("symmetric", "symplectic"):
            raise ValidationError(f"unknown form kind {kind!r}")
        if kind == "symplectic" and n % 2:
            raise ValidationError("a symplectic form needs even n")
        gram = [[0] * n for _ in range(n)]
        for p in range(1, n + 1):
            q = n + 1 - p
            if kind == "symmetric":
                gram[p - 1][q - 1] = 1
            elif p < q:
                gram[p - 1][q - 1] = 1
                gram[q - 1][p - 1] = -1
        return cls(kind, n, tuple(tuple(r) for r in gram))

    def pairing(self, u, w) -> SparsePolynomial:
        """``<u, w>`` for vectors of polynomials."""
        total = None
        for p in range(self.n):
            q = self.n - 1 - p
            g = self.gram[p][q]
            if g and not u[p].is_zero() and not w[q].is_zero():
                term = (u[p] * w[q]).scale(g)
                total = term if total is None else total + term
        return total if total is not None else SparsePolynomial.zero(u[0].nvars)


@dataclass(frozen=True)
class CellModel:
    group: GroupType
    n: int
    d: int
    entries: tuple[tuple[SparsePolynomial, ...], ...] = field(repr=False)
    independent_positions: tuple[Position, ...]
    y_order: tuple[Position, ...]
    order: VariableOrder = field(repr=False)

    def entry(self, i: int, j: int) -> SparsePolynomial:
        return self.entries[i - 1][j - 1]

    def variable_index(self, pos: Position) -> int:
        """0-based index of the variable sitting at ``pos``."""
        return self.y_order.index(pos)

    def dependent_positions(self) -> list[Position]:
        free = set(self.independent_positions)
        return [(i, j) for i in range(1, self.n + 1) for j in range(1, self.n + 1 - i)
                if (i, j) not in free]

    def with_entry(self, pos: Position, value: SparsePolynomial) -> "CellModel":
        """Copy with one entry replaced (used to test the flag conditions)."""
        rows = [list(r) for r in self.entries]
        rows[pos[0] - 1][pos[1] - 1] = value
        return CellModel(self.group, self.n, self.d, tuple(tuple(r) for r in rows),
                         self.independent_positions, self.y_order, self.order)


def independent_positions(group: GroupType) -> list[Position]:
    n, fam = group.n, group.family
    out = []
    for i in range(1, n):
        for j in range(1, n + 1 - i):
            if fam == "A" or (fam == "C" and i <= j) or (fam in "BD" and i < j):
                out.append((i, j))
    return out


def y_ordering(positions) -> list[Position]:
    """Columns from right to left, top to bottom inside a column."""
    return sorted(positions, key=lambda p: (-p[1], p[0]))


def flag_conditions(group: GroupType) -> list[tuple[int, int]]:
    """Row pairs ``(a, b)``, ``a <= b``, whose pairing must vanish.

    Listed row by row and, inside row ``b``, with ``a`` decreasing; this is
    an order in which every condition only involves solved entries.
    """
    n = group.n
    strict = group.family == "C"
    return [(a, b) for b in range(1, n + 1) for a in range(b, 0, -1)
            if a + b <= n and (a < b or not strict)]


def build_cell(group: GroupType, elimination: str = "rows") -> CellModel:
    """Matrix model of the open cell with dependent entries eliminated.

    ``elimination`` selects the order in which flag conditions are solved:
    ``"rows"`` (row by row, columns right to left) or ``"worklist"``
    (repeatedly the ready condition with the smallest ``a + b``).  Both
    yield identical entries because the solution is unique.
    """
    return _build_cell(group, elimination)


@lru_cache(maxsize=None)
def _build_cell(group: GroupType, elimination: str) -> CellModel:
    if elimination not in ("rows", "worklist"):
        raise ValidationError(f"unknown elimination order {elimination!r}")
    n = group.n
    free = y_ordering(independent_positions(group))
    d = len(free)
    if d != group.flag_dimension:
        raise AssertionError(f"{group}: {d} free positions, expected {group.flag_dimension}")
    zero = SparsePolynomial.zero(d)
    one = SparsePolynomial.constant(d, 1)
    entries: dict[Position, SparsePolynomial | None] = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i + j == n + 1:
                entries[(i, j)] = one
            elif i + j > n + 1:
                entries[(i, j)] = zero
            else:
                entries[(i, j)] = None
    for t, pos in enumerate(free):
        entries[pos] = SparsePolynomial.variable(d, t)

    if group.family != "A":
        form = FormSpec.for_group(group)
        pending = flag_conditions(group)
        if elimination == "rows":
            for a, b in pending:
                _solve(entries, form, a, b)
        else:
            pending = sorted(pending, key=lambda ab: (ab[0] + ab[1], ab))
            while pending:
                for idx, (a, b) in enumerate(pending):
                    if _ready(entries, n, a, b):
                        _solve(entries, form, a, b)
                        del pending[idx]
                        break
                else:
                    raise AssertionError("no admissible condition left to solve")

    rows = tuple(tuple(entries[(i, j)] for j in range(1, n + 1)) for i in range(1, n + 1))
    if any(e is None for r in rows for e in r):
        raise AssertionError("unsolved cell entry")
    return CellModel(group, n, d, rows, tuple(sorted(free)), tuple(free), VariableOrder.identity(d))


def _ready(entries, n, a, b) -> bool:
    target = (b, a)
    for p in range(1, n + 1):
        left, right = (a, p), (b, n + 1 - p)
        if target in (left, right):
            continue
        lv, rv = entries[left], entries[right]
        if (lv is not None and lv.is_zero()) or (rv is not None and rv.is_zero()):
            continue
        if lv is None or rv is None:
            return False
    return True


def _solve(entries, form: FormSpec, a: int, b: int) -> None:
    n = form.n
    target = (b, a)
    coef = 0
    rest = None
    for p in range(1, n + 1):
        q = n + 1 - p
        g = form.gram[p - 1][q - 1]
        if not g:
            continue
        left, right = (a, p), (b, q)
        hits = (left == target) + (right == target)
        if hits:
            other = right if left == target else left
            if hits == 2 or entries[other] is None or not entries[other].is_constant():
                raise AssertionError(f"condition ({a},{b}) is not linear in x_{b}{a}")
            coef += g * entries[other].coefficient((0,) * entries[other].nvars)
            continue
        lv, rv = entries[left], entries[right]
        if (lv is not None and lv.is_zero()) or (rv is not None and rv.is_zero()):
            continue
        if lv is None or rv is None:
            raise AssertionError(f"condition ({a},{b}) solved before its inputs")
        term = (lv * rv).scale(g)
        rest = term if rest is None else rest + term
    if coef == 0:
        raise AssertionError(f"condition ({a},{b}) does not determine x_{b}{a}")
    nvars = entries[(a, n + 1 - a)].nvars
    entries[target] = SparsePolynomial.zero(nvars) if rest is None else rest.scale(Fraction(-1, coef))


def verify_flag_conditions(cell: CellModel, form: FormSpec) -> bool:
    """True iff every required pairing of rows vanishes identically."""
    if cell.group.family == "A":
        raise UnsupportedError("type A cells carry no form constraints")
    if form.n != cell.n:
        raise ValidationError(f"form on C^{form.n} for a cell of size {cell.n}")
    rows = row_vectors(cell)
    for a, b in flag_conditions(cell.group):
        if not form.pairing(rows[a - 1], rows[b - 1]).is_zero():
            return False
    return True


def row_vectors(cell: CellModel) -> list[tuple[SparsePolynomial, ...]]:
    """Rows ``v_1, ..., v_n``; ``V^k`` is spanned by the first ``k``."""
    return [tuple(r) for r in cell.entries]
