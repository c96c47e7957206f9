"""Reference polytopes: Gelfand-Zetlin patterns and FFLV Dyck-path polytopes.

Tables are drawn on a grid: row 0 holds the weight (plus a literal 0 at
the right end in types B/C), boxed entries sit in rows 1, 2, ... and every
entry touches its upper-left ``(R-1, c-1)`` and upper-right ``(R-1, c+1)``
neighbours.  A boxed entry is bounded above by the former and below by
the latter.

GZ coordinates follow the table row by row, left to right.  FFLV
coordinates follow the cell ordering ``y_1, ..., y_d`` instead, through
the identification of matrix position ``(i, j)`` with table cell
``(n+1-i-j, n-1+i-j)``; with this labeling the valuation images of the
fundamental weights land on FFLV polytopes of the same weights.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .errors import UnsupportedError, ValidationError
from .polytope import HPolytope, LatticeSpec
from .rootdata import DominantWeight, GroupType, fundamental_weight, omega_coordinates
from .schubertcell import independent_positions, y_ordering

Cell = tuple[int, int]


@dataclass(frozen=True)
class TableCell:
    row: int
    col: int
    label: str


@dataclass(frozen=True)
class GZTable:
    """Boxed cells of a GZ table plus the fixed entries they are compared with.

    ``top`` maps grid positions of row 0 (and of literal zeros) to the index
    ``j`` of ``lambda_j``, or to 0 for a literal zero entry.
    """

    group: GroupType
    cells: tuple[TableCell, ...]
    top: tuple[tuple[Cell, int], ...]

    def index(self) -> dict[Cell, int]:
        return {(c.row, c.col): t for t, c in enumerate(self.cells)}

    def fixed(self) -> dict[Cell, int]:
        return dict(self.top)

    def upper_left(self, cell: Cell) -> Optional[Cell]:
        return self._lookup((cell[0] - 1, cell[1] - 1))

    def upper_right(self, cell: Cell) -> Optional[Cell]:
        return self._lookup((cell[0] - 1, cell[1] + 1))

    def _lookup(self, pos: Cell) -> Optional[Cell]:
        if pos in self.index() or pos in self.fixed():
            return pos
        return None

    def rotated_profile(self) -> tuple[int, ...]:
        """Sizes of the anti-diagonals ``R + c = const``, largest sum first.

        These are the columns of the table after a rotation by 3/4 of a
        half turn clockwise.
        """
        sums: dict[int, int] = {}
        for c in self.cells:
            sums[c.row + c.col] = sums.get(c.row + c.col, 0) + 1
        return tuple(sums[s] for s in sorted(sums, reverse=True))


@lru_cache(maxsize=None)
def gz_table(group: GroupType) -> GZTable:
    fam = group.family
    cells: list[TableCell] = []
    top: list[tuple[Cell, int]] = []
    if fam == "A":
        n = group.n
        top = [((0, 2 * j - 2), j) for j in range(1, n + 1)]
        for a in range(1, n):
            for b in range(1, n - a + 1):
                cells.append(TableCell(a, 2 * b + a - 2, f"u^{a}_{b}"))
    elif fam in "BC":
        r = group.rank
        top = [((0, 2 * j - 2), j) for j in range(1, r + 1)]
        top += [((2 * i, 2 * r), 0) for i in range(0, r)]
        for i in range(1, r + 1):
            for j in range(1, r - i + 2):
                cells.append(TableCell(2 * i - 1, 2 * j + 2 * i - 3, f"x^{i}_{j}"))
            for j in range(1, r - i + 1):
                cells.append(TableCell(2 * i, 2 * j + 2 * i - 2, f"y^{i}_{j}"))
    else:
        n = group.rank
        top = [((0, 2 * j - 2), j) for j in range(1, n + 1)]
        for i in range(1, n):
            for j in range(1, n - i + 1):
                cells.append(TableCell(2 * i - 1, 2 * j + 2 * i - 3, f"y^{i}_{j}"))
            for j in range(1, n - i + 1):
                cells.append(TableCell(2 * i, 2 * j + 2 * i - 2, f"x^{i + 1}_{j}"))
    if len(cells) != group.flag_dimension:
        raise AssertionError(f"{group}: table has {len(cells)} cells")
    return GZTable(group, tuple(cells), tuple(top))


def _weight_value(w: DominantWeight, j: int) -> Fraction:
    return Fraction(0) if j == 0 or j > len(w.lam) else Fraction(w.lam[j - 1])


def gz_polytope(w: DominantWeight) -> HPolytope:
    """Interlacing inequalities of the GZ table, plus the type-D extras."""
    table = gz_table(w.group)
    idx, fixed = table.index(), table.fixed()
    d = len(table.cells)
    ineqs = []

    def row(coeffs: dict[int, int], bound) -> None:
        a = [0] * d
        for t, c in coeffs.items():
            a[t] += c
        ineqs.append((tuple(a), Fraction(bound)))

    for t, c in enumerate(table.cells):
        pos = (c.row, c.col)
        ul, ur = table.upper_left(pos), table.upper_right(pos)
        if ul is None:
            raise AssertionError(f"cell {c.label} lacks an upper-left neighbour")
        if ul in idx:
            row({t: 1, idx[ul]: -1}, 0)
        else:
            row({t: 1}, _weight_value(w, fixed[ul]))
        if ur is None:
            continue
        if ur in idx:
            row({t: -1, idx[ur]: 1}, 0)
        else:
            row({t: -1}, -_weight_value(w, fixed[ur]))
    if w.group.family == "D":
        ineqs.extend(_type_d_extras(w, table))
    return HPolytope(d, tuple(ineqs))


def _type_d_extras(w: DominantWeight, table: GZTable):
    n = w.group.rank
    label = {c.label: t for t, c in enumerate(table.cells)}
    d = len(table.cells)

    def term(i, j):
        # x^1 is the weight row
        if i == 1:
            return None, Fraction(w.lam[j - 1])
        return label[f"x^{i}_{j}"], Fraction(0)

    out = []
    for i in range(1, n):
        forms = [((i, n - i), (i, n + 1 - i), (i + 1, n - i))]
        if i <= n - 2:
            forms.append(((i + 1, n - i - 1), (i, n + 1 - i), (i + 1, n - i)))
        for form in forms:
            # -(sum of x terms) + y <= constants
            a = [0] * d
            b = Fraction(0)
            for ij in form:
                t, const = term(*ij)
                if t is None:
                    b += const
                else:
                    a[t] -= 1
            a[label[f"y^{i}_{n - i}"]] += 1
            out.append((tuple(a), b))
    return out


def gz_lattice(w: DominantWeight, type_b: str = "half_edges") -> LatticeSpec:
    """Lattice in which GZ points of ``w`` are counted.

    Types A, C: ``Z^d``.  Type D: the coset ``lambda_1 + Z^d``.  Type B:
    by default entries are congruent to ``lambda_1`` mod 1 except the cells
    ``x^i_{r+1-i}`` next to the zero column, which range over ``Z/2``; this
    has index ``2^r`` over ``lambda_1 + Z^d``.  ``"standard"`` and
    ``"index2"`` (adjoin the all one-half vector) are kept for comparison;
    neither counts type-B representations correctly.
    """
    d = w.group.flag_dimension
    fam = w.group.family
    shift = Fraction(w.lam[0]) % 1 if w.lam else Fraction(0)
    if fam == "D":
        return LatticeSpec.coset([shift] * d)
    if fam != "B":
        return LatticeSpec.standard(d)
    if type_b == "standard":
        return LatticeSpec.standard(d)
    if type_b == "index2":
        return LatticeSpec.index2_type_B(d)
    if type_b != "half_edges":
        raise ValidationError(f"unknown type-B lattice option {type_b!r}")
    r = w.group.rank
    edge = [t for t, c in enumerate(gz_table(w.group).cells) if c.col == 2 * r - 1 and c.label[0] == "x"]
    offsets = []
    for bits in range(1 << len(edge)):
        o = [shift] * d
        for k, t in enumerate(edge):
            if bits >> k & 1:
                o[t] = (shift + Fraction(1, 2)) % 1
        offsets.append(tuple(o))
    return LatticeSpec("coset", d, tuple(offsets))


# --- FFLV --------------------------------------------------------------------

@dataclass(frozen=True)
class DyckPath:
    """Table cells visited by a path from ``lambda_start`` to ``lambda_end``.

    In type C, ``end = rank + 1`` stands for the zero column.
    """

    start: int
    end: int
    cells: tuple[Cell, ...]


def _fflv_cells(group: GroupType) -> list[Cell]:
    """Table cells in the order of the cell coordinates ``y_1, ..., y_d``."""
    if group.family not in "AC":
        raise UnsupportedError(f"no FFLV polytope is defined for type {group.family}")
    n = group.n
    return [(n + 1 - i - j, n - 1 + i - j) for i, j in y_ordering(independent_positions(group))]


def dyck_paths(group: GroupType, i: int, j: int) -> list[DyckPath]:
    """All Dyck paths from ``lambda_i`` to ``lambda_j``.

    A path starts at the cell below-right of ``lambda_i`` and moves one
    column right per step, either one row down or one row up, staying in
    the table; it ends at the cell below-left of ``lambda_j``.  In type C,
    ``j = rank + 1`` denotes a 0 of the rightmost column: such paths may
    stop at any cell of the last column.
    """
    cells = set(_fflv_cells(group))
    if group.family == "A":
        hi = group.n
    else:
        hi = group.rank + 1
    if not 1 <= i < j <= hi:
        raise ValidationError(f"need 1 <= i < j <= {hi}, got i={i}, j={j}")
    start = (1, 2 * i - 1)
    if group.family == "C" and j == hi:
        last_col = 2 * group.rank - 1
        done = lambda cell: cell[1] == last_col
    else:
        target = (1, 2 * j - 3)
        last_col = target[1]
        done = lambda cell: cell == target
    out: list[DyckPath] = []

    def walk(path: list[Cell]) -> None:
        cur = path[-1]
        if done(cur):
            out.append(DyckPath(i, j, tuple(path)))
        if cur[1] >= last_col:
            return
        for step in ((cur[0] + 1, cur[1] + 1), (cur[0] - 1, cur[1] + 1)):
            if step[0] >= 1 and step in cells:
                walk(path + [step])

    if start in cells:
        walk([start])
    return out


def fflv_polytope(w: DominantWeight) -> HPolytope:
    """``u >= 0`` and ``sum over D of u <= lambda_i - lambda_j`` for every path ``D``."""
    group = w.group
    order = _fflv_cells(group)
    pos = {c: t for t, c in enumerate(order)}
    d = len(order)
    hi = group.n if group.family == "A" else group.rank + 1
    lam = [Fraction(x) for x in w.lam] + [Fraction(0)]
    rows: dict[tuple[int, ...], Fraction] = {}
    for t in range(d):
        a = [0] * d
        a[t] = -1
        rows[tuple(a)] = Fraction(0)
    for i in range(1, hi):
        for j in range(i + 1, hi + 1):
            bound = lam[i - 1] - lam[j - 1]
            for path in dyck_paths(group, i, j):
                a = [0] * d
                for c in path.cells:
                    a[pos[c]] = 1
                key = tuple(a)
                rows[key] = min(rows.get(key, bound), bound)
    return HPolytope(d, tuple(sorted(rows.items())))


def fflv_minkowski_decomposition(w: DominantWeight) -> list[tuple[int, int]]:
    """``[(k, m_k)]`` with ``m_k > 0`` and ``lambda = sum m_k omega_k``."""
    if w.group.family not in "AC":
        raise UnsupportedError(f"no FFLV polytope is defined for type {w.group.family}")
    return [(k, m) for k, m in enumerate(omega_coordinates(w), start=1) if m]


def fundamental_fflv(group: GroupType, k: int) -> HPolytope:
    return fflv_polytope(fundamental_weight(group, k))
