"""Exact rational polytopes.

Both representations are kept exact: vertices are tuples of ``Fraction``
and inequalities ``a.x <= b`` carry rational data.  Conversions run a
double description on homogenized cones with integer arithmetic, so no
floating point enters anywhere.

Faces are handled as bitmasks over the vertex list; facets of a face are
the inclusion-maximal proper intersections with the facets of the whole
polytope.  Volumes are computed by pulling from the first vertex of every
face and recursing into the opposite facets, projected onto coordinates in
which they stay full dimensional.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, reduce
from math import ceil, floor, gcd
from typing import Iterable, Sequence, Union

from .errors import DimensionError, UnboundedError, ValidationError

Point = tuple[Fraction, ...]

__all__ = [
    "VPolytope", "HPolytope", "LatticeSpec",
    "hull", "v_to_h", "h_to_v", "minkowski_sum", "minkowski_combination", "dilate",
    "lattice_points", "count_lattice_points", "ehrhart_count", "ehrhart_polynomial",
    "normalized_volume", "relative_normalized_volume", "project_to_affine_hull",
    "equals", "contains", "f_vector", "affine_dimension",
    "lattice_index", "integer_affine_chart", "to_chart", "lattice_normalized_volume",
    "to_json", "from_json", "dumps", "loads",
]


# --- small exact linear algebra -------------------------------------------------

def _frac_vec(xs) -> Point:
    out = []
    for x in xs:
        if isinstance(x, bool):
            raise ValidationError("booleans are not coordinates")
        out.append(Fraction(x.strip()) if isinstance(x, str) else Fraction(x))
    return tuple(out)


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _primitive(v: Sequence) -> tuple[int, ...]:
    """Positive multiple of ``v`` with coprime integer entries (zero stays zero)."""
    den = 1
    for x in v:
        d = Fraction(x).denominator
        den = den * d // gcd(den, d)
    ints = [int(Fraction(x) * den) for x in v]
    g = reduce(gcd, ints, 0)
    return tuple(x // g for x in ints) if g > 1 else tuple(ints)


def _rref(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    m = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / Fraction(m[r][c])
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def _kernel(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    red, pivots = _rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def _affine_pivots(points: Sequence[Point]) -> list[int]:
    """Lexicographically first coordinates on which the affine hull projects injectively."""
    p0 = points[0]
    diffs = [[a - b for a, b in zip(p, p0)] for p in points[1:]]
    if not diffs:
        return []
    return _rref(diffs, len(p0))[1]


# --- double description ----------------------------------------------------------

def _dd_cone(constraints: list[tuple[int, ...]], dim: int):
    """Generators of the cone ``{y : c.y >= 0}`` for integer constraint rows.

    Returns ``(lineality, rays)`` where each ray is ``(vector, mask)`` and bit
    ``i`` of ``mask`` is set iff constraint ``i`` is tight on the ray.
    """
    lin = [tuple(int(i == j) for j in range(dim)) for i in range(dim)]
    rays: list[tuple[tuple[int, ...], int]] = []
    for idx, c in enumerate(constraints):
        bit = 1 << idx
        piv = next((k for k, l in enumerate(lin) if _dot(c, l) != 0), None)
        if piv is not None:
            l = lin.pop(piv)
            a = _dot(c, l)
            if a < 0:
                l, a = tuple(-x for x in l), -a
            lin = [_primitive([a * x - _dot(c, l2) * y for x, y in zip(l2, l)]) for l2 in lin]
            rays = [(_primitive([a * x - _dot(c, r) * y for x, y in zip(r, l)]), z | bit) for r, z in rays]
            rays.append((l, bit - 1))
            continue
        vals = [_dot(c, r) for r, _ in rays]
        pos = [i for i, v in enumerate(vals) if v > 0]
        neg = [i for i, v in enumerate(vals) if v < 0]
        if not neg:
            rays = [(r, z | bit) if v == 0 else (r, z) for (r, z), v in zip(rays, vals)]
            continue
        need = dim - len(lin) - 2
        masks = [z for _, z in rays]
        new = []
        for i in pos:
            ri, zi = rays[i]
            for j in neg:
                rj, zj = rays[j]
                common = zi & zj
                if bin(common).count("1") < need:
                    continue
                # combinatorial adjacency: no third ray tight on all of ``common``
                if any(k != i and k != j and (mk & common) == common for k, mk in enumerate(masks)):
                    continue
                vi, vj = vals[i], vals[j]
                new.append((_primitive([vi * y - vj * x for x, y in zip(ri, rj)]), common | bit))
        rays = [(r, z | bit) for (r, z), v in zip(rays, vals) if v == 0] + \
               [rays[i] for i in pos] + new
    return lin, rays


# --- representations ----------------------------------------------------------

@dataclass(frozen=True)
class LatticeSpec:
    """Union of translates ``offset + Z^dim`` in which lattice points are counted.

    ``standard`` is ``Z^dim``; ``index2_type_B`` adds the coset of the all
    one-half vector, giving a superlattice of index 2.  ``coset`` is any
    explicit list of offsets (e.g. half-integral type-D patterns).
    """

    kind: str
    dim: int
    offsets: tuple[Point, ...] = ()

    def __post_init__(self):
        if self.kind not in ("standard", "index2_type_B", "coset"):
            raise ValidationError(f"unknown lattice kind {self.kind!r}")
        if not self.offsets:
            zero = (Fraction(0),) * self.dim
            offs = (zero,) if self.kind != "index2_type_B" else (zero, (Fraction(1, 2),) * self.dim)
            object.__setattr__(self, "offsets", offs)
        else:
            object.__setattr__(self, "offsets", tuple(_frac_vec(o) for o in self.offsets))
        if any(len(o) != self.dim for o in self.offsets):
            raise DimensionError("lattice offsets must have the lattice dimension")

    @classmethod
    def standard(cls, dim: int) -> "LatticeSpec":
        return cls("standard", dim)

    @classmethod
    def index2_type_B(cls, dim: int) -> "LatticeSpec":
        return cls("index2_type_B", dim)

    @classmethod
    def coset(cls, offset: Sequence) -> "LatticeSpec":
        return cls("coset", len(offset), (tuple(offset),))


@dataclass(frozen=True)
class HPolytope:
    """``{x : a.x <= b for (a, b) in ineqs, a.x = b for (a, b) in eqs}``."""

    dim: int
    ineqs: tuple[tuple[Point, Fraction], ...]
    eqs: tuple[tuple[Point, Fraction], ...] = ()

    def __post_init__(self):
        ineqs = tuple((_frac_vec(a), Fraction(b)) for a, b in self.ineqs)
        eqs = tuple((_frac_vec(a), Fraction(b)) for a, b in self.eqs)
        for a, _ in ineqs + eqs:
            if len(a) != self.dim:
                raise DimensionError(f"normal of length {len(a)} in dimension {self.dim}")
        object.__setattr__(self, "ineqs", ineqs)
        object.__setattr__(self, "eqs", eqs)

    def satisfied_by(self, x: Sequence) -> bool:
        return all(_dot(a, x) <= b for a, b in self.ineqs) and all(_dot(a, x) == b for a, b in self.eqs)

    def scaled(self, k) -> "HPolytope":
        """The dilate ``k * P``."""
        return HPolytope(self.dim, tuple((a, b * k) for a, b in self.ineqs),
                         tuple((a, b * k) for a, b in self.eqs))

    @cached_property
    def vpolytope(self) -> "VPolytope":
        return h_to_v(self)


@dataclass(frozen=True)
class _Facets:
    eqs: tuple[tuple[Point, Fraction], ...]
    ineqs: tuple[tuple[Point, Fraction], ...]
    masks: tuple[int, ...]
    affine_dim: int


@dataclass(frozen=True)
class VPolytope:
    """Convex hull of an irredundant, lexicographically sorted vertex list.

    Build instances with :func:`hull`; the constructor trusts its input.
    """

    dim: int
    vertices: tuple[Point, ...]
    _cache: dict = field(default_factory=dict, repr=False, compare=False, hash=False)

    @cached_property
    def facets(self) -> _Facets:
        return _facet_data(self.vertices, self.dim)

    @property
    def affine_dim(self) -> int:
        return self.facets.affine_dim

    def is_full_dimensional(self) -> bool:
        return self.affine_dim == self.dim


def _facet_data(points: Sequence[Point], dim: int) -> _Facets:
    cons = [_primitive((1,) + tuple(p)) for p in points]
    lin, rays = _dd_cone(cons, dim + 1)
    eq_rows = [[Fraction(x) for x in (tuple(-y for y in l[1:]) + (l[0],))] for l in lin]
    red, _ = _rref(eq_rows, dim)
    eqs = tuple((tuple(r[:dim]), r[dim]) for r in red)
    ineqs, masks = [], []
    for r, mask in rays:
        a, b = _reduce_mod_eqs(tuple(Fraction(-y) for y in r[1:]), Fraction(r[0]), eqs)
        if all(x == 0 for x in a):
            continue
        ineqs.append((a, b))
        masks.append(mask)
    order = sorted(range(len(ineqs)), key=lambda i: ineqs[i])
    return _Facets(eqs, tuple(ineqs[i] for i in order), tuple(masks[i] for i in order), dim - len(eqs))


def _reduce_mod_eqs(a: Point, b: Fraction, eqs) -> tuple[Point, Fraction]:
    a = list(a)
    for ea, eb in eqs:
        p = next(i for i, x in enumerate(ea) if x != 0)
        f = a[p]
        if f:
            a = [x - f * y for x, y in zip(a, ea)]
            b -= f * eb
    if not any(a):
        return tuple(Fraction(0) for _ in a), b
    # scale so that the normal is a primitive integer vector
    ia = _primitive(a)
    scale = next(Fraction(x) / y for x, y in zip(ia, a) if y != 0)
    return tuple(Fraction(x) for x in ia), b * scale


def hull(points: Iterable[Sequence], dim: int | None = None) -> VPolytope:
    """Irredundant vertex description of the convex hull of ``points``."""
    pts = sorted({_frac_vec(p) for p in points})
    if not pts:
        raise ValidationError("the hull of an empty point set is undefined")
    d = len(pts[0])
    if dim is not None and dim != d:
        raise DimensionError(f"points of length {d} in dimension {dim}")
    if any(len(p) != d for p in pts):
        raise DimensionError("points of different lengths")
    if len(pts) == 1:
        return VPolytope(d, tuple(pts))
    data = _facet_data(pts, d)
    masks = _point_masks(len(pts), data.masks)
    keep = []
    for i, zi in enumerate(masks):
        if not any(j != i and (zj & zi) == zi for j, zj in enumerate(masks)):
            keep.append(pts[i])
    return VPolytope(d, tuple(keep))


def _point_masks(npoints: int, facet_masks: Sequence[int]) -> list[int]:
    """Transpose facet->points masks into point->facets masks."""
    out = [0] * npoints
    for f, m in enumerate(facet_masks):
        i = 0
        while m:
            if m & 1:
                out[i] |= 1 << f
            m >>= 1
            i += 1
    return out


def v_to_h(p: VPolytope) -> HPolytope:
    """Canonical H-representation: reduced equalities and primitive facet normals."""
    f = p.facets
    return HPolytope(p.dim, f.ineqs, f.eqs)


def h_to_v(p: HPolytope) -> VPolytope:
    """Vertices of a bounded H-polytope."""
    d = p.dim
    x0 = [Fraction(0)] * d
    basis: list[list[Fraction]]
    if p.eqs:
        red, pivots = _rref([list(a) + [b] for a, b in p.eqs], d + 1)
        if d in pivots:
            raise ValidationError("inconsistent equalities: the polytope is empty")
        for row, c in zip(red, pivots):
            x0[c] = row[d]
        basis = _kernel([row[:d] for row in red], d)
    else:
        basis = [[Fraction(int(i == j)) for j in range(d)] for i in range(d)]
    m = len(basis)
    cons = [_primitive([1] + [0] * m)]
    for a, b in p.ineqs:
        an = [_dot(a, col) for col in basis]
        cons.append(_primitive([b - _dot(a, x0)] + [-x for x in an]))
    lin, rays = _dd_cone(cons, m + 1)
    if lin:
        raise UnboundedError("the inequality system contains a line")
    verts = []
    for r, _ in rays:
        if r[0] == 0:
            raise UnboundedError("the inequality system has an unbounded direction")
        t = [Fraction(x, r[0]) for x in r[1:]]
        verts.append(tuple(x + sum(ti * col[i] for ti, col in zip(t, basis)) for i, x in enumerate(x0)))
    if not verts:
        raise ValidationError("the inequality system is infeasible")
    return hull(verts, d)


def _as_v(p) -> VPolytope:
    if isinstance(p, VPolytope):
        return p
    if isinstance(p, HPolytope):
        return p.vpolytope
    raise TypeError(f"expected a polytope, got {type(p).__name__}")


def _as_h(p) -> HPolytope:
    if isinstance(p, HPolytope):
        return p
    if isinstance(p, VPolytope):
        return v_to_h(p)
    raise TypeError(f"expected a polytope, got {type(p).__name__}")


# --- constructions -------------------------------------------------------------

def minkowski_sum(a, b) -> VPolytope:
    a, b = _as_v(a), _as_v(b)
    if a.dim != b.dim:
        raise DimensionError(f"Minkowski sum of dimensions {a.dim} and {b.dim}")
    return hull((tuple(x + y for x, y in zip(p, q)) for p in a.vertices for q in b.vertices), a.dim)


def dilate(p, k) -> VPolytope:
    """``k * P`` for a positive scalar ``k``."""
    k = Fraction(k)
    if k <= 0:
        raise ValidationError("dilation factor must be positive")
    p = _as_v(p)
    return VPolytope(p.dim, tuple(tuple(k * x for x in v) for v in p.vertices))


def minkowski_combination(polys: Sequence, mults: Sequence[int]) -> VPolytope:
    """``sum m_i P_i``, accumulated pairwise to keep intermediate hulls small."""
    if len(polys) != len(mults) or not polys:
        raise ValidationError("need aligned, nonempty polytope and multiplicity lists")
    dim = _as_v(polys[0]).dim
    acc = VPolytope(dim, ((Fraction(0),) * dim,))
    for p, m in zip(polys, mults):
        if m < 0:
            raise ValidationError("multiplicities must be non-negative")
        if m:
            acc = minkowski_sum(acc, dilate(p, m))
    return acc


# --- lattice points ------------------------------------------------------------

def _bounding_box(p: HPolytope) -> list[tuple[Fraction, Fraction]]:
    verts = _as_v(p).vertices
    return [(min(v[i] for v in verts), max(v[i] for v in verts)) for i in range(p.dim)]


def _scan(p: HPolytope, lattice: LatticeSpec | None, collect: bool):
    if lattice is None:
        lattice = LatticeSpec.standard(p.dim)
    if lattice.dim != p.dim:
        raise DimensionError(f"lattice of dimension {lattice.dim} for a polytope in {p.dim}")
    box = _bounding_box(p)
    rows = list(p.ineqs) + list(p.eqs) + [(tuple(-x for x in a), -b) for a, b in p.eqs]
    d = p.dim
    points: list[Point] = []
    total = 0
    for off in lattice.offsets:
        lo = [ceil(box[i][0] - off[i]) for i in range(d)]
        hi = [floor(box[i][1] - off[i]) for i in range(d)]
        if any(l > h for l, h in zip(lo, hi)):
            continue
        cons = [(a, b - _dot(a, off)) for a, b in rows]
        # suffix minima of a_j z_j over the box, j >= i
        tail = []
        for a, _ in cons:
            acc = [Fraction(0)] * (d + 1)
            for i in range(d - 1, -1, -1):
                acc[i] = acc[i + 1] + min(a[i] * lo[i], a[i] * hi[i])
            tail.append(acc)
        z = [0] * d

        def rng(i, partial):
            l, h = lo[i], hi[i]
            for (a, b), t, s in zip(cons, tail, partial):
                room = b - s - t[i + 1]
                if a[i] > 0:
                    h = min(h, floor(room / a[i]))
                elif a[i] < 0:
                    l = max(l, ceil(room / a[i]))
                elif room < 0:
                    return 1, 0
                if l > h:
                    return 1, 0
            return l, h

        def rec(i, partial):
            nonlocal total
            l, h = rng(i, partial)
            if l > h:
                return
            if i == d - 1 and not collect:
                total += h - l + 1
                return
            for v in range(l, h + 1):
                z[i] = v
                nxt = [s + a[i] * v for (a, _), s in zip(cons, partial)]
                if i == d - 1:
                    points.append(tuple(Fraction(x) + o for x, o in zip(z, off)))
                    total += 1
                else:
                    rec(i + 1, nxt)

        if d == 0:
            if all(b >= 0 for _, b in cons):
                points.append(())
                total += 1
            continue
        rec(0, [Fraction(0)] * len(cons))
    return sorted(points) if collect else total


def lattice_points(p, lattice: LatticeSpec | None = None) -> list[Point]:
    """All points of ``lattice`` in ``p``, sorted lexicographically."""
    return _scan(_as_h(p), lattice, True)


def count_lattice_points(p, lattice: LatticeSpec | None = None) -> int:
    return _scan(_as_h(p), lattice, False)


def ehrhart_count(p, k: int, lattice: LatticeSpec | None = None) -> int:
    """Number of lattice points in the dilate ``k * p``."""
    if k < 0:
        raise ValidationError("dilation factor must be non-negative")
    return count_lattice_points(_as_h(p).scaled(k), lattice)


def ehrhart_polynomial(p, lattice: LatticeSpec | None = None) -> list[Fraction]:
    """Coefficients (constant first) of the interpolant of ``k -> ehrhart_count``.

    Exact for lattice polytopes; the interpolation uses ``k = 0..dim``.
    """
    h = _as_h(p)
    d = h.dim
    ys = [Fraction(ehrhart_count(h, k, lattice)) for k in range(d + 1)]
    return _interpolate(list(range(d + 1)), ys)


def _interpolate(xs: Sequence[int], ys: Sequence[Fraction]) -> list[Fraction]:
    n = len(xs)
    coeffs = [Fraction(0)] * n
    for i in range(n):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in range(n):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for t in range(len(basis) - 1):
                basis[t] -= xs[j] * basis[t + 1]
            denom *= xs[i] - xs[j]
        for t in range(n):
            coeffs[t] += ys[i] * basis[t] / denom
    return coeffs


# --- faces and volume ----------------------------------------------------------

def _face_facets(p: VPolytope, mask: int) -> list[int]:
    cache = p._cache.setdefault("face_facets", {})
    if mask not in cache:
        cands = {mask & f for f in p.facets.masks}
        cands.discard(mask)
        cands.discard(0)
        cache[mask] = [c for c in cands if not any(c != o and (c & o) == c for o in cands)]
    return cache[mask]


def _bits(mask: int) -> list[int]:
    out, i = [], 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def _nv(p: VPolytope, mask: int, coords: tuple[int, ...]) -> Fraction:
    cache = p._cache.setdefault("nv", {})
    key = (mask, coords)
    if key in cache:
        return cache[key]
    V = p.vertices
    idx = _bits(mask)
    m = len(coords)
    if m == 0:
        out = Fraction(1)
    elif m == 1:
        vals = [V[i][coords[0]] for i in idx]
        out = max(vals) - min(vals)
    else:
        v0 = [V[idx[0]][c] for c in coords]
        out = Fraction(0)
        for g in _face_facets(p, mask):
            if g >> idx[0] & 1:
                continue
            gidx = _bits(g)
            pts = [[V[i][c] for c in coords] for i in gidx]
            diffs = [[x - y for x, y in zip(q, pts[0])] for q in pts[1:]]
            ker = _kernel(diffs, m)
            if len(ker) != 1:
                raise AssertionError("facet of a face is not a hyperplane section")
            a = ker[0]
            k = max(i for i, x in enumerate(a) if x != 0)
            h = abs((_dot(a, pts[0]) - _dot(a, v0)) / a[k])
            out += h * _nv(p, g, coords[:k] + coords[k + 1:])
    cache[key] = out
    return out


def affine_dimension(p) -> int:
    return _as_v(p).affine_dim


def normalized_volume(p) -> Fraction:
    """``dim! * volume`` in the ambient space; zero unless full dimensional."""
    v = _as_v(p)
    if not v.is_full_dimensional():
        return Fraction(0)
    return _nv(v, (1 << len(v.vertices)) - 1, tuple(range(v.dim)))


def relative_normalized_volume(p) -> Fraction:
    """Normalized volume of the projection onto :func:`project_to_affine_hull` coordinates."""
    v = _as_v(p)
    coords = tuple(_affine_pivots(v.vertices))
    return _nv(v, (1 << len(v.vertices)) - 1, coords)


def project_to_affine_hull(p) -> tuple[VPolytope, tuple[int, ...]]:
    """Coordinate projection that is injective on the affine hull.

    The projection is unimodular on lattice points exactly when the
    equalities, solved for the dropped coordinates, have integer coefficients.
    """
    v = _as_v(p)
    coords = tuple(_affine_pivots(v.vertices))
    if not coords:
        return VPolytope(0, ((),)), coords
    return hull([tuple(x[c] for c in coords) for x in v.vertices], len(coords)), coords


def f_vector(p) -> tuple[int, ...]:
    """Face counts ``(f_0, ..., f_{m-1})`` for a polytope of affine dimension ``m``."""
    v = _as_v(p)
    m = v.affine_dim
    if m == 0:
        return ()
    levels = [set(v.facets.masks)]
    for _ in range(m - 1):
        nxt = set()
        for f in levels[-1]:
            nxt.update(_face_facets(v, f))
        levels.append(nxt)
    counts = tuple(len(level) for level in reversed(levels))
    if counts[0] != len(v.vertices):
        raise AssertionError("face lattice does not end in the vertex set")
    return counts


# --- integer lattices ----------------------------------------------------------

def _column_hnf(rows: list[list[int]], ncols: int) -> tuple[list[list[int]], list[list[int]], int]:
    """Integer column echelon form ``M U = [H | 0]`` with ``U`` unimodular.

    Returns ``(M U, U, rank)``; columns ``rank..`` of ``U`` span the integer
    kernel of ``M``.
    """
    m = [list(r) for r in rows]
    u = [[int(i == j) for j in range(ncols)] for i in range(ncols)]

    def colop(j, k, a, b, c, d):
        # (col_j, col_k) <- (a col_j + b col_k, c col_j + d col_k)
        for mat in (m, u):
            for row in mat:
                x, y = row[j], row[k]
                row[j], row[k] = a * x + b * y, c * x + d * y

    r = 0
    for i in range(len(m)):
        if r == ncols:
            break
        for k in range(r + 1, ncols):
            x, y = m[i][r], m[i][k]
            if y == 0:
                continue
            g, s, t = _ext_gcd(x, y)
            colop(r, k, s, t, -y // g, x // g)
        if m[i][r] != 0:
            if m[i][r] < 0:
                for mat in (m, u):
                    for row in mat:
                        row[r] = -row[r]
            r += 1
    return m, u, r


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    if b == 0:
        return (abs(a), (1 if a >= 0 else -1), 0)
    g, s, t = _ext_gcd(b, a % b)
    return g, t, s - (a // b) * t


def lattice_index(vectors: Sequence[Sequence[int]], dim: int) -> int:
    """Index of the Z-span of ``vectors`` in ``Z^dim``; 0 if it has lower rank."""
    if dim == 0:
        return 1
    cols = [list(map(int, v)) for v in vectors]
    if not cols:
        return 0
    m = [[c[i] for c in cols] for i in range(dim)]
    h, _, rank = _column_hnf(m, len(cols))
    if rank < dim:
        return 0
    out = 1
    for i in range(dim):
        out *= abs(h[i][i])
    return out


def integer_affine_chart(p) -> tuple[tuple[int, ...], list[tuple[int, ...]]]:
    """``(x0, K)`` with ``x0 + K Z^q`` equal to the lattice points of the affine hull.

    Raises :class:`ValidationError` if the affine hull has no lattice point.
    """
    v = _as_v(p)
    eqs = v.facets.eqs
    d = v.dim
    if not eqs:
        return (0,) * d, [tuple(int(i == j) for i in range(d)) for j in range(d)]
    rows = [_primitive(list(a) + [b]) for a, b in eqs]
    m, u, rank = _column_hnf([list(r[:d]) for r in rows], d)
    rhs = [r[d] for r in rows]
    # solve H y = rhs over the integers by forward substitution on pivots
    y = [0] * d
    piv_rows = []
    col = 0
    for i, row in enumerate(m):
        if col < rank and row[col] != 0:
            piv_rows.append((i, col))
            col += 1
    for i, c in piv_rows:
        acc = rhs[i] - sum(m[i][k] * y[k] for k in range(c))
        if acc % m[i][c]:
            raise ValidationError("the affine hull contains no lattice point")
        y[c] = acc // m[i][c]
    for i, row in enumerate(m):
        if sum(row[k] * y[k] for k in range(d)) != rhs[i]:
            raise ValidationError("the affine hull contains no lattice point")
    x0 = tuple(sum(u[i][k] * y[k] for k in range(d)) for i in range(d))
    basis = [tuple(u[i][k] for i in range(d)) for k in range(rank, d)]
    return x0, basis


def to_chart(x: Sequence, x0: Sequence[int], basis: Sequence[Sequence[int]]) -> Point:
    """Coordinates ``t`` with ``x = x0 + sum t_k basis_k``."""
    q = len(basis)
    if q == 0:
        return ()
    d = len(x0)
    aug = [[Fraction(basis[k][i]) for k in range(q)] + [Fraction(x[i]) - x0[i]] for i in range(d)]
    red, piv = _rref(aug, q + 1)
    if q in piv:
        raise ValidationError("point is not in the affine hull")
    return tuple(row[q] for row in red)


def lattice_normalized_volume(p) -> Fraction:
    """``q! * volume`` inside the affine hull, measured against its lattice points."""
    v = _as_v(p)
    x0, basis = integer_affine_chart(v)
    if not basis:
        return Fraction(1)
    pts = [to_chart(x, x0, basis) for x in v.vertices]
    return normalized_volume(hull(pts, len(basis)))


# --- predicates ----------------------------------------------------------------

def contains(a, b) -> bool:
    """``b`` is a subset of ``a``."""
    ha, vb = _as_h(a), _as_v(b)
    if ha.dim != vb.dim:
        raise DimensionError(f"containment between dimensions {ha.dim} and {vb.dim}")
    return all(ha.satisfied_by(x) for x in vb.vertices)


def equals(a, b) -> bool:
    va, vb = _as_v(a), _as_v(b)
    if va.dim != vb.dim:
        raise DimensionError(f"comparison between dimensions {va.dim} and {vb.dim}")
    return va.vertices == vb.vertices


# --- JSON ----------------------------------------------------------------------

def _q(x: Fraction) -> str:
    return str(Fraction(x))


def to_json(p) -> dict:
    if isinstance(p, VPolytope):
        return {"dim": p.dim, "vertices": [[_q(x) for x in v] for v in p.vertices]}
    if isinstance(p, HPolytope):
        return {
            "dim": p.dim,
            "ineqs": [{"a": [_q(x) for x in a], "b": _q(b)} for a, b in p.ineqs],
            "eqs": [{"a": [_q(x) for x in a], "b": _q(b)} for a, b in p.eqs],
        }
    raise TypeError(f"cannot serialize {type(p).__name__}")


def from_json(obj: dict) -> Union[VPolytope, HPolytope]:
    if "dim" not in obj:
        raise ValidationError("polytope JSON needs a 'dim' field")
    d = int(obj["dim"])
    if "vertices" in obj:
        return hull([_frac_vec(v) for v in obj["vertices"]], d)
    if "ineqs" in obj:
        rows = lambda key: tuple((_frac_vec(r["a"]), Fraction(str(r["b"]))) for r in obj.get(key, []))
        return HPolytope(d, rows("ineqs"), rows("eqs"))
    raise ValidationError("polytope JSON needs 'vertices' or 'ineqs'")


def dumps(p, **kw) -> str:
    return json.dumps(to_json(p), **kw)


def loads(text: str):
    return from_json(json.loads(text))
