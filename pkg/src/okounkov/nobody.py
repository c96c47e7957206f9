"""Newton-Okounkov bodies of flag varieties and their certification.

For a fundamental weight the body is the hull of the valuation image of
its section space.  For ``lambda = sum m_k omega_k`` the Minkowski sum of
the fundamental bodies is contained in the body.  It *is* the body when
three exact checks pass:

* its affine dimension ``q`` equals the degree of ``k -> dim V_{k lambda}``;
* the valuation points used span the lattice of its affine hull;
* its lattice-normalized volume equals ``q!`` times the leading
  coefficient of that polynomial.

The last number is the normalized volume of the true body, so a contained
body of the same dimension and volume coincides with it.  For regular
weights ``q = d`` and the test is the plain volume-equals-degree check.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial
from typing import Optional, Sequence, Union

from .errors import DimensionError, ValidationError
from .exactalg import SparsePolynomial
from .patterns import fflv_polytope, gz_lattice, gz_polytope
from .polytope import (HPolytope, VPolytope, affine_dimension, contains, count_lattice_points,
                       ehrhart_count, equals, f_vector, hull, integer_affine_chart, lattice_index,
                       lattice_normalized_volume, minkowski_combination, normalized_volume, to_chart,
                       v_to_h)
from .rootdata import (DominantWeight, GroupType, degree_oracle, fundamental_weight,
                       hilbert_polynomial, is_regular)
from .schubertcell import build_cell
from .valuation import fundamental_space, span_valuation_image

log = logging.getLogger(__name__)

Polytope = Union[VPolytope, HPolytope]


@dataclass(frozen=True)
class NOBodyResult:
    """Outcome of :func:`certify`.

    ``certified`` means the body is exact.  Otherwise ``body`` is only
    known to lie inside the Newton-Okounkov body.
    """

    weight: DominantWeight
    body: VPolytope
    certified: bool
    normalized_volume: Fraction
    degree: int
    matches_fflv: Optional[bool] = None
    warnings: tuple[str, ...] = ()
    image_dimension: int = 0
    image_degree: int = 0
    relative_volume: Fraction = Fraction(0)
    lattice_index: int = 0


@dataclass(frozen=True)
class CertificationReport:
    result: NOBodyResult
    reference: Optional[HPolytope]
    verdict: str
    diagnostics: dict = field(default_factory=dict)


@lru_cache(maxsize=None)
def fundamental_image(group: GroupType, k: int) -> frozenset:
    """Valuations of all nonzero sections of ``omega_k``."""
    cell = build_cell(group)
    space = fundamental_space(cell, k)
    return frozenset(span_valuation_image(space.generators, cell.order))


def fundamental_body(group: GroupType, k: int) -> VPolytope:
    """Hull of the valuation image of the sections of ``omega_k``."""
    return hull(fundamental_image(group, k), group.flag_dimension)


def no_body_lower_bound(w: DominantWeight) -> VPolytope:
    """``sum m_k * fundamental_body(omega_k)``; contained in the body of ``w``."""
    group = w.group
    m = w.multiplicities()
    if not any(m):
        return VPolytope(group.flag_dimension, ((Fraction(0),) * group.flag_dimension,))
    pairs = [(fundamental_body(group, k), mk) for k, mk in enumerate(m, start=1) if mk]
    return minkowski_combination([b for b, _ in pairs], [mk for _, mk in pairs])


def image_degree(w: DominantWeight) -> tuple[int, int]:
    """``(q, q! * c_q)`` for the Hilbert polynomial ``sum c_i k^i`` of degree ``q``."""
    coeffs = hilbert_polynomial(w)
    q = max(i for i, c in enumerate(coeffs) if c != 0)
    deg = coeffs[q] * factorial(q)
    if deg.denominator != 1:
        raise AssertionError(f"non-integral leading term for {w}")
    return q, int(deg)


def _generation_index(w: DominantWeight, body: VPolytope) -> int:
    x0, basis = integer_affine_chart(body)
    origin = to_chart((0,) * body.dim, x0, basis)
    gens = []
    for k, mk in enumerate(w.multiplicities(), start=1):
        if mk:
            for p in fundamental_image(w.group, k):
                t = to_chart(p, x0, basis)
                gens.append(tuple(int(a - b) for a, b in zip(t, origin)))
    return lattice_index(gens, len(basis))


def certify(w: DominantWeight) -> NOBodyResult:
    """Decide whether the Minkowski lower bound is the whole body.

    ``normalized_volume`` and ``degree`` are the ambient quantities (both 0
    for non-regular weights); the relative ones drive the decision.
    """
    body = no_body_lower_bound(w)
    vol = normalized_volume(body)
    deg = degree_oracle(w)
    q, qdeg = image_degree(w)
    rel = lattice_normalized_volume(body)
    index = _generation_index(w, body)
    warnings: list[str] = []
    if not is_regular(w) and not w.is_zero():
        warnings.append(f"{w} is not regular: certified through the {q}-dimensional image")
    if affine_dimension(body) != q:
        warnings.append(f"body has dimension {affine_dimension(body)}, image has dimension {q}")
        certified = False
    elif index != 1:
        warnings.append(f"valuation points span a sublattice of index {index}")
        certified = False
    else:
        if rel > qdeg:
            raise AssertionError(f"{w}: lower bound volume {rel} exceeds degree {qdeg}")
        certified = rel == qdeg
    for msg in warnings:
        log.warning(msg)
    matches = None
    if w.group.family in "AC":
        matches = equals(body, fflv_polytope(w))
    return NOBodyResult(w, body, certified, vol, deg, matches, tuple(warnings), q, qdeg, rel, index)


def reference_polytope(w: DominantWeight, kind: str) -> HPolytope:
    if kind == "fflv":
        return fflv_polytope(w)
    if kind == "gz":
        return gz_polytope(w)
    raise ValidationError(f"unknown reference kind {kind!r}")


def compare_with_reference(w: DominantWeight, reference: Optional[Polytope] = None,
                           result: Optional[NOBodyResult] = None, ehrhart_max: int = 3) -> CertificationReport:
    """Certify ``w`` and compare its body with ``reference``.

    The verdict is ``equal``, ``proper-inclusion`` (either direction, see
    ``diagnostics["inclusion"]``) or ``incomparable``.  Without a reference
    the verdict is ``certified`` or ``lower-bound``.
    """
    res = result if result is not None else certify(w)
    diag: dict = {
        "body_f_vector": list(f_vector(res.body)),
        "body_facets": _facet_strings(res.body),
        "body_ehrhart": [ehrhart_count(res.body, k) for k in range(1, ehrhart_max + 1)],
    }
    if reference is None:
        return CertificationReport(res, None, "certified" if res.certified else "lower-bound", diag)
    ref_h = reference if isinstance(reference, HPolytope) else v_to_h(reference)
    if ref_h.dim != res.body.dim:
        raise DimensionError(f"reference in dimension {ref_h.dim}, body in {res.body.dim}")
    ref_v = ref_h.vpolytope
    diag["reference_f_vector"] = list(f_vector(ref_v))
    diag["reference_facets"] = _facet_strings(ref_v)
    diag["reference_ehrhart"] = [ehrhart_count(ref_h, k) for k in range(1, ehrhart_max + 1)]
    if equals(res.body, ref_v):
        verdict = "equal"
    elif contains(ref_v, res.body):
        verdict, diag["inclusion"] = "proper-inclusion", "body in reference"
    elif contains(res.body, ref_v):
        verdict, diag["inclusion"] = "proper-inclusion", "reference in body"
    else:
        verdict = "incomparable"
    return CertificationReport(res, ref_h, verdict, diag)


def _facet_strings(p: VPolytope) -> list[str]:
    h = v_to_h(p)
    out = [f"{_lin(a)} = {b}" for a, b in h.eqs]
    out += [f"{_lin(a)} <= {b}" for a, b in h.ineqs]
    return out


def _lin(a) -> str:
    terms = []
    for t, c in enumerate(a, start=1):
        if c == 0:
            continue
        s = "-" if c < 0 else "+"
        mag = abs(c)
        terms.append(f"{s} {'' if mag == 1 else str(mag) + '*'}u{t}")
    if not terms:
        return "0"
    text = " ".join(terms)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


def newton_polytope(f: SparsePolynomial) -> VPolytope:
    """Hull of the exponent vectors of ``f``."""
    if f.is_zero():
        raise ValidationError("the zero polynomial has no Newton polytope")
    return hull(f.support(), f.nvars)


def coordinate_permutations(p: Polytope, q: Polytope) -> list[tuple[int, ...]]:
    """All ``s`` with ``{(x[s[0]], ..., x[s[d-1]]) : x in P} = Q`` on vertex sets."""
    pv = p if isinstance(p, VPolytope) else p.vpolytope
    qv = q if isinstance(q, VPolytope) else q.vpolytope
    if pv.dim != qv.dim:
        raise DimensionError(f"dimensions {pv.dim} and {qv.dim}")
    target = set(qv.vertices)
    if len(target) != len(pv.vertices):
        return []
    return [s for s in permutations(range(pv.dim))
            if all(tuple(v[i] for i in s) in target for v in pv.vertices)]


def lattice_count_check(w: DominantWeight, ks: Sequence[int] = (1, 2, 3)) -> dict:
    """GZ and (where defined) FFLV lattice counts of ``k * w`` for each ``k``."""
    from .rootdata import weyl_dim
    out = {"weyl_dim": [], "gz": [], "fflv": []}
    for k in ks:
        wk = w.scaled(k)
        out["weyl_dim"].append(weyl_dim(wk))
        out["gz"].append(count_lattice_points(gz_polytope(wk), gz_lattice(wk)))
        if w.group.family in "AC":
            out["fflv"].append(count_lattice_points(fflv_polytope(wk)))
    return out


def fundamental_bodies(group: GroupType) -> list[VPolytope]:
    return [fundamental_body(group, k) for k in range(1, group.rank + 1)]


def fundamental_weights(group: GroupType) -> list[DominantWeight]:
    return [fundamental_weight(group, k) for k in range(1, group.rank + 1)]
