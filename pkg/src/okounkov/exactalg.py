"""Exact rational arithmetic on sparse multivariate polynomials.

Polynomials are immutable maps from exponent tuples to rational
coefficients.  Coefficients are stored as ``int`` when integral and as
:class:`fractions.Fraction` otherwise, which keeps the common integer case
fast while remaining exact.

Variables are numbered ``0 .. nvars-1`` and printed as ``y1 .. yd``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Mapping, Sequence, Union

from .errors import DimensionError, ShapeError, ValidationError

Scalar = Union[int, Fraction]
Exponent = tuple[int, ...]

__all__ = [
    "SparsePolynomial",
    "VariableOrder",
    "compare_lex",
    "determinant",
    "exact_sqrt",
    "parse_polynomial",
    "format_polynomial",
    "to_scalar",
]


def to_scalar(value) -> Scalar:
    """Coerce ``value`` (int, Fraction or ``"p/q"`` string) to a reduced scalar."""
    if isinstance(value, bool):
        raise ValidationError("booleans are not scalars")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, str):
        frac = Fraction(value.strip())
    else:
        frac = Fraction(value)
    return frac.numerator if frac.denominator == 1 else frac


def _norm(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


@dataclass(frozen=True)
class VariableOrder:
    """Ranking of variables for lexicographic comparison.

    ``ranking[0]`` is the index of the highest variable.
    """

    ranking: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.ranking) != list(range(len(self.ranking))):
            raise ValidationError(f"ranking {self.ranking} is not a permutation")

    @classmethod
    def identity(cls, nvars: int) -> "VariableOrder":
        return cls(tuple(range(nvars)))

    @property
    def nvars(self) -> int:
        return len(self.ranking)

    def key(self, exps: Sequence[int]) -> tuple[int, ...]:
        """Sort key: tuple comparison of keys is the lexicographic order."""
        return tuple(exps[i] for i in self.ranking)


def compare_lex(a: Sequence[int], b: Sequence[int], order: VariableOrder | None = None) -> int:
    """Return -1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``.

    The first variable (in ``order``) whose exponents differ decides; the
    larger exponent wins.
    """
    if len(a) != len(b):
        raise DimensionError(f"exponent vectors of length {len(a)} and {len(b)}")
    if order is None:
        order = VariableOrder.identity(len(a))
    elif order.nvars != len(a):
        raise DimensionError(f"order on {order.nvars} variables, vectors of length {len(a)}")
    for i in order.ranking:
        if a[i] != b[i]:
            return 1 if a[i] > b[i] else -1
    return 0


class SparsePolynomial:
    """Immutable polynomial with rational coefficients in ``nvars`` variables."""

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Sequence[int], object] | None = None):
        if nvars < 0:
            raise ValidationError("variable count must be non-negative")
        clean: dict[Exponent, Scalar] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars:
                raise DimensionError(f"exponent {exps} in a ring with {nvars} variables")
            if any(e < 0 for e in exps):
                raise ValidationError(f"negative exponent in {exps}")
            c = to_scalar(c)
            if c:
                clean[exps] = _norm(clean.get(exps, 0) + c)
                if not clean[exps]:
                    del clean[exps]
        self.nvars = nvars
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "SparsePolynomial":
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, nvars: int) -> "SparsePolynomial":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c=1) -> "SparsePolynomial":
        c = to_scalar(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "SparsePolynomial":
        if not 0 <= index < nvars:
            raise DimensionError(f"variable {index} out of range for {nvars} variables")
        exps = [0] * nvars
        exps[index] = 1
        return cls._raw(nvars, {tuple(exps): 1})

    @classmethod
    def monomial(cls, exps: Sequence[int], c=1) -> "SparsePolynomial":
        return cls(len(exps), {tuple(exps): c})

    @property
    def terms(self) -> dict[Exponent, Scalar]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {(0,) * self.nvars}

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, exps: Sequence[int]) -> Scalar:
        return self._terms.get(tuple(exps), 0)

    def total_degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def support(self) -> list[Exponent]:
        return sorted(self._terms)

    def _check(self, other: "SparsePolynomial") -> None:
        if self.nvars != other.nvars:
            raise DimensionError(f"polynomials in {self.nvars} and {other.nvars} variables")

    def _coerce(self, other) -> "SparsePolynomial":
        if isinstance(other, SparsePolynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return SparsePolynomial.constant(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = _norm(s)
            else:
                out.pop(e, None)
        return SparsePolynomial._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return SparsePolynomial._raw(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exponent, Scalar] = {}
        n = self.nvars
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple([e1[i] + e2[i] for i in range(n)])
                out[e] = out.get(e, 0) + c1 * c2
        return SparsePolynomial._raw(n, {e: _norm(c) for e, c in out.items() if c})

    __rmul__ = __mul__

    def scale(self, c) -> "SparsePolynomial":
        c = to_scalar(c)
        if not c:
            return SparsePolynomial.zero(self.nvars)
        return SparsePolynomial._raw(self.nvars, {e: _norm(v * c) for e, v in self._terms.items()})

    def __pow__(self, k: int):
        if k < 0:
            raise ValidationError("negative powers are not polynomials")
        result = SparsePolynomial.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, SparsePolynomial):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self == SparsePolynomial.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"SparsePolynomial({self.nvars}, {format_polynomial(self)!r})"

    def __str__(self):
        return format_polynomial(self)

    def lowest_term(self, order: VariableOrder | None = None) -> tuple[Exponent, Scalar]:
        """The lexicographically smallest monomial and its coefficient."""
        if not self._terms:
            raise ValidationError("the zero polynomial has no lowest term")
        order = order or VariableOrder.identity(self.nvars)
        e = min(self._terms, key=order.key)
        return e, self._terms[e]

    def highest_term(self, order: VariableOrder | None = None) -> tuple[Exponent, Scalar]:
        if not self._terms:
            raise ValidationError("the zero polynomial has no highest term")
        order = order or VariableOrder.identity(self.nvars)
        e = max(self._terms, key=order.key)
        return e, self._terms[e]

    def exact_div(self, other: "SparsePolynomial") -> "SparsePolynomial":
        """Quotient of an exact division; raises if ``other`` does not divide ``self``."""
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        order = VariableOrder.identity(self.nvars)
        lead_e, lead_c = other.highest_term(order)
        quotient: dict[Exponent, Scalar] = {}
        rem = self
        while not rem.is_zero():
            e, c = rem.highest_term(order)
            q_e = tuple(a - b for a, b in zip(e, lead_e))
            if any(x < 0 for x in q_e):
                raise ValidationError("division is not exact")
            q_c = _norm(Fraction(c) / lead_c)
            quotient[q_e] = q_c
            rem = rem - other * SparsePolynomial._raw(self.nvars, {q_e: q_c})
        return SparsePolynomial._raw(self.nvars, quotient)


def exact_sqrt(f: SparsePolynomial) -> SparsePolynomial:
    """Square root ``g`` with ``g*g == f`` and positive lowest coefficient.

    Raises :class:`ValidationError` when ``f`` is not the square of a
    polynomial with rational coefficients.
    """
    if f.is_zero():
        return f
    order = VariableOrder.identity(f.nvars)
    e0, c0 = f.lowest_term(order)
    if any(e % 2 for e in e0):
        raise ValidationError("lowest term is not a square")
    c0 = Fraction(c0)
    num_root = _isqrt_exact(c0.numerator)
    den_root = _isqrt_exact(c0.denominator)
    if num_root is None or den_root is None:
        raise ValidationError(f"coefficient {c0} is not a rational square")
    g0 = SparsePolynomial.monomial(tuple(e // 2 for e in e0), Fraction(num_root, den_root))
    twice_g0 = g0.scale(2)
    lead_e = tuple(e // 2 for e in e0)
    g = g0
    max_deg = f.total_degree() // 2
    while True:
        r = f - g * g
        if r.is_zero():
            return g
        e, c = r.lowest_term(order)
        t_e = tuple(a - b for a, b in zip(e, lead_e))
        if any(x < 0 for x in t_e) or sum(t_e) > max_deg:
            raise ValidationError("polynomial is not a perfect square")
        t = SparsePolynomial.monomial(t_e, Fraction(c) / twice_g0.coefficient(lead_e))
        g = g + t


def _isqrt_exact(n: int):
    if n < 0:
        return None
    import math

    s = math.isqrt(n)
    return s if s * s == n else None


Matrix = Sequence[Sequence[SparsePolynomial]]


def determinant(m: Matrix) -> SparsePolynomial:
    """Exact determinant of a square matrix of polynomials.

    Cofactor expansion up to 4x4, fraction-free Bareiss elimination above.
    """
    k = len(m)
    if k == 0:
        raise ShapeError("empty matrix")
    if any(len(row) != k for row in m):
        raise ShapeError(f"matrix is not square: {[len(r) for r in m]} columns for {k} rows")
    rings = {e.nvars for row in m for e in row if isinstance(e, SparsePolynomial)}
    if len(rings) != 1:
        raise DimensionError("matrix entries live in different rings" if rings else "no polynomial entries")
    nvars = rings.pop()
    # scalar entries are promoted to constants
    m = [[e if isinstance(e, SparsePolynomial) else SparsePolynomial.constant(nvars, e) for e in row]
         for row in m]
    if k <= 4:
        return _cofactor(m, list(range(k)), 0)
    return _bareiss(m)


def _cofactor(m: Matrix, cols: list[int], row: int) -> SparsePolynomial:
    if len(cols) == 1:
        return m[row][cols[0]]
    total = SparsePolynomial.zero(m[0][0].nvars)
    for pos, c in enumerate(cols):
        entry = m[row][c]
        if entry.is_zero():
            continue
        minor = _cofactor(m, cols[:pos] + cols[pos + 1:], row + 1)
        term = entry * minor
        total = total - term if pos % 2 else total + term
    return total


def _bareiss(m: Matrix) -> SparsePolynomial:
    k = len(m)
    a = [list(row) for row in m]
    nvars = a[0][0].nvars
    sign = 1
    prev = SparsePolynomial.constant(nvars, 1)
    for p in range(k - 1):
        if a[p][p].is_zero():
            swap = next((r for r in range(p + 1, k) if not a[r][p].is_zero()), None)
            if swap is None:
                return SparsePolynomial.zero(nvars)
            a[p], a[swap] = a[swap], a[p]
            sign = -sign
        for i in range(p + 1, k):
            for j in range(p + 1, k):
                a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]).exact_div(prev)
        prev = a[p][p]
    det = a[k - 1][k - 1]
    return det if sign > 0 else -det


def permutation_determinant(m: Matrix) -> SparsePolynomial:
    """Leibniz-formula determinant; slow, used only as an independent check."""
    k = len(m)
    total = SparsePolynomial.zero(m[0][0].nvars)
    for perm in permutations(range(k)):
        inversions = sum(1 for i in range(k) for j in range(i + 1, k) if perm[i] > perm[j])
        term = SparsePolynomial.constant(total.nvars, -1 if inversions % 2 else 1)
        for i in range(k):
            term = term * m[i][perm[i]]
        total = total + term
    return total


# --- text format -----------------------------------------------------------

_FACTOR_RE = re.compile(r"^y(\d+)(?:\^(\d+))?$")


def format_polynomial(f: SparsePolynomial, order: VariableOrder | None = None) -> str:
    """Canonical text: terms in increasing lexicographic order of monomials.

    >>> x = SparsePolynomial.variable(2, 0)
    >>> format_polynomial(1 + 2 * x)
    '1 + 2*y1'
    """
    if f.is_zero():
        return "0"
    order = order or VariableOrder.identity(f.nvars)
    parts = []
    for exps in sorted(f._terms, key=order.key):
        c = f._terms[exps]
        factors = [f"y{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(exps) if e]
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = f"{mag}*" + "*".join(factors)
        parts.append(("-" if c < 0 else "+", body))
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for s, body in parts[1:]:
        text += f" {s} {body}"
    return text


def parse_polynomial(text: str, nvars: int) -> SparsePolynomial:
    """Parse the format written by :func:`format_polynomial`.

    Accepts any arrangement of ``c*y1^a*y3`` style terms joined by ``+``/``-``.
    """
    s = text.strip()
    if not s:
        raise ValidationError("empty polynomial text")
    terms: dict[Exponent, Scalar] = {}
    tokens = _split_terms(s)
    for sign, body in tokens:
        coeff: Scalar = 1
        exps = [0] * nvars
        seen_coeff = False
        for factor in body.split("*"):
            factor = factor.strip()
            if not factor:
                raise ValidationError(f"malformed term {body!r}")
            m = _FACTOR_RE.match(factor)
            if m:
                idx = int(m.group(1)) - 1
                if not 0 <= idx < nvars:
                    raise DimensionError(f"variable y{idx + 1} outside {nvars} variables")
                exps[idx] += int(m.group(2) or 1)
            else:
                if seen_coeff:
                    raise ValidationError(f"two coefficients in term {body!r}")
                try:
                    coeff = to_scalar(factor)
                except (ValueError, ZeroDivisionError) as exc:
                    raise ValidationError(f"bad coefficient {factor!r}") from exc
                seen_coeff = True
        if sign == "-":
            coeff = -coeff
        key = tuple(exps)
        terms[key] = _norm(terms.get(key, 0) + coeff)
    return SparsePolynomial(nvars, terms)


def _split_terms(s: str) -> list[tuple[str, str]]:
    out = []
    sign = "+"
    buf = ""
    for ch in s:
        if ch in "+-":
            if buf.strip():
                out.append((sign, buf.strip()))
                buf = ""
                sign = ch
            elif ch == "-":
                sign = "-" if sign == "+" else "+"
        else:
            buf += ch
    if not buf.strip():
        raise ValidationError(f"dangling sign in {s!r}")
    out.append((sign, buf.strip()))
    return out


def polynomials_from_matrix(rows: Iterable[Iterable[int]], nvars: int) -> list[list[SparsePolynomial]]:
    """Lift an integer matrix to constant polynomials."""
    return [[SparsePolynomial.constant(nvars, x) for x in row] for row in rows]
