"""Classical root data: group types, dominant weights, Weyl dimension formula.

Weights are written in the standard orthogonal coordinates
``lambda = (l_1, ..., l_m)``.  Spin weights of types B and D are
half-integral, so entries are exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Sequence

from .errors import ValidationError
from .exactalg import to_scalar

FAMILIES = ("A", "B", "C", "D")


@dataclass(frozen=True)
class GroupType:
    """A classical group ``SL_n``, ``SO_{2r+1}``, ``Sp_{2r}`` or ``SO_{2r}``."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValidationError(f"unknown family {self.family!r}")
        if not isinstance(self.rank, int) or self.rank < 1:
            raise ValidationError(f"rank must be a positive integer, got {self.rank!r}")
        if self.family == "D" and self.rank < 2:
            raise ValidationError("type D requires rank >= 2")

    @property
    def n(self) -> int:
        """Size of the defining matrix representation."""
        return {"A": self.rank + 1, "B": 2 * self.rank + 1}.get(self.family, 2 * self.rank)

    @property
    def flag_dimension(self) -> int:
        """Dimension ``d`` of the complete flag variety G/B."""
        r = self.rank
        if self.family == "A":
            return r * (r + 1) // 2
        if self.family in "BC":
            return r * r
        return r * (r - 1)

    @property
    def weight_length(self) -> int:
        return self.rank + 1 if self.family == "A" else self.rank

    def __str__(self):
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class DominantWeight:
    group: GroupType
    lam: tuple

    def __post_init__(self):
        lam = tuple(to_scalar(x) for x in self.lam)
        object.__setattr__(self, "lam", lam)
        _validate(self.group, lam)

    @classmethod
    def of(cls, family: str, rank: int, lam: Iterable) -> "DominantWeight":
        return cls(GroupType(family, rank), tuple(lam))

    def scaled(self, k: int) -> "DominantWeight":
        return DominantWeight(self.group, tuple(k * x for x in self.lam))

    def is_zero(self) -> bool:
        return self.multiplicities() == (0,) * self.group.rank

    def multiplicities(self) -> tuple[int, ...]:
        """Coefficients ``m_k`` with ``lambda = sum m_k * omega_k``."""
        return omega_coordinates(self)

    def __str__(self):
        return f"{self.group}({','.join(str(x) for x in self.lam)})"


def _validate(group: GroupType, lam: tuple) -> None:
    if len(lam) != group.weight_length:
        raise ValidationError(f"{group} weights have {group.weight_length} entries, got {len(lam)}")
    fam = group.family
    if fam in "AC" and any(Fraction(x).denominator != 1 for x in lam):
        raise ValidationError(f"{group} weights must be integral: {lam}")
    if fam in "BD":
        dens = {Fraction(2 * x).denominator for x in lam}
        halves = {Fraction(x).denominator for x in lam}
        if dens != {1} or len(halves) != 1:
            raise ValidationError(f"{group} weight entries must be all integers or all half-integers: {lam}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1) if not (fam == "D" and i == len(lam) - 2)):
        raise ValidationError(f"weight {lam} is not non-increasing")
    if fam in "BC" and lam[-1] < 0:
        raise ValidationError(f"{group} weights must be non-negative: {lam}")
    if fam == "D" and lam[-2] < abs(lam[-1]):
        raise ValidationError(f"{group} weight {lam} violates l_(r-1) >= |l_r|")


def fundamental_weight(group: GroupType, k: int) -> DominantWeight:
    """The k-th fundamental weight (Bourbaki numbering)."""
    r = group.rank
    if not 1 <= k <= r:
        raise IndexError(f"fundamental weight index {k} outside 1..{r}")
    fam = group.family
    if fam == "A":
        lam = [1] * k + [0] * (r + 1 - k)
    elif fam == "C" or (fam == "B" and k < r) or (fam == "D" and k < r - 1):
        lam = [1] * k + [0] * (r - k)
    elif fam == "B":
        lam = [Fraction(1, 2)] * r
    elif k == r:
        lam = [Fraction(1, 2)] * r
    else:
        lam = [Fraction(1, 2)] * (r - 1) + [Fraction(-1, 2)]
    return DominantWeight(group, tuple(lam))


def omega_coordinates(w: DominantWeight) -> tuple[int, ...]:
    """Multiplicities of fundamental weights in ``w``."""
    lam = [Fraction(x) for x in w.lam]
    fam, r = w.group.family, w.group.rank
    if fam == "A":
        m = [lam[i] - lam[i + 1] for i in range(r)]
    elif fam == "C":
        m = [lam[i] - lam[i + 1] for i in range(r - 1)] + [lam[-1]]
    elif fam == "B":
        m = [lam[i] - lam[i + 1] for i in range(r - 1)] + [2 * lam[-1]]
    else:
        m = [lam[i] - lam[i + 1] for i in range(r - 1)] + [lam[-2] + lam[-1]]
    out = []
    for x in m:
        if x.denominator != 1 or x < 0:
            raise ValidationError(f"{w} is not a dominant integral weight")
        out.append(int(x))
    return tuple(out)


def from_multiplicities(group: GroupType, m: Sequence[int]) -> DominantWeight:
    """Build ``sum m_k * omega_k``; type A is normalized with last entry 0."""
    if len(m) != group.rank or any(x < 0 for x in m):
        raise ValidationError(f"need {group.rank} non-negative multiplicities, got {m}")
    total = [Fraction(0)] * group.weight_length
    for k, mk in enumerate(m, start=1):
        for i, x in enumerate(fundamental_weight(group, k).lam):
            total[i] += mk * Fraction(x)
    return DominantWeight(group, tuple(total))


def positive_roots(group: GroupType) -> list[tuple[int, ...]]:
    """Positive roots in orthogonal coordinates (integer vectors)."""
    m = group.weight_length
    fam = group.family

    def e(i, sign=1, j=None, sign2=0):
        v = [0] * m
        v[i] += sign
        if j is not None:
            v[j] += sign2
        return tuple(v)

    roots = []
    for i in range(m):
        for j in range(i + 1, m):
            roots.append(e(i, 1, j, -1))
            if fam != "A":
                roots.append(e(i, 1, j, 1))
        if fam == "B":
            roots.append(e(i))
        elif fam == "C":
            roots.append(e(i, 2))
    return roots


def rho(group: GroupType) -> tuple[Fraction, ...]:
    """Half the sum of positive roots."""
    total = [Fraction(0)] * group.weight_length
    for a in positive_roots(group):
        for i, x in enumerate(a):
            total[i] += x
    return tuple(t / 2 for t in total)


def weyl_dim(w: DominantWeight) -> int:
    """Dimension of the irreducible representation with highest weight ``w``."""
    return _weyl_dim(w.group, tuple(Fraction(x) for x in w.lam))


@lru_cache(maxsize=4096)
def _weyl_dim(group: GroupType, lam: tuple) -> int:
    r = rho(group)
    num = Fraction(1)
    for a in positive_roots(group):
        num *= sum((l + p) * x for l, p, x in zip(lam, r, a)) / sum(p * x for p, x in zip(r, a))
    if num.denominator != 1:
        raise AssertionError(f"non-integral Weyl dimension {num}")
    return int(num)


def hilbert_polynomial(w: DominantWeight) -> list[Fraction]:
    """Coefficients (constant first) of ``k -> weyl_dim(k*w)``.

    Obtained by Newton divided differences through ``k = 0..d``.
    """
    d = w.group.flag_dimension
    values = [Fraction(weyl_dim(w.scaled(k))) for k in range(d + 1)]
    # forward differences at 0
    diffs = [values[0]]
    row = values
    for _ in range(d):
        row = [row[i + 1] - row[i] for i in range(len(row) - 1)]
        diffs.append(row[0])
    # Newton form sum diffs[j] * C(k, j) expanded to monomials
    coeffs = [Fraction(0)] * (d + 1)
    basis = [Fraction(1)]  # coefficients of k(k-1)...(k-j+1)/j!
    for j in range(d + 1):
        for i, c in enumerate(basis):
            coeffs[i] += diffs[j] * c
        nxt = [Fraction(0)] * (len(basis) + 1)
        for i, c in enumerate(basis):
            nxt[i + 1] += c / (j + 1)
            nxt[i] -= c * j / (j + 1)
        basis = nxt
    return coeffs


def evaluate(coeffs: Sequence[Fraction], k) -> Fraction:
    total = Fraction(0)
    for c in reversed(coeffs):
        total = total * k + c
    return total


def degree_oracle(w: DominantWeight) -> int:
    """Degree of the image of G/B under the weight-``w`` embedding.

    Equal to ``d!`` times the degree-``d`` coefficient of the Hilbert
    polynomial; zero when ``w`` is not regular.
    """
    coeffs = hilbert_polynomial(w)
    d = w.group.flag_dimension
    deg = coeffs[d] * factorial(d)
    if deg.denominator != 1:
        raise AssertionError(f"non-integral degree {deg}")
    return int(deg)


def is_regular(w: DominantWeight) -> bool:
    return all(m > 0 for m in w.multiplicities())
