"""Group algebras RG as sparse formal sums.

An :class:`AlgebraElement` maps element indices of its carrier group to
nonzero ring coefficients.  Zero coefficients are never stored, so two
elements are equal exactly when their term maps are.
"""
from __future__ import annotations

import random
import re
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from .errors import (
    CarrierMismatch,
    ParseError,
    RingMismatch,
    SupportOutsideSubgroup,
    UnsupportedRing,
    ValidationError,
)
from .groups import FiniteGroup, QuotientGroup, SubgroupRef
from .rings import CoefficientRing, IntegerRing, ModRing, RationalRing


class AlgebraElement:
    __slots__ = ("ring", "group", "terms")

    def __init__(self, ring: CoefficientRing, group: FiniteGroup,
                 terms: Optional[Mapping[int, object]] = None):
        self.ring = ring
        self.group = group
        clean = {}
        for g, c in (terms or {}).items():
            if not 0 <= g < group.order:
                raise ValidationError(f"{g} is not an element of the carrier")
            c = ring.coerce(c)
            if c != ring.zero:
                clean[g] = c
        self.terms = clean

    @classmethod
    def _raw(cls, ring, group, terms):
        # terms already normalised
        x = cls.__new__(cls)
        x.ring, x.group, x.terms = ring, group, terms
        return x

    @classmethod
    def zero(cls, ring, group) -> AlgebraElement:
        return cls._raw(ring, group, {})

    @classmethod
    def one(cls, ring, group) -> AlgebraElement:
        return cls._raw(ring, group, {group.identity: ring.one})

    @classmethod
    def basis(cls, ring, group, g: int, coefficient=None) -> AlgebraElement:
        return cls(ring, group, {g: ring.one if coefficient is None else coefficient})

    def coefficient(self, g: int):
        return self.terms.get(g, self.ring.zero)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self.terms))

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient_sum(self):
        total = self.ring.zero
        for c in self.terms.values():
            total = self.ring.add(total, c)
        return total

    def _check(self, other: AlgebraElement) -> None:
        if self.ring != other.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")
        if self.group is not other.group and self.group != other.group:
            raise CarrierMismatch("elements live in different group algebras")

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        self._check(other)
        ring = self.ring
        out = dict(self.terms)
        for g, c in other.terms.items():
            s = ring.add(out.get(g, ring.zero), c)
            if s == ring.zero:
                out.pop(g, None)
            else:
                out[g] = s
        return AlgebraElement._raw(ring, self.group, out)

    def __neg__(self) -> AlgebraElement:
        neg = self.ring.negate
        return AlgebraElement._raw(self.ring, self.group, {g: neg(c) for g, c in self.terms.items()})

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        return self + (-other)

    def __mul__(self, other) -> AlgebraElement:
        if not isinstance(other, AlgebraElement):
            return self.scale(other)
        self._check(other)
        ring, t = self.ring, self.group.table
        zero = ring.zero
        out: dict[int, object] = {}
        for g, a in self.terms.items():
            row = t[g]
            for h, b in other.terms.items():
                k = row[h]
                out[k] = ring.add(out.get(k, zero), ring.multiply(a, b))
        return AlgebraElement._raw(ring, self.group, {k: c for k, c in out.items() if c != zero})

    def __rmul__(self, scalar) -> AlgebraElement:
        return self.scale(scalar)

    def scale(self, scalar) -> AlgebraElement:
        ring = self.ring
        s = ring.coerce(scalar)
        out = {g: ring.multiply(s, c) for g, c in self.terms.items()}
        return AlgebraElement._raw(ring, self.group, {g: c for g, c in out.items() if c != ring.zero})

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return (self.ring == other.ring and self.terms == other.terms
                and (self.group is other.group or self.group == other.group))

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"AlgebraElement({render_element(self)!r}, ring={self.ring})"

    def __str__(self):
        return render_element(self)


def alg_add(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    return x + y


def alg_mul(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Convolution product sum_{g,h} x_g y_h (gh)."""
    return x * y


def chi_dot(h: SubgroupRef, g: int) -> int:
    """Indicator of H: 1 on members, 0 elsewhere."""
    return 1 if g in h else 0


def project_element(q: QuotientGroup, x: AlgebraElement) -> AlgebraElement:
    """Send sum x_h h in RH to sum x_h (hK) in R(H/K)."""
    ring = x.ring
    out: dict[int, object] = {}
    for h, c in x.terms.items():
        try:
            cls = q.class_of[h]
        except KeyError:
            raise SupportOutsideSubgroup(
                f"{x.group.labels[h]} is not in the subgroup being projected") from None
        out[cls] = ring.add(out.get(cls, ring.zero), c)
    return AlgebraElement._raw(ring, q.cosets, {k: c for k, c in out.items() if c != ring.zero})


def random_element(ring: CoefficientRing, group: FiniteGroup, rng: random.Random,
                   max_terms: int = 4, support: Optional[Sequence[int]] = None) -> AlgebraElement:
    """A random element with between 1 and ``max_terms`` nonzero terms."""
    pool = list(range(group.order)) if support is None else list(support)
    k = rng.randint(1, min(max_terms, len(pool)))
    terms = {g: ring.random_element(rng, nonzero=True) for g in rng.sample(pool, k)}
    return AlgebraElement(ring, group, terms)


# ---------------------------------------------------------------------------
# the regular representation over the base ring

def regular_matrix(x: AlgebraElement) -> list[list]:
    """Matrix of left multiplication by x; column j holds the coefficients of x g_j."""
    ring, group = x.ring, x.group
    n = group.order
    m = [[ring.zero] * n for _ in range(n)]
    t = group.table
    for g, c in x.terms.items():
        for j in range(n):
            m[t[g][j]][j] = c
    return m


def _det_fraction(matrix) -> Fraction:
    """Gaussian elimination over Q."""
    a = [[Fraction(v) for v in row] for row in matrix]
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        p = a[col][col]
        det *= p
        for r in range(col + 1, n):
            f = a[r][col] / p
            if f:
                row_r, row_c = a[r], a[col]
                for k in range(col, n):
                    row_r[k] -= f * row_c[k]
    return det


def _det_bareiss(matrix) -> int:
    """Fraction-free (Bareiss) elimination over Z."""
    a = [[int(v) for v in row] for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def ring_determinant(ring: CoefficientRing, matrix) -> object:
    """Determinant of a square matrix of ring values.

    Rationals use exact elimination; integers use Bareiss; Z/nZ lifts to
    the integers, runs Bareiss and reduces, which is valid for any n.
    """
    if isinstance(ring, RationalRing):
        return _det_fraction(matrix)
    if isinstance(ring, (IntegerRing, ModRing)):
        return ring.coerce(_det_bareiss(matrix))
    raise UnsupportedRing(f"no determinant routine for {ring}")


def is_invertible(x: AlgebraElement) -> bool:
    """Whether x is a unit of RG, decided by the regular representation."""
    return x.ring.is_unit(ring_determinant(x.ring, regular_matrix(x)))


def inverse(x: AlgebraElement) -> AlgebraElement:
    """Two-sided inverse of a unit of RG by Cramer's rule on the regular matrix.

    Solves ``M y = e_identity`` where M is the regular matrix; then x*y = 1.
    """
    ring, group = x.ring, x.group
    m = regular_matrix(x)
    d = ring_determinant(ring, m)
    if not ring.is_unit(d):
        raise ValidationError("element is not invertible")
    if isinstance(ring, RationalRing):
        d_inv = 1 / Fraction(d)
    elif isinstance(ring, IntegerRing):
        d_inv = d  # d is +-1
    else:
        d_inv = pow(int(d), -1, ring.modulus)
    n = group.order
    e = group.identity
    terms = {}
    for i in range(n):
        replaced = [[(ring.one if r == e else ring.zero) if c == i else m[r][c]
                     for c in range(n)] for r in range(n)]
        terms[i] = ring.multiply(ring_determinant(ring, replaced), d_inv)
    return AlgebraElement(ring, group, terms)


# ---------------------------------------------------------------------------
# text syntax: "2*a + 3*b - 1/2*e"

_SPLIT = re.compile(r"([+-])")
_COEF = re.compile(r"^\d+(/\d+)?$")


def parse_element(text: str, ring: CoefficientRing, group: FiniteGroup) -> AlgebraElement:
    """Parse a signed sum of ``coefficient*label`` terms.

    Whitespace is ignored, a missing coefficient means 1, and a bare number
    that is not an element label is a multiple of the identity.
    """
    src = text.replace("−", "-").replace(" ", "").replace("\t", "")
    if not src:
        raise ParseError("empty element expression", 1, 1)
    pieces = _SPLIT.split(src)
    # pieces alternate: term, sign, term, sign, ...
    result = AlgebraElement.zero(ring, group)
    sign = 1
    col = 1
    expect_term = True
    for piece in pieces:
        if piece in "+-" and piece:
            if piece == "-":
                sign = -sign
            col += 1
            continue
        if piece == "":
            continue
        result = result + _parse_term(piece, sign, ring, group, col)
        col += len(piece)
        sign = 1
        expect_term = False
    if expect_term:
        raise ParseError(f"no terms in {text!r}", 1, 1)
    return result


def _parse_term(term: str, sign: int, ring, group, col) -> AlgebraElement:
    labels = group._label_index
    if term in labels:
        coef, label = "1", term
    elif "*" in term:
        coef, label = term.split("*", 1)
        if not _COEF.match(coef):
            raise ParseError(f"bad coefficient {coef!r}", 1, col)
    elif _COEF.match(term):
        coef, label = term, group.labels[group.identity]
    else:
        raise ParseError(f"unknown element label {term!r}", 1, col)
    if label not in labels:
        raise ParseError(f"unknown element label {label!r}", 1, col)
    c = ring.parse(coef)
    if sign < 0:
        c = ring.negate(c)
    return AlgebraElement(ring, group, {labels[label]: c})


def render_element(x: AlgebraElement) -> str:
    """Inverse of :func:`parse_element`; terms appear in element index order."""
    if x.is_zero():
        return "0"
    ring = x.ring
    parts = []
    for g in sorted(x.terms):
        c = x.terms[g]
        text = ring.render(c)
        neg = text.startswith("-")
        if neg:
            text = text[1:]
        label = x.group.labels[g]
        # numeric labels keep an explicit coefficient so "1*0" is not read as zero
        body = label if text == "1" and not _COEF.match(label) else f"{text}*{label}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)


def elements_from_labels(group: FiniteGroup, labels: Iterable[str]) -> list[int]:
    return [group.index_of(s) for s in labels]
