"""Square matrices over group algebras and the regular representations RG -> Mat(m, RH).

Entries of ``L_T(alpha)`` and ``R_U(alpha)`` are elements of RG whose
support lies in H, so those matrices keep G as their carrier and record H
in ``within``.  After the quotient map the carrier becomes the group H/K.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .algebra import AlgebraElement, chi_dot, project_element
from .cosets import LEFT, RIGHT, CosetSystem, permutation_sign
from .errors import (
    CarrierMismatch,
    DimMismatch,
    NonAbelianCarrier,
    SupportOutsideSubgroup,
    SystemMismatch,
    WrongSide,
)
from .groups import FiniteGroup, QuotientGroup, SubgroupRef
from .rings import QQ, CoefficientRing


@dataclass(frozen=True, eq=False)
class AlgebraMatrix:
    ring: CoefficientRing
    carrier: FiniteGroup
    entries: tuple[tuple[AlgebraElement, ...], ...]
    within: Optional[SubgroupRef] = None

    def __post_init__(self):
        m = len(self.entries)
        for row in self.entries:
            if len(row) != m:
                raise DimMismatch("matrix is not square")
            for x in row:
                if x.ring != self.ring:
                    raise CarrierMismatch("entry ring differs from the matrix ring")
                if x.group is not self.carrier and x.group != self.carrier:
                    raise CarrierMismatch("entry carrier differs from the matrix carrier")
                if self.within is not None and any(g not in self.within for g in x.terms):
                    raise SupportOutsideSubgroup("entry support leaves the designated subgroup")

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, AlgebraMatrix):
            return NotImplemented
        return self.ring == other.ring and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __mul__(self, other: AlgebraMatrix) -> AlgebraMatrix:
        return mat_mul(self, other)

    def nonzero_pattern(self) -> list[list[bool]]:
        return [[not x.is_zero() for x in row] for row in self.entries]

    def __str__(self):
        return render_matrix(self)

    def __repr__(self):
        return f"AlgebraMatrix(dim={self.dim}, ring={self.ring})"


def matrix_from_rows(rows: Sequence[Sequence[AlgebraElement]], ring: CoefficientRing,
                     carrier: FiniteGroup, within: Optional[SubgroupRef] = None) -> AlgebraMatrix:
    return AlgebraMatrix(ring, carrier, tuple(tuple(r) for r in rows), within)


def identity_matrix(ring: CoefficientRing, carrier: FiniteGroup, m: int,
                    within: Optional[SubgroupRef] = None) -> AlgebraMatrix:
    one = AlgebraElement.one(ring, carrier)
    zero = AlgebraElement.zero(ring, carrier)
    return matrix_from_rows([[one if i == j else zero for j in range(m)] for i in range(m)],
                            ring, carrier, within)


def _carrier_check(cs: CosetSystem, alpha: AlgebraElement) -> None:
    if alpha.group is not cs.group and alpha.group != cs.group:
        raise CarrierMismatch("element does not live in the algebra of the coset system's group")


def left_regular_rep(cs: CosetSystem, alpha: AlgebraElement) -> AlgebraMatrix:
    """L_T(alpha) with entries sum_g chi(t_i^-1 g t_j) x_g t_i^-1 g t_j.

    Defined by alpha (t_1 ... t_m) = (t_1 ... t_m) L_T(alpha).
    """
    if cs.side != LEFT:
        raise WrongSide("left_regular_rep needs a left coset system")
    _carrier_check(cs, alpha)
    return _regular_rep(cs, alpha, lambda ti, g, tj: (cs.group.inverses[ti], g, tj))


def right_regular_rep(cs: CosetSystem, alpha: AlgebraElement) -> AlgebraMatrix:
    """R_U(alpha) with entries sum_g chi(u_i g u_j^-1) x_g u_i g u_j^-1.

    Defined by (u_1 ... u_m)^T alpha = R_U(alpha) (u_1 ... u_m)^T.
    """
    if cs.side != RIGHT:
        raise WrongSide("right_regular_rep needs a right coset system")
    _carrier_check(cs, alpha)
    return _regular_rep(cs, alpha, lambda ui, g, uj: (ui, g, cs.group.inverses[uj]))


def _regular_rep(cs, alpha, factors) -> AlgebraMatrix:
    group, h, ring = cs.group, cs.subgroup, alpha.ring
    t = group.table
    rows = []
    for ri in cs.reps:
        row = []
        for rj in cs.reps:
            terms: dict[int, object] = {}
            for g, x in alpha.terms.items():
                a, b, c = factors(ri, g, rj)
                y = t[t[a][b]][c]
                if chi_dot(h, y):
                    terms[y] = ring.add(terms.get(y, ring.zero), x)
            row.append(AlgebraElement(ring, group, terms))
        rows.append(row)
    return matrix_from_rows(rows, ring, group, within=h)


def psi_matrix(q: QuotientGroup, mat: AlgebraMatrix) -> AlgebraMatrix:
    """Entrywise projection Mat(m, RH) -> Mat(m, R(H/K))."""
    if mat.within is not None and mat.within != q.parent_subgroup:
        raise CarrierMismatch("matrix entries live in a different subgroup than the quotient's")
    if mat.carrier != q.parent_subgroup.parent:
        raise CarrierMismatch("matrix carrier is not the quotient's ambient group")
    rows = [[project_element(q, x) for x in row] for row in mat.entries]
    return matrix_from_rows(rows, mat.ring, q.cosets)


def mat_mul(a: AlgebraMatrix, b: AlgebraMatrix) -> AlgebraMatrix:
    """Row-by-column product; each term is (A entry) * (B entry) in that order."""
    if a.dim != b.dim:
        raise DimMismatch(f"{a.dim} x {a.dim} times {b.dim} x {b.dim}")
    if a.ring != b.ring:
        raise CarrierMismatch(f"rings differ: {a.ring} vs {b.ring}")
    if a.carrier != b.carrier:
        raise CarrierMismatch("matrices live over different group algebras")
    m = a.dim
    zero = AlgebraElement.zero(a.ring, a.carrier)
    rows = []
    for i in range(m):
        row = []
        for j in range(m):
            acc = zero
            for k in range(m):
                x, y = a.entries[i][k], b.entries[k][j]
                if x.terms and y.terms:
                    acc = acc + x * y
            row.append(acc)
        rows.append(row)
    within = a.within if a.within is not None and a.within == b.within else None
    return matrix_from_rows(rows, a.ring, a.carrier, within)


def _require_abelian(mat: AlgebraMatrix) -> None:
    if mat.dim < 1:
        raise DimMismatch("determinant of an empty matrix")
    if not mat.carrier.abelian:
        raise NonAbelianCarrier("det is only defined over a commutative group algebra")


def det_commutative(mat: AlgebraMatrix) -> AlgebraElement:
    """Leibniz determinant sum_sigma sgn(sigma) prod_i M[i][sigma(i)].

    Only meaningful when the carrier is abelian, so that R(carrier) is
    commutative.  Permutations are visited in lexicographic order and
    products containing a zero entry are skipped.
    """
    _require_abelian(mat)
    m, e = mat.dim, mat.entries
    ring, carrier = mat.ring, mat.carrier
    total = AlgebraElement.zero(ring, carrier)
    one = AlgebraElement.one(ring, carrier)
    for sigma in itertools.permutations(range(m)):
        factors = [e[i][sigma[i]] for i in range(m)]
        if any(f.is_zero() for f in factors):
            continue
        term = one
        for f in factors:
            term = term * f
        total = total + (term if permutation_sign(sigma) > 0 else -term)
    return total


def det_cofactor(mat: AlgebraMatrix) -> AlgebraElement:
    """Laplace expansion along the first row; cross-check for :func:`det_commutative`."""
    _require_abelian(mat)
    e = mat.entries
    ring, carrier = mat.ring, mat.carrier
    zero = AlgebraElement.zero(ring, carrier)
    cache: dict[tuple[int, tuple[int, ...]], AlgebraElement] = {}

    def minor(row: int, cols: tuple[int, ...]) -> AlgebraElement:
        if not cols:
            return AlgebraElement.one(ring, carrier)
        key = (row, cols)
        if key in cache:
            return cache[key]
        acc = zero
        for pos, c in enumerate(cols):
            x = e[row][c]
            if x.is_zero():
                continue
            sub = minor(row + 1, cols[:pos] + cols[pos + 1:])
            term = x * sub
            acc = acc - term if pos % 2 else acc + term
        cache[key] = acc
        return acc

    return minor(0, tuple(range(mat.dim)))


def change_of_basis(cs: CosetSystem, cs2: CosetSystem,
                    ring: CoefficientRing = QQ) -> AlgebraMatrix:
    """P with (t_1 ... t_m) = (t'_1 ... t'_m) P, for cs = T and cs2 = T'.

    ``P[i][j] = 1*(t'_i^-1 t_j)`` when that lies in H and zero otherwise.
    Then ``L_T(alpha) = P^-1 L_T'(alpha) P``, and ``change_of_basis(cs2, cs)``
    is P^-1.
    """
    if cs.side != LEFT or cs2.side != LEFT:
        raise SystemMismatch("change_of_basis compares two left coset systems")
    if cs.group != cs2.group or cs.subgroup != cs2.subgroup:
        raise SystemMismatch("coset systems belong to different (G, H)")
    if cs.rep_of != cs2.rep_of:
        raise SystemMismatch("coset systems list the cosets in different orders")
    group, h = cs.group, cs.subgroup
    t, inv = group.table, group.inverses
    zero = AlgebraElement.zero(ring, group)
    rows = []
    for ti2 in cs2.reps:
        row = []
        for tj in cs.reps:
            y = t[inv[ti2]][tj]
            row.append(AlgebraElement.basis(ring, group, y) if y in h else zero)
        rows.append(row)
    return matrix_from_rows(rows, ring, group, within=h)


def render_matrix(mat: AlgebraMatrix) -> str:
    """Row-major bracketed form, e.g. ``[[x, y], [y, x]]``."""
    return "[" + ", ".join("[" + ", ".join(str(x) for x in row) + "]"
                           for row in mat.entries) + "]"
