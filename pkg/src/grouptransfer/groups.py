"""Finite groups as index-based Cayley tables.

Elements of a group of order ``n`` are the integers ``0 .. n-1``;
``table[i][j]`` is the index of the product ``g_i * g_j``.  Subgroups are
stored as sorted member lists of a parent group, and quotients ``H/K`` carry
their own Cayley table so they can serve as carriers of group algebras.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import (
    NoIdentity,
    NoInverse,
    NotAssociative,
    NotASubgroup,
    NotASubset,
    NotNormal,
    SizeLimitExceeded,
    ValidationError,
)

# associativity is verified eagerly up to this order, skipped above it
ASSOCIATIVITY_CHECK_LIMIT = 256
# largest Cayley table the constructors will build
MAX_ORDER = 1024
MAX_SYMMETRIC_DEGREE = 8


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A finite group given by its full multiplication table.

    Construct through :func:`build_from_table` or the named constructors;
    calling the class directly skips validation (useful for deliberately
    corrupted copies in tests).
    """

    order: int
    table: tuple[tuple[int, ...], ...]
    identity: int
    inverses: tuple[int, ...]
    labels: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(i) for i in range(self.order)))

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return (self.order == other.order and self.identity == other.identity
                and self.table == other.table)

    def __hash__(self):
        return hash((self.order, self.identity, self.inverses))

    def __len__(self):
        return self.order

    def __repr__(self):
        return f"FiniteGroup(order={self.order})"

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def prod(self, elements: Iterable[int]) -> int:
        out = self.identity
        for g in elements:
            out = self.table[out][g]
        return out

    def power(self, g: int, k: int) -> int:
        if k < 0:
            g, k = self.inverses[g], -k
        out = self.identity
        for _ in range(k):
            out = self.table[out][g]
        return out

    def label(self, g: int) -> str:
        return self.labels[g]

    def index_of(self, label: str) -> int:
        try:
            return self._label_index[label]
        except KeyError:
            raise ValidationError(f"unknown element label {label!r}") from None

    @cached_property
    def _label_index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    @cached_property
    def abelian(self) -> bool:
        t = self.table
        return all(t[i][j] == t[j][i] for i in range(self.order) for j in range(i))

    def with_labels(self, labels: Sequence[str]) -> FiniteGroup:
        labels = tuple(str(s) for s in labels)
        if len(labels) != self.order:
            raise ValidationError(f"expected {self.order} labels, got {len(labels)}")
        if len(set(labels)) != self.order:
            raise ValidationError("element labels must be distinct")
        return FiniteGroup(self.order, self.table, self.identity, self.inverses, labels)


def _check_associative(table: tuple[tuple[int, ...], ...]) -> None:
    t = np.asarray(table, dtype=np.int64)
    left = t[t]          # [i, j, k] -> (ij)k
    right = t[:, t]      # [i, j, k] -> i(jk)
    bad = np.argwhere(left != right)
    if len(bad):
        i, j, k = (int(x) for x in bad[0])
        raise NotAssociative(i, j, k)


def build_from_table(table: Sequence[Sequence[int]], labels: Optional[Sequence[str]] = None,
                     check_associativity: Optional[bool] = None) -> FiniteGroup:
    """Validate a Cayley table and return the group it defines.

    The identity and inverses are read off the table.  Associativity is
    checked exhaustively when the order is at most
    ``ASSOCIATIVITY_CHECK_LIMIT`` unless ``check_associativity`` says
    otherwise.
    """
    n = len(table)
    if n == 0:
        raise ValidationError("a group needs at least one element")
    if n > MAX_ORDER:
        raise SizeLimitExceeded(f"order {n} exceeds the limit {MAX_ORDER}")
    rows = []
    for i, row in enumerate(table):
        row = tuple(int(x) for x in row)
        if len(row) != n:
            raise ValidationError(f"row {i} has length {len(row)}, expected {n}")
        for j, x in enumerate(row):
            if not 0 <= x < n:
                raise ValidationError(f"entry ({i},{j}) = {x} is not an index in [0, {n})")
        rows.append(row)
    rows = tuple(rows)

    identity = None
    for e in range(n):
        if rows[e] == tuple(range(n)) and all(rows[i][e] == i for i in range(n)):
            identity = e
            break
    if identity is None:
        raise NoIdentity("no element acts as a two-sided identity")

    inverses = []
    for i in range(n):
        for j in range(n):
            if rows[i][j] == identity and rows[j][i] == identity:
                inverses.append(j)
                break
        else:
            raise NoInverse(i)

    if check_associativity is None:
        check_associativity = n <= ASSOCIATIVITY_CHECK_LIMIT
    if check_associativity:
        _check_associative(rows)

    group = FiniteGroup(n, rows, identity, tuple(inverses))
    if labels is not None:
        group = group.with_labels(labels)
    return group


def trivial_group() -> FiniteGroup:
    return build_from_table([[0]], labels=["e"])


def cyclic(n: int) -> FiniteGroup:
    """Z/nZ on ``0 .. n-1`` under addition mod n."""
    if n < 1:
        raise ValidationError("cyclic(n) needs n >= 1")
    if n > MAX_ORDER:
        raise SizeLimitExceeded(f"cyclic({n}) exceeds the order limit {MAX_ORDER}")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return build_from_table(table, labels=[str(i) for i in range(n)])


def _dihedral_label(i: int, j: int) -> str:
    if i == 0 and j == 0:
        return "e"
    rot = "" if i == 0 else ("a" if i == 1 else f"a{i}")
    return rot + ("b" if j else "")


def dihedral(n: int) -> FiniteGroup:
    """The dihedral group of order 2n with a^n = b^2 = e and ab = ba^-1.

    Element ``a^i b^j`` has index ``2*i + j``, i.e. pairs (i, j) in
    lexicographic order.  Labels are ``e, b, a, ab, a2, a2b, ...``.
    """
    if n < 1:
        raise ValidationError("dihedral(n) needs n >= 1")
    if 2 * n > MAX_ORDER:
        raise SizeLimitExceeded(f"dihedral({n}) exceeds the order limit {MAX_ORDER}")
    elems = [(i, j) for i in range(n) for j in range(2)]
    index = {x: k for k, x in enumerate(elems)}

    def mul(x, y):
        (i, j), (k, l) = x, y
        # b^j a^k = a^{(-1)^j k} b^j
        return ((i + (k if j == 0 else -k)) % n, (j + l) % 2)

    table = [[index[mul(x, y)] for y in elems] for x in elems]
    return build_from_table(table, labels=[_dihedral_label(i, j) for i, j in elems])


def symmetric(n: int) -> FiniteGroup:
    """The symmetric group on n points.

    Permutations are ordered lexicographically by one-line notation and
    labelled by that notation on ``1 .. n`` (e.g. ``"213"``).  The product
    ``p * q`` applies ``q`` first: ``(p*q)(x) = p(q(x))``.
    """
    if n < 1:
        raise ValidationError("symmetric(n) needs n >= 1")
    if n > MAX_SYMMETRIC_DEGREE or math.factorial(n) > MAX_ORDER:
        raise SizeLimitExceeded(f"symmetric({n}) has order {math.factorial(n)}, over the limit")
    perms = list(itertools.permutations(range(n)))
    index = {p: k for k, p in enumerate(perms)}
    table = [[index[tuple(p[q[x]] for x in range(n))] for q in perms] for p in perms]
    labels = ["".join(str(x + 1) for x in p) for p in perms]
    return build_from_table(table, labels=labels)


def construct_named(name: str, n: int) -> FiniteGroup:
    """Dispatch on ``"cyclic"``, ``"dihedral"`` or ``"symmetric"``."""
    constructors = {"cyclic": cyclic, "dihedral": dihedral, "symmetric": symmetric}
    try:
        return constructors[name](n)
    except KeyError:
        raise ValidationError(f"unknown group family {name!r}") from None


def direct_product(a: FiniteGroup, b: FiniteGroup) -> FiniteGroup:
    """Componentwise product; the pair (x, y) has index ``x * |B| + y``."""
    n = a.order * b.order
    if n > MAX_ORDER:
        raise SizeLimitExceeded(f"product of order {n} exceeds the limit {MAX_ORDER}")
    nb = b.order
    table = [[a.table[x1][x2] * nb + b.table[y1][y2]
              for x2 in range(a.order) for y2 in range(nb)]
             for x1 in range(a.order) for y1 in range(nb)]
    labels = [f"({a.labels[x]},{b.labels[y]})" for x in range(a.order) for y in range(nb)]
    # both factors are groups, so the product is one as well
    return build_from_table(table, labels=labels, check_associativity=False)


def is_abelian(group: FiniteGroup) -> bool:
    return group.abelian


@dataclass(frozen=True, eq=False)
class SubgroupRef:
    """A subgroup of ``parent`` given by its strictly increasing member indices."""

    parent: FiniteGroup
    members: tuple[int, ...]

    def __eq__(self, other):
        if not isinstance(other, SubgroupRef):
            return NotImplemented
        return self.members == other.members and self.parent == other.parent

    def __hash__(self):
        return hash(self.members)

    def __contains__(self, g: int) -> bool:
        return g in self._member_set

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    @property
    def order(self) -> int:
        return len(self.members)

    @cached_property
    def _member_set(self) -> frozenset[int]:
        return frozenset(self.members)

    def __repr__(self):
        return f"SubgroupRef(order={self.order} in group of order {self.parent.order})"


def subgroup_from_members(group: FiniteGroup, members: Iterable[int]) -> SubgroupRef:
    """Wrap an explicit member set, checking that it is a subgroup."""
    ms = sorted(set(int(g) for g in members))
    for g in ms:
        if not 0 <= g < group.order:
            raise ValidationError(f"member {g} is not an element index")
    s = set(ms)
    if group.identity not in s:
        raise NotASubgroup("member set does not contain the identity")
    for g in ms:
        if group.inverses[g] not in s:
            raise NotASubgroup(f"member set is not closed under inverse at {g}")
        for h in ms:
            if group.table[g][h] not in s:
                raise NotASubgroup(f"member set is not closed under product at ({g},{h})")
    return SubgroupRef(group, tuple(ms))


def subgroup_closure(group: FiniteGroup, generators: Iterable[int]) -> SubgroupRef:
    """Smallest subgroup containing ``generators``."""
    gens = [int(g) for g in generators]
    for g in gens:
        if not 0 <= g < group.order:
            raise ValidationError(f"generator {g} is not an element index")
    members = {group.identity}
    frontier = [group.identity]
    # in a finite group, closure under right multiplication by the
    # generators already gives inverses
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = group.table[x][g]
                if y not in members:
                    members.add(y)
                    nxt.append(y)
        frontier = nxt
    return SubgroupRef(group, tuple(sorted(members)))


def whole_group(group: FiniteGroup) -> SubgroupRef:
    return SubgroupRef(group, tuple(range(group.order)))


def trivial_subgroup(group: FiniteGroup) -> SubgroupRef:
    return SubgroupRef(group, (group.identity,))


def commutator_subgroup(h: SubgroupRef) -> SubgroupRef:
    """[H, H], generated by all h1 h2 h1^-1 h2^-1."""
    g = h.parent
    t, inv = g.table, g.inverses
    comms = {t[t[t[a][b]][inv[a]]][inv[b]] for a in h.members for b in h.members}
    return subgroup_closure(g, sorted(comms))


def is_normal(h: SubgroupRef, k: SubgroupRef) -> bool:
    """True iff ``k`` is normal in ``h``."""
    if h.parent != k.parent:
        raise NotASubset("subgroups live in different groups")
    if not set(k.members) <= set(h.members):
        raise NotASubset("kernel is not contained in the subgroup")
    t, inv = h.parent.table, h.parent.inverses
    return all(t[t[x][y]][inv[x]] in k for x in h.members for y in k.members)


@dataclass(frozen=True, eq=False)
class QuotientGroup:
    """H/K with its own Cayley table; coset 0 is the class of the identity."""

    parent_subgroup: SubgroupRef
    kernel: SubgroupRef
    cosets: FiniteGroup
    class_of: dict[int, int]

    @property
    def order(self) -> int:
        return self.cosets.order

    def coset_members(self, c: int) -> tuple[int, ...]:
        return tuple(h for h in self.parent_subgroup.members if self.class_of[h] == c)

    def __repr__(self):
        return (f"QuotientGroup(|H|={self.parent_subgroup.order}, "
                f"|K|={self.kernel.order}, |H/K|={self.order})")


def quotient_group(h: SubgroupRef, k: SubgroupRef, prefix: str = "K") -> QuotientGroup:
    """Build H/K.  Cosets are numbered by first appearance, identity's first;
    coset ``c`` is labelled ``f"{prefix}{c}"``."""
    if not is_normal(h, k):
        raise NotNormal("kernel is not normal in the subgroup")
    g = h.parent
    t = g.table
    class_of: dict[int, int] = {}
    reps: list[int] = []
    for x in (g.identity,) + h.members:
        if x in class_of:
            continue
        c = len(reps)
        reps.append(x)
        for y in k.members:
            class_of[t[x][y]] = c
    try:
        table = [[class_of[t[a][b]] for b in reps] for a in reps]
    except KeyError:
        raise NotASubgroup("subgroup is not closed under the group product") from None
    cosets = build_from_table(table, labels=[f"{prefix}{c}" for c in range(len(reps))])
    return QuotientGroup(h, k, cosets, class_of)
