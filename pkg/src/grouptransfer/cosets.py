"""Left and right coset decompositions of G by a subgroup H.

A left system holds representatives ``t_1 .. t_m`` with ``G = t_1 H u ... u t_m H``
and, for every g, the position of its coset (``rep_of``) and the H-part of
its factorisation ``g = t * h`` (``factor_of``).  Right systems are the mirror
image, ``g = h * u``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import InvalidRepresentatives, ValidationError, WrongSide
from .groups import FiniteGroup, SubgroupRef

LEFT = "left"
RIGHT = "right"


@dataclass(frozen=True, eq=False)
class CosetSystem:
    side: str
    group: FiniteGroup
    subgroup: SubgroupRef
    reps: tuple[int, ...]
    rep_of: tuple[int, ...]
    factor_of: tuple[int, ...]

    @property
    def index(self) -> int:
        return len(self.reps)

    def __eq__(self, other):
        if not isinstance(other, CosetSystem):
            return NotImplemented
        return (self.side == other.side and self.reps == other.reps
                and self.rep_of == other.rep_of and self.factor_of == other.factor_of
                and self.subgroup == other.subgroup)

    def __hash__(self):
        return hash((self.side, self.reps))

    def coset(self, i: int) -> tuple[int, ...]:
        """Members of the i-th coset, in increasing index order."""
        return tuple(g for g in range(self.group.order) if self.rep_of[g] == i)

    def __repr__(self):
        return f"CosetSystem({self.side}, m={self.index}, reps={list(self.reps)})"


@dataclass(frozen=True)
class CosetPermutation:
    mapping: tuple[int, ...]
    sign: int

    @classmethod
    def from_mapping(cls, mapping: Sequence[int]) -> CosetPermutation:
        mapping = tuple(mapping)
        if sorted(mapping) != list(range(len(mapping))):
            raise InvalidRepresentatives(f"coset action {mapping} is not a permutation")
        return cls(mapping, permutation_sign(mapping))


def permutation_sign(mapping: Sequence[int]) -> int:
    """Parity of a permutation of ``range(len(mapping))`` via its cycle count."""
    seen = [False] * len(mapping)
    cycles = 0
    for start in range(len(mapping)):
        if seen[start]:
            continue
        cycles += 1
        j = start
        while not seen[j]:
            seen[j] = True
            j = mapping[j]
    return -1 if (len(mapping) - cycles) % 2 else 1


def _coset_of(group: FiniteGroup, subgroup: SubgroupRef, side: str, g: int) -> list[int]:
    t = group.table
    if side == LEFT:
        return sorted({t[g][h] for h in subgroup.members})
    return sorted({t[h][g] for h in subgroup.members})


def _factors(group: FiniteGroup, side: str, reps: Sequence[int],
             rep_of: Sequence[int]) -> tuple[int, ...]:
    t, inv = group.table, group.inverses
    if side == LEFT:
        return tuple(t[inv[reps[rep_of[g]]]][g] for g in range(group.order))
    return tuple(t[g][inv[reps[rep_of[g]]]] for g in range(group.order))


def _check_side(side: str) -> None:
    if side not in (LEFT, RIGHT):
        raise ValidationError(f"side must be 'left' or 'right', not {side!r}")


def decompose(group: FiniteGroup, subgroup: SubgroupRef, side: str = LEFT,
              rep_choice: Optional[Sequence[int]] = None) -> CosetSystem:
    """Split ``group`` into cosets of ``subgroup``.

    Without ``rep_choice`` the cosets are discovered by scanning element
    indices upward, starting from the identity, and each coset is
    represented by its smallest index (the identity for H itself).  With
    ``rep_choice`` the cosets are listed in the order of the given
    representatives, which must hit every coset exactly once.
    """
    _check_side(side)
    n = group.order
    if subgroup.parent != group:
        raise ValidationError("subgroup does not belong to this group")
    rep_of = [-1] * n
    reps: list[int] = []

    def claim(r):
        pos = len(reps)
        for x in _coset_of(group, subgroup, side, r):
            if rep_of[x] != -1:
                raise InvalidRepresentatives(
                    f"element {r} lies in coset {rep_of[x]} already represented by {reps[rep_of[x]]}")
            rep_of[x] = pos
        reps.append(r)

    if rep_choice is None:
        for g in [group.identity] + list(range(n)):
            if rep_of[g] == -1:
                claim(g)
    else:
        for r in rep_choice:
            if not 0 <= int(r) < n:
                raise InvalidRepresentatives(f"{r} is not an element index")
            claim(int(r))
        missing = [g for g in range(n) if rep_of[g] == -1]
        if missing:
            raise InvalidRepresentatives(f"no representative for the coset of {missing[0]}")

    if len(reps) * subgroup.order != n:
        raise InvalidRepresentatives("cosets do not partition the group evenly")
    return CosetSystem(side, group, subgroup, tuple(reps), tuple(rep_of),
                       _factors(group, side, reps, rep_of))


def representative(cs: CosetSystem, g: int) -> int:
    """The representative of g's coset (bar g on the left, tilde g on the right)."""
    return cs.reps[cs.rep_of[g]]


def h_factor(cs: CosetSystem, g: int) -> int:
    """(bar g)^-1 g for left systems, g (tilde g)^-1 for right ones."""
    return cs.factor_of[g]


def coset_permutation(cs: CosetSystem, g: int) -> CosetPermutation:
    """The permutation g induces on coset positions.

    Left systems: ``j -> rep_of[g t_j]``, which composes as
    ``mapping(gh) = mapping(g) o mapping(h)``.  Right systems:
    ``j -> rep_of[u_j g]``, composing as ``mapping(gh) = mapping(h) o mapping(g)``.
    Either way the sign is multiplicative.
    """
    t = cs.group.table
    if cs.side == LEFT:
        mapping = [cs.rep_of[t[g][r]] for r in cs.reps]
    else:
        mapping = [cs.rep_of[t[r][g]] for r in cs.reps]
    return CosetPermutation.from_mapping(mapping)


def resample(cs: CosetSystem, rng_seed: int) -> CosetSystem:
    """Redraw every representative uniformly from its coset.

    Uses ``random.Random(rng_seed)`` and visits the cosets in order, calling
    ``choice`` on each coset's members sorted by index.  Coset positions
    (``rep_of``) are kept as they are.
    """
    rng = random.Random(rng_seed)
    members: list[list[int]] = [[] for _ in cs.reps]
    for g, pos in enumerate(cs.rep_of):
        members[pos].append(g)
    reps = tuple(rng.choice(ms) for ms in members)
    return CosetSystem(cs.side, cs.group, cs.subgroup, reps, cs.rep_of,
                       _factors(cs.group, cs.side, reps, cs.rep_of))


def inverse_reps(cs: CosetSystem) -> CosetSystem:
    """From left representatives T build the right system on T^-1, same order."""
    if cs.side != LEFT:
        raise WrongSide("inverse_reps needs a left coset system")
    inv = cs.group.inverses
    return decompose(cs.group, cs.subgroup, RIGHT, [inv[t] for t in cs.reps])


def validate(cs: CosetSystem) -> None:
    """Re-derive the decomposition from scratch and compare with ``cs``."""
    fresh = decompose(cs.group, cs.subgroup, cs.side, cs.reps)
    if fresh.rep_of != cs.rep_of or fresh.factor_of != cs.factor_of:
        raise InvalidRepresentatives("stored coset lookup disagrees with the group table")
