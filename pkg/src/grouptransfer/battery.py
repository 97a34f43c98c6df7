"""The fixed collection of (G, H, K) triples the property suite runs on."""
from __future__ import annotations

from dataclasses import dataclass

from .groups import (
    FiniteGroup,
    SubgroupRef,
    build_from_table,
    commutator_subgroup,
    cyclic,
    dihedral,
    direct_product,
    subgroup_closure,
    subgroup_from_members,
    symmetric,
    trivial_subgroup,
    whole_group,
)


@dataclass(frozen=True)
class BatteryMember:
    name: str
    group: FiniteGroup
    subgroup: SubgroupRef
    kernel: SubgroupRef

    @property
    def index(self) -> int:
        return self.group.order // self.subgroup.order


# unit quaternions 1, i, j, k as 0..3: (product unit, sign flip)
_UNIT_MUL = {
    (0, 0): (0, 0), (0, 1): (1, 0), (0, 2): (2, 0), (0, 3): (3, 0),
    (1, 0): (1, 0), (1, 1): (0, 1), (1, 2): (3, 0), (1, 3): (2, 1),
    (2, 0): (2, 0), (2, 1): (3, 1), (2, 2): (0, 1), (2, 3): (1, 0),
    (3, 0): (3, 0), (3, 1): (2, 0), (3, 2): (1, 1), (3, 3): (0, 1),
}


def quaternion() -> FiniteGroup:
    """Q8 with elements s*u for s in {+1, -1}, u in {1, i, j, k}.

    Index ``4*s + u``; labels ``e i j k z zi zj zk`` where z = -1.
    """
    table = []
    for s1 in range(2):
        for u1 in range(4):
            row = []
            for s2 in range(2):
                for u2 in range(4):
                    u, flip = _UNIT_MUL[(u1, u2)]
                    row.append(4 * ((s1 + s2 + flip) % 2) + u)
            table.append(row)
    return build_from_table(table, labels=["e", "i", "j", "k", "z", "zi", "zj", "zk"])


def _gens(group: FiniteGroup, *labels: str) -> SubgroupRef:
    return subgroup_closure(group, [group.index_of(s) for s in labels])


def battery() -> list[BatteryMember]:
    out = []

    z2 = cyclic(2)
    out.append(BatteryMember("Z2 > Z2 / 1", z2, whole_group(z2), trivial_subgroup(z2)))

    z4 = cyclic(4)
    out.append(BatteryMember("Z4 > {0,2} / 1", z4, subgroup_from_members(z4, [0, 2]),
                             trivial_subgroup(z4)))

    z6 = cyclic(6)
    out.append(BatteryMember("Z6 > {0,3} / 1", z6, subgroup_from_members(z6, [0, 3]),
                             trivial_subgroup(z6)))

    s3 = symmetric(3)
    a3 = commutator_subgroup(whole_group(s3))
    out.append(BatteryMember("S3 > A3 / 1", s3, a3, trivial_subgroup(s3)))
    h = _gens(s3, "213")
    out.append(BatteryMember("S3 > <(12)> / 1", s3, h, trivial_subgroup(s3)))

    d4 = dihedral(4)
    center = _gens(d4, "a2")
    out.append(BatteryMember("D4 > Z(D4) / [H,H]", d4, center, commutator_subgroup(center)))
    rot = _gens(d4, "a")
    out.append(BatteryMember("D4 > <a> / [H,H]", d4, rot, commutator_subgroup(rot)))

    q8 = quaternion()
    qi = _gens(q8, "i")
    out.append(BatteryMember("Q8 > <i> / 1", q8, qi, trivial_subgroup(q8)))

    g = direct_product(cyclic(2), dihedral(3))
    d3 = _gens(g, "(0,a)", "(0,b)")
    out.append(BatteryMember("Z2xD3 > D3 / [D3,D3]", g, d3, commutator_subgroup(d3)))

    s4 = symmetric(4)
    a4 = commutator_subgroup(whole_group(s4))
    out.append(BatteryMember("S4 > A4 / V4", s4, a4, commutator_subgroup(a4)))
    return out
