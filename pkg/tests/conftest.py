from pathlib import Path

import pytest

from grouptransfer import cyclic, decompose, dihedral, direct_product, subgroup_closure
from grouptransfer.battery import battery
from grouptransfer.groups import commutator_subgroup, quotient_group, subgroup_from_members

GROUP_FILES = Path(__file__).resolve().parent.parent / "groups"

# filled by test_acceptance, printed at the end of the run
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])


@pytest.fixture(scope="session")
def members():
    return battery()


@pytest.fixture(scope="session")
def z4_setup():
    g = cyclic(4)
    h = subgroup_from_members(g, [0, 2])
    k = subgroup_from_members(g, [0])
    return g, h, k, quotient_group(h, k), decompose(g, h)


@pytest.fixture(scope="session")
def z2xd3():
    """G = Z/2 x D3, H = D3, K = [D3, D3]."""
    g = direct_product(cyclic(2), dihedral(3))
    h = subgroup_closure(g, [g.index_of("(0,a)"), g.index_of("(0,b)")])
    k = commutator_subgroup(h)
    return g, h, k, quotient_group(h, k)
