import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grouptransfer import (
    coset_permutation,
    cyclic,
    decompose,
    h_factor,
    inverse_reps,
    representative,
    resample,
)
from grouptransfer.cosets import LEFT, RIGHT, permutation_sign, validate
from grouptransfer.errors import InvalidRepresentatives, WrongSide
from grouptransfer.groups import trivial_subgroup, whole_group


def brute_cosets(group, h, side):
    t = group.table
    out = set()
    for g in range(group.order):
        if side == LEFT:
            out.add(frozenset(t[g][x] for x in h.members))
        else:
            out.add(frozenset(t[x][g] for x in h.members))
    return out


def inversion_count_sign(mapping):
    n = len(mapping)
    inv = sum(1 for i in range(n) for j in range(i + 1, n) if mapping[i] > mapping[j])
    return -1 if inv % 2 else 1


def test_whole_group_single_coset():
    g = cyclic(5)
    cs = decompose(g, whole_group(g))
    assert cs.index == 1 and cs.reps == (g.identity,)


def test_z4_mod_02(z4_setup):
    g, h, _, _, cs = z4_setup
    assert brute_cosets(g, h, LEFT) == {frozenset({0, 2}), frozenset({1, 3})}
    assert cs.reps == (0, 1)
    assert cs.rep_of == (0, 1, 0, 1)
    assert representative(cs, 3) == 1
    assert h_factor(cs, 3) == 2
    assert h_factor(cs, 1) == 0
    assert h_factor(cs, 2) == 2


def test_z2_over_trivial():
    g = cyclic(2)
    cs = decompose(g, trivial_subgroup(g))
    assert cs.reps == (0, 1) and cs.index == 2


def test_explicit_representatives(z4_setup):
    g, h, *_ = z4_setup
    cs = decompose(g, h, LEFT, [2, 1])
    assert cs.reps == (2, 1) and cs.rep_of == (0, 1, 0, 1)
    assert cs.factor_of == (2, 0, 0, 2)
    with pytest.raises(InvalidRepresentatives):
        decompose(g, h, LEFT, [0, 2])
    with pytest.raises(InvalidRepresentatives):
        decompose(g, h, LEFT, [0])


def test_coset_permutation_examples(z4_setup):
    *_, cs = z4_setup
    p = coset_permutation(cs, 0)
    assert p.mapping == (0, 1) and p.sign == 1
    p = coset_permutation(cs, 1)
    assert p.mapping == (1, 0) and p.sign == -1
    p = coset_permutation(cs, 2)
    assert p.mapping == (0, 1) and p.sign == 1


def test_permutation_sign_matches_inversion_count():
    import itertools
    for n in range(1, 6):
        for perm in itertools.permutations(range(n)):
            assert permutation_sign(perm) == inversion_count_sign(perm)


def test_resample(z4_setup):
    g, h, _, _, cs = z4_setup
    outcomes = {resample(cs, s).reps for s in range(40)}
    assert outcomes == {(0, 1), (0, 3), (2, 1), (2, 3)}
    for s in range(10):
        r = resample(cs, s)
        assert r.rep_of == cs.rep_of
        assert r == resample(cs, s)
    g5 = cyclic(5)
    base = decompose(g5, trivial_subgroup(g5))
    assert resample(base, 123) == base


def test_inverse_reps(z4_setup):
    g, h, _, _, cs = z4_setup
    right = inverse_reps(cs)
    assert right.side == RIGHT and right.reps == (0, 3)
    with pytest.raises(WrongSide):
        inverse_reps(right)
    whole = decompose(g, whole_group(g))
    assert inverse_reps(whole).reps == (g.identity,)


def test_inverse_reps_on_battery(members):
    for m in members:
        left = decompose(m.group, m.subgroup, LEFT)
        for seed in range(5):
            right = inverse_reps(resample(left, seed))
            validate(right)
            cosets = {frozenset(right.coset(i)) for i in range(right.index)}
            assert cosets == brute_cosets(m.group, m.subgroup, RIGHT)


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_coset_system_invariants(members, data):
    m = data.draw(st.sampled_from(members))
    side = data.draw(st.sampled_from([LEFT, RIGHT]))
    cs = resample(decompose(m.group, m.subgroup, side), data.draw(st.integers(0, 10 ** 6)))
    g = m.group
    t = g.table
    sizes = [len(cs.coset(i)) for i in range(cs.index)]
    assert sum(sizes) == g.order and set(sizes) == {m.subgroup.order}
    assert all(cs.rep_of[r] == i for i, r in enumerate(cs.reps))
    for x in range(g.order):
        f = cs.factor_of[x]
        assert f in m.subgroup
        r = cs.reps[cs.rep_of[x]]
        assert (t[r][f] if side == LEFT else t[f][r]) == x

    a = data.draw(st.integers(0, g.order - 1))
    b = data.draw(st.integers(0, g.order - 1))
    pa, pb = coset_permutation(cs, a).mapping, coset_permutation(cs, b).mapping
    pab = coset_permutation(cs, t[a][b])
    if side == LEFT:
        assert pab.mapping == tuple(pa[pb[j]] for j in range(cs.index))
    else:
        assert pab.mapping == tuple(pb[pa[j]] for j in range(cs.index))
    assert pab.sign == coset_permutation(cs, a).sign * coset_permutation(cs, b).sign
