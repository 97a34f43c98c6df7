import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grouptransfer import (
    AlgebraElement,
    change_of_basis,
    cyclic,
    decompose,
    det_cofactor,
    det_commutative,
    dihedral,
    inverse_reps,
    left_regular_rep,
    mat_mul,
    parse_element,
    psi_matrix,
    quotient_group,
    resample,
    right_regular_rep,
)
from grouptransfer.algebra import random_element
from grouptransfer.cosets import LEFT, RIGHT, coset_permutation
from grouptransfer.errors import (
    CarrierMismatch,
    DimMismatch,
    NonAbelianCarrier,
    SystemMismatch,
    WrongSide,
)
from grouptransfer.groups import trivial_subgroup
from grouptransfer.matrices import identity_matrix, matrix_from_rows, render_matrix
from grouptransfer.rings import F2, QQ, ZZ


def elem(ring, group, g, c=1):
    return AlgebraElement(ring, group, {g: c})


def monomial_oracle(cs, g, ring):
    """L_T(g) built from the bar map alone: column j has (bar(g t_j))^-1 g t_j
    at row rep_of[g t_j]."""
    G = cs.group
    t, inv = G.table, G.inverses
    m = cs.index
    zero = AlgebraElement.zero(ring, G)
    rows = [[zero] * m for _ in range(m)]
    for j, tj in enumerate(cs.reps):
        gt = t[g][tj]
        i = cs.rep_of[gt]
        rows[i][j] = elem(ring, G, t[inv[cs.reps[i]]][gt])
    return rows


def test_identity_maps_to_identity(members):
    for m in members:
        cs = decompose(m.group, m.subgroup)
        lt = left_regular_rep(cs, AlgebraElement.one(QQ, m.group))
        assert lt == identity_matrix(QQ, m.group, cs.index)
        rt = right_regular_rep(decompose(m.group, m.subgroup, RIGHT), AlgebraElement.one(QQ, m.group))
        assert rt == identity_matrix(QQ, m.group, cs.index)


def test_z2_circulant():
    g = cyclic(2)
    cs = decompose(g, trivial_subgroup(g))
    x, y = Fraction(3, 7), Fraction(-2)
    lt = left_regular_rep(cs, AlgebraElement(QQ, g, {0: x, 1: y}))
    assert [[e.terms for e in row] for row in lt.entries] == [[{0: x}, {0: y}], [{0: y}, {0: x}]]


def test_z2xd3_left_rep_is_diagonal(z2xd3):
    g, h, k, q = z2xd3
    cs = decompose(g, h)
    assert [g.labels[r] for r in cs.reps] == ["(0,e)", "(1,e)"]
    alpha = parse_element("(0,e) + (0,a) + (0,a2)", QQ, g)
    lt = left_regular_rep(cs, alpha)
    assert lt.entries[0][0] == alpha == lt.entries[1][1]
    assert lt.entries[0][1].is_zero() and lt.entries[1][0].is_zero()
    p = psi_matrix(q, lt)
    three = AlgebraElement(QQ, q.cosets, {0: 3})
    assert p.entries[0][0] == three == p.entries[1][1]
    assert p.entries[0][1].is_zero()


def test_right_rep_z4(z4_setup):
    g, h, *_ = z4_setup
    cs = decompose(g, h, RIGHT, [0, 3])
    rt = right_regular_rep(cs, elem(QQ, g, 1))
    # chi(u_i + 1 - u_j) for u = (0, 3)
    assert rt.nonzero_pattern() == [[False, True], [True, False]]
    assert rt.entries[0][1] == elem(QQ, g, 2)
    assert rt.entries[1][0] == elem(QQ, g, 0)


def test_side_and_carrier_errors(z4_setup):
    g, h, _, q, cs = z4_setup
    with pytest.raises(WrongSide):
        right_regular_rep(cs, AlgebraElement.one(QQ, g))
    with pytest.raises(WrongSide):
        left_regular_rep(inverse_reps(cs), AlgebraElement.one(QQ, g))
    with pytest.raises(CarrierMismatch):
        left_regular_rep(cs, AlgebraElement.one(QQ, cyclic(5)))


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_monomial_structure(members, data):
    m = data.draw(st.sampled_from(members))
    cs = resample(decompose(m.group, m.subgroup), data.draw(st.integers(0, 10 ** 6)))
    g = data.draw(st.integers(0, m.group.order - 1))
    lt = left_regular_rep(cs, elem(QQ, m.group, g))
    assert [list(r) for r in lt.entries] == monomial_oracle(cs, g, QQ)
    perm = coset_permutation(cs, g).mapping
    for j in range(cs.index):
        nonzero = [i for i in range(cs.index) if not lt.entries[i][j].is_zero()]
        assert nonzero == [perm[j]]
        entry = lt.entries[perm[j]][j]
        assert len(entry.terms) == 1 and list(entry.terms.values()) == [1]
        assert list(entry.terms)[0] in m.subgroup


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_left_rep_is_algebra_homomorphism(members, data):
    m = data.draw(st.sampled_from(members))
    rng = random.Random(data.draw(st.integers(0, 10 ** 9)))
    cs = resample(decompose(m.group, m.subgroup), rng.randrange(1000))
    a, b = random_element(QQ, m.group, rng), random_element(QQ, m.group, rng)
    lab = left_regular_rep(cs, a * b)
    assert lab == mat_mul(left_regular_rep(cs, a), left_regular_rep(cs, b))
    assert left_regular_rep(cs, a + b) == matrix_from_rows(
        [[x + y for x, y in zip(r1, r2)] for r1, r2 in
         zip(left_regular_rep(cs, a).entries, left_regular_rep(cs, b).entries)],
        QQ, m.group)
    for row in lab.entries:
        for x in row:
            assert all(h in m.subgroup for h in x.terms)
    u = resample(decompose(m.group, m.subgroup, RIGHT), rng.randrange(1000))
    assert right_regular_rep(u, a * b) == mat_mul(right_regular_rep(u, a), right_regular_rep(u, b))
    # psi respects products
    q = quotient_group(m.subgroup, m.kernel)
    la, lb = left_regular_rep(cs, a), left_regular_rep(cs, b)
    assert psi_matrix(q, mat_mul(la, lb)) == mat_mul(psi_matrix(q, la), psi_matrix(q, lb))


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_right_rep_over_inverse_reps_equals_left_rep(members, data):
    m = data.draw(st.sampled_from(members))
    rng = random.Random(data.draw(st.integers(0, 10 ** 9)))
    cs = resample(decompose(m.group, m.subgroup), rng.randrange(1000))
    a = random_element(QQ, m.group, rng, max_terms=6)
    assert right_regular_rep(inverse_reps(cs), a) == left_regular_rep(cs, a)


def test_psi_examples(z2xd3, z4_setup):
    g, h, k, q = z2xd3
    eye = identity_matrix(QQ, g, 2, within=h)
    assert psi_matrix(q, eye) == identity_matrix(QQ, q.cosets, 2)
    whole = quotient_group(h, h)
    cs = decompose(g, h)
    alpha = parse_element("2*(0,a) + (1,b) - (0,b)", QQ, g)
    p = psi_matrix(whole, left_regular_rep(cs, alpha))
    for row, src in zip(p.entries, left_regular_rep(cs, alpha).entries):
        for x, y in zip(row, src):
            assert x == AlgebraElement(QQ, whole.cosets, {0: y.coefficient_sum()})
    _, _, _, qz, csz = z4_setup
    with pytest.raises(CarrierMismatch):
        psi_matrix(qz, left_regular_rep(cs, alpha))


def test_mat_mul_basics(z4_setup):
    g, h, _, _, cs = z4_setup
    a = left_regular_rep(cs, parse_element("2*1 + 3", QQ, g))
    assert mat_mul(a, identity_matrix(QQ, g, 2)) == a
    with pytest.raises(DimMismatch):
        mat_mul(a, identity_matrix(QQ, g, 3))
    with pytest.raises(CarrierMismatch):
        mat_mul(a, identity_matrix(ZZ, g, 2))
    # monomial times monomial is monomial with the composed permutation
    p1, p2 = left_regular_rep(cs, elem(QQ, g, 1)), left_regular_rep(cs, elem(QQ, g, 3))
    prod = mat_mul(p1, p2)
    assert prod.nonzero_pattern() == [[True, False], [False, True]]


def test_det_small_cases():
    z2 = cyclic(2)
    x = AlgebraElement(QQ, z2, {0: 5, 1: -1})
    m1 = matrix_from_rows([[x]], QQ, z2)
    assert det_commutative(m1) == x == det_cofactor(m1)
    assert det_commutative(identity_matrix(QQ, z2, 3)) == AlgebraElement.one(QQ, z2)
    xv, yv = Fraction(3, 2), Fraction(-4, 5)
    c0, c1 = AlgebraElement(QQ, z2, {0: xv}), AlgebraElement(QQ, z2, {1: yv})
    m2 = matrix_from_rows([[c0, c1], [c1, c0]], QQ, z2)
    # x^2 c0^2 - y^2 c1^2 with c1^2 = c0
    assert det_commutative(m2) == AlgebraElement(QQ, z2, {0: xv * xv - yv * yv})


def test_det_rejects_nonabelian_carrier():
    d3 = dihedral(3)
    with pytest.raises(NonAbelianCarrier):
        det_commutative(identity_matrix(QQ, d3, 2))
    with pytest.raises(NonAbelianCarrier):
        det_cofactor(identity_matrix(QQ, d3, 2))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5), st.sampled_from([QQ, ZZ, F2]), st.integers(0, 10 ** 9))
def test_leibniz_matches_cofactor(dim, ring, seed):
    rng = random.Random(seed)
    carrier = rng.choice([cyclic(2), cyclic(3), cyclic(4)])
    rows = [[random_element(ring, carrier, rng) if rng.random() < 0.8
             else AlgebraElement.zero(ring, carrier) for _ in range(dim)] for _ in range(dim)]
    mat = matrix_from_rows(rows, ring, carrier)
    assert det_commutative(mat) == det_cofactor(mat)


def test_leibniz_matches_cofactor_dim6():
    rng = random.Random(6)
    carrier = cyclic(3)
    for _ in range(3):
        rows = [[random_element(QQ, carrier, rng) for _ in range(6)] for _ in range(6)]
        mat = matrix_from_rows(rows, QQ, carrier)
        assert det_commutative(mat) == det_cofactor(mat)


def test_change_of_basis_examples(z4_setup):
    g, h, _, _, cs = z4_setup
    assert change_of_basis(cs, cs) == identity_matrix(QQ, g, 2)
    other = decompose(g, h, LEFT, [2, 1])
    p = change_of_basis(cs, other)
    assert p.entries[0][0] == elem(QQ, g, 2) and p.entries[1][1] == elem(QQ, g, 0)
    assert p.entries[0][1].is_zero() and p.entries[1][0].is_zero()
    with pytest.raises(SystemMismatch):
        change_of_basis(cs, inverse_reps(cs))


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_conjugation_by_change_of_basis(members, data):
    m = data.draw(st.sampled_from(members))
    rng = random.Random(data.draw(st.integers(0, 10 ** 9)))
    t = decompose(m.group, m.subgroup)
    t2 = resample(t, rng.randrange(10 ** 6))
    p, p_inv = change_of_basis(t, t2), change_of_basis(t2, t)
    assert mat_mul(p, p_inv) == identity_matrix(QQ, m.group, t.index)
    assert mat_mul(p_inv, p) == identity_matrix(QQ, m.group, t.index)
    a = random_element(QQ, m.group, rng)
    assert left_regular_rep(t, a) == mat_mul(mat_mul(p_inv, left_regular_rep(t2, a)), p)
    q = quotient_group(m.subgroup, m.kernel)
    assert det_commutative(psi_matrix(q, left_regular_rep(t, a))) == \
        det_commutative(psi_matrix(q, left_regular_rep(t2, a)))


def test_render_matrix(z4_setup):
    g, h, _, _, cs = z4_setup
    # column 0: 1 + 0 = 1 lies in coset 1 with factor 0; column 1: 1 + 1 = 2 in coset 0
    assert render_matrix(left_regular_rep(cs, elem(QQ, g, 1))) == "[[0, 1*2], [1*0, 0]]"
