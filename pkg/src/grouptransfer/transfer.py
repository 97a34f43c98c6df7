"""Transfers G -> H/K, the determinant Det = det . psi . L_T, and the checker
that ties the two together on a concrete (G, H, K)."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from .algebra import AlgebraElement, random_element
from .cosets import (
    LEFT,
    RIGHT,
    CosetSystem,
    coset_permutation,
    decompose,
    inverse_reps,
    representative,
    resample,
)
from .errors import (
    CarrierMismatch,
    GroupTheoryError,
    NonAbelianQuotient,
    SupportOutsideSubgroup,
    WrongSide,
)
from .groups import FiniteGroup, QuotientGroup, SubgroupRef, quotient_group
from .matrices import (
    change_of_basis,
    det_commutative,
    left_regular_rep,
    mat_mul,
    psi_matrix,
    right_regular_rep,
)
from .rings import F2, QQ, CoefficientRing


@dataclass(frozen=True)
class TransferValue:
    """A class in H/K together with the sign of the coset permutation."""

    quotient: QuotientGroup = field(compare=False)
    coset: int
    sign: int

    @property
    def label(self) -> str:
        return self.quotient.cosets.labels[self.coset]

    def as_element(self, ring: CoefficientRing, signed: bool = True) -> AlgebraElement:
        """sign * 1 * (coset) in R(H/K); with ``signed=False`` the sign is dropped."""
        c = ring.one if not signed or self.sign > 0 else ring.negate(ring.one)
        return AlgebraElement(ring, self.quotient.cosets, {self.coset: c})

    def __str__(self):
        return f"{self.label} (sign {self.sign:+d})"


def _class(q: QuotientGroup, h: int) -> int:
    try:
        return q.class_of[h]
    except KeyError:
        g = q.parent_subgroup.parent
        raise SupportOutsideSubgroup(f"{g.labels[h]} is not in H") from None


def _check_system(q: QuotientGroup, cs: CosetSystem, side: str) -> None:
    if cs.side != side:
        raise WrongSide(f"expected a {side} coset system")
    if cs.subgroup != q.parent_subgroup:
        raise CarrierMismatch("coset system and quotient use different subgroups H")


def left_transfer(q: QuotientGroup, cs: CosetSystem, g: int) -> TransferValue:
    """prod_i ((bar(g t_i))^-1 g t_i) K, multiplied in the order i = 1 .. m."""
    _check_system(q, cs, LEFT)
    t, inv = cs.group.table, cs.group.inverses
    qt = q.cosets.table
    acc = q.cosets.identity
    for ti in cs.reps:
        gt = t[g][ti]
        acc = qt[acc][_class(q, t[inv[representative(cs, gt)]][gt])]
    return TransferValue(q, acc, coset_permutation(cs, g).sign)


def right_transfer(q: QuotientGroup, cs: CosetSystem, g: int) -> TransferValue:
    """prod_i (u_i g (tilde(u_i g))^-1) K, multiplied in the order i = 1 .. m."""
    _check_system(q, cs, RIGHT)
    t, inv = cs.group.table, cs.group.inverses
    qt = q.cosets.table
    acc = q.cosets.identity
    for ui in cs.reps:
        ug = t[ui][g]
        acc = qt[acc][_class(q, t[ug][inv[representative(cs, ug)]])]
    return TransferValue(q, acc, coset_permutation(cs, g).sign)


def sign_of(cs: CosetSystem, g: int) -> int:
    return coset_permutation(cs, g).sign


def det_transfer(q: QuotientGroup, cs: CosetSystem, alpha: AlgebraElement) -> AlgebraElement:
    """Det(alpha) = det(psi(L_T(alpha))) in R(H/K)."""
    if not q.cosets.abelian:
        raise NonAbelianQuotient("H/K must be abelian for Det to be defined")
    _check_system(q, cs, LEFT)
    return det_commutative(psi_matrix(q, left_regular_rep(cs, alpha)))


# ---------------------------------------------------------------------------
# verification

CHECKS = (
    "homomorphism",
    "rep_invariance_left",
    "rep_invariance_right",
    "left_equals_right",
    "sign_multiplicative",
    "det_multiplicative",
    "det_rep_invariance",
    "left_right_rep_equality",
    "det_equals_sign_times_transfer",
    "f2_det_equals_transfer",
    "conjugation",
    "product_order_independence",
)


@dataclass
class CheckResult:
    name: str
    passed: bool
    cases: int
    counterexample: Optional[dict] = None

    def line(self, seed: int) -> str:
        status = "PASS" if self.passed else "FAIL"
        out = f"{self.name}: {status} cases={self.cases} seed={seed}"
        if self.counterexample is not None:
            body = ", ".join(f"{k}={v}" for k, v in self.counterexample.items())
            out += f" counterexample: {body}"
        return out


@dataclass
class VerificationReport:
    checks: dict[str, CheckResult]
    seed: int
    samples: int
    resamples: int
    sign_rep_invariant: bool

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks.values())

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks.values() if not c.passed]

    def render(self) -> str:
        lines = [c.line(self.seed) for c in self.checks.values()]
        lines.append(f"sign_rep_invariant: {'yes' if self.sign_rep_invariant else 'no'}")
        lines.append(f"samples={self.samples} resamples={self.resamples} seed={self.seed}")
        lines.append("ALL PASS" if self.passed else f"{len(self.failures())} CHECK(S) FAILED")
        return "\n".join(lines)


def _run(name: str, cases: Iterable, predicate: Callable) -> CheckResult:
    """Evaluate ``predicate(*case)`` on each case; stop at the first failure.

    A predicate returns None on success or a dict describing the mismatch;
    library errors raised while evaluating count as failures of that case.
    """
    count = 0
    it = iter(cases)
    while True:
        try:
            case = next(it)
        except StopIteration:
            return CheckResult(name, True, count)
        except GroupTheoryError as exc:
            return CheckResult(name, False, count,
                               {"case": "setup", "error": f"{type(exc).__name__}: {exc}"})
        count += 1
        try:
            problem = predicate(*case)
        except GroupTheoryError as exc:
            problem = {"error": f"{type(exc).__name__}: {exc}"}
        if problem is not None:
            return CheckResult(name, False, count, {"case": _describe(case), **problem})


def _describe(case) -> str:
    parts = []
    for x in case:
        if isinstance(x, CosetSystem):
            parts.append(f"{x.side} reps [{' '.join(x.group.labels[r] for r in x.reps)}]")
        elif isinstance(x, AlgebraElement):
            parts.append(f"({x})")
        elif isinstance(x, _Elem):
            parts.append(x.label)
        else:
            parts.append(str(x))
    return "; ".join(parts)


@dataclass(frozen=True)
class _Elem:
    index: int
    label: str


class _Lazy:
    """Per-check setup; a failure while building it surfaces inside the check."""

    def __init__(self, build):
        self._build = build
        self._value = None
        self._done = False

    def get(self):
        if not self._done:
            self._value = self._build()
            self._done = True
        return self._value


def verify_properties(group: FiniteGroup, h: SubgroupRef, k: SubgroupRef, seed: int = 0,
                      samples: int = 100, resamples: int = 20, ring: CoefficientRing = QQ,
                      left_system: Optional[CosetSystem] = None) -> VerificationReport:
    """Check every transfer / determinant identity on (G, H, K).

    Group-element identities run over all of G (or all pairs); algebra
    identities use ``samples`` random elements and ``resamples`` random
    representative sets, all drawn from ``random.Random(seed)``.
    ``left_system`` replaces the default left decomposition, which is how
    corrupted lookups are fed in.
    """
    q = quotient_group(h, k)
    if not q.cosets.abelian:
        raise NonAbelianQuotient("H/K must be abelian")
    rng = random.Random(seed)
    elems = [_Elem(g, group.labels[g]) for g in range(group.order)]
    t = group.table
    qt = q.cosets.table

    T = _Lazy(lambda: left_system if left_system is not None else decompose(group, h, LEFT))
    U = _Lazy(lambda: decompose(group, h, RIGHT))
    seeds = [rng.randrange(2 ** 32) for _ in range(resamples)]
    T_alt = _Lazy(lambda: [resample(T.get(), s) for s in seeds])
    U_alt = _Lazy(lambda: [resample(U.get(), s) for s in seeds])
    alphas = [random_element(ring, group, rng) for _ in range(samples)]
    betas = [random_element(ring, group, rng) for _ in range(samples)]

    def table_of(fn, cs):
        return [fn(q, cs, g) for g in range(group.order)]

    V = _Lazy(lambda: table_of(left_transfer, T.get()))
    checks: dict[str, CheckResult] = {}
    sign_invariant = [True]

    def hom(x, y):
        vg, vh = left_transfer(q, T.get(), x.index), left_transfer(q, T.get(), y.index)
        vgh = left_transfer(q, T.get(), t[x.index][y.index])
        if vgh.coset != qt[vg.coset][vh.coset]:
            return {"V(gh)": vgh.label, "V(g)V(h)": q.cosets.labels[qt[vg.coset][vh.coset]]}
        return None

    checks["homomorphism"] = _run("homomorphism",
                                  ((x, y) for x in elems for y in elems), hom)

    def invariance(fn, base, alt):
        def pred(i, x):
            cs = alt.get()[i]
            v0, v1 = base.get()[x.index], fn(q, cs, x.index)
            if v0.sign != v1.sign:
                sign_invariant[0] = False
            if v0.coset != v1.coset:
                return {"reps": _describe((cs,)), "before": v0.label, "after": v1.label}
            return None
        return pred

    Vr = _Lazy(lambda: table_of(right_transfer, U.get()))
    checks["rep_invariance_left"] = _run(
        "rep_invariance_left", ((i, x) for i in range(resamples) for x in elems),
        invariance(left_transfer, V, T_alt))
    checks["rep_invariance_right"] = _run(
        "rep_invariance_right", ((i, x) for i in range(resamples) for x in elems),
        invariance(right_transfer, Vr, U_alt))

    def pairs():
        yield T.get(), U.get()
        yield from zip(T_alt.get(), U_alt.get())

    def left_right(cs_l, cs_r, x):
        a, b = left_transfer(q, cs_l, x.index), right_transfer(q, cs_r, x.index)
        if (a.coset, a.sign) != (b.coset, b.sign):
            return {"left": str(a), "right": str(b)}
        return None

    checks["left_equals_right"] = _run(
        "left_equals_right", ((l, r, x) for l, r in pairs() for x in elems), left_right)

    def sign_mult(x, y):
        for cs in (T.get(), U.get()):
            s = coset_permutation(cs, t[x.index][y.index]).sign
            s1, s2 = coset_permutation(cs, x.index).sign, coset_permutation(cs, y.index).sign
            if s != s1 * s2:
                return {"side": cs.side, "sgn(gh)": s, "sgn(g)sgn(h)": s1 * s2}
        return None

    checks["sign_multiplicative"] = _run(
        "sign_multiplicative", ((x, y) for x in elems for y in elems), sign_mult)

    def det(cs, a):
        return det_transfer(q, cs, a)

    def det_mult(a, b):
        lhs = det(T.get(), a * b)
        rhs = det(T.get(), a) * det(T.get(), b)
        if lhs != rhs:
            return {"Det(ab)": str(lhs), "Det(a)Det(b)": str(rhs)}
        return None

    checks["det_multiplicative"] = _run("det_multiplicative", zip(alphas, betas), det_mult)

    def det_invariance(i, a):
        cs = T_alt.get()[i]
        d0, d1 = det(T.get(), a), det(cs, a)
        if d0 != d1:
            return {"reps": _describe((cs,)), "before": str(d0), "after": str(d1)}
        return None

    checks["det_rep_invariance"] = _run(
        "det_rep_invariance",
        ((i, alphas[i % samples]) for i in range(resamples)) if samples else (), det_invariance)

    def lr_rep(cs, a):
        lt = left_regular_rep(cs, a)
        rt = right_regular_rep(inverse_reps(cs), a)
        if lt != rt:
            return {"L_T": str(lt), "R_T^-1": str(rt)}
        return None

    def lr_cases():
        for a in alphas:
            yield T.get(), a
        for i, cs in enumerate(T_alt.get()):
            if samples:
                yield cs, alphas[i % samples]

    checks["left_right_rep_equality"] = _run("left_right_rep_equality", lr_cases(), lr_rep)

    def det_sign(x, det_ring, signed):
        cs = T.get()
        d = det_transfer(q, cs, AlgebraElement.basis(det_ring, group, x.index))
        v = left_transfer(q, cs, x.index)
        expected = v.as_element(det_ring, signed=signed)
        if d != expected:
            return {"Det(g)": str(d), "expected": str(expected)}
        return None

    checks["det_equals_sign_times_transfer"] = _run(
        "det_equals_sign_times_transfer", ((x, ring, True) for x in elems), det_sign)
    checks["f2_det_equals_transfer"] = _run(
        "f2_det_equals_transfer", ((x, F2, False) for x in elems), det_sign)

    def conj(i, a):
        cs, cs2 = T.get(), T_alt.get()[i]
        p, p_inv = change_of_basis(cs, cs2, ring), change_of_basis(cs2, cs, ring)
        eye = mat_mul(p, p_inv)
        if any((i_ == j_) != (not eye[i_, j_].is_zero()) for i_ in range(eye.dim)
               for j_ in range(eye.dim)) or any(
                   eye[i_, i_] != AlgebraElement.one(ring, group) for i_ in range(eye.dim)):
            return {"P P^-1": str(eye)}
        lhs = left_regular_rep(cs, a)
        rhs = mat_mul(mat_mul(p_inv, left_regular_rep(cs2, a)), p)
        if lhs != rhs:
            return {"reps": _describe((cs2,)), "L_T": str(lhs), "P^-1 L_T' P": str(rhs)}
        return None

    checks["conjugation"] = _run(
        "conjugation",
        ((i, alphas[i % samples]) for i in range(resamples)) if samples else (), conj)

    def order_free(x):
        cs = T.get()
        inv = group.inverses
        factors = []
        for ti in cs.reps:
            gt = t[x.index][ti]
            factors.append(_class(q, t[inv[representative(cs, gt)]][gt]))
        fwd = q.cosets.prod(factors)
        bwd = q.cosets.prod(reversed(factors))
        if fwd != bwd:
            return {"forward": q.cosets.labels[fwd], "reversed": q.cosets.labels[bwd]}
        return None

    checks["product_order_independence"] = _run(
        "product_order_independence", ((x,) for x in elems), order_free)

    return VerificationReport({n: checks[n] for n in CHECKS}, seed, samples, resamples,
                              sign_invariant[0])
