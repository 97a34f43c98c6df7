"""Command line front end.

Group files are JSON documents::

    {
      "group": {"product": [{"cyclic": 2}, {"dihedral": 3}]},
      "labels": ["e", "a", ...],                       # optional
      "subgroups": {"H": {"generators": ["(0,a)", "(0,b)"]},
                    "K": {"members": ["(0,e)"]}}
    }

A group spec is one of ``{"cyclic": n}``, ``{"dihedral": n}``,
``{"symmetric": n}``, ``{"table": [[...], ...]}`` or
``{"product": [spec, spec, ...]}``; any of them may carry its own
``"labels"``.  A bare group spec without the ``"group"`` wrapper is accepted
too.

Exit codes: 0 success, 1 failed verification, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from functools import reduce
from pathlib import Path
from typing import Optional, Sequence

from .algebra import parse_element, render_element
from .cosets import LEFT, RIGHT, coset_permutation, decompose, resample
from .errors import GroupTheoryError, ParseError, ValidationError
from .groups import (
    FiniteGroup,
    SubgroupRef,
    build_from_table,
    commutator_subgroup,
    construct_named,
    direct_product,
    is_normal,
    subgroup_closure,
    subgroup_from_members,
    trivial_subgroup,
    whole_group,
    quotient_group,
)
from .matrices import left_regular_rep, psi_matrix, render_matrix
from .rings import ring_from_name
from .transfer import det_transfer, left_transfer, right_transfer, verify_properties

_NAMED = ("cyclic", "dihedral", "symmetric")


def build_group(spec) -> FiniteGroup:
    """Turn one group spec (see module docstring) into a validated group."""
    if not isinstance(spec, dict):
        raise ValidationError(f"group spec must be an object, got {type(spec).__name__}")
    kinds = [k for k in ("table", "product") + _NAMED if k in spec]
    if len(kinds) != 1:
        raise ValidationError(f"group spec needs exactly one of table/product/"
                              f"cyclic/dihedral/symmetric, got {sorted(spec)}")
    kind = kinds[0]
    if kind == "table":
        group = build_from_table(spec["table"])
    elif kind == "product":
        parts = spec["product"]
        if not isinstance(parts, list) or not parts:
            raise ValidationError("product needs a non-empty list of group specs")
        group = reduce(direct_product, (build_group(p) for p in parts))
    else:
        n = spec[kind]
        if not isinstance(n, int) or isinstance(n, bool):
            raise ValidationError(f"{kind} needs an integer, got {n!r}")
        group = construct_named(kind, n)
    if "labels" in spec:
        group = group.with_labels(spec["labels"])
    return group


def parse_group_file(path) -> tuple[FiniteGroup, dict[str, SubgroupRef]]:
    """Load a group file; returns the group and its named subgroups.

    Errors from the group constructors are re-raised as ValidationError.
    """
    try:
        return _parse_group_file(path)
    except (ParseError, ValidationError):
        raise
    except GroupTheoryError as exc:
        raise ValidationError(f"{type(exc).__name__}: {exc}") from exc


def _parse_group_file(path):
    text = Path(path).read_text(encoding="utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(doc, dict):
        raise ParseError("top level must be a JSON object", 1, 1)
    spec = doc["group"] if "group" in doc else {k: v for k, v in doc.items()
                                                if k not in ("subgroups", "labels")}
    group = build_group(spec)
    if "labels" in doc:
        group = group.with_labels(doc["labels"])
    subgroups = {}
    for name, sub in (doc.get("subgroups") or {}).items():
        if not isinstance(sub, dict) or len({"members", "generators"} & set(sub)) != 1:
            raise ValidationError(f"subgroup {name!r} needs exactly one of members/generators")
        if "members" in sub:
            subgroups[name] = subgroup_from_members(group, [group.index_of(s) for s in sub["members"]])
        else:
            subgroups[name] = subgroup_closure(group, [group.index_of(s) for s in sub["generators"]])
    return group, subgroups


def _resolve_subgroup(group, subgroups, name) -> SubgroupRef:
    if name in subgroups:
        return subgroups[name]
    if name == "G":
        return whole_group(group)
    if name == "trivial":
        return trivial_subgroup(group)
    raise ValidationError(f"unknown subgroup {name!r}; file defines {sorted(subgroups) or 'none'}")


def _resolve_kernel(group, subgroups, h, name) -> SubgroupRef:
    if name == "derived":
        return commutator_subgroup(h)
    if name == "H":
        return h
    return _resolve_subgroup(group, subgroups, name)


def _system(args, group, h, side):
    reps = None
    if args.reps:
        reps = [group.index_of(s) for s in args.reps]
    cs = decompose(group, h, side, reps)
    if args.resample_seed is not None:
        cs = resample(cs, args.resample_seed)
    return cs


def _labels(group, idx) -> str:
    return " ".join(group.labels[g] for g in idx)


def _load(args):
    group, subgroups = parse_group_file(args.group)
    h = _resolve_subgroup(group, subgroups, args.subgroup) if getattr(args, "subgroup", None) else None
    return group, subgroups, h


def cmd_show(args, out) -> int:
    group, subgroups, _ = _load(args)
    print(f"order: {group.order}", file=out)
    print(f"identity: {group.labels[group.identity]}", file=out)
    print(f"abelian: {'yes' if group.abelian else 'no'}", file=out)
    print(f"elements: {_labels(group, range(group.order))}", file=out)
    print(f"inverses: {_labels(group, group.inverses)}", file=out)
    for name, sub in subgroups.items():
        normal = is_normal(whole_group(group), sub)
        print(f"subgroup {name}: order {sub.order}, index {group.order // sub.order}, "
              f"normal {'yes' if normal else 'no'}: {_labels(group, sub.members)}", file=out)
    return 0


def cmd_cosets(args, out) -> int:
    group, _, h = _load(args)
    cs = _system(args, group, h, args.side)
    print(f"side: {cs.side}", file=out)
    print(f"index: {cs.index}", file=out)
    for i, r in enumerate(cs.reps):
        print(f"coset {i}: rep {group.labels[r]}: {_labels(group, cs.coset(i))}", file=out)
    return 0


def cmd_transfer(args, out) -> int:
    group, subgroups, h = _load(args)
    q = quotient_group(h, _resolve_kernel(group, subgroups, h, args.kernel))
    cs = _system(args, group, h, args.side)
    fn = left_transfer if args.side == LEFT else right_transfer
    v = fn(q, cs, group.index_of(args.element))
    print(f"coset: {v.label}", file=out)
    print(f"members: {_labels(group, q.coset_members(v.coset))}", file=out)
    print(f"sign: {v.sign:+d}", file=out)
    return 0


def cmd_sign(args, out) -> int:
    group, _, h = _load(args)
    cs = _system(args, group, h, args.side)
    perm = coset_permutation(cs, group.index_of(args.element))
    print(f"permutation: {' '.join(str(j) for j in perm.mapping)}", file=out)
    print(f"sign: {perm.sign:+d}", file=out)
    return 0


def cmd_det(args, out) -> int:
    group, subgroups, h = _load(args)
    q = quotient_group(h, _resolve_kernel(group, subgroups, h, args.kernel))
    ring = ring_from_name(args.ring)
    cs = _system(args, group, h, LEFT)
    alpha = parse_element(args.alpha, ring, group)
    if args.matrices:
        lt = left_regular_rep(cs, alpha)
        print(f"L_T: {render_matrix(lt)}", file=out)
        print(f"psi(L_T): {render_matrix(psi_matrix(q, lt))}", file=out)
    print(render_element(det_transfer(q, cs, alpha)), file=out)
    return 0


def cmd_verify(args, out) -> int:
    group, subgroups, h = _load(args)
    k = _resolve_kernel(group, subgroups, h, args.kernel)
    report = verify_properties(group, h, k, seed=args.seed, samples=args.samples,
                               resamples=args.resamples, ring=ring_from_name(args.ring))
    print(report.render(), file=out)
    return 0 if report.passed else 1


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="grouptransfer",
                                     description="Transfers and noncommutative determinants "
                                                 "over finite groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, subgroup=True, kernel=False, reps=False, side=False):
        p.add_argument("--group", required=True, help="group definition file (JSON)")
        if subgroup:
            p.add_argument("--subgroup", required=True,
                           help="subgroup name from the file, or G / trivial")
        if kernel:
            p.add_argument("--kernel", default="derived",
                           help="kernel name from the file, or derived / trivial / H "
                                "(default: derived)")
        if side:
            p.add_argument("--side", choices=[LEFT, RIGHT], default=LEFT)
        if reps:
            p.add_argument("--reps", nargs="+", metavar="LABEL",
                           help="coset representatives by label, one per coset")
            p.add_argument("--resample-seed", type=int, default=None,
                           help="draw random representatives with this seed")

    p = sub.add_parser("show", help="describe a group file")
    common(p, subgroup=False)
    p.set_defaults(func=cmd_show)

    p = sub.add_parser("cosets", help="list the cosets of a subgroup")
    common(p, reps=True, side=True)
    p.set_defaults(func=cmd_cosets)

    p = sub.add_parser("transfer", help="evaluate the transfer at one element")
    common(p, kernel=True, reps=True, side=True)
    p.add_argument("--element", required=True)
    p.set_defaults(func=cmd_transfer)

    p = sub.add_parser("sign", help="coset permutation and its sign")
    common(p, reps=True, side=True)
    p.add_argument("--element", required=True)
    p.set_defaults(func=cmd_sign)

    p = sub.add_parser("det", help="Det(alpha) = det psi L_T(alpha) in R(H/K)")
    common(p, kernel=True, reps=True)
    p.add_argument("--alpha", required=True, help='group algebra element, e.g. "2*a - 1/2*e"')
    p.add_argument("--ring", default="rat", help="int, rat or mod:<n> (default: rat)")
    p.add_argument("--matrices", action="store_true", help="also print L_T and psi(L_T)")
    p.set_defaults(func=cmd_det)

    p = sub.add_parser("verify", help="run the transfer / determinant property suite")
    common(p, kernel=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--resamples", type=int, default=20)
    p.add_argument("--ring", default="rat")
    p.set_defaults(func=cmd_verify)
    return parser


def run_command(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (GroupTheoryError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
