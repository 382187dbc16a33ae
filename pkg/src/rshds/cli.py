"""Command-line surface.

Exit codes: 0 all requested checks pass, 1 some check failed, 2 usage or
file error, 3 search budget exceeded.  All output is deterministic: reruns
(and any worker count) produce byte-identical bytes.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from typing import List, Optional, Sequence

from . import certify, constructions, formats
from .algebra import from_set
from .certify import CertReport, PreconditionError
from .constructions import BudgetExceededError, ConstructionError
from .formats import FormatError, GroupSpec
from .groups import FiniteGroup, GroupError, Subgroup, closure, is_normal, subgroups_of_order

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

CHECK_ORDER = ("dset", "rshds", "profile", "schur", "spectrum", "hadamard")

_AUTO_RE = re.compile(r"^auto-[a-z]*(\d+)$")


def _parse_subgroup(group: FiniteGroup, token: str) -> Subgroup:
    """Resolve a subgroup token: distinguished | auto | auto-<order> | gens=i,j."""
    if token in ("distinguished", "auto"):
        sub = group.distinguished_subgroup()
        if sub is None:
            raise FormatError(
                f"group has no distinguished subgroup; use gens=... ({token!r})"
            )
        return sub
    m = _AUTO_RE.match(token)
    if m:
        order = int(m.group(1))
        candidates = [
            s for s in subgroups_of_order(group, order) if is_normal(group, s)
        ]
        if len(candidates) != 1:
            raise FormatError(
                f"expected exactly one normal subgroup of order {order}, found {len(candidates)}"
            )
        return candidates[0]
    if token.startswith("gens="):
        gens = [int(x) for x in token[5:].split(",") if x != ""]
        return closure(group, gens)
    raise FormatError(f"unrecognized subgroup token {token!r}")


def _emit_reports(reports: Sequence[CertReport], as_json: bool) -> None:
    if as_json:
        print(json.dumps([r.to_json_dict() for r in reports], separators=(",", ":")))
        return
    for r in reports:
        print(r.summary())
        for w in r.warnings:
            print(f"  warning: {w}")
        if not r.passed:
            print(f"  witnesses: {json.dumps(r.witnesses, separators=(',', ':'), default=str)}")


def _default_out(spec: GroupSpec, suffix: str) -> str:
    stem = str(spec).replace(":", "_").replace(",", "_").replace("/", "_")
    return f"{stem}.{suffix}"


def _params_line(params) -> str:
    return f"(v,k,lambda)=({params.v},{params.k},{params.lam})"


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _cmd_params(args) -> int:
    params = certify.parameter_formulas(args.h)
    print(_params_line(params) + f" m<= {certify.m_bound(args.h)}")
    return EXIT_OK


def _cmd_construct(args) -> int:
    spec = GroupSpec.parse(args.spec)
    if spec.kind == "gnk":
        candidate = constructions.gnk_difference_set(spec.n, spec.k)
    elif spec.kind == "c4n":
        candidate = constructions.c4n_difference_set(spec.n)
    else:
        raise FormatError("construct needs a gnk: or c4n: spec")
    out = args.out or _default_out(spec, "dset.json")
    formats.write_dset(out, spec, "distinguished", candidate.elements)
    print(_params_line(candidate.params))
    if candidate.self_inverse_expected:
        report = certify.check_difference_set(candidate.group, candidate.elements)
    else:
        report = certify.check_rshds(
            candidate.group, candidate.subgroup, candidate.elements
        )
    _emit_reports([report], args.json)
    print(f"wrote {out}")
    return EXIT_OK if report.passed else EXIT_FAIL


def _run_check(name: str, group, sub, elements) -> CertReport:
    try:
        if name == "dset":
            return certify.check_difference_set(group, elements)
        if name == "rshds":
            return certify.check_rshds(group, sub, elements)
        if name == "profile":
            return certify.coset_profile(group, sub, elements)
        if name == "schur":
            return certify.check_schur_ring(group, sub, elements)[0]
        if name == "spectrum":
            return certify.spectrum(group, sub, elements)
        if name == "hadamard":
            return certify.check_hadamard(group, sub, elements)
    except PreconditionError as exc:
        return CertReport(name, False, None, {"precondition": str(exc)})
    raise FormatError(f"unknown check {name!r}")


def _cmd_certify(args) -> int:
    group, sub, elements, _ = formats.read_dset(args.dset)
    if args.checks:
        names = [c.strip() for c in args.checks.split(",") if c.strip()]
        for c in names:
            if c not in CHECK_ORDER:
                raise FormatError(f"unknown check {c!r}; choose from {','.join(CHECK_ORDER)}")
        names = [c for c in CHECK_ORDER if c in names]
    else:
        names = list(CHECK_ORDER)
    reports = [_run_check(c, group, sub, elements) for c in names]
    _emit_reports(reports, args.json)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def _cmd_profile(args) -> int:
    group, sub, elements, _ = formats.read_dset(args.dset)
    report = certify.coset_profile(group, sub, elements)
    _emit_reports([report], args.json)
    return EXIT_OK if report.passed else EXIT_FAIL


def _cmd_thm81(args) -> int:
    spec = GroupSpec.parse(args.spec)
    group = formats.build_group(spec)
    sub = _parse_subgroup(group, args.subgroup)
    assignment = constructions.find_hyperplane_assignment(group, sub)
    if assignment is None:
        print("none")
        return EXIT_OK
    h = sub.order
    for i in range(1, h):
        rep = assignment.decomposition.transversal[i]
        print(
            f"coset {i}: rep {group.element_name(rep)} -> hyperplane normal "
            f"{''.join(str(b) for b in assignment.normals[i])}"
        )
    candidate = constructions.assignment_difference_set(assignment)
    report = certify.check_difference_set(group, candidate.elements)
    _emit_reports([report], args.json)
    out = args.out or _default_out(spec, "thm81.dset.json")
    gens = "distinguished" if group.distinguished_subgroup() == sub else list(sub.members)
    formats.write_dset(out, spec, gens, candidate.elements)
    print(f"wrote {out}")
    return EXIT_OK if report.passed else EXIT_FAIL


def _cmd_screen(args) -> int:
    spec = GroupSpec.parse(args.spec)
    group = formats.build_group(spec)
    sub: Optional[Subgroup]
    if args.subgroup:
        sub = _parse_subgroup(group, args.subgroup)
    else:
        sub = group.distinguished_subgroup()
        if sub is None:
            normal_h = [
                s for s in subgroups_of_order(group, args.h) if is_normal(group, s)
            ]
            sub = normal_h[0] if len(normal_h) == 1 else None
    report = certify.structural_tests(group, args.h, sub)
    _emit_reports([report], args.json)
    return EXIT_OK if report.passed else EXIT_FAIL


def _cmd_search(args) -> int:
    spec = GroupSpec.parse(args.spec)
    group = formats.build_group(spec)
    sub = _parse_subgroup(group, args.subgroup)
    result = constructions.exhaustive_search(group, sub, budget=args.budget)
    print(f"found {result.count} difference set(s) "
          f"({result.nodes} nodes, {result.leaves} leaves)")
    if result.candidates and result.candidates[0].params.h == 2:
        print("warning: degenerate h=2, lambda = 0")
    for c in result.candidates:
        print("  " + ",".join(str(e) for e in c.elements))
    if args.out:
        gens = (
            "distinguished"
            if group.distinguished_subgroup() == sub
            else list(sub.members)
        )
        docs = []
        for c in result.candidates:
            docs.append(
                {
                    "group": str(spec),
                    "subgroup": gens,
                    "elements": list(c.elements),
                }
            )
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(docs, fh, separators=(",", ":"))
            fh.write("\n")
        print(f"wrote {args.out}")
    return EXIT_OK


def _cmd_quotient(args) -> int:
    group, sub, elements, _ = formats.read_dset(args.dset)
    kernels = []
    if args.kernel:
        kernels.append(_parse_subgroup(group, args.kernel))
    else:
        from .groups import normal_subgroups_of_prime_index

        kernels = [s for s, _ in normal_subgroups_of_prime_index(group)]
    reports = [
        certify.quotient_check(group, sub, elements, n) for n in kernels
    ]
    _emit_reports(reports, args.json)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def _cmd_export_hadamard(args) -> int:
    group, sub, elements, _ = formats.read_dset(args.dset)
    base = certify.check_rshds(group, sub, elements)
    if not base.passed or base.params is None or base.params.m != 0:
        _emit_reports([base], args.json)
        print("refusing to export: candidate is not a certified m=0 set", file=sys.stderr)
        return EXIT_FAIL
    matrix = certify.hadamard_matrix(group, elements)
    out = args.out
    if not out:
        raise FormatError("export-hadamard requires --out")
    formats.write_hadamard(out, matrix)
    print(f"wrote {out} ({len(matrix)}x{len(matrix)})")
    return EXIT_OK


def _cmd_dump_table(args) -> int:
    spec = GroupSpec.parse(args.spec)
    group = formats.build_group(spec)
    out = args.out or _default_out(spec, "cayley.json")
    formats.write_cayley(group, out)
    print(f"wrote {out} (order {group.order})")
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rshds",
        description="Construct and exactly certify difference sets disjoint from a subgroup.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit reports as JSON")
    common.add_argument("--out", help="output file path")
    common.add_argument("--workers", type=int, default=1,
                        help="worker count (results are identical for any value)")
    common.add_argument("--budget", type=int, default=None,
                        help="node budget for searches")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("params", parents=[common], help="print (v,k,lambda) for an even h")
    p.add_argument("h", type=int)
    p.set_defaults(func=_cmd_params)

    p = sub.add_parser("construct", parents=[common],
                       help="build the canonical difference set of a gnk: or c4n: group")
    p.add_argument("spec")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("certify", parents=[common], help="run certificates on a dset-v1 file")
    p.add_argument("dset")
    p.add_argument("--checks", help=f"comma list from {','.join(CHECK_ORDER)} (default all)")
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("profile", parents=[common], help="coset profile of a dset-v1 file")
    p.add_argument("dset")
    p.set_defaults(func=_cmd_profile)

    p = sub.add_parser("thm81", parents=[common],
                       help="search a hyperplane-to-coset matching and build its difference set")
    p.add_argument("spec")
    p.add_argument("subgroup")
    p.set_defaults(func=_cmd_thm81)

    p = sub.add_parser("screen", parents=[common], help="run the four structural tests")
    p.add_argument("spec")
    p.add_argument("h", type=int)
    p.add_argument("subgroup", nargs="?", default=None)
    p.set_defaults(func=_cmd_screen)

    p = sub.add_parser("search", parents=[common],
                       help="exhaustively enumerate all partition difference sets")
    p.add_argument("spec")
    p.add_argument("subgroup")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("quotient", parents=[common],
                       help="quotient distribution checks for a dset-v1 file")
    p.add_argument("dset")
    p.add_argument("--kernel", help="subgroup token for the normal kernel (default: all prime-index)")
    p.set_defaults(func=_cmd_quotient)

    p = sub.add_parser("export-hadamard", parents=[common],
                       help="write the +-1 matrix of a certified m=0 set")
    p.add_argument("dset")
    p.set_defaults(func=_cmd_export_hadamard)

    p = sub.add_parser("dump-table", parents=[common], help="write a cayley-v1 table")
    p.add_argument("spec")
    p.set_defaults(func=_cmd_dump_table)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.workers is not None and args.workers < 1:
        parser.error("--workers must be >= 1")
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(
            f"budget exceeded: {exc} (nodes={exc.nodes}, leaves={exc.leaves}, found={exc.found})",
            file=sys.stderr,
        )
        return EXIT_BUDGET
    except (FormatError, GroupError, ConstructionError, PreconditionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
