"""Command-line interface.

Subcommands: verify, braid, abelianize, classes, hecke, prove, replay,
export.  Exit codes: 0 every check passed, 1 a check failed, 2 a prover
returned Unknown, 64 usage error.  ``--json`` emits a machine-readable
report (``"schema": 1``).  The environment variable
``CRYSREF_BUDGET_SCALE`` multiplies all search budgets.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .affine import (
    MATRIX_FAMILIES,
    build_generator_matrices,
    enumerate_reflection_classes,
    verify_presentation,
)
from .hecke import (
    GDAHA_LEGS,
    gdaha_check,
    rank_one_specialization_check,
    triple_dot_report,
)
from .hints import sphere_rank3_hints
from .isomorphisms import braid_isomorphism, braid_space_for
from .presentations import (
    GROUP_FAMILIES,
    RankOutOfRange,
    UnsupportedFamily,
    abelianize,
    artinize,
    build_group_presentation,
    diagram_to_dot,
    presentation_to_text,
)
from .prover import (
    Budget,
    Certificate,
    ProofResult,
    ProofStatus,
    check_certificate,
    prove_trivial,
    verify_isomorphism_pair,
)
from .words import parse_word

EX_USAGE = 64

# GDAHA diagram type attached to each deformable family
_GDAHA_FAMILY = {"D4": "C_alpha", "E6": "G311", "E7": "G411", "E8": "G611"}


class _UsageError(Exception):
    pass


def _budget_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--max-depth", type=int, default=None,
                        help="override the prover depth budget")
    parser.add_argument("--max-len", type=int, default=None,
                        help="override the prover word-length budget")


def _build(family: str, n: int):
    if family not in GROUP_FAMILIES:
        raise _UsageError(f"unknown family {family!r}; choose from "
                          + ", ".join(GROUP_FAMILIES))
    try:
        return build_group_presentation(family, n)
    except (RankOutOfRange, UnsupportedFamily) as exc:
        raise _UsageError(str(exc)) from exc


def _matrices(family: str, n: int):
    if family not in MATRIX_FAMILIES:
        raise _UsageError(
            f"no matrix representation for {family!r}; choose from "
            + ", ".join(MATRIX_FAMILIES))
    try:
        return build_generator_matrices(family, n)
    except (RankOutOfRange, UnsupportedFamily) as exc:
        raise _UsageError(str(exc)) from exc


def _proof_json(res) -> dict:
    out = {"status": res.status.name.lower()}
    if res.certificate is not None:
        out["certificate"] = res.certificate.to_text()
    if res.reason:
        out["reason"] = res.reason
    return out


def _jsonable(value):
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, ProofResult):
        return _proof_json(value)
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    return str(value)


def _status_exit(statuses) -> int:
    statuses = list(statuses)
    if any(s is ProofStatus.DISPROVED for s in statuses):
        return 1
    if any(s is ProofStatus.UNKNOWN for s in statuses):
        return 2
    return 0


# ---------------------------------------------------------------------
# subcommands (each returns (report_dict, exit_code))


def cmd_verify(args) -> tuple[dict, int]:
    pres = _build(args.family, args.n)
    _, gens = _matrices(args.family, args.n)
    full = verify_presentation(pres, gens)
    if args.what == "all":
        report, ok = full, full["pass"]
    elif args.what == "presentation":
        rels = [r for i, r in enumerate(full["relators"])
                if i != pres.x_relator_index]
        ok = all(r["pass"] for r in rels)
        report = {"pass": ok, "relators": rels}
    elif args.what == "x-relation":
        if pres.x_relator_index is None:
            raise _UsageError(f"{args.family} n={args.n} has no x-relation")
        entry = full["relators"][pres.x_relator_index]
        report, ok = {"pass": entry["pass"], "relators": [entry]}, entry["pass"]
    else:  # extra-order
        entry = full.get("extra_order")
        if entry is None:
            raise _UsageError(f"{args.family} n={args.n} has no extra "
                              "order relation")
        report, ok = {"pass": entry["pass"], "extra_order": entry}, entry["pass"]
    return report, 0 if ok else 1


def cmd_braid(args) -> tuple[dict, int]:
    try:
        iso = braid_isomorphism(args.family, args.n)
    except (RankOutOfRange, UnsupportedFamily) as exc:
        raise _UsageError(str(exc)) from exc
    hints = None
    if args.mode == "replay":
        if (args.family, args.n) != ("C_alpha", 3):
            raise _UsageError("replay scripts exist only for C_alpha n=3")
        hints = sphere_rank3_hints()
    rep = verify_isomorphism_pair(
        iso.fwd, iso.bwd, iso.braid.relators, iso.artin.relators,
        hints=hints,
    )
    keys = {"fwd": ["fwd_relators", "bwd_fwd"],
            "bwd": ["bwd_relators", "fwd_bwd"],
            "both": ["fwd_relators", "bwd_relators", "bwd_fwd", "fwd_bwd"]}
    wanted = keys[args.direction]
    statuses = [r.status for k in wanted for r in rep[k]]
    space, rank = braid_space_for(args.family, args.n)
    report = {
        "space": space,
        "space_rank": rank,
        "checks": {k: [_proof_json(r) for r in rep[k]] for k in wanted},
        "pass": all(s is ProofStatus.PROVED for s in statuses),
    }
    return report, _status_exit(statuses)


def cmd_abelianize(args) -> tuple[dict, int]:
    pres = _build(args.family, args.n)
    divisors = abelianize(pres)
    return {"divisors": divisors, "pass": True}, 0


def cmd_classes(args) -> tuple[dict, int]:
    if args.family not in MATRIX_FAMILIES:
        raise _UsageError(
            f"class enumeration needs matrices; choose from "
            + ", ".join(MATRIX_FAMILIES))
    try:
        classes = enumerate_reflection_classes(args.family, args.n,
                                               bound=args.bound)
    except (RankOutOfRange, UnsupportedFamily) as exc:
        raise _UsageError(str(exc)) from exc
    return {"count": len(classes), "classes": classes, "pass": True}, 0


def cmd_hecke(args) -> tuple[dict, int]:
    if args.check == "gdaha-check":
        if args.type not in _GDAHA_FAMILY:
            raise _UsageError("GDAHA type must be one of "
                              + ", ".join(sorted(_GDAHA_FAMILY)))
        if args.hecke_n is None:
            raise _UsageError("gdaha-check needs a rank argument")
        family = _GDAHA_FAMILY[args.type]
        try:
            rep = gdaha_check(family, args.hecke_n)
        except (RankOutOfRange, UnsupportedFamily) as exc:
            raise _UsageError(str(exc)) from exc
        rep = {"family": family, "legs": list(GDAHA_LEGS[args.type]), **rep}
        return rep, 0 if rep["pass"] else 1
    if args.check == "rank-one":
        rep = rank_one_specialization_check()
        return rep, 0 if rep["pass"] else 1
    # tripledot: the rank may land in the optional `type` slot
    if args.hecke_n is None and args.type is not None:
        try:
            args.hecke_n = int(args.type)
        except ValueError:
            raise _UsageError(f"bad rank {args.type!r}") from None
    if args.hecke_n is None:
        raise _UsageError("tripledot needs a rank argument")
    if args.hecke_n < 3:
        raise _UsageError("the triple-dot construction needs n >= 3")
    rep = triple_dot_report(args.hecke_n)
    statuses = [r.status for r in rep["results"].values()]
    report = {
        "word": rep["word"],
        "identities": {name: _proof_json(r) for name, r in rep["results"].items()},
        "pass": rep["pass"],
    }
    return report, _status_exit(statuses)


def cmd_prove(args) -> tuple[dict, int]:
    pres = _build(args.family, args.n)
    target = artinize(pres) if args.artin else pres
    try:
        word = parse_word(args.word, target.generator_names)
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc
    budget = Budget.for_word(word)
    if args.max_len is not None:
        budget = Budget(args.max_len, budget.max_depth, budget.max_states)
    if args.max_depth is not None:
        budget = Budget(budget.max_word_length, args.max_depth,
                        budget.max_states)
    res = prove_trivial(word, target.relators, budget)
    report = {"word": word.text(target.generator_names), **_proof_json(res)}
    return report, _status_exit([res.status])


def cmd_replay(args) -> tuple[dict, int]:
    pres = _build(args.family, args.n)
    target = artinize(pres) if args.artin else pres
    try:
        word = parse_word(args.word, target.generator_names)
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc
    try:
        with open(args.certificate) as fh:
            cert = Certificate.from_text(fh.read())
    except (OSError, ValueError) as exc:
        raise _UsageError(f"cannot read certificate: {exc}") from exc
    ok = check_certificate(cert, word, target.relators)
    return {"pass": ok}, 0 if ok else 1


def cmd_export(args) -> tuple[dict, int]:
    pres = _build(args.family, args.n)
    if args.dot:
        if pres.diagram is None:
            raise _UsageError(f"{args.family} n={args.n} has no diagram")
        text = diagram_to_dot(pres.diagram)
    else:
        text = presentation_to_text(pres)
    return {"text": text, "pass": True}, 0


# ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crysref",
        description="Construct and verify reflection presentations, "
                    "braid isomorphisms and Hecke deformations for the "
                    "crystallographic complex reflection families.")
    parser.add_argument("--json", action="store_true",
                        help="emit a JSON report on stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    def fam_rank(p):
        p.add_argument("family")
        p.add_argument("n", type=int)
        p.add_argument("--json", action="store_true",
                       default=argparse.SUPPRESS,
                       help="emit a JSON report on stdout")

    p = sub.add_parser("verify", help="check relators against the matrices")
    fam_rank(p)
    p.add_argument("--what", default="all",
                   choices=["presentation", "x-relation", "extra-order", "all"])
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("braid", help="prove the braid-presentation "
                                     "isomorphism pair")
    fam_rank(p)
    p.add_argument("--direction", default="both",
                   choices=["fwd", "bwd", "both"])
    p.add_argument("--mode", default="search", choices=["search", "replay"])
    p.set_defaults(func=cmd_braid)

    p = sub.add_parser("abelianize", help="elementary divisors of the "
                                          "commutator factor group")
    fam_rank(p)
    p.set_defaults(func=cmd_abelianize)

    p = sub.add_parser("classes", help="enumerate reflection conjugacy "
                                       "classes by bounded search")
    fam_rank(p)
    p.add_argument("--bound", type=int, default=2,
                   help="translation coefficient bound")
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("hecke", help="Hecke/GDAHA deformation checks")
    p.add_argument("check", choices=["gdaha-check", "rank-one", "tripledot"])
    p.add_argument("type", nargs="?",
                   help="GDAHA diagram type for gdaha-check (D4/E6/E7/E8)")
    p.add_argument("hecke_n", nargs="?", type=int, metavar="n")
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                   help="emit a JSON report on stdout")
    p.set_defaults(func=cmd_hecke)

    p = sub.add_parser("prove", help="prove a word trivial in a "
                                     "presentation")
    fam_rank(p)
    p.add_argument("word")
    p.add_argument("--artin", action="store_true",
                   help="work in the Artin group (order relations dropped)")
    _budget_flags(p)
    p.set_defaults(func=cmd_prove)

    p = sub.add_parser("replay", help="check a stored certificate")
    fam_rank(p)
    p.add_argument("word")
    p.add_argument("certificate", help="path to a certificate file")
    p.add_argument("--artin", action="store_true")
    p.set_defaults(func=cmd_replay)

    p = sub.add_parser("export", help="write presentation text or DOT")
    fam_rank(p)
    p.add_argument("--dot", action="store_true")
    p.add_argument("--text", action="store_true")
    p.set_defaults(func=cmd_export)

    return parser


def _plain_render(report: dict, indent: str = "") -> None:
    for key, value in report.items():
        if isinstance(value, dict):
            print(f"{indent}{key}:")
            _plain_render(value, indent + "  ")
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            print(f"{indent}{key}:")
            for item in value:
                _plain_render(item, indent + "  ")
                print()
        else:
            print(f"{indent}{key}: {value}")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EX_USAGE if exc.code not in (0, None) else 0
    start = time.time()
    try:
        report, code = args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_USAGE
    report = _jsonable({"schema": 1, "command": args.command, **report,
                        "wall_time": round(time.time() - start, 3),
                        "exit_code": code})
    if args.json:
        json.dump(report, fh := sys.stdout, indent=2)
        fh.write("\n")
    else:
        if args.command == "abelianize":
            print(" ".join(str(d) for d in report["divisors"]))
        elif args.command == "export":
            print(report["text"], end="")
        else:
            _plain_render(report)
    return code


if __name__ == "__main__":
    sys.exit(main())
