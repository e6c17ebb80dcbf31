"""Command-line interface: ``knitord <subcommand> --group ID ...``.

Exit status: 0 success or pass, 1 violations found, 2 usage or parse error,
3 handle-reduction step limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import nullcontext

from . import verifier
from .braid import BraidB3, StepLimitExceeded
from .instances import INSTANCE_IDS, Instance, UnknownInstance, get_instance
from .order import OrderKindError, compare
from .words import WordSyntaxError
from .zappa_szep import (
    CONES,
    check_matched_pair,
    check_product_identities,
    check_right_star,
    check_star,
    check_thm2_conditions,
    check_thm2_monotonicity,
)

EXIT_OK, EXIT_VIOLATIONS, EXIT_USAGE, EXIT_STEP_LIMIT = 0, 1, 2, 3

GROUP_SUITES = {
    "semigroup": verifier.verify_semigroup,
    "partition": verifier.verify_partition,
    "left-invariance": verifier.verify_left_invariance,
    "right-invariance": verifier.verify_right_invariance,
    "conjugation": verifier.verify_conjugation,
    "group-laws": verifier.verify_group_laws,
}
PRODUCT_SUITES = {
    "convexity-k": verifier.verify_convexity_K,
    "convexity-h": verifier.verify_convexity_H,
}
PAIR_SUITES = {
    "matched-pair": check_matched_pair,
    "star": check_star,
    "right-star": check_right_star,
    "thm2-conditions": check_thm2_conditions,
    "thm2-monotonicity": check_thm2_monotonicity,
    "product-identities": check_product_identities,
}
SPECIAL_SUITES = {
    "dual-oracle": ("b3",),
    "exp-homomorphism": ("h-amalgam",),
}
ALL_SUITES = tuple(GROUP_SUITES) + tuple(PRODUCT_SUITES) + tuple(PAIR_SUITES) + tuple(SPECIAL_SUITES)


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--group", required=True,
                        help=f"instance id: {', '.join(INSTANCE_IDS)}")
    common.add_argument("--cone", choices=sorted(CONES),
                        help="lifted cone for product instances (default per instance)")
    common.add_argument("--format", choices=("text", "json-lines"), default="text")
    common.add_argument("--step-limit", type=int, default=None,
                        help="handle-reduction step budget per call")
    common.add_argument("--out", help="write output to this file instead of stdout")

    parser = argparse.ArgumentParser(prog="knitord", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nf", parents=[common], help="print the canonical form")
    p.add_argument("word")
    p = sub.add_parser("sign", parents=[common], help="position relative to the identity")
    p.add_argument("word")
    p = sub.add_parser("cmp", parents=[common], help="compare two elements")
    p.add_argument("word1")
    p.add_argument("word2")
    p = sub.add_parser("mul", parents=[common], help="multiply elements left to right")
    p.add_argument("words", nargs="+")
    p = sub.add_parser("inv", parents=[common], help="invert an element")
    p.add_argument("word")

    runner = argparse.ArgumentParser(add_help=False)
    runner.add_argument("--max-violations", type=int, default=20)
    runner.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("verify", parents=[common, runner], help="run verification suites")
    p.add_argument("--suite", required=True,
                   help=f"comma-separated suites or 'all': {', '.join(ALL_SUITES)}")
    p.add_argument("--radius", type=int, default=None)
    p.add_argument("--rh", type=int, default=None)
    p.add_argument("--rk", type=int, default=None)

    p = sub.add_parser("axioms", parents=[common, runner],
                       help="matched-pair axioms and lifting conditions")
    p.add_argument("--rh", type=int, default=3)
    p.add_argument("--rk", type=int, default=3)
    return parser


def _resolve(args) -> tuple[Instance, object]:
    try:
        inst = get_instance(args.group)
    except UnknownInstance as exc:
        raise UsageError(str(exc)) from None
    if args.step_limit is not None:
        for g in (inst.group, getattr(inst.pair, "K", None), getattr(inst.pair, "H", None)):
            if isinstance(g, BraidB3):
                g.step_limit = args.step_limit
    if args.cone and inst.pair is None:
        raise UsageError(f"--cone only applies to product instances, not {inst.id}")
    group = inst.product(args.cone) if inst.pair is not None else inst.group
    return inst, group


def _parse(group, text: str):
    try:
        return group.parse(text)
    except WordSyntaxError as exc:
        caret = " " * exc.position + "^"
        raise UsageError(f"{exc}\n  {exc.text}\n  {caret}") from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(out, fmt: str, payload: dict, text: str) -> None:
    if fmt == "json-lines":
        out.write(json.dumps(payload, ensure_ascii=False, separators=(",", ":")) + "\n")
    else:
        out.write(text + "\n")


def _suite_names(spec: str, inst: Instance) -> list[str]:
    if spec == "all":
        if inst.pair is None:
            names = ["semigroup", "partition", "left-invariance", "group-laws"]
            names += [s for s, ids in SPECIAL_SUITES.items() if inst.id in ids]
            return names
        names = ["matched-pair", "star", "product-identities", "semigroup", "group-laws"]
        if inst.bi_pair:
            names += ["thm2-conditions", "thm2-monotonicity", "conjugation"]
        else:
            names += ["partition", "convexity-k"]
        return names
    names = [s.strip() for s in spec.split(",") if s.strip()]
    for s in names:
        if s not in ALL_SUITES:
            raise UsageError(f"unknown suite {s!r}; known: {', '.join(ALL_SUITES)}")
    return names


def _run_suite(name: str, inst: Instance, group, args):
    product = inst.pair is not None
    default_r = 3 if product else 5
    r = args.radius if args.radius is not None else default_r
    rh = args.rh if args.rh is not None else r
    rk = args.rk if args.rk is not None else r
    kw = dict(workers=args.workers, cap=args.max_violations)
    if name in SPECIAL_SUITES:
        if inst.id not in SPECIAL_SUITES[name]:
            raise UsageError(f"suite {name} only runs on {', '.join(SPECIAL_SUITES[name])}")
        fn = verifier.verify_dual_oracle if name == "dual-oracle" else verifier.verify_exp_homomorphism
        if name == "dual-oracle" and args.step_limit is not None:
            kw["step_limit"] = args.step_limit
        return fn(r, **kw)
    if name in PAIR_SUITES:
        if not product:
            raise UsageError(f"suite {name} needs a product instance")
        return PAIR_SUITES[name](inst.pair, rh, rk, instance=inst.id, **kw)
    if name in PRODUCT_SUITES:
        if not product:
            raise UsageError(f"suite {name} needs a product instance")
        cone = "thm1" if name == "convexity-k" else "thm1-right"
        return PRODUCT_SUITES[name](inst.product(cone), r, **kw)
    return GROUP_SUITES[name](group, r, **kw)


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK

    ctx = open(args.out, "w", encoding="utf-8") if args.out else nullcontext(stdout)
    try:
        with ctx as out:
            return _dispatch(args, out)
    except UsageError as exc:
        print(f"knitord: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OrderKindError as exc:
        print(f"knitord: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except StepLimitExceeded as exc:
        print(f"knitord: error: {exc}", file=sys.stderr)
        return EXIT_STEP_LIMIT


def _dispatch(args, out) -> int:
    inst, group = _resolve(args)
    fmt = args.format
    cmd = args.command

    if cmd in ("nf", "inv"):
        g = _parse(group, args.word)
        if cmd == "inv":
            g = group.invert(g)
        s = group.format(g)
        _emit(out, fmt, {"group": inst.id, "command": cmd, "input": args.word, "result": s}, s)
        return EXIT_OK
    if cmd == "sign":
        g = _parse(group, args.word)
        label = group.sign_label(g)
        _emit(out, fmt, {"group": inst.id, "command": cmd, "input": args.word,
                         "result": str(group.cone_sign(g)), "label": label}, label)
        return EXIT_OK
    if cmd == "cmp":
        g, h = _parse(group, args.word1), _parse(group, args.word2)
        c = str(compare(group, g, h))
        _emit(out, fmt, {"group": inst.id, "command": cmd,
                         "input": [args.word1, args.word2], "result": c}, c)
        return EXIT_OK
    if cmd == "mul":
        g = group.identity
        for w in args.words:
            g = group.multiply(g, _parse(group, w))
        s = group.format(g)
        _emit(out, fmt, {"group": inst.id, "command": cmd, "input": args.words, "result": s}, s)
        return EXIT_OK

    if cmd == "verify":
        reports = [_run_suite(name, inst, group, args) for name in _suite_names(args.suite, inst)]
    else:  # axioms
        if inst.pair is None:
            raise UsageError(f"axioms needs a product instance, not {inst.id}")
        kw = dict(workers=args.workers, cap=args.max_violations, instance=inst.id)
        reports = [check_matched_pair(inst.pair, args.rh, args.rk, **kw),
                   check_star(inst.pair, args.rh, args.rk, **kw)]
        if inst.bi_pair:
            reports.append(check_thm2_conditions(inst.pair, args.rh, args.rk, **kw))
    for rep in reports:
        out.write((rep.to_json() if fmt == "json-lines" else rep.to_text()) + "\n")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_VIOLATIONS


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
