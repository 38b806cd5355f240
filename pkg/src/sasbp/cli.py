"""Command line front end.

Subcommands: classify, solve, validate, preprocess, to-steiner, steiner
solve, generate, bench.  Exit codes are uniform across subcommands:

    0   YES / valid / success
    1   NO / invalid plan / no tree within the bound
    2   usage, format or I/O problem
    3   resource limit hit before a decision

All output is deterministic for a given input, so repeated runs are byte
identical and safe to diff.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from pathlib import Path

from .core import (
    EMPTY_STATE,
    Action,
    BoundedQuery,
    PartialState,
    PlanningInstance,
    Variable,
    validate_plan,
)
from .fileformat import (
    FormatError,
    parse_instance,
    parse_plan,
    parse_steiner,
    write_instance,
    write_plan,
    write_steiner,
)
from .gadgets import (
    BINARY,
    GadgetOutput,
    MulticoloredGraph,
    compose_or_02,
    compose_or_pub,
    gen_clique_gadget,
    gen_or2,
    gen_or_tree,
)
from .oracle import DEFAULT_MAX_STATES, ResourceLimitError, decide_bfs
from .planner02 import solve_02
from .preprocess import lemma1_transform
from .restrictions import detect_profile, lookup_complexity
from .steiner import solve_dst

EXIT_YES = 0
EXIT_NO = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _read_query(args) -> BoundedQuery:
    text = Path(args.instance).read_text()
    return parse_instance(text, allow_reserved=args.allow_reserved)


def _auto_method(profile) -> str:
    if profile.max_preconditions == 0 and profile.max_effects <= 2:
        return "fpt02"
    return "oracle"


def _record_dict(record) -> dict:
    return {
        "classical": record.classical,
        "parameterized": record.parameterized,
        "poly_kernel": record.poly_kernel,
    }


def cmd_classify(args) -> int:
    query = _read_query(args)
    profile = detect_profile(query.instance)
    flags = "".join(f for f in "PUBS" if f in profile.flags()) or "-"
    try:
        pe = lookup_complexity(profile)
    except ValueError:
        pe = None
    pubs = lookup_complexity(profile, pubs_mode=True)
    if args.json:
        payload = {
            "flags": flags,
            "max_preconditions": profile.max_preconditions,
            "max_effects": profile.max_effects,
            "pe": _record_dict(pe) if pe else None,
            "pubs": _record_dict(pubs),
        }
        print(json.dumps(payload, sort_keys=True))
        return EXIT_YES
    print(f"flags: {flags}")
    print(f"profile: p={profile.max_preconditions} e={profile.max_effects}")
    if pe is None:
        print("pe: outside classified range (no effects)")
    else:
        print(f"pe: {pe.classical} | {pe.parameterized} | kernel: {pe.poly_kernel}")
    print(f"pubs: {pubs.classical} | {pubs.parameterized} | kernel: {pubs.poly_kernel}")
    return EXIT_YES


def cmd_solve(args) -> int:
    query = _read_query(args)
    profile = detect_profile(query.instance)
    method = args.method
    if method == "auto":
        method = _auto_method(profile)

    if method == "fpt02":
        result = solve_02(query, max_states=args.max_states)
        decision = result.decision
        witness = result.witness
        length = result.plan_length
        detail = {
            "chain_transform": result.used_lemma1,
            "fallback": result.fallback,
            "explored_states": result.explored_states,
            "dp_table_entries": result.dp_table_entries,
        }
    else:
        oracle = decide_bfs(query, max_states=args.max_states)
        decision = oracle.decision
        witness = oracle.witness
        length = oracle.shortest_length
        detail = {
            "chain_transform": False,
            "fallback": False,
            "explored_states": oracle.explored_states,
            "dp_table_entries": None,
        }

    if args.json:
        payload = {"decision": "yes" if decision else "no", "length": length, "method": method}
        payload.update(detail)
        print(json.dumps(payload, sort_keys=True))
    else:
        print("YES" if decision else "NO")
        if decision:
            print(f"plan length: {length}")
        print(f"method: {method}")
    if decision and args.plan_out:
        Path(args.plan_out).write_text(write_plan(witness))
        if not args.json:
            print(f"plan written to {args.plan_out}")
    return EXIT_YES if decision else EXIT_NO


def cmd_validate(args) -> int:
    query = _read_query(args)
    plan = parse_plan(Path(args.plan).read_text())
    report = validate_plan(query.instance, plan)
    if report.valid and len(plan) > query.k:
        print(f"plan is valid but too long: {len(plan)} steps, bound is {query.k}")
        return EXIT_NO
    if report.valid:
        print(f"plan is valid ({len(plan)} steps, bound {query.k})")
        return EXIT_YES
    where = "" if report.failed_step is None else f" at step {report.failed_step + 1}"
    print(f"plan is invalid{where}: {report.reason}")
    return EXIT_NO


def cmd_preprocess(args) -> int:
    if not args.lemma1:
        raise ValueError("nothing to do: pass --lemma1")
    query = _read_query(args)
    out = lemma1_transform(query)
    Path(args.out).write_text(write_instance(BoundedQuery(out.instance, out.k_prime)))
    print(f"chain transform: k {out.source_k} -> k' {out.k_prime}")
    print(f"actions: {len(query.instance.actions)} -> {len(out.instance.actions)}")
    if out.dropped_actions:
        print(f"dropped (bad or effect-free): {', '.join(out.dropped_actions)}")
    print(f"written to {args.out}")
    return EXIT_YES


def cmd_to_steiner(args) -> int:
    from .planner02 import reduce_to_steiner

    query = _read_query(args)
    artifacts = reduce_to_steiner(query)
    Path(args.out).write_text(write_steiner(artifacts.steiner, origins=artifacts.arc_origin))
    steiner = artifacts.steiner
    print(
        f"nodes: {len(steiner.nodes)}  arcs: {len(steiner.weights)}  "
        f"terminals: {len(steiner.terminals)}  bound: {steiner.bound}"
    )
    print(f"written to {args.out}")
    return EXIT_YES


def cmd_steiner_solve(args) -> int:
    inst = parse_steiner(Path(args.instance).read_text())
    solution = solve_dst(inst)
    if args.json:
        payload = None
        if solution is not None:
            payload = {"weight": solution.total_weight, "arcs": [list(a) for a in solution.arcs]}
        print(json.dumps({"solution": payload}, sort_keys=True))
        return EXIT_YES if solution is not None else EXIT_NO
    if solution is None:
        print(f"no tree within bound {inst.bound}")
        return EXIT_NO
    print(f"weight: {solution.total_weight}")
    for tail, head in solution.arcs:
        print(f"arc {tail} {head}")
    return EXIT_YES


def _pub_fixture(k: int, yes: bool) -> GadgetOutput:
    """Postunique unary Boolean input for the OR composition.

    The YES shape needs k - 1 steps, one below its bound, so its witness
    plus the selector step always fits the composed bound.
    """
    if yes:
        m = k - 1
        variables = tuple(Variable(f"x{j}", BINARY) for j in range(1, m + 1))
        actions = tuple(
            Action(f"set{j}", EMPTY_STATE, PartialState({f"x{j}": "1"}))
            for j in range(1, m + 1)
        )
        inst = PlanningInstance(
            variables=variables,
            actions=actions,
            init=PartialState({v.name: "0" for v in variables}),
            goal=PartialState({v.name: "1" for v in variables}),
        )
        witness = tuple(f"set{j}" for j in range(1, m + 1))
        return GadgetOutput(BoundedQuery(inst, k), "yes", witness=witness)
    inst = PlanningInstance(
        variables=(Variable("y", BINARY),),
        actions=(),
        init=PartialState({"y": "0"}),
        goal=PartialState({"y": "1"}),
    )
    return GadgetOutput(BoundedQuery(inst, k), "no")


def _02_fixture(k: int, yes: bool) -> GadgetOutput:
    """Precondition-free single-effect input for the OR composition."""
    if yes:
        variables = tuple(Variable(f"z{j}", BINARY) for j in range(1, k + 1))
        actions = tuple(
            Action(f"zset{j}", EMPTY_STATE, PartialState({f"z{j}": "1"}))
            for j in range(1, k + 1)
        )
        inst = PlanningInstance(
            variables=variables,
            actions=actions,
            init=PartialState({v.name: "0" for v in variables}),
            goal=PartialState({v.name: "1" for v in variables}),
        )
        witness = tuple(f"zset{j}" for j in range(1, k + 1))
        return GadgetOutput(BoundedQuery(inst, k), "yes", witness=witness)
    inst = PlanningInstance(
        variables=(Variable("w", BINARY),),
        actions=(),
        init=PartialState({"w": "0"}),
        goal=PartialState({"w": "1"}),
    )
    return GadgetOutput(BoundedQuery(inst, k), "no")


def _parse_pattern(pattern: str, t: int) -> list[bool]:
    if len(pattern) != t or set(pattern) - {"y", "n"}:
        raise ValueError(f"pattern must be {t} characters of y/n, got {pattern!r}")
    return [c == "y" for c in pattern]


def cmd_generate(args) -> int:
    if args.kind == "clique":
        if args.complete:
            graph = MulticoloredGraph.complete(args.classes, args.per_class)
        elif args.empty:
            graph = MulticoloredGraph.empty(args.classes, args.per_class)
        else:
            graph = MulticoloredGraph.random(
                args.classes, args.per_class, args.edge_prob, args.seed
            )
        output = gen_clique_gadget(graph)
    elif args.kind == "or2":
        bits = args.bits
        if len(bits) != 2 or set(bits) - {"0", "1"}:
            raise ValueError(f"or2 needs two bits of 0/1, got {bits!r}")
        output = gen_or2(bits[0] == "1", bits[1] == "1")
    elif args.kind == "ortree":
        bits = args.bits
        if not bits or set(bits) - {"0", "1"}:
            raise ValueError(f"ortree needs a nonempty 0/1 string, got {bits!r}")
        output = gen_or_tree(c == "1" for c in bits)
    elif args.kind == "compose-pub":
        if args.k < 1:
            raise ValueError("compose-pub needs k >= 1 to leave witness slack")
        pattern = _parse_pattern(args.pattern or "y" + "n" * (args.t - 1), args.t)
        output = compose_or_pub([_pub_fixture(args.k, yes) for yes in pattern])
    else:
        pattern = _parse_pattern(args.pattern or "y" + "n" * (args.t - 1), args.t)
        output = compose_or_02([_02_fixture(args.k, yes) for yes in pattern])

    base = Path(args.out)
    # plain concatenation: with_suffix would eat dots inside the base name
    instance_path = base.parent / (base.name + ".sasbp")
    truth_path = base.parent / (base.name + ".truth")
    plan_path = base.parent / (base.name + ".plan")
    instance_path.write_text(write_instance(output.query))
    truth_lines = [f"answer {output.ground_truth}"]
    truth_lines.extend(f"note {key} {output.notes[key]}" for key in sorted(output.notes))
    truth_path.write_text("\n".join(truth_lines) + "\n")
    print(f"wrote {instance_path}")
    print(f"wrote {truth_path}")
    if output.witness is not None:
        plan_path.write_text(write_plan(output.witness))
        print(f"wrote {plan_path}")
    print(f"answer: {output.ground_truth}")
    return EXIT_YES


def cmd_bench(args) -> int:
    paths = sorted(Path(args.dir).glob("*.sasbp"))
    rows = []
    for path in paths:
        query = parse_instance(path.read_text(), allow_reserved=True)
        profile = detect_profile(query.instance)
        method = _auto_method(profile)
        explored = dp_entries = terminals = ""
        start = time.perf_counter()
        try:
            if method == "fpt02":
                result = solve_02(query, max_states=args.max_states)
                decision = "YES" if result.decision else "NO"
                explored = result.explored_states or ""
                dp_entries = result.dp_table_entries or ""
                if result.artifacts is not None:
                    terminals = len(result.artifacts.steiner.terminals)
            else:
                oracle = decide_bfs(query, max_states=args.max_states)
                decision = "YES" if oracle.decision else "NO"
                explored = oracle.explored_states
        except ResourceLimitError:
            decision = "GAVE_UP"
        elapsed = time.perf_counter() - start
        rows.append(
            {
                "instance": path.name,
                "method": method,
                "k": query.k,
                "decision": decision,
                "seconds": f"{elapsed:.4f}",
                "explored_states": explored,
                "dp_table_entries": dp_entries,
                "terminals": terminals,
            }
        )
    fieldnames = [
        "instance",
        "method",
        "k",
        "decision",
        "seconds",
        "explored_states",
        "dp_table_entries",
        "terminals",
    ]
    with open(args.out, "w", newline="") as handle:
        writer = csv.DictWriter(handle, fieldnames=fieldnames)
        writer.writeheader()
        writer.writerows(rows)
    print(f"benchmarked {len(rows)} instances -> {args.out}")
    return EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sasbp", description="bounded plan length planning toolkit"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_instance_arg(p):
        p.add_argument("instance", help="instance file (.sasbp)")
        p.add_argument(
            "--allow-reserved",
            action="store_true",
            help="accept '__'-prefixed names from generated files",
        )

    p = sub.add_parser("classify", help="report restriction profile and complexity")
    add_instance_arg(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("solve", help="decide bounded plan existence")
    add_instance_arg(p)
    p.add_argument("--method", choices=("auto", "oracle", "fpt02"), default="auto")
    p.add_argument("--plan-out", help="write the witness plan here on YES")
    p.add_argument("--max-states", type=int, default=DEFAULT_MAX_STATES)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("validate", help="check a plan file against an instance")
    add_instance_arg(p)
    p.add_argument("plan", help="plan file, one action name per line")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("preprocess", help="rewrite an instance for the Steiner pipeline")
    add_instance_arg(p)
    p.add_argument("--lemma1", action="store_true", help="apply the chain transform")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_preprocess)

    p = sub.add_parser("to-steiner", help="emit the Steiner reduction of an instance")
    add_instance_arg(p)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_to_steiner)

    p = sub.add_parser("steiner", help="operate on Steiner problem files")
    steiner_sub = p.add_subparsers(dest="steiner_command", required=True)
    ps = steiner_sub.add_parser("solve", help="find a minimum tree within the bound")
    ps.add_argument("instance", help="Steiner problem file")
    ps.add_argument("--json", action="store_true")
    ps.set_defaults(func=cmd_steiner_solve)

    p = sub.add_parser("generate", help="emit gadget instances with known answers")
    gen_sub = p.add_subparsers(dest="kind", required=True)

    pg = gen_sub.add_parser("clique", help="multicolored clique gadget")
    pg.add_argument("--classes", type=int, default=3)
    pg.add_argument("--per-class", type=int, default=2)
    pg.add_argument("--edge-prob", type=float, default=0.5)
    pg.add_argument("--seed", type=int, default=0)
    style = pg.add_mutually_exclusive_group()
    style.add_argument("--complete", action="store_true")
    style.add_argument("--empty", action="store_true")

    pg = gen_sub.add_parser("or2", help="two-input OR gadget")
    pg.add_argument("--bits", default="10", help="two input bits, e.g. 10")

    pg = gen_sub.add_parser("ortree", help="balanced OR tree over input bits")
    pg.add_argument("--bits", default="0010", help="input bits, e.g. 0010")

    pg = gen_sub.add_parser("compose-pub", help="OR composition of PUB fixtures")
    pg.add_argument("--t", type=int, default=3)
    pg.add_argument("--k", type=int, default=2)
    pg.add_argument("--pattern", help="y/n per input, e.g. ynn")

    pg = gen_sub.add_parser("compose-02", help="OR composition of two-effect fixtures")
    pg.add_argument("--t", type=int, default=2)
    pg.add_argument("--k", type=int, default=1)
    pg.add_argument("--pattern", help="y/n per input, e.g. yn")

    for pg in gen_sub.choices.values():
        pg.add_argument("--out", required=True, help="output base path (no extension)")
        pg.set_defaults(func=cmd_generate)

    p = sub.add_parser("bench", help="solve every instance in a directory")
    p.add_argument("dir", help="directory of .sasbp files")
    p.add_argument("--out", required=True, help="CSV report path")
    p.add_argument("--max-states", type=int, default=DEFAULT_MAX_STATES)
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (FormatError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())
