import itertools
import random

import pytest

from sasbp.steiner import (
    SteinerInstance,
    brute_dst,
    extract_arborescence,
    solve_dst,
)
from helpers import reaches_all


def diamond():
    # s -> a -> t1, s -> b -> t1, b -> t2; cheapest tree for {t1, t2} is
    # forced through b
    return SteinerInstance(
        nodes=("s", "a", "b", "t1", "t2"),
        weights={
            ("s", "a"): 1,
            ("a", "t1"): 1,
            ("s", "b"): 1,
            ("b", "t1"): 1,
            ("b", "t2"): 1,
        },
        root="s",
        terminals=("t1", "t2"),
        bound=3,
    )


def test_instance_validation():
    with pytest.raises(ValueError, match="unknown"):
        SteinerInstance(("a",), {("a", "b"): 1}, "a", (), 0)
    with pytest.raises(ValueError, match="root"):
        SteinerInstance(("a",), {}, "b", (), 0)
    with pytest.raises(ValueError, match="weight"):
        SteinerInstance(("a", "b"), {("a", "b"): 0}, "a", ("b",), 1)
    with pytest.raises(ValueError, match="terminal"):
        SteinerInstance(("a",), {}, "a", ("b",), 1)


def test_terminals_are_canonicalized():
    inst = SteinerInstance(
        nodes=("s", "x", "y"),
        weights={("s", "x"): 1, ("s", "y"): 1},
        root="s",
        terminals=("y", "x", "y"),
        bound=2,
    )
    assert inst.terminals == ("x", "y")


def test_no_terminals_means_empty_tree():
    inst = SteinerInstance(("s", "x"), {("s", "x"): 1}, "s", (), 0)
    solution = solve_dst(inst)
    assert solution is not None
    assert solution.arcs == () and solution.total_weight == 0


def test_diamond_picks_the_shared_branch():
    solution = solve_dst(diamond())
    assert solution is not None
    assert solution.total_weight == 3
    assert set(solution.arcs) == {("s", "b"), ("b", "t1"), ("b", "t2")}


def test_bound_is_respected():
    inst = diamond()
    tight = SteinerInstance(inst.nodes, dict(inst.weights), inst.root, inst.terminals, 2)
    assert solve_dst(tight) is None


def test_unreachable_terminal():
    inst = SteinerInstance(("s", "t"), {}, "s", ("t",), 5)
    assert solve_dst(inst) is None


def test_early_exit_when_terminals_exceed_budget():
    # three terminals, all arcs weight 2, bound 5 < 3 * 2
    inst = SteinerInstance(
        nodes=("s", "t1", "t2", "t3"),
        weights={("s", "t1"): 2, ("s", "t2"): 2, ("s", "t3"): 2},
        root="s",
        terminals=("t1", "t2", "t3"),
        bound=5,
    )
    stats = {}
    assert solve_dst(inst, stats_out=stats) is None
    assert stats.get("table_entries") is None  # bailed out before the table


def test_stats_reported():
    stats = {}
    solution = solve_dst(diamond(), stats_out=stats)
    assert solution is not None
    assert stats["terminals"] == 2
    assert stats["table_entries"] == 3 * 5  # (2^2 - 1) masks times 5 nodes


def test_extract_layers_by_depth():
    solution = solve_dst(diamond())
    layers = extract_arborescence(solution, diamond())
    assert layers == [
        [("s", "b")],
        [("b", "t1"), ("b", "t2")],
    ]


def test_extract_rejects_foreign_arcs():
    inst = diamond()
    solution = solve_dst(inst)
    other = SteinerInstance(("s", "x"), {("s", "x"): 1}, "s", ("x",), 1)
    with pytest.raises(ValueError):
        extract_arborescence(solution, other)


def random_steiner(rng: random.Random) -> SteinerInstance:
    n = rng.randint(2, 7)
    nodes = tuple(f"n{i}" for i in range(n))
    pairs = [(a, b) for a in nodes for b in nodes if a != b]
    rng.shuffle(pairs)
    weights = {arc: 1 for arc in pairs[: rng.randint(0, min(14, len(pairs)))]}
    root = nodes[0]
    others = list(nodes[1:])
    terminals = tuple(rng.sample(others, rng.randint(0, min(3, len(others)))))
    return SteinerInstance(nodes, weights, root, terminals, rng.randint(0, 6))


def test_agrees_with_brute_force_on_random_instances():
    rng = random.Random(90210)
    solved = empty = 0
    for _ in range(60):
        inst = random_steiner(rng)
        fast = solve_dst(inst)
        slow = brute_dst(inst)
        assert (fast is None) == (slow is None)
        if fast is None:
            empty += 1
            continue
        solved += 1
        assert fast.total_weight == slow.total_weight
        assert fast.total_weight <= inst.bound
        assert reaches_all(inst.root, inst.terminals, fast.arcs)
        # arborescence shape: at most one arc into any node, none into the root
        heads = [h for _, h in fast.arcs]
        assert len(heads) == len(set(heads))
        assert inst.root not in heads
    assert solved > 10 and empty > 5


def test_deterministic_resolution():
    rng = random.Random(4242)
    for _ in range(20):
        inst = random_steiner(rng)
        assert solve_dst(inst) == solve_dst(inst)


def test_brute_force_subset_budget():
    nodes = tuple(f"n{i}" for i in range(7))
    weights = {(a, b): 1 for a, b in itertools.permutations(nodes, 2)}
    inst = SteinerInstance(nodes, weights, "n0", ("n1", "n2", "n3"), 6)
    with pytest.raises(RuntimeError, match="budget"):
        brute_dst(inst, max_subsets=10)
