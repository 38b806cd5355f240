"""Shared builders for the test suite."""

import random

from sasbp.core import (
    EMPTY_STATE,
    Action,
    BoundedQuery,
    PartialState,
    PlanningInstance,
    Variable,
)

BIN = ("0", "1")


def binary(name: str) -> Variable:
    return Variable(name, BIN)


def make_query(domains, actions, init, goal, k) -> BoundedQuery:
    """Compact query builder.

    domains maps variable name to domain size (values "0", "1", ...);
    actions is an iterable of (name, pre dict, eff dict) triples.
    """
    variables = tuple(
        Variable(name, tuple(str(i) for i in range(size)))
        for name, size in domains.items()
    )
    built = tuple(
        Action(name, PartialState(pre), PartialState(eff)) for name, pre, eff in actions
    )
    inst = PlanningInstance(
        variables=variables,
        actions=built,
        init=PartialState(init),
        goal=PartialState(goal),
    )
    return BoundedQuery(inst, k)


def random_02_query(
    rng: random.Random,
    max_vars: int = 5,
    max_actions: int = 8,
    max_k: int = 4,
) -> BoundedQuery:
    """Random precondition-free query with at most two effects per action.

    Small enough for the search oracle to be a practical reference; sized to
    produce a mix of YES and NO answers across seeds.
    """
    nv = rng.randint(1, max_vars)
    names = [f"x{i}" for i in range(1, nv + 1)]
    sizes = {name: rng.randint(2, 3) for name in names}
    variables = tuple(
        Variable(name, tuple(str(i) for i in range(sizes[name]))) for name in names
    )
    init = {name: str(rng.randrange(sizes[name])) for name in names}
    goal_names = rng.sample(names, rng.randint(1, nv))
    goal = {name: str(rng.randrange(sizes[name])) for name in sorted(goal_names)}
    actions = []
    for i in range(rng.randint(0, max_actions)):
        targets = rng.sample(names, rng.randint(1, min(2, nv)))
        eff = {name: str(rng.randrange(sizes[name])) for name in targets}
        actions.append(Action(f"a{i + 1}", EMPTY_STATE, PartialState(eff)))
    inst = PlanningInstance(
        variables=variables,
        actions=tuple(actions),
        init=PartialState(init),
        goal=PartialState(goal),
    )
    return BoundedQuery(inst, rng.randint(0, max_k))


def reaches_all(root, terminals, arcs) -> bool:
    """BFS feasibility check used to audit Steiner solutions in tests."""
    adjacent = {}
    for tail, head in arcs:
        adjacent.setdefault(tail, []).append(head)
    seen = {root}
    frontier = [root]
    while frontier:
        node = frontier.pop()
        for head in adjacent.get(node, ()):
            if head not in seen:
                seen.add(head)
                frontier.append(head)
    return all(t in seen for t in terminals)
