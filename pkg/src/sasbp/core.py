"""Core SAS+ model: variables, partial states, actions, instances, plans.

A state assigns one value from a finite domain to every variable.  Partial
states may leave variables undefined; undefined entries are simply absent
from the assignment.  Actions carry a precondition and an effect, both
partial states.  A plan is a sequence of action names that is valid from the
initial state and ends in a state satisfying the goal.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from functools import cached_property


class PartialState(Mapping):
    """Immutable assignment from variable names to values.

    Variables not present in the mapping are undefined.  Indexing with an
    undefined variable raises KeyError like a dict; use .get() to obtain
    None for undefined entries.
    """

    __slots__ = ("_assignment", "_hash")

    def __init__(self, assignment: Mapping[str, str] | Iterable[tuple[str, str]] = ()):
        self._assignment = dict(assignment)
        self._hash = None
        for name, value in self._assignment.items():
            if not isinstance(name, str) or not isinstance(value, str):
                raise TypeError("variable names and values must be strings")

    def __getitem__(self, name: str) -> str:
        return self._assignment[name]

    def __iter__(self):
        return iter(self._assignment)

    def __len__(self) -> int:
        return len(self._assignment)

    def __eq__(self, other) -> bool:
        if isinstance(other, PartialState):
            return self._assignment == other._assignment
        if isinstance(other, Mapping):
            return self._assignment == dict(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._assignment.items()))
        return self._hash

    def __repr__(self) -> str:
        inner = ", ".join(f"{n}={v}" for n, v in self._assignment.items())
        return f"PartialState({inner})"

    def defined(self) -> tuple[str, ...]:
        """Names of the variables this state assigns, in insertion order."""
        return tuple(self._assignment)


EMPTY_STATE = PartialState()


@dataclass(frozen=True)
class Variable:
    """A state variable with a finite, ordered domain of value tokens."""

    name: str
    domain: tuple[str, ...]

    def __post_init__(self):
        if not self.name:
            raise ValueError("variable name must be non-empty")
        if len(self.domain) == 0:
            raise ValueError(f"variable {self.name!r} has an empty domain")
        if len(set(self.domain)) != len(self.domain):
            raise ValueError(f"variable {self.name!r} has duplicate domain values")


@dataclass(frozen=True)
class Action:
    """A named action with partial-state precondition and effect."""

    name: str
    pre: PartialState
    eff: PartialState

    def __post_init__(self):
        if not self.name:
            raise ValueError("action name must be non-empty")


@dataclass(frozen=True)
class PlanningInstance:
    """A SAS+ task: variables, actions, a total initial state and a goal.

    The initial state must assign every variable; the goal may be partial.
    All referenced variables must be declared and all values must belong to
    the respective domains.  Construction validates these constraints.
    """

    variables: tuple[Variable, ...]
    actions: tuple[Action, ...]
    init: PartialState
    goal: PartialState

    def __post_init__(self):
        names = [v.name for v in self.variables]
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        action_names = [a.name for a in self.actions]
        if len(set(action_names)) != len(action_names):
            raise ValueError("duplicate action names")
        domains = {v.name: v.domain for v in self.variables}
        self._check_assignment("init", self.init, domains)
        missing = [n for n in names if n not in self.init]
        if missing:
            raise ValueError(f"init is not total: missing {missing[0]!r}")
        self._check_assignment("goal", self.goal, domains)
        for action in self.actions:
            self._check_assignment(f"pre of {action.name!r}", action.pre, domains)
            self._check_assignment(f"eff of {action.name!r}", action.eff, domains)

    @staticmethod
    def _check_assignment(context: str, state: PartialState, domains) -> None:
        for name, value in state.items():
            if name not in domains:
                raise ValueError(f"{context} references unknown variable {name!r}")
            if value not in domains[name]:
                raise ValueError(
                    f"{context} assigns {name!r} the value {value!r}, "
                    f"which is outside its domain"
                )

    @cached_property
    def variable_index(self) -> dict[str, int]:
        return {v.name: i for i, v in enumerate(self.variables)}

    @cached_property
    def action_by_name(self) -> dict[str, Action]:
        return {a.name: a for a in self.actions}

    def encode(self, state: PartialState) -> tuple[str, ...]:
        """Pack a total state into a value tuple in declaration order."""
        return tuple(state[v.name] for v in self.variables)

    def decode(self, values: Sequence[str]) -> PartialState:
        """Inverse of encode."""
        return PartialState(zip((v.name for v in self.variables), values))

    def is_total(self, state: PartialState) -> bool:
        return all(v.name in state for v in self.variables)


@dataclass(frozen=True)
class BoundedQuery:
    """A planning instance together with a plan length bound k."""

    instance: PlanningInstance
    k: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("plan length bound must be non-negative")


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of checking a plan step by step.

    trace holds the visited total states (initial state first).  On failure,
    failed_step is the 0-based index of the offending step, or None when the
    plan executed but its final state misses the goal.
    """

    valid: bool
    trace: tuple[PartialState, ...]
    failed_step: int | None = None
    reason: str | None = None


def is_valid_in(inst: PlanningInstance, action: Action, state: PartialState) -> bool:
    """True when every defined precondition entry agrees with the total state."""
    if not inst.is_total(state):
        raise ValueError("state is not total")
    return all(state[name] == value for name, value in action.pre.items())


def apply_action(inst: PlanningInstance, action: Action, state: PartialState) -> PartialState:
    """Successor state: effect entries override, everything else persists."""
    if not is_valid_in(inst, action, state):
        for name, value in action.pre.items():
            if state[name] != value:
                raise ValueError(
                    f"action {action.name!r} is not valid here: requires "
                    f"{name}={value}, state has {name}={state[name]}"
                )
    merged = dict(state)
    merged.update(action.eff)
    return PartialState(merged)


def is_goal_state(inst: PlanningInstance, state: PartialState) -> bool:
    """True when the total state agrees with every defined goal entry."""
    if not inst.is_total(state):
        raise ValueError("state is not total")
    return all(state[name] == value for name, value in inst.goal.items())


def validate_plan(inst: PlanningInstance, plan: Sequence[str]) -> ValidationReport:
    """Execute a plan from the initial state and report the outcome.

    Failure reasons: an unknown action name, a violated precondition, or a
    final state that does not satisfy the goal.  The trace always covers the
    successfully executed prefix.
    """
    trace = [inst.init]
    state = inst.init
    for step, name in enumerate(plan):
        action = inst.action_by_name.get(name)
        if action is None:
            return ValidationReport(False, tuple(trace), step, f"unknown action {name!r}")
        if not is_valid_in(inst, action, state):
            bad = next(n for n, v in action.pre.items() if state[n] != v)
            return ValidationReport(
                False,
                tuple(trace),
                step,
                f"precondition violation: {name!r} requires {bad}="
                f"{action.pre[bad]}, state has {bad}={state[bad]}",
            )
        state = apply_action(inst, action, state)
        trace.append(state)
    if not is_goal_state(inst, state):
        miss = next(n for n, v in inst.goal.items() if state[n] != v)
        return ValidationReport(
            False,
            tuple(trace),
            None,
            f"final state is not a goal state: {miss}={state[miss]}, "
            f"goal wants {miss}={inst.goal[miss]}",
        )
    return ValidationReport(True, tuple(trace))


def lint_instance(inst: PlanningInstance) -> list[str]:
    """Non-fatal warnings about structurally useless parts of an instance."""
    warnings = []
    for action in inst.actions:
        if len(action.eff) == 0:
            warnings.append(f"action {action.name!r} has no effects")
    return warnings
