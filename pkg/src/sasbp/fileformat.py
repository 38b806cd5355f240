"""Plain-text formats for instances, plans and Steiner problems.

Instance files (conventionally .sasbp) are line oriented:

    SASBP 1
    var lamp off on          # declaration order is significant
    var door 0 1
    init lamp=off door=0     # must assign every variable
    goal lamp=on             # any subset, possibly empty
    action flip
    pre door=1
    eff lamp=on
    end
    k 3

Comments run from '#' to the end of the line.  The writer emits a canonical
form: assignments ordered by variable declaration, one action block per
action in declaration order, pre and eff lines always present even when
empty.  Parsing the writer's output reproduces the query exactly, so
repeated round trips are byte stable.

Names starting with a double underscore are reserved for generated
machinery (chain variables, the Steiner root) and rejected on parse unless
allow_reserved is set.

Plan files hold one action name per line.  Steiner files hold node, root,
terminal, bound and arc lines; see parse_steiner.
"""

from __future__ import annotations

from collections.abc import Sequence

from .core import Action, BoundedQuery, PartialState, PlanningInstance, Variable
from .steiner import SteinerInstance

HEADER = "SASBP 1"
RESERVED_PREFIX = "__"


class FormatError(ValueError):
    """Raised on malformed input files; messages carry 1-based line numbers."""


def _significant_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _parse_assignments(parts: list[str], lineno: int) -> dict[str, str]:
    out: dict[str, str] = {}
    for token in parts:
        name, sep, value = token.partition("=")
        if not sep or not name or not value:
            raise FormatError(f"line {lineno}: expected NAME=VALUE, got {token!r}")
        if name in out:
            raise FormatError(f"line {lineno}: {name!r} assigned twice")
        out[name] = value
    return out


def _check_name(kind: str, name: str, lineno: int, allow_reserved: bool) -> None:
    if name.startswith(RESERVED_PREFIX) and not allow_reserved:
        raise FormatError(
            f"line {lineno}: {kind} name {name!r} uses the reserved '__' prefix "
            f"(pass allow_reserved to accept generated files)"
        )


def parse_instance(text: str, allow_reserved: bool = False) -> BoundedQuery:
    """Parse an instance file into a bounded query.

    The section order is fixed: header, variables, init, goal, action
    blocks, bound.  Structural problems raise FormatError with the line
    number; semantic problems (unknown variables, off-domain values, a
    non-total init) surface as FormatError without one, via the instance
    constructor.
    """
    lines = list(_significant_lines(text))
    pos = 0

    def peek():
        return lines[pos] if pos < len(lines) else (None, None)

    lineno, line = peek()
    if line != HEADER:
        raise FormatError(f"line {lineno or 1}: expected header {HEADER!r}")
    pos += 1

    variables: list[Variable] = []
    while True:
        lineno, line = peek()
        if line is None or not line.startswith("var "):
            break
        parts = line.split()
        if len(parts) < 3:
            raise FormatError(f"line {lineno}: var needs a name and at least one value")
        _check_name("variable", parts[1], lineno, allow_reserved)
        try:
            variables.append(Variable(parts[1], tuple(parts[2:])))
        except ValueError as exc:
            raise FormatError(f"line {lineno}: {exc}") from None
        pos += 1

    lineno, line = peek()
    if line is None or line.split()[0] != "init":
        raise FormatError(f"line {lineno or '?'}: expected init line after variables")
    init = _parse_assignments(line.split()[1:], lineno)
    pos += 1

    lineno, line = peek()
    if line is None or line.split()[0] != "goal":
        raise FormatError(f"line {lineno or '?'}: expected goal line after init")
    goal = _parse_assignments(line.split()[1:], lineno)
    pos += 1

    actions: list[Action] = []
    while True:
        lineno, line = peek()
        if line is None or not line.startswith("action "):
            break
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: action takes exactly one name")
        _check_name("action", parts[1], lineno, allow_reserved)
        name = parts[1]
        pos += 1

        block = {}
        for keyword in ("pre", "eff"):
            lineno, line = peek()
            if line is None or line.split()[0] != keyword:
                raise FormatError(
                    f"line {lineno or '?'}: expected {keyword} line in action {name!r}"
                )
            block[keyword] = _parse_assignments(line.split()[1:], lineno)
            pos += 1
        lineno, line = peek()
        if line != "end":
            raise FormatError(f"line {lineno or '?'}: expected end after action {name!r}")
        pos += 1
        actions.append(Action(name, PartialState(block["pre"]), PartialState(block["eff"])))

    lineno, line = peek()
    if line is None or line.split()[0] != "k":
        raise FormatError(f"line {lineno or '?'}: expected bound line 'k INT' last")
    parts = line.split()
    if len(parts) != 2 or not parts[1].lstrip("-").isdigit():
        raise FormatError(f"line {lineno}: expected 'k INT', got {line!r}")
    k = int(parts[1])
    pos += 1
    if pos < len(lines):
        lineno, line = lines[pos]
        raise FormatError(f"line {lineno}: unexpected content after bound: {line!r}")

    try:
        inst = PlanningInstance(
            variables=tuple(variables),
            actions=tuple(actions),
            init=PartialState(init),
            goal=PartialState(goal),
        )
        return BoundedQuery(inst, k)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def _ordered_assignments(state: PartialState, order: Sequence[str]) -> str:
    keys = [name for name in order if name in state]
    return " ".join(f"{name}={state[name]}" for name in keys)


def write_instance(query: BoundedQuery) -> str:
    """Canonical text form of a bounded query; see the module docstring."""
    inst = query.instance
    order = [v.name for v in inst.variables]
    out = [HEADER]
    for v in inst.variables:
        out.append("var " + " ".join((v.name,) + v.domain))
    out.append(("init " + _ordered_assignments(inst.init, order)).rstrip())
    out.append(("goal " + _ordered_assignments(inst.goal, order)).rstrip())
    for a in inst.actions:
        out.append(f"action {a.name}")
        out.append(("pre " + _ordered_assignments(a.pre, order)).rstrip())
        out.append(("eff " + _ordered_assignments(a.eff, order)).rstrip())
        out.append("end")
    out.append(f"k {query.k}")
    return "\n".join(out) + "\n"


def parse_plan(text: str) -> tuple[str, ...]:
    """One action name per line; comments and blank lines are skipped."""
    steps = []
    for lineno, line in _significant_lines(text):
        if len(line.split()) != 1:
            raise FormatError(f"line {lineno}: expected one action name, got {line!r}")
        steps.append(line)
    return tuple(steps)


def write_plan(plan: Sequence[str]) -> str:
    return "".join(f"{name}\n" for name in plan)


def parse_steiner(text: str) -> SteinerInstance:
    """Parse a Steiner problem.

    Sections in order: 'node NAME' lines (declaration order), one
    'root NAME', 'terminal NAME' lines, one 'bound INT', then
    'arc TAIL HEAD WEIGHT' lines with positive integer weights.
    """
    nodes: list[str] = []
    root = None
    terminals: list[str] = []
    bound = None
    weights: dict[tuple[str, str], int] = {}
    stage = "node"
    order = ("node", "root", "terminal", "bound", "arc")
    for lineno, line in _significant_lines(text):
        parts = line.split()
        keyword = parts[0]
        if keyword not in order:
            raise FormatError(f"line {lineno}: unknown keyword {keyword!r}")
        if order.index(keyword) < order.index(stage):
            raise FormatError(f"line {lineno}: {keyword} line out of order")
        stage = keyword
        if keyword == "node":
            if len(parts) != 2:
                raise FormatError(f"line {lineno}: node takes exactly one name")
            nodes.append(parts[1])
        elif keyword == "root":
            if len(parts) != 2 or root is not None:
                raise FormatError(f"line {lineno}: expected a single 'root NAME' line")
            root = parts[1]
        elif keyword == "terminal":
            if len(parts) != 2:
                raise FormatError(f"line {lineno}: terminal takes exactly one name")
            terminals.append(parts[1])
        elif keyword == "bound":
            if len(parts) != 2 or bound is not None or not parts[1].lstrip("-").isdigit():
                raise FormatError(f"line {lineno}: expected a single 'bound INT' line")
            bound = int(parts[1])
        else:
            if len(parts) != 4 or not parts[3].isdigit():
                raise FormatError(f"line {lineno}: expected 'arc TAIL HEAD WEIGHT'")
            arc = (parts[1], parts[2])
            if arc in weights:
                raise FormatError(f"line {lineno}: duplicate arc {arc!r}")
            weights[arc] = int(parts[3])
    if root is None:
        raise FormatError("missing root line")
    if bound is None:
        raise FormatError("missing bound line")
    try:
        return SteinerInstance(
            nodes=tuple(nodes),
            weights=weights,
            root=root,
            terminals=tuple(terminals),
            bound=bound,
        )
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def write_steiner(inst: SteinerInstance, origins: dict | None = None) -> str:
    """Canonical text form; origins may annotate arcs with source actions."""
    out = [f"node {name}" for name in inst.nodes]
    out.append(f"root {inst.root}")
    out.extend(f"terminal {name}" for name in inst.terminals)
    out.append(f"bound {inst.bound}")
    index = inst.index
    for (tail, head), weight in sorted(
        inst.weights.items(), key=lambda item: (index[item[0][0]], index[item[0][1]])
    ):
        line = f"arc {tail} {head} {weight}"
        if origins and (tail, head) in origins:
            line += "  # via " + ",".join(origins[(tail, head)])
        out.append(line)
    return "\n".join(out) + "\n"
