"""Syntactic restrictions, goal-relative effect classes, and complexity lookup.

Two restriction families are tracked:

* the four structural flags P (postunique), U (unary), B (Boolean) and
  S (single-valued), and
* the numeric profile (p, e): the maximum number of defined precondition
  and effect entries over all actions.

Effects are classed relative to the goal: an effect is good when it writes
the goal value (or the goal leaves the variable free) and bad otherwise.
Actions are good, bad or mixed accordingly.  Bad actions can be deleted from
any valid plan, so stripping them preserves solvability at every bound.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .core import PlanningInstance

GOOD = "good"
BAD = "bad"
MIXED = "mixed"

IN_P = "in P"
NP_COMPLETE = "NP-complete"
NP_HARD = "NP-hard"
PSPACE_COMPLETE = "PSPACE-complete"

IN_FPT = "in FPT"
W1_COMPLETE = "W[1]-complete"
W2_COMPLETE = "W[2]-complete"

KERNEL_CONSTANT = "yes (constant)"
KERNEL_NO_POLY = "no unless coNP ⊆ NP/poly"
KERNEL_NA = "n/a (not in FPT)"

#: Marker for "this parameter is unbounded" in complexity table queries.
ARBITRARY = None


@dataclass(frozen=True)
class RestrictionProfile:
    """Structural flags plus the numeric (p, e) profile of an instance."""

    has_P: bool
    has_U: bool
    has_B: bool
    has_S: bool
    max_preconditions: int
    max_effects: int

    def flags(self) -> frozenset[str]:
        present = []
        if self.has_P:
            present.append("P")
        if self.has_U:
            present.append("U")
        if self.has_B:
            present.append("B")
        if self.has_S:
            present.append("S")
        return frozenset(present)


@dataclass(frozen=True)
class EffectClassification:
    """Goal-relative classes for every defined effect and every action.

    per_effect maps (action name, variable name) to good/bad; per_action maps
    action names to good/bad/mixed.  Actions without effects are vacuously
    good and additionally listed in .vacuous since they can never help.
    """

    per_effect: dict[tuple[str, str], str]
    per_action: dict[str, str]
    vacuous: tuple[str, ...]


@dataclass(frozen=True)
class ClassificationRecord:
    """One entry of the complexity tables."""

    classical: str
    parameterized: str
    poly_kernel: str


def detect_profile(inst: PlanningInstance) -> RestrictionProfile:
    """Compute all four structural flags and the (p, e) profile.

    P: for every variable and value, at most one action writes that value.
    U: every action has exactly one defined effect entry, so actions with no
       effects violate U.
    B: every domain has exactly two values.
    S: all prevail values agree, where a prevail entry of an action is a
       defined precondition on a variable the action does not affect.
    """
    writers: dict[tuple[str, str], int] = {}
    prevail: dict[str, set[str]] = {}
    max_pre = 0
    max_eff = 0
    unary = True
    for action in inst.actions:
        max_pre = max(max_pre, len(action.pre))
        max_eff = max(max_eff, len(action.eff))
        if len(action.eff) != 1:
            unary = False
        for name, value in action.eff.items():
            writers[(name, value)] = writers.get((name, value), 0) + 1
        for name, value in action.pre.items():
            if name not in action.eff:
                prevail.setdefault(name, set()).add(value)
    return RestrictionProfile(
        has_P=all(count <= 1 for count in writers.values()),
        has_U=unary,
        has_B=all(len(v.domain) == 2 for v in inst.variables),
        has_S=all(len(values) <= 1 for values in prevail.values()),
        max_preconditions=max_pre,
        max_effects=max_eff,
    )


def classify_effects(inst: PlanningInstance) -> EffectClassification:
    per_effect: dict[tuple[str, str], str] = {}
    per_action: dict[str, str] = {}
    vacuous = []
    for action in inst.actions:
        good_seen = False
        bad_seen = False
        for name, value in action.eff.items():
            goal_value = inst.goal.get(name)
            cls = GOOD if goal_value is None or goal_value == value else BAD
            per_effect[(action.name, name)] = cls
            if cls == GOOD:
                good_seen = True
            else:
                bad_seen = True
        if bad_seen and good_seen:
            per_action[action.name] = MIXED
        elif bad_seen:
            per_action[action.name] = BAD
        else:
            per_action[action.name] = GOOD
            if not good_seen:
                vacuous.append(action.name)
    return EffectClassification(per_effect, per_action, tuple(vacuous))


def broken_variables(inst: PlanningInstance) -> tuple[str, ...]:
    """Variables whose initial value differs from a defined goal value.

    Any plan must touch each of these at least once, so their count bounds
    the plan length from below for instances with few effects per action.
    """
    return tuple(
        v.name
        for v in inst.variables
        if v.name in inst.goal and inst.init[v.name] != inst.goal[v.name]
    )


def strip_bad_actions(inst: PlanningInstance) -> PlanningInstance:
    """Drop actions whose effects are all bad.  Preserves solvability at
    every plan length bound, since bad actions can be deleted from any valid
    plan without breaking validity."""
    classes = classify_effects(inst)
    kept = tuple(a for a in inst.actions if classes.per_action[a.name] != BAD)
    if len(kept) == len(inst.actions):
        return inst
    return replace(inst, actions=kept)


# (p, e) table.  Rows: p = 0, 1, fixed > 1, arbitrary; columns: e = 1, 2,
# fixed > 2, arbitrary.  Bounded plan existence with the bound as parameter.
_R = ClassificationRecord
_PE_TABLE: dict[tuple[str, str], ClassificationRecord] = {
    ("0", "1"): _R(IN_P, IN_FPT, KERNEL_CONSTANT),
    ("0", "2"): _R(NP_COMPLETE, IN_FPT, KERNEL_NO_POLY),
    ("0", ">2"): _R(NP_COMPLETE, W1_COMPLETE, KERNEL_NA),
    ("0", "any"): _R(NP_COMPLETE, W2_COMPLETE, KERNEL_NA),
    ("1", "1"): _R(NP_HARD, W1_COMPLETE, KERNEL_NA),
    ("1", "2"): _R(NP_HARD, W1_COMPLETE, KERNEL_NA),
    ("1", ">2"): _R(NP_HARD, W1_COMPLETE, KERNEL_NA),
    ("1", "any"): _R(PSPACE_COMPLETE, W2_COMPLETE, KERNEL_NA),
    (">1", "1"): _R(NP_HARD, W1_COMPLETE, KERNEL_NA),
    (">1", "2"): _R(PSPACE_COMPLETE, W1_COMPLETE, KERNEL_NA),
    (">1", ">2"): _R(PSPACE_COMPLETE, W1_COMPLETE, KERNEL_NA),
    (">1", "any"): _R(PSPACE_COMPLETE, W2_COMPLETE, KERNEL_NA),
    ("any", "1"): _R(PSPACE_COMPLETE, W1_COMPLETE, KERNEL_NA),
    ("any", "2"): _R(PSPACE_COMPLETE, W1_COMPLETE, KERNEL_NA),
    ("any", ">2"): _R(PSPACE_COMPLETE, W1_COMPLETE, KERNEL_NA),
    ("any", "any"): _R(PSPACE_COMPLETE, W2_COMPLETE, KERNEL_NA),
}

# Flag-subset table.  Restrictions containing P, U and S are polynomial;
# other P-containing restrictions are NP-hard but fixed-parameter tractable
# without a polynomial kernel; the remaining ones split on U, which lowers
# the parameterized complexity from W[2] to W[1].
def _pubs_record(flags: frozenset[str]) -> ClassificationRecord:
    if {"P", "U", "S"} <= flags:
        return _R(IN_P, IN_FPT, KERNEL_CONSTANT)
    if "P" in flags:
        return _R(NP_HARD, IN_FPT, KERNEL_NO_POLY)
    if flags <= {"U", "S", "B"} and {"U", "S"} <= flags:
        # US and UBS stay in NP classically.
        return _R(NP_COMPLETE, W1_COMPLETE, KERNEL_NA)
    if "U" in flags:
        return _R(PSPACE_COMPLETE, W1_COMPLETE, KERNEL_NA)
    return _R(PSPACE_COMPLETE, W2_COMPLETE, KERNEL_NA)


_ALL_FLAGS = ("P", "U", "B", "S")
_PUBS_TABLE: dict[frozenset[str], ClassificationRecord] = {}
for _mask in range(16):
    _flags = frozenset(f for i, f in enumerate(_ALL_FLAGS) if _mask >> i & 1)
    _PUBS_TABLE[_flags] = _pubs_record(_flags)


def _pe_bucket(p: int | None, e: int | None) -> tuple[str, str]:
    if p is ARBITRARY:
        row = "any"
    elif p == 0:
        row = "0"
    elif p == 1:
        row = "1"
    else:
        row = ">1"
    if e is ARBITRARY:
        col = "any"
    elif e == 0:
        raise ValueError("outside classified range: the (p, e) table starts at e = 1")
    elif e == 1:
        col = "1"
    elif e == 2:
        col = "2"
    else:
        col = ">2"
    return row, col


def lookup_pe(p: int | None, e: int | None) -> ClassificationRecord:
    """Entry of the (p, e) table; pass ARBITRARY (None) for unbounded."""
    if p is not ARBITRARY and p < 0:
        raise ValueError("p must be non-negative or ARBITRARY")
    if e is not ARBITRARY and e < 0:
        raise ValueError("e must be non-negative or ARBITRARY")
    return _PE_TABLE[_pe_bucket(p, e)]


def lookup_pubs(flags: frozenset[str] | set[str] | str) -> ClassificationRecord:
    """Entry of the flag-subset table, keyed by a subset of {P, U, B, S}."""
    if isinstance(flags, str):
        flags = set(flags)
    flags = frozenset(flags)
    unknown = flags - set(_ALL_FLAGS)
    if unknown:
        raise ValueError(f"unknown restriction flags: {sorted(unknown)}")
    return _PUBS_TABLE[flags]


def lookup_complexity(profile: RestrictionProfile, pubs_mode: bool = False) -> ClassificationRecord:
    """Classify an instance's problem family by its detected profile.

    With pubs_mode the lookup keys on the structural flags, otherwise on the
    (p, e) buckets.  Instances with e = 0 fall outside the classified range.
    """
    if pubs_mode:
        return lookup_pubs(profile.flags())
    return lookup_pe(profile.max_preconditions, profile.max_effects)
