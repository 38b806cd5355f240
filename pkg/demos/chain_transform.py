"""Why two-effect good actions need rewriting, and what it costs.

An action that fixes two goal variables at once has no arc in the Steiner
picture, so the pipeline first replaces every action by a chain of k+3
pieces gated through fresh variables.  The bound grows from k to
k(k+3)+1 and decisions are preserved; a solved chain plan projects back
to source actions.
"""

from sasbp import chain_bound, decide_bfs, lemma1_transform, project_plan, solve_02
from sasbp.core import Action, BoundedQuery, PartialState, PlanningInstance, Variable


def main():
    inst = PlanningInstance(
        variables=tuple(Variable(n, ("0", "1")) for n in "abc"),
        actions=(
            Action("ab", PartialState({}), PartialState({"a": "1", "b": "1"})),
            Action("c1", PartialState({}), PartialState({"c": "1"})),
            Action("junk", PartialState({}), PartialState({"c": "0"})),
        ),
        init=PartialState({"a": "0", "b": "0", "c": "0"}),
        goal=PartialState({"a": "1", "b": "1", "c": "1"}),
    )
    query = BoundedQuery(inst, 2)
    print(f"source: 3 actions, k = {query.k}; 'ab' fixes two goal variables at once")
    for k in range(5):
        print(f"  chain_bound({k}) = {chain_bound(k)}")
    print()

    out = lemma1_transform(query)
    print(f"transformed: k' = {out.k_prime}, {len(out.instance.actions)} actions")
    print(f"  dropped as useless: {out.dropped_actions}")
    print(f"  chain for 'ab': {out.chain_vars['ab']}")
    print()

    transformed_query = BoundedQuery(out.instance, out.k_prime)
    a = decide_bfs(query).decision
    b = decide_bfs(transformed_query).decision
    print(f"decision at k={query.k}: {a}; at k'={out.k_prime} after transform: {b}")

    # solve_02 does all of this internally and hands back a source-level plan
    result = solve_02(query)
    print(f"solve_02: decision={result.decision}, witness={result.witness}")
    print(f"  chain transform used: {result.used_lemma1}, solved at bound {result.solved_bound}")

    # projecting a transformed plan recovers the source actions that fired
    full = decide_bfs(transformed_query).witness
    print(f"transformed witness has {len(full)} steps; projected: {project_plan(out, full)}")


if __name__ == "__main__":
    main()
