"""Hard instances from colorful cliques.

Finding a clique with one vertex per color class is the textbook
parameterized-hardness anchor.  The gadget here turns any such graph into
a precondition-free planning task with three-effect actions whose bound-k
answer equals the clique answer, so it produces planning instances that
are hard for the number of classes while staying easy to state.
"""

import random

from sasbp import MulticoloredGraph, decide_bfs, gen_clique_gadget, validate_plan


def show(graph, label):
    out = gen_clique_gadget(graph)
    inst = out.query.instance
    print(f"{label}: {sum(len(c) for c in graph.classes)} vertices, "
          f"{len(graph.edges)} edges -> {len(inst.variables)} variables, "
          f"{len(inst.actions)} actions, bound {out.query.k}")
    print(f"  ground truth: {out.ground_truth}")
    if out.witness:
        print(f"  clique found: {out.notes['clique']}")
        print(f"  witness ({len(out.witness)} steps): {' '.join(out.witness)}")
        assert validate_plan(inst, out.witness).valid
    oracle = decide_bfs(out.query)
    print(f"  search oracle agrees: {(out.ground_truth == 'yes') == oracle.decision}")
    print()


def main():
    show(MulticoloredGraph.complete(3, 2), "complete 3x2")
    show(MulticoloredGraph.empty(3, 2), "empty 3x2")

    rng = random.Random(20)
    for trial in range(1, 4):
        g = MulticoloredGraph.random(3, 2, 0.5, rng=rng)
        show(g, f"random 3x2 #{trial}")


if __name__ == "__main__":
    main()
