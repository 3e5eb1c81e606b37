"""On a star tree, rank questions become cycle-parity questions.

Cords over a star tree form the even-cycle matroid of the graph drawn on
the leaves: a cord set spans iff no connected component is bipartite, is
independent iff each component carries at most one cycle and that cycle is
odd, and circuits are even cycles or two odd cycles tied together.
"""

import random

import lassomatroid as lm
from lassomatroid import stargraph

labels = "abcde"
star = lm.star_tree(labels)


def show(name, pairs):
    sub = frozenset(lm.cord(*p) for p in pairs)
    report = stargraph.analyze(labels, sub)
    parts = ["".join(sorted(c.vertices)) + ("*" if not c.bipartite else "")
             for c in report.components]
    oracle = lm.verdict(star, sub)
    print(f"{name:24s} components {'/'.join(parts):18s}"
          f" rank {stargraph.star_rank(labels, sub)}"
          f" lasso={stargraph.star_is_lasso(labels, sub)!s:5s}"
          f" circuit={stargraph.star_is_circuit(labels, sub)!s:5s}"
          f" | oracle rank {oracle.rank}")


print("(* marks a component with an odd cycle)\n")
show("triangle + isolated", ["ab", "bc", "ca"])
show("odd 5-cycle", ["ab", "bc", "cd", "de", "ea"])
show("even 4-cycle", ["ab", "bc", "cd", "da"])
show("two triangles at c", ["ab", "bc", "ca", "cd", "de", "ec"])
show("triangle + edge", ["ab", "bc", "ca", "de"])

print("\nclosure of triangle + edge de:",
      sorted("".join(c) for c in stargraph.star_closure(labels,
             [lm.cord(*p) for p in ("ab", "bc", "ca", "de")])))

print("\nRandom agreement check against the exact rank oracle:")
rng = random.Random(0)
pool = sorted(lm.all_cords(labels))
mismatches = 0
for _ in range(500):
    sub = frozenset(rng.sample(pool, rng.randint(0, len(pool))))
    if stargraph.star_rank(labels, sub) != lm.rank_of(star, sub):
        mismatches += 1
print("mismatches over 500 random subsets:", mismatches)
