"""Rebuilding every basis of a tree from the bases of a collapsed tree.

Collapsing an interior edge gives a smaller tree whose bases are one cord
short.  A basis of the collapsed tree plus one extra cord is a basis of the
full tree exactly when the cord's coordinates over the basis, taken in the
collapsed tree, disagree with the incidence of the collapsed edge.  Walking
every (basis, cord) pair therefore reproduces the full basis list.
"""

import lassomatroid as lm
from lassomatroid import matroid

quartet = lm.tree_from_newick("((a,b),(c,d));")
f = quartet.interior_edge_ids[0]
star = quartet.contract({f})
print("full tree:     ", quartet.to_newick())
print("collapsed tree:", star.to_newick(), "(the star)")

b1 = frozenset(lm.cord(*p) for p in ("ab", "bc", "ca", "da"))
b2 = frozenset(lm.cord(*p) for p in ("ab", "bc", "ca", "dc"))

for name, base in (("B1 = ab bc ca da", b1), ("B2 = ab bc ca dc", b2)):
    print(f"\nstar basis {name}:")
    for extra in sorted(lm.all_cords("abcd") - base):
        order = sorted(base)
        rows = [star.path_vector(c) for c in order]
        coeffs = lm.solve_coordinates(rows, star.path_vector(extra))
        pretty = " + ".join(f"{q}*{x}{y}" for q, (x, y) in zip(coeffs, order) if q)
        allowed = matroid.contraction_extends(quartet, f, base, extra)
        print(f"  {extra[0]}{extra[1]} = {pretty:<30s} -> "
              f"{'joins a basis' if allowed else 'rejected'}")

rebuilt = set(matroid.contraction_bases(quartet, f))
direct = set(matroid.bases(quartet))
print("\nrecursion rebuilt", len(rebuilt), "bases; equal to the direct list:",
      rebuilt == direct)

print("\nThe same identity at a larger size (6-leaf caterpillar):")
cat = lm.caterpillar_tree("abcdef")
direct = set(matroid.bases(cat))
for edge in cat.interior_edge_ids:
    rebuilt = set(matroid.contraction_bases(cat, edge))
    print(f"  collapse edge {edge}: {len(rebuilt)} bases, matches direct:",
          rebuilt == direct)
