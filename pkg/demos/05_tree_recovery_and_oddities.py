"""The matroid remembers the tree, and two structural surprises.

Rank queries alone determine which quartets the tree displays, and the
displayed quartets pin the tree down up to relabeling-free isomorphism.
Two further phenomena: trees with three disjoint cherries have a non-binary
matroid, and minimal strong lassos can have different sizes on one tree, so
they do not form a matroid of their own.
"""

import lassomatroid as lm
from lassomatroid import matroid, reconstruct

print("Recovery from rank queries only:")
for text in ("((a,b),(c,d));", "(a,b,c,d,e);", "((a,(b,c)),(d,e));"):
    source = lm.tree_from_newick(text)
    rebuilt = reconstruct.tree_from_oracle(matroid.rank_oracle(source), source.leaves)
    print(f"  {text:22s} -> {rebuilt.to_newick():22s}",
          "equivalent" if lm.are_equivalent(source, rebuilt) else "DIFFERENT")

print("\nThree disjoint cherries force a non-binary matroid:")
snow = lm.tree_from_newick("((a,d),(b,e),(c,f));")
witness = reconstruct.nonbinary_witness(snow)
print("  hexagon circuit:  ", " ".join(a + b for a, b in sorted(witness.hexagon)))
print("  square circuit:   ", " ".join(a + b for a, b in sorted(witness.quad)))
print("  their difference: ", " ".join(a + b for a, b in sorted(witness.triangles)),
      "- independent:", lm.verdict(snow, witness.triangles).independent)
print("  binary-matroid verdict:", reconstruct.is_binary_matroid(snow).is_binary)
print("  a 6-leaf caterpillar, by contrast:",
      reconstruct.is_binary_matroid(lm.caterpillar_tree("abcdef")).is_binary)

print("\nMinimal strong lassos of unequal size on one tree:")
tree = lm.tree_from_newick("((a,b,c,d),e,f);")
set_a = frozenset(lm.cord(*p) for p in
                  ("ab", "ac", "ad", "bc", "bd", "cd", "ef", "ae", "be", "ce", "de", "df"))
set_b = frozenset(lm.cord(*p) for p in
                  ("ab", "ac", "ad", "bc", "bd", "cd", "ef", "ae", "be", "cf", "df"))
for name, sub in (("12 cords", set_a), ("11 cords", set_b)):
    print(f"  {name}: minimal strong lasso:",
          lm.is_minimal_strong_lasso(tree, sub))
print("  different sizes, both minimal: these do not form matroid bases.")
