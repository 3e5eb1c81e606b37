"""Recovering the tree from rank queries alone, and binary-matroid checks.

For any four leaves, the three 4-cycles through them have a sharp rank
signature: the cycle whose two missing (diagonal) cords are the separated
pairs of the displayed quartet is dependent, the other two are independent,
and all three are dependent exactly when the four leaves attach at a single
vertex.  Reading that signature off the rank oracle yields the set of
displayed quartets, which pins the tree down up to equivalence; the tree is
then found by exhaustive enumeration.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import matroid
from .errors import ScaleBoundError
from .tree import all_cords, cord, enumerate_xtrees, quartet_topology


def _cycle_with_diagonals(pair1, pair2):
    """The 4-cycle on {pair1, pair2} whose missing cords are exactly those pairs."""
    (x1, x2), (x3, x4) = pair1, pair2
    return frozenset((cord(x1, x3), cord(x3, x2), cord(x2, x4), cord(x4, x1)))


def _pairings(four):
    a, b, c, d = sorted(four)
    return (
        (cord(a, b), cord(c, d)),
        (cord(a, c), cord(b, d)),
        (cord(a, d), cord(b, c)),
    )


@dataclass(frozen=True)
class QuartetSet:
    """Resolved quartets: one separated pairing per 4-subset, stars omitted."""

    resolved: frozenset

    def entry_for(self, four):
        four = frozenset(four)
        for pair1, pair2 in self.resolved:
            if frozenset(pair1) | frozenset(pair2) == four:
                return (pair1, pair2)
        return None


def quartet_set_of_tree(tree):
    """Displayed quartets computed directly on the tree (restriction shapes)."""
    resolved = set()
    for four in itertools.combinations(tree.leaves, 4):
        topo = quartet_topology(tree, four)
        if topo is not None:
            resolved.add(topo)
    return QuartetSet(resolved=frozenset(resolved))


def quartet_set_from_oracle(rank_oracle, labels):
    """Displayed quartets recovered from rank queries only.

    For each 4-subset, the pairing whose diagonal 4-cycle is dependent is the
    displayed quartet; when all three 4-cycles are dependent the subset is a
    star and stays unresolved.  Any other signature cannot come from a tree.
    """
    labels = sorted(labels)
    resolved = set()
    for four in itertools.combinations(labels, 4):
        dependent = []
        for pairing in _pairings(four):
            cycle = _cycle_with_diagonals(*pairing)
            if rank_oracle(cycle) < 4:
                dependent.append(pairing)
        if len(dependent) == 1:
            resolved.add(dependent[0])
        elif len(dependent) != 3:
            raise ValueError(f"rank oracle is not tree-like on {four}")
    return QuartetSet(resolved=frozenset(resolved))


def tree_from_oracle(rank_oracle, labels, max_leaves=8):
    """The unique tree whose displayed quartets match the oracle's.

    Errors out when no enumerated tree matches or several do; either case
    means the oracle is not the rank function of a tree's cord matroid.
    """
    labels = sorted(labels)
    want = quartet_set_from_oracle(rank_oracle, labels)
    matches = [t for t in enumerate_xtrees(labels, max_leaves=max_leaves)
               if quartet_set_of_tree(t).resolved == want.resolved]
    if not matches:
        raise ValueError("no tree displays the oracle's quartets")
    if len(matches) > 1:
        raise ValueError("several trees display the oracle's quartets")
    return matches[0]


def matroids_equal(tree1, tree2, max_leaves=6):
    """Whether the two trees' cord matroids have identical rank functions.

    Ranks are compared on every cord subset of size up to one above the
    larger edge count; that is enough because a rank function is determined
    by which sets of size up to the rank are independent.
    """
    if tree1.leaves != tree2.leaves:
        raise ValueError("trees have different leaf sets")
    if tree1.n_leaves > max_leaves:
        raise ScaleBoundError(
            f"{tree1.n_leaves} leaves exceeds the comparison bound of {max_leaves}")
    cords = sorted(all_cords(tree1.leaves))
    limit = max(len(tree1.edge_ids), len(tree2.edge_ids)) + 1
    for size in range(1, min(limit, len(cords)) + 1):
        for combo in itertools.combinations(cords, size):
            if matroid.rank_of(tree1, combo) != matroid.rank_of(tree2, combo):
                return False
    return True


@dataclass(frozen=True)
class NonbinaryWitness:
    """Two circuits whose symmetric difference is independent.

    ``leaves`` lists x1..x6 where the pairs (x1,x4), (x2,x5), (x3,x6) are
    disjoint cherries; ``hexagon`` is the 6-cycle x1x2..x6x1, ``quad`` the
    4-cycle on x1,x3,x4,x6, and ``triangles`` their symmetric difference.
    """

    leaves: tuple
    hexagon: frozenset
    quad: frozenset
    triangles: frozenset


def nonbinary_witness(tree):
    """A certificate that the cord matroid is not binary, or None.

    Needs three pairwise-disjoint cherries; the construction then produces
    two circuits whose symmetric difference is independent, which no binary
    matroid allows.  The three sets are verified against the rank oracle
    before the witness is returned.
    """
    cherry_pairs = [c for c, _proper in tree.cherries()]
    for trio in itertools.combinations(cherry_pairs, 3):
        support = set()
        for c in trio:
            support |= set(c)
        if len(support) == 6:
            ordered = sorted(trio)
            x = [ordered[0][0], ordered[1][0], ordered[2][0],
                 ordered[0][1], ordered[1][1], ordered[2][1]]
            hexagon = frozenset(cord(x[i], x[(i + 1) % 6]) for i in range(6))
            quad = frozenset((cord(x[0], x[2]), cord(x[2], x[3]),
                              cord(x[3], x[5]), cord(x[5], x[0])))
            triangles = hexagon ^ quad
            for circ in (hexagon, quad):
                r = matroid.rank_of(tree, circ)
                if r != len(circ) - 1:
                    raise AssertionError("witness cycle is not rank-deficient by one")
                for drop in circ:
                    if matroid.rank_of(tree, circ - {drop}) != len(circ) - 1:
                        raise AssertionError("witness cycle is not minimally dependent")
            if matroid.rank_of(tree, triangles) != len(triangles):
                raise AssertionError("witness symmetric difference is not independent")
            return NonbinaryWitness(leaves=tuple(x), hexagon=hexagon, quad=quad,
                                    triangles=triangles)
    return None


@dataclass(frozen=True)
class BinaryMatroidVerdict:
    is_binary: bool
    violation: tuple | None   # (circuit, circuit) whose difference has no decomposition


def _decomposes_into_circuits(cord_set, circuit_list, memo):
    if not cord_set:
        return True
    if cord_set in memo:
        return memo[cord_set]
    out = False
    for circ in circuit_list:
        if circ <= cord_set and _decomposes_into_circuits(cord_set - circ, circuit_list, memo):
            out = True
            break
    memo[cord_set] = out
    return out


def is_binary_matroid(tree, max_leaves=6):
    """Exhaustive binary-matroid test over the fully enumerated circuits.

    A matroid is binary exactly when the symmetric difference of any two
    distinct circuits is a disjoint union of circuits; the first failing
    pair, if any, is reported.
    """
    if tree.n_leaves > max_leaves:
        raise ScaleBoundError(
            f"{tree.n_leaves} leaves exceeds the circuit-enumeration bound of {max_leaves}")
    circuit_list = list(matroid.circuits(tree))
    memo = {}
    for c1, c2 in itertools.combinations(circuit_list, 2):
        diff = c1 ^ c2
        if not _decomposes_into_circuits(diff, circuit_list, memo):
            return BinaryMatroidVerdict(is_binary=False, violation=(c1, c2))
    return BinaryMatroidVerdict(is_binary=True, violation=None)


def near_caterpillar_shape(tree):
    """Star with at most five leaves, or interior vertices on one path with
    degree 3 strictly inside and degree 3 or 4 at the two path ends.

    A plain shape predicate; its agreement with ``is_binary_matroid`` is
    checked in the tests at desk scale and assumed nowhere.
    """
    interior = tree.interior_vertices
    if len(interior) == 1:
        return tree.n_leaves <= 5
    ends = []
    for v in interior:
        interior_nbrs = sum(1 for w, _ in tree.neighbors(v) if w in interior)
        if interior_nbrs > 2:
            return False
        if interior_nbrs == 1:
            ends.append(v)
        if interior_nbrs == 2 and tree.degree(v) != 3:
            return False
    return len(ends) == 2 and all(tree.degree(v) in (3, 4) for v in ends)