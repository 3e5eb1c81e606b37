"""Leaf-labeled trees without degree-2 vertices.

An ``XTree`` is a finite unrooted tree whose degree-1 vertices carry distinct
labels (the leaves) and whose interior vertices all have degree at least 3.
Edges carry stable integer ids so that contraction preserves the identity of
surviving edges and weightings restrict canonically.  Instances are immutable
and safe to share between threads.
"""

from __future__ import annotations

import itertools
import re
from fractions import Fraction

from .errors import NewickError, ScaleBoundError

LABEL_RE = re.compile(r"[A-Za-z0-9_]+")

Cord = tuple  # unordered pair of leaf labels, stored sorted


def cord(a, b):
    """Canonical unordered pair of two distinct leaf labels."""
    if a == b:
        raise ValueError(f"a cord needs two distinct labels, got {a!r} twice")
    return (a, b) if a < b else (b, a)


def all_cords(labels):
    """Every unordered pair over the given labels."""
    return frozenset(cord(a, b) for a, b in itertools.combinations(sorted(labels), 2))


def cross_cords(side_a, side_b):
    """All cords with one end in each side (the complete bipartite cord set)."""
    side_a, side_b = set(side_a), set(side_b)
    if side_a & side_b:
        raise ValueError("sides overlap")
    return frozenset(cord(a, b) for a in side_a for b in side_b)


class XTree:
    """Unrooted leaf-labeled tree, no degree-2 vertices, at least 3 leaves."""

    __slots__ = ("_edges", "_leaf_vertex", "_vertex_leaf", "_adjacency",
                 "_edge_ids", "_edge_column", "_canonical", "_vectors")

    def __init__(self, edges, leaves):
        self._edges = {eid: frozenset(pair) for eid, pair in dict(edges).items()}
        self._leaf_vertex = dict(leaves)
        self._vertex_leaf = {v: x for x, v in self._leaf_vertex.items()}
        if len(self._vertex_leaf) != len(self._leaf_vertex):
            raise ValueError("leaf labels do not map to distinct vertices")
        adjacency = {}
        for eid, pair in self._edges.items():
            if len(pair) != 2:
                raise ValueError(f"edge {eid} is not a 2-set")
            u, v = tuple(pair)
            adjacency.setdefault(u, []).append((v, eid))
            adjacency.setdefault(v, []).append((u, eid))
        self._adjacency = {v: tuple(nbrs) for v, nbrs in adjacency.items()}
        self._edge_ids = tuple(sorted(self._edges))
        self._edge_column = {eid: i for i, eid in enumerate(self._edge_ids)}
        self._canonical = None
        self._vectors = {}
        self._validate()

    def _validate(self):
        vertices = self.vertices
        if len(self._leaf_vertex) < 3:
            raise ValueError("an X-tree needs at least 3 leaves")
        if len(self._edges) != len(vertices) - 1:
            raise ValueError("edge count does not match a tree")
        # connectivity
        start = next(iter(vertices))
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w, _ in self._adjacency.get(v, ()):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if seen != vertices:
            raise ValueError("tree is not connected")
        degree_one = {v for v in vertices if self.degree(v) == 1}
        if degree_one != set(self._leaf_vertex.values()):
            raise ValueError("degree-1 vertices must be exactly the labeled leaves")
        for v in vertices:
            if self.degree(v) == 2:
                raise ValueError(f"vertex {v!r} has degree 2")

    # -- basic structure ---------------------------------------------------

    @property
    def vertices(self):
        return frozenset(self._adjacency)

    @property
    def edges(self):
        """Mapping edge id -> frozenset of its two endpoints."""
        return dict(self._edges)

    @property
    def edge_ids(self):
        return self._edge_ids

    @property
    def edge_column(self):
        """Mapping edge id -> column index in incidence vectors."""
        return dict(self._edge_column)

    @property
    def leaves(self):
        return tuple(sorted(self._leaf_vertex))

    @property
    def n_leaves(self):
        return len(self._leaf_vertex)

    def leaf_vertex(self, label):
        try:
            return self._leaf_vertex[label]
        except KeyError:
            raise ValueError(f"unknown leaf label {label!r}") from None

    def leaf_of_vertex(self, v):
        return self._vertex_leaf.get(v)

    def degree(self, v):
        try:
            return len(self._adjacency[v])
        except KeyError:
            raise ValueError(f"unknown vertex {v!r}") from None

    def neighbors(self, v):
        """Tuple of (neighbor vertex, edge id) pairs at a vertex."""
        try:
            return self._adjacency[v]
        except KeyError:
            raise ValueError(f"unknown vertex {v!r}") from None

    @property
    def interior_vertices(self):
        leafset = set(self._leaf_vertex.values())
        return frozenset(v for v in self._adjacency if v not in leafset)

    def is_interior_edge(self, eid):
        leafset = set(self._leaf_vertex.values())
        return not (self._edges[eid] & leafset)

    @property
    def interior_edge_ids(self):
        return tuple(eid for eid in self._edge_ids if self.is_interior_edge(eid))

    def pendant_edge(self, label):
        """Edge id of the unique edge at the given leaf."""
        v = self.leaf_vertex(label)
        return self._adjacency[v][0][1]

    def is_binary(self):
        return all(self.degree(v) == 3 for v in self.interior_vertices)

    # -- paths -------------------------------------------------------------

    def path_edges(self, u, v):
        """Ordered edge ids of the unique u-v path; empty when u == v."""
        if u not in self._adjacency:
            raise ValueError(f"unknown vertex {u!r}")
        if v not in self._adjacency:
            raise ValueError(f"unknown vertex {v!r}")
        if u == v:
            return []
        parent = {u: None}
        stack = [u]
        while stack:
            w = stack.pop()
            if w == v:
                break
            for nbr, eid in self._adjacency[w]:
                if nbr not in parent:
                    parent[nbr] = (w, eid)
                    stack.append(nbr)
        path = []
        w = v
        while parent[w] is not None:
            w, eid = parent[w]
            path.append(eid)
        path.reverse()
        return path

    def path_vertices(self, u, v):
        """All vertices on the u-v path, including the ends."""
        verts = {u}
        for eid in self.path_edges(u, v):
            verts |= self._edges[eid]
        return verts

    def cord_path(self, c):
        a, b = c
        return self.path_edges(self.leaf_vertex(a), self.leaf_vertex(b))

    def path_vector(self, c):
        """0/1 incidence tuple over edge columns: 1 iff the edge lies on the a-b path."""
        vec = self._vectors.get(c)
        if vec is None:
            cols = [0] * len(self._edge_ids)
            for eid in self.cord_path(c):
                cols[self._edge_column[eid]] = 1
            vec = tuple(cols)
            self._vectors[c] = vec
        return vec

    def distance(self, weighting, c):
        """Path sum of edge weights between the two leaves of the cord."""
        if set(weighting) != set(self._edges):
            raise ValueError("weighting domain must be exactly the edge set")
        return sum((weighting[eid] for eid in self.cord_path(c)), Fraction(0))

    # -- cherries and shape ------------------------------------------------

    def cherries(self):
        """All leaf pairs whose pendant edges share a vertex, with a properness flag.

        The pair is proper when the shared vertex has degree 3.
        """
        by_neighbor = {}
        for label, v in sorted(self._leaf_vertex.items()):
            nbr = self._adjacency[v][0][0]
            by_neighbor.setdefault(nbr, []).append(label)
        out = []
        for nbr, labels in sorted(by_neighbor.items(), key=lambda kv: kv[1]):
            proper = self.degree(nbr) == 3
            for a, b in itertools.combinations(labels, 2):
                out.append((cord(a, b), proper))
        return out

    def is_caterpillar(self):
        """Binary, with all interior vertices lying on one path."""
        if not self.is_binary():
            return False
        interior = self.interior_vertices
        if len(interior) <= 2:
            return True
        for v in interior:
            interior_nbrs = sum(1 for w, _ in self._adjacency[v] if w in interior)
            if interior_nbrs > 2:
                return False
        return True

    # -- equivalence and serialization --------------------------------------

    def canonical_form(self):
        """Canonical string; equal strings == leaf-fixing isomorphism."""
        if self._canonical is None:
            root = self._adjacency[self.leaf_vertex(self.leaves[0])][0][0]

            def subtree(v, parent):
                label = self._vertex_leaf.get(v)
                if label is not None:
                    return label
                parts = sorted(subtree(w, v) for w, _ in self._adjacency[v] if w != parent)
                return "(" + ",".join(parts) + ")"

            self._canonical = subtree(root, None)
        return self._canonical

    def equivalent_to(self, other):
        return are_equivalent(self, other)

    def to_newick(self, weighting=None):
        """Canonical Newick text; optional exact weights rendered as p/q."""
        if weighting is not None and set(weighting) != set(self._edges):
            raise ValueError("weighting domain must be exactly the edge set")
        root = self._adjacency[self.leaf_vertex(self.leaves[0])][0][0]

        def render(v, parent, via_edge):
            label = self._vertex_leaf.get(v)
            if label is not None:
                key, text = label, label
            else:
                parts = sorted(render(w, v, eid) for w, eid in self._adjacency[v] if w != parent)
                key = "(" + ",".join(p[0] for p in parts) + ")"
                text = "(" + ",".join(p[1] for p in parts) + ")"
            if weighting is not None and via_edge is not None:
                w = Fraction(weighting[via_edge])
                text += ":" + (str(w.numerator) if w.denominator == 1 else f"{w.numerator}/{w.denominator}")
            return key, text

        _, text = render(root, None, None)
        return text + ";"

    def __repr__(self):
        return f"XTree({self.canonical_form()!r})"

    # -- surgery -------------------------------------------------------------

    def contract(self, edge_ids):
        """Collapse a set of interior edges; surviving edges keep their ids."""
        F = set(edge_ids)
        if not F:
            return self
        for eid in F:
            if eid not in self._edges:
                raise ValueError(f"unknown edge id {eid}")
            if not self.is_interior_edge(eid):
                raise ValueError(f"edge {eid} is pendant; only interior edges can be collapsed")
        parent = {v: v for v in self._adjacency}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for eid in F:
            u, v = tuple(self._edges[eid])
            ru, rv = find(u), find(v)
            if ru != rv:
                # deterministic representative: the smaller by repr ordering
                lo, hi = sorted((ru, rv), key=repr)
                parent[hi] = lo
        new_edges = {}
        for eid, pair in self._edges.items():
            if eid in F:
                continue
            u, v = tuple(pair)
            new_edges[eid] = frozenset((find(u), find(v)))
        return XTree(new_edges, self._leaf_vertex)

    def restrict(self, labels):
        """Minimal subtree spanning the given leaves, degree-2 vertices suppressed.

        Returns ``(subtree, condensed)`` where ``condensed`` maps each new edge
        id to the ordered tuple of original edge ids it replaces, so an edge
        weighting of the full tree restricts by summation.
        """
        Y = set(labels)
        if not Y <= set(self._leaf_vertex):
            raise ValueError("labels are not a subset of the leaves")
        if len(Y) < 3:
            raise ValueError("a restriction needs at least 3 leaves")
        keep_leaves = {self._leaf_vertex[x] for x in Y}
        # prune: repeatedly strip degree-1 vertices that are not kept leaves
        degree = {v: len(nbrs) for v, nbrs in self._adjacency.items()}
        removed = set()
        queue = [v for v in self._adjacency if degree[v] == 1 and v not in keep_leaves]
        while queue:
            v = queue.pop()
            removed.add(v)
            for w, _ in self._adjacency[v]:
                if w in removed:
                    continue
                degree[w] -= 1
                if degree[w] == 1 and w not in keep_leaves:
                    queue.append(w)
        # walk the Steiner tree, condensing chains through degree-2 vertices
        def live_neighbors(v):
            return [(w, eid) for w, eid in self._adjacency[v] if w not in removed]

        branch = {v for v in self._adjacency
                  if v not in removed and (v in keep_leaves or degree[v] >= 3)}
        raw_edges = []  # (endpoint, endpoint, tuple of original edge ids)
        seen_starts = set()
        for v in branch:
            for w, eid in live_neighbors(v):
                if (v, eid) in seen_starts:
                    continue
                chain = [eid]
                prev, cur = v, w
                while cur not in branch:
                    nxt = [(u, e) for u, e in live_neighbors(cur) if u != prev]
                    prev, (cur, eid2) = cur, nxt[0]
                    chain.append(eid2)
                seen_starts.add((cur, chain[-1]))
                raw_edges.append((v, cur, tuple(chain)))
        raw_edges.sort(key=lambda t: min(t[2]))
        new_edges = {}
        condensed = {}
        for new_id, (u, v, chain) in enumerate(raw_edges):
            new_edges[new_id] = frozenset((u, v))
            condensed[new_id] = chain
        sub = XTree(new_edges, {x: self._leaf_vertex[x] for x in Y})
        return sub, condensed


def restrict_weighting(weighting, condensed):
    """Induced weighting on a restriction: each condensed edge gets the chain sum."""
    return {new_id: sum((Fraction(weighting[e]) for e in chain), Fraction(0))
            for new_id, chain in condensed.items()}


def are_equivalent(t1, t2):
    """Leaf-fixing isomorphism test via canonical forms."""
    if t1.leaves != t2.leaves:
        raise ValueError("trees have different leaf sets")
    return t1.canonical_form() == t2.canonical_form()


def quartet_topology(tree, four):
    """Shape of the tree restricted to four leaves.

    Returns the separated pair of cords ``(xy, zw)`` when the restriction has
    a central edge splitting {x,y} from {z,w}, or None when it is a star.
    The two leaf-to-leaf paths of a separated pair are vertex-disjoint, and
    exactly one of the three pairings is separated in that case.
    """
    labels = sorted(set(four))
    if len(labels) != 4:
        raise ValueError("need four distinct leaves")
    a, b, c, d = labels
    verts = {x: tree.leaf_vertex(x) for x in labels}
    for (p, q), (r, s) in (((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c))):
        path1 = tree.path_vertices(verts[p], verts[q])
        path2 = tree.path_vertices(verts[r], verts[s])
        if not (path1 & path2):
            return (cord(p, q), cord(r, s))
    return None


# -- parsing ----------------------------------------------------------------


def _parse_rational(token, position):
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise NewickError(f"invalid rational weight {token!r}", position) from None


def parse_newick(text):
    """Parse Newick text into ``(XTree, weighting-or-None)``.

    Weights, when present, must be given on every edge and are parsed as
    exact rationals ("3/2", "0.25", "-1").  A two-child outer grouping is
    read as an unrooted tree (its two top edges fuse into one); any other
    degree-2 vertex is an error, as are duplicate labels and fewer than
    three leaves.
    """
    pos = 0
    n = len(text)

    def skip_ws():
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def parse_node():
        # returns (children, label, weight, position)
        nonlocal pos
        skip_ws()
        if pos >= n:
            raise NewickError("unexpected end of input", pos)
        start = pos
        if text[pos] == "(":
            pos += 1
            children = [parse_node()]
            skip_ws()
            while pos < n and text[pos] == ",":
                pos += 1
                children.append(parse_node())
                skip_ws()
            if pos >= n or text[pos] != ")":
                raise NewickError("expected ',' or ')'", pos)
            pos += 1
            skip_ws()
            if pos < n and LABEL_RE.match(text[pos]):
                raise NewickError("labels on interior vertices are not supported", pos)
            label = None
        else:
            m = LABEL_RE.match(text, pos)
            if not m:
                raise NewickError(f"expected a leaf label, found {text[pos]!r}", pos)
            label = m.group(0)
            pos = m.end()
            children = []
        skip_ws()
        weight = None
        if pos < n and text[pos] == ":":
            pos += 1
            m = re.match(r"-?[0-9]+(?:/[0-9]+|\.[0-9]+)?", text[pos:])
            if not m:
                raise NewickError("expected a rational weight after ':'", pos)
            weight = _parse_rational(m.group(0), pos)
            pos += m.end()
        return (children, label, weight, start)

    root = parse_node()
    skip_ws()
    if pos >= n or text[pos] != ";":
        raise NewickError("expected ';'", pos)
    pos += 1
    skip_ws()
    if pos != n:
        raise NewickError("trailing text after ';'", pos)
    if root[2] is not None:
        raise NewickError("a weight on the outer grouping has no edge", root[3])
    if not root[0]:
        raise NewickError("a single label is not a tree", root[3])
    if len(root[0]) == 1:
        raise NewickError("outer parentheses enclose a single subtree", root[3])

    counter = itertools.count()
    edges = {}
    leaf_map = {}
    weights = {}
    label_pos = {}

    def build(node, parent_vertex):
        children, label, weight, position = node
        vid = next(counter)
        if label is not None:
            if label in leaf_map:
                raise NewickError(f"duplicate leaf label {label!r}", position)
            leaf_map[label] = vid
            label_pos[label] = position
        if parent_vertex is not None:
            eid = len(edges)
            edges[eid] = frozenset((parent_vertex, vid))
            if weight is not None:
                weights[eid] = weight
        for child in children:
            build(child, vid)
        return vid

    root_vertex = build(root, None)

    if len(root[0]) == 2:
        # unrooted convention: fuse the two edges at the outer grouping
        (e1, e2) = [eid for eid, pair in edges.items() if root_vertex in pair]
        (v1,) = edges[e1] - {root_vertex}
        (v2,) = edges[e2] - {root_vertex}
        del edges[e2]
        edges[e1] = frozenset((v1, v2))
        if e1 in weights or e2 in weights:
            if not (e1 in weights and e2 in weights):
                raise NewickError("weights must be given on all edges or none", root[3])
            weights[e1] = weights[e1] + weights.pop(e2)

    if weights and len(weights) != len(edges):
        raise NewickError("weights must be given on all edges or none", root[3])

    if len(leaf_map) < 3:
        raise NewickError("an X-tree needs at least 3 leaves", root[3])
    # degree check with positions where possible
    degree = {}
    for pair in edges.values():
        for v in pair:
            degree[v] = degree.get(v, 0) + 1
    for label, vid in leaf_map.items():
        if degree.get(vid, 0) != 1:
            raise NewickError(f"leaf label {label!r} sits on a non-leaf vertex", label_pos[label])
    for v, d in degree.items():
        if d == 2:
            raise NewickError("input contains a degree-2 vertex", root[3])
    tree = XTree(edges, leaf_map)
    return tree, (weights or None)


def tree_from_newick(text):
    """Parse and drop any weighting."""
    return parse_newick(text)[0]


# -- builders ----------------------------------------------------------------


def star_tree(labels):
    """The tree with a single interior vertex adjacent to every leaf."""
    labels = sorted(labels)
    edges = {i: frozenset((i, len(labels))) for i in range(len(labels))}
    return XTree(edges, {x: i for i, x in enumerate(labels)})


def quartet_tree(a, b, c, d):
    """The binary 4-leaf tree whose central edge separates {a,b} from {c,d}."""
    labels = (a, b, c, d)
    if len(set(labels)) != 4:
        raise ValueError("need four distinct labels")
    # vertices: 0..3 leaves in given order, 4 joins a,b; 5 joins c,d
    edges = {
        0: frozenset((0, 4)),
        1: frozenset((1, 4)),
        2: frozenset((2, 5)),
        3: frozenset((3, 5)),
        4: frozenset((4, 5)),
    }
    return XTree(edges, {a: 0, b: 1, c: 2, d: 3})


def caterpillar_tree(labels):
    """Binary tree whose leaves hang off a single interior path, in order."""
    labels = list(labels)
    if len(labels) < 4:
        if len(labels) == 3:
            return star_tree(labels)
        raise ValueError("need at least 3 labels")
    k = len(labels)
    # leaves 0..k-1, interior k..2k-3
    edges = {}
    eid = itertools.count()
    interior = list(range(k, 2 * k - 2))
    edges[next(eid)] = frozenset((0, interior[0]))
    edges[next(eid)] = frozenset((1, interior[0]))
    for i, leaf in enumerate(range(2, k - 1)):
        edges[next(eid)] = frozenset((leaf, interior[i + 1]))
    edges[next(eid)] = frozenset((k - 1, interior[-1]))
    for u, v in zip(interior, interior[1:]):
        edges[next(eid)] = frozenset((u, v))
    return XTree(edges, {x: i for i, x in enumerate(labels)})


# -- exhaustive enumeration ----------------------------------------------------


def enumerate_binary_xtrees(labels):
    """All binary trees on the labels, one per equivalence class.

    Generated by inserting each successive leaf on every edge of every
    smaller tree; each binary shape arises exactly once this way.
    """
    labels = sorted(labels)
    if len(labels) < 3:
        raise ValueError("need at least 3 labels")
    # raw shape: (edge list as vertex pairs, leaf label -> vertex)
    shapes = [([(0, 3), (1, 3), (2, 3)], {x: i for i, x in enumerate(labels[:3])})]
    for new_label in labels[3:]:
        grown = []
        for edge_list, leaf_map in shapes:
            nverts = 2 * len(leaf_map) - 2
            mid, tip = nverts, nverts + 1
            for i, (u, v) in enumerate(edge_list):
                new_list = edge_list[:i] + edge_list[i + 1:]
                new_list += [(u, mid), (mid, v), (mid, tip)]
                new_map = dict(leaf_map)
                new_map[new_label] = tip
                grown.append((new_list, new_map))
        shapes = grown
    return [XTree({i: frozenset(p) for i, p in enumerate(edge_list)}, leaf_map)
            for edge_list, leaf_map in shapes]


def enumerate_xtrees(labels, max_leaves=8):
    """One representative per equivalence class of trees on the labels.

    Yields every shape, multifurcating ones included, obtained by collapsing
    interior edge subsets of the binary shapes and deduplicating by canonical
    form.  Refuses leaf sets above ``max_leaves``.
    """
    labels = sorted(labels)
    if len(labels) > max_leaves:
        raise ScaleBoundError(
            f"{len(labels)} leaves exceeds the enumeration bound of {max_leaves}")
    binaries = enumerate_binary_xtrees(labels)
    seen = set()
    for t in binaries:
        seen.add(t.canonical_form())
        yield t
    for t in binaries:
        interior = t.interior_edge_ids
        for size in range(1, len(interior) + 1):
            for F in itertools.combinations(interior, size):
                collapsed = t.contract(F)
                key = collapsed.canonical_form()
                if key not in seen:
                    seen.add(key)
                    yield collapsed
