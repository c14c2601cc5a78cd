"""Decorated rooted and oriented trees and their comultiplications.

Rooted trees here are planar: the children of every vertex come in a linear
order (the cyclic order at a non-root vertex is lifted by starting just after
the edge toward the root, and the root carries a distinguished initial edge),
so isomorphism is plain structural equality. Each vertex is labeled by a
path; each edge carries an orientation flag. Oriented trees drop the root and
the initial edge, keep cyclic orders and absolute edge orientations, label
vertices by necklaces, and are canonicalized by minimizing over all root and
rotation choices.
"""

from __future__ import annotations

import itertools
import json
from typing import Callable, Tuple

from .linear import SYM_UNIT, BasisElement, Monomial, TAU12_2, Tensor, tensor
from .quiver import Necklace, Path, Quiver


class RootedTree(BasisElement):
    """Planar rooted tree with path labels and per-edge orientation flags.

    children is a tuple of (up, subtree) pairs in planar order; up=True means
    the edge points from the child toward the root side.
    """

    __slots__ = ("label", "children")

    def __init__(self, label: Path, children=()):
        children = tuple((bool(up), child) for up, child in children)
        for _, child in children:
            if not isinstance(child, RootedTree):
                raise TypeError("children must be RootedTree instances")
        parts = "".join(
            ("^" if up else "v") + child.skey[3:] for up, child in children
        )
        BasisElement.__init__(self, "RT|{%s:%s}" % (label.skey, parts))
        self.label = label
        self.children = children

    def edge_count(self) -> int:
        return sum(1 + child.edge_count() for _, child in self.children)

    def vertex_count(self) -> int:
        return 1 + sum(child.vertex_count() for _, child in self.children)

    def text(self) -> str:
        if not self.children:
            return "<%s>" % self.label.text()
        inner = " ".join(
            ("^" if up else "v") + child.text() for up, child in self.children
        )
        return "<%s: %s>" % (self.label.text(), inner)


def point(label: Path) -> RootedTree:
    return RootedTree(label)


def tree_to_json(t: RootedTree) -> dict:
    """Structured-text form: {"label": ..., "children": [{"orient", "node"}]}."""
    return {
        "label": t.label.text(),
        "children": [
            {"orient": "in" if up else "out", "node": tree_to_json(child)}
            for up, child in t.children
        ],
    }


def tree_from_json(q: Quiver, data: dict) -> RootedTree:
    label = q.parse_path(data["label"])
    children = []
    for entry in data.get("children", ()):
        orient = entry["orient"]
        if orient not in ("in", "out"):
            raise ValueError("orient must be 'in' or 'out', got %r" % orient)
        children.append((orient == "in", tree_from_json(q, entry["node"])))
    return RootedTree(label, tuple(children))


def rho(t: RootedTree) -> Tensor:
    """Edge-deletion comultiplication on decorated rooted trees.

    Every edge contributes (subtree cut off) (x) (rest containing the root);
    the cut-off subtree is rooted at its vertex formerly incident to the
    deleted edge, and all decorations restrict.
    """
    out = Tensor.zero(2)
    for idx, (flag, child) in enumerate(t.children):
        rest = t.children[:idx] + t.children[idx + 1 :]
        out = out + tensor(child, RootedTree(t.label, rest))
        for (t1, t2), c in rho(child).terms():
            replaced = t.children[:idx] + ((flag, t2),) + t.children[idx + 1 :]
            out = out + c * tensor(t1, RootedTree(t.label, replaced))
    return out


def rho_ss(t: RootedTree) -> Tensor:
    """Skew-symmetrized rho: the Lie cobracket on rooted trees."""
    d = rho(t)
    return d - d.permute(TAU12_2)


def admissible_cuts(t: RootedTree):
    """All edge cuts with at most one cut edge on any root-to-vertex path.

    Each cut is returned as (components, trunk): the tuple of subtrees severed
    (in planar order) and the remaining tree at the root. The empty cut is
    included as ((), t).
    """
    per_child = []
    for flag, child in t.children:
        options = [((child,), None)]
        for comps, trunk in admissible_cuts(child):
            options.append((comps, (flag, trunk)))
        per_child.append(options)
    out = []
    for combo in itertools.product(*per_child):
        comps = tuple(itertools.chain.from_iterable(c for c, _ in combo))
        kids = tuple(k for _, k in combo if k is not None)
        out.append((comps, RootedTree(t.label, kids)))
    return out


def tree_coproduct(t: RootedTree) -> Tensor:
    """Forest-valued coproduct on rooted trees.

    T (x) 1 plus, for every admissible cut, the product of severed subtrees
    tensor the trunk; the empty cut supplies 1 (x) T.
    """
    out = Tensor.single((Monomial((t,)), SYM_UNIT))
    for comps, trunk in admissible_cuts(t):
        out = out + Tensor.single((Monomial(comps), Monomial((trunk,))))
    return out


def tree_counit(t: RootedTree):
    return 0


class OrientedTree(BasisElement):
    """Unrooted tree with cyclic edge orders, oriented edges, necklace labels.

    Stored as an explicit graph; the canonical key minimizes the planar
    serialization over every choice of root vertex and rotation of the root's
    cyclic order, so equality is isomorphism of decorated oriented trees.
    """

    __slots__ = ("labels", "edge_list", "adj", "canon_root", "canon_rot")

    def __init__(self, labels, edge_list, adj):
        labels = tuple(labels)
        edge_list = tuple((int(u), int(v)) for u, v in edge_list)
        adj = tuple(tuple(es) for es in adj)
        for lab in labels:
            if not isinstance(lab, Necklace):
                raise TypeError("oriented tree labels must be necklaces")
        if len(adj) != len(labels):
            raise ValueError("adjacency size differs from label count")
        if len(edge_list) != len(labels) - 1:
            raise ValueError("an oriented tree on n vertices needs n - 1 edges")
        best = None
        for r in range(len(labels)):
            for s in range(max(len(adj[r]), 1)):
                key = self._serialize(labels, edge_list, adj, r, s)
                if best is None or key < best[0]:
                    best = (key, r, s)
        BasisElement.__init__(self, "OT|" + best[0])
        self.labels = labels
        self.edge_list = edge_list
        self.adj = adj
        self.canon_root = best[1]
        self.canon_rot = best[2]

    @staticmethod
    def _serialize(labels, edge_list, adj, root: int, rot: int) -> str:
        def other(eidx, v):
            u, w = edge_list[eidx]
            return w if u == v else u

        def ser(v, parent_edge):
            es = adj[v]
            if parent_edge is None:
                order = es[rot:] + es[:rot]
            else:
                k = es.index(parent_edge)
                order = es[k + 1 :] + es[:k]
            parts = []
            for eidx in order:
                w = other(eidx, v)
                arrow = "^" if edge_list[eidx][1] == v else "v"
                parts.append(arrow + ser(w, eidx))
            return "{%s:%s}" % (labels[v].skey, "".join(parts))

        return ser(root, None)

    def vertex_count(self) -> int:
        return len(self.labels)

    def edge_count(self) -> int:
        return len(self.edge_list)

    def delete_edge(self, eidx: int):
        """Split at one edge; returns (away_part, toward_part) following the
        edge orientation: the second component is the one the edge points to."""
        u, v = self.edge_list[eidx]

        def component(seed):
            seen = {seed}
            stack = [seed]
            while stack:
                a = stack.pop()
                for e2 in self.adj[a]:
                    if e2 == eidx:
                        continue
                    x, y = self.edge_list[e2]
                    b = y if x == a else x
                    if b not in seen:
                        seen.add(b)
                        stack.append(b)
            verts = sorted(seen)
            vmap = {old: k for k, old in enumerate(verts)}
            emap = {}
            edges = []
            for k, (x, y) in enumerate(self.edge_list):
                if k != eidx and x in seen and y in seen:
                    emap[k] = len(edges)
                    edges.append((vmap[x], vmap[y]))
            adj = []
            for old in verts:
                adj.append(tuple(emap[e2] for e2 in self.adj[old] if e2 != eidx))
            return OrientedTree(tuple(self.labels[old] for old in verts), edges, adj)

        return component(u), component(v)

    def to_json(self) -> dict:
        def other(eidx, v):
            a, b = self.edge_list[eidx]
            return b if a == v else a

        def walk(v, parent_edge, rot):
            es = self.adj[v]
            if parent_edge is None:
                order = es[rot:] + es[:rot]
            else:
                k = es.index(parent_edge)
                order = es[k + 1 :] + es[:k]
            children = []
            for eidx in order:
                w = other(eidx, v)
                orient = "in" if self.edge_list[eidx][1] == v else "out"
                children.append({"orient": orient, "node": walk(w, eidx, 0)})
            return {"label": self.labels[v].text(), "children": children}

        return walk(self.canon_root, None, self.canon_rot)

    def text(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))


def oriented_point(label: Necklace) -> OrientedTree:
    return OrientedTree((label,), (), ((),))


def oriented_from_rooted(t: RootedTree, to_label: Callable[[Path], Necklace]) -> OrientedTree:
    """Forget the root and corner of a decorated rooted tree.

    Path labels are mapped through to_label (typically necklace
    canonicalization; labels of trees dual to necklace diagrams are closed).
    The cyclic order at a former non-root vertex starts with the edge back
    toward the root, matching the planar lifting used by RootedTree.
    """
    labels = []
    edges = []
    adj = []

    def add_vertex(label):
        labels.append(to_label(label))
        adj.append([])
        return len(labels) - 1

    def walk(node: RootedTree, vidx: int, parent_edge):
        if parent_edge is not None:
            adj[vidx].append(parent_edge)
        for up, child in node.children:
            widx = add_vertex(child.label)
            eidx = len(edges)
            edges.append((widx, vidx) if up else (vidx, widx))
            adj[vidx].append(eidx)
            walk(child, widx, eidx)

    r = add_vertex(t.label)
    walk(t, r, None)
    return OrientedTree(tuple(labels), tuple(edges), tuple(tuple(es) for es in adj))


def rho_ss_oriented(t: OrientedTree) -> Tensor:
    """Lie cobracket on oriented trees: skew edge deletion.

    For every edge, the component the edge points to sits in the second slot
    of the positive term.
    """
    out = Tensor.zero(2)
    for eidx in range(len(t.edge_list)):
        t1, t2 = t.delete_edge(eidx)
        out = out + tensor(t1, t2) - tensor(t2, t1)
    return out


def all_rooted_trees(max_edges: int, labels, flags: Tuple[bool, ...] = (False,)):
    """Every decorated planar rooted tree with at most max_edges edges.

    labels supplies the vertex alphabet; flags the edge-orientation alphabet.
    Intended for exhaustive sweeps at desk scale, so keep both alphabets small.
    """
    labels = tuple(labels)
    flags = tuple(flags)
    tree_cache: dict = {}

    def trees(budget: int):
        if budget in tree_cache:
            return tree_cache[budget]
        out = []
        for kids in forests(budget):
            for lab in labels:
                out.append(RootedTree(lab, kids))
        tree_cache[budget] = out
        return out

    forest_cache: dict = {}

    def forests(budget: int):
        if budget in forest_cache:
            return forest_cache[budget]
        if budget == 0:
            forest_cache[0] = [()]
            return forest_cache[0]
        out = []
        for first_size in range(budget):
            for sub in trees(first_size):
                for flag in flags:
                    for rest in forests(budget - 1 - first_size):
                        out.append(((flag, sub),) + rest)
        forest_cache[budget] = out
        return out

    all_out = []
    for e in range(max_edges + 1):
        all_out.extend(trees(e))
    return sorted(all_out)


def all_oriented_trees(max_edges: int, labels, flags: Tuple[bool, ...] = (False, True)):
    """Every decorated oriented tree with at most max_edges edges, deduplicated.

    labels must be necklaces; generation passes through rooted trees with the
    corresponding closed-path labels, so every isomorphism class is hit.
    """
    by_key = {}
    path_labels = tuple(n.rep for n in labels)
    for t in all_rooted_trees(max_edges, path_labels, flags):
        o = oriented_from_rooted(t, Necklace)
        by_key[o.skey] = o
    return [by_key[k] for k in sorted(by_key)]
