"""Dual trees of chord diagrams.

The faces of a chord diagram (one per chord, plus the unbounded face) become
tree vertices; edges cross chords. Vertex labels are the surgery components,
children are ordered by chord left endpoints, and the edge dual to a chord
(i, j) is oriented away from the root exactly when letter i is unstarred --
the combinatorial shadow of drawing the chord from i to j in the upper half
plane and crossing it positively. This orientation choice, together with the
unsigned oriented map below, is pinned by the coalgebra-morphism test suite:
flipping either one breaks the oriented morphism on quivers with loops.
"""

from __future__ import annotations

from .cuts import Cut, NecklaceDiagram, PathDiagram, cut_components, epsilon
from .linear import LinComb
from .quiver import Necklace, Path
from .trees import OrientedTree, RootedTree, oriented_from_rooted


def nesting_children(cut: Cut):
    """Forest structure on the chords: children are immediately nested chords.

    Returns a map from a chord (or None for the top level) to the list of its
    immediate children, each list ordered by left endpoint.
    """
    kids = {None: []}
    for c in cut.pairs:
        kids[c] = []
    for c in cut.pairs:
        parent = None
        for d in cut.pairs:
            if d != c and d[0] < c[0] and c[1] < d[1]:
                if parent is None or d[0] > parent[0]:
                    parent = d
        kids[parent].append(c)
    for lst in kids.values():
        lst.sort()
    return kids


def dual_rooted_tree(p: Path, h: Cut) -> RootedTree:
    """Dual decorated rooted tree of a path chord diagram.

    The root is the unbounded face labeled by the outer component; each chord
    face is labeled by its surgery component. The edge dual to chord (i, j)
    points away from the root iff letter i is unstarred.
    """
    comps = cut_components(p, h)
    kids = nesting_children(h)

    def build(c) -> RootedTree:
        children = tuple(
            (p.letters[d[0] - 1].starred, build(d)) for d in kids[c]
        )
        label = comps.outer if c is None else comps.chords[c]
        return RootedTree(label, children)

    return build(None)


def dual_oriented_tree(x: NecklaceDiagram) -> OrientedTree:
    """Dual oriented tree: forget the root and corner, necklace-ize the labels.

    Built from the canonical representative; the rotation lemma (checked by
    tests) makes the result representative-independent.
    """
    return oriented_from_rooted(dual_rooted_tree(x.path, x.cut), Necklace)


def d_rt(x: PathDiagram) -> LinComb:
    """Chord-algebra-to-trees map on path diagrams: sign times the dual tree."""
    return LinComb.single(dual_rooted_tree(x.path, x.cut), epsilon(x.path, x.cut))


def d_or(x: NecklaceDiagram, signed: bool = False) -> LinComb:
    """Chord-algebra-to-trees map on necklace diagrams.

    The unsigned variant (the default) is the one that is a Lie coalgebra
    morphism; the signed variant multiplies by the cut sign and is exposed for
    the convention comparison in the verification suite.
    """
    coeff = epsilon(x.path, x.cut) if signed else 1
    return LinComb.single(dual_oriented_tree(x), coeff)
