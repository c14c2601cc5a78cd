"""The commutative Hopf algebra on paths, the chord/tree morphisms, and the
ordered (noncommutative) variant.

The coproduct of a path sums over its simple cuts: the severed closed pieces
multiply on the left, the basepointed remainder sits on the right, weighted
by the cut sign. S maps a path (necklace) to the sum of all its chord
diagrams; composing with the dual-tree map gives the embedding into decorated
trees, which the verification helpers below check to be a morphism for every
structure in sight and to be injective via the point-tree projection.
"""

from __future__ import annotations

import itertools
from typing import Callable

from .cuts import (
    Cut,
    NecklaceDiagram,
    PathDiagram,
    cut_components,
    cut_order,
    enumerate_cuts,
    epsilon,
    precedes,
)
from .dual import d_or, d_rt
from .linear import SYM_UNIT, WORD_UNIT, LinComb, Monomial, Tensor, Word
from .quiver import Necklace, Path
from .symalg import antipode_monomial, cop_free, mul_lincomb
from .verify import Report
from .trees import RootedTree


def path_coproduct(x: Path) -> Tensor:
    """Simple-cut coproduct on a path, valued in monomial pairs.

    X (x) 1 plus, for every simple cut, sign times (product of chord
    components) (x) (outer component); the empty cut supplies 1 (x) X.
    """
    out = Tensor.single((Monomial((x,)), SYM_UNIT))
    for h in enumerate_cuts(x, simple_only=True):
        comps = cut_components(x, h)
        left = Monomial(tuple(comps.chords[c] for c in h.pairs))
        out = out + epsilon(x, h) * Tensor.single((left, Monomial((comps.outer,))))
    return out


def path_antipode(x: Path) -> LinComb:
    """Antipode of a path in the symmetric Hopf algebra (geometric series)."""
    bound = len(x.letters) + 2
    return antipode_monomial(path_coproduct, Monomial((x,)), max_steps=bound)


def s_rt(x: Path) -> LinComb:
    """Sum of all chord diagrams on a path, each with coefficient 1."""
    acc = LinComb()
    for h in enumerate_cuts(x):
        acc = acc + LinComb.single(PathDiagram(x, h))
    return acc


def s_or(x: Necklace) -> LinComb:
    """Sum of all chord diagrams on a necklace.

    Cuts of the canonical representative that agree after rotation give the
    same diagram, so symmetric necklaces produce coefficients larger than 1.
    """
    acc = LinComb()
    for h in enumerate_cuts(x.rep):
        acc = acc + LinComb.single(NecklaceDiagram(x.rep, h))
    return acc


def eta_rt(x: Path) -> LinComb:
    """Embedding of paths into decorated rooted trees: dual trees of all cuts.

    Implemented as the composite of s_rt with the signed dual-tree map, so the
    factorization through the chord algebra holds by construction.
    """
    return s_rt(x).map_basis(d_rt)


def eta_or(x: Necklace, signed: bool = False) -> LinComb:
    """Embedding of necklaces into decorated oriented trees."""
    return s_or(x).map_basis(lambda d: d_or(d, signed=signed))


def nc_coproduct(x: Path) -> Tensor:
    """Ordered-tensor coproduct on a path, valued in word pairs.

    Like path_coproduct, except the severed components multiply as an ordered
    word, left to right by chord left endpoint.
    """
    out = Tensor.single((Word((x,)), WORD_UNIT))
    for h in enumerate_cuts(x, simple_only=True):
        comps = cut_components(x, h)
        left = Word(tuple(comps.chords[c] for c in sorted(h.pairs)))
        out = out + epsilon(x, h) * Tensor.single((left, Word((comps.outer,))))
    return out


def abelianize(w: Word) -> Monomial:
    return Monomial(w.factors)


def sym_extend(f: Callable[[object], LinComb]) -> Callable[[Monomial], LinComb]:
    """Extend a generator map multiplicatively to symmetric monomials.

    f sends a generator to a combination of target generators; the result
    sends a monomial to the product of the images, as a combination of target
    monomials.
    """

    def ext(m: Monomial) -> LinComb:
        acc = LinComb.single(Monomial(()), 1)
        for x in m.factors:
            acc = mul_lincomb(acc, f(x).map_basis(lambda y: LinComb.single(Monomial((y,)))))
        return acc

    return ext


def verify_hopf_morphism(
    f: Callable, cop_src: Callable, cop_tgt: Callable, sample, law: str
) -> Report:
    """Check that the multiplicative extension of f intertwines two coproducts.

    cop_src/cop_tgt are generator-level monomial-slot coproducts; f maps a
    source generator to a LinComb of target generators. The check runs on
    generators, which suffices multiplicatively.
    """
    fs = sym_extend(f)
    count = 0
    for x in sorted(sample):
        count += 1
        lhs = cop_src(x).slot_map(0, fs).slot_map(1, fs)
        rhs = Tensor.zero(2)
        for y, c in f(x).terms():
            rhs = rhs + c * cop_tgt(y)
        defect = lhs - rhs
        if defect:
            return Report(law, count, (x, defect))
    return Report(law, count)


def point_projection(lc: LinComb) -> LinComb:
    """Restrict a combination of trees to the edgeless (point) trees, keeping
    the vertex label as the value."""
    acc = LinComb()
    for t, c in lc.terms():
        if t.edge_count() == 0:
            if isinstance(t, RootedTree):
                acc = acc + LinComb.single(t.label, c)
            else:
                acc = acc + LinComb.single(t.labels[0], c)
    return acc


def verify_injectivity(eta: Callable, sample, law: str) -> Report:
    """Check the point-tree projection of eta returns each input with
    coefficient exactly 1: injectivity on the span of the sample."""
    count = 0
    for x in sorted(sample):
        count += 1
        got = point_projection(eta(x))
        want = LinComb.single(x)
        if got != want:
            return Report(law, count, (x, got - want))
    return Report(law, count)


def coassoc_formula_terms(x: Path) -> Tensor:
    """Triple-coproduct expansion organized by cut order and precedence.

    cop(x) (x) 1 plus, for every cut of order at most 2 and every ordered
    split into two simple pieces with the first not enclosing the second, the
    grouped surgery components: first-piece components (x) second-piece
    components (x) outer. The empty cut contributes 1 (x) 1 (x) x.
    """
    out = path_coproduct(x).slot_expand(
        1, lambda m: Tensor.single((m, SYM_UNIT)), 2
    )
    for h in enumerate_cuts(x):
        if cut_order(x, h) > 2:
            continue
        comps = cut_components(x, h)
        sign = epsilon(x, h)
        pairs = h.pairs
        for r in range(len(pairs) + 1):
            for first in itertools.combinations(pairs, r):
                h1 = Cut(first)
                h2 = Cut(tuple(c for c in pairs if c not in set(first)))
                if not (h1.is_simple() and h2.is_simple()):
                    continue
                if not precedes(h1, h2):
                    continue
                left = Monomial(tuple(comps.chords[c] for c in h1.pairs))
                mid = Monomial(tuple(comps.chords[c] for c in h2.pairs))
                out = out + sign * Tensor.single(
                    (left, mid, Monomial((comps.outer,)))
                )
    return out


def verify_coassoc_formula(x: Path) -> Report:
    """Compare (cop (x) 1)cop, (1 (x) cop)cop, and the order/precedence
    expansion on one path; any mismatch is reported with its defect."""
    t = path_coproduct(x)
    direct = t.slot_expand(0, lambda m: cop_free(path_coproduct, m), 2)
    other = t.slot_expand(1, lambda m: cop_free(path_coproduct, m), 2)
    formula = coassoc_formula_terms(x)
    d1 = direct - formula
    if d1:
        return Report("order/precedence coassociativity expansion", 1, (x, d1))
    d2 = direct - other
    if d2:
        return Report("coassociativity", 1, (x, d2))
    return Report("order/precedence coassociativity expansion", 1)
