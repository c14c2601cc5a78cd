"""Reconstruction of a graded coproduct from its graft-level part.

A coproduct of graft shape on Sym V decomposes as layers: layer n sends a
generator into Sym^n V (x) V. Layer 1 is a degree-preserving pre-Lie
comultiplication, and conversely determines every higher layer by a recursion
coming from coassociativity in low symmetric degree: the unknown layer enters
only through the split of its left monomial into a single generator times the
rest, which is inverted by multiplying back and dividing by the factor count.
The division is the one place exact rationals are genuinely needed; the
reconstructed constants come out integral again, which the tests assert.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Tuple

from .linear import Monomial, Tensor
from .symalg import cop_free
from .verify import Report, verify_prelie_coalgebra


def monomialize(t: Tensor) -> Tensor:
    """Wrap an arity-2 tensor over generators into monomial slots."""
    out = Tensor.zero(2)
    for (a, b), c in t.terms():
        out = out + Tensor.single((Monomial((a,)), Monomial((b,))), c)
    return out


def extract_prelie(gen_cop: Callable, x) -> Tensor:
    """Generator (x) generator part of a graft-shaped coproduct.

    Raises if the coproduct has terms outside (Sym^(>=1) V (x) V) after the
    two unit-side terms are removed, since then no pre-Lie projection exists.
    """
    whole = Monomial((x,))
    unit = Monomial(())
    out = Tensor.zero(2)
    for (a, b), c in gen_cop(x).terms():
        if (a, b) == (whole, unit) or (a, b) == (unit, whole):
            continue
        if len(b) != 1 or len(a) < 1:
            raise ValueError(
                "coproduct of %s has term %s (x) %s outside graft shape"
                % (x.text(), a.text(), b.text())
            )
        if len(a) == 1:
            out = out + Tensor.single((a.factors[0], b.factors[0]), c)
    return out


def delta0_prime(m: Monomial) -> Tensor:
    """Proper splittings of a monomial, with multiset multiplicity.

    Sum over ordered pairs of nonempty sub-multisets whose union is m; a
    single generator has none, and repeated factors contribute binomial
    multiplicities through the accumulation.
    """
    out = Tensor.zero(2)
    n = len(m.factors)
    for mask in range(1, (1 << n) - 1):
        left = tuple(m.factors[k] for k in range(n) if mask >> k & 1)
        right = tuple(m.factors[k] for k in range(n) if not mask >> k & 1)
        out = out + Tensor.single((Monomial(left), Monomial(right)))
    return out


class CoproductLayers:
    """Layered coproduct: layer n maps a generator into Sym^n V (x) V.

    total() assembles layer 0 (the shuffle-primitive part) with all computed
    layers, giving the full coproduct as a tensor over monomial pairs.
    """

    def __init__(self, layers: Dict[int, Dict], degree: Callable):
        self.layers = layers
        self.degree = degree

    def layer(self, n: int, x) -> Tensor:
        t = self.layers.get(n, {}).get(x)
        return t if t is not None else Tensor.zero(2)

    def max_layer(self) -> int:
        return max([n for n, d in self.layers.items() if d], default=0)

    def total(self, x) -> Tensor:
        whole = Monomial((x,))
        unit = Monomial(())
        out = Tensor.single((whole, unit)) + Tensor.single((unit, whole))
        for n in sorted(self.layers):
            t = self.layers[n].get(x)
            if t is not None:
                out = out + t
        return out

    def term_counts(self) -> Dict[int, int]:
        return {n: sum(len(t) for t in d.values()) for n, d in sorted(self.layers.items())}

    def all_integral(self) -> bool:
        return all(
            c.denominator == 1
            for d in self.layers.values()
            for t in d.values()
            for _, c in t.terms()
        )


def reconstruct_coproduct(basis, degree: Callable, rho: Callable, max_degree: int) -> CoproductLayers:
    """Build every coproduct layer above a degree-preserving pre-Lie map.

    basis must contain every generator of degree <= max_degree reachable from
    its own coproduct components (both instances here are closed under taking
    components). Layer n+1 is recovered from layers <= n, verified to satisfy
    its defining equation exactly, and the loop stops when a layer vanishes
    identically (guaranteed by the grading).
    """
    elems = sorted(x for x in basis if degree(x) <= max_degree)
    if not elems:
        return CoproductLayers({}, degree)
    for x in elems:
        d = degree(x)
        if d < 1:
            raise ValueError("degrees must be positive, got %d for %s" % (d, x.text()))
        for (a, b), _ in rho(x).terms():
            if degree(a) + degree(b) != d:
                raise ValueError(
                    "pre-Lie map does not preserve degree on %s: %s (x) %s"
                    % (x.text(), a.text(), b.text())
                )
    min_deg = min(degree(x) for x in elems)
    layers: Dict[int, Dict] = {1: {}}
    for x in elems:
        t = monomialize(rho(x))
        if t:
            layers[1][x] = t

    def gen_cop_upto(n: int):
        def cop(v) -> Tensor:
            whole = Monomial((v,))
            unit = Monomial(())
            out = Tensor.single((whole, unit)) + Tensor.single((unit, whole))
            for k in range(1, n + 1):
                t = layers.get(k, {}).get(v)
                if t is not None:
                    out = out + t
            return out

        return cop

    n = 1
    bound = max_degree // max(min_deg, 1) + 1
    while True:
        cop_n = gen_cop_upto(n)
        nxt: Dict = {}
        for v in elems:
            t = cop_n(v)
            a3 = t.slot_expand(1, lambda m: cop_free(cop_n, m), 2)
            b3 = t.slot_expand(0, lambda m: cop_free(cop_n, m), 2)
            r = Tensor.zero(3)
            for key, c in (a3 - b3).terms():
                m1, m2, m3 = key
                if len(m1) >= 1 and len(m2) >= 1 and len(m3) == 1 and len(m1) + len(m2) == n + 1:
                    r = r + Tensor.single(key, c)
            if not r:
                continue
            # Invert the (generator (x) Sym^n) split of the left monomial.
            layer = Tensor.zero(2)
            for (m1, m2, m3), c in r.terms():
                if len(m1) == 1:
                    layer = layer + Tensor.single((m1 * m2, m3), c)
            layer = Fraction(1, n + 1) * layer
            check = layer.slot_expand(0, delta0_prime, 2) - r
            if check:
                raise ValueError(
                    "no graded coproduct extends this pre-Lie map at %s: "
                    "layer %d defect %s" % (v.text(), n + 1, check.text())
                )
            nxt[v] = layer
        if nxt:
            layers[n + 1] = nxt
        n += 1
        if not nxt:
            break
        if n > bound:
            raise RuntimeError(
                "coproduct layers failed to vanish within the grading bound %d" % bound
            )
    return CoproductLayers(layers, degree)


def compare_coproducts(layers: CoproductLayers, gen_cop: Callable, sample) -> Report:
    """Assert the assembled layers equal a directly computed coproduct."""
    count = 0
    for x in sorted(sample):
        count += 1
        defect = layers.total(x) - gen_cop(x)
        if defect:
            return Report("layered vs direct coproduct", count, (x, defect))
    return Report("layered vs direct coproduct", count)


def path_degree(p) -> int:
    """Grading on paths that the cut coproduct preserves: length plus 2."""
    return len(p.letters) + 2


def tree_degree(t) -> int:
    """Grading on rooted trees preserved by the forest coproduct: edges plus 1."""
    return t.edge_count() + 1


@dataclass(frozen=True)
class GradedPreLieCoalgebra:
    """A positively graded basis with a degree-preserving pre-Lie map.

    Bundles the three inputs of the reconstruction; check() verifies the
    stated invariants (degree preservation plus the pre-Lie coaxiom) on the
    whole basis before any layers are built.
    """

    basis: Tuple
    degree: Callable
    rho: Callable

    def check(self) -> Report:
        for x in self.basis:
            d = self.degree(x)
            if d < 1:
                return Report("positive grading", 0, (x, "degree %d" % d))
            for (a, b), _ in self.rho(x).terms():
                if self.degree(a) + self.degree(b) != d:
                    return Report("degree preservation", 0, (x, Tensor.single((a, b))))
        return verify_prelie_coalgebra(self.rho, self.basis, "pre-Lie coaxiom")

    def reconstruct(self, max_degree: int) -> CoproductLayers:
        return reconstruct_coproduct(self.basis, self.degree, self.rho, max_degree)
