"""Cuts of paths and necklaces, chord diagrams, and their (co)algebras.

A cut pairs positions of a word whose letters are mutual reverses, with the
chords drawn as non-crossing arcs above the word. Surgery along a chord
splits the word into an inner closed piece and an outer piece carrying the
basepoint; iterating the surgery produces the cut components. The chord
algebras live on (word, cut) pairs and carry the comultiplications induced by
removing one chord at a time, plus a coproduct obtained by cutting out simple
subcuts.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Tuple

from .linear import SYM_UNIT, BasisElement, Monomial, Tensor, tensor
from .quiver import Necklace, Path, omega, rotate


class Cut:
    """A set of chords: position pairs (i < j), pairwise non-crossing.

    Structural validity (distinctness, order, non-crossing) is enforced here;
    the letter-matching condition depends on a word and is checked by
    validate_cut. Simplicity means no chord nests inside another.
    """

    __slots__ = ("pairs",)

    def __init__(self, pairs=()):
        ps = sorted((int(i), int(j)) for i, j in pairs)
        flat = [k for p in ps for k in p]
        if len(set(flat)) != len(flat):
            raise ValueError("cut endpoints must be distinct: %r" % (ps,))
        for i, j in ps:
            if not 1 <= i < j:
                raise ValueError("cut pair (%d, %d) must satisfy 1 <= i < j" % (i, j))
        for (i1, j1), (i2, j2) in itertools.combinations(ps, 2):
            if i1 < i2 < j1 < j2:
                raise ValueError("cut pairs (%d,%d) and (%d,%d) cross" % (i1, j1, i2, j2))
        self.pairs = tuple(ps)

    def is_simple(self) -> bool:
        for (i1, j1), (i2, j2) in itertools.combinations(self.pairs, 2):
            if i1 < i2 < j2 < j1:
                return False
        return True

    def __eq__(self, other):
        return isinstance(other, Cut) and self.pairs == other.pairs

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.pairs)

    def __lt__(self, other):
        return self.pairs < other.pairs

    def __len__(self):
        return len(self.pairs)

    def text(self) -> str:
        if not self.pairs:
            return "()"
        return "".join("(%d,%d)" % p for p in self.pairs)

    def __repr__(self):
        return self.text()


EMPTY_CUT = Cut(())


def validate_cut(p: Path, cut: Cut) -> None:
    """Check the cut against a word: indices in range, letters mutual reverses."""
    n = len(p.letters)
    for i, j in cut.pairs:
        if j > n:
            raise ValueError("cut pair (%d,%d) out of range for a word of length %d" % (i, j, n))
        if p.letters[j - 1] != p.letters[i - 1].star():
            raise ValueError(
                "cut pair (%d,%d) joins %s and %s, which are not mutual reverses"
                % (i, j, p.letters[i - 1].text(), p.letters[j - 1].text())
            )


def enumerate_cuts(p: Path, simple_only: bool = False):
    """All cuts of a path (the empty cut included), in canonical order.

    Non-crossing matchings are generated segment-recursively: the first free
    position is either unmatched or matched to a compatible later position,
    which seals off the enclosed segment.
    """
    letters = p.letters

    def gen(lo: int, hi: int):
        if lo > hi:
            yield ()
            return
        for rest in gen(lo + 1, hi):
            yield rest
        want = letters[lo - 1].star()
        for q in range(lo + 1, hi + 1):
            if letters[q - 1] == want:
                for left in gen(lo + 1, q - 1):
                    for right in gen(q + 1, hi):
                        yield ((lo, q),) + left + right

    cuts = [Cut(ps) for ps in gen(1, len(letters))]
    if simple_only:
        cuts = [h for h in cuts if h.is_simple()]
    return sorted(cuts)


def epsilon(p: Path, h: Cut) -> Fraction:
    """Sign of a cut: the product of -omega over its chords (1 for the empty cut)."""
    validate_cut(p, h)
    sign = Fraction(1)
    for i, j in h.pairs:
        sign *= -omega(p.letters[i - 1], p.letters[j - 1])
    return sign


@dataclass(frozen=True)
class CutComponents:
    """Result of cutting along every chord of a cut.

    outer keeps the original endpoints; chords maps each pair (i, j) to the
    closed path running from the target of letter i to the source of letter j.
    """

    outer: Path
    chords: Dict[Tuple[int, int], Path]


def _encloser(pairs, pos: int):
    """Innermost chord strictly containing a position, or None."""
    best = None
    for i, j in pairs:
        if i < pos < j and (best is None or i > best[0]):
            best = (i, j)
    return best


def cut_components(p: Path, h: Cut) -> CutComponents:
    """Delete all matched letters and reglue: one piece per chord plus the outer piece."""
    validate_cut(p, h)
    matched = {k for pair in h.pairs for k in pair}
    groups: Dict[Tuple[int, int], list] = {pair: [] for pair in h.pairs}
    outer_positions = []
    for pos in range(1, len(p.letters) + 1):
        if pos in matched:
            continue
        c = _encloser(h.pairs, pos)
        if c is None:
            outer_positions.append(pos)
        else:
            groups[c].append(pos)
    outer = Path(p.start, tuple(p.letters[k - 1] for k in outer_positions))
    chords = {}
    for (i, j), positions in groups.items():
        chords[(i, j)] = Path(p.letters[i - 1].tgt, tuple(p.letters[k - 1] for k in positions))
    return CutComponents(outer=outer, chords=chords)


def cut_order_at(p: Path, h: Cut, v) -> int:
    """Nesting depth at a half-integer position of the word.

    Counts chords (i, j) with i < v < j; the basepoint positions 1/2 and
    n + 1/2 always have depth 0.
    """
    w = Fraction(v)
    if w.denominator != 2:
        raise ValueError("position must be a half-integer, got %s" % v)
    n = len(p.letters)
    if not Fraction(1, 2) <= w <= Fraction(2 * n + 1, 2):
        raise ValueError("position %s outside [1/2, %d + 1/2]" % (v, n))
    validate_cut(p, h)
    return sum(1 for i, j in h.pairs if i < w < j)


def cut_order(p: Path, h: Cut) -> int:
    """Maximum nesting depth over all word positions."""
    validate_cut(p, h)
    n = len(p.letters)
    best = 0
    for k in range(n + 1):
        v = Fraction(2 * k + 1, 2)
        depth = sum(1 for i, j in h.pairs if i < v < j)
        if depth > best:
            best = depth
    return best


def precedes(h1: Cut, h2: Cut) -> bool:
    """True iff no chord of h2 is nested inside a chord of h1.

    The two cuts must be disjoint and jointly non-crossing; both relations
    against the empty cut hold.
    """
    Cut(h1.pairs + h2.pairs)  # raises on overlap or crossing
    for i1, j1 in h1.pairs:
        for i2, j2 in h2.pairs:
            if i1 < i2 < j2 < j1:
                return False
    return True


def simple_subcuts(h: Cut):
    """All simple (nesting-free) subsets of a cut, the empty one included."""
    out = []
    for r in range(len(h.pairs) + 1):
        for combo in itertools.combinations(h.pairs, r):
            sub = Cut(combo)
            if sub.is_simple():
                out.append(sub)
    return sorted(out)


class PathDiagram(BasisElement):
    """A path together with a cut of its word: a basis chord diagram."""

    __slots__ = ("path", "cut")

    def __init__(self, path: Path, cut: Cut = EMPTY_CUT):
        validate_cut(path, cut)
        BasisElement.__init__(self, "CP|%s / %s" % (path.skey[2:], cut.text()))
        self.path = path
        self.cut = cut

    def text(self) -> str:
        return "%s / %s" % (self.path.text(), self.cut.text())


class NecklaceDiagram(BasisElement):
    """A necklace with a cut, canonicalized jointly over rotations.

    The representative minimizes the (word, cut) pair: among rotations with
    the smallest letter word, the one with the smallest rotated cut wins.
    Cuts are rotation-stable (non-crossing is a circular condition), so this
    is well defined.
    """

    __slots__ = ("path", "cut")

    def __init__(self, path: Path, cut: Cut = EMPTY_CUT):
        if not path.is_closed():
            raise ValueError("necklace diagram needs a closed word")
        validate_cut(path, cut)
        n = len(path.letters)
        best = None
        for k in range(max(n, 1)):
            word = rotate(path, k) if n else path
            moved = Cut(
                tuple(
                    tuple(sorted((((i - k - 1) % n) + 1, ((j - k - 1) % n) + 1)))
                    for i, j in cut.pairs
                )
            )
            cand = (tuple(lt.sort_key for lt in word.letters), moved.pairs, word, moved)
            if best is None or cand[:2] < best[:2]:
                best = cand
        word, moved = best[2], best[3]
        validate_cut(word, moved)
        BasisElement.__init__(self, "CN|[%s] / %s" % (word.skey[2:], moved.text()))
        self.path = word
        self.cut = moved

    def necklace(self) -> Necklace:
        return Necklace(self.path)

    def text(self) -> str:
        return "%s / %s" % (self.necklace().text(), self.cut.text())


def remove_chords(d: PathDiagram, sub: Cut):
    """Cut out a simple subcut: the outer diagram plus one diagram per removed chord.

    Chords of the remaining cut fall entirely inside one component and are
    relabeled by the induced position map.
    """
    pairs = set(d.cut.pairs)
    for c in sub.pairs:
        if c not in pairs:
            raise ValueError("chord %r is not part of the cut %s" % (c, d.cut.text()))
    if not sub.is_simple():
        raise ValueError("subcut %s is not simple" % sub.text())
    letters = d.path.letters
    regions = {c: set(range(c[0], c[1] + 1)) for c in sub.pairs}

    def group_of(pos: int):
        for c, region in regions.items():
            if pos in region:
                return c
        return None

    positions: Dict = {c: [] for c in sub.pairs}
    positions[None] = []
    for pos in range(1, len(letters) + 1):
        g = group_of(pos)
        if g is not None and pos in g:
            continue  # a removed matched letter
        positions[g].append(pos)
    residual: Dict = {c: [] for c in sub.pairs}
    residual[None] = []
    for c2 in d.cut.pairs:
        if c2 in regions:
            continue
        g_i, g_j = group_of(c2[0]), group_of(c2[1])
        if g_i != g_j:
            raise AssertionError("chord %r straddles surgery components" % (c2,))
        residual[g_i].append(c2)

    def build(g, start_vertex) -> PathDiagram:
        pos_list = positions[g]
        new_index = {old: k + 1 for k, old in enumerate(pos_list)}
        word = Path(start_vertex, tuple(letters[k - 1] for k in pos_list))
        new_cut = Cut(tuple((new_index[i], new_index[j]) for i, j in residual[g]))
        return PathDiagram(word, new_cut)

    outer = build(None, d.path.start)
    inners = {c: build(c, letters[c[0] - 1].tgt) for c in sub.pairs}
    return outer, inners


def chord_delta_p_rt(d: PathDiagram) -> Tensor:
    """Comultiplication on path chord diagrams: remove one chord at a time.

    Removing a chord sends the chords nested inside it to the inner factor and
    the rest to the outer factor, with the usual sign from the matched letters.
    """
    out = Tensor.zero(2)
    for c in d.cut.pairs:
        w = omega(d.path.letters[c[0] - 1], d.path.letters[c[1] - 1])
        outer, inners = remove_chords(d, Cut((c,)))
        out = out + (-w) * tensor(inners[c], outer)
    return out


def _necklace_diagram(d: PathDiagram) -> NecklaceDiagram:
    return NecklaceDiagram(d.path, d.cut)


def chord_delta_or(x: NecklaceDiagram) -> Tensor:
    """Cobracket on necklace chord diagrams: antisymmetrized chord removal."""
    base = PathDiagram(x.path, x.cut)
    out = Tensor.zero(2)
    for c in x.cut.pairs:
        w = omega(x.path.letters[c[0] - 1], x.path.letters[c[1] - 1])
        outer, inners = remove_chords(base, Cut((c,)))
        x1 = _necklace_diagram(inners[c])
        x2 = _necklace_diagram(outer)
        out = out + (-w) * (tensor(x1, x2) - tensor(x2, x1))
    return out


def chord_coproduct(d: PathDiagram) -> Tensor:
    """Coproduct on the chord algebra: cut out every simple subcut.

    The leading term keeps the whole diagram on the left; the empty subcut
    contributes 1 (x) X. Each component inherits the residual chords; the
    sign is the product of -omega over the removed chords only.
    """
    out = Tensor.single((Monomial((d,)), SYM_UNIT))
    for sub in simple_subcuts(d.cut):
        sign = Fraction(1)
        for i, j in sub.pairs:
            sign *= -omega(d.path.letters[i - 1], d.path.letters[j - 1])
        outer, inners = remove_chords(d, sub)
        left = Monomial(tuple(inners[c] for c in sub.pairs))
        out = out + sign * Tensor.single((left, Monomial((outer,))))
    return out
