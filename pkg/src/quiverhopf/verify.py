"""Exhaustive small-instance law checkers.

Each checker sweeps a finite sample of basis elements in canonical order and
returns a Report: either success with the number of elements checked, or the
first (hence canonically smallest) witness together with the defect. These
reports are what the CLI `verify` subcommand prints and what the acceptance
suite asserts on.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .linear import TAU12_2, TAU12_3, TAU123, TAU132, LinComb, Tensor


@dataclass(frozen=True)
class Report:
    law: str
    checked: int
    witness: Optional[tuple] = None  # (element, defect)
    note: str = ""

    @property
    def ok(self) -> bool:
        return self.witness is None

    def line(self) -> str:
        if self.ok:
            suffix = " [%s]" % self.note if self.note else ""
            return "PASS %s (%d elements)%s" % (self.law, self.checked, suffix)
        x, defect = self.witness
        shown = defect.text() if hasattr(defect, "text") else str(defect)
        return "FAIL %s: witness %s, defect %s" % (self.law, x.text(), "; ".join(shown.split("\n")))


def _lift(f: Callable, lc: LinComb) -> Tensor:
    """Linear extension of a basis-level tensor-valued map."""
    out = None
    for x, c in lc.terms():
        t = c * f(x)
        out = t if out is None else out + t
    if out is None:
        return Tensor.zero(2)
    return out


def verify_prelie_coalgebra(delta0: Callable, sample, law: str = "pre-Lie coaxiom") -> Report:
    """Check (Id - tau12)(delta0 (x) 1 - 1 (x) delta0) delta0 = 0 on a sample."""
    count = 0
    for x in sorted(sample):
        count += 1
        d = delta0(x)
        t = d.slot_expand(0, delta0, 2) - d.slot_expand(1, delta0, 2)
        defect = t - t.permute(TAU12_3)
        if defect:
            return Report(law, count, (x, defect))
    return Report(law, count)


def verify_lie_coalgebra(delta: Callable, sample, law: str = "Lie coalgebra axioms") -> Report:
    """Check co-antisymmetry and the cyclic co-Jacobi identity on a sample."""
    count = 0
    for x in sorted(sample):
        count += 1
        d = delta(x)
        anti = d + d.permute(TAU12_2)
        if anti:
            return Report(law + " (co-antisymmetry)", count, (x, anti))
        u = d.slot_expand(0, delta, 2)
        jac = u + u.permute(TAU123) + u.permute(TAU132)
        if jac:
            return Report(law + " (co-Jacobi)", count, (x, jac))
    return Report(law, count)


def verify_coalgebra_morphism(
    f: Callable, delta_src: Callable, delta_tgt: Callable, sample, law: str
) -> Report:
    """Check (f (x) f) o delta_src = delta_tgt o f on a sample.

    f maps a source basis element to a LinComb over the target basis; both
    deltas are basis-level maps into arity-2 tensors.
    """
    count = 0
    for x in sorted(sample):
        count += 1
        lhs = delta_src(x).slot_map(0, f).slot_map(1, f)
        rhs = _lift(delta_tgt, f(x))
        defect = lhs - rhs
        if defect:
            return Report(law, count, (x, defect))
    return Report(law, count)


def verify_equal_maps(f: Callable, g: Callable, sample, law: str) -> Report:
    """Check two basis-level maps agree on a sample (values support -)."""
    count = 0
    for x in sorted(sample):
        count += 1
        defect = f(x) - g(x)
        if defect:
            return Report(law, count, (x, defect))
    return Report(law, count)
