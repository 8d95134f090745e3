"""
SemiPrim - Metric Report
The five bounded quantities of one group, computed together.
"""

from dataclasses import dataclass
from fractions import Fraction

from src.core.exact import to_text
from src.core.permutation import as_cycles
from src.metrics.base_size import base_size_exact
from src.metrics.degree import minimal_degree
from src.structure.lattice import chief_length


@dataclass(frozen=True)
class MetricReport:
    order: int
    base_size: int
    base: tuple
    # None for the trivial group, which moves no point
    minimal_degree: int
    witness: tuple
    fpr: Fraction
    chief_length: int

    def to_dict(self):
        return {
            "order": self.order,
            "base_size": self.base_size,
            "base": [b + 1 for b in self.base],
            "minimal_degree": self.minimal_degree,
            "witness": [list(c) for c in self.witness],
            "fpr": to_text(self.fpr),
            "chief_length": self.chief_length,
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            order=data["order"],
            base_size=data["base_size"],
            base=tuple(b - 1 for b in data["base"]),
            minimal_degree=data["minimal_degree"],
            witness=tuple(tuple(c) for c in data["witness"]),
            fpr=None if data["fpr"] is None else Fraction(data["fpr"]),
            chief_length=data["chief_length"],
        )


def compute_metrics(group, time_budget=None):
    b, base = base_size_exact(group, time_budget)
    n = group.degree
    if group.is_trivial():
        m, witness, ratio = None, (), None
    else:
        m, found = minimal_degree(group)
        witness, ratio = as_cycles(found), Fraction(n - m, n)
    return MetricReport(
        order=group.order(),
        base_size=b,
        base=tuple(base),
        minimal_degree=m,
        witness=witness,
        fpr=ratio,
        chief_length=chief_length(group),
    )
