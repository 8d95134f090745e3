"""
SemiPrim - Numerical Lemmas
Exhaustive exact checks of the two integer inequalities behind the order
bound, and the two quotient lemmas relating a semiprimitive group to the
block action induced by one of its antiplinths.
"""

from dataclasses import dataclass
from math import factorial

from src.actions.blocks import orbit_block_system
from src.actions.taxonomy import antiplinths
from src.core.exact import sign_two_surds
from src.metrics.base_size import base_size_exact, block_base_transfer, is_base
from src.metrics.degree import minimal_degree


@dataclass(frozen=True)
class LemmaReport:
    name: str
    checked: int
    failures: tuple
    expected_failures: tuple = ()

    @property
    def passed(self):
        return self.failures == self.expected_failures

    def to_dict(self):
        return {
            "name": self.name,
            "checked": self.checked,
            "failures": [list(f) for f in self.failures],
            "expected_failures": [list(f) for f in self.expected_failures],
            "passed": self.passed,
        }


def factorial_power_check(limit=60):
    """m * r! < 4^(m r) for every 5 <= r < m <= limit."""
    failures = []
    checked = 0
    for r in range(5, limit + 1):
        fr = factorial(r)
        for m in range(r + 1, limit + 1):
            checked += 1
            if not m * fr < 4 ** (m * r):
                failures.append((m, r))
    return LemmaReport("m*r! < 4^(m*r)", checked, tuple(failures))


def root_difference_holds(a, b):
    """a(sqrt(b) - 1) >= sqrt(ab) - 1, decided exactly."""
    return sign_two_surds(a, b, -1, a * b, 1 - a) >= 0


def root_difference_check(limit=100):
    failures = []
    checked = 0
    for a in range(2, limit + 1):
        for b in range(2, limit + 1):
            checked += 1
            if not root_difference_holds(a, b):
                failures.append((a, b))
    expected = tuple((a, 2) for a in range(2, 6))
    return LemmaReport("a(sqrt(b)-1) >= sqrt(ab)-1", checked, tuple(sorted(failures)), expected)


def numerical_lemma_checks():
    return [factorial_power_check(), root_difference_check()]


# ---- Quotient lemmas ----

@dataclass(frozen=True)
class QuotientLemmaResult:
    antiplinth_order: int
    blocks: int
    block_size: int
    base_size: int
    image_base_size: int
    transferred_base: tuple
    transferred_is_base: bool
    minimal_degree: int
    image_minimal_degree: int

    @property
    def base_holds(self):
        return self.transferred_is_base and self.base_size <= self.image_base_size

    @property
    def degree_holds(self):
        return self.minimal_degree >= self.block_size * self.image_minimal_degree

    @property
    def holds(self):
        return self.base_holds and self.degree_holds

    def to_dict(self):
        return {
            "antiplinth_order": self.antiplinth_order,
            "blocks": self.blocks,
            "block_size": self.block_size,
            "base_size": self.base_size,
            "image_base_size": self.image_base_size,
            "transferred_base": [b + 1 for b in self.transferred_base],
            "transferred_is_base": self.transferred_is_base,
            "minimal_degree": self.minimal_degree,
            "image_minimal_degree": self.image_minimal_degree,
            "holds": self.holds,
        }


def quotient_lemma_checks(group, time_budget=None):
    """b(G) <= b(G^Delta) and m(G) >= s m(G^Delta) for every nontrivial antiplinth of a semiprimitive group."""
    results = []
    b_group, _ = base_size_exact(group, time_budget)
    m_group, _ = minimal_degree(group)
    for normal in antiplinths(group):
        if normal.is_trivial():
            continue
        system = orbit_block_system(group, normal)
        image = system.induced_image
        b_image, image_base = base_size_exact(image, time_budget)
        lifted = block_base_transfer(group, system, image_base)
        m_image = minimal_degree(image)[0] if not image.is_trivial() else 0
        results.append(QuotientLemmaResult(
            antiplinth_order=normal.order(),
            blocks=system.block_count,
            block_size=system.block_size,
            base_size=b_group,
            image_base_size=b_image,
            transferred_base=tuple(lifted),
            transferred_is_base=is_base(group, lifted),
            minimal_degree=m_group,
            image_minimal_degree=m_image,
        ))
    return results
