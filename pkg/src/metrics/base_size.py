"""
SemiPrim - Base Size
Exact minimal base size by iterative deepening over orbit representatives,
seeded with the greedy largest-orbit-first base.
"""

import time

from src import config
from src.core.errors import PreconditionError, TimeBudgetExceeded


def is_base(group, points):
    return group.pointwise_stabilizer(list(points)).is_trivial()


def greedy_base(group):
    """Repeatedly fix the least point of a largest orbit of the current stabilizer."""
    base = []
    stab = group
    while not stab.is_trivial():
        orbits = stab.orbits()
        largest = max(len(o) for o in orbits)
        beta = next(o[0] for o in orbits if len(o) == largest)
        base.append(beta)
        stab = stab.pointwise_stabilizer([beta])
    return base


def lower_bound(group):
    """Least k with n^k >= |G|."""
    order = group.order()
    k = 0
    while group.degree ** k < order:
        k += 1
    return k


class _Search:
    def __init__(self, deadline, budget):
        self.deadline = deadline
        self.budget = budget
        self.nodes = 0

    def run(self, stab, remaining, prefix):
        self.nodes += 1
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise TimeBudgetExceeded("base size search", self.budget)
        if stab.is_trivial():
            return prefix
        if remaining == 0:
            return None
        order = stab.order()
        orbits = [o for o in stab.orbits() if len(o) > 1]
        if max(len(o) for o in orbits) ** remaining < order:
            return None
        if remaining == 1:
            for o in orbits:
                if len(o) == order:
                    return prefix + [o[0]]
            return None
        for o in orbits:
            found = self.run(stab.pointwise_stabilizer([o[0]]), remaining - 1, prefix + [o[0]])
            if found is not None:
                return found
        return None


def base_size_exact(group, time_budget=None):
    """Return (b(G), witness base); the witness is 0-based."""
    if group.is_trivial():
        return 0, []
    budget = config.TIME_BUDGET if time_budget is None else time_budget
    deadline = time.monotonic() + budget if budget else None
    best = greedy_base(group)
    search = _Search(deadline, budget)
    for k in range(lower_bound(group), len(best)):
        found = search.run(group, k, [])
        if found is not None:
            return len(found), found
    return len(best), best


def base_size(group, time_budget=None):
    return base_size_exact(group, time_budget)[0]


def block_base_transfer(group, system, block_base):
    """Lift a base of G^Delta to a base of G when the Delta-kernel is semiregular."""
    violations = []
    if not system.kernel.is_semiregular():
        violations.append("kernel of the block action is not semiregular")
    if not is_base(system.induced_image, block_base):
        violations.append("block list is not a base of the induced action")
    if violations:
        raise PreconditionError("; ".join(violations), violations)
    lifted = [system.blocks[b][0] for b in block_base]
    if not is_base(group, lifted):
        raise PreconditionError("lifted points do not form a base")
    return lifted
