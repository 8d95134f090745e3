"""
SemiPrim - Normal Structure
Normal closures, derived subgroup, center, centralizers of normal subgroups and
the complete lattice of normal subgroups of a desk-scale group.
"""

from dataclasses import dataclass, field
from itertools import product
from math import factorial, prod

from sympy import factorint, isprime

from src.actions.blocks import orbit_block_system, stabilizer_in_action
from src.core.errors import (
    CensusCapExceeded,
    IndexCapExceeded,
    NotNormalError,
    NotSubgroupError,
    PreconditionError,
)
from src.core.group import PermGroup, extend_group
from src.core.permutation import commutator, conjugate
from src import config


def normal_closure(group, elements):
    """Smallest subgroup containing ``elements`` and normalised by the group's generators."""
    for x in elements:
        if not group.contains(x):
            raise NotSubgroupError("seed element lies outside the group")
    closure = group.subgroup([x for x in elements if not x.is_Identity])
    pending = list(closure.generators)
    while pending:
        z = pending.pop(0)
        for g in group.generators:
            c = conjugate(z, g)
            if not closure.contains(c):
                closure = extend_group(closure, [c])
                pending.append(c)
    return closure


def derived_subgroup(group):
    gens = group.generators
    comms = [commutator(a, b) for i, a in enumerate(gens) for b in gens[i + 1:]]
    return normal_closure(group, [c for c in comms if not c.is_Identity])


def conjugacy_classes(group, cap=None):
    return group.census(cap).classes()


def center(group, cap=None):
    classes = conjugacy_classes(group, cap)
    arith = group.census(cap).arith
    central = [arith.to_perm(c.representative) for c in classes if c.size == 1 and c.index > 0]
    return group.subgroup(central)


def _conjugation_orbit(group, seed):
    members = [seed]
    seen = {seed}
    for y in members:
        for g in group.generators:
            z = conjugate(y, g)
            if z not in seen:
                seen.add(z)
                members.append(z)
    return members


def centralizer_of_normal(group, normal, cap=None):
    """C_G(M) as the kernel of conjugation on the G-classes of M's generators."""
    cap = config.CENSUS_CAP if cap is None else cap
    if not normal.is_subgroup_of(group) or not normal.is_normal_in(group):
        raise NotNormalError("centralizer_of_normal needs a normal subgroup")
    if normal.order() > cap:
        raise CensusCapExceeded(normal.order(), cap)
    objects = []
    index = {}
    anchors = []
    for h in normal.generators:
        if h.is_Identity:
            continue
        if h not in index:
            for y in _conjugation_orbit(group, h):
                if y not in index:
                    index[y] = len(objects)
                    objects.append(y)
        anchors.append(index[h])
    if not anchors:
        return group.subgroup(group.generators)
    images = [[index[conjugate(y, g)] for y in objects] for g in group.generators]
    return stabilizer_in_action(group, images, len(objects), anchors)


# ---- Lattice ----

@dataclass(frozen=True)
class NormalLattice:
    group: PermGroup = field(repr=False)
    # sorted by order; members[0] is trivial, members[-1] the whole group
    members: tuple
    # covers[i]: indices of the members directly above members[i]
    covers: tuple

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    @property
    def trivial(self):
        return self.members[0]

    @property
    def whole(self):
        return self.members[-1]

    def index_of(self, subgroup):
        for i, member in enumerate(self.members):
            if member.order() == subgroup.order() and subgroup.is_subgroup_of(member):
                return i
        return None

    def below(self, i):
        return [j for j, ups in enumerate(self.covers) if i in ups]

    def minimal(self):
        if len(self.members) == 1:
            return []
        return [self.members[j] for j in self.covers[0]]

    def chain(self, prefer="smallest"):
        """A maximal chain from the trivial group to the whole group."""
        pick = min if prefer == "smallest" else max
        path = [0]
        last = len(self.members) - 1
        while path[-1] != last:
            ups = self.covers[path[-1]]
            path.append(pick(ups, key=lambda j: (self.members[j].order(), j)))
        return [self.members[i] for i in path]


def _find(members, subgroup):
    for member in members:
        if member.order() == subgroup.order() and subgroup.is_subgroup_of(member):
            return member
    return None


def normal_lattice(group, cap=None):
    cached = group._cache.get("lattice")
    if cached is not None:
        return cached
    members = [group.subgroup(())]
    arith = group.census(cap).arith
    for cls in conjugacy_classes(group, cap):
        if cls.index == 0:
            continue
        closure = normal_closure(group, [arith.to_perm(cls.representative)])
        if _find(members, closure) is None:
            members.append(closure)
    if _find(members, group) is None:
        members.append(group.subgroup(group.generators))
    i = 1
    while i < len(members):
        for j in range(1, i):
            joined = extend_group(members[i], members[j].generators)
            if _find(members, joined) is None:
                members.append(joined)
        i += 1
    members.sort(key=lambda m: m.order())
    leq = [
        [a.order() <= b.order() and b.order() % a.order() == 0 and a.is_subgroup_of(b) for b in members]
        for a in members
    ]
    covers = []
    for i in range(len(members)):
        above = [j for j in range(len(members)) if j != i and leq[i][j]]
        covers.append(tuple(
            j for j in above
            if not any(k != j and leq[k][j] for k in above)
        ))
    lattice = NormalLattice(group, tuple(members), tuple(covers))
    group._cache["lattice"] = lattice
    return lattice


def minimal_normals(group):
    return normal_lattice(group).minimal()


def socle(group):
    lattice = normal_lattice(group)
    mins = lattice.minimal()
    if not mins:
        return lattice.trivial
    joined = mins[0]
    for m in mins[1:]:
        joined = extend_group(joined, m.generators)
    return _find(lattice.members, joined)


def is_simple(group):
    return len(normal_lattice(group)) == 2


def chief_series(group, prefer="smallest"):
    return normal_lattice(group).chain(prefer)


def chief_length(group):
    return len(chief_series(group)) - 1


def plinths(group):
    """Minimally transitive normal subgroups."""
    lattice = normal_lattice(group)
    transitive = [i for i, m in enumerate(lattice.members) if m.is_transitive()]
    result = []
    for i in transitive:
        below = [j for j in transitive if j != i and lattice.members[j].order() < lattice.members[i].order()
                 and lattice.members[j].is_subgroup_of(lattice.members[i])]
        if not below:
            result.append(lattice.members[i])
    return result


# ---- Shapes ----

@dataclass(frozen=True)
class MinimalNormalShape:
    kind: str
    d: int
    factor_order: int
    p: int = None
    alternating_degree: int = None

    @property
    def is_abelian(self):
        return self.kind == "abelian"

    @property
    def is_alternating(self):
        return self.alternating_degree is not None

    def describe(self):
        if self.is_abelian:
            return f"C{self.p}^{self.d}" if self.d > 1 else f"C{self.p}"
        factor = f"A{self.alternating_degree}" if self.is_alternating else f"T[{self.factor_order}]"
        return f"{factor}^{self.d}" if self.d > 1 else factor


def alternating_degree_of_order(order):
    k = 5
    while factorial(k) // 2 < order:
        k += 1
    return k if factorial(k) // 2 == order else None


def simple_factor_is_alternating(factor):
    """Alternating recognition by order; order 20160 also needs an element of order 15."""
    k = alternating_degree_of_order(factor.order())
    if k == 8 and not factor.census().has_element_of_order(15):
        return None
    return k


def shape_of_minimal_normal(normal, group):
    lattice = normal_lattice(group)
    i = lattice.index_of(normal)
    if i is None or i == 0 or 0 not in lattice.below(i):
        raise PreconditionError("subgroup is not a minimal normal subgroup")
    order = normal.order()
    if normal.is_abelian():
        primes = factorint(order)
        if len(primes) != 1:
            raise PreconditionError("abelian minimal normal subgroup of non-prime-power order")
        (p, d), = primes.items()
        return MinimalNormalShape("abelian", d, p, p=p)
    factors = normal_lattice(normal).minimal()
    factor_order = factors[0].order()
    return MinimalNormalShape(
        "nonabelian", len(factors), factor_order,
        alternating_degree=simple_factor_is_alternating(factors[0]),
    )


def socle_factors(group):
    """(shape per minimal normal subgroup) of the socle."""
    return [shape_of_minimal_normal(m, group) for m in minimal_normals(group)]


def is_elementary_abelian(group):
    """Abelian and generated by elements of one prime order p."""
    if group.is_trivial():
        return False
    orders = {g.order() for g in group.generators if not g.is_Identity}
    if len(orders) != 1 or not group.is_abelian():
        return False
    p = orders.pop()
    if not isprime(p):
        return False
    return set(factorint(group.order())) == {p}


# ---- Complements ----

def complement_lifts(group, normal, first_only=False):
    """Lift tuples generating the complements to ``normal`` in ``group``.

    G/N is read off the action on the N-orbits, so that action must have
    kernel exactly N. A generating set of G/N is taken from G's generators and
    every complement holds exactly one lift of each, so the number of tuples
    returned is the number of complements.
    """
    image = orbit_block_system(group, normal).induced_image
    if image.order() * normal.order() != group.order():
        raise PreconditionError("block action kernel is larger than the normal subgroup", ["kernel = N"])

    chosen = []
    span = PermGroup(image.degree, ())
    for g, img in zip(group.generators, image.generators):
        if not span.contains(img):
            chosen.append((g, img.order()))
            span = extend_group(span, [img])

    members = list(normal.elements())
    candidates = []
    for g, order in chosen:
        # lifts into a complement keep the order of their image
        lifts = [g * m for m in members if (g * m) ** order == group.identity]
        if not lifts:
            return []
        candidates.append(lifts)
    tuples = prod(len(c) for c in candidates)
    if tuples > config.COSET_INDEX_CAP:
        raise IndexCapExceeded(tuples, config.COSET_INDEX_CAP)

    found = []
    for lifts in product(*candidates):
        if PermGroup(group.degree, lifts).order() == image.order():
            found.append(lifts)
            if first_only:
                break
    return found


def has_complement(group, normal):
    return bool(complement_lifts(group, normal, first_only=True))
