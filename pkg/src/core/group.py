"""
SemiPrim - Permutation Groups
Generators plus a lazily built, deterministic stabilizer chain giving order,
membership, pointwise stabilizers and full element enumeration.
"""

from dataclasses import dataclass
from math import prod

from sympy.combinatorics import PermutationGroup
from sympy.combinatorics.util import _distribute_gens_by_base, _orbits_transversals_from_bsgs

from src import config
from src.core.census import Census
from src.core.errors import CensusCapExceeded, DegreeMismatchError
from src.core.permutation import check_point, compose, conjugate, identity


@dataclass(frozen=True)
class StabilizerChain:
    base: tuple
    strong_generators: tuple
    # per level: orbit point -> u with u(base[i]) == point, base point first
    transversals: tuple

    @classmethod
    def from_bsgs(cls, base, strong_gens):
        strong_gens = [g for g in strong_gens if not g.is_Identity]
        if not base or not strong_gens:
            return cls((), (), ())
        distributed = _distribute_gens_by_base(base, strong_gens)
        _, transversals = _orbits_transversals_from_bsgs(base, distributed)
        ordered = []
        for b, tr in zip(base, transversals):
            level = {b: tr[b]}
            for pt in sorted(tr):
                if pt != b:
                    level[pt] = tr[pt]
            ordered.append(level)
        return cls(tuple(base), tuple(strong_gens), tuple(ordered))

    def order(self):
        return prod(len(t) for t in self.transversals)

    def sift(self, p):
        """Strip p through the chain; returns (residue, level reached)."""
        h = p
        for level, b in enumerate(self.base):
            u = self.transversals[level].get(h.array_form[b])
            if u is None:
                return h, level
            h = h * ~u
        return h, len(self.base)

    def contains(self, p):
        residue, level = self.sift(p)
        return level == len(self.base) and residue.is_Identity


@dataclass(frozen=True)
class Orbit:
    root: int
    points: tuple
    # point -> (parent point, generator index); the root has no entry
    tree: dict
    generators: tuple
    degree: int

    def __len__(self):
        return len(self.points)

    def __contains__(self, pt):
        return pt == self.root or pt in self.tree

    def word(self, pt):
        """Generator indices whose product maps the root to pt."""
        word = []
        while pt != self.root:
            pt, gen_index = self.tree[pt]
            word.append(gen_index)
        word.reverse()
        return word

    def element(self, pt):
        result = identity(self.degree)
        for gen_index in self.word(pt):
            result = result * self.generators[gen_index]
        return result


class PermGroup:
    """A permutation group on the points 0..degree-1."""

    def __init__(self, degree, generators=(), name=None, chain=None):
        gens = []
        for g in generators:
            if g.size != degree:
                raise DegreeMismatchError(g.size, degree)
            gens.append(g)
        self.degree = degree
        self.generators = tuple(gens)
        self.name = name
        nontrivial = [g for g in gens if not g.is_Identity]
        self.sympy = PermutationGroup(nontrivial or [identity(degree)])
        self._chain = chain
        self._cache = {}

    def __repr__(self):
        label = self.name or "PermGroup"
        return f"<{label} degree={self.degree} gens={len(self.generators)}>"

    # ---- Chain ----

    def chain(self):
        if self._chain is None:
            nontrivial = [g for g in self.generators if not g.is_Identity]
            if not nontrivial:
                self._chain = StabilizerChain((), (), ())
            else:
                base, strong = self.sympy.schreier_sims_incremental()
                self._chain = StabilizerChain.from_bsgs(base, strong)
        return self._chain

    def order(self):
        return self.chain().order()

    def is_trivial(self):
        return all(g.is_Identity for g in self.generators)

    @property
    def identity(self):
        return identity(self.degree)

    def contains(self, p):
        if p.size != self.degree:
            raise DegreeMismatchError(p.size, self.degree)
        return self.chain().contains(p)

    def __contains__(self, p):
        return self.contains(p)

    # ---- Enumeration ----

    def census(self, cap=None):
        cap = config.CENSUS_CAP if cap is None else cap
        if self.order() > cap:
            raise CensusCapExceeded(self.order(), cap)
        census = self._cache.get("census")
        if census is None:
            census = self._cache["census"] = Census(self, cap)
        return census

    def elements(self, cap=None):
        return self.census(cap).elements()

    # ---- Orbits ----

    def orbit(self, alpha):
        check_point(alpha, self.degree)
        gens = [g.array_form for g in self.generators]
        points = [alpha]
        tree = {}
        for pt in points:
            for gen_index, images in enumerate(gens):
                nxt = images[pt]
                if nxt != alpha and nxt not in tree:
                    tree[nxt] = (pt, gen_index)
                    points.append(nxt)
        return Orbit(alpha, tuple(points), tree, self.generators, self.degree)

    def orbits(self):
        cached = self._cache.get("orbits")
        if cached is None:
            seen = set()
            cached = []
            for pt in range(self.degree):
                if pt not in seen:
                    orb = tuple(sorted(self.orbit(pt).points))
                    seen.update(orb)
                    cached.append(orb)
            self._cache["orbits"] = cached
        return cached

    def is_transitive(self):
        return len(self.orbits()) == 1

    def is_semiregular(self):
        order = self.order()
        return all(len(orb) == order for orb in self.orbits())

    # ---- Subgroups ----

    def subgroup(self, generators, name=None, chain=None):
        return PermGroup(self.degree, generators, name=name, chain=chain)

    def pointwise_stabilizer(self, points):
        points = [check_point(pt, self.degree) for pt in points]
        if not points or self.is_trivial():
            return self.subgroup(self.generators)
        stab = self.sympy.pointwise_stabilizer(points)
        return self.subgroup([g for g in stab.generators if not g.is_Identity])

    def is_subgroup_of(self, other):
        if self.degree != other.degree:
            raise DegreeMismatchError(self.degree, other.degree)
        return all(other.contains(g) for g in self.generators)

    def equals(self, other):
        return self.order() == other.order() and self.is_subgroup_of(other)

    def is_normal_in(self, other):
        return all(
            self.contains(conjugate(h, g))
            for h in self.generators
            for g in other.generators
        )

    def is_abelian(self):
        gens = self.generators
        return all(compose(a, b) == compose(b, a) for i, a in enumerate(gens) for b in gens[i + 1:])

    def join(self, other):
        return self.subgroup(self.generators + other.generators)


# ---- Operation-level API ----

def orbit(group, alpha):
    return group.orbit(alpha)


def build_chain(group):
    return group.chain()


def membership(group, p):
    return group.contains(p)


def elements(group, cap=None):
    return group.elements(cap)


def pointwise_stabilizer(group, points):
    return group.pointwise_stabilizer(points)


def extend_group(group, new_generators):
    """The subgroup generated by group and new_generators, reusing group's chain."""
    new_generators = list(new_generators)
    chain = group.chain()
    gens = list(group.generators) + new_generators
    strong = list(chain.strong_generators) + [g for g in new_generators if not g.is_Identity]
    if not strong:
        return group.subgroup(gens)
    base, strong = group.sympy.schreier_sims_incremental(base=list(chain.base), gens=strong)
    return group.subgroup(gens, chain=StabilizerChain.from_bsgs(base, strong))
