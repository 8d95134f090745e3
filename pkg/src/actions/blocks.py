"""
SemiPrim - Block Systems and Induced Actions
Kernels of actions are pointwise stabilizers in the disjoint-union action on
the points followed by the acted-on objects.
"""

from dataclasses import dataclass, field

from sympy.combinatorics import Permutation, PermutationGroup

from src import config
from src.core.errors import IndexCapExceeded, NotNormalError, NotSubgroupError, PreconditionError
from src.core.group import PermGroup


def _extended_generators(group, images, extra):
    n = group.degree
    perms = []
    for g, img in zip(group.generators, images):
        perms.append(Permutation(list(g.array_form) + [n + i for i in img]))
    return perms


def _restricted(perms, n):
    return [Permutation(p.array_form[:n]) for p in perms]


def stabilizer_in_action(group, images, extra, fixed):
    """Elements of group fixing every object index in ``fixed``.

    ``images[k]`` is the permutation of the objects 0..extra-1 induced by the
    k-th generator of ``group``.
    """
    n = group.degree
    fixed = sorted(set(fixed))
    if group.is_trivial() or not fixed:
        return group.subgroup(group.generators)
    ext = [p for p in _extended_generators(group, images, extra) if not p.is_Identity]
    if not ext:
        return group.subgroup(())
    big = PermutationGroup(ext)
    stab = big.pointwise_stabilizer([n + i for i in fixed])
    gens = [g for g in _restricted(stab.generators, n) if not g.is_Identity]
    return group.subgroup(gens)


def action_kernel(group, images, extra):
    """Kernel of the action of group on ``extra`` objects given by generator images."""
    return stabilizer_in_action(group, images, extra, range(extra))


def _block_images(group, block_of, count):
    images = []
    for g in group.generators:
        af = g.array_form
        img = [None] * count
        for pt, b in enumerate(block_of):
            target = block_of[af[pt]]
            if img[b] is None:
                img[b] = target
            elif img[b] != target:
                raise PreconditionError("partition is not invariant under the group")
        images.append(img)
    return images


@dataclass(frozen=True)
class BlockSystem:
    group: PermGroup = field(repr=False)
    blocks: tuple
    block_of: tuple = field(repr=False)
    images: tuple = field(repr=False)
    induced_image: PermGroup = field(repr=False)

    @property
    def block_size(self):
        return len(self.blocks[0])

    @property
    def block_count(self):
        return len(self.blocks)

    @property
    def is_trivial(self):
        return self.block_count in (1, self.group.degree)

    @property
    def kernel(self):
        cached = self.group._cache.get(("kernel", self.blocks))
        if cached is None:
            cached = action_kernel(self.group, self.images, self.block_count)
            self.group._cache[("kernel", self.blocks)] = cached
        return cached

    def block_stabilizer(self, index):
        """Setwise stabilizer of one block."""
        return stabilizer_in_action(self.group, self.images, self.block_count, [index])


def block_system(group, partition):
    """Build the block system of a G-invariant partition; blocks ordered by least point."""
    blocks = sorted((tuple(sorted(b)) for b in partition if b), key=lambda b: b[0])
    block_of = [None] * group.degree
    for index, block in enumerate(blocks):
        for pt in block:
            if block_of[pt] is not None:
                raise PreconditionError(f"point {pt + 1} lies in two blocks")
            block_of[pt] = index
    if None in block_of:
        raise PreconditionError("partition does not cover every point")
    if len({len(b) for b in blocks}) != 1:
        raise PreconditionError("blocks have unequal sizes")
    images = _block_images(group, block_of, len(blocks))
    induced = PermGroup(len(blocks), [Permutation(img) for img in images])
    return BlockSystem(group, tuple(blocks), tuple(block_of), tuple(tuple(i) for i in images), induced)


def setwise_stabilizer(group, system, index):
    return system.block_stabilizer(index)


def orbit_block_system(group, normal):
    """The system of N-orbits for an intransitive normal subgroup N."""
    if not normal.is_subgroup_of(group):
        raise NotSubgroupError("subgroup is not contained in the group")
    if not normal.is_normal_in(group):
        raise NotNormalError("subgroup is not normal in the group")
    orbits = normal.orbits()
    if len(orbits) == 1:
        raise PreconditionError("normal subgroup is transitive: a single block")
    return block_system(group, orbits)


# ---- Primitivity ----

def minimal_blocks(group, alpha, beta):
    """Finest block system with alpha and beta in one block."""
    if alpha == beta:
        raise PreconditionError("alpha and beta must differ")
    if not group.is_transitive():
        raise PreconditionError("minimal blocks need a transitive group")
    reps = group.sympy.minimal_block([alpha, beta])
    classes = {}
    for pt, rep in enumerate(reps):
        classes.setdefault(rep, []).append(pt)
    return block_system(group, classes.values())


def is_primitive(group):
    if group.degree <= 2:
        return group.is_transitive()
    if not group.is_transitive():
        return False
    return all(minimal_blocks(group, 0, beta).block_count == 1 for beta in range(1, group.degree))


def nontrivial_block_system(group):
    """First nontrivial block system found from point 0, or None when primitive."""
    for beta in range(1, group.degree):
        system = minimal_blocks(group, 0, beta)
        if system.block_count > 1:
            return system
    return None


# ---- Coset actions ----

class CosetAction:
    """Action of G by right multiplication on the right cosets of K."""

    def __init__(self, group, subgroup, representatives, images):
        self.group = group
        self.subgroup = subgroup
        self.representatives = representatives
        self.images = images
        self.image = PermGroup(len(representatives), [Permutation(img) for img in images])
        self._kernel = None

    @property
    def degree(self):
        return len(self.representatives)

    def kernel(self):
        if self._kernel is None:
            self._kernel = action_kernel(self.group, self.images, self.degree)
        return self._kernel

    def is_faithful(self):
        return self.kernel().is_trivial()


def _coset_key(chain, x):
    # least image of each basic orbit, level by level
    y = x
    for transversal in chain.transversals:
        af = y.array_form
        best = min(transversal, key=lambda o: af[o])
        y = transversal[best] * y
    return tuple(y.array_form)


def coset_action_data(group, subgroup, cap=None):
    cap = config.COSET_INDEX_CAP if cap is None else cap
    if not subgroup.is_subgroup_of(group):
        raise NotSubgroupError("coset action needs a subgroup of the group")
    index = group.order() // subgroup.order()
    if index > cap:
        raise IndexCapExceeded(index, cap)
    chain = subgroup.chain()
    reps = [group.identity]
    keys = {_coset_key(chain, group.identity): 0}
    images = [[None] * index for _ in group.generators]
    for i, rep in enumerate(reps):
        for k, g in enumerate(group.generators):
            y = rep * g
            key = _coset_key(chain, y)
            j = keys.get(key)
            if j is None:
                j = keys[key] = len(reps)
                reps.append(y)
            images[k][i] = j
    return CosetAction(group, subgroup, reps, [tuple(img) for img in images])


def coset_action(group, subgroup, cap=None):
    return coset_action_data(group, subgroup, cap).image
