"""
SemiPrim - Taxonomy
Places a group in the chain primitive => quasiprimitive => innately transitive
=> semiprimitive => transitive, with a witness normal subgroup where one exists.
"""

from dataclasses import dataclass, field

from src.actions.blocks import is_primitive, minimal_blocks, orbit_block_system
from src.core.group import PermGroup
from src.structure.lattice import normal_lattice

PRIMITIVE = "primitive"
QUASIPRIMITIVE = "quasiprimitive_not_primitive"
INNATELY_TRANSITIVE = "innately_transitive_not_qp"
SEMIPRIMITIVE = "semiprimitive_not_it"
TRANSITIVE = "transitive_not_semiprimitive"
INTRANSITIVE = "intransitive"

LABELS = (PRIMITIVE, QUASIPRIMITIVE, INNATELY_TRANSITIVE, SEMIPRIMITIVE, TRANSITIVE, INTRANSITIVE)


@dataclass(frozen=True)
class TaxonomyLabel:
    label: str
    witness: PermGroup = field(default=None, compare=False)

    @property
    def rank(self):
        return LABELS.index(self.label)

    @property
    def is_primitive(self):
        return self.rank <= 0

    @property
    def is_quasiprimitive(self):
        return self.rank <= 1

    @property
    def is_innately_transitive(self):
        return self.rank <= 2

    @property
    def is_semiprimitive(self):
        return self.rank <= 3

    @property
    def is_transitive(self):
        return self.rank <= 4


def _violates_semiprimitivity(member):
    return not member.is_transitive() and not member.is_semiregular()


def _block_kernel_violation(group):
    """Kernel of a minimal block system that is neither trivial nor semiregular."""
    seen = set()
    for beta in range(1, group.degree):
        system = minimal_blocks(group, 0, beta)
        if system.block_count == 1 or system.blocks in seen:
            continue
        seen.add(system.blocks)
        kernel = system.kernel
        if not kernel.is_trivial() and not kernel.is_semiregular():
            return kernel
    return None


def is_semiprimitive(group):
    if not group.is_transitive():
        return False
    if _block_kernel_violation(group) is not None:
        return False
    return not any(_violates_semiprimitivity(m) for m in normal_lattice(group))


def is_quasiprimitive(group):
    if not group.is_transitive():
        return False
    return all(m.is_transitive() for m in normal_lattice(group).members[1:])


def is_innately_transitive(group):
    if not group.is_transitive():
        return False
    if group.degree == 1:
        return True
    return any(m.is_transitive() for m in normal_lattice(group).minimal())


def classify(group):
    if not group.is_transitive():
        return TaxonomyLabel(INTRANSITIVE)
    if is_primitive(group):
        return TaxonomyLabel(PRIMITIVE)
    violation = _block_kernel_violation(group)
    if violation is not None:
        return TaxonomyLabel(TRANSITIVE, violation)
    lattice = normal_lattice(group)
    intransitive = [m for m in lattice.members[1:] if not m.is_transitive()]
    if not intransitive:
        return TaxonomyLabel(QUASIPRIMITIVE)
    for m in lattice.minimal():
        if m.is_transitive():
            return TaxonomyLabel(INNATELY_TRANSITIVE, m)
    for m in lattice.members:
        if _violates_semiprimitivity(m):
            return TaxonomyLabel(TRANSITIVE, m)
    return TaxonomyLabel(SEMIPRIMITIVE, intransitive[0])


def kernel_characterisation(group):
    """Every intransitive normal subgroup is the kernel of the action on its orbits."""
    if not group.is_transitive():
        return False
    for m in normal_lattice(group):
        if m.is_transitive():
            continue
        if not orbit_block_system(group, m).kernel.equals(m):
            return False
    return True


def is_semiprimitive_two_ways(group):
    return is_semiprimitive(group), kernel_characterisation(group)


def antiplinths(group):
    """Normal subgroups maximal among the intransitive ones."""
    lattice = normal_lattice(group)
    intransitive = [i for i, m in enumerate(lattice.members) if not m.is_transitive()]
    result = []
    for i in intransitive:
        m = lattice.members[i]
        if not any(
            j != i and lattice.members[j].order() > m.order() and m.is_subgroup_of(lattice.members[j])
            for j in intransitive
        ):
            result.append(m)
    return result


def quotient_image(group, normal):
    """G^Delta for the orbits of an intransitive normal subgroup."""
    return orbit_block_system(group, normal).induced_image
