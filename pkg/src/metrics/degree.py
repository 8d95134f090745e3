"""
SemiPrim - Minimal Degree and Fixity
m(G), fix(G) and fpr(G) from the element census, switching to one
representative per conjugacy class for large groups.
"""

from fractions import Fraction

from src import config
from src.actions.blocks import orbit_block_system
from src.actions.taxonomy import is_semiprimitive
from src.core.errors import PreconditionError


def _max_fixity(group, cap=None):
    census = group.census(cap)
    if census.order > config.CLASS_MODE_THRESHOLD:
        classes = [c for c in census.classes() if c.index > 0]
        best = max(classes, key=lambda c: (c.fixed, -c.index))
        return best.fixed, census.arith.to_perm(best.representative)
    fixed, _, packed = census.fixity_profile()
    return fixed, census.arith.to_perm(packed)


def minimal_degree(group, cap=None):
    """(m(G), witness): least number of points moved by a nontrivial element."""
    if group.is_trivial():
        raise PreconditionError("the trivial group has no minimal degree")
    fixed, witness = _max_fixity(group, cap)
    return group.degree - fixed, witness


def fixity(group, cap=None):
    return group.degree - minimal_degree(group, cap)[0]


def fpr(group, cap=None):
    return Fraction(fixity(group, cap), group.degree)


def involution_count(group, cap=None):
    return group.census(cap).involution_count()


def block_degree_bound(group, normal):
    """(m(G), s, m(G^Delta)) for the system of N-orbits."""
    if not is_semiprimitive(group):
        raise PreconditionError("block degree bound needs a semiprimitive group")
    system = orbit_block_system(group, normal)
    m_image, _ = minimal_degree(system.induced_image)
    return minimal_degree(group)[0], system.block_size, m_image


def block_degree_bound_check(group, normal):
    m_group, s, m_image = block_degree_bound(group, normal)
    return m_group >= s * m_image
