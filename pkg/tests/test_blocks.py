import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from src.actions.blocks import (
    action_kernel,
    block_system,
    coset_action,
    coset_action_data,
    is_primitive,
    minimal_blocks,
    nontrivial_block_system,
    orbit_block_system,
    setwise_stabilizer,
)
from src.atlas.constructors import alternating, cyclic, dihedral, symmetric, wreath_product
from src.core.errors import IndexCapExceeded, NotNormalError, PreconditionError
from src.core.permutation import conjugate, from_cycles
from src.structure.lattice import center
from tests.strategies import groups


def test_wreath_block_system():
    group = wreath_product(symmetric(2), symmetric(3))
    assert group.order() == 48
    system = block_system(group, [[0, 1], [2, 3], [4, 5]])
    assert system.block_count == 3
    assert system.block_size == 2
    assert system.kernel.order() == 8
    assert system.induced_image.order() == 6
    assert setwise_stabilizer(group, system, 0).order() == 16


def test_partition_must_be_invariant():
    with pytest.raises(PreconditionError):
        block_system(symmetric(4), [[0, 1], [2, 3]])
    with pytest.raises(PreconditionError):
        block_system(cyclic(4), [[0, 2], [1]])


def test_primitivity():
    assert is_primitive(symmetric(5))
    assert is_primitive(cyclic(5))
    assert not is_primitive(cyclic(4))
    assert not is_primitive(wreath_product(symmetric(2), symmetric(3)))
    assert nontrivial_block_system(symmetric(5)) is None


def test_minimal_blocks():
    system = minimal_blocks(cyclic(4), 0, 2)
    assert system.blocks == ((0, 2), (1, 3))
    assert minimal_blocks(cyclic(4), 0, 1).block_count == 1
    with pytest.raises(PreconditionError):
        minimal_blocks(cyclic(4), 1, 1)


def test_orbit_block_system():
    d4 = dihedral(4)
    system = orbit_block_system(d4, center(d4))
    assert system.blocks == ((0, 2), (1, 3))
    assert system.kernel.order() == 4
    assert not system.kernel.is_semiregular()


def test_orbit_block_system_needs_normal_subgroup():
    s4 = symmetric(4)
    with pytest.raises(NotNormalError):
        orbit_block_system(s4, s4.subgroup([from_cycles([[1, 2]], 4)]))


def test_action_kernel():
    s4 = symmetric(4)
    # action of S4 on {0, 1}: the sign
    images = [[int(g.is_odd), 1 - int(g.is_odd)] for g in s4.generators]
    assert action_kernel(s4, images, 2).order() == 12


def test_coset_action():
    a5 = alternating(5)
    point_stabilizer = a5.pointwise_stabilizer([4])
    action = coset_action_data(a5, point_stabilizer)
    assert action.degree == 5
    assert action.image.order() == 60
    assert action.is_faithful()
    assert action.image.is_transitive()


def test_coset_action_index_cap():
    s6 = symmetric(6)
    with pytest.raises(IndexCapExceeded):
        coset_action(s6, s6.subgroup(()), cap=100)


@settings(max_examples=30, deadline=None)
@given(groups(6), st.data())
def test_coset_kernel_is_core(group, data):
    assume(group.order() <= 500)
    elements = list(group.elements())
    seeds = data.draw(st.lists(st.sampled_from(elements), min_size=1, max_size=2))
    subgroup = group.subgroup(seeds)
    core = {x for x in subgroup.elements() if all(subgroup.contains(conjugate(x, g)) for g in elements)}
    kernel = coset_action_data(group, subgroup).kernel()
    assert set(kernel.elements()) == core
    assert kernel.order() == len(core)
