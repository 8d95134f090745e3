import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.combinatorics import Permutation

from src.atlas.constructors import alternating, cyclic, dihedral, symmetric
from src.core.errors import CensusCapExceeded, DegreeMismatchError, PointOutOfRangeError
from src.core.group import PermGroup, StabilizerChain, extend_group, membership, orbit
from src.core.permutation import from_cycles, image
from tests.strategies import groups, permutations


def test_orders():
    assert symmetric(5).order() == 120
    assert alternating(6).order() == 360
    assert cyclic(7).order() == 7
    assert dihedral(6).order() == 12
    assert PermGroup(4).order() == 1


def test_membership():
    a5 = alternating(5)
    assert membership(a5, from_cycles([[1, 2, 3]], 5))
    assert not membership(a5, from_cycles([[1, 2]], 5))
    assert from_cycles([[1, 2], [3, 4]], 5) in a5


def test_degree_mismatch():
    with pytest.raises(DegreeMismatchError):
        PermGroup(4, [Permutation([1, 0, 2])])
    with pytest.raises(DegreeMismatchError):
        symmetric(4).contains(Permutation([1, 0, 2]))


def test_orbit_words():
    g = dihedral(5)
    orb = orbit(g, 0)
    assert len(orb) == 5
    for pt in orb.points:
        assert image(orb.element(pt), 0) == pt


def test_orbit_point_out_of_range():
    with pytest.raises(PointOutOfRangeError):
        symmetric(5).orbit(5)


def test_orbits_and_transitivity():
    g = PermGroup(6, [from_cycles([[1, 2, 3]], 6), from_cycles([[4, 5]], 6)])
    assert g.orbits() == [(0, 1, 2), (3, 4), (5,)]
    assert not g.is_transitive()
    assert symmetric(6).is_transitive()


def test_semiregular():
    assert cyclic(5).is_semiregular()
    assert PermGroup(6, [from_cycles([[1, 2], [3, 4], [5, 6]], 6)]).is_semiregular()
    assert not symmetric(3).is_semiregular()


def test_pointwise_stabilizer():
    s5 = symmetric(5)
    assert s5.pointwise_stabilizer([0]).order() == 24
    assert s5.pointwise_stabilizer([0, 1, 2]).order() == 2
    assert s5.pointwise_stabilizer([0, 1, 2, 3]).is_trivial()
    assert s5.pointwise_stabilizer([]).order() == 120


def test_elements_identity_first():
    elements = list(symmetric(4).elements())
    assert len(elements) == 24
    assert len(set(elements)) == 24
    assert elements[0].is_Identity


def test_census_cap():
    with pytest.raises(CensusCapExceeded):
        symmetric(8).elements(cap=100)


def test_extend_group():
    a5 = alternating(5)
    s5 = extend_group(a5, [from_cycles([[1, 2]], 5)])
    assert s5.order() == 120
    assert a5.is_subgroup_of(s5)
    assert a5.is_normal_in(s5)


def test_subgroup_relations():
    s4 = symmetric(4)
    v4 = s4.subgroup([from_cycles([[1, 2], [3, 4]], 4), from_cycles([[1, 3], [2, 4]], 4)])
    assert v4.order() == 4
    assert v4.is_abelian()
    assert v4.is_normal_in(s4)
    assert not s4.subgroup([from_cycles([[1, 2]], 4)]).is_normal_in(s4)
    assert v4.join(s4.subgroup([from_cycles([[1, 2, 3]], 4)])).order() == 12


@settings(max_examples=50, deadline=None)
@given(groups(6))
def test_chain_order_matches_enumeration(group):
    elements = list(group.elements())
    assert len(elements) == group.order()
    assert all(group.contains(g) for g in elements)


@settings(max_examples=100, deadline=None)
@given(groups(8), st.permutations(range(8)), st.lists(permutations(8), min_size=5, max_size=5))
def test_chain_invariant_under_base_change(group, points, others):
    base, strong = group.sympy.schreier_sims_incremental(base=list(points))
    rebased = PermGroup(group.degree, group.generators, chain=StabilizerChain.from_bsgs(base, strong))
    assert rebased.chain().base[:1] == tuple(points[:1]) or rebased.order() == 1
    assert rebased.order() == group.order()
    a, b = group.generators
    for p in [a, b, a * b, a * b * a, ~b * a] + others:
        assert rebased.contains(p) == group.contains(p)
