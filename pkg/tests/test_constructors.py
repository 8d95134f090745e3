import pytest

from src.actions.blocks import coset_action
from src.atlas.constructors import (
    affine,
    alternating,
    alternating_cover_witness,
    cosets,
    cyclic,
    dihedral,
    direct_product,
    example43_graph_subgroup,
    general_linear,
    semilinear,
    symmetric,
    wreath_product,
)
from src.core.errors import PreconditionError


@pytest.mark.parametrize(
    "group, degree, order",
    [
        (symmetric(6), 6, 720),
        (alternating(7), 7, 2520),
        (alternating(4), 4, 12),
        (cyclic(1), 1, 1),
        (dihedral(5), 5, 10),
        (direct_product(cyclic(3), alternating(5)), 8, 180),
        (wreath_product(symmetric(2), symmetric(3)), 6, 48),
        (general_linear(3, 2), 7, 168),
        (general_linear(2, 4), 15, 180),
        (general_linear(2, 5), 24, 480),
        (semilinear(2, 4), 15, 360),
        (semilinear(2, 3), 8, 48),
        (affine(2, 3), 9, 432),
        (affine(3, 2), 8, 1344),
    ],
)
def test_degree_and_order(group, degree, order):
    assert group.degree == degree
    assert group.order() == order


def test_linear_groups_are_transitive():
    assert general_linear(2, 4).is_transitive()
    assert affine(2, 3).is_transitive()
    assert not direct_product(cyclic(3), alternating(5)).is_transitive()


def test_dihedral_needs_three_points():
    with pytest.raises(PreconditionError):
        dihedral(2)


def test_graph_subgroup_coset_action():
    group, graph = example43_graph_subgroup()
    assert graph.order() == 12
    image = coset_action(group, graph)
    assert image.degree == 15
    assert image.order() == 180
    assert image.is_transitive()


def test_cosets_from_cycles():
    group = direct_product(cyclic(3), alternating(5))
    image = cosets(group, [((1, 2, 3), (4, 5, 6)), ((4, 5), (6, 7))])
    assert image.degree == 15


def test_alternating_cover_witness():
    group, graph = alternating_cover_witness(6)
    assert group.order() == 60 * 360
    assert graph.order() == 60
    group, graph = alternating_cover_witness(6, extended=True)
    assert group.order() == 120 * 720 // 2
    assert graph.order() == 120
    with pytest.raises(PreconditionError):
        alternating_cover_witness(4)
