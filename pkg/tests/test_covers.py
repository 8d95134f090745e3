import pytest

from src.actions.blocks import coset_action
from src.atlas.constructors import (
    alternating_cover_witness,
    cyclic,
    dihedral,
    example43_graph_subgroup,
    general_linear,
    semilinear,
    symmetric,
)
from src.atlas.registry import atlas_load
from src.classification.covers import (
    ALTERNATING,
    EXCEPTIONAL_GROUPS,
    INFINITE_FAMILIES,
    OTHER,
    ROWS,
    SYMMETRIC,
    TRIVIAL,
    ClassificationOutcome,
    ansn_cover_classify,
    cover_context,
    image_label,
    monolithic_check,
    subcartesian_verify,
    trilemma_case,
)
from src.core.errors import PreconditionError
from src.structure.lattice import center, derived_subgroup


def test_rows():
    assert len(EXCEPTIONAL_GROUPS) == 7
    assert len(INFINITE_FAMILIES) == 6
    assert set(ROWS) >= {"GL24d15", "family-2b", "family-T2"}
    assert ROWS["GammaL24d15"].innately_transitive
    assert not ROWS["3A6d18"].innately_transitive


def test_image_label():
    assert image_label(1, 5) == TRIVIAL
    assert image_label(60, 5) == ALTERNATING
    assert image_label(120, 5) == SYMMETRIC
    assert image_label(20, 5) == OTHER


def test_context_needs_semiprimitive_group():
    with pytest.raises(PreconditionError) as info:
        cover_context(dihedral(4))
    assert info.value.violations == ["G semiprimitive"]


def test_context_needs_alternating_block_action():
    with pytest.raises(PreconditionError):
        cover_context(symmetric(5))
    with pytest.raises(PreconditionError):
        cover_context(cyclic(4))


def test_general_linear_context():
    ctx = cover_context(general_linear(2, 4))
    assert (ctx.r, ctx.m, ctx.d) == (5, 3, 1)
    assert ctx.g_delta_label == ALTERNATING
    assert ctx.h_delta_label == ALTERNATING
    assert ctx.derived.order() == 60
    assert all(c.holds for c in ctx.claims)
    case, claims = trilemma_case(ctx)
    assert case == 3
    assert all(c.holds for c in claims)


def test_subcartesian_claims():
    gl = general_linear(2, 4)
    claims = subcartesian_verify(center(gl), derived_subgroup(gl), 0)
    assert len(claims) == 6
    assert all(c.holds for c in claims)


def test_subcartesian_preconditions():
    s4 = symmetric(4)
    trivial = s4.subgroup(())
    with pytest.raises(PreconditionError) as info:
        subcartesian_verify(trivial, trivial, 0)
    assert "M and H nontrivial" in info.value.violations
    assert "<M, H> transitive" in info.value.violations


def test_monolithic():
    assert monolithic_check(symmetric(4))
    assert not monolithic_check(general_linear(2, 4))


def test_general_linear_row():
    outcome = ansn_cover_classify(general_linear(2, 4))
    assert outcome.theorem_case == "2b"
    assert outcome.row_key == "GL24d15"
    assert outcome.trilemma == 3
    assert (outcome.antiplinth_order, outcome.blocks) == (3, 5)
    assert (outcome.g_delta, outcome.h_delta) == ("A5", "A5")


def test_semilinear_row():
    outcome = ansn_cover_classify(semilinear(2, 4))
    assert outcome.theorem_case == "3b"
    assert outcome.row_key == "GammaL24d15"
    assert (outcome.g_delta, outcome.h_delta) == ("S5", "A5")


def test_graph_subgroup_witness():
    group, graph = example43_graph_subgroup()
    outcome = ansn_cover_classify(coset_action(group, graph))
    assert outcome.row_key == "GL24d15"


def test_outcome_round_trip():
    outcome = ansn_cover_classify(general_linear(2, 4))
    assert ClassificationOutcome.from_dict(outcome.to_dict()) == outcome


def test_primitive_group_has_no_cover():
    with pytest.raises(PreconditionError):
        ansn_cover_classify(symmetric(6))


@pytest.mark.slow
@pytest.mark.parametrize(
    "name, theorem_case, trilemma",
    [
        ("24A7d112", "1a", None),
        ("AGL42d128", "1a", None),
        ("24A8nsd128", "1a", None),
        ("3A6d18", "2a", 1),
        ("3A6x2d18", "3a", 1),
        ("GL24d15", "2b", 3),
        ("GammaL24d15", "3b", 3),
    ],
)
def test_exceptional_groups(name, theorem_case, trilemma):
    outcome = ansn_cover_classify(atlas_load(name))
    assert outcome.row_key == name
    assert outcome.theorem_case == theorem_case
    assert outcome.trilemma == trilemma
    assert all(c.holds for c in outcome.verified_claims)


@pytest.mark.slow
@pytest.mark.parametrize("extended, row, theorem_case", [(False, "family-2b", "2b"), (True, "family-3b", "3b")])
def test_alternating_cover_witnesses(extended, row, theorem_case):
    group, graph = alternating_cover_witness(6, extended=extended)
    action = coset_action(group, graph)
    assert action.degree == 360
    outcome = ansn_cover_classify(action)
    assert outcome.row_key == row
    assert outcome.theorem_case == theorem_case
    assert outcome.trilemma == 3


@pytest.mark.slow
@pytest.mark.parametrize("name, found", [("AGL42d128", 1), ("24A8nsd128", 0)])
def test_extensions_of_a8_told_apart_by_complements(name, found):
    outcome = ansn_cover_classify(atlas_load(name))
    [claim] = [c for c in outcome.verified_claims if c.name == "M has a complement"]
    assert claim.lhs == found
    assert claim.holds
