from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, settings

from src import config
from src.atlas.constructors import affine, alternating, cyclic, general_linear, symmetric
from src.core.errors import PreconditionError
from src.core.permutation import moved_count
from src.harness.corpus import parse_corpus, resolve_group
from src.metrics.degree import block_degree_bound, block_degree_bound_check, fixity, fpr, involution_count, minimal_degree
from src.structure.lattice import center
from tests.strategies import groups

DEFAULT_CORPUS = Path(__file__).resolve().parent.parent / "corpus" / "default.txt"


def test_minimal_degree_of_natural_actions():
    m, witness = minimal_degree(symmetric(5))
    assert m == 2
    assert moved_count(witness) == 2
    assert minimal_degree(alternating(5))[0] == 3
    assert minimal_degree(cyclic(7))[0] == 7


def test_trivial_group_has_no_minimal_degree():
    with pytest.raises(PreconditionError):
        minimal_degree(symmetric(4).subgroup(()))


def test_fixity_and_ratio():
    assert fixity(general_linear(2, 4)) == 3
    assert fpr(general_linear(2, 4)) == Fraction(1, 5)
    assert fpr(affine(3, 2)) == Fraction(1, 2)
    assert fpr(affine(2, 3)) == Fraction(1, 3)


def test_class_mode(monkeypatch):
    monkeypatch.setattr(config, "CLASS_MODE_THRESHOLD", 10)
    m, witness = minimal_degree(symmetric(5))
    assert m == 2
    assert moved_count(witness) == 2


def test_involutions():
    assert involution_count(symmetric(4)) == 9
    assert involution_count(alternating(5)) == 15


def test_block_degree_bound():
    gl = general_linear(2, 4)
    assert block_degree_bound(gl, center(gl)) == (12, 3, 3)
    assert block_degree_bound_check(gl, center(gl))


@settings(max_examples=100, deadline=None)
@given(groups(6))
def test_minimal_degree_matches_census(group):
    if group.is_trivial():
        return
    expected = min(moved_count(g) for g in group.elements() if not g.is_Identity)
    assert minimal_degree(group)[0] == expected


def _corpus_entries():
    items = parse_corpus(DEFAULT_CORPUS.read_text(encoding="utf-8"))
    return [item[1] for item in items if item[0] == "entry"]


@pytest.mark.slow
@pytest.mark.parametrize("name", _corpus_entries())
def test_class_mode_matches_census_mode(name, monkeypatch):
    group = resolve_group(name)
    if group.order() > 10 ** 5:
        pytest.skip("census mode is too large")
    if group.is_trivial():
        pytest.skip("trivial group")
    monkeypatch.setattr(config, "CLASS_MODE_THRESHOLD", 0)
    by_class, class_witness = minimal_degree(group)
    monkeypatch.setattr(config, "CLASS_MODE_THRESHOLD", 10 ** 9)
    by_census, census_witness = minimal_degree(group)
    assert by_class == by_census
    assert moved_count(class_witness) == moved_count(census_witness) == by_census
