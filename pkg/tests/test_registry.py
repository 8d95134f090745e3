import shutil

import pytest
from sympy.combinatorics import Permutation

from src import config
from src.atlas import exceptional, registry
from src.atlas.exceptional import EXTENSION_INVOLUTIONS
from src.atlas.registry import (
    ATLAS_NAMES,
    atlas_load,
    check_certificate,
    construct,
    load_generators,
    read_certificate,
    write_atlas_data,
)
from src.core.errors import CertificateError, ExprSyntaxError
from src.core.group import PermGroup
from src.core.permutation import write_generator_file
from src.metrics.degree import involution_count
from src.structure.lattice import has_complement, normal_closure


def test_names():
    assert set(ATLAS_NAMES) == {
        "24A7d112", "AGL42d128", "24A8nsd128", "3A6d18", "3A6x2d18", "GL24d15", "GammaL24d15",
    }


@pytest.mark.slow
@pytest.mark.parametrize("name", ATLAS_NAMES)
def test_certificates_pass(name):
    group = atlas_load(name)
    cert = read_certificate(name)
    assert group.degree == cert["degree"]
    assert group.order() == cert["order"]
    assert group.name == name


def test_single_swap_breaks_certificate():
    degree, gens = load_generators("GL24d15")
    images = list(gens[0].array_form)
    images[0], images[1] = images[1], images[0]
    mutated = PermGroup(degree, [Permutation(images)] + list(gens[1:]))
    with pytest.raises(CertificateError) as info:
        check_certificate("GL24d15", mutated, read_certificate("GL24d15"))
    assert info.value.name == "GL24d15"


def test_unknown_certificate_key():
    group = atlas_load("GL24d15")
    with pytest.raises(CertificateError):
        check_certificate("GL24d15", group, {"degree": 15, "colour": "blue"})


def test_unknown_entry():
    with pytest.raises(CertificateError):
        load_generators("M24")
    with pytest.raises(ExprSyntaxError):
        construct("atlas(M24)")


@pytest.mark.slow
def test_split_and_nonsplit_share_involution_count():
    assert involution_count(atlas_load("AGL42d128")) == EXTENSION_INVOLUTIONS == 1695
    assert involution_count(atlas_load("24A8nsd128")) == EXTENSION_INVOLUTIONS


@pytest.mark.slow
@pytest.mark.parametrize("name,splits", [("AGL42d128", True), ("24A8nsd128", False)])
def test_translation_complement(name, splits):
    group = atlas_load(name)
    translations = normal_closure(group, [group.generators[-1]])
    assert translations.order() == 16
    assert has_complement(group, translations) is splits


@pytest.mark.slow
def test_abstract_extensions():
    elements, star_perms, shifts, basis, obstruction = exceptional.extension_cocycles()
    assert obstruction
    assert exceptional.extension_splits(obstruction, 0)
    solution = exceptional.nonsplit_solution()
    assert solution in basis
    assert not exceptional.extension_splits(obstruction, solution)
    # involution counts cannot tell the two extensions apart
    assert exceptional.abstract_involution_count(elements, star_perms, shifts, 0) == EXTENSION_INVOLUTIONS
    assert exceptional.abstract_involution_count(elements, star_perms, shifts, solution) == EXTENSION_INVOLUTIONS


def test_construct_expressions():
    assert construct("GL(2,4)").order() == 180
    assert construct("GL(2,4)").name == "GL(2,4)"
    assert construct("wreath(S(2),C(3))").order() == 24
    assert construct("group(4;(1 2 3 4))").order() == 4
    assert construct("atlas(GL24d15)") is atlas_load("GL24d15")


def _copy_certificates(directory):
    directory.mkdir()
    for cert in registry.DATA_DIR.glob("*.cert"):
        shutil.copy(cert, directory)
    return directory


def test_generator_cache(tmp_path, monkeypatch):
    monkeypatch.setattr(registry, "DATA_DIR", _copy_certificates(tmp_path / "data"))
    monkeypatch.setattr(config, "ATLAS_CACHE_DIR", str(tmp_path / "cache"))
    degree, gens = load_generators("GL24d15")
    assert (tmp_path / "cache" / "GL24d15.gens").exists()
    monkeypatch.setitem(registry.RECIPES, "GL24d15", lambda: pytest.fail("recipe called despite cache"))
    cached_degree, cached = load_generators("GL24d15")
    assert cached_degree == degree
    assert cached == list(gens)


def test_data_file_preferred_over_recipe(tmp_path, monkeypatch):
    data = _copy_certificates(tmp_path / "data")
    monkeypatch.setattr(registry, "DATA_DIR", data)
    monkeypatch.setattr(registry, "_loaded", {})
    [path] = write_atlas_data(["GL24d15"], data)
    assert path == data / "GL24d15.gens"
    monkeypatch.setitem(registry.RECIPES, "GL24d15", lambda: pytest.fail("recipe called despite data file"))
    group = atlas_load("GL24d15")
    assert group.order() == 180


def test_corrupted_data_file_is_refused(tmp_path, monkeypatch):
    data = _copy_certificates(tmp_path / "data")
    monkeypatch.setattr(registry, "DATA_DIR", data)
    monkeypatch.setattr(registry, "_loaded", {})
    write_atlas_data(["GL24d15"], data)
    degree, gens = load_generators("GL24d15")
    images = list(gens[0].array_form)
    images[0], images[1] = images[1], images[0]
    write_generator_file(data / "GL24d15.gens", degree, [Permutation(images)] + list(gens[1:]))
    with pytest.raises(CertificateError) as info:
        atlas_load("GL24d15")
    assert info.value.name == "GL24d15"
    assert "GL24d15" not in registry._loaded


def test_write_data_checks_certificate(tmp_path, monkeypatch):
    data = _copy_certificates(tmp_path / "data")
    monkeypatch.setattr(registry, "DATA_DIR", data)
    monkeypatch.setitem(registry.RECIPES, "GL24d15", registry.RECIPES["GammaL24d15"])
    with pytest.raises(CertificateError):
        write_atlas_data(["GL24d15"], data)
    assert not (data / "GL24d15.gens").exists()
