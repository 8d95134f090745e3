"""
SemiPrim - Atlas Registry
Named exceptional groups with YAML certificates, and construction of any
group expression.
"""

import os
from pathlib import Path

import yaml

from src import config
from src.actions.blocks import orbit_block_system
from src.actions.taxonomy import is_semiprimitive
from src.atlas import constructors, exceptional
from src.atlas.expr import GroupExpr, parse_group_expr
from src.core.errors import CertificateError, ExprSyntaxError
from src.core.group import PermGroup
from src.core.permutation import from_cycles, read_generator_file, write_generator_file
from src.structure.lattice import center, derived_subgroup, has_complement, is_elementary_abelian, normal_closure

DATA_DIR = Path(__file__).parent / "data"


def _from_group(group):
    return group.degree, list(group.generators)


RECIPES = {
    "3A6d18": exceptional.three_a6,
    "3A6x2d18": exceptional.three_a6_extended,
    "24A7d112": exceptional.two4_a7,
    "AGL42d128": exceptional.affine_on_stars,
    "24A8nsd128": exceptional.two4_a8_nonsplit,
    "GL24d15": lambda: _from_group(constructors.general_linear(2, 4)),
    "GammaL24d15": lambda: _from_group(constructors.semilinear(2, 4)),
}
ATLAS_NAMES = tuple(RECIPES)

_loaded = {}


def _cache_path(name):
    if not config.ATLAS_CACHE_DIR:
        return None
    return Path(config.ATLAS_CACHE_DIR) / f"{name}.gens"


def data_path(name):
    return DATA_DIR / f"{name}.gens"


def load_generators(name):
    """(degree, generators) for an atlas entry: the shipped data file, then the cache, then the recipe."""
    if name not in RECIPES:
        raise CertificateError(name, "unknown atlas entry")
    shipped = data_path(name)
    if shipped.exists():
        return read_generator_file(shipped)
    path = _cache_path(name)
    if path is not None and path.exists():
        return read_generator_file(path)
    degree, gens = RECIPES[name]()
    if path is not None:
        os.makedirs(path.parent, exist_ok=True)
        write_generator_file(path, degree, gens)
    return degree, list(gens)


def read_certificate(name):
    path = DATA_DIR / f"{name}.cert"
    with open(path, encoding="utf-8") as fh:
        return yaml.safe_load(fh)


def write_atlas_data(names=ATLAS_NAMES, directory=None, progress=None):
    """Regenerate the shipped generator files from the recipes.

    Each regenerated group is checked against its certificate before its file
    is written; returns the written paths.
    """
    directory = Path(directory) if directory is not None else DATA_DIR
    os.makedirs(directory, exist_ok=True)
    written = []
    for name in names:
        if name not in RECIPES:
            raise CertificateError(name, "unknown atlas entry")
        degree, gens = RECIPES[name]()
        check_certificate(name, PermGroup(degree, gens, name=name), read_certificate(name))
        path = directory / f"{name}.gens"
        write_generator_file(path, degree, gens)
        if progress:
            progress(f"Wrote {path}")
        written.append(path)
    return written


# ---- Certificate checks ----

def _selected_normal(group, which):
    if which == "center":
        return center(group)
    if which == "derived_center":
        return center(derived_subgroup(group))
    if which == "last_generator":
        return normal_closure(group, [group.generators[-1]])
    raise ValueError(f"unknown normal subgroup selector {which!r}")


class _Facts:
    """Lazily computed values a certificate may refer to."""

    def __init__(self, group, cert):
        self.group = group
        self.cert = cert
        self._normal = None
        self._image = None

    def normal(self):
        if self._normal is None:
            self._normal = _selected_normal(self.group, self.cert.get("normal_subgroup", "center"))
        return self._normal

    def image(self):
        if self._image is None:
            self._image = orbit_block_system(self.group, self.normal()).induced_image
        return self._image

    def value(self, key):
        group = self.group
        if key == "degree":
            return group.degree
        if key == "order":
            return group.order()
        if key == "transitive":
            return group.is_transitive()
        if key == "center_order":
            return center(group).order()
        if key == "center_semiregular":
            return center(group).is_semiregular()
        if key == "perfect":
            return derived_subgroup(group).order() == group.order()
        if key == "semiprimitive":
            return is_semiprimitive(group)
        if key == "contains_subgroup":
            other = atlas_load(self.cert[key])
            return self.cert[key] if other.is_subgroup_of(group) else None
        if key == "contains_subgroup_index":
            other = atlas_load(self.cert["contains_subgroup"])
            return group.order() // other.order()
        if key == "normal_subgroup":
            return self.cert[key] if self.normal().is_normal_in(group) else None
        if key == "normal_subgroup_order":
            return self.normal().order()
        if key == "normal_subgroup_elementary_abelian":
            return is_elementary_abelian(self.normal())
        if key == "normal_subgroup_semiregular":
            return self.normal().is_semiregular()
        if key == "normal_subgroup_orbits":
            return len(self.normal().orbits())
        if key == "delta_image_order":
            return self.image().order()
        if key == "delta_image_has_order_15":
            return self.image().census().has_element_of_order(15)
        if key == "involutions":
            return group.census().involution_count()
        if key == "splits":
            return has_complement(group, self.normal())
        raise KeyError(key)


def check_certificate(name, group, cert):
    """Raise CertificateError on the first certificate line the group fails."""
    facts = _Facts(group, cert)
    for key, expected in cert.items():
        try:
            actual = facts.value(key)
        except KeyError:
            raise CertificateError(name, f"unknown certificate key {key!r}") from None
        if actual != expected:
            raise CertificateError(name, f"{key}: {expected}", expected, actual)
    return True


def atlas_load(name):
    group = _loaded.get(name)
    if group is not None:
        return group
    degree, gens = load_generators(name)
    group = PermGroup(degree, gens, name=name)
    check_certificate(name, group, read_certificate(name))
    _loaded[name] = group
    return group


# ---- Expressions ----

def construct(expr):
    if isinstance(expr, str):
        expr = parse_group_expr(expr)
    kind, args = expr.kind, expr.args
    if kind == "S":
        group = constructors.symmetric(args[0])
    elif kind == "A":
        group = constructors.alternating(args[0])
    elif kind == "C":
        group = constructors.cyclic(args[0])
    elif kind == "D":
        group = constructors.dihedral(args[0])
    elif kind == "AGL":
        group = constructors.affine(*args)
    elif kind == "GL":
        group = constructors.general_linear(*args)
    elif kind == "GammaL":
        group = constructors.semilinear(*args)
    elif kind == "direct":
        group = constructors.direct_product(construct(args[0]), construct(args[1]))
    elif kind == "wreath":
        group = constructors.wreath_product(construct(args[0]), construct(args[1]))
    elif kind == "atlas":
        if args[0] not in RECIPES:
            raise ExprSyntaxError(f"unknown atlas entry {args[0]!r}", 0)
        return atlas_load(args[0])
    elif kind == "group":
        degree, perms = args
        group = PermGroup(degree, [from_cycles([list(c) for c in cycles if c], degree) for cycles in perms])
    elif kind == "cosets":
        group = constructors.cosets(construct(args[0]), args[1])
    else:
        raise ExprSyntaxError(f"unknown expression kind {kind!r}", 0)
    group.name = str(GroupExpr(kind, args))
    return group
