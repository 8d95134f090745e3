"""
SemiPrim - Group Constructors
Natural actions of the symmetric, alternating, cyclic and dihedral groups,
direct and wreath products, and the linear and affine groups over small fields.
"""

from itertools import product

from sympy.combinatorics import Permutation

from src.actions.blocks import coset_action
from src.atlas.fields import diagonal, elementary, field, vec_mat
from src.core.errors import PreconditionError
from src.core.group import PermGroup
from src.core.permutation import from_cycles


def _cycle(points, degree):
    images = list(range(degree))
    for a, b in zip(points, points[1:] + points[:1]):
        images[a] = b
    return Permutation(images)


def symmetric(n):
    if n < 2:
        return PermGroup(n, (), name=f"S{n}")
    return PermGroup(n, [_cycle(list(range(n)), n), _cycle([0, 1], n)], name=f"S{n}")


def alternating(n):
    if n < 3:
        return PermGroup(n, (), name=f"A{n}")
    if n % 2:
        long_cycle = _cycle(list(range(n)), n)
    else:
        long_cycle = _cycle(list(range(1, n)), n)
    return PermGroup(n, [long_cycle, _cycle([0, 1, 2], n)], name=f"A{n}")


def cyclic(n):
    if n < 2:
        return PermGroup(n, (), name=f"C{n}")
    return PermGroup(n, [_cycle(list(range(n)), n)], name=f"C{n}")


def dihedral(n):
    """Symmetries of the n-gon on its n vertices."""
    if n < 3:
        raise PreconditionError("dihedral groups need n >= 3")
    reflection = Permutation([(-i) % n for i in range(n)])
    return PermGroup(n, [_cycle(list(range(n)), n), reflection], name=f"D{n}")


def _shifted(p, offset, degree):
    images = list(range(degree))
    for i, j in enumerate(p.array_form):
        images[offset + i] = offset + j
    return Permutation(images)


def direct_product(left, right):
    """Action on the disjoint union, left's points first."""
    n = left.degree + right.degree
    gens = [_shifted(g, 0, n) for g in left.generators]
    gens += [_shifted(g, left.degree, n) for g in right.generators]
    return PermGroup(n, gens)


def wreath_product(base, top):
    """Imprimitive wreath product; point j*deg(base)+i is point i of block j."""
    a, b = base.degree, top.degree
    n = a * b
    gens = []
    for orbit in top.orbits():
        for g in base.generators:
            gens.append(_shifted(g, orbit[0] * a, n))
    for h in top.generators:
        images = [h.array_form[j] * a + i for j in range(b) for i in range(a)]
        gens.append(Permutation(images))
    return PermGroup(n, gens)


# ---- Linear and affine groups ----

def vectors(F, d, include_zero=False):
    pts = [v for v in product(F.elements, repeat=d)]
    if not include_zero:
        pts = pts[1:]
    return pts


def matrix_permutation(F, A, points, index):
    return Permutation([index[vec_mat(F, v, A)] for v in points])


def _sl_generators(F, d):
    mats = []
    for i in range(d - 1):
        for e in range(F.k):
            mats.append(elementary(F, d, i, i + 1, F.zeta(e)))
            mats.append(elementary(F, d, i + 1, i, F.zeta(e)))
    return mats


def _gl_generators(F, d):
    mats = _sl_generators(F, d)
    if F.q > 2:
        mats.append(diagonal(F, [F.primitive] + [1] * (d - 1)))
    return mats


def general_linear(d, q):
    """GL(d,q) on the q^d - 1 nonzero row vectors."""
    F = field(q)
    points = vectors(F, d)
    index = {v: i for i, v in enumerate(points)}
    gens = [matrix_permutation(F, A, points, index) for A in _gl_generators(F, d)]
    return PermGroup(len(points), gens, name=f"GL({d},{q})")


def frobenius_permutation(F, points, index):
    return Permutation([index[tuple(F.frobenius(x) for x in v)] for v in points])


def semilinear(d, q):
    """GammaL(d,q): GL(d,q) with the coordinatewise Frobenius map adjoined."""
    F = field(q)
    points = vectors(F, d)
    index = {v: i for i, v in enumerate(points)}
    gens = [matrix_permutation(F, A, points, index) for A in _gl_generators(F, d)]
    if F.k > 1:
        gens.append(frobenius_permutation(F, points, index))
    return PermGroup(len(points), gens, name=f"GammaL({d},{q})")


def affine(d, q):
    """AGL(d,q) on all q^d vectors: GL(d,q) plus translation by e_1."""
    F = field(q)
    points = vectors(F, d, include_zero=True)
    index = {v: i for i, v in enumerate(points)}
    gens = [matrix_permutation(F, A, points, index) for A in _gl_generators(F, d)]
    e1 = tuple(1 if i == 0 else 0 for i in range(d))
    gens.append(Permutation([index[tuple(F.add(x, y) for x, y in zip(v, e1))] for v in points]))
    return PermGroup(len(points), gens, name=f"AGL({d},{q})")


# ---- Coset constructions ----

def cosets(group, subgroup_cycles):
    """Action of group on the right cosets of the subgroup generated by 1-based cycles."""
    gens = [from_cycles([list(c) for c in cycles if c], group.degree) for cycles in subgroup_cycles]
    return coset_action(group, group.subgroup(gens))


def example43_graph_subgroup():
    """C3 x A5 on 3+5 points and the graph of A4 -> C3 (kernel V), order 12."""
    group = direct_product(cyclic(3), alternating(5))
    graph = group.subgroup([
        from_cycles([[1, 2, 3], [4, 5, 6]], 8),
        from_cycles([[4, 5], [6, 7]], 8),
    ])
    return group, graph


def _diagonal(g, shift, degree):
    return _shifted(g, 0, degree) * _shifted(g, shift, degree)


def alternating_cover_witness(r, extended=False):
    """A_{r-1} x A_r (or its sign-matched overgroup in S_{r-1} x S_r) and the diagonal
    copy of A_{r-1} (or S_{r-1}) fixing the last point of the second factor."""
    if r < 5:
        raise PreconditionError("alternating cover witnesses need r >= 5")
    group = direct_product(alternating(r - 1), alternating(r))
    n, shift = group.degree, r - 1
    if not extended:
        graph = [_diagonal(g, shift, n) for g in alternating(r - 1).generators]
        return group, group.subgroup(graph)
    swap = _diagonal(_cycle([0, 1], r - 1), shift, n)
    group = PermGroup(n, list(group.generators) + [swap])
    graph = [_diagonal(g, shift, n) for g in symmetric(r - 1).generators]
    return group, group.subgroup(graph)
