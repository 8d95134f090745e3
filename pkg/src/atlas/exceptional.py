"""
SemiPrim - Exceptional Groups
Recipes deriving the generators of the shipped exceptional groups:
3.A6 and 3.A6.2 on 18 vectors of a hyperoval in GF(4)^3, and the groups
2^4:A7, AGL(4,2) and the nonsplit 2^4.A8 acting on (vector, star) pairs, where
the eight stars are the maximal cliques of nondegenerate alternating forms
on GF(2)^4 whose pairwise sums stay nondegenerate.
"""

from functools import lru_cache
from itertools import product

from sympy.combinatorics import Permutation, PermutationGroup

from src.atlas.fields import determinant, field, vec_mat
from src.core.errors import SemiPrimError
from src.core.group import PermGroup, extend_group

# ---- 3.A6 on 18 points ----

# omega = 2, omega^2 = 3 in the GF(4) encoding
HYPEROVAL = ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (2, 3, 1), (3, 2, 1))


def hyperoval_vectors():
    """The 18 nonzero multiples of the hyperoval points; block i is points 3i..3i+2."""
    F = field(4)
    return [tuple(F.mul(F.zeta(j), x) for x in P) for P in HYPEROVAL for j in range(3)]


def greedy_generators(degree, perms):
    """Keep each permutation not already in the group generated so far."""
    perms = list(perms)
    group = PermGroup(degree, ())
    gens = []
    for p in perms:
        if not group.contains(p):
            gens.append(p)
            group = extend_group(group, [p])
    return gens


def hyperoval_stabilizer_matrices():
    F = field(4)
    points = hyperoval_vectors()
    index = {v: i for i, v in enumerate(points)}
    found = []
    for rows in product(points, repeat=3):
        if determinant(F, rows) == 0:
            continue
        images = [index.get(vec_mat(F, v, rows)) for v in points]
        if None not in images:
            found.append(Permutation(images))
    return found


@lru_cache(maxsize=None)
def three_a6():
    perms = hyperoval_stabilizer_matrices()
    return 18, greedy_generators(18, perms)


def three_a6_frobenius_permutation():
    F = field(4)
    points = hyperoval_vectors()
    index = {v: i for i, v in enumerate(points)}
    return Permutation([index[tuple(F.frobenius(x) for x in v)] for v in points])


def three_a6_extended():
    degree, gens = three_a6()
    return degree, gens + [three_a6_frobenius_permutation()]


# ---- GF(2)^4: vectors are ints 0..15, matrices are 4 row ints ----

IDENTITY4 = (1, 2, 4, 8)
TRANSVECTION = (0b0011, 2, 4, 8)
CYCLE4 = (2, 4, 8, 1)
GL42_GENERATORS = (TRANSVECTION, CYCLE4)

_PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


def vec_mat2(x, rows):
    out = 0
    j = 0
    while x:
        if x & 1:
            out ^= rows[j]
        x >>= 1
        j += 1
    return out


def mat_mul2(a, b):
    return tuple(vec_mat2(r, b) for r in a)


def _form_value(f, x, y):
    v = 0
    for bit, (k, l) in enumerate(_PAIRS):
        if f >> bit & 1:
            v ^= ((x >> k) & (y >> l) ^ (x >> l) & (y >> k)) & 1
    return v


def is_nondegenerate(f):
    b = [f >> i & 1 for i in range(6)]
    return (b[0] & b[5]) ^ (b[1] & b[4]) ^ (b[2] & b[3]) == 1


def _column(a, k):
    return sum(((a[j] >> k) & 1) << j for j in range(4))


def form_image(f, a):
    cols = [_column(a, k) for k in range(4)]
    return sum(_form_value(f, cols[k], cols[l]) << bit for bit, (k, l) in enumerate(_PAIRS))


def nondegenerate_forms():
    return [f for f in range(64) if is_nondegenerate(f)]


@lru_cache(maxsize=None)
def stars():
    """The eight maximal 7-cliques of forms, as sorted tuples in sorted order."""
    forms = nondegenerate_forms()
    nondeg = set(forms)
    adj = {f: {g for g in forms if g != f and f ^ g in nondeg} for f in forms}
    found = set()
    for f in forms:
        for g in adj[f]:
            common = adj[f] & adj[g]
            star = {f, g} | {h for h in common if adj[h] & common}
            if len(star) == 7:
                found.add(frozenset(star))
    result = sorted(tuple(sorted(s)) for s in found)
    if len(result) != 8:
        raise SemiPrimError(f"expected 8 stars of forms, found {len(result)}")
    return result


def star_permutation(a, star_list):
    index = {frozenset(s): i for i, s in enumerate(star_list)}
    return tuple(index[frozenset(form_image(f, a) for f in s)] for s in star_list)


def gl42_elements():
    """Breadth-first enumeration of GL(4,2) from its two generators.

    Returns (matrices, tree, extra_edges): tree[k] = (parent, generator index)
    and extra_edges lists the (element, generator, target) edges off the tree.
    """
    elements = [IDENTITY4]
    index = {IDENTITY4: 0}
    tree = [None]
    extra = []
    for k, a in enumerate(elements):
        for s, gen in enumerate(GL42_GENERATORS):
            b = mat_mul2(a, gen)
            j = index.get(b)
            if j is None:
                index[b] = len(elements)
                elements.append(b)
                tree.append((k, s))
            else:
                extra.append((k, s, j))
    if len(elements) != 20160:
        raise SemiPrimError(f"GL(4,2) enumeration produced {len(elements)} elements")
    return elements, tree, extra


def _pair_points(a, shift, star_perm, star_range, star_index):
    """Images of (x, i) -> (xA + shift(i), i^A) on the listed stars."""
    images = []
    for i in star_range:
        for x in range(16):
            j = star_perm[i]
            images.append(star_index[j] * 16 + (vec_mat2(x, a) ^ shift(i)))
    return images


def _translation(count):
    return Permutation([i * 16 + (x ^ 1) for i in range(count) for x in range(16)])


def _matrix_on_stars(a, star_list, star_range, cocycle=None):
    perm = star_permutation(a, star_list)
    star_index = {s: k for k, s in enumerate(star_range)}
    shift = cocycle if cocycle is not None else (lambda i: 0)
    return Permutation(_pair_points(a, shift, perm, star_range, star_index))


def affine_on_stars():
    """AGL(4,2) on the 128 pairs (vector, star); point i*16+x."""
    star_list = stars()
    gens = [_matrix_on_stars(a, star_list, range(8)) for a in GL42_GENERATORS]
    return 128, gens + [_translation(8)]


def _gl42_with_stars(star_list):
    """GL(4,2) acting on 16 vectors followed by the 8 stars."""
    perms = []
    for a in GL42_GENERATORS:
        on_stars = star_permutation(a, star_list)
        perms.append(Permutation([vec_mat2(x, a) for x in range(16)] + [16 + s for s in on_stars]))
    return perms


def star_stabilizer_matrices(star_list):
    """Generators of the stabilizer of star 0 in GL(4,2), as matrices."""
    big = PermutationGroup(_gl42_with_stars(star_list))
    stab = big.pointwise_stabilizer([16])
    return [tuple(g.array_form[1 << j] for j in range(4)) for g in stab.generators if not g.is_Identity]


def two4_a7():
    """2^4:A7 on the 112 pairs (vector, star) with star != 0; point (i-1)*16+x."""
    star_list = stars()
    gens = [_matrix_on_stars(a, star_list, range(1, 8)) for a in star_stabilizer_matrices(star_list)]
    return 112, gens + [_translation(7)]


# ---- The nonsplit extension 2^4.A8 ----

def _unknown(s, star, bit):
    # bit j of the shift of generator s on star i
    return 1 << (32 * s + 4 * star + bit)


def _lift(s, bit):
    # bit j of a translation applied after generator s, equal on every star
    return 1 << (64 + 4 * s + bit)


COCYCLE_BITS = 64


def _symbolic_vec_mat(masks, a):
    out = [0, 0, 0, 0]
    for j in range(4):
        if masks[j]:
            row = a[j]
            for k in range(4):
                if row >> k & 1:
                    out[k] ^= masks[j]
    return out


class _Solver:
    """Incremental GF(2) elimination, pivoting on the highest unknown."""

    def __init__(self):
        self.pivots = {}

    def add(self, eq):
        while eq:
            h = eq.bit_length() - 1
            p = self.pivots.get(h)
            if p is None:
                self.pivots[h] = eq
                return
            eq ^= p

    def below(self, bits):
        """Echelon rows free of every unknown at or above ``bits``."""
        return [row for h, row in sorted(self.pivots.items()) if h < bits]

    def nullspace(self, unknowns=COCYCLE_BITS):
        reduced = {}
        for h in sorted(self.pivots):
            row = self.pivots[h]
            for low, low_row in reduced.items():
                if row >> low & 1:
                    row ^= low_row
            reduced[h] = row
        basis = []
        for free in range(unknowns):
            if free in reduced:
                continue
            vec = 1 << free
            for h, row in reduced.items():
                if row >> free & 1:
                    vec |= 1 << h
            basis.append(vec)
        return basis


def _parity(mask, solution):
    return bin(mask & solution).count("1") & 1


@lru_cache(maxsize=None)
def extension_cocycles():
    """Shifts of every GL(4,2) element in the unknown generator shifts and lifts.

    Returns (elements, star_perms, shifts, basis, obstruction). ``basis`` spans
    the generator shifts for which the words of GL(4,2) agree up to a
    translation. ``obstruction`` lists linear forms in those shifts that vanish
    exactly when some choice of lifts satisfies every relation on the nose,
    i.e. when the extension splits.
    """
    star_list = stars()
    elements, tree, extra = gl42_elements()
    gen_perms = [star_permutation(a, star_list) for a in GL42_GENERATORS]
    star_perms = [tuple(range(8))]
    shifts = [[[0, 0, 0, 0] for _ in range(8)]]

    def step(k, s):
        perm = star_perms[k]
        a = GL42_GENERATORS[s]
        out = []
        for i in range(8):
            moved = _symbolic_vec_mat(shifts[k][i], a)
            target = perm[i]
            out.append([moved[j] ^ _unknown(s, target, j) ^ _lift(s, j) for j in range(4)])
        return out, tuple(gen_perms[s][perm[i]] for i in range(8))

    for k in range(1, len(elements)):
        parent, s = tree[k]
        shift, perm = step(parent, s)
        shifts.append(shift)
        star_perms.append(perm)

    consistency = set()
    exact = set()
    for k, s, j in extra:
        shift, _ = step(k, s)
        diff = [[shift[i][b] ^ shifts[j][i][b] for b in range(4)] for i in range(8)]
        for b in range(4):
            exact.add(diff[0][b])
            for i in range(1, 8):
                consistency.add(diff[i][b] ^ diff[0][b])
    solver = _Solver()
    for eq in sorted(consistency):
        solver.add(eq)
    lifts = _Solver()
    for eq in sorted(exact):
        lifts.add(eq)
    return elements, star_perms, shifts, solver.nullspace(), lifts.below(COCYCLE_BITS)


def extension_splits(obstruction, solution):
    return not any(_parity(form, solution) for form in obstruction)


def _span(rows):
    span = {0}
    for r in rows:
        span |= {v ^ r for v in span}
    return span


def abstract_involution_count(elements, star_perms, shifts, solution):
    """Involutions of the extension: 15 translations plus, for each involution A,
    2^dim ker(A+1) lifts when its squared shift lies in im(A+1), else none."""
    count = 15
    for k, a in enumerate(elements):
        if a == IDENTITY4 or mat_mul2(a, a) != IDENTITY4:
            continue
        numeric = [sum(_parity(m, solution) << b for b, m in enumerate(shifts[k][i])) for i in range(8)]
        squares = {vec_mat2(numeric[i], a) ^ numeric[star_perms[k][i]] for i in range(8)}
        if len(squares) != 1:
            raise SemiPrimError("shift of an involution squares to a non-translation")
        minus = tuple(r ^ (1 << j) for j, r in enumerate(a))
        image = _span(minus)
        kernel_dim = 4 - (len(image).bit_length() - 1)
        if squares.pop() in image:
            count += 2 ** kernel_dim
    return count


# Every involution of GL(4,2) lifts to involutions in either extension, so the
# split and nonsplit groups share this count.
EXTENSION_INVOLUTIONS = 1695


def nonsplit_solution():
    """First basis shift whose extension has no complement to the translations."""
    _, _, _, basis, obstruction = extension_cocycles()
    for solution in basis:
        if not extension_splits(obstruction, solution):
            return solution
    raise SemiPrimError("every cocycle solution gives a split extension")


def two4_a8_nonsplit():
    """2^4.A8 on 128 points: (x, i) -> (xA_s + c_s(i), i^s) with a nonsplit shift c."""
    solution = nonsplit_solution()
    star_list = stars()
    gens = []
    for s, a in enumerate(GL42_GENERATORS):
        def shift(i, s=s):
            return sum(_parity(_unknown(s, i, b), solution) << b for b in range(4))
        gens.append(_matrix_on_stars(a, star_list, range(8), shift))
    return 128, gens + [_translation(8)]
