"""
SemiPrim - Alternating Block Actions
Semiprimitive groups G with a minimal normal antiplinth M whose block action
G^Delta contains A_Delta. Builds the cover context (M, H = C_G(M), H', the
M-orbits Delta and the H'-orbits Sigma), decides the four-way split on M and
H', and matches the outcome against the infinite families and the seven
exceptional groups.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from sympy.combinatorics import Permutation

from src.actions.blocks import block_system, orbit_block_system
from src.actions.taxonomy import antiplinths, is_innately_transitive, is_quasiprimitive, is_semiprimitive
from src.core.exact import from_text, to_text
from src.core.errors import ClassificationError, PreconditionError, TrilemmaInapplicable
from src.core.group import PermGroup
from src.core.permutation import compose
from src.structure.lattice import (
    centralizer_of_normal,
    derived_subgroup,
    has_complement,
    is_elementary_abelian,
    normal_lattice,
    shape_of_minimal_normal,
)

TRIVIAL = "trivial"
ALTERNATING = "A_r"
SYMMETRIC = "S_r"
OTHER = "other"

OMEGA = 0


@dataclass(frozen=True)
class VerifiedClaim:
    name: str
    lhs: object
    rhs: object

    @property
    def holds(self):
        return self.lhs == self.rhs

    def to_dict(self):
        return {"name": self.name, "lhs": to_text(self.lhs), "rhs": to_text(self.rhs)}

    @classmethod
    def from_dict(cls, data):
        return cls(data["name"], from_text(data["lhs"]), from_text(data["rhs"]))


def _require(claims, what):
    failed = [c for c in claims if not c.holds]
    if failed:
        details = "; ".join(f"{c.name}: {c.lhs} != {c.rhs}" for c in failed)
        raise ClassificationError(f"{what}: {details}")


def _quotient(a, b):
    return a // b if a % b == 0 else Fraction(a, b)


def _commute(left, right):
    return all(compose(a, b) == compose(b, a) for a in left.generators for b in right.generators)


# ---- Table rows ----

@dataclass(frozen=True)
class TableRow:
    key: str
    normal: str
    g_delta: str
    h_delta: str
    notes: str
    innately_transitive: bool
    printed_case: str


INFINITE_FAMILIES = (
    TableRow("family-1a", "C_p^d", "A_r or S_r", "1", "d >= r-2", False, "1a"),
    TableRow("family-1b", "T^d", "A_r or S_r", "1", "d >= r", False, "1b"),
    TableRow("family-2b", "A_{r-1}", "A_r or S_r", "G^Delta", "", True, "2b"),
    TableRow("family-3b", "A_{r-1}", "S_r", "A_r", "", True, "3b"),
    TableRow("family-T", "T", "A_r or S_r", "G^Delta", "A_{r-1} <~ T", False, "3c"),
    TableRow("family-T2", "T^2", "S_r", "A_r", "A_{r-1} <~ T", False, "3c"),
)

EXCEPTIONAL_GROUPS = (
    TableRow("24A7d112", "C2^4", "A7", "1", "d = r-3", False, "1a"),
    TableRow("AGL42d128", "C2^4", "A8", "1", "d = r-4, split", False, "1a"),
    TableRow("24A8nsd128", "C2^4", "A8", "1", "d = r-4, nonsplit", False, "1a"),
    TableRow("3A6d18", "C3", "A6", "A6", "H transitive", False, "2a"),
    TableRow("3A6x2d18", "C3", "S6", "A6", "H transitive", False, "3a"),
    TableRow("GL24d15", "C3", "A5", "A5", "H transitive", True, "2b"),
    TableRow("GammaL24d15", "C3", "S5", "A5", "H transitive", True, "3b"),
)

ROWS = {row.key: row for row in INFINITE_FAMILIES + EXCEPTIONAL_GROUPS}


# ---- Context ----

def image_label(order, r):
    if order == 1:
        return TRIVIAL
    if order == factorial(r) // 2:
        return ALTERNATING
    if order == factorial(r):
        return SYMMETRIC
    return OTHER


def _label_name(label, r):
    return {TRIVIAL: "1", ALTERNATING: f"A{r}", SYMMETRIC: f"S{r}"}.get(label, "other")


def block_image(system, subgroup):
    """Permutations induced on the blocks by the generators of a subgroup."""
    perms = [
        Permutation([system.block_of[g.array_form[block[0]]] for block in system.blocks])
        for g in subgroup.generators
    ]
    return PermGroup(system.block_count, perms)


def block_setwise_stabilizer(subgroup, system, point):
    """Setwise stabilizer in subgroup of the block of system containing point."""
    return block_system(subgroup, system.blocks).block_stabilizer(system.block_of[point])


@dataclass(frozen=True)
class CoverContext:
    group: PermGroup = field(repr=False)
    normal: PermGroup = field(repr=False)
    centralizer: PermGroup = field(repr=False)
    derived: PermGroup = field(repr=False)
    delta: object = field(repr=False)
    sigma: object = field(repr=False)
    g_delta: PermGroup = field(repr=False)
    h_delta: PermGroup = field(repr=False)
    r: int
    m: int
    shape: object
    g_delta_label: str
    h_delta_label: str
    claims: tuple = ()

    @property
    def d(self):
        return self.shape.d


def _minimal_antiplinths(group):
    minimal = normal_lattice(group).minimal()
    return [a for a in antiplinths(group) if any(a.equals(x) for x in minimal)]


def _alternating_action(group, normal):
    system = orbit_block_system(group, normal)
    r = system.block_count
    return r >= 5 and image_label(system.induced_image.order(), r) in (ALTERNATING, SYMMETRIC)


def cover_context(group, normal=None):
    if not is_semiprimitive(group):
        raise PreconditionError("group is not semiprimitive", ["G semiprimitive"])
    candidates = _minimal_antiplinths(group)
    if normal is None:
        usable = [m for m in candidates if _alternating_action(group, m)]
        if not usable:
            raise PreconditionError(
                "no minimal normal antiplinth with r >= 5 and G^Delta containing A_Delta",
                ["minimal normal antiplinth M", "r >= 5", "G^Delta contains A_Delta"],
            )
        normal = usable[0]
    else:
        violations = []
        if not any(normal.equals(m) for m in candidates):
            violations.append("minimal normal antiplinth M")
        elif not _alternating_action(group, normal):
            violations.append("r >= 5 and G^Delta contains A_Delta")
        if violations:
            raise PreconditionError("; ".join(violations), violations)

    delta = orbit_block_system(group, normal)
    r, m = delta.block_count, normal.order()
    centralizer = centralizer_of_normal(group, normal)
    derived = derived_subgroup(centralizer)
    sigma = block_system(group, derived.orbits())
    g_delta = delta.induced_image
    h_delta = block_image(delta, centralizer)
    meets = normal.is_subgroup_of(derived) or normal.join(derived).order() == m * derived.order()
    claims = (
        VerifiedClaim("kernel of the Delta action has order |M|", delta.kernel.order(), m),
        VerifiedClaim("n = m r", group.degree, m * r),
        VerifiedClaim("M <= H' or M meets H' trivially", meets, True),
        VerifiedClaim("G^Delta quasiprimitive", is_quasiprimitive(g_delta), True),
    )
    _require(claims, "cover context")
    return CoverContext(
        group=group,
        normal=normal,
        centralizer=centralizer,
        derived=derived,
        delta=delta,
        sigma=sigma,
        g_delta=g_delta,
        h_delta=h_delta,
        r=r,
        m=m,
        shape=shape_of_minimal_normal(normal, group),
        g_delta_label=image_label(g_delta.order(), r),
        h_delta_label=image_label(h_delta.order(), r),
        claims=claims,
    )


# ---- Lemmas ----

def subcartesian_verify(M, H, omega):
    """Claims about the commuting product MH on the intersection of an M-orbit and an H-orbit."""
    violations = []
    if M.is_trivial() or H.is_trivial():
        violations.append("M and H nontrivial")
    product = M.join(H)
    if not product.is_transitive():
        violations.append("<M, H> transitive")
    if not _commute(M, H):
        violations.append("[M, H] = 1")
    elif product.order() != M.order() * H.order():
        violations.append("M meets H trivially")
    if violations:
        raise PreconditionError("; ".join(violations), violations)

    by_h = block_system(product, H.orbits())
    by_m = block_system(product, M.orbits())
    cells = [sorted(set(a) & set(b)) for a in M.orbits() for b in H.orbits()]
    meet = block_system(product, [c for c in cells if c])
    common = set(meet.blocks[meet.block_of[omega]])

    m_sigma = block_setwise_stabilizer(M, by_h, omega)
    h_delta = block_setwise_stabilizer(H, by_m, omega)
    cell_stab = meet.block_stabilizer(meet.block_of[omega])
    point_stab = product.pointwise_stabilizer([omega]).order()
    return [
        VerifiedClaim("|(MH)_{delta cap sigma}| = |M_sigma| |H_delta|",
                      cell_stab.order(), m_sigma.order() * h_delta.order()),
        VerifiedClaim("M_sigma H_delta inside (MH)_{delta cap sigma}",
                      m_sigma.join(h_delta).is_subgroup_of(cell_stab), True),
        VerifiedClaim("M_sigma transitive on delta cap sigma", set(m_sigma.orbit(omega).points) == common, True),
        VerifiedClaim("H_delta transitive on delta cap sigma", set(h_delta.orbit(omega).points) == common, True),
        VerifiedClaim("|M_sigma| = |(MH)_omega| / |H_omega|",
                      m_sigma.order(), _quotient(point_stab, H.pointwise_stabilizer([omega]).order())),
        VerifiedClaim("|H_delta| = |(MH)_omega| / |M_omega|",
                      h_delta.order(), _quotient(point_stab, M.pointwise_stabilizer([omega]).order())),
    ]


def monolithic_check(group):
    """Exactly one minimal normal subgroup."""
    return len(normal_lattice(group).minimal()) == 1


def trilemma_case(ctx):
    """(case, claims): case 1 or 2 when M <= H', case 3 or 4 when M meets H' trivially."""
    M, H, derived = ctx.normal, ctx.centralizer, ctx.derived
    if H.is_subgroup_of(M):
        raise TrilemmaInapplicable("trilemma inapplicable: C_G(M) lies in M so MH = M", ["MH > M"])
    transitive = derived.is_transitive()
    claims = []
    if M.is_subgroup_of(derived):
        claims.append(VerifiedClaim("M central in H", _commute(M, H), True))
        if transitive:
            case = 1
        else:
            case = 2
            claims.append(VerifiedClaim("H^Delta elementary abelian", is_elementary_abelian(ctx.h_delta), True))
    else:
        claims.append(VerifiedClaim("|M H'| = |M| |H'|", M.join(derived).order(), M.order() * derived.order()))
        derived_delta = block_setwise_stabilizer(derived, ctx.delta, OMEGA)
        if transitive:
            case = 3
            derived_omega = derived.pointwise_stabilizer([OMEGA])
            claims.append(VerifiedClaim("|M| = |H'_delta| / |H'_omega|",
                                        M.order(), _quotient(derived_delta.order(), derived_omega.order())))
            claims.extend(subcartesian_verify(M, derived, OMEGA))
        else:
            case = 4
            m_sigma = block_setwise_stabilizer(M, ctx.sigma, OMEGA)
            claims.append(VerifiedClaim("|M_sigma| = |H'_delta|", m_sigma.order(), derived_delta.order()))
            if not ctx.shape.is_abelian and monolithic_check(derived_delta):
                claims.append(VerifiedClaim("|H'_delta| divides |T|",
                                            ctx.shape.factor_order % derived_delta.order(), 0))
    _require(claims, f"trilemma case {case}")
    return case, tuple(claims)


# ---- Outcomes ----

@dataclass(frozen=True)
class ClassificationOutcome:
    theorem_case: str
    table_row: TableRow
    verified_claims: tuple
    trilemma: int = None
    antiplinth_order: int = 0
    blocks: int = 0
    g_delta: str = ""
    h_delta: str = ""

    @property
    def row_key(self):
        return self.table_row.key if self.table_row is not None else None

    def to_dict(self):
        return {
            "theorem_case": self.theorem_case,
            "table_row": self.row_key,
            "verified_claims": [c.to_dict() for c in self.verified_claims],
            "trilemma": self.trilemma,
            "antiplinth_order": self.antiplinth_order,
            "blocks": self.blocks,
            "g_delta": self.g_delta,
            "h_delta": self.h_delta,
        }

    @classmethod
    def from_dict(cls, data):
        key = data["table_row"]
        return cls(
            theorem_case=data["theorem_case"],
            table_row=ROWS[key] if key is not None else None,
            verified_claims=tuple(VerifiedClaim.from_dict(c) for c in data["verified_claims"]),
            trilemma=data["trilemma"],
            antiplinth_order=data["antiplinth_order"],
            blocks=data["blocks"],
            g_delta=data["g_delta"],
            h_delta=data["h_delta"],
        )


def _is_c3(shape):
    return shape.is_abelian and (shape.p, shape.d) == (3, 1)


def _is_point_stabilizer_alternating(shape, r):
    return not shape.is_abelian and shape.d == 1 and shape.alternating_degree == r - 1


def _contains_point_stabilizer_order(ctx, claims):
    claims.append(VerifiedClaim("|A_{r-1}| divides |T|", ctx.shape.factor_order % (factorial(ctx.r - 1) // 2), 0))


def _match_trivial(ctx, claims):
    shape, r = ctx.shape, ctx.r
    if shape.is_abelian:
        if (shape.p, shape.d) == (2, 4) and ctx.g_delta_label == ALTERNATING and r in (7, 8):
            if r == 7:
                return "1a", ROWS["24A7d112"]
            if has_complement(ctx.group, ctx.normal):
                claims.append(VerifiedClaim("M has a complement", 1, 1))
                return "1a", ROWS["AGL42d128"]
            claims.append(VerifiedClaim("M has a complement", 0, 0))
            return "1a", ROWS["24A8nsd128"]
        if shape.d >= r - 2:
            return "1a", ROWS["family-1a"]
    elif shape.d >= r:
        return "1b", ROWS["family-1b"]
    raise ClassificationError(f"H^Delta = 1 but M = {shape.describe()} is too small for r = {r}")


def _match_equal(ctx, case, claims):
    shape, r = ctx.shape, ctx.r
    if case == 1 and _is_c3(shape) and r == 6 and ctx.g_delta_label == ALTERNATING:
        return "2a", ROWS["3A6d18"]
    if case == 3:
        if _is_c3(shape) and r == 5 and ctx.g_delta_label == ALTERNATING:
            return "2b", ROWS["GL24d15"]
        if _is_point_stabilizer_alternating(shape, r):
            return "2b", ROWS["family-2b"]
    if case == 4 and not shape.is_abelian and shape.d == 1:
        _contains_point_stabilizer_order(ctx, claims)
        return "2c", ROWS["family-T"]
    raise ClassificationError(
        f"H^Delta = G^Delta with M = {shape.describe()}, r = {r} and trilemma case {case} matches no row"
    )


def _match_index_two(ctx, case, claims):
    shape, r = ctx.shape, ctx.r
    if case == 1 and _is_c3(shape) and r == 6:
        return "3a", ROWS["3A6x2d18"]
    if case == 3:
        if _is_c3(shape) and r == 5:
            return "3b", ROWS["GammaL24d15"]
        if _is_point_stabilizer_alternating(shape, r):
            return "3b", ROWS["family-3b"]
    if case == 4 and not shape.is_abelian and shape.d in (1, 2):
        _contains_point_stabilizer_order(ctx, claims)
        return "3c", ROWS["family-T2"] if shape.d == 2 else None
    raise ClassificationError(
        f"H^Delta = A_r < G^Delta = S_r with M = {shape.describe()}, r = {r} and trilemma case {case} matches no row"
    )


def ansn_cover_classify(group, normal=None):
    ctx = cover_context(group, normal)
    claims = list(ctx.claims)
    g_label, h_label = ctx.g_delta_label, ctx.h_delta_label
    case = None
    if h_label == TRIVIAL:
        theorem_case, row = _match_trivial(ctx, claims)
    else:
        case, more = trilemma_case(ctx)
        claims.extend(more)
        if h_label == g_label:
            theorem_case, row = _match_equal(ctx, case, claims)
        elif (h_label, g_label) == (ALTERNATING, SYMMETRIC):
            theorem_case, row = _match_index_two(ctx, case, claims)
        else:
            raise ClassificationError(f"unexpected (H^Delta, G^Delta) = ({h_label}, {g_label})")
    if row is not None:
        claims.append(VerifiedClaim("innately transitive", is_innately_transitive(group), row.innately_transitive))
        if row in EXCEPTIONAL_GROUPS:
            triple = (ctx.shape.describe(), _label_name(g_label, ctx.r), _label_name(h_label, ctx.r))
            expected = (row.normal, row.g_delta, row.h_delta)
            claims.append(VerifiedClaim("(M, G^Delta, H^Delta)", ", ".join(triple), ", ".join(expected)))
    _require(claims, "classification")
    return ClassificationOutcome(
        theorem_case=theorem_case,
        table_row=row,
        verified_claims=tuple(claims),
        trilemma=case,
        antiplinth_order=ctx.m,
        blocks=ctx.r,
        g_delta=_label_name(g_label, ctx.r),
        h_delta=_label_name(h_label, ctx.r),
    )
