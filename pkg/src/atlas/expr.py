"""
SemiPrim - Group Expressions
A small language naming groups: S(n), A(n), C(n), D(n), AGL(d,q), GL(d,q),
GammaL(d,q), direct(e,e), wreath(e,e), cosets(e; perms), atlas(name) and
group(n; perms). cosets also accepts "," after its group argument; the printer
always writes ";". Permutations are written in 1-based cycle notation.
"""

from dataclasses import dataclass

import pyparsing as pp

from src.atlas.fields import SUPPORTED_ORDERS
from src.core.errors import ArityError, ExprSyntaxError, UnsupportedFieldError
from src.core.permutation import cycle_product, from_cycles

# constructor -> argument kinds
SIGNATURES = {
    "S": ("int",),
    "A": ("int",),
    "C": ("int",),
    "D": ("int",),
    "AGL": ("int", "int"),
    "GL": ("int", "int"),
    "GammaL": ("int", "int"),
    "direct": ("expr", "expr"),
    "wreath": ("expr", "expr"),
}
MINIMUM = {"S": 1, "A": 1, "C": 1, "D": 3}


@dataclass(frozen=True)
class GroupExpr:
    kind: str
    args: tuple

    def __str__(self):
        return print_group_expr(self)


def _cycles_tuple(tokens):
    cycles = tuple(tuple(c) for c in tokens)
    return cycles if any(cycles) else ((),)


def _perms(tokens):
    return tuple(_cycles_tuple(p) for p in tokens)


def _check_points(perms, degree, loc):
    for cycles in perms:
        from_cycles([list(c) for c in cycles if c], degree, loc)


def _on_call(s, loc, toks):
    name, args = toks[0], list(toks[1])
    kinds = SIGNATURES.get(name)
    if kinds is None:
        raise ExprSyntaxError(f"unknown constructor {name!r}", loc)
    if len(args) != len(kinds):
        raise ArityError(f"{name} takes {len(kinds)} argument(s), got {len(args)}", loc)
    for kind, arg in zip(kinds, args):
        if (kind == "int") != isinstance(arg, int):
            raise ArityError(f"{name} expects {'an integer' if kind == 'int' else 'a group'} argument", loc)
    if name in MINIMUM and args[0] < MINIMUM[name]:
        raise ExprSyntaxError(f"{name}({args[0]}) needs n >= {MINIMUM[name]}", loc)
    if kinds == ("int", "int"):
        d, q = args
        if d < 1:
            raise ExprSyntaxError(f"{name} needs dimension >= 1", loc)
        if q not in SUPPORTED_ORDERS:
            raise UnsupportedFieldError(f"field order {q} not in {SUPPORTED_ORDERS}", loc)
    return GroupExpr(name, tuple(args))


def _on_group(s, loc, toks):
    degree = toks[1]
    if degree < 1:
        raise ExprSyntaxError("group degree must be positive", loc)
    perms = _perms(toks[2])
    _check_points(perms, degree, loc)
    return GroupExpr("group", (degree, perms))


def _on_cosets(s, loc, toks):
    return GroupExpr("cosets", (toks[1], _perms(toks[2])))


def _on_atlas(s, loc, toks):
    return GroupExpr("atlas", (toks[1],))


def _build_grammar():
    LP, RP, COMMA, SEMI = map(pp.Suppress, "(),;")
    integer = pp.Word(pp.nums).set_parse_action(lambda s, loc, toks: int(toks[0]))
    ident = pp.Word(pp.alphas, pp.alphanums + "_")
    expr = pp.Forward()
    perm_list = pp.Group(pp.Optional(pp.DelimitedList(cycle_product)))

    atlas_call = pp.Keyword("atlas") + LP + pp.Word(pp.alphanums) + RP
    group_call = pp.Keyword("group") + LP + integer + SEMI + perm_list + RP
    # the subgroup generators follow either ";" or ","
    cosets_call = pp.Keyword("cosets") + LP + expr + (SEMI | COMMA) + perm_list + RP
    call = ident + LP + pp.Group(pp.Optional(pp.DelimitedList(expr | integer))) + RP

    atlas_call.set_parse_action(_on_atlas)
    group_call.set_parse_action(_on_group)
    cosets_call.set_parse_action(_on_cosets)
    call.set_parse_action(_on_call)
    expr <<= atlas_call | group_call | cosets_call | call
    return expr + pp.StringEnd()


_GRAMMAR = _build_grammar()


def parse_group_expr(text):
    try:
        return _GRAMMAR.parse_string(text)[0]
    except pp.ParseException as exc:
        raise ExprSyntaxError(f"cannot parse group expression: {exc.msg}", exc.loc) from None


def _format_perm(cycles):
    return "".join("(" + " ".join(str(p) for p in c) + ")" for c in cycles)


def print_group_expr(expr):
    kind, args = expr.kind, expr.args
    if kind == "atlas":
        return f"atlas({args[0]})"
    if kind == "group":
        return f"group({args[0]};{','.join(_format_perm(p) for p in args[1])})"
    if kind == "cosets":
        return f"cosets({print_group_expr(args[0])};{','.join(_format_perm(p) for p in args[1])})"
    parts = [str(a) if isinstance(a, int) else print_group_expr(a) for a in args]
    return f"{kind}({','.join(parts)})"


def is_group_expr(text):
    """Cheap check used to tell an expression from a generator file path."""
    head = text.strip().split("(", 1)[0]
    return head in SIGNATURES or head in ("atlas", "group", "cosets")
