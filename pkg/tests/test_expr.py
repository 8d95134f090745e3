import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.atlas.expr import GroupExpr, is_group_expr, parse_group_expr, print_group_expr
from src.atlas.fields import SUPPORTED_ORDERS
from src.atlas.registry import ATLAS_NAMES
from src.core.errors import ArityError, ExprSyntaxError, UnsupportedFieldError


def test_parse_calls():
    assert parse_group_expr("S(5)") == GroupExpr("S", (5,))
    assert parse_group_expr("GL(2,4)") == GroupExpr("GL", (2, 4))
    expr = parse_group_expr("wreath(S(3),S(5))")
    assert expr.kind == "wreath"
    assert expr.args == (GroupExpr("S", (3,)), GroupExpr("S", (5,)))
    assert parse_group_expr("atlas(GL24d15)") == GroupExpr("atlas", ("GL24d15",))


@pytest.mark.parametrize(
    "text",
    [
        "direct(C(3),A(5))",
        "group(4;(1 2 3 4),(1 2))",
        "group(3;())",
        "cosets(direct(C(3),A(5));(1 2 3)(4 5 6),(4 5)(6 7))",
        "AGL(3,2)",
    ],
)
def test_canonical_text(text):
    assert print_group_expr(parse_group_expr(text)) == text
    assert str(parse_group_expr(text)) == text


def test_whitespace_is_ignored():
    assert str(parse_group_expr(" direct( C(3) , A(5) ) ")) == "direct(C(3),A(5))"


def test_syntax_errors():
    with pytest.raises(ExprSyntaxError):
        parse_group_expr("S(5")
    with pytest.raises(ExprSyntaxError):
        parse_group_expr("Foo(3)")
    with pytest.raises(ExprSyntaxError):
        parse_group_expr("D(2)")
    with pytest.raises(ExprSyntaxError):
        parse_group_expr("group(3;(1 4))")
    with pytest.raises(ExprSyntaxError) as info:
        parse_group_expr("S(5) junk")
    assert isinstance(info.value.offset, int)


def test_arity_errors():
    with pytest.raises(ArityError):
        parse_group_expr("S(1,2)")
    with pytest.raises(ArityError):
        parse_group_expr("direct(S(3))")
    with pytest.raises(ArityError):
        parse_group_expr("S(A(5))")


def test_unsupported_field():
    with pytest.raises(UnsupportedFieldError):
        parse_group_expr("GL(2,6)")


def test_cosets_accepts_either_separator():
    semi = parse_group_expr("cosets(S(4);(1 2),(3 4))")
    comma = parse_group_expr("cosets(S(4),(1 2),(3 4))")
    assert semi == comma
    assert comma.args[1] == (((1, 2),), ((3, 4),))
    assert str(comma) == "cosets(S(4);(1 2),(3 4))"
    assert parse_group_expr("cosets(direct(C(3),A(5)),(1 2 3)(4 5 6))").kind == "cosets"


def test_is_group_expr():
    assert is_group_expr("S(5)")
    assert is_group_expr("cosets(S(4);(1 2))")
    assert not is_group_expr("24A7d112")
    assert not is_group_expr("corpus/groups.gens")


def _cycles(degree):
    return st.lists(st.integers(1, degree), min_size=2, max_size=degree, unique=True).map(
        lambda pts: "(" + " ".join(map(str, pts)) + ")"
    )


def _perm_lists(degree):
    return st.lists(st.one_of(st.just("()"), _cycles(degree)), min_size=1, max_size=3).map(",".join)


_raw_groups = st.integers(2, 8).flatmap(
    lambda n: _perm_lists(n).map(lambda perms: f"group({n};{perms})")
)
_leaves = st.one_of(
    st.builds(lambda kind, n: f"{kind}({n})", st.sampled_from(["S", "A", "C"]), st.integers(1, 9)),
    st.builds(lambda n: f"D({n})", st.integers(3, 9)),
    st.builds(
        lambda kind, d, q: f"{kind}({d},{q})",
        st.sampled_from(["GL", "GammaL", "AGL"]),
        st.integers(1, 3),
        st.sampled_from(SUPPORTED_ORDERS),
    ),
    st.builds(lambda name: f"atlas({name})", st.sampled_from(ATLAS_NAMES)),
    _raw_groups,
)
_exprs = st.recursive(
    _leaves,
    lambda inner: st.one_of(
        st.builds(lambda k, a, b: f"{k}({a},{b})", st.sampled_from(["direct", "wreath"]), inner, inner),
        st.builds(lambda e, perms: f"cosets({e};{perms})", inner, _perm_lists(9)),
    ),
    max_leaves=5,
)


@settings(max_examples=200)
@given(_exprs)
def test_printed_form_reparses(text):
    expr = parse_group_expr(text)
    assert print_group_expr(expr) == text
    assert parse_group_expr(print_group_expr(expr)) == expr
