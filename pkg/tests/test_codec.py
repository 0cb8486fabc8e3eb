from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from multiplate.minilang import (
    EAdd,
    EInt,
    EStm,
    EVar,
    SAss,
    SBlock,
    SDecl,
    SReturn,
    TFloat,
    TInt,
    V,
    DecodeError,
    decode_ast,
    encode_ast,
    infer_sort,
    parse_sexpr,
    print_sexpr,
    sort_of,
)
from multiplate.minilang.ast import INT64_MAX, INT64_MIN, wrap_int64
from multiplate.minilang.enumerate import terms, universe
from multiplate.minilang.fixtures import P0, P0_TEXT
from multiplate.minilang.oracles import count_nodes

names = st.text(st.characters(blacklist_categories=("Cs",)), max_size=5)
ints = st.integers(INT64_MIN, INT64_MAX)
variables = names.map(V)
types = st.sampled_from([TInt(), TFloat()])


def _stm(expr):
    return st.one_of(
        st.builds(SDecl, types, variables),
        st.builds(SAss, variables, expr),
        st.builds(SReturn, expr),
    )


exprs = st.recursive(
    st.one_of(st.builds(EInt, ints), st.builds(EVar, variables)),
    lambda inner: st.one_of(
        st.builds(EAdd, inner, inner),
        st.builds(EStm, _stm(inner)),
        st.builds(EStm, st.lists(_stm(inner), max_size=3).map(lambda ss: SBlock(tuple(ss)))),
    ),
    max_leaves=12,
)
stms = st.one_of(_stm(exprs), st.lists(_stm(exprs), max_size=4).map(lambda ss: SBlock(tuple(ss))))


@given(st.one_of(stms, exprs, variables, types))
def test_codec_round_trip(term):
    text = print_sexpr(encode_ast(term))
    sexpr = parse_sexpr(text)
    assert infer_sort(sexpr) == sort_of(term)
    assert decode_ast(sexpr, sort_of(term)) == term


def test_p0_text():
    assert decode_ast(parse_sexpr(P0_TEXT), "stm") == P0
    assert print_sexpr(encode_ast(P0)) == P0_TEXT


def test_nullary_constructors_accept_both_spellings():
    assert decode_ast(parse_sexpr("TInt"), "typ") == TInt()
    assert decode_ast(parse_sexpr("(TFloat)"), "typ") == TFloat()
    assert print_sexpr(encode_ast(SDecl(TFloat(), V("y")))) == '(SDecl TFloat (V "y"))'
    assert print_sexpr(encode_ast(SBlock(()))) == "(SBlock)"


@pytest.mark.parametrize(
    "text,sort,message,path",
    [
        ("(EInt 1)", "stm", "expected a term of sort stm, found expr constructor EInt", "stm"),
        ("(Foo 1)", "expr", "unknown constructor Foo", "expr"),
        ("(SBlock (SReturn (EInt 1)) (SAss (V \"x\") TInt))", "stm",
         "expected a term of sort expr, found typ constructor TInt", "stm/SBlock[2]/SAss[2]"),
        ("(EAdd (EInt 1))", "expr", "EAdd takes 2 argument(s), got 1", "expr/EAdd"),
        ("(EInt x)", "expr", "EInt expects an integer, found symbol x", "expr/EInt[1]"),
        ("(EInt 9223372036854775808)", "expr", "integer 9223372036854775808 outside the signed 64-bit range", "expr/EInt[1]"),
        ("(V x)", "var", "V expects a string, found symbol x", "var/V[1]"),
        ("(V 3)", "var", "V expects a string, found integer 3", "var/V[1]"),
        ("()", "stm", "expected a term of sort stm, found empty list", "stm"),
        ('"s"', "expr", "expected a term of sort expr, found string 's'", "expr"),
        ("((EInt 1))", "expr", "expected a term of sort expr, found list without constructor head", "expr"),
    ],
)
def test_decode_errors_report_node_paths(text, sort, message, path):
    with pytest.raises(DecodeError) as info:
        decode_ast(parse_sexpr(text), sort)
    assert info.value.message == message
    assert info.value.path == path


def test_int64_boundaries():
    assert decode_ast(parse_sexpr(f"(EInt {INT64_MIN})"), "expr") == EInt(INT64_MIN)
    assert decode_ast(parse_sexpr(f"(EInt {INT64_MAX})"), "expr") == EInt(INT64_MAX)
    assert wrap_int64(INT64_MAX + 1) == INT64_MIN
    assert wrap_int64(INT64_MIN - 1) == INT64_MAX


def test_infer_sort_errors():
    with pytest.raises(DecodeError):
        infer_sort(parse_sexpr("(Nope)"))
    with pytest.raises(DecodeError):
        infer_sort(parse_sexpr("42"))
    with pytest.raises(ValueError):
        decode_ast(parse_sexpr("TInt"), "sort")


def test_encode_rejects_non_terms():
    with pytest.raises(TypeError):
        encode_ast(42)


def test_enumeration_counts_and_sizes():
    counts = {sort: len(ts) for sort, ts in universe(5).items()}
    assert counts == {"stm": 179, "expr": 111, "var": 2, "typ": 2}
    assert terms("expr", 1) == [EInt(0), EInt(1)]
    for sort, ts in universe(4).items():
        assert len(set(ts)) == len(ts)
        assert all(sort_of(t) == sort and count_nodes(t) <= 4 for t in ts)
