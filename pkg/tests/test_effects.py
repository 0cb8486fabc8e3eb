from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from multiplate.effects import (
    EMPTY,
    FIRST,
    IDENTITY,
    LIST,
    MAX,
    NOTHING,
    OPTION,
    SUM,
    Applicative,
    ComposeApplicative,
    ComposeContext,
    ConstContext,
    Just,
    Monad,
    compose,
    lift_w,
    traverse_list,
)
from multiplate.store import StoreContext

SYMBOLS = ("p", "q")
SHORT_LISTS = [t for n in range(4) for t in itertools.product(SYMBOLS, repeat=n)]


def test_list_monoid_laws_exhaustive():
    # every list of length <= 3 over two symbols
    assert len(SHORT_LISTS) == 15
    for x, y, z in itertools.product(SHORT_LISTS, repeat=3):
        assert LIST.combine(LIST.combine(x, y), z) == LIST.combine(x, LIST.combine(y, z))
    for x in SHORT_LISTS:
        assert LIST.combine(LIST.identity, x) == x == LIST.combine(x, LIST.identity)


@given(st.lists(st.one_of(st.just(EMPTY), st.integers()), max_size=6))
def test_max_and_first_monoids(xs):
    values = [x for x in xs if x is not EMPTY]
    assert MAX.concat(xs) == (max(values) if values else EMPTY)
    assert FIRST.concat(xs) == (values[0] if values else EMPTY)


@given(st.lists(st.integers(), max_size=6))
def test_sum_monoid(xs):
    assert SUM.concat(xs) == sum(xs)


def options():
    return st.one_of(st.just(NOTHING), st.integers(-3, 3).map(Just))


def _half(x):
    return Just(x // 2) if x % 2 == 0 else NOTHING


def _pred(x):
    return Just(x - 1) if x > -3 else NOTHING


@given(options())
def test_option_functor_identity(m):
    assert OPTION.fmap(lambda x: x, m) == m


@given(st.integers(-3, 3))
def test_option_monad_left_identity(x):
    assert OPTION.bind(OPTION.pure(x), _half) == _half(x)


@given(options())
def test_option_monad_right_identity(m):
    assert OPTION.bind(m, OPTION.pure) == m


@given(options())
def test_option_monad_associativity(m):
    lhs = OPTION.bind(OPTION.bind(m, _half), _pred)
    rhs = OPTION.bind(m, lambda x: OPTION.bind(_half(x), _pred))
    assert lhs == rhs


@pytest.mark.parametrize("x", range(-3, 4))
def test_kleisli_runs_right_operand_first(x):
    composed = OPTION.kleisli(_pred, _half)
    expected = NOTHING if _half(x) is NOTHING else _pred(_half(x).value)
    assert composed(x) == expected


def test_option_ap_truth_table():
    f = Just(lambda x: x + 1)
    assert OPTION.ap(f, Just(1)) == Just(2)
    assert OPTION.ap(f, NOTHING) is NOTHING
    assert OPTION.ap(NOTHING, Just(1)) is NOTHING
    assert OPTION.ap(NOTHING, NOTHING) is NOTHING


APPLICATIVES = [IDENTITY, OPTION, ConstContext(LIST), ConstContext(SUM)]


def _sample(ctx):
    if ctx is IDENTITY:
        return [0, 1, 2]
    if ctx is OPTION:
        return [NOTHING, Just(0), Just(2)]
    if ctx.monoid is LIST:
        return [(), ("p",), ("p", "q")]
    return [0, 1, 5]


def _functions(ctx):
    fs = [lambda x: x + 1, lambda x: x * 3]
    if ctx is IDENTITY:
        return fs
    if ctx is OPTION:
        return [NOTHING] + [Just(f) for f in fs]
    return _sample(ctx)


@pytest.mark.parametrize("ctx", APPLICATIVES, ids=repr)
def test_applicative_laws(ctx):
    eq = ctx.eq
    for v in _sample(ctx):
        assert eq(ctx.ap(ctx.pure(lambda x: x), v), v)
    for f in (lambda x: x + 1, abs):
        for x in (0, -2):
            assert eq(ctx.ap(ctx.pure(f), ctx.pure(x)), ctx.pure(f(x)))
    for u in _functions(ctx):
        for y in (0, 4):
            assert eq(ctx.ap(u, ctx.pure(y)), ctx.ap(ctx.pure(lambda g: g(y)), u))
    dot = lambda g: lambda h: lambda x: g(h(x))
    for u, v, w in itertools.product(_functions(ctx), _functions(ctx), _sample(ctx)):
        lhs = ctx.ap(ctx.ap(ctx.ap(ctx.pure(dot), u), v), w)
        assert eq(lhs, ctx.ap(u, ctx.ap(v, w)))


@pytest.mark.parametrize("ctx", APPLICATIVES, ids=repr)
def test_traverse_list_identity_and_order(ctx):
    assert ctx.eq(traverse_list(ctx, ctx.pure, [1, 2, 3]), ctx.pure((1, 2, 3)))


def test_traverse_list_is_left_to_right():
    log = ConstContext(LIST)
    assert traverse_list(log, lambda x: (x,), ["a", "b", "c"]) == ("a", "b", "c")
    assert traverse_list(OPTION, _half, [0, 2, 4]) == Just((0, 1, 2))
    assert traverse_list(OPTION, _half, [0, 1, 4]) is NOTHING
    assert traverse_list(IDENTITY, lambda x: x, []) == ()


def test_compose_keeps_applicative_capability():
    assert isinstance(compose(IDENTITY, OPTION), ComposeApplicative)
    mixed = compose(StoreContext(("b0",)), IDENTITY)
    assert isinstance(mixed, ComposeContext)
    assert not isinstance(mixed, Applicative)


@given(st.lists(st.sampled_from(SYMBOLS), max_size=3), st.lists(st.sampled_from(SYMBOLS), max_size=3))
def test_identity_composed_with_const_behaves_as_const(x, y):
    k = ConstContext(LIST)
    ck = compose(IDENTITY, k)
    x, y = tuple(x), tuple(y)
    assert ck.pure(1) == k.pure(1)
    assert ck.ap(x, y) == k.ap(x, y)
    assert ck.fmap(str, x) == k.fmap(str, x)


def test_compose_option_option_nests():
    oo = compose(OPTION, OPTION)
    assert oo.pure(1) == Just(Just(1))
    assert oo.ap(Just(Just(lambda x: x + 1)), Just(NOTHING)) == Just(NOTHING)
    assert oo.ap(NOTHING, Just(Just(1))) is NOTHING


def test_identity_comonad_and_lift_w():
    assert IDENTITY.extract(IDENTITY.duplicate(3)) == 3
    assert lift_w(IDENTITY, lambda x: x * 2, 4) == 8


def test_capabilities():
    assert isinstance(OPTION, Monad)
    assert not isinstance(ConstContext(SUM), Monad)
    assert ConstContext(LIST) == ConstContext(LIST)
    assert ConstContext(LIST) != ConstContext(SUM)
