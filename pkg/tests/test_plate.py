from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Any, Callable

import pytest

from multiplate.effects import IDENTITY, LIST, MAX, NOTHING, OPTION, SUM, ConstContext, Just
from multiplate.minilang import EAdd, EInt, EVar, MiniPlate, SAss, SBlock, SReturn, V
from multiplate.minilang.enumerate import universe
from multiplate.minilang.fixtures import P0
from multiplate.plate import (
    Multiplate,
    Projector,
    append_plate,
    check_multiplate_laws,
    compose_plate,
    generic_plate_pool,
    id_plate,
    kleisli_compose_plate,
    map_family,
    map_family_m,
    map_plate,
    postorder_fold,
    preorder_fold,
    pure_plate,
)
from multiplate.suites import DroppingPlate, minilang_plate_pool

# -- a one-sort family: binary trees with integer leaves ----------------------


@dataclass(frozen=True)
class Leaf:
    n: int


@dataclass(frozen=True)
class Node:
    left: Any
    right: Any


@dataclass(frozen=True)
class TreePlate(Multiplate):
    tree: Callable[[Any], Any]

    @classmethod
    def mk_plate(cls, build):
        return cls(tree=build(Projector("tree")))

    def multiplate(self, ctx):
        def tree(t):
            if isinstance(t, Node):
                return ctx.lift2(Node, self.tree(t.left), self.tree(t.right))
            return ctx.pure(t)

        return TreePlate(tree=tree)


def trees(depth):
    if depth == 0:
        return [Leaf(0), Leaf(1)]
    smaller = trees(depth - 1)
    return smaller + [Node(l, r) for l in smaller for r in smaller if Node(l, r) not in smaller]


def test_tree_plate_satisfies_the_laws():
    ts = trees(2)
    assert check_multiplate_laws(TreePlate, {"tree": ts})


def test_tree_plate_rewrites_bottom_up():
    incr = map_family(TreePlate(tree=lambda t: Leaf(t.n + 1) if isinstance(t, Leaf) else t))
    assert incr.tree(Node(Leaf(0), Node(Leaf(1), Leaf(2)))) == Node(Leaf(1), Node(Leaf(2), Leaf(3)))
    total = preorder_fold(TreePlate(tree=lambda t: t.n if isinstance(t, Leaf) else 0), ConstContext(SUM))
    assert total.tree(Node(Leaf(4), Node(Leaf(1), Leaf(2)))) == 7


def test_projectors_follow_field_order():
    assert [p.name for p in MiniPlate.projectors()] == ["stm", "expr", "var", "typ"]
    assert Projector("var")(id_plate(MiniPlate))(V("x")) == V("x")


def _strip(v):
    return Just(V(v.name[1:])) if v.name.startswith("__") else NOTHING


def _tag(v):
    return Just(V("_" + v.name)) if len(v.name) < 3 else NOTHING


@pytest.mark.parametrize(
    "name,expected",
    [
        ("_x", Just(V("_x"))),  # both succeed
        ("x", NOTHING),  # the second step fails
        ("abc", NOTHING),  # the first step fails
    ],
)
def test_kleisli_plate_truth_table(name, expected):
    p1 = replace(pure_plate(MiniPlate, OPTION), var=_strip)
    p2 = replace(pure_plate(MiniPlate, OPTION), var=_tag)
    assert kleisli_compose_plate(p1, p2, OPTION).var(V(name)) == expected


def test_compose_plate_lives_at_the_composite_context():
    p1 = replace(pure_plate(MiniPlate, OPTION), var=_tag)
    p2 = replace(pure_plate(MiniPlate, ConstContext(LIST)), var=lambda v: (v.name,))
    both = compose_plate(p1, p2, ConstContext(LIST))
    assert both.var(V("x")) == ("x",)
    swapped = compose_plate(p2, p1, OPTION)
    assert swapped.var(V("x")) == Just(("_x",))


def test_map_plate_changes_every_field():
    counted = map_plate(len, pure_plate(MiniPlate, ConstContext(LIST)))
    assert counted.stm(SReturn(EInt(0))) == 0


def test_append_plate_order():
    log = ConstContext(LIST)
    left = MiniPlate.mk_plate(lambda proj: lambda a: ("L",))
    right = MiniPlate.mk_plate(lambda proj: lambda a: ("R",))
    assert append_plate(left, right, log).expr(EInt(0)) == ("L", "R")


def test_pre_and_postorder_folds_differ_on_order():
    log = ConstContext(LIST)
    names = MiniPlate.mk_plate(lambda proj: lambda a: (type(a).__name__,))
    term = SAss(V("x"), EAdd(EInt(1), EVar(V("y"))))
    assert preorder_fold(names, log).stm(term) == ("SAss", "V", "EAdd", "EInt", "EVar", "V")
    assert postorder_fold(names, log).stm(term) == ("V", "EInt", "V", "EVar", "EAdd", "SAss")


def test_fold_at_max_monoid():
    biggest = preorder_fold(
        replace(MiniPlate.mk_plate(lambda proj: lambda a: MAX.identity), expr=lambda e: e.value if isinstance(e, EInt) else MAX.identity),
        ConstContext(MAX),
    )
    assert biggest.stm(SBlock((SReturn(EInt(3)), SReturn(EAdd(EInt(7), EInt(2)))))) == 7
    assert biggest.stm(SBlock(())) is MAX.identity


def test_map_family_m_short_circuits():
    fail_y = replace(pure_plate(MiniPlate, OPTION), var=lambda v: NOTHING if v.name == "y" else Just(V(v.name * 2)))
    rewrite = map_family_m(fail_y, OPTION)
    assert rewrite.stm(P0) == Just(replace_vars(P0, "xx"))
    assert rewrite.expr(EAdd(EVar(V("x")), EVar(V("y")))) is NOTHING


def replace_vars(term, name):
    rename = map_family(replace(id_plate(MiniPlate), var=lambda v: V(name)))
    return rename.apply(term)


def test_map_family_on_deep_block():
    deep = SReturn(EInt(0))
    for _ in range(200):
        deep = SBlock((deep,))
    assert map_family(id_plate(MiniPlate)).stm(deep) == deep


def test_multiplate_laws_hold_on_small_universe():
    u = universe(4)
    assert check_multiplate_laws(MiniPlate, u, minilang_plate_pool())


def test_generic_pool():
    assert [repr(p) for p in generic_plate_pool(MiniPlate)] == ["pure@Id", "visit-log@Const(list)", "pure@Option"]


def test_dropping_plate_is_caught_with_a_witness():
    v = check_multiplate_laws(DroppingPlate, universe(3))
    assert not v
    assert v.law == "identity"
    assert v.witness == ("stm", SBlock((SBlock(()),)))


def test_identity_plate_is_preserved_by_multiplate():
    lifted = id_plate(MiniPlate).multiplate(IDENTITY)
    for t in universe(4)["stm"]:
        assert lifted.stm(t) == t


def test_two_renaming_plates_compose_at_identity():
    rename = replace(id_plate(MiniPlate), var=lambda v: V("_" + v.name))
    twice = compose_plate(rename, rename, IDENTITY)
    assert twice.var(V("x")) == V("__x")
    assert map_family(twice).apply(P0) == map_family(rename).apply(map_family(rename).apply(P0))
