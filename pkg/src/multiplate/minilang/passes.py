"""Rewrites and analyses over the mini language."""

from __future__ import annotations

from dataclasses import replace
from typing import Any, Callable

from ..effects import IDENTITY, LIST, SUM, ConstContext, Functor
from ..plate import map_family, preorder_fold, pure_plate
from .ast import (
    EAdd,
    EInt,
    EStm,
    EVar,
    SAss,
    SBlock,
    SDecl,
    SReturn,
    V,
    sort_of,
    wrap_int64,
)
from .plate import MiniPlate

# -- hand-written rename, one function per sort ------------------------------


def rename_stm(s):
    if isinstance(s, SDecl):
        return SDecl(s.typ, rename_var(s.var))
    if isinstance(s, SAss):
        return SAss(rename_var(s.var), rename_expr(s.expr))
    if isinstance(s, SBlock):
        return SBlock(tuple(map(rename_stm, s.stms)))
    if isinstance(s, SReturn):
        return SReturn(rename_expr(s.expr))
    raise TypeError(s)


def rename_expr(e):
    if isinstance(e, EStm):
        return EStm(rename_stm(e.stm))
    if isinstance(e, EAdd):
        return EAdd(rename_expr(e.left), rename_expr(e.right))
    if isinstance(e, EVar):
        return EVar(rename_var(e.var))
    if isinstance(e, EInt):
        return EInt(e.value)
    raise TypeError(e)


def rename_var(v):
    return V("_" + v.name)


def naive_rename(term: Any) -> Any:
    sort = sort_of(term)
    if sort == "stm":
        return rename_stm(term)
    if sort == "expr":
        return rename_expr(term)
    if sort == "var":
        return rename_var(term)
    return term


# -- the same passes through the generic machinery ---------------------------


def _prefix_underscore(v: V) -> V:
    return IDENTITY.pure(V("_" + v.name))


RENAME = map_family(replace(pure_plate(MiniPlate, IDENTITY), var=_prefix_underscore))


def rename_pass(term: Any) -> Any:
    return RENAME.apply(term)


def fold_add(e: Any) -> Any:
    if isinstance(e, EAdd) and isinstance(e.left, EInt) and isinstance(e.right, EInt):
        return EInt(wrap_int64(e.left.value + e.right.value))
    return e


CONSTFOLD = map_family(replace(pure_plate(MiniPlate, IDENTITY), expr=fold_add))


def constfold_pass(term: Any) -> Any:
    """Collapse ``EAdd`` of two literals, bottom-up; sums wrap at 64 bits."""
    return CONSTFOLD.apply(term)


_LIST = ConstContext(LIST)
_SUM = ConstContext(SUM)

COLLECT_VARS = preorder_fold(
    replace(pure_plate(MiniPlate, _LIST), var=lambda v: (v.name,)), _LIST
)
COUNT_NODES = preorder_fold(MiniPlate.mk_plate(lambda proj: lambda a: 1), _SUM)


def collect_vars_fold(term: Any) -> list[str]:
    return list(COLLECT_VARS.apply(term))


def count_nodes_fold(term: Any) -> int:
    return COUNT_NODES.apply(term)


PASSES: dict[str, Callable[[Any], Any]] = {
    "rename": rename_pass,
    "constfold": constfold_pass,
}

FOLDS: dict[str, Callable[[Any], Any]] = {
    "vars": collect_vars_fold,
    "count": count_nodes_fold,
}


def children(sort: str):
    """Van Laarhoven Biplate onto the immediate children of the same sort."""

    def optic(ctx: Functor, f: Callable[[Any], Any]) -> Callable[[Any], Any]:
        plate = replace(pure_plate(MiniPlate, ctx), **{sort: f})
        return getattr(plate.multiplate(ctx), sort)

    return optic
