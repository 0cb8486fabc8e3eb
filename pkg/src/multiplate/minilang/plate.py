"""The plate for the mini language: one coalgebra field per sort."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from ..effects import Applicative, traverse_list
from ..plate import Multiplate, Projector
from .ast import EAdd, EStm, EVar, SAss, SBlock, SDecl, SReturn, sort_of


@dataclass(frozen=True)
class MiniPlate(Multiplate):
    stm: Callable[[Any], Any]
    expr: Callable[[Any], Any]
    var: Callable[[Any], Any]
    typ: Callable[[Any], Any]

    @classmethod
    def mk_plate(cls, build: Callable[[Projector], Callable[[Any], Any]]) -> MiniPlate:
        return cls(
            stm=build(Projector("stm")),
            expr=build(Projector("expr")),
            var=build(Projector("var")),
            typ=build(Projector("typ")),
        )

    def multiplate(self, ctx: Applicative) -> MiniPlate:
        p = self

        def build_stm(s):
            if isinstance(s, SDecl):
                return ctx.lift2(SDecl, p.typ(s.typ), p.var(s.var))
            if isinstance(s, SAss):
                return ctx.lift2(SAss, p.var(s.var), p.expr(s.expr))
            if isinstance(s, SBlock):
                return ctx.fmap(SBlock, traverse_list(ctx, p.stm, s.stms))
            if isinstance(s, SReturn):
                return ctx.fmap(SReturn, p.expr(s.expr))
            raise TypeError(f"not a statement: {s!r}")

        def build_expr(e):
            if isinstance(e, EStm):
                return ctx.fmap(EStm, p.stm(e.stm))
            if isinstance(e, EAdd):
                return ctx.lift2(EAdd, p.expr(e.left), p.expr(e.right))
            if isinstance(e, EVar):
                return ctx.fmap(EVar, p.var(e.var))
            return ctx.pure(e)

        return type(self)(stm=build_stm, expr=build_expr, var=ctx.pure, typ=ctx.pure)

    def apply(self, term: Any) -> Any:
        """Dispatch ``term`` to the field for its sort."""
        return getattr(self, sort_of(term))(term)


