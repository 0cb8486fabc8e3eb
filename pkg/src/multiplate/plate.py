"""Generic traversals over any plate.

A plate is a record holding one coalgebra ``sort -> K sort`` per sort of a
mutually recursive family.  A plate class supplies two things:

``multiplate(ctx)``
    the plate that applies ``self`` to every immediate child, at an
    applicative context ``ctx``;
``mk_plate(build)``
    builds a plate whose field for projector ``pi`` is ``build(pi)``.

Everything else here is defined once for all plate classes.  Plates never
carry their context; it is passed explicitly wherever it is needed.

Recursive plates (``map_family_m``, the folds) tie the knot lazily: each
field rebuilds the one-step plate when it is applied, so construction
terminates and application terminates on finite trees.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass, fields
from typing import Any, Callable, Mapping, Sequence

from .effects import (
    IDENTITY,
    LIST,
    OPTION,
    Applicative,
    ConstContext,
    Eq,
    Functor,
    Monad,
    compose,
)
from .finite import LawChecker, Verdict


@dataclass(frozen=True)
class Projector:
    """Selects one field of a plate, whatever its context."""

    name: str

    def __call__(self, plate: Any) -> Callable[[Any], Any]:
        return getattr(plate, self.name)


class Multiplate:
    """Base class for plate records (subclasses are frozen dataclasses)."""

    @classmethod
    def projectors(cls) -> tuple[Projector, ...]:
        return tuple(Projector(f.name) for f in fields(cls))

    @classmethod
    def mk_plate(cls, build: Callable[[Projector], Callable[[Any], Any]]) -> Multiplate:
        raise NotImplementedError

    def multiplate(self, ctx: Applicative) -> Multiplate:
        raise NotImplementedError


def pure_plate(cls: type[Multiplate], ctx: Applicative) -> Multiplate:
    return cls.mk_plate(lambda proj: ctx.pure)


def id_plate(cls: type[Multiplate]) -> Multiplate:
    return pure_plate(cls, IDENTITY)


def map_plate(eta: Callable[[Any], Any], p: Multiplate) -> Multiplate:
    def build(proj: Projector) -> Callable[[Any], Any]:
        field = proj(p)
        return lambda a: eta(field(a))

    return type(p).mk_plate(build)


def compose_plate(p1: Multiplate, p2: Multiplate, ctx2: Functor) -> Multiplate:
    """Run ``p2`` (at ``ctx2``) then ``p1`` inside it; lives at ``compose(ctx2, ctx1)``."""

    def build(proj: Projector) -> Callable[[Any], Any]:
        f1, f2 = proj(p1), proj(p2)
        return lambda a: ctx2.fmap(f1, f2(a))

    return type(p1).mk_plate(build)


def compose_plate_id(p1: Multiplate, p2: Multiplate) -> Multiplate:
    def build(proj: Projector) -> Callable[[Any], Any]:
        f1, f2 = proj(p1), proj(p2)
        return lambda a: f1(f2(a))

    return type(p1).mk_plate(build)


def kleisli_compose_plate(p1: Multiplate, p2: Multiplate, m: Monad) -> Multiplate:
    """Field-wise Kleisli composition, ``p2`` first."""
    return map_plate(m.join, compose_plate(p1, p2, m))


def _knot(cls: type[Multiplate], step: Callable[[Multiplate], Multiplate]) -> Multiplate:
    # plate = step(plate), with step re-run on every field application
    def build(proj: Projector) -> Callable[[Any], Any]:
        return lambda a: proj(step(plate))(a)

    plate = cls.mk_plate(build)
    return plate


def map_family_m(p: Multiplate, m: Monad) -> Multiplate:
    """Bottom-up monadic rewrite: children are finished before ``p`` sees the parent."""
    return _knot(type(p), lambda rec: kleisli_compose_plate(p, rec.multiplate(m), m))


def map_family(p: Multiplate) -> Multiplate:
    """Bottom-up rewrite with a plate of pure functions."""
    return _knot(type(p), lambda rec: compose_plate_id(p, rec.multiplate(IDENTITY)))


def append_plate(p1: Multiplate, p2: Multiplate, ctx: ConstContext) -> Multiplate:
    """Combine two analyses field-wise, ``p1``'s contribution on the left."""

    def build(proj: Projector) -> Callable[[Any], Any]:
        f1, f2 = proj(p1), proj(p2)
        return lambda a: ctx.ap(ctx.fmap(lambda x: lambda _: x, f1(a)), f2(a))

    return type(p1).mk_plate(build)


def preorder_fold(p: Multiplate, ctx: ConstContext) -> Multiplate:
    return _knot(type(p), lambda rec: append_plate(p, rec.multiplate(ctx), ctx))


def postorder_fold(p: Multiplate, ctx: ConstContext) -> Multiplate:
    return _knot(type(p), lambda rec: append_plate(rec.multiplate(ctx), p, ctx))


# -- laws -------------------------------------------------------------------


@dataclass(frozen=True)
class LawPlate:
    """A plate paired with the context it runs at, for law checking."""

    ctx: Applicative
    name: str
    plate: Multiplate

    def __repr__(self) -> str:
        return f"{self.name}@{self.ctx.name}"


def generic_plate_pool(cls: type[Multiplate]) -> list[LawPlate]:
    """Plates any plate class supports, built only from ``mk_plate``."""
    tag = ConstContext(LIST)
    return [
        LawPlate(IDENTITY, "pure", pure_plate(cls, IDENTITY)),
        LawPlate(tag, "visit-log", cls.mk_plate(lambda proj: lambda a: ((proj.name, a),))),
        LawPlate(OPTION, "pure", pure_plate(cls, OPTION)),
    ]


def check_multiplate_laws(
    cls: type[Multiplate],
    universe: Mapping[str, Sequence[Any]],
    pool: Sequence[LawPlate] | None = None,
    *,
    eq: Eq = operator.eq,
) -> Verdict:
    """Check both multiplate laws field-wise on every term of ``universe``.

    ``universe`` maps projector names to the terms of that sort.  The
    composition law is checked for every ordered pair of plates in
    ``pool`` (defaults to :func:`generic_plate_pool`).
    """
    if pool is None:
        pool = generic_plate_pool(cls)
    projectors = cls.projectors()
    checker = LawChecker()
    lifted = id_plate(cls).multiplate(IDENTITY)
    for proj in projectors:
        field = proj(lifted)
        for t in universe.get(proj.name, ()):
            if not checker.check("identity", eq(field(t), t), (proj.name, t)):
                return checker.verdict()
    for tp1 in pool:
        for tp2 in pool:
            ctx = compose(tp2.ctx, tp1.ctx)
            lhs = compose_plate(tp1.plate, tp2.plate, tp2.ctx).multiplate(ctx)
            rhs = compose_plate(
                tp1.plate.multiplate(tp1.ctx), tp2.plate.multiplate(tp2.ctx), tp2.ctx
            )
            for proj in projectors:
                fl, fr = proj(lhs), proj(rhs)
                for t in universe.get(proj.name, ()):
                    holds = ctx.eq(fl(t), fr(t), eq)
                    if not checker.check("compose", holds, (proj.name, t, tp1, tp2)):
                        return checker.verdict()
    return checker.verdict()
