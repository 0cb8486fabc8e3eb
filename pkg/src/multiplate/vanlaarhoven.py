"""Polymorphic (van Laarhoven) lenses and Biplates.

A van Laarhoven optic is a Python callable ``l(ctx, f)`` taking an effect
context and a coalgebra ``f: B -> ctx B`` and returning a coalgebra
``A -> ctx A``.  Lenses only use ``ctx.fmap``; Biplates may also use
``ctx.pure`` and ``ctx.ap``.  The "body" of a single store is the same thing
with ``A`` already applied: ``y(ctx, f) -> ctx A``.

Quantification over every context is replaced by running at concrete
registered contexts; the law checkers certify instances, not theorems.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Any, Callable, Sequence

from .cartesian import (
    CartesianStore,
    CartesianStoreContext,
    Unit,
    id_biplate,
)
from .effects import (
    FIRST,
    IDENTITY,
    LIST,
    NOTHING,
    OPTION,
    SUM,
    Applicative,
    ConstContext,
    Eq,
    Functor,
    Just,
    Monoid,
    compose,
)
from .finite import LawChecker, Verdict
from .store import Store, StoreContext, id_lens

Coalgebra = Callable[[Any], Any]
VLBody = Callable[[Functor, Coalgebra], Any]
VLOptic = Callable[[Functor, Coalgebra], Coalgebra]


def _identity(x: Any) -> Any:
    return x


# -- coalgebras as a monoidal functor ----------------------------------------


def coalg_map(eta: Callable[[Any], Any], c: Coalgebra) -> Coalgebra:
    return lambda a: eta(c(a))


def id_coalg() -> Coalgebra:
    return _identity


def compose_coalg(ctx1: Functor, c1: Coalgebra, c2: Coalgebra) -> Coalgebra:
    """A coalgebra at ``compose(ctx1, ctx2)``: run ``c1``, then ``c2`` under ``ctx1``."""
    return lambda a: ctx1.fmap(c2, c1(a))


# -- stores and lenses ------------------------------------------------------


def iso_store1(s: Store) -> VLBody:
    peek, pos = s.peek, s.pos
    return lambda ctx, f: ctx.fmap(peek, f(pos))


def iso_store2(y: VLBody, universe: Sequence[Any] = ()) -> Store:
    return y(StoreContext(universe), id_lens)


def lens_to_vl(l: Callable[[Any], Store]) -> VLOptic:
    return lambda ctx, f: lambda a: iso_store1(l(a))(ctx, f)


def vl_to_lens(y: VLOptic, universe: Sequence[Any] = ()) -> Callable[[Any], Store]:
    return lambda a: iso_store2(lambda ctx, f: y(ctx, f)(a), universe)


# -- cartesian stores and biplates ------------------------------------------


def iso_cartesian_store1(s: CartesianStore) -> VLBody:
    if isinstance(s, Unit):
        a = s.value
        return lambda ctx, f: ctx.pure(a)
    rest = iso_cartesian_store1(s.inner)
    b = s.last
    return lambda ctx, f: ctx.ap(rest(ctx, f), f(b))


def iso_cartesian_store2(y: VLBody, universe: Sequence[Any] = ()) -> CartesianStore:
    return y(CartesianStoreContext(universe), id_biplate)


def biplate_to_vl(o: Callable[[Any], CartesianStore]) -> VLOptic:
    return lambda ctx, f: lambda a: iso_cartesian_store1(o(a))(ctx, f)


def vl_to_biplate(
    y: VLOptic, universe: Sequence[Any] = ()
) -> Callable[[Any], CartesianStore]:
    return lambda a: iso_cartesian_store2(lambda ctx, f: y(ctx, f)(a), universe)


# -- using a van Laarhoven optic ----------------------------------------------


def vl_modify(l: VLOptic, f: Callable[[Any], Any], a: Any) -> Any:
    return l(IDENTITY, f)(a)


def vl_set(l: VLOptic, a: Any, b: Any) -> Any:
    return vl_modify(l, lambda _: b, a)


def vl_get(
    l: VLOptic, a: Any, monoid: Monoid = FIRST, inject: Callable[[Any], Any] = _identity
) -> Any:
    """Read through ``l`` at ``Const(monoid)``.

    The default ``FIRST`` monoid gives the single target of a lens; for a
    Biplate pass a monoid and an ``inject`` into it, e.g. ``LIST`` with
    ``lambda b: (b,)`` to list every target.
    """
    return l(ConstContext(monoid), inject)(a)


def vl_to_list(l: VLOptic, a: Any) -> tuple:
    return vl_get(l, a, LIST, lambda b: (b,))


def vl_compose(l1: VLOptic, l2: VLOptic) -> VLOptic:
    """Focus with ``l2`` then ``l1``; plain function composition underneath."""
    return lambda ctx, f: l2(ctx, l1(ctx, f))


def vl_id(ctx: Functor, f: Coalgebra) -> Coalgebra:
    return f


# -- law checking -----------------------------------------------------------


@dataclass(frozen=True)
class PoolCoalgebra:
    ctx: Functor
    name: str
    run: Coalgebra

    def __repr__(self) -> str:
        return f"{self.name}@{self.ctx.name}"


def coalgebra_pool(
    universe_b: Sequence[Any], *, applicative_only: bool = False
) -> list[PoolCoalgebra]:
    """Coalgebras ``B -> K B`` at the registered contexts used by the law checks.

    ``Store`` entries are skipped with ``applicative_only`` since a Biplate
    may call ``pure``/``ap`` which ``Store`` lacks.
    """
    universe_b = tuple(universe_b)
    first = universe_b[0] if universe_b else None
    pool = [
        PoolCoalgebra(IDENTITY, "id", _identity),
        PoolCoalgebra(IDENTITY, "to-first", lambda b: first),
        PoolCoalgebra(ConstContext(LIST), "singleton", lambda b: (b,)),
        PoolCoalgebra(CartesianStoreContext(universe_b), "idBiplate", id_biplate),
        PoolCoalgebra(OPTION, "fail-on-first", lambda b: NOTHING if b == first else Just(b)),
    ]
    if not applicative_only:
        pool.append(PoolCoalgebra(StoreContext(universe_b), "idLens", id_lens))
    return pool


def check_vl_laws(
    l: VLOptic,
    universe_a: Sequence[Any],
    universe_b: Sequence[Any],
    *,
    applicative_only: bool = False,
    pool: Sequence[PoolCoalgebra] | None = None,
    eq: Eq = operator.eq,
) -> Verdict:
    """Check that ``l`` is a monoidal natural transformation on coalgebras.

    Unit law: ``l(idCoalg) == idCoalg``.  Composition law:
    ``l(composeCoalg(c1, c2)) == composeCoalg(l c1, l c2)`` for every ordered
    pair drawn from ``pool``.  Both are checked pointwise on ``universe_a``.
    """
    if pool is None:
        pool = coalgebra_pool(universe_b, applicative_only=applicative_only)
    checker = LawChecker()
    unit = l(IDENTITY, id_coalg())
    for a in universe_a:
        if not checker.check("unit", eq(unit(a), a), (a,)):
            return checker.verdict()
    for a in universe_a:
        for p1 in pool:
            for p2 in pool:
                ctx = compose(p1.ctx, p2.ctx)
                lhs = l(ctx, compose_coalg(p1.ctx, p1.run, p2.run))(a)
                rhs = compose_coalg(p1.ctx, l(p1.ctx, p1.run), l(p2.ctx, p2.run))(a)
                if not checker.check("compose", ctx.eq(lhs, rhs, eq), (a, p1, p2)):
                    return checker.verdict()
    return checker.verdict()


@dataclass(frozen=True)
class NaturalTransformation:
    source: Functor
    target: Functor
    name: str
    run: Callable[[Any], Any]

    def __repr__(self) -> str:
        return f"{self.name}: {self.source.name} => {self.target.name}"


def registered_transformations(universe_b: Sequence[Any]) -> list[NaturalTransformation]:
    """Natural transformations between registered contexts, for naturality checks."""
    store = StoreContext(universe_b)
    cart = CartesianStoreContext(universe_b)
    const_list = ConstContext(LIST)
    return [
        NaturalTransformation(IDENTITY, IDENTITY, "id", _identity),
        NaturalTransformation(store, IDENTITY, "extract", store.extract),
        NaturalTransformation(cart, IDENTITY, "extract", cart.extract),
        NaturalTransformation(store, compose(store, store), "duplicate", store.duplicate),
        NaturalTransformation(IDENTITY, const_list, "pure", const_list.pure),
        NaturalTransformation(IDENTITY, cart, "pure", cart.pure),
        NaturalTransformation(IDENTITY, OPTION, "pure", OPTION.pure),
        NaturalTransformation(const_list, ConstContext(SUM), "length", len),
    ]


def check_naturality(
    l: VLOptic,
    universe_a: Sequence[Any],
    universe_b: Sequence[Any],
    *,
    applicative_only: bool = False,
    eq: Eq = operator.eq,
) -> Verdict:
    """Instances of the free theorem ``eta . l c == l (eta . c)``."""
    pool = coalgebra_pool(universe_b, applicative_only=False)
    checker = LawChecker()
    for eta in registered_transformations(universe_b):
        if applicative_only and not isinstance(eta.target, Applicative):
            continue
        sources = [p for p in pool if _same_context(p.ctx, eta.source)]
        for p in sources:
            if applicative_only and not isinstance(p.ctx, Applicative):
                continue
            lhs_c = coalg_map(eta.run, l(p.ctx, p.run))
            rhs_c = l(eta.target, coalg_map(eta.run, p.run))
            for a in universe_a:
                holds = eta.target.eq(lhs_c(a), rhs_c(a), eq)
                if not checker.check("naturality", holds, (a, eta, p)):
                    return checker.verdict()
    return checker.verdict()


def _same_context(x: Functor, y: Functor) -> bool:
    if isinstance(x, ConstContext) or isinstance(y, ConstContext):
        return x == y
    return type(x) is type(y)
