"""Effect contexts: functor, applicative, monad and comonad capabilities.

Python has no higher-kinded types, so a context is an explicit descriptor
object and its values are left unwrapped.  A value "in" the identity
context is just the value; a value in ``Const(m)`` is just an element of the
monoid ``m``; a value in ``compose(F, G)`` is an ``F``-value whose elements
are ``G``-values.  Capabilities are expressed through the class hierarchy,
so ``isinstance(ctx, Applicative)`` is the capability test.

Every context also knows how to compare two of its values given an
equality on elements, which is what the law checkers build on.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Any, Callable, Iterable

Eq = Callable[[Any, Any], bool]


class Functor:
    name = "functor"

    def fmap(self, f: Callable[[Any], Any], x: Any) -> Any:
        raise NotImplementedError

    def eq(self, x: Any, y: Any, elem_eq: Eq = operator.eq) -> bool:
        raise NotImplementedError

    def __repr__(self) -> str:
        return self.name


class Applicative(Functor):
    def pure(self, x: Any) -> Any:
        raise NotImplementedError

    def ap(self, f: Any, x: Any) -> Any:
        raise NotImplementedError

    def lift2(self, f: Callable[[Any, Any], Any], x: Any, y: Any) -> Any:
        return self.ap(self.fmap(lambda a: lambda b: f(a, b), x), y)


class Monad(Applicative):
    def join(self, x: Any) -> Any:
        raise NotImplementedError

    def bind(self, x: Any, k: Callable[[Any], Any]) -> Any:
        return self.join(self.fmap(k, x))

    def kleisli(self, g: Callable[[Any], Any], f: Callable[[Any], Any]) -> Callable[[Any], Any]:
        """``g <=< f``: run ``f`` first, then ``g``."""
        return lambda a: self.join(self.fmap(g, f(a)))


class Comonad(Functor):
    def extract(self, w: Any) -> Any:
        raise NotImplementedError

    def duplicate(self, w: Any) -> Any:
        return self.extend(lambda x: x, w)

    def extend(self, f: Callable[[Any], Any], w: Any) -> Any:
        return self.fmap(f, self.duplicate(w))


def lift_w(ctx: Comonad, f: Callable[[Any], Any], w: Any) -> Any:
    """``fmap`` recovered from ``extract`` and ``extend``."""
    return ctx.extend(lambda x: f(ctx.extract(x)), w)


def traverse_list(ctx: Applicative, f: Callable[[Any], Any], xs: Iterable[Any]) -> Any:
    """Run ``f`` over ``xs`` left to right, collecting results as a tuple."""
    acc = ctx.pure(())
    for x in xs:
        acc = ctx.lift2(lambda done, y: done + (y,), acc, f(x))
    return acc


# -- identity ---------------------------------------------------------------


class IdentityContext(Monad, Comonad):
    name = "Id"

    def fmap(self, f, x):
        return f(x)

    def pure(self, x):
        return x

    def ap(self, f, x):
        return f(x)

    def join(self, x):
        return x

    def extract(self, w):
        return w

    def duplicate(self, w):
        return w

    def eq(self, x, y, elem_eq=operator.eq):
        return elem_eq(x, y)


IDENTITY = IdentityContext()


# -- monoids and the constant context --------------------------------------


class _Empty:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "EMPTY"


EMPTY = _Empty()


@dataclass(frozen=True)
class Monoid:
    name: str
    identity: Any
    combine: Callable[[Any, Any], Any]

    def concat(self, xs: Iterable[Any]) -> Any:
        acc = self.identity
        for x in xs:
            acc = self.combine(acc, x)
        return acc

    def __repr__(self) -> str:
        return self.name


def _max(x, y):
    if x is EMPTY:
        return y
    if y is EMPTY:
        return x
    return max(x, y)


def _first(x, y):
    return y if x is EMPTY else x


LIST = Monoid("list", (), operator.add)
SUM = Monoid("sum", 0, operator.add)
MAX = Monoid("max", EMPTY, _max)
FIRST = Monoid("first", EMPTY, _first)


class ConstContext(Applicative):
    """Values are monoid elements; the phantom element type is ignored."""

    def __init__(self, monoid: Monoid):
        self.monoid = monoid
        self.name = f"Const({monoid.name})"

    def fmap(self, f, x):
        return x

    def pure(self, x):
        return self.monoid.identity

    def ap(self, f, x):
        return self.monoid.combine(f, x)

    def eq(self, x, y, elem_eq=operator.eq):
        return x == y

    def __eq__(self, other):
        return isinstance(other, ConstContext) and other.monoid == self.monoid

    def __hash__(self):
        return hash(("Const", self.monoid.name))


# -- composition ------------------------------------------------------------


class ComposeContext(Functor):
    """``(outer . inner) a = outer (inner a)``."""

    def __init__(self, outer: Functor, inner: Functor):
        self.outer = outer
        self.inner = inner
        self.name = f"({outer.name} . {inner.name})"

    def fmap(self, f, x):
        return self.outer.fmap(lambda y: self.inner.fmap(f, y), x)

    def eq(self, x, y, elem_eq=operator.eq):
        return self.outer.eq(x, y, lambda u, v: self.inner.eq(u, v, elem_eq))


class ComposeApplicative(ComposeContext, Applicative):
    def pure(self, x):
        return self.outer.pure(self.inner.pure(x))

    def ap(self, f, x):
        inner_ap = lambda g: lambda y: self.inner.ap(g, y)
        return self.outer.ap(self.outer.fmap(inner_ap, f), x)


def compose(outer: Functor, inner: Functor) -> ComposeContext:
    """Compose two contexts, keeping the applicative capability when both have it."""
    if isinstance(outer, Applicative) and isinstance(inner, Applicative):
        return ComposeApplicative(outer, inner)
    return ComposeContext(outer, inner)


# -- option -----------------------------------------------------------------


@dataclass(frozen=True)
class Just:
    value: Any


class _Nothing:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "NOTHING"


NOTHING = _Nothing()


class OptionContext(Monad):
    name = "Option"

    def fmap(self, f, x):
        return NOTHING if x is NOTHING else Just(f(x.value))

    def pure(self, x):
        return Just(x)

    def ap(self, f, x):
        if f is NOTHING or x is NOTHING:
            return NOTHING
        return Just(f.value(x.value))

    def join(self, x):
        return NOTHING if x is NOTHING else x.value

    def eq(self, x, y, elem_eq=operator.eq):
        if x is NOTHING or y is NOTHING:
            return x is y
        return elem_eq(x.value, y.value)


OPTION = OptionContext()
