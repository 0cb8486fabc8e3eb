"""The store comonad and lenses as its coalgebras."""

from __future__ import annotations

import operator
from dataclasses import dataclass, replace
from typing import Any, Callable, Sequence

from .effects import Comonad, Eq
from .finite import LawChecker, Verdict


@dataclass(frozen=True)
class Store:
    """A collection indexed by ``B`` with one selected index.

    ``peek`` is any callable total on the index type; use a
    :class:`~multiplate.finite.Table` when structural equality matters.
    """

    peek: Callable[[Any], Any]
    pos: Any


def store_extract(s: Store) -> Any:
    return s.peek(s.pos)


def store_duplicate(s: Store) -> Store:
    peek = s.peek
    return Store(lambda b: Store(peek, b), s.pos)


def store_map(f: Callable[[Any], Any], s: Store) -> Store:
    peek = s.peek
    return Store(lambda b: f(peek(b)), s.pos)


def store_extend(f: Callable[[Store], Any], s: Store) -> Store:
    return store_map(f, store_duplicate(s))


def store_equal(s: Store, t: Store, universe: Sequence[Any], eq: Eq = operator.eq) -> bool:
    """Equal positions and pointwise-equal peeks over ``universe``."""
    if s.pos != t.pos:
        return False
    return all(eq(s.peek(b), t.peek(b)) for b in universe)


class StoreContext(Comonad):
    """``Store B`` as a context.  ``universe`` enumerates ``B`` for equality."""

    def __init__(self, universe: Sequence[Any]):
        self.universe = tuple(universe)
        self.name = f"Store[{len(self.universe)}]"

    def fmap(self, f, x):
        return store_map(f, x)

    def extract(self, w):
        return store_extract(w)

    def duplicate(self, w):
        return store_duplicate(w)

    def eq(self, x, y, elem_eq=operator.eq):
        return store_equal(x, y, self.universe, elem_eq)


# -- lenses -----------------------------------------------------------------

Lens = Callable[[Any], Store]


def get(l: Lens, a: Any) -> Any:
    return l(a).pos


def set(l: Lens, a: Any, b: Any) -> Any:  # noqa: A001 - mirrors get
    return l(a).peek(b)


def modify(l: Lens, f: Callable[[Any], Any], a: Any) -> Any:
    s = l(a)
    return s.peek(f(s.pos))


def lens(getter: Callable[[Any], Any], setter: Callable[[Any, Any], Any]) -> Lens:
    return lambda a: Store(lambda b: setter(a, b), getter(a))


def id_lens(a: Any) -> Store:
    return Store(lambda b: b, a)


def compose_lens(l1: Lens, l2: Lens) -> Lens:
    """``l1`` after ``l2``: focus with ``l2`` first, then with ``l1`` inside it."""

    def run(a: Any) -> Store:
        outer = l2(a)
        return store_map(outer.peek, l1(outer.pos))

    return run


def duplicate_as_lens() -> Lens:
    """``duplicate`` read as a lens onto a store's selected position."""
    return store_duplicate


def check_lens_laws(
    l: Lens, universe_a: Sequence[Any], universe_b: Sequence[Any], eq: Eq = operator.eq
) -> Verdict:
    """Exhaustively check the get/set laws of a very well behaved lens."""
    checker = LawChecker()
    for s in universe_a:
        for b in universe_b:
            if not checker.check("get-set", eq(get(l, set(l, s, b)), b), (s, b)):
                return checker.verdict()
    for s in universe_a:
        if not checker.check("set-get", eq(set(l, s, get(l, s)), s), (s,)):
            return checker.verdict()
    for s in universe_a:
        for b1 in universe_b:
            for b2 in universe_b:
                lhs = set(l, set(l, s, b1), b2)
                if not checker.check("set-set", eq(lhs, set(l, s, b2)), (s, b1, b2)):
                    return checker.verdict()
    return checker.verdict()


def check_coalgebra_laws(
    l: Lens, universe_a: Sequence[Any], universe_b: Sequence[Any], eq: Eq = operator.eq
) -> Verdict:
    """Exhaustively check ``extract . l = id`` and ``fmap l . l = duplicate . l``."""
    checker = LawChecker()
    for a in universe_a:
        if not checker.check("extract", eq(store_extract(l(a)), a), (a,)):
            return checker.verdict()
    inner_eq = lambda s, t: store_equal(s, t, universe_b, eq)
    for a in universe_a:
        la = l(a)
        holds = store_equal(store_map(l, la), store_duplicate(la), universe_b, inner_eq)
        if not checker.check("duplicate", holds, (a,)):
            return checker.verdict()
    return checker.verdict()


# -- address book example ---------------------------------------------------


@dataclass(frozen=True)
class Address:
    phone: str
    website: str


def phone(address: Address) -> Store:
    return Store(lambda new_phone: replace(address, phone=new_phone), address.phone)


def website(address: Address) -> Store:
    return Store(lambda new_site: replace(address, website=new_site), address.website)


PAT = Address(phone="333-4444", website="http://pat.com/")
