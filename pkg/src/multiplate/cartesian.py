"""The Cartesian store comonad (FunList) and Biplates as its coalgebras.

A Cartesian store is either ``Unit(a)`` or ``Battery(v, b)`` where ``v`` is
a Cartesian store of functions ``B -> A``.  Position vectors are read
inner-first: ``positions(Battery(v, b)) == positions(v) + (b,)``, and the
value at a coordinate vector ``(c1, ..., cn)`` is the innermost ``Unit``
payload applied to ``c1``, then ``c2``, and so on.
"""

from __future__ import annotations

import itertools
import operator
from dataclasses import dataclass
from functools import reduce
from typing import Any, Callable, Iterator, Sequence, Union

from .effects import Applicative, Comonad, Eq
from .finite import LawChecker, Table, Verdict, all_tables, curried_table
from .store import Store


@dataclass(frozen=True)
class Unit:
    value: Any


@dataclass(frozen=True)
class Battery:
    inner: Unit | Battery
    last: Any


CartesianStore = Union[Unit, Battery]


def _identity(x: Any) -> Any:
    return x


def cs_map(f: Callable[[Any], Any], s: CartesianStore) -> CartesianStore:
    if isinstance(s, Unit):
        return Unit(f(s.value))
    return Battery(cs_map(lambda g: lambda b: f(g(b)), s.inner), s.last)


def cs_extract(s: CartesianStore) -> Any:
    if isinstance(s, Unit):
        return s.value
    return cs_extract(s.inner)(s.last)


def _battery(v: CartesianStore) -> Callable[[Any], Battery]:
    return lambda b: Battery(v, b)


def cs_duplicate(s: CartesianStore) -> CartesianStore:
    if isinstance(s, Unit):
        return Unit(s)
    return Battery(cs_extend(_battery, s.inner), s.last)


def cs_extend(f: Callable[[Any], Any], s: CartesianStore) -> CartesianStore:
    return cs_map(f, cs_duplicate(s))


def cs_pure(a: Any) -> Unit:
    return Unit(a)


def _compose_fn(g: Callable) -> Callable:
    return lambda h: lambda y: g(h(y))


def cs_ap(f: CartesianStore, x: CartesianStore) -> CartesianStore:
    """Apply a store of functions to a store of arguments.

    The result's positions are ``f``'s followed by ``x``'s.
    """
    if isinstance(x, Unit):
        a = x.value
        return cs_map(lambda g: g(a), f)
    return Battery(cs_ap(cs_map(_compose_fn, f), x.inner), x.last)


def dimension(s: CartesianStore) -> int:
    n = 0
    while isinstance(s, Battery):
        n += 1
        s = s.inner
    return n


def positions(s: CartesianStore) -> tuple:
    out = []
    while isinstance(s, Battery):
        out.append(s.last)
        s = s.inner
    return tuple(reversed(out))


def _payload(s: CartesianStore) -> Any:
    while isinstance(s, Battery):
        s = s.inner
    return s.value


def peek_at(s: CartesianStore, vector: Sequence[Any]) -> Any:
    """The value stored at coordinate ``vector`` (length must equal the dimension)."""
    if len(vector) != dimension(s):
        raise ValueError(f"vector of length {len(vector)} for a store of dimension {dimension(s)}")
    return reduce(lambda acc, b: acc(b), vector, _payload(s))


def single_store(s: Store) -> Battery:
    return Battery(Unit(s.peek), s.pos)


def strip_dimension(s: CartesianStore) -> tuple[Store, CartesianStore] | None:
    """Split off the outermost dimension, or ``None`` for ``Unit``."""
    if isinstance(s, Unit):
        return None
    b = s.last
    return Store(cs_extract(s.inner), b), cs_map(lambda g: g(b), s.inner)


def stores(s: CartesianStore) -> list[Store]:
    out = []
    step = strip_dimension(s)
    while step is not None:
        head, s = step
        out.append(head)
        step = strip_dimension(s)
    return out


# -- normal form ------------------------------------------------------------


@dataclass(frozen=True)
class NormalForm:
    """``(n, positions, peek)`` with ``peek`` tabulated over all of ``B^n``."""

    arity: int
    positions: tuple
    peek: Table


def to_normal_form(s: CartesianStore, universe: Sequence[Any]) -> NormalForm:
    n = dimension(s)
    table = Table(tuple((v, peek_at(s, v)) for v in itertools.product(universe, repeat=n)))
    return NormalForm(n, positions(s), table)


def _curry(peek: Callable[[tuple], Any], arity: int, prefix: tuple = ()) -> Any:
    if len(prefix) == arity:
        return peek(prefix)
    return lambda b: _curry(peek, arity, prefix + (b,))


def from_normal_form(nf: NormalForm, universe: Sequence[Any] | None = None) -> CartesianStore:
    """Rebuild the inductive store; with ``universe`` the curried peek is a nested table."""
    if len(nf.positions) != nf.arity:
        raise ValueError("positions length does not match arity")
    if universe is None:
        payload = _curry(nf.peek, nf.arity)
    else:
        payload = curried_table(nf.peek, universe, nf.arity)
    s: CartesianStore = Unit(payload)
    for b in nf.positions:
        s = Battery(s, b)
    return s


def cs_equal(
    s: CartesianStore, t: CartesianStore, universe: Sequence[Any], eq: Eq = operator.eq
) -> bool:
    """Structural equality: same position vectors, pointwise-equal peeks over ``universe^n``."""
    if positions(s) != positions(t):
        return False
    universe = tuple(universe)

    def go(n: int, x: Any, y: Any) -> bool:
        # apply one coordinate at a time so partial applications are shared;
        # the last coordinate is a flat loop since nested stores make this hot
        if n == 0:
            return eq(x, y)
        if n == 1:
            for b in universe:
                if not eq(x(b), y(b)):
                    return False
            return True
        for b in universe:
            if not go(n - 1, x(b), y(b)):
                return False
        return True

    ps, pt = _payload(s), _payload(t)
    if ps is pt:
        # one peek function on both sides; eq is assumed reflexive
        return True
    return go(dimension(s), ps, pt)


def enumerate_stores(
    universe_b: Sequence[Any], universe_a: Sequence[Any], dim: int
) -> Iterator[CartesianStore]:
    """All Cartesian stores of exactly dimension ``dim``, peeks as nested tables.

    Order: position vectors lexicographically, then peek tables
    lexicographically.  There are ``|B|^n * |A|^(|B|^n)`` of them.
    """
    vectors = list(itertools.product(universe_b, repeat=dim))
    for pos in vectors:
        for table in all_tables(vectors, universe_a):
            yield from_normal_form(NormalForm(dim, pos, table), universe_b)


class CartesianStoreContext(Applicative, Comonad):
    def __init__(self, universe: Sequence[Any]):
        self.universe = tuple(universe)
        self.name = f"CartesianStore[{len(self.universe)}]"

    def fmap(self, f, x):
        return cs_map(f, x)

    def pure(self, x):
        return Unit(x)

    def ap(self, f, x):
        return cs_ap(f, x)

    def extract(self, w):
        return cs_extract(w)

    def duplicate(self, w):
        return cs_duplicate(w)

    def eq(self, x, y, elem_eq=operator.eq):
        return cs_equal(x, y, self.universe, elem_eq)


# -- biplates ---------------------------------------------------------------

Biplate = Callable[[Any], CartesianStore]


def id_biplate(a: Any) -> Battery:
    return Battery(Unit(_identity), a)


def compose_biplate(o1: Biplate, o2: Biplate) -> Biplate:
    """``o1`` after ``o2``: every ``o2`` target is expanded into its ``o1`` targets."""

    def f(s: CartesianStore) -> CartesianStore:
        if isinstance(s, Unit):
            return s
        return cs_ap(f(s.inner), o1(s.last))

    return lambda a: f(o2(a))


def lens_to_biplate(l: Callable[[Any], Store]) -> Biplate:
    return lambda a: single_store(l(a))


def biplate_get(o: Biplate, a: Any) -> tuple:
    return positions(o(a))


def biplate_set(o: Biplate, a: Any, values: Sequence[Any]) -> Any:
    return peek_at(o(a), tuple(values))


def check_biplate_laws(
    o: Biplate, universe_a: Sequence[Any], universe_b: Sequence[Any], eq: Eq = operator.eq
) -> Verdict:
    """Exhaustively check ``extract . o = id`` and ``fmap o . o = duplicate . o``.

    ``universe_b`` is the set of coordinate values used for pointwise
    comparison of peeks.
    """
    checker = LawChecker()
    for a in universe_a:
        if not checker.check("extract", eq(cs_extract(o(a)), a), (a,)):
            return checker.verdict()
    inner_eq = lambda s, t: cs_equal(s, t, universe_b, eq)
    for a in universe_a:
        oa = o(a)
        holds = cs_equal(cs_map(o, oa), cs_duplicate(oa), universe_b, inner_eq)
        if not checker.check("duplicate", holds, (a,)):
            return checker.verdict()
    return checker.verdict()
