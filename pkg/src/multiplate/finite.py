"""Finite universes, lookup-table functions and law verdicts.

Everything that needs decidable equality on functions goes through here:
functions over a finite domain are compared pointwise, and law checkers
report the first failing instance in enumeration order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Iterator, Sequence


@dataclass(frozen=True)
class Table:
    """A total function over a finite domain, stored as a lookup table.

    Tables are hashable and compare by content, so they can sit inside
    stores and still give structural equality.
    """

    pairs: tuple[tuple[Any, Any], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "_lookup", dict(self.pairs))

    @classmethod
    def from_function(cls, f: Callable[[Any], Any], domain: Iterable[Any]) -> Table:
        return cls(tuple((x, f(x)) for x in domain))

    @classmethod
    def const(cls, value: Any, domain: Iterable[Any]) -> Table:
        return cls(tuple((x, value) for x in domain))

    def __call__(self, x: Any) -> Any:
        return self._lookup[x]

    @property
    def domain(self) -> tuple[Any, ...]:
        return tuple(k for k, _ in self.pairs)

    def __repr__(self) -> str:
        body = ", ".join(f"{k!r}: {v!r}" for k, v in self.pairs)
        return f"Table({{{body}}})"


def all_tables(domain: Sequence[Any], codomain: Sequence[Any]) -> Iterator[Table]:
    """Every total function ``domain -> codomain``, in lexicographic order."""
    for values in itertools.product(codomain, repeat=len(domain)):
        yield Table(tuple(zip(domain, values)))


def curried_table(peek: Callable[[tuple], Any], universe: Sequence[Any], arity: int) -> Any:
    """Curry ``peek`` over ``universe``: nested tables, one level per coordinate.

    With arity 0 this is just ``peek(())``.
    """

    def go(prefix: tuple) -> Any:
        if len(prefix) == arity:
            return peek(prefix)
        return Table(tuple((b, go(prefix + (b,))) for b in universe))

    return go(())


def pointwise_equal(
    f: Callable[[Any], Any],
    g: Callable[[Any], Any],
    domain: Iterable[Any],
    eq: Callable[[Any, Any], bool] | None = None,
) -> bool:
    eq = eq or _default_eq
    return all(eq(f(x), g(x)) for x in domain)


def _default_eq(x: Any, y: Any) -> bool:
    return x == y


@dataclass(frozen=True)
class Verdict:
    """Outcome of a law check.

    ``law`` names the first failing law and ``witness`` is the first failing
    instance in enumeration order; both are ``None`` on success. ``checked``
    counts the instances that were evaluated.
    """

    ok: bool
    law: str | None = None
    witness: Any = None
    checked: int = 0

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return f"pass ({self.checked} instances)"
        return f"FAIL {self.law}: witness {self.witness!r}"


class LawChecker:
    """Accumulates law instances and stops at the first failure."""

    def __init__(self) -> None:
        self.checked = 0
        self.failure: tuple[str, Any] | None = None

    def check(self, law: str, holds: bool, witness: Any) -> bool:
        if self.failure is not None:
            return False
        self.checked += 1
        if not holds:
            self.failure = (law, witness)
            return False
        return True

    @property
    def failed(self) -> bool:
        return self.failure is not None

    def verdict(self) -> Verdict:
        if self.failure is None:
            return Verdict(True, checked=self.checked)
        law, witness = self.failure
        return Verdict(False, law, witness, self.checked)
