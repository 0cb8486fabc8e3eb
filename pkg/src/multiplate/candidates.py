"""Finite universes and candidate optics, lawful and not, for the law suites."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Callable, Sequence

from .cartesian import Battery, CartesianStore, Unit, lens_to_biplate
from .store import lens

B3 = ("b0", "b1", "b2")
A2 = ("a0", "a1")
FLAGS = (False, True)


def _at(i: int) -> str:
    return B3[i % 3]


def _ix(b: str) -> int:
    return B3.index(b)


@dataclass(frozen=True)
class Rec:
    b: str
    c: bool


RECORDS = tuple(Rec(b, c) for b in B3 for c in FLAGS)


@dataclass(frozen=True)
class Candidate:
    name: str
    optic: Callable[[Any], Any]

    def __repr__(self) -> str:
        return self.name


_SWAP01 = {"b0": "b1", "b1": "b0", "b2": "b2"}
_REVERSE = {"b0": "b0", "b1": "b2", "b2": "b1"}

GETTERS: dict[str, Callable[[Rec], str]] = {
    "field-b": lambda r: r.b,
    "const-b0": lambda r: "b0",
    "const-b1": lambda r: "b1",
    "shift": lambda r: _at(_ix(r.b) + 1),
    "swap01": lambda r: _SWAP01[r.b],
    "b-plus-c": lambda r: _at(_ix(r.b) + r.c),
    "flag": lambda r: "b1" if r.c else "b0",
    "reverse": lambda r: _REVERSE[r.b],
}

SETTERS: dict[str, Callable[[Rec, str], Rec]] = {
    "set-b": lambda r, n: Rec(n, r.c),
    "ignore": lambda r, n: r,
    "set-b-toggle": lambda r, n: Rec(n, not r.c),
    "set-b-reset": lambda r, n: Rec(n, False),
    "set-shift": lambda r, n: Rec(_at(_ix(n) + 1), r.c),
    "set-unshift": lambda r, n: Rec(_at(_ix(n) - 1), r.c),
    "set-swap01": lambda r, n: Rec(_SWAP01[n], r.c),
    "set-minus-c": lambda r, n: Rec(_at(_ix(n) - r.c), r.c),
    "set-reverse": lambda r, n: Rec(_REVERSE[n], r.c),
    "set-flag": lambda r, n: Rec(r.b, n != "b0"),
    "set-b-if-c": lambda r, n: Rec(n, r.c) if r.c else r,
    "set-const": lambda r, n: Rec("b0", r.c),
    "set-b-flip-on-b2": lambda r, n: Rec(n, r.c != (n == "b2")),
    "set-max": lambda r, n: Rec(max(r.b, n), r.c),
}

LAWFUL_LENS_NAMES = frozenset(
    {
        "field-b/set-b",
        "shift/set-unshift",
        "swap01/set-swap01",
        "b-plus-c/set-minus-c",
        "reverse/set-reverse",
    }
)

FIELD_B = lens(GETTERS["field-b"], SETTERS["set-b"])
IGNORING_LENS = lens(GETTERS["field-b"], SETTERS["ignore"])


def lens_candidates() -> list[Candidate]:
    """Every getter paired with every setter: 112 lenses ``Rec -> Store B3 Rec``."""
    return [
        Candidate(f"{g}/{s}", lens(GETTERS[g], SETTERS[s]))
        for g, s in itertools.product(GETTERS, SETTERS)
    ]


# -- biplates over short tuples ---------------------------------------------

TUPLES = tuple(t for n in range(3) for t in itertools.product(B3, repeat=n))


def _curry(n: int, done: Callable[[tuple], Any], prefix: tuple = ()) -> Any:
    if len(prefix) == n:
        return done(prefix)
    return lambda b: _curry(n, done, prefix + (b,))


def biplate(
    targets: Callable[[Any], Sequence[Any]], rebuild: Callable[[Any, tuple], Any]
) -> Callable[[Any], CartesianStore]:
    """Biplate from a target list and a same-length rebuild function."""

    def run(a: Any) -> CartesianStore:
        ts = tuple(targets(a))
        s: CartesianStore = Unit(_curry(len(ts), lambda new: rebuild(a, new)))
        for t in ts:
            s = Battery(s, t)
        return s

    return run


BIPLATES: dict[str, Callable[[Any], CartesianStore]] = {
    "all": biplate(lambda a: a, lambda a, new: new),
    "none": biplate(lambda a: (), lambda a, new: a),
    "first": biplate(lambda a: a[:1], lambda a, new: new + a[1:]),
    "last": biplate(lambda a: a[-1:], lambda a, new: a[:-1] + new),
    "reversed": biplate(lambda a: a[::-1], lambda a, new: new[::-1]),
    # unlawful: every position is overwritten with the one target
    "dup-on-set": biplate(lambda a: a[:1], lambda a, new: new * len(a)),
    # unlawful: the first element is targeted twice, the second copy wins
    "target-twice": biplate(lambda a: a[:1] * 2, lambda a, new: new[1:] + a[1:]),
    # unlawful: the setter drops every target but the first
    "drop-on-set": biplate(lambda a: a, lambda a, new: new[:1]),
}

LAWFUL_BIPLATE_NAMES = frozenset({"all", "none", "first", "last", "reversed"})


def biplate_candidates() -> list[Candidate]:
    return [Candidate(name, o) for name, o in BIPLATES.items()]


def lens_biplate_candidates() -> list[Candidate]:
    """Lens candidates injected into Biplates through ``single_store``."""
    return [Candidate(c.name, lens_to_biplate(c.optic)) for c in lens_candidates()]


