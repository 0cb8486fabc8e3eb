"""Exhaustive enumeration of small mini-language terms.

Size counts nodes of all four sorts (``V "x"`` and ``TInt`` are one node
each; the string and integer payloads are not nodes).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Any, Sequence

from .ast import SORTS, EAdd, EInt, EStm, EVar, SAss, SBlock, SDecl, SReturn, TFloat, TInt, V

DEFAULT_NAMES = ("x", "y")
DEFAULT_INTS = (0, 1)


def terms(
    sort: str,
    max_size: int,
    names: Sequence[str] = DEFAULT_NAMES,
    ints: Sequence[int] = DEFAULT_INTS,
) -> list[Any]:
    """Every term of ``sort`` with at most ``max_size`` nodes, smallest first."""
    gen = _Generator(tuple(names), tuple(ints))
    return [t for n in range(1, max_size + 1) for t in gen.exact(sort, n)]


def universe(
    max_size: int,
    names: Sequence[str] = DEFAULT_NAMES,
    ints: Sequence[int] = DEFAULT_INTS,
) -> dict[str, list[Any]]:
    return {sort: terms(sort, max_size, names, ints) for sort in SORTS}


class _Generator:
    def __init__(self, names: tuple[str, ...], ints: tuple[int, ...]):
        self.names = names
        self.ints = ints
        self.exact = lru_cache(maxsize=None)(self._exact)
        self.blocks = lru_cache(maxsize=None)(self._blocks)

    def _exact(self, sort: str, n: int) -> tuple:
        if n < 1:
            return ()
        out: list[Any] = []
        if sort == "var":
            if n == 1:
                out += [V(s) for s in self.names]
        elif sort == "typ":
            if n == 1:
                out += [TInt(), TFloat()]
        elif sort == "expr":
            out += [EStm(s) for s in self.exact("stm", n - 1)]
            for k in range(1, n - 1):
                out += [EAdd(a, b) for a in self.exact("expr", k) for b in self.exact("expr", n - 1 - k)]
            out += [EVar(v) for v in self.exact("var", n - 1)]
            if n == 1:
                out += [EInt(i) for i in self.ints]
        elif sort == "stm":
            if n == 3:
                out += [SDecl(t, v) for t in self.exact("typ", 1) for v in self.exact("var", 1)]
            out += [SAss(v, e) for v in self.exact("var", 1) for e in self.exact("expr", n - 2)]
            out += [SBlock(ss) for ss in self.blocks(n - 1)]
            out += [SReturn(e) for e in self.exact("expr", n - 1)]
        else:
            raise ValueError(f"unknown sort {sort!r}")
        return tuple(out)

    def _blocks(self, n: int) -> tuple:
        """Statement sequences whose sizes sum to exactly ``n``."""
        if n == 0:
            return ((),)
        out = []
        for k in range(1, n + 1):
            for head in self.exact("stm", k):
                out += [(head, *rest) for rest in self.blocks(n - k)]
        return tuple(out)
