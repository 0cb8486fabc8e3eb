"""Reference analyses written by direct structural recursion.

These walk dataclass fields reflectively and share no code with the plate
machinery, so they can serve as independent oracles for it.
"""

from __future__ import annotations

from dataclasses import fields, is_dataclass
from typing import Any, Iterator

from .ast import EAdd, SBlock, V, sort_of


def _subterms(term: Any) -> Iterator[Any]:
    if isinstance(term, SBlock):
        yield from term.stms
        return
    for f in fields(term):
        child = getattr(term, f.name)
        if is_dataclass(child):
            yield child


def count_nodes(term: Any) -> int:
    return 1 + sum(count_nodes(c) for c in _subterms(term))


def collect_vars(term: Any) -> list[str]:
    if isinstance(term, V):
        return [term.name]
    out: list[str] = []
    for c in _subterms(term):
        out.extend(collect_vars(c))
    return out


def preorder_nodes(term: Any) -> list[Any]:
    out = [term]
    for c in _subterms(term):
        out.extend(preorder_nodes(c))
    return out


def postorder_nodes(term: Any) -> list[Any]:
    out: list[Any] = []
    for c in _subterms(term):
        out.extend(postorder_nodes(c))
    out.append(term)
    return out


def same_sort_children(term: Any) -> list[Any]:
    """Immediate children sharing the sort of ``term``."""
    sort = sort_of(term)
    return [c for c in _subterms(term) if sort_of(c) == sort]


def expr_children(e: Any) -> list[Any]:
    if isinstance(e, EAdd):
        return [e.left, e.right]
    return []


def expr_grandchildren(e: Any) -> list[Any]:
    return [g for c in expr_children(e) for g in expr_children(c)]
