"""The four-sort statement/expression language."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union


@dataclass(frozen=True)
class V:
    name: str


@dataclass(frozen=True)
class TInt:
    pass


@dataclass(frozen=True)
class TFloat:
    pass


@dataclass(frozen=True)
class SDecl:
    typ: Typ
    var: V


@dataclass(frozen=True)
class SAss:
    var: V
    expr: Expr


@dataclass(frozen=True)
class SBlock:
    stms: tuple[Stm, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "stms", tuple(self.stms))


@dataclass(frozen=True)
class SReturn:
    expr: Expr


@dataclass(frozen=True)
class EStm:
    stm: Stm


@dataclass(frozen=True)
class EAdd:
    left: Expr
    right: Expr


@dataclass(frozen=True)
class EVar:
    var: V


@dataclass(frozen=True)
class EInt:
    value: int


Var = V
Typ = Union[TInt, TFloat]
Stm = Union[SDecl, SAss, SBlock, SReturn]
Expr = Union[EStm, EAdd, EVar, EInt]

SORTS = ("stm", "expr", "var", "typ")

CONSTRUCTORS: dict[str, tuple[type, ...]] = {
    "stm": (SDecl, SAss, SBlock, SReturn),
    "expr": (EStm, EAdd, EVar, EInt),
    "var": (V,),
    "typ": (TInt, TFloat),
}

_SORT_OF = {cls: sort for sort, classes in CONSTRUCTORS.items() for cls in classes}


def sort_of(term: object) -> str:
    try:
        return _SORT_OF[type(term)]
    except KeyError:
        raise TypeError(f"not a mini-language term: {term!r}") from None


INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


def wrap_int64(n: int) -> int:
    """Two's-complement wrap into the signed 64-bit range."""
    return (n - INT64_MIN) % 2**64 + INT64_MIN
