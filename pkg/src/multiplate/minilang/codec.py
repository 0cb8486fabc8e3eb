"""Mapping between s-expressions and mini-language terms.

Constructors are written with their own names as heads, e.g.
``(SAss (V "x") (EInt 1))``.  Nullary constructors print as bare symbols
(``TInt``); ``SBlock`` is variadic, so ``(SBlock)`` is the empty block.
"""

from __future__ import annotations

from typing import Any

from .ast import (
    CONSTRUCTORS,
    INT64_MAX,
    INT64_MIN,
    EAdd,
    EInt,
    EStm,
    EVar,
    SAss,
    SBlock,
    SDecl,
    SReturn,
    TFloat,
    TInt,
    V,
    sort_of,
)
from .sexpr import SExpr, Symbol

_BY_NAME = {cls.__name__: (sort, cls) for sort, classes in CONSTRUCTORS.items() for cls in classes}

# child sorts per constructor; None marks a literal payload
_SIGNATURES: dict[type, tuple[str | None, ...]] = {
    SDecl: ("typ", "var"),
    SAss: ("var", "expr"),
    SReturn: ("expr",),
    EStm: ("stm",),
    EAdd: ("expr", "expr"),
    EVar: ("var",),
    EInt: (None,),
    V: (None,),
    TInt: (),
    TFloat: (),
}


class DecodeError(ValueError):
    def __init__(self, message: str, path: str):
        super().__init__(f"{message} at {path}")
        self.message = message
        self.path = path


def _head(s: SExpr) -> tuple[str | None, tuple]:
    if isinstance(s, Symbol):
        return str(s), ()
    if isinstance(s, tuple) and s and isinstance(s[0], Symbol):
        return str(s[0]), s[1:]
    return None, ()


def infer_sort(s: SExpr) -> str:
    """The sort named by the head constructor of ``s``."""
    name, _ = _head(s)
    if name is None or name not in _BY_NAME:
        raise DecodeError(f"cannot infer sort from {_describe(s)}", "<root>")
    return _BY_NAME[name][0]


def _describe(s: SExpr) -> str:
    if isinstance(s, tuple):
        return "empty list" if not s else "list without constructor head"
    if isinstance(s, Symbol):
        return f"symbol {s}"
    if isinstance(s, int):
        return f"integer {s}"
    return f"string {s!r}"


def decode_ast(s: SExpr, sort: str) -> Any:
    """Decode ``s`` as a term of ``sort`` (one of stm, expr, var, typ)."""
    if sort not in CONSTRUCTORS:
        raise ValueError(f"unknown sort {sort!r}")
    return _decode(s, sort, sort)


def _decode(s: SExpr, sort: str, path: str) -> Any:
    name, args = _head(s)
    if name is None:
        raise DecodeError(f"expected a term of sort {sort}, found {_describe(s)}", path)
    if name not in _BY_NAME:
        raise DecodeError(f"unknown constructor {name}", path)
    actual_sort, cls = _BY_NAME[name]
    if actual_sort != sort:
        raise DecodeError(f"expected a term of sort {sort}, found {actual_sort} constructor {name}", path)
    here = f"{path}/{name}"
    if cls is SBlock:
        return SBlock(tuple(_decode(x, "stm", f"{here}[{i}]") for i, x in enumerate(args, 1)))
    signature = _SIGNATURES[cls]
    if len(args) != len(signature):
        raise DecodeError(
            f"{name} takes {len(signature)} argument(s), got {len(args)}", here
        )
    children = []
    for i, (child_sort, x) in enumerate(zip(signature, args), 1):
        child_path = f"{here}[{i}]"
        if child_sort is not None:
            children.append(_decode(x, child_sort, child_path))
        elif cls is EInt:
            if not isinstance(x, int) or isinstance(x, bool):
                raise DecodeError(f"EInt expects an integer, found {_describe(x)}", child_path)
            if not INT64_MIN <= x <= INT64_MAX:
                raise DecodeError(f"integer {x} outside the signed 64-bit range", child_path)
            children.append(x)
        else:
            if not isinstance(x, str) or isinstance(x, Symbol):
                raise DecodeError(f"V expects a string, found {_describe(x)}", child_path)
            children.append(x)
    return cls(*children)


def encode_ast(term: Any) -> SExpr:
    sort_of(term)  # rejects non-terms
    head = Symbol(type(term).__name__)
    if isinstance(term, (TInt, TFloat)):
        return head
    if isinstance(term, SBlock):
        return (head, *(encode_ast(s) for s in term.stms))
    if isinstance(term, V):
        return (head, term.name)
    if isinstance(term, EInt):
        return (head, term.value)
    return (head, *(encode_ast(getattr(term, f)) for f in term.__dataclass_fields__))
