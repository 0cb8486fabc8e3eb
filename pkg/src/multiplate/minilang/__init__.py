"""A four-sort statement/expression language used as the worked plate instance."""

from .ast import (
    SORTS,
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
from .codec import DecodeError, decode_ast, encode_ast, infer_sort
from .plate import MiniPlate
from .sexpr import SExprError, Symbol, parse_sexpr, print_sexpr

__all__ = [
    "SORTS",
    "DecodeError",
    "EAdd",
    "EInt",
    "EStm",
    "EVar",
    "MiniPlate",
    "SAss",
    "SBlock",
    "SDecl",
    "SExprError",
    "SReturn",
    "Symbol",
    "TFloat",
    "TInt",
    "V",
    "decode_ast",
    "encode_ast",
    "infer_sort",
    "parse_sexpr",
    "print_sexpr",
    "sort_of",
]
