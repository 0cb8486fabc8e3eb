"""Sample programs."""

from .codec import decode_ast
from .sexpr import parse_sexpr

P0_TEXT = (
    '(SBlock (SDecl TInt (V "x")) (SAss (V "x") (EAdd (EVar (V "x")) (EInt 1)))'
    ' (SReturn (EVar (V "x"))))'
)
P0 = decode_ast(parse_sexpr(P0_TEXT), "stm")
