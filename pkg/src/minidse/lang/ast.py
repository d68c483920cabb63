"""AST node definitions for the MiniC source language.

Positions are carried for diagnostics but excluded from equality so that
parse -> pretty-print -> parse round trips compare equal.
"""
from __future__ import annotations

from dataclasses import dataclass, field

ARITH_OPS = ("+", "-", "*", "/", "%")
CMP_OPS = ("<", "<=", ">", ">=", "==", "!=")
BOOL_OPS = ("&&", "||")


@dataclass(frozen=True, slots=True)
class Pos:
    line: int
    col: int


def _pos_field():
    return field(default=None, compare=False, repr=False)


# --- expressions ---------------------------------------------------------


@dataclass(slots=True)
class IntLit:
    value: int
    pos: Pos | None = _pos_field()


@dataclass(slots=True)
class VarRef:
    name: str
    pos: Pos | None = _pos_field()


@dataclass(slots=True)
class ArrayRef:
    name: str
    index: Expr
    pos: Pos | None = _pos_field()


@dataclass(slots=True)
class CallExpr:
    name: str
    args: list[Expr]
    pos: Pos | None = _pos_field()


@dataclass(slots=True)
class InputCall:
    """input() -- a fresh symbolic scalar; only legal as a declaration initializer."""

    pos: Pos | None = _pos_field()


@dataclass(slots=True)
class InputArrayCall:
    """input_array(n) -- n fresh symbolic array cells; declaration initializer only."""

    length: int
    pos: Pos | None = _pos_field()


@dataclass(slots=True)
class Unary:
    op: str  # '-' or '!'
    operand: Expr
    pos: Pos | None = _pos_field()


@dataclass(slots=True)
class Binary:
    op: str
    left: Expr
    right: Expr
    pos: Pos | None = _pos_field()


Expr = IntLit | VarRef | ArrayRef | CallExpr | InputCall | InputArrayCall | Unary | Binary


# --- statements ----------------------------------------------------------


@dataclass(slots=True)
class VarDecl:
    name: str
    init: Expr | None
    pos: Pos | None = _pos_field()


@dataclass(slots=True)
class ArrayDecl:
    name: str
    length: int
    symbolic: bool  # True when initialized from input_array()
    pos: Pos | None = _pos_field()


@dataclass(slots=True)
class Assign:
    target: VarRef | ArrayRef
    value: Expr
    pos: Pos | None = _pos_field()


@dataclass(slots=True)
class If:
    cond: Expr
    then_body: list[Stmt]
    else_body: list[Stmt] | None
    pos: Pos | None = _pos_field()


@dataclass(slots=True)
class While:
    cond: Expr
    body: list[Stmt]
    pos: Pos | None = _pos_field()


@dataclass(slots=True)
class SwitchCase:
    value: int
    body: list[Stmt]
    pos: Pos | None = _pos_field()


@dataclass(slots=True)
class Switch:
    scrutinee: Expr
    cases: list[SwitchCase]
    default_body: list[Stmt] | None
    pos: Pos | None = _pos_field()


@dataclass(slots=True)
class CallStmt:
    name: str
    args: list[Expr]
    pos: Pos | None = _pos_field()


@dataclass(slots=True)
class Assert:
    cond: Expr
    pos: Pos | None = _pos_field()


@dataclass(slots=True)
class Error:
    pos: Pos | None = _pos_field()


@dataclass(slots=True)
class Halt:
    pos: Pos | None = _pos_field()


@dataclass(slots=True)
class Return:
    value: Expr | None
    pos: Pos | None = _pos_field()


Stmt = (
    VarDecl
    | ArrayDecl
    | Assign
    | If
    | While
    | Switch
    | CallStmt
    | Assert
    | Error
    | Halt
    | Return
)


@dataclass(slots=True)
class FunctionDef:
    name: str
    params: list[str]
    body: list[Stmt]
    returns_int: bool
    pos: Pos | None = _pos_field()


@dataclass(slots=True)
class Module:
    """Raw parse product: the function list before analysis/compilation."""

    functions: list[FunctionDef]


def walk_exprs(e: Expr):
    """Yield e and every subexpression."""
    yield e
    if isinstance(e, (ArrayRef,)):
        yield from walk_exprs(e.index)
    elif isinstance(e, CallExpr):
        for a in e.args:
            yield from walk_exprs(a)
    elif isinstance(e, Unary):
        yield from walk_exprs(e.operand)
    elif isinstance(e, Binary):
        yield from walk_exprs(e.left)
        yield from walk_exprs(e.right)
