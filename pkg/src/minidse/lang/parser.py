"""Recursive-descent parser producing the MiniC AST.

Grammar summary lives in docs/grammar.md.  Bodies of if/else/while/case are
brace-delimited blocks; `else if` is accepted as sugar for an else block
containing a single if.
"""
from __future__ import annotations

from . import ast
from .errors import MiniCSyntaxError
from .lexer import Token, tokenize

# Binary operator precedence, loosest first.
_PREC_LEVELS = [
    ("||",),
    ("&&",),
    ("==", "!="),
    ("<", "<=", ">", ">="),
    ("+", "-"),
    ("*", "/", "%"),
]


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.toks = tokens
        self.i = 0

    # --- token helpers ---

    def peek(self) -> Token:
        return self.toks[self.i]

    def next(self) -> Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def at(self, kind: str, text: str | None = None) -> bool:
        t = self.peek()
        return t.kind == kind and (text is None or t.text == text)

    def expect(self, kind: str, text: str | None = None) -> Token:
        t = self.peek()
        if not self.at(kind, text):
            want = text if text is not None else kind
            raise MiniCSyntaxError(f"expected {want!r}, found {t.text or t.kind!r}", t.line, t.col)
        return self.next()

    def pos(self) -> ast.Pos:
        t = self.peek()
        return ast.Pos(t.line, t.col)

    # --- grammar ---

    def parse_module(self) -> ast.Module:
        functions = []
        while not self.at("eof"):
            functions.append(self.parse_function())
        return ast.Module(functions)

    def parse_function(self) -> ast.FunctionDef:
        p = self.pos()
        if self.at("kw", "void"):
            self.next()
            returns_int = False
        elif self.at("kw", "int"):
            self.next()
            returns_int = True
        else:
            t = self.peek()
            raise MiniCSyntaxError("expected 'void' or 'int' function definition", t.line, t.col)
        name = self.expect("ident").text
        self.expect("op", "(")
        params: list[str] = []
        if not self.at("op", ")"):
            while True:
                self.expect("kw", "int")
                params.append(self.expect("ident").text)
                if self.at("op", ","):
                    self.next()
                    continue
                break
        self.expect("op", ")")
        body = self.parse_block()
        return ast.FunctionDef(name, params, body, returns_int, p)

    def parse_block(self) -> list[ast.Stmt]:
        self.expect("op", "{")
        stmts: list[ast.Stmt] = []
        while not self.at("op", "}"):
            stmts.append(self.parse_stmt())
        self.expect("op", "}")
        return stmts

    def parse_stmt(self) -> ast.Stmt:
        p = self.pos()
        t = self.peek()
        if t.kind == "kw":
            if t.text == "int":
                return self.parse_decl()
            if t.text == "if":
                return self.parse_if()
            if t.text == "while":
                self.next()
                self.expect("op", "(")
                cond = self.parse_expr()
                self.expect("op", ")")
                body = self.parse_block()
                return ast.While(cond, body, p)
            if t.text == "switch":
                return self.parse_switch()
            if t.text == "assert":
                self.next()
                self.expect("op", "(")
                cond = self.parse_expr()
                self.expect("op", ")")
                self.expect("op", ";")
                return ast.Assert(cond, p)
            if t.text == "error":
                self.next()
                self.expect("op", "(")
                self.expect("op", ")")
                self.expect("op", ";")
                return ast.Error(p)
            if t.text == "halt":
                self.next()
                self.expect("op", ";")
                return ast.Halt(p)
            if t.text == "return":
                self.next()
                value = None if self.at("op", ";") else self.parse_expr()
                self.expect("op", ";")
                return ast.Return(value, p)
            raise MiniCSyntaxError(f"unexpected keyword {t.text!r}", t.line, t.col)
        if t.kind == "ident":
            name = self.next().text
            if self.at("op", "("):
                self.next()
                args = self.parse_args()
                self.expect("op", ";")
                return ast.CallStmt(name, args, p)
            if self.at("op", "["):
                self.next()
                index = self.parse_expr()
                self.expect("op", "]")
                self.expect("op", "=")
                value = self.parse_expr()
                self.expect("op", ";")
                return ast.Assign(ast.ArrayRef(name, index, p), value, p)
            self.expect("op", "=")
            value = self.parse_expr()
            self.expect("op", ";")
            return ast.Assign(ast.VarRef(name, p), value, p)
        raise MiniCSyntaxError(f"unexpected token {t.text or t.kind!r}", t.line, t.col)

    def parse_decl(self) -> ast.Stmt:
        p = self.pos()
        self.expect("kw", "int")
        name = self.expect("ident").text
        if self.at("op", "["):
            self.next()
            length = None
            if self.at("int"):
                length = int(self.next().text)
            self.expect("op", "]")
            if self.at("op", "="):
                self.next()
                t = self.expect("kw", "input_array")
                self.expect("op", "(")
                n = int(self.expect("int").text)
                self.expect("op", ")")
                self.expect("op", ";")
                if length is not None and length != n:
                    raise MiniCSyntaxError(
                        f"array length {length} disagrees with input_array({n})", t.line, t.col
                    )
                return ast.ArrayDecl(name, n, True, p)
            self.expect("op", ";")
            if length is None:
                raise MiniCSyntaxError("array declaration needs a length", p.line, p.col)
            return ast.ArrayDecl(name, length, False, p)
        init = None
        if self.at("op", "="):
            self.next()
            init = self.parse_expr()
        self.expect("op", ";")
        return ast.VarDecl(name, init, p)

    def parse_if(self) -> ast.If:
        p = self.pos()
        self.expect("kw", "if")
        self.expect("op", "(")
        cond = self.parse_expr()
        self.expect("op", ")")
        then_body = self.parse_block()
        else_body = None
        if self.at("kw", "else"):
            self.next()
            if self.at("kw", "if"):
                else_body = [self.parse_if()]
            else:
                else_body = self.parse_block()
        return ast.If(cond, then_body, else_body, p)

    def parse_switch(self) -> ast.Switch:
        p = self.pos()
        self.expect("kw", "switch")
        self.expect("op", "(")
        scrutinee = self.parse_expr()
        self.expect("op", ")")
        self.expect("op", "{")
        cases: list[ast.SwitchCase] = []
        default_body = None
        while not self.at("op", "}"):
            if self.at("kw", "case"):
                cp = self.pos()
                self.next()
                neg = False
                if self.at("op", "-"):
                    self.next()
                    neg = True
                value = int(self.expect("int").text)
                if neg:
                    value = -value
                self.expect("op", ":")
                cases.append(ast.SwitchCase(value, self.parse_block(), cp))
            elif self.at("kw", "default"):
                if default_body is not None:
                    t = self.peek()
                    raise MiniCSyntaxError("duplicate default label", t.line, t.col)
                self.next()
                self.expect("op", ":")
                default_body = self.parse_block()
            else:
                t = self.peek()
                raise MiniCSyntaxError("expected 'case' or 'default'", t.line, t.col)
        self.expect("op", "}")
        return ast.Switch(scrutinee, cases, default_body, p)

    def parse_args(self) -> list[ast.Expr]:
        args: list[ast.Expr] = []
        if not self.at("op", ")"):
            while True:
                args.append(self.parse_expr())
                if self.at("op", ","):
                    self.next()
                    continue
                break
        self.expect("op", ")")
        return args

    # Precedence climbing over _PREC_LEVELS.
    def parse_expr(self, level: int = 0) -> ast.Expr:
        if level == len(_PREC_LEVELS):
            return self.parse_unary()
        ops = _PREC_LEVELS[level]
        left = self.parse_expr(level + 1)
        while self.peek().kind == "op" and self.peek().text in ops:
            p = self.pos()
            op = self.next().text
            right = self.parse_expr(level + 1)
            left = ast.Binary(op, left, right, p)
        return left

    def parse_unary(self) -> ast.Expr:
        t = self.peek()
        if t.kind == "op" and t.text in ("-", "!"):
            p = self.pos()
            self.next()
            return ast.Unary(t.text, self.parse_unary(), p)
        return self.parse_primary()

    def parse_primary(self) -> ast.Expr:
        t = self.peek()
        p = self.pos()
        if t.kind == "int":
            self.next()
            return ast.IntLit(int(t.text), p)
        if t.kind == "kw" and t.text == "input":
            self.next()
            self.expect("op", "(")
            self.expect("op", ")")
            return ast.InputCall(p)
        if t.kind == "kw" and t.text == "input_array":
            self.next()
            self.expect("op", "(")
            n = int(self.expect("int").text)
            self.expect("op", ")")
            return ast.InputArrayCall(n, p)
        if t.kind == "ident":
            name = self.next().text
            if self.at("op", "("):
                self.next()
                return ast.CallExpr(name, self.parse_args(), p)
            if self.at("op", "["):
                self.next()
                index = self.parse_expr()
                self.expect("op", "]")
                return ast.ArrayRef(name, index, p)
            return ast.VarRef(name, p)
        if t.kind == "op" and t.text == "(":
            self.next()
            e = self.parse_expr()
            self.expect("op", ")")
            return e
        raise MiniCSyntaxError(f"unexpected token {t.text or t.kind!r}", t.line, t.col)


def parse_module(source: str) -> ast.Module:
    return _Parser(tokenize(source)).parse_module()
