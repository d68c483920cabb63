"""Diagnostics raised by the MiniC front end."""
from __future__ import annotations


class MiniCError(Exception):
    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        loc = f" at {line}:{col}" if line is not None else ""
        super().__init__(f"{message}{loc}")
        self.message = message
        self.line = line
        self.col = col


class MiniCSyntaxError(MiniCError):
    pass


class MiniCSemanticError(MiniCError):
    pass
