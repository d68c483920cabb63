"""Tokenizer for MiniC (.mc) source text."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import MiniCSyntaxError

KEYWORDS = {
    "void",
    "int",
    "if",
    "else",
    "while",
    "switch",
    "case",
    "default",
    "assert",
    "error",
    "halt",
    "return",
    "input",
    "input_array",
}

# Longest-match first for the two-character operators.
TWO_CHAR = ("<=", ">=", "==", "!=", "&&", "||")
ONE_CHAR = "+-*/%<>!=(){}[],;:"


@dataclass(frozen=True, slots=True)
class Token:
    kind: str  # 'int', 'ident', 'kw', 'op', 'eof'
    text: str
    line: int
    col: int


def tokenize(source: str) -> list[Token]:
    toks: list[Token] = []
    i, line, col = 0, 1, 1
    n = len(source)
    while i < n:
        c = source[i]
        if c == "\n":
            i += 1
            line += 1
            col = 1
            continue
        if c in " \t\r":
            i += 1
            col += 1
            continue
        if source.startswith("//", i):
            while i < n and source[i] != "\n":
                i += 1
            continue
        if c.isdigit():
            j = i
            while j < n and source[j].isdigit():
                j += 1
            toks.append(Token("int", source[i:j], line, col))
            col += j - i
            i = j
            continue
        if c.isalpha() or c == "_":
            j = i
            while j < n and (source[j].isalnum() or source[j] == "_"):
                j += 1
            text = source[i:j]
            toks.append(Token("kw" if text in KEYWORDS else "ident", text, line, col))
            col += j - i
            i = j
            continue
        two = source[i : i + 2]
        if two in TWO_CHAR:
            toks.append(Token("op", two, line, col))
            i += 2
            col += 2
            continue
        if c in ONE_CHAR:
            toks.append(Token("op", c, line, col))
            i += 1
            col += 1
            continue
        raise MiniCSyntaxError(f"unexpected character {c!r}", line, col)
    toks.append(Token("eof", "", line, col))
    return toks
