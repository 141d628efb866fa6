"""Tokenizer for the ``.goals`` requirements DSL."""

from __future__ import annotations

from dataclasses import dataclass

PUNCT = {"{", "}", "(", ")", ":", ","}

WORD = "word"
STRING = "string"
EOF = "eof"


@dataclass(frozen=True)
class Token:
    kind: str  # WORD, STRING, EOF, or one of PUNCT
    text: str
    line: int
    column: int


class LexError(Exception):
    def __init__(self, message: str, line: int, column: int):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"{line}:{column}: {message}")


_ESCAPES = {'"': '"', "\\": "\\", "n": "\n", "t": "\t", "r": "\r"}


def lex(text: str) -> list[Token]:
    """Tokenize DSL source; raises :class:`LexError` on a malformed token."""
    tokens: list[Token] = []
    i, line, col = 0, 1, 1
    n = len(text)

    def advance(steps: int = 1) -> None:
        nonlocal i, line, col
        for _ in range(steps):
            if i < n and text[i] == "\n":
                line += 1
                col = 1
            else:
                col += 1
            i += 1

    while i < n:
        ch = text[i]
        if ch in " \t\r\n":
            advance()
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                advance()
            continue
        start_line, start_col = line, col
        if ch in PUNCT:
            tokens.append(Token(ch, ch, start_line, start_col))
            advance()
            continue
        if ch == '"':
            advance()
            parts: list[str] = []
            while True:
                if i >= n or text[i] == "\n":
                    raise LexError("unterminated string", start_line, start_col)
                c = text[i]
                if c == '"':
                    advance()
                    break
                if c == "\\":
                    advance()
                    if i >= n:
                        raise LexError("unterminated string", start_line, start_col)
                    esc = text[i]
                    if esc in _ESCAPES:
                        parts.append(_ESCAPES[esc])
                        advance()
                    elif esc == "u":
                        advance()
                        hexdigits = text[i : i + 4]
                        if len(hexdigits) != 4:
                            raise LexError("bad \\u escape", line, col)
                        try:
                            parts.append(chr(int(hexdigits, 16)))
                        except ValueError:
                            raise LexError("bad \\u escape", line, col) from None
                        advance(4)
                    else:
                        raise LexError(f"unknown escape \\{esc}", line, col)
                else:
                    parts.append(c)
                    advance()
            tokens.append(Token(STRING, "".join(parts), start_line, start_col))
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] in "_-"):
                j += 1
            word = text[i:j]
            advance(j - i)
            tokens.append(Token(WORD, word, start_line, start_col))
            continue
        raise LexError(f"unexpected character {ch!r}", start_line, start_col)

    tokens.append(Token(EOF, "", line, col))
    return tokens
