"""Parser for the braid expression grammar.

::

    braid  = "B" nat ":" ws items ;
    items  = { item ws } ;
    item   = letter | "(" items ")" "^" nat ;
    letter = "s" nat | "b(" nat "," nat ")" ;

Whitespace separates letters and ``#`` starts a comment running to the end of
the line. Input files hold one braid per line; blank and comment-only lines are
skipped.
"""

from __future__ import annotations

import re
from typing import Iterator

from .braidword import Band, BandWord


class BraidSyntaxError(ValueError):
    """Parse failure with a 1-based line/column location."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class BraidIndexError(BraidSyntaxError):
    """A band index outside 1 <= i < j <= n."""


class BraidExponentError(BraidSyntaxError):
    """A group repetition exponent below 1."""


_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+|\#[^\n]*)
    |(?P<band>b\(\s*(?P<bi>\d+)\s*,\s*(?P<bj>\d+)\s*\))
    |(?P<gen>s(?P<si>\d+))
    |(?P<open>\()
    |(?P<close>\)\s*\^\s*(?P<exp>-?\d+))
    |(?P<head>B(?P<n>\d+)\s*:)
    """,
    re.VERBOSE,
)


class _Parser:
    def __init__(self, text: str, line: int):
        self.text = text
        self.line = line
        self.pos = 0

    def error(self, message: str, pos: int | None = None, cls=BraidSyntaxError) -> BraidSyntaxError:
        pos = self.pos if pos is None else pos
        before = self.text[:pos]
        line = self.line + before.count("\n")
        column = pos - (before.rfind("\n") + 1) + 1
        return cls(message, line, column)

    def tokens(self) -> Iterator[tuple[int, re.Match]]:
        while self.pos < len(self.text):
            m = _TOKEN.match(self.text, self.pos)
            if m is None:
                ch = self.text[self.pos]
                if ch == ")":
                    raise self.error("group must be closed by ')^<k>'")
                raise self.error(f"unexpected character {ch!r}")
            start = self.pos
            self.pos = m.end()
            if m.lastgroup != "ws":
                yield start, m

    def parse(self) -> BandWord:
        toks = list(self.tokens())
        if not toks or toks[0][1].lastgroup != "head":
            at = toks[0][0] if toks else len(self.text)
            raise self.error("expected braid header 'B<n>:'", at)
        start, head = toks[0]
        n = int(head.group("n"))
        if n < 1:
            raise self.error("strand count must be >= 1", start, BraidIndexError)
        # stack of letter lists for open groups, with their start offsets
        stack: list[tuple[int, list[Band]]] = [(start, [])]
        for start, tok in toks[1:]:
            kind = tok.lastgroup
            if kind == "gen":
                i = int(tok.group("si"))
                stack[-1][1].append(self._band(i, i + 1, n, start))
            elif kind == "band":
                i, j = int(tok.group("bi")), int(tok.group("bj"))
                stack[-1][1].append(self._band(i, j, n, start))
            elif kind == "open":
                stack.append((start, []))
            elif kind == "close":
                if len(stack) == 1:
                    raise self.error("unbalanced ')'", start)
                k = int(tok.group("exp"))
                if k < 1:
                    raise self.error(f"exponent must be >= 1, got {k}", start, BraidExponentError)
                _, group = stack.pop()
                stack[-1][1].extend(group * k)
            else:
                raise self.error("unexpected second braid header", start)
        if len(stack) > 1:
            raise self.error("unclosed '('", stack[-1][0])
        return BandWord(n, tuple(stack[0][1]))

    def _band(self, i: int, j: int, n: int, at: int) -> Band:
        if i < 1 or i >= j or j > n:
            raise self.error(f"band ({i},{j}) invalid in B{n}", at, BraidIndexError)
        return Band(i, j)


def parse_braid(text: str, line: int = 1) -> BandWord:
    """Parse one braid expression such as ``"B5: (s1 s2 s3 s4)^3"``."""
    return _Parser(text, line).parse()


def parse_braid_lines(text: str) -> list[BandWord]:
    """Parse a file body: one braid per line, skipping blanks and comments."""
    words = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if not raw.split("#", 1)[0].strip():
            continue
        words.append(parse_braid(raw, line=lineno))
    return words
