# ============================================
# EVENTSYNC
# Program Text Parser and Printer
# ============================================

"""
Textual form of select-programs.

Grammar (whitespace insignificant):
    program := proc ('|' proc)*
    proc    := action | 'select' '(' action (',' action)* ')'
    action  := '!'? identifier

`select` is a keyword only when followed by `(`; a bare `select` is an
input action on a channel of that name.
"""

import logging
import re
from typing import List, NamedTuple

from eventsync.errors import ProgramSyntaxError
from eventsync.models.program import Action, Program, Select, SourceProc
from eventsync.utils.constants import SELECT_KEYWORD

logger = logging.getLogger(__name__)


# ============================================
# TOKENIZER
# ============================================

class Token(NamedTuple):
    kind: str
    text: str
    position: int


TOKEN_PATTERN = re.compile(
    r"(?P<ws>\s+)"
    r"|(?P<ident>[A-Za-z][A-Za-z0-9_]*)"
    r"|(?P<bang>!)"
    r"|(?P<bar>\|)"
    r"|(?P<lparen>\()"
    r"|(?P<rparen>\))"
    r"|(?P<comma>,)"
)

END = "end"


def tokenize(text: str) -> List[Token]:
    """Split program text into tokens, dropping whitespace."""
    tokens: List[Token] = []
    position = 0
    while position < len(text):
        match = TOKEN_PATTERN.match(text, position)
        if match is None:
            raise ProgramSyntaxError(f"Unexpected character {text[position]!r}", position)
        if match.lastgroup != "ws":
            tokens.append(Token(match.lastgroup, match.group(), position))
        position = match.end()
    tokens.append(Token(END, "", len(text)))
    return tokens


# ============================================
# PARSER
# ============================================

class _Parser:
    """Recursive-descent parser over a token list."""

    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def peek(self, offset: int = 1) -> Token:
        return self.tokens[min(self.index + offset, len(self.tokens) - 1)]

    def expect(self, kind: str, what: str) -> Token:
        token = self.current
        if token.kind != kind:
            found = "end of input" if token.kind == END else repr(token.text)
            raise ProgramSyntaxError(f"Expected {what}, found {found}", token.position)
        self.index += 1
        return token

    def program(self) -> Program:
        if self.current.kind == END:
            raise ProgramSyntaxError("Empty program", self.current.position)

        procs = [self.proc()]
        while self.current.kind == "bar":
            self.index += 1
            procs.append(self.proc())
        self.expect(END, "'|' or end of input")
        return Program(tuple(procs))

    def proc(self) -> SourceProc:
        token = self.current
        if (
            token.kind == "ident"
            and token.text == SELECT_KEYWORD
            and self.peek().kind == "lparen"
        ):
            self.index += 2
            actions = [self.action()]
            while self.current.kind == "comma":
                self.index += 1
                actions.append(self.action())
            self.expect("rparen", "',' or ')'")
            return Select(tuple(actions))
        return self.action()

    def action(self) -> Action:
        if self.current.kind == "bang":
            self.index += 1
            name = self.expect("ident", "channel name after '!'")
            return Action.output(name.text)
        name = self.expect("ident", "action")
        return Action.input(name.text)


def parse_program(text: str) -> Program:
    """
    Parse program text.

    Args:
        text: Program source, e.g. "select(!x,!y) | select(x)"

    Returns:
        Program: Parsed program, procs in source order

    Raises:
        ProgramSyntaxError: On malformed or empty input (carries position)
    """
    program = _Parser(text).program()
    logger.debug(f"Parsed program with {len(program.procs)} procs: {program}")
    return program


def format_program(program: Program) -> str:
    """
    Print a program in its canonical text form.

    Example:
        >>> format_program(parse_program("select( x ,  !z ) | y"))
        "select(x,!z) | y"
    """
    return str(program)
