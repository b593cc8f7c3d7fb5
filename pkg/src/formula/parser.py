"""Concrete syntax: tokenizer and recursive descent parser

Precedence, tightest first: `!`, the term operators `^` and `v`, comparisons, `&`, `or`,
`->` (right associative), `<->`. Quantifiers, `min` and `max` extend over their parenthesised
body only. Inside `[...]` the tokenizer switches to parameter mode where `-` and `+` are
operators; outside, `-` may join name segments (`LZ-and-RZ`, `0-red`).
"""
import re
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple
from src.errors import ArityMismatch, FormulaSyntaxError, UnknownDefinition
from src.formula.ast import (
    Call,
    Const,
    Definition,
    Eq,
    Exists,
    Forall,
    Formula,
    Iff,
    Implies,
    Join,
    Leq,
    Lt,
    Max,
    Meet,
    Min,
    Neq,
    Not,
    Or,
    And,
    Param,
    ParamPattern,
    ParamRef,
    Term,
    Var,
)

KEYWORDS = {"forall", "exists", "min", "max", "or", "v", "def"}

_NAME = r"[A-Za-z_][A-Za-z0-9_']*(?:-[A-Za-z0-9_']+)*|[0-9]+(?:-[A-Za-z0-9_']+)+"
_FORMULA_TOKENS = re.compile(
    rf"""
    (?P<ws>\s+|\#[^\n]*)
    |(?P<name>{_NAME})
    |(?P<int>[0-9]+)
    |(?P<const>@[A-Za-z0-9_']+)
    |(?P<op><->|->|<=|>=|!=|:=|[<>=!&^()\[\],;])
    """,
    re.VERBOSE,
)
_PARAM_TOKENS = re.compile(
    r"""
    (?P<ws>\s+)
    |(?P<name>[A-Za-z_][A-Za-z0-9_]*)
    |(?P<int>[0-9]+)
    |(?P<op>>=|[\[\],+\-])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos, depth = 0, 0
    line, line_start = 1, 0
    while pos < len(text):
        pattern = _PARAM_TOKENS if depth else _FORMULA_TOKENS
        match = pattern.match(text, pos)
        col = pos - line_start + 1
        if match is None:
            raise FormulaSyntaxError(line, col, "a token", text[pos])
        kind, value = match.lastgroup, match.group()
        if kind != "ws":
            if kind == "name" and value in KEYWORDS and not depth:
                kind = "op"
            tokens.append(Token(kind, value, line, col))
            if value == "[":
                depth += 1
            elif value == "]":
                depth -= 1
        newlines = value.count("\n")
        if newlines:
            line += newlines
            line_start = pos + value.rindex("\n") + 1
        pos = match.end()
    col = pos - line_start + 1
    tokens.append(Token("eof", "", line, col))
    return tokens


class Parser:
    """Recursive descent over a token list

    Args:
        tokens: output of `tokenize`
        param_names: family parameter names allowed in call brackets (definition bodies)
    """

    def __init__(self, tokens: Sequence[Token], param_names: Sequence[str] = ()):
        self._tokens = tokens
        self._pos = 0
        self._param_names = set(param_names)
        self._furthest: Optional[FormulaSyntaxError] = None

    # Token helpers

    @property
    def _tok(self) -> Token:
        return self._tokens[self._pos]

    def _at(self, *texts: str) -> bool:
        tok = self._tok
        return tok.kind == "op" and tok.text in texts

    def _error(self, expected: str) -> FormulaSyntaxError:
        tok = self._tok
        err = FormulaSyntaxError(tok.line, tok.col, expected, tok.text or "end of input")
        if self._furthest is None or (tok.line, tok.col) > (self._furthest.line, self._furthest.col):
            self._furthest = err
        return err

    def _expect(self, text: str) -> Token:
        if not self._at(text):
            raise self._error(f"'{text}'")
        tok = self._tok
        self._pos += 1
        return tok

    def _name(self, what: str = "a name") -> str:
        tok = self._tok
        if tok.kind != "name":
            raise self._error(what)
        self._pos += 1
        return tok.text

    def _int(self) -> int:
        tok = self._tok
        if tok.kind != "int":
            raise self._error("an integer")
        self._pos += 1
        return int(tok.text)

    def expect_eof(self):
        if self._tok.kind != "eof":
            raise self._error("end of input")

    # Formulas

    def formula(self) -> Formula:
        left = self._implies()
        while self._at("<->"):
            self._pos += 1
            left = Iff(left, self._implies())
        return left

    def _implies(self) -> Formula:
        left = self._or()
        if self._at("->"):
            self._pos += 1
            return Implies(left, self._implies())
        return left

    def _or(self) -> Formula:
        left = self._and()
        while self._at("or"):
            self._pos += 1
            left = Or(left, self._and())
        return left

    def _and(self) -> Formula:
        left = self._unary()
        while self._at("&"):
            self._pos += 1
            left = And(left, self._unary())
        return left

    def _unary(self) -> Formula:
        if self._at("!"):
            self._pos += 1
            return Not(self._unary())
        return self._primary()

    def _primary(self) -> Formula:
        tok = self._tok
        if self._at("forall", "exists"):
            self._pos += 1
            names = [self._name("a variable")]
            while self._at(","):
                self._pos += 1
                names.append(self._name("a variable"))
            body = self._braced()
            return (Forall if tok.text == "forall" else Exists)(tuple(names), body)
        if self._at("min", "max"):
            self._pos += 1
            var = self._name("a variable")
            return (Min if tok.text == "min" else Max)(var, self._braced())
        if tok.kind == "name":
            nxt = self._tokens[self._pos + 1]
            if nxt.kind == "op" and nxt.text in ("(", "["):
                return self._call()
        if self._at("("):
            start = self._pos
            try:
                return self._comparison()
            except FormulaSyntaxError:
                self._pos = start
            return self._braced()
        return self._comparison()

    def _braced(self) -> Formula:
        self._expect("(")
        body = self.formula()
        self._expect(")")
        return body

    def _call(self) -> Call:
        name = self._name()
        params: Tuple[Param, ...] = ()
        if self._at("["):
            self._pos += 1
            params = [self._param()]
            while self._at(","):
                self._pos += 1
                params.append(self._param())
            self._expect("]")
            params = tuple(params)
        self._expect("(")
        args = [self.term()]
        while self._at(","):
            self._pos += 1
            args.append(self.term())
        self._expect(")")
        return Call(name, params, tuple(args))

    def _param(self) -> Param:
        tok = self._tok
        if tok.kind == "int":
            return self._int()
        if tok.kind == "name" and tok.text in self._param_names:
            self._pos += 1
            if self._at("+", "-"):
                sign = 1 if self._tok.text == "+" else -1
                self._pos += 1
                return ParamRef(tok.text, sign * self._int())
            return ParamRef(tok.text)
        raise self._error("an integer parameter")

    def _comparison(self) -> Formula:
        left = self.term()
        tok = self._tok
        if not self._at("=", "!=", "<=", "<", ">=", ">"):
            raise self._error("a comparison")
        self._pos += 1
        right = self.term()
        if tok.text == "=":
            return Eq(left, right)
        if tok.text == "!=":
            return Neq(left, right)
        if tok.text == "<=":
            return Leq(left, right)
        if tok.text == "<":
            return Lt(left, right)
        if tok.text == ">=":
            return Leq(right, left)
        return Lt(right, left)

    # Terms

    def term(self) -> Term:
        left = self._term_atom()
        while self._at("^", "v"):
            op = Meet if self._tok.text == "^" else Join
            self._pos += 1
            left = op(left, self._term_atom())
        return left

    def _term_atom(self) -> Term:
        tok = self._tok
        if tok.kind == "name":
            self._pos += 1
            return Var(tok.text)
        if tok.kind == "const":
            self._pos += 1
            return Const(tok.text[1:])
        if self._at("("):
            self._pos += 1
            inner = self.term()
            self._expect(")")
            return inner
        raise self._error("a term")

    # Definition files

    def definitions(self, source: str = "") -> List[Definition]:
        out = []
        while self._tok.kind != "eof":
            out.append(self._definition(source))
        return out

    def _definition(self, source: str) -> Definition:
        start = self._expect("def")
        name = self._name("a definition name")
        patterns = []
        if self._at("["):
            self._pos += 1
            patterns.append(self._pattern())
            while self._at(","):
                self._pos += 1
                patterns.append(self._pattern())
            self._expect("]")
        self._expect("(")
        formals = [self._name("a formal argument")]
        while self._at(","):
            self._pos += 1
            formals.append(self._name("a formal argument"))
        self._expect(")")
        self._expect(":=")
        self._param_names = {p.name for p in patterns if p.name}
        body = self.formula()
        self._param_names = set()
        self._expect(";")
        return Definition(name, tuple(patterns), tuple(formals), body, source, start.line)

    def _pattern(self) -> ParamPattern:
        tok = self._tok
        if tok.kind == "int":
            return ParamPattern(literal=self._int())
        name = self._name("a parameter")
        if self._at(">="):
            self._pos += 1
            return ParamPattern(name=name, minimum=self._int())
        return ParamPattern(name=name)


def check_calls(f, defs) -> None:
    """Raise UnknownDefinition / ArityMismatch for calls `defs` cannot resolve"""
    if isinstance(f, Call):
        if not defs.has(f.name, len(f.params)):
            raise UnknownDefinition(f.name)
        expected = defs.arity(f.name, len(f.params))
        if expected != len(f.args):
            raise ArityMismatch(f.name, expected, len(f.args))
        return
    for child in _children(f):
        check_calls(child, defs)


def _children(f):
    if isinstance(f, (Not, Forall, Exists, Min, Max)):
        return (f.body,)
    if isinstance(f, (And, Or, Implies, Iff)):
        return (f.left, f.right)
    return ()


def parse(text: str, defs=None, params: Sequence[str] = ()) -> Formula:
    """Parse a formula; calls are checked against `defs` when given

    `params` names the family parameters a rule body may use in call brackets.
    """
    parser = Parser(tokenize(text), params)
    try:
        f = parser.formula()
        parser.expect_eof()
    except FormulaSyntaxError as err:
        raise parser._furthest or err from None
    if defs is not None:
        check_calls(f, defs)
    return f


def parse_definitions(text: str, source: str = "") -> List[Definition]:
    parser = Parser(tokenize(text))
    try:
        return parser.definitions(source)
    except FormulaSyntaxError as err:
        raise parser._furthest or err from None
