"""Canonical text form of formulas, re-parseable by src.formula.parser"""
from src.formula.ast import (
    And,
    Call,
    Compare,
    Const,
    Definition,
    Eq,
    Extremum,
    Forall,
    Formula,
    Iff,
    Implies,
    Join,
    Leq,
    Lt,
    Meet,
    Min,
    Neq,
    Not,
    Or,
    Quantifier,
    Term,
    Var,
)

_IFF, _IMPLIES, _OR, _AND, _ATOM = 1, 2, 3, 4, 5
_COMPARE_OPS = {Eq: "=", Neq: "!=", Leq: "<=", Lt: "<"}


def format_term(t: Term) -> str:
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Const):
        return f"@{t.label}"
    op = "^" if isinstance(t, Meet) else "v"
    left = format_term(t.left)
    if isinstance(t.left, (Meet, Join)) and type(t.left) is not type(t):
        left = f"({left})"
    right = format_term(t.right)
    if isinstance(t.right, (Meet, Join)):
        right = f"({right})"
    return f"{left} {op} {right}"


def _render(f: Formula):
    if isinstance(f, Compare):
        return f"{format_term(f.left)} {_COMPARE_OPS[type(f)]} {format_term(f.right)}", _ATOM
    if isinstance(f, Not):
        text, prec = _render(f.body)
        if prec < _ATOM or isinstance(f.body, Compare):
            return f"!({text})", _ATOM
        return f"!{text}", _ATOM
    if isinstance(f, And):
        return f"{_wrap(f.left, _AND)} & {_wrap(f.right, _ATOM)}", _AND
    if isinstance(f, Or):
        return f"{_wrap(f.left, _OR)} or {_wrap(f.right, _AND)}", _OR
    if isinstance(f, Implies):
        return f"{_wrap(f.left, _OR)} -> {_wrap(f.right, _OR)}", _IMPLIES
    if isinstance(f, Iff):
        return f"{_wrap(f.left, _IFF)} <-> {_wrap(f.right, _IMPLIES)}", _IFF
    if isinstance(f, Quantifier):
        word = "forall" if isinstance(f, Forall) else "exists"
        return f"{word} {', '.join(f.vars)} ( {format_formula(f.body)} )", _ATOM
    if isinstance(f, Extremum):
        word = "min" if isinstance(f, Min) else "max"
        return f"{word} {f.var} ( {format_formula(f.body)} )", _ATOM
    if isinstance(f, Call):
        params = f"[{', '.join(str(p) for p in f.params)}]" if f.params else ""
        return f"{f.name}{params}({', '.join(format_term(a) for a in f.args)})", _ATOM
    raise TypeError(f"not a formula: {f!r}")


def _wrap(f: Formula, min_prec: int) -> str:
    text, prec = _render(f)
    return f"({text})" if prec < min_prec else text


def format_formula(f: Formula) -> str:
    """Canonical text; parse(format_formula(f)) == f"""
    return _render(f)[0]


def format_definition(d: Definition) -> str:
    return f"def {d.signature} := {format_formula(d.body)} ;"
