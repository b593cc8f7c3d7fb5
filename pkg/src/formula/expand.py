"""Macro expansion to core form and capture-avoiding substitution"""
import logging
from typing import Dict, Iterable, Optional
from src.errors import ArityMismatch, RecursionNotWellFounded, UnknownDefinition
from src.formula.ast import (
    And,
    Binary,
    Call,
    Compare,
    Const,
    Eq,
    Extremum,
    Forall,
    Formula,
    Implies,
    Leq,
    Lt,
    Min,
    Neq,
    Not,
    Quantifier,
    Term,
    Var,
    variables,
)

FRESH_NAMES = ("y", "z", "t", "u", "w", "s", "r", "q", "p")

LOGGER = logging.getLogger(__name__)


def fresh_var(avoid: Iterable[str]) -> str:
    avoid = set(avoid)
    for name in FRESH_NAMES:
        if name not in avoid:
            return name
    i = 1
    while f"y{i}" in avoid:
        i += 1
    return f"y{i}"


def subst_term(t: Term, mapping: Dict[str, Term]) -> Term:
    if isinstance(t, Var):
        return mapping.get(t.name, t)
    if isinstance(t, Const):
        return t
    left, right = subst_term(t.left, mapping), subst_term(t.right, mapping)
    if left is t.left and right is t.right:
        return t
    return type(t)(left, right)


def unfold_extremum(f: Extremum) -> Formula:
    """min v (phi) as phi & forall y (y < v -> !phi[v:=y]); max dually"""
    y = fresh_var(variables(f))
    below = Lt(Var(y), Var(f.var)) if isinstance(f, Min) else Lt(Var(f.var), Var(y))
    return And(f.body, Forall((y,), Implies(below, Not(subst(f.body, {f.var: Var(y)})))))


def subst(f: Formula, mapping: Dict[str, Term]) -> Formula:
    """Simultaneous substitution of terms for free variables, renaming binders to avoid capture"""
    mapping = {v: t for v, t in mapping.items() if v in f.free and t != Var(v)}
    if not mapping:
        return f
    if isinstance(f, Compare):
        return type(f)(subst_term(f.left, mapping), subst_term(f.right, mapping))
    if isinstance(f, Not):
        return Not(subst(f.body, mapping))
    if isinstance(f, Binary):
        return type(f)(subst(f.left, mapping), subst(f.right, mapping))
    if isinstance(f, Call):
        return Call(f.name, f.params, tuple(subst_term(a, mapping) for a in f.args))
    if isinstance(f, Quantifier):
        incoming = set().union(*(t.free for t in mapping.values()))
        avoid = variables(f.body) | incoming | set(mapping)
        local, new_vars = dict(mapping), []
        for v in f.vars:
            if v in incoming:
                w = fresh_var(avoid)
                avoid.add(w)
                local[v] = Var(w)
                new_vars.append(w)
            else:
                new_vars.append(v)
        return type(f)(tuple(new_vars), subst(f.body, local))
    if isinstance(f, Extremum):
        return _subst_extremum(f, mapping)
    raise TypeError(f"not a formula: {f!r}")


def _subst_extremum(f: Extremum, mapping: Dict[str, Term]) -> Formula:
    v = f.var
    others = {u: t for u, t in mapping.items() if u != v}
    captured = any(v in t.free for t in others.values())
    if v in mapping:
        target = mapping[v]
        if isinstance(target, Var) and not captured:
            reached = set().union(*(others.get(u, Var(u)).free for u in f.body.free if u != v))
            if target.name not in reached:
                return type(f)(target.name, subst(f.body, mapping))
        return subst(unfold_extremum(f), mapping)
    if captured:
        return subst(unfold_extremum(f), mapping)
    return type(f)(v, subst(f.body, others))


class Expander:
    """Rewrites sugar and calls into core form

    Expanded definition bodies are cached per (name, params), so repeated calls share one
    core-form subtree.
    """

    def __init__(self, defs=None):
        self._defs = defs
        self._bodies: Dict[tuple, tuple] = {}
        self._stack = []

    def expand(self, f: Formula) -> Formula:
        if isinstance(f, Compare):
            if isinstance(f, Lt):
                return And(Leq(f.left, f.right), Not(Eq(f.left, f.right)))
            if isinstance(f, Neq):
                return Not(Eq(f.left, f.right))
            return f
        if isinstance(f, Not):
            body = self.expand(f.body)
            return f if body is f.body else Not(body)
        if isinstance(f, Binary):
            left, right = self.expand(f.left), self.expand(f.right)
            return f if (left is f.left and right is f.right) else type(f)(left, right)
        if isinstance(f, Quantifier):
            body = self.expand(f.body)
            return f if body is f.body else type(f)(f.vars, body)
        if isinstance(f, Extremum):
            return self.expand(unfold_extremum(type(f)(f.var, self.expand(f.body))))
        if isinstance(f, Call):
            formals, body = self._definition(f.name, f.params)
            if len(formals) != len(f.args):
                raise ArityMismatch(f.name, len(formals), len(f.args))
            return subst(body, dict(zip(formals, f.args)))
        raise TypeError(f"not a formula: {f!r}")

    def _definition(self, name: str, params):
        if self._defs is None:
            raise UnknownDefinition(name)
        key = (name, tuple(params))
        cached = self._bodies.get(key)
        if cached is not None:
            return cached
        if key in self._stack:
            raise RecursionNotWellFounded(name)
        self._stack.append(key)
        try:
            d = self._defs.instantiate(name, params)
            entry = (d.formals, self.expand(d.body))
        finally:
            self._stack.pop()
        self._bodies[key] = entry
        LOGGER.debug(f"Expanded {name}{list(params) if params else ''}")
        return entry


def expand(f: Formula, defs=None, expander: Optional[Expander] = None) -> Formula:
    """Core form of f: only Eq, Leq, Not, And, Or, Implies, Iff, Forall, Exists remain"""
    return (expander or Expander(defs)).expand(f)


__all__ = ["expand", "subst", "subst_term", "fresh_var", "unfold_extremum", "Expander"]
