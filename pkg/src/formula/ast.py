"""Abstract syntax of the first-order lattice language

Terms are built from variables, label constants, meet and join. Formulas are the usual
first-order connectives plus the sugar the lattice literature writes freely: strict order,
disequality, `min x (...)`/`max x (...)` and calls of named, integer-parameterised
definitions. `expand` (src.formula.expand) rewrites the sugar away; what is left is core form.

All nodes are frozen dataclasses, so formulas can share subtrees safely.
"""
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, List, Optional, Tuple, Union


def _merge(*groups: Iterable[str]) -> Tuple[str, ...]:
    out: List[str] = []
    for group in groups:
        for name in group:
            if name not in out:
                out.append(name)
    return tuple(out)


class Node:
    @cached_property
    def free(self) -> Tuple[str, ...]:
        """Free variables in order of first occurrence"""
        return self._free()

    def _free(self) -> Tuple[str, ...]:
        raise NotImplementedError


class Term(Node):
    pass


@dataclass(frozen=True)
class Var(Term):
    name: str

    def _free(self):
        return (self.name,)


@dataclass(frozen=True)
class Const(Term):
    label: str

    def _free(self):
        return ()


@dataclass(frozen=True)
class Meet(Term):
    left: Term
    right: Term

    def _free(self):
        return _merge(self.left.free, self.right.free)


@dataclass(frozen=True)
class Join(Term):
    left: Term
    right: Term

    def _free(self):
        return _merge(self.left.free, self.right.free)


class Formula(Node):
    pass


@dataclass(frozen=True)
class Compare(Formula):
    left: Term
    right: Term

    def _free(self):
        return _merge(self.left.free, self.right.free)


class Eq(Compare):
    pass


class Leq(Compare):
    pass


class Lt(Compare):
    pass


class Neq(Compare):
    pass


@dataclass(frozen=True)
class Not(Formula):
    body: Formula

    def _free(self):
        return self.body.free


@dataclass(frozen=True)
class Binary(Formula):
    left: Formula
    right: Formula

    def _free(self):
        return _merge(self.left.free, self.right.free)


class And(Binary):
    pass


class Or(Binary):
    pass


class Implies(Binary):
    pass


class Iff(Binary):
    pass


@dataclass(frozen=True)
class Quantifier(Formula):
    vars: Tuple[str, ...]
    body: Formula

    def _free(self):
        return tuple(v for v in self.body.free if v not in self.vars)


class Forall(Quantifier):
    pass


class Exists(Quantifier):
    pass


@dataclass(frozen=True)
class Extremum(Formula):
    """`min var (body)`: the minimal elements, in `var`, of the set body defines"""

    var: str
    body: Formula

    def _free(self):
        return _merge((self.var,), self.body.free)


class Min(Extremum):
    pass


class Max(Extremum):
    pass


@dataclass(frozen=True)
class ParamRef:
    """Family parameter `name + offset` inside a definition body"""

    name: str
    offset: int = 0

    def __str__(self):
        if self.offset > 0:
            return f"{self.name}+{self.offset}"
        if self.offset < 0:
            return f"{self.name}-{-self.offset}"
        return self.name


Param = Union[int, ParamRef]


@dataclass(frozen=True)
class Call(Formula):
    name: str
    params: Tuple[Param, ...]
    args: Tuple[Term, ...]

    def _free(self):
        return _merge(*(arg.free for arg in self.args))

    @property
    def key(self) -> Tuple[str, int]:
        return (self.name, len(self.params))


@dataclass(frozen=True)
class ParamPattern:
    """One parameter slot of a definition rule: a literal, or a name with a lower bound"""

    name: Optional[str] = None
    literal: Optional[int] = None
    minimum: int = 0

    def matches(self, value: int) -> bool:
        if self.literal is not None:
            return value == self.literal
        return value >= self.minimum

    def __str__(self):
        if self.literal is not None:
            return str(self.literal)
        return f"{self.name}>={self.minimum}" if self.minimum else self.name


@dataclass(frozen=True)
class Definition:
    name: str
    patterns: Tuple[ParamPattern, ...]
    formals: Tuple[str, ...]
    body: Formula
    source: str = ""
    line: int = 0

    @property
    def key(self) -> Tuple[str, int]:
        return (self.name, len(self.patterns))

    @property
    def signature(self) -> str:
        params = f"[{', '.join(str(p) for p in self.patterns)}]" if self.patterns else ""
        return f"{self.name}{params}({', '.join(self.formals)})"


CORE_TYPES = (Eq, Leq, Not, And, Or, Implies, Iff, Forall, Exists)


def free_vars(f: Node) -> List[str]:
    return list(f.free)


def variables(f: Node) -> set:
    """Every variable name occurring in f, free or bound"""
    if isinstance(f, Var):
        return {f.name}
    if isinstance(f, Const):
        return set()
    if isinstance(f, (Meet, Join, Compare, Binary)):
        return variables(f.left) | variables(f.right)
    if isinstance(f, Not):
        return variables(f.body)
    if isinstance(f, Quantifier):
        return set(f.vars) | variables(f.body)
    if isinstance(f, Extremum):
        return {f.var} | variables(f.body)
    if isinstance(f, Call):
        return set().union(*(variables(arg) for arg in f.args)) if f.args else set()
    raise TypeError(f"not a formula node: {f!r}")


def is_core(f: Node) -> bool:
    if isinstance(f, Term):
        return True
    if not isinstance(f, CORE_TYPES):
        return False
    if isinstance(f, (Eq, Leq)):
        return True
    if isinstance(f, Not):
        return is_core(f.body)
    if isinstance(f, Binary):
        return is_core(f.left) and is_core(f.right)
    return is_core(f.body)


def formula_size(f: Node) -> int:
    """Number of non-leaf nodes, one per quantified variable"""
    if isinstance(f, (Var, Const)):
        return 0
    if isinstance(f, (Meet, Join, Compare, Binary)):
        return 1 + formula_size(f.left) + formula_size(f.right)
    if isinstance(f, Not):
        return 1 + formula_size(f.body)
    if isinstance(f, Quantifier):
        return len(f.vars) + formula_size(f.body)
    if isinstance(f, Extremum):
        return 1 + formula_size(f.body)
    if isinstance(f, Call):
        return 1 + sum(formula_size(arg) for arg in f.args)
    raise TypeError(f"not a formula node: {f!r}")
