"""Truth of formulas over a finite lattice

Every subformula is evaluated once, as a boolean relation table over its own free variables:
an array with one axis of length n per variable, the variables in sorted order. Connectives
broadcast, quantifiers reduce axes and `min`/`max` are a single matrix product against the
strict order. Calls are evaluated through one table per instantiated definition, indexed by
the argument terms, so nothing is ever expanded into core form here.
"""
import logging
from typing import Dict, Mapping, Optional, Sequence, Tuple, Union
import numpy as np
from src.errors import (
    ArityMismatch,
    EvaluationTooLarge,
    UnboundVariable,
    UnknownConstant,
    UnknownDefinition,
    WrongFreeVariableCount,
)
from src.formula.ast import (
    And,
    Binary,
    Call,
    Compare,
    Const,
    Eq,
    Extremum,
    Formula,
    Forall,
    Iff,
    Implies,
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
from src.lattice.base import Lattice, Subset

DEFAULT_MAX_CELLS = 2 ** 24

Environment = Mapping[str, Union[int, str]]
Table = Tuple[Tuple[str, ...], np.ndarray]


class Evaluator:
    """Evaluates formulas over one lattice, memoising subformula tables

    Args:
        lattice: the structure
        defs: DefTable resolving calls, None when formulas contain no calls
        max_cells: largest relation table (n ** #free variables) allowed for a subformula
    """

    def __init__(self, lattice: Lattice, defs=None, max_cells: int = DEFAULT_MAX_CELLS):
        self._log = logging.getLogger(self.__class__.__name__)
        self.lattice = lattice
        self._defs = defs
        self._max_cells = max_cells
        n = len(lattice)
        self._strict = lattice.leq & ~np.eye(n, dtype=bool)
        # Keyed by id(); the node is kept alongside so the id stays valid.
        self._memo: Dict[int, Tuple[Formula, Table]] = {}
        self._calls: Dict[Tuple[str, Tuple[int, ...]], Tuple[Tuple[str, ...], np.ndarray]] = {}

    def table(self, f: Formula) -> Table:
        """(sorted free variables of f, boolean array with one axis per variable)"""
        cached = self._memo.get(id(f))
        if cached is not None and cached[0] is f:
            return cached[1]
        result = self._table(f)
        self._memo[id(f)] = (f, result)
        return result

    def relation(self, f: Formula, variables: Sequence[str]) -> np.ndarray:
        """Table of f with axes in the order of `variables`, which must cover its free variables"""
        names, arr = self.table(f)
        variables = tuple(variables)
        missing = [v for v in names if v not in variables]
        if missing:
            raise UnboundVariable(missing[0])
        extra = tuple(v for v in variables if v not in names)
        full_names = names + extra
        arr = arr.reshape(arr.shape + (1,) * len(extra))
        arr = np.broadcast_to(arr, (len(self.lattice),) * len(full_names))
        return np.transpose(arr, [full_names.index(v) for v in variables])

    def eval(self, f: Formula, env: Optional[Environment] = None) -> bool:
        env = env or {}
        for v in f.free:
            if v not in env:
                raise UnboundVariable(v)
        names, arr = self.table(f)
        return bool(arr[tuple(self.lattice.element(env[v]) for v in names)])

    def defined_set(self, f: Formula) -> Subset:
        if len(f.free) != 1:
            raise WrongFreeVariableCount(len(f.free))
        _, arr = self.table(f)
        return frozenset(int(i) for i in np.flatnonzero(arr))

    def _check_size(self, names: Sequence[str]):
        cells = len(self.lattice) ** len(names)
        if cells > self._max_cells:
            raise EvaluationTooLarge(cells, self._max_cells)

    def _lift(self, table: Table, names: Tuple[str, ...]) -> np.ndarray:
        """Reshape a child table so it broadcasts against the axes `names` (a sorted superset)"""
        child_names, arr = table
        n = len(self.lattice)
        return arr.reshape([n if v in child_names else 1 for v in names])

    def _full(self, arr: np.ndarray, names: Tuple[str, ...]) -> np.ndarray:
        return np.broadcast_to(arr, (len(self.lattice),) * len(names))

    def term(self, t: Term, names: Tuple[str, ...]) -> np.ndarray:
        """Integer array of the values of t, broadcastable over the axes `names`"""
        if isinstance(t, Var):
            n = len(self.lattice)
            shape = [1] * len(names)
            shape[names.index(t.name)] = n
            return np.arange(n).reshape(shape)
        if isinstance(t, Const):
            index = self.lattice.labels.get(t.label)
            if index is None:
                raise UnknownConstant(t.label)
            return np.array(index).reshape((1,) * len(names))
        table = self.lattice.meet if isinstance(t, Meet) else self.lattice.join
        return table[self.term(t.left, names), self.term(t.right, names)]

    def _table(self, f: Formula) -> Table:
        names = tuple(sorted(f.free))
        self._check_size(names)
        if isinstance(f, Compare):
            left, right = self.term(f.left, names), self.term(f.right, names)
            if isinstance(f, Eq):
                arr = left == right
            elif isinstance(f, Neq):
                arr = left != right
            elif isinstance(f, Leq):
                arr = self.lattice.leq[left, right]
            elif isinstance(f, Lt):
                arr = self._strict[left, right]
            return names, self._full(arr, names)
        if isinstance(f, Not):
            return names, ~self.table(f.body)[1]
        if isinstance(f, Binary):
            left = self._lift(self.table(f.left), names)
            right = self._lift(self.table(f.right), names)
            if isinstance(f, And):
                arr = left & right
            elif isinstance(f, Or):
                arr = left | right
            elif isinstance(f, Implies):
                arr = ~left | right
            elif isinstance(f, Iff):
                arr = left == right
            return names, self._full(arr, names)
        if isinstance(f, Quantifier):
            body_names, arr = self.table(f.body)
            axes = tuple(i for i, v in enumerate(body_names) if v in f.vars)
            if axes:
                arr = arr.all(axis=axes) if isinstance(f, Forall) else arr.any(axis=axes)
            return names, np.asarray(arr)
        if isinstance(f, Extremum):
            return names, self._extremum(f, names)
        if isinstance(f, Call):
            return names, self._call(f, names)
        raise TypeError(f"not a formula: {f!r}")

    def _extremum(self, f: Extremum, names: Tuple[str, ...]) -> np.ndarray:
        """Satisfiers of the body with no strictly smaller (larger) satisfier in the same context"""
        axis = names.index(f.var)
        body = np.moveaxis(self._full(self._lift(self.table(f.body), names), names), axis, -1)
        order = self._strict if isinstance(f, Min) else self._strict.T
        # beaten[..., v] iff some y with body[..., y] lies strictly below (above) v
        beaten = body.astype(np.float32) @ order.astype(np.float32) > 0
        return np.moveaxis(body & ~beaten, -1, axis)

    def _call(self, f: Call, names: Tuple[str, ...]) -> np.ndarray:
        rel = self.call_table(f.name, f.params)
        if rel.ndim != len(f.args):
            raise ArityMismatch(f.name, rel.ndim, len(f.args))
        args = tuple(self.term(a, names) for a in f.args)
        return self._full(rel[args], names)

    def call_table(self, name: str, params: Sequence[int] = ()) -> np.ndarray:
        """Relation defined by `name[params]`, one axis per formal in declaration order"""
        key = (name, tuple(params))
        cached = self._calls.get(key)
        if cached is not None:
            return cached[1]
        if self._defs is None:
            raise UnknownDefinition(name)
        d = self._defs.instantiate(name, params)
        rel = self.relation(d.body, d.formals)
        self._calls[key] = (d.formals, rel)
        self._log.debug(f"Tabulated {d.signature} on '{self.lattice.name}'")
        return rel


def evaluate(L: Lattice, f: Formula, env: Optional[Environment] = None, defs=None) -> bool:
    """Truth of f in L under env (variable -> element index, id or label)"""
    return Evaluator(L, defs).eval(f, env)


def defined_set(L: Lattice, f: Formula, defs=None) -> Subset:
    """Elements of L satisfying f, which must have exactly one free variable"""
    return Evaluator(L, defs).defined_set(f)


def relation(L: Lattice, f: Formula, variables: Sequence[str], defs=None) -> np.ndarray:
    return Evaluator(L, defs).relation(f, variables)
