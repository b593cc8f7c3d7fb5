"""Named, integer-parameterised formula definitions

A definition file is a sequence of rules

    def Name[patterns](formals) := <formula> ;

Rules sharing a name and parameter count form one family. A parameter pattern is a literal
(`N[2]`), a guarded name (`N[k >= 3]`) or a bare name (any k >= 0). When a family is
instantiated the most literal matching rule wins, ties going to the rule declared first.
"""
import logging
from pathlib import Path
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple, Union
import networkx as nx
from src.errors import (
    DefinitionFileError,
    FormulaSyntaxError,
    LatfoError,
    ParameterOutOfRange,
    RecursionNotWellFounded,
    UnknownDefinition,
)
from src.formula.ast import (
    Binary,
    Call,
    Definition,
    Extremum,
    Formula,
    Not,
    ParamPattern,
    ParamRef,
    Quantifier,
)
from src.formula.parser import check_calls, parse_definitions

Key = Tuple[str, int]


def calls(f: Formula) -> Iterator[Call]:
    """Every Call node in f, left to right"""
    if isinstance(f, Call):
        yield f
    elif isinstance(f, (Not, Quantifier, Extremum)):
        yield from calls(f.body)
    elif isinstance(f, Binary):
        yield from calls(f.left)
        yield from calls(f.right)


def bind_params(f: Formula, binding: Dict[str, int]) -> Formula:
    """Replace parameter references in call brackets by their integer values"""
    if isinstance(f, Call):
        if not f.params:
            return f
        params = tuple(binding[p.name] + p.offset if isinstance(p, ParamRef) else p for p in f.params)
        return Call(f.name, params, f.args)
    if isinstance(f, Not):
        return Not(bind_params(f.body, binding))
    if isinstance(f, Quantifier):
        return type(f)(f.vars, bind_params(f.body, binding))
    if isinstance(f, Extremum):
        return type(f)(f.var, bind_params(f.body, binding))
    if isinstance(f, Binary):
        return type(f)(bind_params(f.left, binding), bind_params(f.right, binding))
    return f


class DefTable:
    """Immutable table of definition rules keyed by (name, number of parameters)

    Args:
        definitions: rules in declaration order
        check: validate free variables, call targets and well-founded recursion
    """

    def __init__(self, definitions: Iterable[Definition] = (), check: bool = True):
        self._log = logging.getLogger(self.__class__.__name__)
        self._rules: Dict[Key, List[Definition]] = {}
        for d in definitions:
            rules = self._rules.setdefault(d.key, [])
            if rules and len(rules[0].formals) != len(d.formals):
                raise DefinitionFileError(d.source, d.line, f"'{d.name}' rules disagree on arity")
            rules[:] = [r for r in rules if r.patterns != d.patterns] + [d]
        self._instances: Dict[Tuple[str, Tuple[int, ...]], Definition] = {}
        if check:
            self.validate()

    def __len__(self) -> int:
        return len(self._rules)

    def __iter__(self) -> Iterator[Definition]:
        for rules in self._rules.values():
            yield from rules

    def keys(self) -> List[Key]:
        return list(self._rules)

    def has(self, name: str, num_params: int = 0) -> bool:
        return (name, num_params) in self._rules

    def rules(self, name: str, num_params: int = 0) -> Tuple[Definition, ...]:
        try:
            return tuple(self._rules[(name, num_params)])
        except KeyError:
            raise UnknownDefinition(name) from None

    def arity(self, name: str, num_params: int = 0) -> int:
        return len(self.rules(name, num_params)[0].formals)

    def merged(self, definitions: Iterable[Definition]) -> "DefTable":
        """New table with `definitions` added; a rule with the same patterns replaces the old one"""
        return DefTable(list(self) + list(definitions))

    def instantiate(self, name: str, params: Sequence[int] = ()) -> Definition:
        """The rule for `name[params]` with its parameters bound, as a parameterless definition"""
        params = tuple(int(p) for p in params)
        cached = self._instances.get((name, params))
        if cached is not None:
            return cached
        candidates = sorted(
            enumerate(self.rules(name, len(params))),
            key=lambda item: (-sum(p.literal is not None for p in item[1].patterns), item[0]),
        )
        for _, rule in candidates:
            if all(p.matches(v) for p, v in zip(rule.patterns, params)):
                binding = {p.name: v for p, v in zip(rule.patterns, params) if p.name}
                patterns = tuple(ParamPattern(literal=v) for v in params)
                inst = Definition(name, patterns, rule.formals, bind_params(rule.body, binding), rule.source, rule.line)
                self._instances[(name, params)] = inst
                return inst
        raise ParameterOutOfRange(name, params)

    def validate(self):
        """Check every rule; errors are reported against the rule's file and line"""
        graph = nx.DiGraph()
        for d in self:
            graph.add_node(d.key)
            body_free = set(d.body.free)
            if body_free != set(d.formals):
                extra = sorted(body_free - set(d.formals)) or sorted(set(d.formals) - body_free)
                raise DefinitionFileError(d.source, d.line, f"'{d.name}': free/formal variable mismatch {extra}")
            declared = {p.name for p in d.patterns if p.name}
            try:
                check_calls(d.body, self)
            except LatfoError as err:
                raise DefinitionFileError(d.source, d.line, f"{type(err).__name__}: {err}") from err
            for call in calls(d.body):
                for p in call.params:
                    if isinstance(p, ParamRef) and p.name not in declared:
                        raise DefinitionFileError(d.source, d.line, f"undeclared parameter '{p.name}'")
                if call.key == d.key:
                    if not self._decreasing(d, call):
                        raise RecursionNotWellFounded(d.name)
                else:
                    graph.add_edge(d.key, call.key)
        try:
            cycle = nx.find_cycle(graph)
        except nx.NetworkXNoCycle:
            cycle = None
        if cycle:
            raise RecursionNotWellFounded(cycle[0][0][0])
        self._log.debug(f"Validated {len(self)} definitions")

    @staticmethod
    def _decreasing(d: Definition, call: Call) -> bool:
        """Self call whose parameters never grow and at least one strictly shrinks"""
        offsets = []
        for pattern, param in zip(d.patterns, call.params):
            if not isinstance(param, ParamRef) or param.name != pattern.name:
                return False
            offsets.append(param.offset)
        return all(o <= 0 for o in offsets) and any(o < 0 for o in offsets)


def read_definitions(path: Union[str, Path]) -> List[Definition]:
    path = Path(path)
    try:
        return parse_definitions(path.read_text(), path.name)
    except FormulaSyntaxError as err:
        raise DefinitionFileError(path.name, err.line, str(err)) from err


def load_definitions(paths: Iterable[Union[str, Path]], base: DefTable = None) -> DefTable:
    definitions = list(base) if base is not None else []
    for path in paths:
        definitions += read_definitions(path)
    return DefTable(definitions)
