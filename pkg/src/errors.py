"""Exceptions raised by the latfo modules

Every error carries its structured fields as attributes so that callers (the cli, tests) can
inspect them without parsing messages.
"""
from typing import Sequence, Tuple


class LatfoError(Exception):
    """Base class for all domain errors"""


# Lattice construction


class CycleDetected(LatfoError):
    def __init__(self, path: Sequence[str]):
        self.path = tuple(path)
        super().__init__(f"cover relation is cyclic: {' -> '.join(self.path)}")


class NotALattice(LatfoError):
    NO_LUB = "no-least-upper-bound"
    NO_GLB = "no-greatest-lower-bound"

    def __init__(self, pair: Tuple[str, str], reason: str):
        self.pair = tuple(pair)
        self.reason = reason
        super().__init__(f"({pair[0]}, {pair[1]}): {reason}")


class DuplicateElement(LatfoError):
    def __init__(self, id_: str):
        self.id = id_
        super().__init__(f"element '{id_}' declared twice")


class MissingBound(LatfoError):
    def __init__(self, which: str):
        self.which = which
        super().__init__(f"no global {which}")


class UnknownElement(LatfoError):
    def __init__(self, ref: str):
        self.ref = ref
        super().__init__(f"no element or label '{ref}'")


class DuplicateLabel(LatfoError):
    def __init__(self, label: str, id_: str):
        self.label, self.id = label, id_
        super().__init__(f"label '{label}' on '{id_}' collides with another label")


class LatticeTooLarge(LatfoError):
    def __init__(self, size: int, limit: int):
        self.size, self.limit = size, limit
        super().__init__(f"{size} elements exceed the supported maximum {limit}")


class EmptyInterval(LatfoError):
    def __init__(self, a: str, b: str):
        self.a, self.b = a, b
        super().__init__(f"{a} is not below {b}")


class LatticeFileError(LatfoError):
    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


# Formula language


class FormulaSyntaxError(LatfoError):
    def __init__(self, line: int, col: int, expected: str, found: str = ""):
        self.line, self.col, self.expected, self.found = line, col, expected, found
        msg = f"{line}:{col}: expected {expected}"
        if found:
            msg += f", found '{found}'"
        super().__init__(msg)


class UnknownDefinition(LatfoError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"no definition named '{name}'")


class ArityMismatch(LatfoError):
    def __init__(self, name: str, expected: int, got: int):
        self.name, self.expected, self.got = name, expected, got
        super().__init__(f"'{name}' takes {expected} argument(s), got {got}")


class RecursionNotWellFounded(LatfoError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"recursion through '{name}' is not well-founded")


class ParameterOutOfRange(LatfoError):
    def __init__(self, family: str, params: Sequence[int]):
        self.family = family
        self.params = tuple(params)
        super().__init__(f"no rule of '{family}' accepts parameters {list(self.params)}")


class DefinitionFileError(LatfoError):
    def __init__(self, source: str, line: int, message: str):
        self.source, self.line = source, line
        super().__init__(f"{source}:{line}: {message}")


# Evaluation


class UnboundVariable(LatfoError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"variable '{name}' is not bound")


class UnknownConstant(LatfoError):
    def __init__(self, label: str):
        self.label = label
        super().__init__(f"lattice has no label '{label}'")


class WrongFreeVariableCount(LatfoError):
    def __init__(self, n: int):
        self.n = n
        super().__init__(f"expected exactly one free variable, got {n}")


class EvaluationTooLarge(LatfoError):
    def __init__(self, cells: int, limit: int):
        self.cells, self.limit = cells, limit
        super().__init__(f"relation table of {cells} cells exceeds the limit {limit}")


# Catalog


class UnknownFixture(LatfoError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"no fixture named '{name}'")


class FixtureParameterError(LatfoError):
    def __init__(self, name: str, message: str):
        self.name = name
        super().__init__(f"{name}: {message}")


# Semigroups


class InvalidTable(LatfoError):
    pass


class NonAssociative(LatfoError):
    def __init__(self, a: int, b: int, c: int):
        self.triple = (a, b, c)
        super().__init__(f"(ab)c != a(bc) for a={a}, b={b}, c={c}")


class UnknownSemigroup(LatfoError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"no named semigroup or basis '{name}'")


class IdentitySyntaxError(LatfoError):
    def __init__(self, text: str, message: str):
        self.text = text
        super().__init__(f"'{text}': {message}")


class CapacityError(LatfoError):
    def __init__(self, cells: int, limit: int):
        self.cells, self.limit = cells, limit
        super().__init__(f"{cells} assignments exceed the limit {limit}")


class SemigroupFileError(LatfoError):
    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


class EmptyContext(LatfoError):
    def __init__(self, objects: int, attributes: int):
        self.objects, self.attributes = objects, attributes
        super().__init__(f"a context needs at least one object and one attribute, got {objects} and {attributes}")
