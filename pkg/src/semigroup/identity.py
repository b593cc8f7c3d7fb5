"""Semigroup identities u = v and w = 0, checked by exhausting assignments

Words are written as letters with optional exponents and implicit concatenation: `x^2y`,
`xyx`. A right-hand side `0` makes the identity zero-reduced: w = 0 holds in S when every
value of w is a two-sided zero of S, that is wx = xw = w for a letter x not in w.
"""
import logging
import re
import string
from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union
import numpy as np
from src.errors import CapacityError, IdentitySyntaxError, ParameterOutOfRange, UnknownSemigroup
from src.semigroup.base import MAX_ASSIGNMENTS, Semigroup, zero_mask

Word = Tuple[str, ...]

_FACTOR = re.compile(r"([a-z])(?:\^(\d+))?")

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class Equation:
    left: Word
    right: Word

    def __str__(self):
        return f"{format_word(self.left)} = {format_word(self.right)}"


@dataclass(frozen=True)
class ZeroReduced:
    word: Word

    def __str__(self):
        return f"{format_word(self.word)} = 0"


Identity = Union[Equation, ZeroReduced]


def parse_word(text: str) -> Word:
    compact = "".join(text.split())
    if not compact:
        raise IdentitySyntaxError(text, "empty word")
    out: List[str] = []
    pos = 0
    while pos < len(compact):
        match = _FACTOR.match(compact, pos)
        if match is None:
            raise IdentitySyntaxError(text, f"unexpected '{compact[pos]}' at offset {pos}")
        letter, exponent = match.groups()
        power = int(exponent) if exponent is not None else 1
        if power < 1:
            raise IdentitySyntaxError(text, f"exponent of '{letter}' must be positive")
        out.extend([letter] * power)
        pos = match.end()
    return tuple(out)


def parse_identity(text: str) -> Identity:
    sides = text.split("=")
    if len(sides) != 2:
        raise IdentitySyntaxError(text, "expected exactly one '='")
    left, right = sides
    if right.strip() == "0":
        return ZeroReduced(parse_word(left))
    return Equation(parse_word(left), parse_word(right))


def format_word(w: Word) -> str:
    out = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        out.append(w[i] if j - i == 1 else f"{w[i]}^{j - i}")
        i = j
    return "".join(out)


def letters(w: Word) -> Tuple[str, ...]:
    """Distinct letters in order of first occurrence"""
    return tuple(dict.fromkeys(w))


def occurrences(w: Word, x: str) -> int:
    return w.count(x)


def reverse(w: Word) -> Word:
    return tuple(reversed(w))


def identity_letters(identity: Identity) -> Tuple[str, ...]:
    if isinstance(identity, ZeroReduced):
        return letters(identity.word)
    return letters(identity.left + identity.right)


def dual_identity(identity: Identity) -> Identity:
    if isinstance(identity, ZeroReduced):
        return ZeroReduced(reverse(identity.word))
    return Equation(reverse(identity.left), reverse(identity.right))


def _values(S: Semigroup, w: Word, axes: Sequence[str]) -> np.ndarray:
    """Value of w under every assignment, one array axis per letter of `axes`"""
    n = len(S)
    k = len(axes)

    def axis(letter: str) -> np.ndarray:
        shape = [1] * k
        shape[axes.index(letter)] = n
        return np.arange(n).reshape(shape)

    value = axis(w[0])
    for letter in w[1:]:
        value = S.table[value, axis(letter)]
    return np.broadcast_to(value, (n,) * k)


def satisfies(S: Semigroup, identity: Identity, max_assignments: int = MAX_ASSIGNMENTS) -> bool:
    """Whether the identity holds for every assignment of its letters in S

    Raises:
        CapacityError: |S| ** letters exceeds `max_assignments`
    """
    axes = identity_letters(identity)
    cells = len(S) ** len(axes)
    if cells > max_assignments:
        raise CapacityError(cells, max_assignments)
    if isinstance(identity, ZeroReduced):
        return bool(zero_mask(S.table)[_values(S, identity.word, axes)].all())
    return bool((_values(S, identity.left, axes) == _values(S, identity.right, axes)).all())


def satisfies_basis(S: Semigroup, identities: Sequence[Identity], max_assignments: int = MAX_ASSIGNMENTS) -> bool:
    return all(satisfies(S, identity, max_assignments) for identity in identities)


def _parse_all(*texts: str) -> List[Identity]:
    return [parse_identity(text) for text in texts]


def _power(x: str, k: int) -> str:
    return x if k == 1 else f"{x}^{k}"


def basis(name: str, *params: int) -> List[Identity]:
    """Identity basis of a named variety

    SL, LZ, RZ, ZM, COM, P, LRB, RRB and I take no parameters; A (A_n, n >= 1), N (N_k,
    1 <= k <= 26) and C (C_m, m >= 0) take one.
    """
    fixed = {
        "SL": ("x^2 = x", "xy = yx"),
        "LZ": ("xy = x",),
        "RZ": ("xy = y",),
        "ZM": ("xy = 0",),
        "COM": ("xy = yx",),
        "P": ("xy = x^2y", "x^2y^2 = y^2x^2"),
        "LRB": ("x^2 = x", "xyx = xy"),
        "RRB": ("x^2 = x", "xyx = yx"),
        "I": ("x^2 = x",),
    }
    if name in fixed:
        if params:
            raise ParameterOutOfRange(name, params)
        return _parse_all(*fixed[name])
    if name not in ("A", "N", "C"):
        raise UnknownSemigroup(name)
    if len(params) != 1:
        raise ParameterOutOfRange(name, params)
    (k,) = params
    if name == "A":
        if k < 1:
            raise ParameterOutOfRange(name, params)
        return _parse_all(f"{_power('x', k)}y = y", "xy = yx")
    if name == "N":
        if not 1 <= k <= len(string.ascii_lowercase):
            raise ParameterOutOfRange(name, params)
        return _parse_all("x^2 = 0", "xy = yx", f"{string.ascii_lowercase[:k]} = 0")
    if k < 0:
        raise ParameterOutOfRange(name, params)
    if k == 0:
        # C_0 is the trivial variety
        return _parse_all("x = y")
    return _parse_all(f"{_power('x', k)} = x^{k + 1}", "xy = yx")


def parse_basis(text: str) -> List[Identity]:
    """`SL`, `A:3`, `C:2`"""
    name, *raw = text.strip().split(":")
    try:
        params = [int(p) for p in raw]
    except ValueError:
        raise UnknownSemigroup(text) from None
    return basis(name, *params)
