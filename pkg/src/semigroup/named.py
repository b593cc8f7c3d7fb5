"""Small semigroups generating the atoms and the varieties P and C_m"""
import logging
from typing import Callable, Dict, Tuple
import numpy as np
from src.errors import ParameterOutOfRange, UnknownSemigroup
from src.semigroup.base import Semigroup, from_table

# Carrier (e, a, 0) with e^2 = e, ea = a, ae = 0 and 0 a two-sided zero; a^2 = 0 is the only
# associative choice left open by that presentation, see `p3_partial`.
P3_NAMES = ("e", "a", "0")
P3_TABLE = np.array(
    [
        [0, 1, 2],
        [2, 2, 2],
        [2, 2, 2],
    ]
)
MAX_ORDER = 64

LOGGER = logging.getLogger(__name__)


def p3_partial() -> np.ndarray:
    """Presentation of P3 as a partial table, -1 where the presentation says nothing"""
    e, a, zero = 0, 1, 2
    partial = np.full((3, 3), -1)
    partial[e, e] = e
    partial[e, a] = a
    partial[a, e] = zero
    partial[zero, :] = zero
    partial[:, zero] = zero
    return partial


def sl2() -> Semigroup:
    return from_table([[0, 0], [0, 1]], name="sl2")


def lz(n: int) -> Semigroup:
    idx = np.arange(n)
    return from_table(np.broadcast_to(idx[:, None], (n, n)), name=f"lz{n}")


def rz(n: int) -> Semigroup:
    idx = np.arange(n)
    return from_table(np.broadcast_to(idx[None, :], (n, n)), name=f"rz{n}")


def z(n: int) -> Semigroup:
    """Cyclic group of order n, written additively"""
    idx = np.arange(n)
    return from_table((idx[:, None] + idx[None, :]) % n, name=f"z{n}")


def null(n: int) -> Semigroup:
    """Every product is the zero, element 0"""
    return from_table(np.zeros((n, n), dtype=np.intp), name=f"null{n}")


def c_monoid(m: int) -> Semigroup:
    """a^0, ..., a^m with a^i a^j = a^min(i + j, m)"""
    idx = np.arange(m + 1)
    names = [f"a^{i}" for i in idx]
    return from_table(np.minimum(idx[:, None] + idx[None, :], m), names, f"c_monoid{m}")


def p3() -> Semigroup:
    return from_table(P3_TABLE, P3_NAMES, "P3")


NAMED: Dict[str, Tuple[Callable[..., Semigroup], int, int]] = {
    # name: (builder, number of parameters, smallest parameter value)
    "sl2": (sl2, 0, 0),
    "lz": (lz, 1, 1),
    "rz": (rz, 1, 1),
    "z": (z, 1, 1),
    "null": (null, 1, 1),
    "P3": (p3, 0, 0),
    "c_monoid": (c_monoid, 1, 0),
}


def named_semigroup(name: str, *params: int) -> Semigroup:
    """One of sl2, lz(n), rz(n), z(n), null(n), P3, c_monoid(m)

    Raises:
        UnknownSemigroup: name is not in NAMED
        ParameterOutOfRange: wrong number of parameters, or out of range
    """
    if name not in NAMED:
        raise UnknownSemigroup(name)
    builder, count, lowest = NAMED[name]
    if len(params) != count or any(p < lowest or p > MAX_ORDER for p in params):
        raise ParameterOutOfRange(name, params)
    return builder(*params)


def parse_named(text: str) -> Semigroup:
    """`z:3`, `P3`, `c_monoid:2` and `z(3)` all name a semigroup"""
    text = text.strip().replace("(", ":").rstrip(")")
    name, *raw = text.split(":")
    try:
        params = [int(p) for p in raw]
    except ValueError:
        raise UnknownSemigroup(text) from None
    return named_semigroup(name, *params)
