"""Finite semigroups as Cayley tables"""
import itertools
import logging
from typing import List, Optional, Sequence
import numpy as np
from src.errors import CapacityError, InvalidTable, NonAssociative

MAX_ASSIGNMENTS = 10 ** 6

LOGGER = logging.getLogger(__name__)


class Semigroup:
    """Finite semigroup on {0..n-1}

    Use `from_table` to construct one; the constructor trusts its arguments.

    Attributes:
        table (n, n): table[a, b] is the index of the product ab
        names: element names, index order
        name: semigroup name
    """

    def __init__(self, table: np.ndarray, names: Optional[Sequence[str]] = None, name: str = ""):
        table = np.ascontiguousarray(table, dtype=np.intp)
        table.flags.writeable = False
        self.table = table
        self.names = tuple(names) if names is not None else tuple(str(i) for i in range(len(table)))
        self.name = name

    def __len__(self) -> int:
        return len(self.table)

    @property
    def order(self) -> int:
        return len(self.table)

    def __eq__(self, other) -> bool:
        """Equal as tables, names ignored"""
        if not isinstance(other, Semigroup):
            return NotImplemented
        return np.array_equal(self.table, other.table)

    __hash__ = None

    def __repr__(self) -> str:
        return f"Semigroup({self.name!r}, order {self.order})"

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def is_commutative(self) -> bool:
        return bool((self.table == self.table.T).all())

    def zero(self) -> Optional[int]:
        """Index of the two-sided zero, if there is one"""
        zeros = np.flatnonzero(zero_mask(self.table))
        return int(zeros[0]) if zeros.size else None


def zero_mask(table: np.ndarray) -> np.ndarray:
    """Boolean vector: element v with vs = sv = v for every s"""
    idx = np.arange(len(table))
    return (table == idx[:, None]).all(axis=1) & (table == idx[None, :]).all(axis=0)


def associativity_failures(table: np.ndarray) -> np.ndarray:
    """(k, 3) array of triples (a, b, c) with (ab)c != a(bc), lexicographic order"""
    n = len(table)
    idx = np.arange(n)
    left = table[table[:, :, None], idx[None, None, :]]
    right = table[idx[:, None, None], table[None, :, :]]
    return np.argwhere(left != right)


def check_table(table) -> np.ndarray:
    arr = np.asarray(table)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise InvalidTable(f"table must be a nonempty square array, got shape {arr.shape}")
    if not np.issubdtype(arr.dtype, np.integer):
        raise InvalidTable("table entries must be integers")
    n = arr.shape[0]
    if arr.min() < 0 or arr.max() >= n:
        raise InvalidTable(f"table entries must lie in [0, {n - 1}]")
    return arr.astype(np.intp)


def from_table(table, names: Optional[Sequence[str]] = None, name: str = "") -> Semigroup:
    """Validated semigroup from a square table of element indices

    Raises:
        InvalidTable: not a square table over {0..n-1}, or wrong number of names
        NonAssociative: the first failing triple
    """
    arr = check_table(table)
    if names is not None and len(names) != len(arr):
        raise InvalidTable(f"{len(names)} names for {len(arr)} elements")
    failures = associativity_failures(arr)
    if len(failures):
        a, b, c = (int(v) for v in failures[0])
        raise NonAssociative(a, b, c)
    return Semigroup(arr, names, name)


def dual_semigroup(S: Semigroup) -> Semigroup:
    """Opposite multiplication: the transposed table"""
    name = S.name[5:-1] if S.name.startswith("dual(") else f"dual({S.name})"
    return Semigroup(S.table.T, S.names, name)


def direct_product(S1: Semigroup, S2: Semigroup) -> Semigroup:
    """Componentwise product, element (a, b) at index a * |S2| + b"""
    n1, n2 = len(S1), len(S2)
    a, b = np.divmod(np.arange(n1 * n2), n2)
    table = S1.table[a[:, None], a[None, :]] * n2 + S2.table[b[:, None], b[None, :]]
    names = [f"({S1.names[i]},{S2.names[j]})" for i, j in zip(a, b)]
    return Semigroup(table, names, f"{S1.name}x{S2.name}")


def complete_table(partial, max_assignments: int = MAX_ASSIGNMENTS) -> List[np.ndarray]:
    """Every associative table agreeing with `partial` where it is not -1"""
    arr = np.asarray(partial, dtype=np.intp)
    n = len(arr)
    holes = [tuple(int(v) for v in cell) for cell in np.argwhere(arr < 0)]
    count = n ** len(holes)
    if count > max_assignments:
        raise CapacityError(count, max_assignments)
    out = []
    for values in itertools.product(range(n), repeat=len(holes)):
        candidate = arr.copy()
        for cell, v in zip(holes, values):
            candidate[cell] = v
        if not len(associativity_failures(candidate)):
            out.append(candidate)
    LOGGER.debug(f"{len(out)} associative completions of {len(holes)} open cells")
    return out
