"""Finite bounded lattices

A lattice is stored as its order relation plus precomputed meet and join tables, all numpy
arrays over element indices. Element ids are opaque strings and their declaration order fixes
the index order, which in turn fixes every ordering in the output of this package.
"""
import logging
from types import MappingProxyType
from typing import FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple, Union
import networkx as nx
import numpy as np
from src.errors import (
    CycleDetected,
    DuplicateElement,
    DuplicateLabel,
    EmptyInterval,
    LatticeTooLarge,
    MissingBound,
    NotALattice,
    UnknownElement,
)

MAX_LATTICE_SIZE = 4096

Subset = FrozenSet[int]
ElementRef = Union[int, str]

LOGGER = logging.getLogger(__name__)


def _read_only(arr: np.ndarray) -> np.ndarray:
    arr = np.ascontiguousarray(arr)
    arr.flags.writeable = False
    return arr


class Lattice:
    """Finite bounded lattice

    Use `build_from_covers` (or `from_order`) to construct one; the constructor trusts its
    arguments.

    Attributes:
        elements: element ids in index order
        leq (n, n): leq[a, b] iff a <= b
        meet (n, n): meet[a, b] is the index of a ^ b
        join (n, n): join[a, b] is the index of a v b
        bottom, top: indices of the bounds
        labels: label name -> element index
    """

    def __init__(
        self,
        elements: Sequence[str],
        leq: np.ndarray,
        meet: np.ndarray,
        join: np.ndarray,
        bottom: int,
        top: int,
        labels: Optional[Mapping[str, int]] = None,
        name: str = "",
    ):
        self.name = name
        self.elements = tuple(elements)
        self._index = {id_: i for i, id_ in enumerate(self.elements)}
        self.leq = _read_only(leq.astype(bool))
        self.meet = _read_only(meet.astype(np.intp))
        self.join = _read_only(join.astype(np.intp))
        self.bottom = int(bottom)
        self.top = int(top)
        self.labels = MappingProxyType(dict(labels or {}))
        self._covers = None

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def size(self) -> int:
        return len(self.elements)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Lattice):
            return NotImplemented
        return (
            self.elements == other.elements
            and dict(self.labels) == dict(other.labels)
            and np.array_equal(self.leq, other.leq)
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"Lattice({self.name!r}, {self.size} elements)"

    def id(self, i: int) -> str:
        return self.elements[i]

    def element(self, ref: ElementRef) -> int:
        """Resolve an element index, a label name or an element id (labels win) to an index"""
        if isinstance(ref, (int, np.integer)):
            if not 0 <= ref < self.size:
                raise UnknownElement(str(ref))
            return int(ref)
        if ref in self.labels:
            return self.labels[ref]
        try:
            return self._index[ref]
        except KeyError:
            raise UnknownElement(ref) from None

    def label_of(self, i: int) -> Optional[str]:
        for label, target in self.labels.items():
            if target == i:
                return label
        return None

    @property
    def covers(self) -> np.ndarray:
        """covers[a, b] iff b covers a"""
        if self._covers is None:
            lt = self.leq & ~np.eye(self.size, dtype=bool)
            # Counts stay below 2^24, float32 products are exact.
            lt_f = lt.astype(np.float32)
            self._covers = _read_only(lt & ~((lt_f @ lt_f) > 0))
        return self._covers

    def ids(self, subset: Iterable[int]) -> List[str]:
        """Element ids of a subset, in index order"""
        return [self.elements[i] for i in sorted(subset)]


def build_from_covers(
    elements: Sequence[str],
    covers: Iterable[Tuple[str, str]],
    labels: Optional[Mapping[str, str]] = None,
    name: str = "",
    max_size: int = MAX_LATTICE_SIZE,
) -> Lattice:
    """Build a lattice from its Hasse diagram

    Args:
        elements: element ids, declaration order is index order
        covers: (lower id, upper id) pairs
        labels: label name -> element id
        name: lattice name

    Returns:
        validated lattice, leq is the reflexive-transitive closure of covers
    """
    elements = list(elements)
    seen = set()
    for id_ in elements:
        if id_ in seen:
            raise DuplicateElement(id_)
        seen.add(id_)
    if len(elements) > max_size:
        raise LatticeTooLarge(len(elements), max_size)

    graph = nx.DiGraph()
    graph.add_nodes_from(elements)
    for lo, hi in covers:
        for id_ in (lo, hi):
            if id_ not in seen:
                raise UnknownElement(id_)
        if lo == hi:
            raise CycleDetected([lo, hi])
        graph.add_edge(lo, hi)
    try:
        cycle = nx.find_cycle(graph)
    except nx.NetworkXNoCycle:
        cycle = None
    if cycle:
        raise CycleDetected([u for u, _ in cycle] + [cycle[0][0]])

    index = {id_: i for i, id_ in enumerate(elements)}
    leq = np.eye(len(elements), dtype=bool)
    for lo, hi in nx.transitive_closure_dag(graph).edges:
        leq[index[lo], index[hi]] = True
    label_indices = None
    if labels is not None:
        label_indices = {label: _lookup(index, id_) for label, id_ in labels.items()}
    return from_order(elements, leq, label_indices, name)


def _lookup(index, id_: str) -> int:
    try:
        return index[id_]
    except KeyError:
        raise UnknownElement(id_) from None


def _bound_tables(leq: np.ndarray, a: int):
    """Greatest lower bounds of `a` with every element, plus a validity mask"""
    below = leq.sum(axis=0)
    common = leq[:, [a]] & leq
    scores = np.where(common, below[:, None], -1)
    cand = scores.argmax(axis=0)
    valid = common.any(axis=0) & (~common | leq[:, cand]).all(axis=0)
    return cand, valid


def from_order(
    elements: Sequence[str],
    leq: np.ndarray,
    labels: Optional[Mapping[str, int]] = None,
    name: str = "",
) -> Lattice:
    """Compute meet/join tables of a partial order and check that it is a bounded lattice

    Pairs are scanned in index order, the join of a pair is checked before its meet.
    """
    n = len(elements)
    if n == 0:
        raise MissingBound("bottom")
    leq = np.asarray(leq, dtype=bool)
    meet = np.empty((n, n), dtype=np.intp)
    join = np.empty((n, n), dtype=np.intp)
    for a in range(n):
        meet_row, meet_ok = _bound_tables(leq, a)
        join_row, join_ok = _bound_tables(leq.T, a)
        bad = np.flatnonzero(~(meet_ok & join_ok)[a + 1 :])
        if bad.size:
            b = a + 1 + int(bad[0])
            reason = NotALattice.NO_LUB if not join_ok[b] else NotALattice.NO_GLB
            raise NotALattice((elements[a], elements[b]), reason)
        meet[a], join[a] = meet_row, join_row

    bottoms = np.flatnonzero(leq.all(axis=1))
    if bottoms.size == 0:
        raise MissingBound("bottom")
    tops = np.flatnonzero(leq.all(axis=0))
    if tops.size == 0:
        raise MissingBound("top")

    labels = dict(labels or {})
    targets = {}
    for label, i in labels.items():
        if i in targets:
            raise DuplicateLabel(label, elements[i])
        targets[i] = label
    LOGGER.debug(f"Lattice '{name}' validated: {n} elements")
    return Lattice(elements, leq, meet, join, int(bottoms[0]), int(tops[0]), labels, name)


def atoms(L: Lattice) -> Subset:
    return frozenset(int(i) for i in np.flatnonzero(L.covers[L.bottom]))


def coatoms(L: Lattice) -> Subset:
    return frozenset(int(i) for i in np.flatnonzero(L.covers[:, L.top]))


def downset(L: Lattice, a: ElementRef) -> Subset:
    return frozenset(int(i) for i in np.flatnonzero(L.leq[:, L.element(a)]))


def upset(L: Lattice, a: ElementRef) -> Subset:
    return frozenset(int(i) for i in np.flatnonzero(L.leq[L.element(a)]))


def is_chain(L: Lattice, subset: Iterable[int]) -> bool:
    idx = sorted(subset)
    sub = L.leq[np.ix_(idx, idx)]
    return bool((sub | sub.T).all())


def meet_of(L: Lattice, a: ElementRef, b: ElementRef) -> int:
    return int(L.meet[L.element(a), L.element(b)])


def join_of(L: Lattice, a: ElementRef, b: ElementRef) -> int:
    return int(L.join[L.element(a), L.element(b)])


def cover_pairs(L: Lattice) -> List[Tuple[int, int]]:
    """Hasse diagram edges (lower, upper), ordered by lower then upper index"""
    return [(int(a), int(b)) for a, b in np.argwhere(L.covers)]


def minimal_elements(L: Lattice, subset: Iterable[int]) -> Subset:
    idx = np.array(sorted(subset), dtype=np.intp)
    if idx.size == 0:
        return frozenset()
    sub = L.leq[np.ix_(idx, idx)] & ~np.eye(idx.size, dtype=bool)
    return frozenset(int(i) for i in idx[~sub.any(axis=0)])


def maximal_elements(L: Lattice, subset: Iterable[int]) -> Subset:
    idx = np.array(sorted(subset), dtype=np.intp)
    if idx.size == 0:
        return frozenset()
    sub = L.leq[np.ix_(idx, idx)] & ~np.eye(idx.size, dtype=bool)
    return frozenset(int(i) for i in idx[~sub.any(axis=1)])


def dual(L: Lattice) -> Lattice:
    """Order reversed, meet and join swapped, labels kept"""
    name = L.name[5:-1] if L.name.startswith("dual(") else f"dual({L.name})"
    return Lattice(L.elements, L.leq.T, L.join, L.meet, L.top, L.bottom, L.labels, name)


def interval(L: Lattice, a: ElementRef, b: ElementRef) -> Lattice:
    """The sublattice [a, b]"""
    lo, hi = L.element(a), L.element(b)
    if not L.leq[lo, hi]:
        raise EmptyInterval(L.id(lo), L.id(hi))
    idx = np.flatnonzero(L.leq[lo] & L.leq[:, hi])
    pos = {int(i): k for k, i in enumerate(idx)}
    labels = {label: pos[i] for label, i in L.labels.items() if i in pos}
    elements = [L.elements[i] for i in idx]
    return from_order(elements, L.leq[np.ix_(idx, idx)], labels, f"{L.name}[{L.id(lo)},{L.id(hi)}]")


def parse_subset(L: Lattice, text: str) -> Subset:
    """Subset literal: comma-separated element ids or label names"""
    refs = [ref.strip() for ref in text.split(",") if ref.strip()]
    return frozenset(L.element(ref) for ref in refs)
