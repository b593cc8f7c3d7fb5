"""Lattice isomorphisms, automorphism groups and orbits

Search is a depth-first extension of partial maps. Elements are first coloured jointly in both
lattices by order invariants (height, depth, cover counts, down/up set sizes), the colouring is
refined by the colours of cover neighbours until stable, and only equally coloured elements
are ever matched. Elements are mapped in breadth-first order over the Hasse diagram, so each
new element is a cover neighbour of an already mapped one and its image must be a cover
neighbour of that image. A partial map is kept consistent with the order in both directions.
"""
import logging
from collections import Counter
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple
import numpy as np
from networkx.utils import UnionFind
from src.lattice.base import Lattice, Subset

DEFAULT_GROUP_CAP = 10_000

Permutation = Tuple[int, ...]

LOGGER = logging.getLogger(__name__)


def _heights(L: Lattice, down: bool) -> np.ndarray:
    sizes = L.leq.sum(axis=0 if down else 1)
    covers = L.covers if down else L.covers.T
    heights = np.zeros(len(L), dtype=int)
    for x in np.argsort(sizes, kind="stable"):
        lower = np.flatnonzero(covers[:, x])
        if lower.size:
            heights[x] = heights[lower].max() + 1
    return heights


def invariants(L: Lattice) -> np.ndarray:
    """(n, 8) integer array of isomorphism-invariant element features"""
    covers = L.covers
    return np.stack(
        [
            _heights(L, down=True),
            _heights(L, down=False),
            covers.sum(axis=0),
            covers.sum(axis=1),
            L.leq.sum(axis=0),
            L.leq.sum(axis=1),
            covers[L.bottom],
            covers[:, L.top],
        ],
        axis=1,
    ).astype(int)


def _renumber(signatures: Sequence[tuple]) -> np.ndarray:
    index = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
    return np.array([index[sig] for sig in signatures], dtype=int)


def refine_colors(L1: Lattice, L2: Lattice) -> Tuple[np.ndarray, np.ndarray]:
    """Joint stable colouring of the elements of two lattices"""
    n1 = len(L1)
    lattices = (L1, L2)
    colors = _renumber([tuple(row) for L in lattices for row in invariants(L)])
    while True:
        parts = (colors[:n1], colors[n1:])
        signatures = []
        for L, c in zip(lattices, parts):
            for x in range(len(L)):
                lower = tuple(sorted(c[L.covers[:, x]]))
                upper = tuple(sorted(c[L.covers[x]]))
                signatures.append((int(c[x]), lower, upper))
        refined = _renumber(signatures)
        if len(set(refined)) == len(set(colors)):
            return refined[:n1], refined[n1:]
        colors = refined


class Matcher:
    """Enumerates order isomorphisms from L1 onto L2

    Args:
        L1, L2: the lattices; pass the same lattice twice for automorphisms
    """

    def __init__(self, L1: Lattice, L2: Lattice):
        self._log = logging.getLogger(self.__class__.__name__)
        self._L1, self._L2 = L1, L2
        self.n = len(L1)
        self.compatible = len(L1) == len(L2)
        if self.compatible:
            self._c1, self._c2 = refine_colors(L1, L2)
            self.compatible = Counter(self._c1.tolist()) == Counter(self._c2.tolist())
        if self.compatible:
            self.order, self._parent = self._search_order()

    def _search_order(self) -> Tuple[List[int], Dict[int, int]]:
        """Breadth-first over the Hasse diagram, starting in the rarest colour class"""
        class_size = Counter(self._c1.tolist())
        adjacency = self._L1.covers | self._L1.covers.T
        start = min(range(self.n), key=lambda x: (class_size[self._c1[x]], x))
        order, parent, seen = [start], {start: -1}, {start}
        head = 0
        while head < len(order):
            x = order[head]
            head += 1
            for y in sorted(np.flatnonzero(adjacency[x]), key=lambda y: (class_size[self._c1[y]], y)):
                y = int(y)
                if y not in seen:
                    seen.add(y)
                    parent[y] = x
                    order.append(y)
        return order, parent

    def candidates(self, x: int, image: np.ndarray, used: np.ndarray) -> np.ndarray:
        mask = (self._c2 == self._c1[x]) & ~used
        p = self._parent[x]
        if p >= 0:
            if self._L1.covers[p, x]:
                mask &= self._L2.covers[image[p]]
            else:
                mask &= self._L2.covers[:, image[p]]
        return np.flatnonzero(mask)

    def consistent(self, x: int, y: int, image: np.ndarray) -> bool:
        if self._c1[x] != self._c2[y]:
            return False
        mapped = np.flatnonzero(image >= 0)
        targets = image[mapped]
        return bool(
            np.array_equal(self._L1.leq[mapped, x], self._L2.leq[targets, y])
            and np.array_equal(self._L1.leq[x, mapped], self._L2.leq[y, targets])
        )

    def search(self, prefix: Sequence[int] = ()) -> Iterator[Permutation]:
        """Every isomorphism sending order[k] to prefix[k] for k < len(prefix)"""
        if not self.compatible:
            return
        n = self.n
        image = np.full(n, -1, dtype=int)
        used = np.zeros(n, dtype=bool)
        for x, y in zip(self.order, prefix):
            if used[y] or not self.consistent(x, y, image):
                return
            image[x], used[y] = y, True
        depth = len(prefix)
        if depth == n:
            yield tuple(int(y) for y in image)
            return
        stack = [iter(self.candidates(self.order[depth], image, used))]
        while stack:
            level = depth + len(stack) - 1
            x = self.order[level]
            if image[x] >= 0:
                used[image[x]] = False
                image[x] = -1
            for y in stack[-1]:
                if self.consistent(x, y, image):
                    image[x], used[y] = y, True
                    break
            else:
                stack.pop()
                continue
            if level + 1 == n:
                yield tuple(int(y) for y in image)
            else:
                stack.append(iter(self.candidates(self.order[level + 1], image, used)))

    def first(self, prefix: Sequence[int] = ()) -> Optional[Permutation]:
        return next(self.search(prefix), None)


def isomorphisms(L1: Lattice, L2: Lattice) -> Iterator[Permutation]:
    """All isomorphisms L1 -> L2 as index maps"""
    return Matcher(L1, L2).search()


def isomorphism(L1: Lattice, L2: Lattice) -> Optional[Permutation]:
    return Matcher(L1, L2).first()


def is_isomorphic(L1: Lattice, L2: Lattice) -> bool:
    return isomorphism(L1, L2) is not None


@dataclass(frozen=True)
class AutomorphismGroup:
    """Automorphism group of a lattice

    Attributes:
        permutations: every element when `complete`, otherwise a strong generating set
        generators: a generating set (non-identity coset representatives of a stabiliser chain)
        order: group order
        complete: whether `permutations` lists the whole group
    """

    permutations: Tuple[Permutation, ...]
    generators: Tuple[Permutation, ...]
    order: int
    complete: bool

    def __len__(self):
        return len(self.permutations)

    def __iter__(self):
        return iter(self.permutations)

    def __contains__(self, perm) -> bool:
        return tuple(perm) in self.permutations


def automorphisms(L: Lattice, cap: int = DEFAULT_GROUP_CAP) -> AutomorphismGroup:
    """The automorphism group, listed in full when its order is at most `cap`"""
    matcher = Matcher(L, L)
    identity = tuple(range(len(L)))
    base = matcher.order
    order, generators = 1, []
    image = np.full(len(L), -1, dtype=int)
    used = np.zeros(len(L), dtype=bool)
    for level, b in enumerate(base):
        orbit = 1
        for y in matcher.candidates(b, image, used):
            if y == b:
                continue
            perm = matcher.first(list(base[:level]) + [int(y)])
            if perm is not None:
                orbit += 1
                generators.append(perm)
        order *= orbit
        image[b], used[b] = b, True
    LOGGER.debug(f"Automorphism group of '{L.name}': order {order}, {len(generators)} generators")
    if order <= cap:
        permutations = tuple(sorted(matcher.search()))
        return AutomorphismGroup(permutations, tuple(generators), order, True)
    LOGGER.warning(f"Automorphism group of '{L.name}' has order {order} > {cap}, keeping generators only")
    return AutomorphismGroup(tuple(generators) or (identity,), tuple(generators), order, False)


@dataclass(frozen=True)
class OrbitPartition:
    blocks: Tuple[FrozenSet[int], ...]
    generators: Tuple[Permutation, ...]

    def block_of(self, x: int) -> FrozenSet[int]:
        for block in self.blocks:
            if x in block:
                return block
        raise KeyError(x)


def orbit_partition(L: Lattice, group: Optional[AutomorphismGroup] = None) -> OrbitPartition:
    """Orbits of the automorphism group, ordered by smallest element"""
    group = group or automorphisms(L)
    uf = UnionFind(range(len(L)))
    for perm in group.generators:
        for x, y in enumerate(perm):
            uf.union(x, y)
    blocks = sorted((frozenset(block) for block in uf.to_sets()), key=min)
    return OrbitPartition(tuple(blocks), group.generators)


@dataclass(frozen=True)
class Verdict:
    """Definable, or an automorphism witnessing that the subset is not invariant"""

    definable: bool
    witness: Optional[Permutation] = None


def apply(perm: Permutation, subset: Subset) -> Subset:
    return frozenset(perm[x] for x in subset)


def is_definable(L: Lattice, S: Subset, group: Optional[AutomorphismGroup] = None) -> Verdict:
    """A subset of a finite lattice is first-order definable iff every automorphism preserves it"""
    group = group or automorphisms(L)
    S = frozenset(S)
    for perm in group.generators:
        if apply(perm, S) != S:
            return Verdict(False, perm)
    return Verdict(True)


def is_definable_up_to(L: Lattice, S: Subset, sigma: Permutation, group: Optional[AutomorphismGroup] = None) -> bool:
    """S is moved by sigma, but S together with its sigma-image is definable"""
    S = frozenset(S)
    moved = apply(sigma, S)
    if moved == S:
        return False
    return is_definable(L, S | moved, group).definable


def format_cycles(L: Lattice, perm: Permutation) -> str:
    """Cycle notation over element ids, fixed points omitted"""
    seen, cycles = set(), []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cycle, x = [], start
        while x not in seen:
            seen.add(x)
            cycle.append(L.id(x))
            x = perm[x]
        cycles.append(f"({' '.join(cycle)})")
    return "".join(cycles) or "()"
