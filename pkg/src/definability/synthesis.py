"""Bounded search for formulas defining a given subset

Formulas are enumerated bottom-up by size in levels. Level j formulas have the free variables
x, y, z, t up to the j-th, and their semantics is a Python int bitmask over all assignments, the
last variable varying fastest. Atoms of level j compare meet/join terms and always mention the
level's own variable; quantifying that variable maps level j onto level j - 1. Each level keeps
only the first formula found per bitmask, so the pools stay a set of distinct relations.
"""
import logging
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Set, Tuple, Union
import numpy as np
from src.definability.automorphisms import AutomorphismGroup, is_definable, orbit_partition
from src.evaluator.evaluator import defined_set
from src.formula.ast import (
    And,
    Eq,
    Exists,
    Forall,
    Formula,
    Iff,
    Implies,
    Join,
    Leq,
    Meet,
    Not,
    Or,
    Term,
    Var,
)
from src.lattice.base import Lattice, Subset

VARIABLES = ("x", "y", "z", "t")
DEFAULT_MAX_QUANTIFIER_DEPTH = 3
DEFAULT_MAX_CANDIDATES = 5_000_000
DEFAULT_MAX_TERM_OPS = 2
# Early stopping in synthesize_all tracks at most 2 ** MAX_TRACKED_BLOCKS orbit unions.
MAX_TRACKED_BLOCKS = 16

Candidate = Tuple[Formula, int]

LOGGER = logging.getLogger(__name__)


def _to_mask(arr: np.ndarray) -> int:
    return int.from_bytes(np.packbits(arr.ravel(), bitorder="little").tobytes(), "little")


def subset_mask(subset: Iterable[int]) -> int:
    return sum(1 << i for i in set(subset))


def mask_subset(mask: int) -> Subset:
    return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)


@dataclass(frozen=True)
class Found:
    formula: Formula


@dataclass(frozen=True)
class Inconclusive:
    reason: str


SynthesisResult = Union[Found, Inconclusive]


class Synthesizer:
    """Enumerates one-free-variable formulas over a lattice up to a size budget

    Args:
        lattice: the structure
        budget: largest formula_size considered
        max_depth: quantifier nesting limit
        max_candidates: stop (inconclusively) after building this many formulas
        max_term_ops: meet/join operators allowed in one side of an atom
    """

    def __init__(
        self,
        lattice: Lattice,
        budget: int,
        max_depth: int = DEFAULT_MAX_QUANTIFIER_DEPTH,
        max_candidates: int = DEFAULT_MAX_CANDIDATES,
        max_term_ops: int = DEFAULT_MAX_TERM_OPS,
    ):
        self._log = logging.getLogger(self.__class__.__name__)
        self.lattice = lattice
        self.n = len(lattice)
        self.budget = budget
        self.max_depth = max(0, min(max_depth, len(VARIABLES) - 1, budget - 1))
        self.max_candidates = max_candidates
        self.max_term_ops = max_term_ops
        self.candidates = 0
        self.capped = False
        levels = range(self.max_depth + 1)
        self._full = [(1 << self.n ** (j + 1)) - 1 for j in levels]
        self._pool: List[List[List[Candidate]]] = [[[] for _ in range(budget + 1)] for _ in levels]
        self._seen: List[Set[int]] = [set() for _ in levels]
        self.found: Dict[int, Formula] = {}

    def _terms(self, j: int) -> List[Tuple[Term, int, np.ndarray]]:
        """Semantically distinct terms over the level's variables, fewest operators first"""
        names = VARIABLES[: j + 1]
        shape = (self.n,) * (j + 1)
        by_ops: List[List[Tuple[Term, np.ndarray]]] = [[]]
        seen = set()
        terms = []

        def add(t: Term, value: np.ndarray, ops: int):
            value = np.broadcast_to(value, shape)
            key = value.tobytes()
            if key not in seen:
                seen.add(key)
                by_ops[ops].append((t, value))
                terms.append((t, ops, value))

        for axis, name in enumerate(names):
            add(Var(name), np.arange(self.n).reshape([self.n if k == axis else 1 for k in range(j + 1)]), 0)
        for ops in range(1, self.max_term_ops + 1):
            by_ops.append([])
            for left_ops in range(ops):
                for left, lv in list(by_ops[left_ops]):
                    for right, rv in list(by_ops[ops - 1 - left_ops]):
                        add(Meet(left, right), self.lattice.meet[lv, rv], ops)
                        add(Join(left, right), self.lattice.join[lv, rv], ops)
        return terms

    def _atoms(self, j: int) -> Dict[int, List[Candidate]]:
        own = VARIABLES[j]
        atoms: Dict[int, List[Candidate]] = {}

        def add(f: Formula, value: np.ndarray, size: int):
            if own in f.free and size <= self.budget:
                atoms.setdefault(size, []).append((f, _to_mask(value)))

        add(Eq(Var(own), Var(own)), np.ones((self.n,) * (j + 1), dtype=bool), 1)
        terms = self._terms(j)
        for i, (left, lops, lv) in enumerate(terms):
            for right, rops, rv in terms[i + 1 :]:
                size = 1 + lops + rops
                add(Eq(left, right), lv == rv, size)
                add(Leq(left, right), self.lattice.leq[lv, rv], size)
                add(Leq(right, left), self.lattice.leq[rv, lv], size)
        return atoms

    def _quantify(self, mask: int, j: int, universal: bool) -> int:
        cells = self.n ** (j + 1)
        raw = np.frombuffer(mask.to_bytes((cells + 7) // 8, "little"), dtype=np.uint8)
        arr = np.unpackbits(raw, bitorder="little")[:cells].astype(bool).reshape(-1, self.n)
        return _to_mask(arr.all(axis=1) if universal else arr.any(axis=1))

    def _generate(self, j: int, s: int, atoms: Dict[int, List[Candidate]]) -> Iterator[Candidate]:
        full = self._full[j]
        pool = self._pool[j]
        yield from atoms.get(s, ())
        for f, m in pool[s - 1]:
            yield Not(f), m ^ full
        for a in range(1, s - 1):
            b = s - 1 - a
            for i, (f, m) in enumerate(pool[a]):
                for k, (g, p) in enumerate(pool[b]):
                    ordered = a < b or (a == b and i < k)
                    if ordered:
                        yield And(f, g), m & p
                        yield Or(f, g), m | p
                    yield Implies(f, g), (m ^ full) | p
                    if ordered:
                        yield Iff(f, g), m ^ p ^ full
        if j < self.max_depth:
            var = VARIABLES[j + 1]
            for f, m in self._pool[j + 1][s - 1]:
                yield Forall((var,), f), self._quantify(m, j + 1, universal=True)
                yield Exists((var,), f), self._quantify(m, j + 1, universal=False)

    def run(self, targets: Optional[Iterable[int]] = None) -> Dict[int, Formula]:
        """Level-0 bitmask -> first formula found; stops early once every target is found"""
        targets = set(targets) if targets is not None else None
        atoms = [self._atoms(j) for j in range(self.max_depth + 1)]
        for s in range(1, self.budget + 1):
            for j in reversed(range(self.max_depth + 1)):
                # A level-j formula needs j more quantifiers to close.
                if s > self.budget - j:
                    continue
                for f, mask in self._generate(j, s, atoms[j]):
                    self.candidates += 1
                    if self.candidates > self.max_candidates:
                        self.capped = True
                        self._log.warning(f"Candidate cap {self.max_candidates} reached at size {s}")
                        return self.found
                    if mask in self._seen[j]:
                        continue
                    self._seen[j].add(mask)
                    self._pool[j][s].append((f, mask))
                    if j == 0:
                        self.found[mask] = f
                        if targets is not None and all(t in self.found for t in targets):
                            return self.found
            self._log.debug(
                f"Size {s}: {[len(self._pool[j][s]) for j in range(self.max_depth + 1)]} new formulas per level"
            )
        return self.found


def _depths(budget: int, max_depth: int) -> range:
    return range(max(0, min(max_depth, len(VARIABLES) - 1, budget - 1)) + 1)


def synthesize(
    L: Lattice,
    S: Subset,
    budget: int,
    group: Optional[AutomorphismGroup] = None,
    max_depth: int = DEFAULT_MAX_QUANTIFIER_DEPTH,
    max_candidates: int = DEFAULT_MAX_CANDIDATES,
) -> SynthesisResult:
    """A formula defining S in L of size at most `budget`, or Inconclusive

    The search is repeated with quantifier depth 0, 1, ... up to `max_depth`, since shallow
    pools are far smaller. Found formulas are re-evaluated before being returned. Subsets moved
    by an automorphism are answered Inconclusive straight away.
    """
    S = frozenset(S)
    if not is_definable(L, S, group).definable:
        return Inconclusive("not invariant under the automorphism group")
    target = subset_mask(S)
    f, capped, explored = None, False, 0
    for depth in _depths(budget, max_depth):
        search = Synthesizer(L, budget, depth, max_candidates)
        f = search.run([target]).get(target)
        capped, explored = capped or search.capped, explored + search.candidates
        if f is not None:
            break
    if f is None:
        reason = "candidate cap reached" if capped else f"nothing within size {budget}"
        LOGGER.info(f"No formula for {L.ids(S)} after {explored} candidates: {reason}")
        return Inconclusive(reason)
    if defined_set(L, f) != S:
        LOGGER.error(f"Search produced an unsound formula for {L.ids(S)}; discarded")
        return Inconclusive("verification failed")
    LOGGER.debug(f"Found a formula for {L.ids(S)} after {explored} candidates")
    return Found(f)


def synthesize_all(
    L: Lattice,
    budget: int,
    max_depth: int = DEFAULT_MAX_QUANTIFIER_DEPTH,
    max_candidates: int = DEFAULT_MAX_CANDIDATES,
) -> Dict[Subset, Formula]:
    """Every subset reached within the budget, with the first formula found for it

    Depths are tried in increasing order as in `synthesize`; the search stops early once every
    union of orbits has been reached.
    """
    blocks = orbit_partition(L).blocks
    unions = None
    if len(blocks) <= MAX_TRACKED_BLOCKS:
        unions = set()
        for bits in range(1 << len(blocks)):
            unions.add(subset_mask(x for k, block in enumerate(blocks) if bits >> k & 1 for x in block))
    found: Dict[int, Formula] = {}
    for depth in _depths(budget, max_depth):
        remaining = None if unions is None else unions - found.keys()
        if remaining is not None and not remaining:
            break
        search = Synthesizer(L, budget, depth, max_candidates)
        for mask, f in search.run(remaining).items():
            found.setdefault(mask, f)
    out = {}
    for mask, f in found.items():
        subset = mask_subset(mask)
        if defined_set(L, f) == subset:
            out[subset] = f
    return out
