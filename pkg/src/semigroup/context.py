"""Formal contexts of semigroups against identities and their concept lattices"""
import logging
from dataclasses import dataclass
from typing import FrozenSet, List, Sequence, Tuple
import numpy as np
from src.errors import EmptyContext
from src.lattice.base import Lattice, from_order
from src.semigroup.base import Semigroup
from src.semigroup.identity import Identity, satisfies

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class Context:
    """incidence[i, j] is whether objects[i] satisfies attributes[j]"""

    objects: Tuple[Semigroup, ...]
    attributes: Tuple[Identity, ...]
    incidence: np.ndarray

    def extent(self, attributes: Sequence[int]) -> FrozenSet[int]:
        rows = self.incidence[:, list(attributes)].all(axis=1)
        return frozenset(int(i) for i in np.flatnonzero(rows))

    def intent(self, objects: Sequence[int]) -> FrozenSet[int]:
        cols = self.incidence[list(objects), :].all(axis=0)
        return frozenset(int(j) for j in np.flatnonzero(cols))


def incidence_context(semigroups: Sequence[Semigroup], identities: Sequence[Identity]) -> Context:
    if not semigroups or not identities:
        raise EmptyContext(len(semigroups), len(identities))
    incidence = np.array([[satisfies(S, identity) for identity in identities] for S in semigroups], dtype=bool)
    incidence.flags.writeable = False
    return Context(tuple(semigroups), tuple(identities), incidence)


def extents(ctx: Context) -> List[FrozenSet[int]]:
    """Every concept extent: the full object set and all intersections of attribute columns"""
    found = {frozenset(range(len(ctx.objects)))}
    for j in range(len(ctx.attributes)):
        column = ctx.extent([j])
        found |= {e & column for e in found}
    return sorted(found, key=lambda e: (len(e), sorted(e)))


def concept_lattice(ctx: Context) -> Lattice:
    """Concepts ordered by extent inclusion

    Elements are named C0, C1, ... smallest extent first and labeled with their extent, as
    in `{sl2,z2}`.
    """
    concepts = extents(ctx)
    masks = np.array([[i in e for i in range(len(ctx.objects))] for e in concepts], dtype=bool)
    # e <= f iff e is contained in f
    leq = ~(masks[:, None, :] & ~masks[None, :, :]).any(axis=2)
    ids = [f"C{k}" for k in range(len(concepts))]
    labels = {"{" + ",".join(ctx.objects[i].name for i in sorted(e)) + "}": k for k, e in enumerate(concepts)}
    LOGGER.debug(f"{len(concepts)} concepts from {len(ctx.objects)}x{len(ctx.attributes)} context")
    return from_order(ids, leq, labels, "concepts")
