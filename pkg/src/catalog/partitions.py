"""Set partitions as restricted growth strings"""
from typing import Iterator, List, Sequence, Tuple

Rgs = Tuple[int, ...]


def set_partitions(n: int) -> List[Rgs]:
    """Every partition of {1..n}, as the block index of each point (first occurrences increasing)"""
    out = []

    def extend(prefix: List[int], blocks: int):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for b in range(blocks + 1):
            prefix.append(b)
            extend(prefix, max(blocks, b + 1))
            prefix.pop()

    extend([], 0)
    return out


def canonical(labels: Sequence[int]) -> Rgs:
    """Renumber block labels in order of first occurrence"""
    names = {}
    return tuple(names.setdefault(b, len(names)) for b in labels)


def blocks(rgs: Rgs) -> List[List[int]]:
    out: List[List[int]] = []
    for point, b in enumerate(rgs, start=1):
        if b == len(out):
            out.append([])
        out[b].append(point)
    return out


def partition_id(rgs: Rgs) -> str:
    """`12|3` for {{1, 2}, {3}}"""
    return "|".join("".join(str(p) for p in block) for block in blocks(rgs))


def merges(rgs: Rgs) -> Iterator[Rgs]:
    """Partitions covering rgs in the refinement order: two blocks joined"""
    k = max(rgs) + 1 if rgs else 0
    for a in range(k):
        for b in range(a + 1, k):
            yield canonical([a if x == b else x for x in rgs])
