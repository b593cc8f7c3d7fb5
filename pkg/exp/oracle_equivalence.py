"""Stdlib property formulas against the direct table computations

Evaluates A, Neut, Distr, LMod and Ch on the catalog fixtures, and optionally on random closure
systems, and logs every element where formula and oracle disagree.
"""
import argparse
import logging
from pathlib import Path
from timeit import default_timer as timer
import numpy as np
from src.catalog.fixtures import fixture
from src.evaluator.evaluator import Evaluator
from src.evaluator.properties import PropertyKind, property_table
from src.evaluator.stdlib import load_stdlib
from src.formula.parser import parse
from src.lattice.base import Lattice, from_order
from src.utils import log_name, setup_logger

FIXTURES = [
    "trivial",
    "chain:5",
    "boolean:4",
    "m3",
    "n5",
    "partition:4",
    "partition:5",
    "fig1_chain:3:2",
    "fig1_chain:4:2,3",
    "fig1_chain:6:2,3,5",
    "fig2_bands",
]
ORACLES = {
    "A": PropertyKind.Atom,
    "Neut": PropertyKind.Neutral,
    "Distr": PropertyKind.Distributive,
    "LMod": PropertyKind.LowerModular,
    "Ch": PropertyKind.ChainDownset,
}


def main():
    args = parse_args()
    log = logging.getLogger(__name__)
    experiment_name = "oracle_equivalence"
    setup_logger(logging.INFO, Path("logs") / log_name(experiment_name))
    log.info(f"Running experiment: {experiment_name}")
    rng = np.random.default_rng(args.seed)
    lattices = [fixture(spec) for spec in FIXTURES]
    lattices += [random_closure_lattice(rng, args.points) for _ in range(args.num_random)]
    mismatches = 0
    for L in lattices:
        start = timer()
        mismatches += compare(L)
        log.info(f"{L.name}: {len(L)} elements in {timer() - start:.2f} s")
    log.info(f"{mismatches} mismatches over {len(lattices)} lattices")


def compare(L: Lattice) -> int:
    log = logging.getLogger(__name__)
    defs = load_stdlib()
    evaluator = Evaluator(L, defs)
    table = property_table(L)
    count = 0
    for name, kind in ORACLES.items():
        found = evaluator.call_table(name)
        for i in np.flatnonzero(found != table[kind]):
            log.error(f"{L.name}: {name}({L.id(i)}) is {bool(found[i])}, oracle says {bool(table[kind][i])}")
            count += 1
    return count


def random_closure_lattice(rng: np.random.Generator, points: int) -> Lattice:
    """Random intersection-closed family of subsets of a `points`-set, always with the full set"""
    family = {(1 << points) - 1}
    for mask in rng.choice(1 << points, size=rng.integers(1, 1 << points), replace=False):
        family |= {int(mask) & other for other in family} | {int(mask)}
    members = sorted(family)
    leq = np.array([[a & b == a for b in members] for a in members], dtype=bool)
    return from_order([f"s{m}" for m in members], leq, name=f"closure({len(members)})")


def parse_args():
    parser = argparse.ArgumentParser(description="Stdlib formulas against property oracles.")
    parser.add_argument("--num_random", type=int, default=20)
    parser.add_argument("--points", type=int, default=4)
    parser.add_argument("--seed", type=int, default=0)
    return parser.parse_args()


if __name__ == "__main__":
    main()
