"""Generating semigroups against the identity bases of the varieties they generate

Prints the incidence of named semigroups against named bases and, on request, the concept
lattice of the semigroup x identity context.
"""
import argparse
import logging
from pathlib import Path
from timeit import default_timer as timer
from src.lattice.io import format_lattice, to_dot
from src.semigroup.context import concept_lattice, incidence_context
from src.semigroup.identity import parse_basis, satisfies_basis
from src.semigroup.named import parse_named
from src.utils import log_name, setup_logger

SEMIGROUPS = ["sl2", "lz:2", "rz:2", "null:2", "z:2", "z:3", "z:5", "P3", "c_monoid:1", "c_monoid:2", "c_monoid:5"]
BASES = ["SL", "LZ", "RZ", "ZM", "A:2", "A:3", "A:5", "P", "C:1", "C:2", "C:5", "COM", "I"]


def main():
    args = parse_args()
    log = logging.getLogger(__name__)
    experiment_name = "semigroup_battery"
    setup_logger(logging.INFO, Path("logs") / log_name(experiment_name))
    log.info(f"Running experiment: {experiment_name}")
    semigroups = [parse_named(text) for text in SEMIGROUPS]
    bases = [parse_basis(text) for text in BASES]
    start = timer()
    rows = [[satisfies_basis(S, basis) for basis in bases] for S in semigroups]
    log.info(f"{len(SEMIGROUPS)}x{len(BASES)} checks in {timer() - start:.2f} s")
    width = max(len(text) for text in SEMIGROUPS)
    print(" " * width + " " + " ".join(BASES))
    for text, row in zip(SEMIGROUPS, rows):
        cells = [("1" if v else "0").ljust(len(b)) for v, b in zip(row, BASES)]
        print(text.ljust(width) + " " + " ".join(cells))
    if args.concepts:
        identities = [identity for basis in bases for identity in basis]
        L = concept_lattice(incidence_context(semigroups, identities))
        log.info(f"{len(L)} concepts")
        print(to_dot(L) if args.dot else format_lattice(L), end="")


def parse_args():
    parser = argparse.ArgumentParser(description="Named semigroups against named identity bases.")
    parser.add_argument("--concepts", action="store_true", help="also print the concept lattice")
    parser.add_argument("--dot", action="store_true")
    return parser.parse_args()


if __name__ == "__main__":
    main()
