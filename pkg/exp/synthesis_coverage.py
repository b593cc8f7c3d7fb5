"""How many unions of automorphism orbits the bounded search reaches

Every subset reached is also checked against the orbit criterion: a reached subset that some
automorphism moves would be a soundness failure.
"""
import argparse
import logging
from enum import Enum
from pathlib import Path
from timeit import default_timer as timer
from src.catalog.fixtures import fixture
from src.definability.automorphisms import automorphisms, is_definable, orbit_partition
from src.definability.synthesis import synthesize_all
from src.formula.ast import formula_size
from src.formula.printer import format_formula
from src.utils import log_name, setup_logger


class Output(Enum):
    Summary = "summary"
    Formulas = "formulas"

    def __str__(self):
        return self.value


def main():
    args = parse_args()
    log = logging.getLogger(__name__)
    experiment_name = "synthesis_coverage"
    setup_logger(logging.INFO, Path("logs") / log_name(experiment_name))
    log.info(f"Running experiment: {experiment_name}")
    for spec in args.fixtures:
        L = fixture(spec)
        group = automorphisms(L)
        blocks = orbit_partition(L, group).blocks
        start = timer()
        found = synthesize_all(L, args.budget, max_depth=args.max_depth)
        elapsed = timer() - start
        unsound = [S for S in found if not is_definable(L, S, group).definable]
        if unsound:
            log.error(f"{spec}: {len(unsound)} reached subsets are moved by an automorphism")
        total = 2 ** len(blocks)
        print(f"{spec} orbits={len(blocks)} reached={len(found)}/{total} unsound={len(unsound)} time={elapsed:.1f}s")
        if args.output == Output.Formulas:
            for S, f in sorted(found.items(), key=lambda item: (len(item[0]), sorted(item[0]))):
                print(f"  {{{' '.join(L.ids(S))}}} size={formula_size(f)} {format_formula(f)}")


def parse_args():
    parser = argparse.ArgumentParser(description="Coverage of the formula search on small fixtures.")
    parser.add_argument("--fixtures", nargs="+", default=["m3", "n5", "chain:4", "boolean:2", "partition:3"])
    parser.add_argument("--budget", type=int, default=9)
    parser.add_argument("--max_depth", type=int, default=2)
    parser.add_argument("--output", type=Output, default=Output.Summary, choices=list(Output))
    return parser.parse_args()


if __name__ == "__main__":
    main()
