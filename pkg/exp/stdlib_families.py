"""Defined sets of the parameterised stdlib families on one fixture"""
import argparse
import logging
from pathlib import Path
from src.catalog.fixtures import fixture
from src.errors import ParameterOutOfRange
from src.evaluator.evaluator import Evaluator
from src.evaluator.stdlib import FAMILY_ALIASES, load_stdlib
from src.utils import log_name, setup_logger


def main():
    args = parse_args()
    log = logging.getLogger(__name__)
    experiment_name = "stdlib_families"
    setup_logger(logging.INFO, Path("logs") / log_name(experiment_name))
    log.info(f"Running experiment: {experiment_name}")
    L = fixture(args.fixture)
    evaluator = Evaluator(L, load_stdlib())
    for alias, (name, num_params) in FAMILY_ALIASES.items():
        if num_params != 1:
            continue
        for p in range(args.max_param + 1):
            try:
                table = evaluator.call_table(name, (p,))
            except ParameterOutOfRange:
                log.debug(f"{alias}: no member {p}")
                continue
            members = [i for i in range(len(L)) if table[i]]
            print(f"{name}[{p}] {' '.join(L.ids(members)) or '-'}")


def parse_args():
    parser = argparse.ArgumentParser(description="Evaluate stdlib families on a fixture.")
    parser.add_argument("--fixture", default="fig1_chain:6:2,3,5")
    parser.add_argument("--max_param", type=int, default=8)
    return parser.parse_args()


if __name__ == "__main__":
    main()
