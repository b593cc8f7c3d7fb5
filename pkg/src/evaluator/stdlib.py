"""The shipped formula catalog"""
import logging
import os
from functools import lru_cache
from pathlib import Path
from typing import Dict, Sequence, Tuple, Union
from src.errors import UnknownDefinition
from src.formula.ast import Definition
from src.formula.defs import DefTable, load_definitions

STDLIB_ENV = "LATFO_STDLIB"

# Family names as the literature writes them -> (stdlib name, number of parameters)
FAMILY_ALIASES: Dict[str, Tuple[str, int]] = {
    "N_k": ("N", 1),
    "C_m": ("C", 1),
    "D_m": ("D", 1),
    "A_n": ("A", 1),
    "A_geq": ("A_geq", 1),
    "Deg_k": ("Deg", 1),
    "NILP_k": ("NILP", 1),
    "CRPow_k": ("CRPow", 1),
    "E_m": ("E", 1),
    "PERM_n": ("PERM", 1),
    "CMon": ("CMon", 2),
}

LOGGER = logging.getLogger(__name__)


def stdlib_dir() -> Path:
    """Directory of the shipped .def files, or the one named by $LATFO_STDLIB"""
    override = os.environ.get(STDLIB_ENV)
    if override:
        return Path(override)
    return Path(__file__).parent / "defs"


@lru_cache(maxsize=4)
def _load(directory: Path) -> DefTable:
    paths = sorted(directory.glob("*.def"))
    table = load_definitions(paths)
    LOGGER.info(f"Loaded {len(table)} definitions from {len(paths)} files in {directory}")
    return table


def load_stdlib() -> DefTable:
    return _load(stdlib_dir())


def resolve_family(name: str, num_params: int = 1) -> Tuple[str, int]:
    """Stdlib key for a family alias (`N_k`) or a plain name (`N`)"""
    if name in FAMILY_ALIASES:
        return FAMILY_ALIASES[name]
    return name, num_params


def instantiate_family(name: str, *params: Union[int, Sequence[int]], defs: DefTable = None) -> Definition:
    """Member `name[params]` of a parameterised family, e.g. instantiate_family("N_k", 3)

    Raises:
        UnknownDefinition: no such family
        ParameterOutOfRange: the parameters match none of the family's rules
    """
    defs = defs if defs is not None else load_stdlib()
    flat = []
    for p in params:
        flat.extend(p if isinstance(p, (list, tuple)) else [p])
    key, _ = resolve_family(name, len(flat))
    if not defs.has(key, len(flat)):
        raise UnknownDefinition(name)
    return defs.instantiate(key, flat)
