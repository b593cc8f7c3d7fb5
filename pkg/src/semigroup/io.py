"""Semigroup file format

    semigroup <name>
    order <n>
    row <v1> ... <vn>      (n rows, element indices)
    name <idx> <label>     (optional)

`#` starts a comment.
"""
from pathlib import Path
from typing import Dict, List, Union
from src.errors import InvalidTable, NonAssociative, SemigroupFileError
from src.semigroup.base import Semigroup, from_table


def read_semigroup(text: str) -> Semigroup:
    name, order = None, None
    rows: List[List[int]] = []
    names: Dict[int, str] = {}
    last = 1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        last = lineno
        directive, *args = line.split()
        if name is None:
            if directive != "semigroup" or len(args) != 1:
                raise SemigroupFileError(lineno, "file must start with 'semigroup <name>'")
            name = args[0]
        elif directive == "order":
            if order is not None or len(args) != 1 or not args[0].isdigit() or int(args[0]) < 1:
                raise SemigroupFileError(lineno, "expected one 'order <n>' with n >= 1")
            order = int(args[0])
        elif directive == "row":
            if order is None:
                raise SemigroupFileError(lineno, "'row' before 'order'")
            if len(args) != order or not all(a.isdigit() for a in args):
                raise SemigroupFileError(lineno, f"a row holds {order} element indices")
            rows.append([int(a) for a in args])
        elif directive == "name":
            if len(args) != 2 or not args[0].isdigit():
                raise SemigroupFileError(lineno, "expected 'name <idx> <label>'")
            names[int(args[0])] = args[1]
        else:
            raise SemigroupFileError(lineno, f"unknown directive '{directive}'")
    if name is None or order is None:
        raise SemigroupFileError(last, "missing 'semigroup' or 'order' line")
    if len(rows) != order:
        raise SemigroupFileError(last, f"{len(rows)} rows for order {order}")
    if any(i >= order for i in names):
        raise SemigroupFileError(last, "'name' index out of range")
    labels = [names.get(i, str(i)) for i in range(order)]
    try:
        return from_table(rows, labels, name)
    except (InvalidTable, NonAssociative) as err:
        raise SemigroupFileError(last, str(err)) from err


def load_semigroup(path: Union[str, Path]) -> Semigroup:
    return read_semigroup(Path(path).read_text())


def format_semigroup(S: Semigroup) -> str:
    lines = [f"semigroup {S.name or 'unnamed'}", f"order {len(S)}"]
    lines += ["row " + " ".join(str(v) for v in row) for row in S.table]
    lines += [f"name {i} {label}" for i, label in enumerate(S.names) if label != str(i)]
    return "\n".join(lines) + "\n"
