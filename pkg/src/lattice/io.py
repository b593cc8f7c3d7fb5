"""Lattice file format and Hasse diagram export

File format, one directive per line, `#` starts a comment:

    lattice <name>
    elem <id>
    cover <lo-id> <hi-id>
    label <label-name> <id>
"""
from pathlib import Path
from typing import Union
from src.errors import LatticeFileError
from src.lattice.base import Lattice, build_from_covers, cover_pairs

_ARITY = {"lattice": 1, "elem": 1, "cover": 2, "label": 2}


def read_lattice(text: str) -> Lattice:
    name = None
    elements, covers, labels = [], [], {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        directive, *args = line.split()
        if directive not in _ARITY:
            raise LatticeFileError(lineno, f"unknown directive '{directive}'")
        if len(args) != _ARITY[directive]:
            raise LatticeFileError(lineno, f"'{directive}' takes {_ARITY[directive]} argument(s)")
        if name is None and directive != "lattice":
            raise LatticeFileError(lineno, "file must start with 'lattice <name>'")
        if directive == "lattice":
            if name is not None:
                raise LatticeFileError(lineno, "second 'lattice' header")
            name = args[0]
        elif directive == "elem":
            elements.append(args[0])
        elif directive == "cover":
            covers.append((args[0], args[1]))
        else:
            if args[0] in labels:
                raise LatticeFileError(lineno, f"label '{args[0]}' declared twice")
            labels[args[0]] = args[1]
    if name is None:
        raise LatticeFileError(1, "empty lattice file")
    return build_from_covers(elements, covers, labels, name)


def load_lattice(path: Union[str, Path]) -> Lattice:
    return read_lattice(Path(path).read_text())


def format_lattice(L: Lattice) -> str:
    lines = [f"lattice {L.name or 'unnamed'}"]
    lines += [f"elem {id_}" for id_ in L.elements]
    lines += [f"cover {L.id(a)} {L.id(b)}" for a, b in cover_pairs(L)]
    for label, i in sorted(L.labels.items(), key=lambda item: (item[1], item[0])):
        lines.append(f"label {label} {L.id(i)}")
    return "\n".join(lines) + "\n"


def to_dot(L: Lattice) -> str:
    """Graph description of the Hasse diagram, bottom to top"""
    lines = [f'digraph "{L.name or "lattice"}" {{', "\trankdir=BT;"]
    for i, id_ in enumerate(L.elements):
        label = L.label_of(i) or id_
        lines.append(f'\t"{id_}" [label="{label}"];')
    for a, b in cover_pairs(L):
        lines.append(f'\t"{L.id(a)}" -> "{L.id(b)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
