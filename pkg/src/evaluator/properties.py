"""Element properties computed straight from the meet and join tables

These never touch the formula evaluator; they are the oracles the stdlib formulas A, Neut,
Distr, LMod and Ch are checked against.
"""
from enum import Enum
from typing import Dict
import numpy as np
from src.lattice.base import ElementRef, Lattice


class PropertyKind(Enum):
    Atom = "atom"
    Coatom = "coatom"
    Neutral = "neutral"
    Distributive = "distributive"
    LowerModular = "lower-modular"
    ChainDownset = "chain-downset"


def _neutral(L: Lattice, x: int) -> bool:
    # y along axis 0, z along axis 1
    meet, join = L.meet, L.join
    xy, yz, zx = join[x][:, None], join, join[x][None, :]
    upper = meet[meet[xy, yz], zx]
    xy, yz, zx = meet[x][:, None], meet, meet[x][None, :]
    lower = join[join[xy, yz], zx]
    return bool((upper == lower).all())


def _distributive(L: Lattice, x: int) -> bool:
    left = L.join[x][L.meet]
    right = L.meet[L.join[x][:, None], L.join[x][None, :]]
    return bool((left == right).all())


def _lower_modular(L: Lattice, x: int) -> bool:
    ys = np.flatnonzero(L.leq[x])
    left = L.join[x][L.meet[ys]]
    right = L.meet[ys[:, None], L.join[x][None, :]]
    return bool((left == right).all())


def _chain_downset(L: Lattice, x: int) -> bool:
    below = np.flatnonzero(L.leq[:, x])
    sub = L.leq[np.ix_(below, below)]
    return bool((sub | sub.T).all())


def element_property(L: Lattice, e: ElementRef, p: PropertyKind) -> bool:
    x = L.element(e)
    if p is PropertyKind.Atom:
        return bool(L.covers[L.bottom, x])
    if p is PropertyKind.Coatom:
        return bool(L.covers[x, L.top])
    if p is PropertyKind.Neutral:
        return _neutral(L, x)
    if p is PropertyKind.Distributive:
        return _distributive(L, x)
    if p is PropertyKind.LowerModular:
        return _lower_modular(L, x)
    if p is PropertyKind.ChainDownset:
        return _chain_downset(L, x)
    raise ValueError(f"unknown property {p}")


def property_table(L: Lattice) -> Dict[PropertyKind, np.ndarray]:
    """Boolean vector over the elements for every property"""
    return {p: np.array([element_property(L, x, p) for x in range(len(L))], dtype=bool) for p in PropertyKind}
