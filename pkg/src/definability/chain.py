"""Defining the members of a definable chain one by one

If phi defines a chain s_1 < s_2 < ... then s_1 is defined by min x (phi) and s_n by
min x (phi & exists y (psi(y) & y < x)) where psi defines s_(n-1).
"""
from src.errors import ParameterOutOfRange, WrongFreeVariableCount
from src.formula.ast import And, Exists, Formula, Lt, Min, Var, variables
from src.formula.expand import fresh_var, subst


def chain_element_formula(phi: Formula, n: int) -> Formula:
    """Formula defining the n-th smallest element of the chain phi defines"""
    if len(phi.free) != 1:
        raise WrongFreeVariableCount(len(phi.free))
    if n < 1:
        raise ParameterOutOfRange("chain_element_formula", (n,))
    x = phi.free[0]
    psi = Min(x, phi)
    for _ in range(n - 1):
        y = fresh_var(variables(psi) | {x})
        psi = Min(x, And(phi, Exists((y,), And(subst(psi, {x: Var(y)}), Lt(Var(y), Var(x))))))
    return psi
