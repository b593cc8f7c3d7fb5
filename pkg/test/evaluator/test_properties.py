"""Stdlib formulas against the table-based property oracles"""
import unittest
from itertools import combinations
from hypothesis import given, settings
from src.catalog.fixtures import (
    FIG1_PRIMES,
    MAX_BOOLEAN,
    MAX_PARTITION,
    FixtureSpec,
    chain,
    fig1_chain,
    fixture,
    fixture_names,
    m3,
    n5,
)
from src.evaluator.evaluator import Evaluator
from src.evaluator.properties import PropertyKind, element_property, property_table
from src.evaluator.stdlib import load_stdlib
from src.formula.parser import parse
from test.strategies import lattices

ORACLES = {
    "A": PropertyKind.Atom,
    "Neut": PropertyKind.Neutral,
    "Distr": PropertyKind.Distributive,
    "LMod": PropertyKind.LowerModular,
    "Ch": PropertyKind.ChainDownset,
}


CATALOG_MAX_SIZE = 60


def parameterisations(name):
    """Spec strings for `name`, in increasing size for the one-integer families"""
    if name == "chain":
        return (f"chain:{n}" for n in range(1, CATALOG_MAX_SIZE + 1))
    if name == "boolean":
        return (f"boolean:{n}" for n in range(1, MAX_BOOLEAN + 1))
    if name == "partition":
        return (f"partition:{n}" for n in range(1, MAX_PARTITION + 1))
    if name == "fig1_chain":
        prime_sets = [c for r in range(len(FIG1_PRIMES) + 1) for c in combinations(FIG1_PRIMES, r)]
        return (FixtureSpec(name, (k, primes)) for primes in prime_sets for k in range(3, 13))
    return (name,)


def catalog():
    """Every fixture with at most CATALOG_MAX_SIZE elements"""
    for name in fixture_names():
        for spec in parameterisations(name):
            L = fixture(spec)
            if len(L) > CATALOG_MAX_SIZE:
                if name == "fig1_chain":
                    continue
                break
            yield L


class OracleEquivalence(unittest.TestCase):
    def check(self, L):
        defs = load_stdlib()
        evaluator = Evaluator(L, defs)
        table = property_table(L)
        for name, kind in ORACLES.items():
            found = evaluator.defined_set(parse(f"{name}(x)", defs))
            expected = {i for i in range(len(L)) if table[kind][i]}
            self.assertEqual(found, expected, f"{name} on {L.name}")

    def test_catalog(self):
        names = set()
        for L in catalog():
            names.add(L.name)
            self.check(L)
        for expected in ("boolean(5)", "partition(5)", "chain(60)", "fig1_chain(3,)", "fig1_chain(8,2,3,5,7,11)"):
            self.assertIn(expected, names)
        self.assertEqual({n.split("(")[0] for n in names}, set(fixture_names()))
        self.assertNotIn("boolean(6)", names)

    @given(L=lattices())
    @settings(max_examples=40, deadline=None)
    def test_random_lattices(self, L):
        self.check(L)


class Oracles(unittest.TestCase):
    def test_m3_neutral(self):
        L = m3()
        self.assertTrue(element_property(L, "0", PropertyKind.Neutral))
        self.assertFalse(element_property(L, "a", PropertyKind.Neutral))
        neutral = property_table(L)[PropertyKind.Neutral]
        self.assertEqual([L.id(i) for i in range(len(L)) if neutral[i]], ["0", "1"])

    def test_n5_distributive(self):
        L = n5()
        distributive = property_table(L)[PropertyKind.Distributive]
        self.assertEqual([L.id(i) for i in range(len(L)) if distributive[i]], ["0", "b", "c", "1"])

    def test_chain_properties(self):
        table = property_table(chain(4))
        self.assertTrue(table[PropertyKind.Neutral].all())
        self.assertTrue(table[PropertyKind.ChainDownset].all())

    def test_fig1_chain_downsets(self):
        L = fig1_chain(4)
        self.assertTrue(element_property(L, "N4", PropertyKind.ChainDownset))
        flags = property_table(L)[PropertyKind.ChainDownset]
        self.assertEqual([L.id(i) for i in range(len(L)) if not flags[i]], ["TOP"])

    def test_atoms_and_coatoms(self):
        L = n5()
        self.assertTrue(element_property(L, "a", PropertyKind.Atom))
        self.assertFalse(element_property(L, "b", PropertyKind.Atom))
        self.assertTrue(element_property(L, "b", PropertyKind.Coatom))


if __name__ == "__main__":
    unittest.main()
