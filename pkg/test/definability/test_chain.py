import unittest
from src.catalog.fixtures import chain, fig1_chain
from src.definability.chain import chain_element_formula
from src.errors import ParameterOutOfRange, WrongFreeVariableCount
from src.evaluator.evaluator import defined_set
from src.formula.ast import Min
from src.formula.parser import parse


class ChainElements(unittest.TestCase):
    def test_chain(self):
        L = chain(10)
        phi = parse("x = x")
        for n in range(1, 11):
            self.assertEqual(defined_set(L, chain_element_formula(phi, n)), {n - 1})
        self.assertEqual(defined_set(L, chain_element_formula(phi, 11)), set())

    def test_first_is_min(self):
        phi = parse("x = x")
        self.assertEqual(chain_element_formula(phi, 1), Min("x", phi))

    def test_below_nomega(self):
        L = fig1_chain(4)
        phi = parse("exists y ( y = @Nomega & x < y )")
        found = [L.ids(defined_set(L, chain_element_formula(phi, n))) for n in range(1, 6)]
        self.assertEqual(found, [["T"], ["ZM"], ["N3"], ["N4"], []])

    def test_errors(self):
        with self.assertRaises(WrongFreeVariableCount):
            chain_element_formula(parse("x <= y"), 1)
        with self.assertRaises(ParameterOutOfRange):
            chain_element_formula(parse("x = x"), 0)


if __name__ == "__main__":
    unittest.main()
