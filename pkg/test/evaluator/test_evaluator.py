import unittest
import numpy as np
from hypothesis import given, settings
from src.catalog.fixtures import chain, fig1_chain, fig2_bands, m3
from src.errors import EvaluationTooLarge, UnboundVariable, UnknownConstant, WrongFreeVariableCount
from src.evaluator.evaluator import Evaluator, defined_set, evaluate, relation
from src.evaluator.stdlib import load_stdlib
from src.formula.ast import Max, Min
from src.formula.expand import expand
from src.formula.parser import parse
from src.lattice.base import maximal_elements, minimal_elements
from test.strategies import lattices, unary_formulas

NEUT = "forall y, z ( (x v y) ^ (y v z) ^ (z v x) = (x ^ y) v (y ^ z) v (z ^ x) )"


class Eval(unittest.TestCase):
    def test_trivial(self):
        L = m3()
        for e in L.elements:
            self.assertTrue(evaluate(L, parse("x = x"), {"x": e}))

    def test_neutral_in_m3(self):
        L = m3()
        self.assertFalse(evaluate(L, parse(NEUT), {"x": "a"}))
        self.assertTrue(evaluate(L, parse(NEUT), {"x": "0"}))

    def test_neutral_in_chain(self):
        L = chain(5)
        for e in range(len(L)):
            self.assertTrue(evaluate(L, parse(NEUT), {"x": e}))

    def test_closed_sentence(self):
        self.assertTrue(evaluate(m3(), parse("exists x ( forall y ( x <= y ) )")))
        self.assertFalse(evaluate(m3(), parse("forall x, y ( x <= y or y <= x )")))

    def test_unbound_variable(self):
        with self.assertRaises(UnboundVariable) as ctx:
            evaluate(m3(), parse("x <= y"), {"x": "a"})
        self.assertEqual(ctx.exception.name, "y")

    def test_unknown_constant(self):
        with self.assertRaises(UnknownConstant):
            defined_set(m3(), parse("x = @SEM"))

    def test_constants_resolve_labels(self):
        L = fig2_bands()
        self.assertEqual(L.ids(defined_set(L, parse("x = @LZ"))), ["LZ"])


class DefinedSet(unittest.TestCase):
    def test_atoms_of_fig2(self):
        L = fig2_bands()
        self.assertEqual(L.ids(defined_set(L, parse("A(x)", load_stdlib()), load_stdlib())), ["SL", "LZ", "RZ"])

    def test_min_on_chain(self):
        for n in (1, 4, 7):
            self.assertEqual(defined_set(chain(n), Min("x", parse("x = x"))), {0})

    def test_below_nomega(self):
        L = fig1_chain(4)
        f = parse("exists y ( y = @Nomega & x < y )")
        self.assertEqual(L.ids(defined_set(L, f)), ["T", "ZM", "N3", "N4"])

    def test_wrong_free_variable_count(self):
        with self.assertRaises(WrongFreeVariableCount) as ctx:
            defined_set(m3(), parse("x <= y"))
        self.assertEqual(ctx.exception.n, 2)

    def test_renaming_bound_variables(self):
        L = fig2_bands()
        self.assertEqual(
            defined_set(L, parse("exists y ( x < y & forall z ( z <= y ) )")),
            defined_set(L, parse("exists t ( x < t & forall u ( u <= t ) )")),
        )

    def test_table_size_guard(self):
        with self.assertRaises(EvaluationTooLarge):
            Evaluator(chain(10), max_cells=50).defined_set(parse("forall y, z ( x <= y v z )"))


class Relation(unittest.TestCase):
    def test_axis_order(self):
        L = fig2_bands()
        f = parse("x <= y")
        self.assertTrue(np.array_equal(relation(L, f, ["x", "y"]), L.leq))
        self.assertTrue(np.array_equal(relation(L, f, ["y", "x"]), L.leq.T))

    def test_extra_variables_broadcast(self):
        L = m3()
        rel = relation(L, parse("x = x"), ["x", "y"])
        self.assertEqual(rel.shape, (5, 5))
        self.assertTrue(rel.all())

    def test_binary_definition(self):
        L = fig1_chain(4)
        defs = load_stdlib()
        rel = relation(L, parse("Nil-part(x, y)", defs), ["x", "y"], defs)
        self.assertEqual(rel.shape, (len(L), len(L)))


class MacroSemantics(unittest.TestCase):
    @given(L=lattices(), f=unary_formulas())
    @settings(max_examples=200, deadline=None)
    def test_min_and_max(self, L, f):
        base = defined_set(L, f)
        self.assertEqual(defined_set(L, Min("x", f)), minimal_elements(L, base))
        self.assertEqual(defined_set(L, Max("x", f)), maximal_elements(L, base))

    @given(L=lattices(), f=unary_formulas())
    @settings(max_examples=200, deadline=None)
    def test_expansion_preserves_meaning(self, L, f):
        self.assertEqual(defined_set(L, expand(f)), defined_set(L, f))


if __name__ == "__main__":
    unittest.main()
