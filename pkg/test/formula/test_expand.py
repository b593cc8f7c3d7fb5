import unittest
from hypothesis import given, settings
from src.errors import UnknownDefinition
from src.evaluator.stdlib import load_stdlib
from src.formula.ast import And, Call, Eq, Exists, Leq, Min, Var, is_core, variables
from src.formula.expand import Expander, expand, fresh_var, subst
from src.formula.parser import parse
from src.formula.printer import format_formula
from test.strategies import formulas

x, y, z = Var("x"), Var("y"), Var("z")


class Expand(unittest.TestCase):
    def test_min_of_trivial(self):
        f = expand(Min("x", Eq(x, x)))
        self.assertEqual(format_formula(f), "x = x & forall y ( y <= x & !(y = x) -> !(y = y) )")

    def test_n2_is_zm(self):
        defs = load_stdlib()
        self.assertEqual(expand(parse("N[2](x)", defs), defs), expand(parse("ZM(x)", defs), defs))

    def test_zero_reduced_is_nil_and_lmod(self):
        defs = load_stdlib()
        expander = Expander(defs)
        expected = And(expander.expand(parse("Nil(x)", defs)), expander.expand(parse("LMod(x)", defs)))
        self.assertEqual(expander.expand(parse("0-red(x)", defs)), expected)

    def test_binary_definition_arguments(self):
        defs = load_stdlib()
        f = expand(Call("Nil-part", (), (y, x)), defs)
        self.assertTrue(is_core(f))
        self.assertEqual(set(f.free), {"x", "y"})

    def test_stdlib_expands_to_core(self):
        defs = load_stdlib()
        expander = Expander(defs)
        for d in defs:
            if d.patterns:
                continue
            f = expander.expand(Call(d.name, (), tuple(Var(v) for v in d.formals)))
            self.assertTrue(is_core(f), d.name)
            self.assertEqual(set(f.free), set(d.formals), d.name)

    def test_families_expand_to_core(self):
        defs = load_stdlib()
        expander = Expander(defs)
        for name, params in (("N", (4,)), ("Deg", (2,)), ("C", (3,)), ("A", (3,)), ("PERM", (2,)), ("CMon", (2, 1))):
            f = expander.expand(Call(name, params, (x,)))
            self.assertTrue(is_core(f), name)

    def test_calls_need_definitions(self):
        with self.assertRaises(UnknownDefinition):
            expand(Call("A", (), (x,)))

    @given(f=formulas(("x", "y"), size=7))
    @settings(max_examples=200, deadline=None)
    def test_idempotent_and_keeps_free_variables(self, f):
        core = expand(f)
        self.assertTrue(is_core(core))
        self.assertEqual(expand(core), core)
        self.assertEqual(set(core.free), set(f.free))


class Substitution(unittest.TestCase):
    def test_renames_captured_binder(self):
        f = Exists(("y",), Leq(x, y))
        g = subst(f, {"x": y})
        self.assertEqual(g.free, ("y",))
        self.assertNotEqual(g.vars, ("y",))
        self.assertEqual(g.body, Leq(y, Var(g.vars[0])))

    def test_bound_variables_untouched(self):
        f = Exists(("y",), Leq(x, y))
        self.assertEqual(subst(f, {"y": z}), f)

    def test_extremum_renamed(self):
        f = Min("x", Leq(x, y))
        self.assertEqual(subst(f, {"x": z}), Min("z", Leq(z, y)))

    def test_fresh_var(self):
        self.assertEqual(fresh_var({"x"}), "y")
        self.assertNotIn(fresh_var(variables(parse("forall y, z, t ( x <= y v z v t )"))), {"x", "y", "z", "t"})


if __name__ == "__main__":
    unittest.main()
