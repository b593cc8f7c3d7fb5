import tempfile
import unittest
from pathlib import Path
from src.errors import DefinitionFileError, ParameterOutOfRange, RecursionNotWellFounded, UnknownDefinition
from src.formula.ast import Call, Var
from src.formula.defs import DefTable, load_definitions
from src.formula.parser import parse_definitions

FAMILY = """
def Bot(x) := forall y ( x <= y ) ;
def K[1](x) := Bot(x) ;
def K[k >= 2](x) := min x ( exists y ( K[k-1](y) & y < x ) ) ;
def K[3](x) := x = x ;
"""


def table(text: str) -> DefTable:
    return DefTable(parse_definitions(text, "test.def"))


class Instantiate(unittest.TestCase):
    def test_literal_rule_wins(self):
        defs = table(FAMILY)
        self.assertEqual(defs.instantiate("K", [3]).body, parse_definitions("def Z(x) := x = x ;")[0].body)

    def test_guarded_rule_binds_parameter(self):
        defs = table(FAMILY)
        body = defs.instantiate("K", [4]).body
        self.assertEqual(body.body.body.left, Call("K", (3,), (Var("y"),)))

    def test_out_of_range(self):
        defs = table(FAMILY)
        with self.assertRaises(ParameterOutOfRange) as ctx:
            defs.instantiate("K", [0])
        self.assertEqual(ctx.exception.params, (0,))

    def test_unknown(self):
        with self.assertRaises(UnknownDefinition):
            table(FAMILY).instantiate("Nope")

    def test_arity(self):
        defs = table(FAMILY)
        self.assertEqual(defs.arity("K", 1), 1)
        self.assertTrue(defs.has("Bot"))
        self.assertFalse(defs.has("K"))


class Validate(unittest.TestCase):
    def test_self_recursion_must_decrease(self):
        with self.assertRaises(RecursionNotWellFounded):
            table("def R[k](x) := R[k](x) ;")
        with self.assertRaises(RecursionNotWellFounded):
            table("def R[k](x) := R[k+1](x) ;")

    def test_mutual_recursion(self):
        with self.assertRaises(RecursionNotWellFounded):
            table("def P(x) := Q(x) ;\ndef Q(x) := P(x) ;")

    def test_free_variable_mismatch(self):
        with self.assertRaises(DefinitionFileError) as ctx:
            table("def Bad(x) := x <= y ;")
        self.assertEqual(ctx.exception.source, "test.def")

    def test_unknown_call_reports_line(self):
        with self.assertRaises(DefinitionFileError) as ctx:
            table("def Ok(x) := x = x ;\ndef Bad(x) := Missing(x) ;")
        self.assertEqual(ctx.exception.line, 2)

    def test_rules_must_agree_on_arity(self):
        with self.assertRaises(DefinitionFileError):
            table("def S[1](x) := x = x ;\ndef S[k >= 2](x, y) := x = y ;")


class Files(unittest.TestCase):
    def test_load_and_merge(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "extra.def"
            path.write_text("# extra\ndef Top(x) := forall y ( y <= x ) ;\n")
            defs = load_definitions([path], base=table(FAMILY))
        self.assertTrue(defs.has("Top"))
        self.assertTrue(defs.has("K", 1))

    def test_syntax_error_names_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "broken.def"
            path.write_text("def Top(x) := forall y ( y <= x ;\n")
            with self.assertRaises(DefinitionFileError) as ctx:
                load_definitions([path])
        self.assertEqual(ctx.exception.source, "broken.def")


if __name__ == "__main__":
    unittest.main()
