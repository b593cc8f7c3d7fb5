import unittest
from src.errors import ParameterOutOfRange, UnknownSemigroup
from src.semigroup.named import c_monoid, named_semigroup, parse_named, z


class Named(unittest.TestCase):
    def test_orders(self):
        for text, order in (("sl2", 2), ("lz:3", 3), ("rz:2", 2), ("z:5", 5), ("null:4", 4), ("P3", 3)):
            self.assertEqual(len(parse_named(text)), order, text)
        self.assertEqual(len(named_semigroup("c_monoid", 0)), 1)

    def test_call_syntax(self):
        self.assertEqual(parse_named("z(3)"), z(3))
        self.assertEqual(parse_named("z(3)").name, "z3")

    def test_c_monoid(self):
        S = c_monoid(3)
        self.assertEqual(S.names, ("a^0", "a^1", "a^2", "a^3"))
        self.assertEqual(S.mul(2, 3), 3)
        self.assertEqual(S.mul(0, 2), 2)

    def test_errors(self):
        with self.assertRaises(UnknownSemigroup):
            parse_named("bicyclic")
        with self.assertRaises(UnknownSemigroup):
            parse_named("z:x")
        with self.assertRaises(ParameterOutOfRange):
            named_semigroup("lz", 0)
        with self.assertRaises(ParameterOutOfRange):
            named_semigroup("z")
        with self.assertRaises(ParameterOutOfRange):
            named_semigroup("sl2", 2)


if __name__ == "__main__":
    unittest.main()
