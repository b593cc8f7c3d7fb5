import unittest
from src.errors import SemigroupFileError
from src.semigroup.io import format_semigroup, read_semigroup
from src.semigroup.named import c_monoid, p3, z

P3_FILE = """# the semigroup P
semigroup P3
order 3
row 0 1 2
row 2 2 2
row 2 2 2  # a^2 = 0
name 0 e
name 1 a
"""


class Read(unittest.TestCase):
    def test_read(self):
        S = read_semigroup(P3_FILE)
        self.assertEqual(S, p3())
        self.assertEqual(S.names, ("e", "a", "2"))
        self.assertEqual(S.name, "P3")

    def test_round_trip(self):
        for S in (p3(), z(4), c_monoid(2)):
            back = read_semigroup(format_semigroup(S))
            self.assertEqual(back, S)
            self.assertEqual((back.names, back.name), (S.names, S.name))

    def test_errors(self):
        cases = {
            "order 2\n": 1,
            "semigroup s\nrow 0\n": 2,
            "semigroup s\norder 2\nrow 0 0\nrow 0 2\n": 4,
            "semigroup s\norder 2\nrow 0 0\n": 3,
            "semigroup s\norder 2\nrow 1 1\nrow 0 0\n": 4,
            "semigroup s\norder 1\nrow 0\ncolumn 0\n": 4,
        }
        for text, line in cases.items():
            with self.assertRaises(SemigroupFileError, msg=text) as ctx:
                read_semigroup(text)
            self.assertEqual(ctx.exception.line, line, text)


if __name__ == "__main__":
    unittest.main()
