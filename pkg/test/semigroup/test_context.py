import unittest
import numpy as np
from src.errors import EmptyContext, LatfoError
from src.lattice.base import atoms
from src.semigroup.context import concept_lattice, extents, incidence_context
from src.semigroup.identity import parse_identity
from src.semigroup.named import null, sl2, z


class Context(unittest.TestCase):
    def setUp(self):
        identities = [parse_identity(t) for t in ("x^2 = x", "xy = yx", "xy = 0")]
        self.ctx = incidence_context([sl2(), z(2), null(2)], identities)

    def test_incidence(self):
        self.assertTrue(np.array_equal(self.ctx.incidence, [[1, 1, 0], [0, 1, 0], [0, 1, 1]]))

    def test_derivations(self):
        self.assertEqual(self.ctx.extent([1]), frozenset({0, 1, 2}))
        self.assertEqual(self.ctx.extent([0, 2]), frozenset())
        self.assertEqual(self.ctx.intent([0]), frozenset({0, 1}))
        self.assertEqual(self.ctx.intent([0, 2]), frozenset({1}))

    def test_concepts(self):
        self.assertEqual(extents(self.ctx), [frozenset(), frozenset({0}), frozenset({2}), frozenset({0, 1, 2})])
        L = concept_lattice(self.ctx)
        self.assertEqual(len(L), 4)
        self.assertEqual(L.ids(atoms(L)), ["C1", "C2"])
        self.assertEqual(L.id(L.labels["{sl2}"]), "C1")
        self.assertEqual(L.id(L.labels["{sl2,z2,null2}"]), "C3")

    def test_single_cell(self):
        ctx = incidence_context([sl2()], [parse_identity("x^2 = x")])
        self.assertEqual(len(concept_lattice(ctx)), 1)

    def test_size_bound(self):
        identities = [parse_identity(t) for t in ("x^2 = x", "xy = yx", "xy = x", "xy = y", "xyz = 0")]
        ctx = incidence_context([sl2(), z(2), null(2)], identities)
        self.assertLessEqual(len(concept_lattice(ctx)), 2 ** 3 + 2)

    def test_empty(self):
        with self.assertRaises(EmptyContext) as ctx:
            incidence_context([], [parse_identity("x = x")])
        self.assertEqual((ctx.exception.objects, ctx.exception.attributes), (0, 1))
        self.assertIsInstance(ctx.exception, LatfoError)
        with self.assertRaises(EmptyContext):
            incidence_context([sl2()], [])


if __name__ == "__main__":
    unittest.main()
