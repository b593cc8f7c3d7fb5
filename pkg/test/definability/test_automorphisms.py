import unittest
from hypothesis import given, settings
from src.catalog.fixtures import boolean, chain, fig1_chain, fig2_bands, m3, n5
from src.definability.automorphisms import (
    apply,
    automorphisms,
    format_cycles,
    is_definable,
    is_definable_up_to,
    is_isomorphic,
    orbit_partition,
)
from src.evaluator.evaluator import defined_set
from src.lattice.base import dual, parse_subset
from test.strategies import lattices, unary_formulas


def is_automorphism(L, perm) -> bool:
    return all(L.leq[x, y] == L.leq[perm[x], perm[y]] for x in range(len(L)) for y in range(len(L)))


class Group(unittest.TestCase):
    def test_m3(self):
        group = automorphisms(m3())
        self.assertEqual(group.order, 6)
        self.assertTrue(group.complete)
        self.assertEqual(len(group), 6)

    def test_chain_is_rigid(self):
        group = automorphisms(chain(6))
        self.assertEqual(group.order, 1)
        self.assertEqual(list(group), [tuple(range(6))])

    def test_boolean(self):
        self.assertEqual(automorphisms(boolean(3)).order, 6)
        self.assertEqual(automorphisms(boolean(4)).order, 24)

    def test_fig2_flip(self):
        L = fig2_bands()
        group = automorphisms(L)
        self.assertEqual(group.order, 2)
        (flip,) = [p for p in group if p != tuple(range(len(L)))]
        for a, b in (("LZ", "RZ"), ("LRB", "RRB"), ("LNB", "RNB"), ("L6", "R6")):
            self.assertEqual(flip[L.element(a)], L.element(b))
        for e in ("T", "SL", "RB", "NB", "ReB", "I"):
            self.assertEqual(flip[L.element(e)], L.element(e))

    def test_fig1_chain(self):
        # SL, LZ, RZ permute freely; so do the two prime chains and the two covers of N3
        self.assertEqual(automorphisms(fig1_chain(4)).order, 24)

    def test_members_are_automorphisms(self):
        for L in (m3(), n5(), fig2_bands(), boolean(3)):
            for perm in automorphisms(L):
                self.assertTrue(is_automorphism(L, perm))

    def test_cap_keeps_generators(self):
        group = automorphisms(boolean(4), cap=10)
        self.assertFalse(group.complete)
        self.assertEqual(group.order, 24)
        for perm in group.generators:
            self.assertTrue(is_automorphism(boolean(4), perm))

    @given(L=lattices())
    @settings(max_examples=50, deadline=None)
    def test_random_lattices(self, L):
        group = automorphisms(L)
        self.assertEqual(len(set(group)), group.order)
        for perm in group:
            self.assertTrue(is_automorphism(L, perm))


class Orbits(unittest.TestCase):
    def test_m3(self):
        L = m3()
        blocks = [sorted(L.ids(block)) for block in orbit_partition(L).blocks]
        self.assertEqual(blocks, [["0"], ["a", "b", "c"], ["1"]])

    def test_fig2(self):
        L = fig2_bands()
        partition = orbit_partition(L)
        self.assertEqual(len(partition.blocks), 12)
        self.assertEqual(partition.block_of(L.element("LZ")), frozenset({L.element("LZ"), L.element("RZ")}))

    def test_dual_is_isomorphic(self):
        self.assertTrue(is_isomorphic(boolean(3), dual(boolean(3))))
        self.assertFalse(is_isomorphic(fig2_bands(), dual(fig2_bands())))
        self.assertFalse(is_isomorphic(fig1_chain(4), dual(fig1_chain(4))))


class Definable(unittest.TestCase):
    def test_fig2(self):
        L = fig2_bands()
        verdict = is_definable(L, parse_subset(L, "LZ"))
        self.assertFalse(verdict.definable)
        self.assertEqual(apply(verdict.witness, parse_subset(L, "LZ")), parse_subset(L, "RZ"))
        self.assertIn("(LZ RZ)", format_cycles(L, verdict.witness))
        self.assertTrue(is_definable(L, parse_subset(L, "LZ,RZ")).definable)
        self.assertTrue(is_definable(L, parse_subset(L, "SL")).definable)

    def test_up_to_the_flip(self):
        L = fig2_bands()
        (flip,) = automorphisms(L).generators
        self.assertTrue(is_definable_up_to(L, parse_subset(L, "LZ"), flip))
        self.assertFalse(is_definable_up_to(L, parse_subset(L, "SL"), flip))

    def test_empty_and_full(self):
        L = m3()
        self.assertTrue(is_definable(L, frozenset()).definable)
        self.assertTrue(is_definable(L, frozenset(range(len(L)))).definable)

    @given(L=lattices(), f=unary_formulas())
    @settings(max_examples=1000, deadline=None)
    def test_defined_sets_are_invariant(self, L, f):
        S = defined_set(L, f)
        self.assertTrue(is_definable(L, S).definable)
        for perm in automorphisms(L):
            self.assertEqual(apply(perm, S), S)


if __name__ == "__main__":
    unittest.main()
