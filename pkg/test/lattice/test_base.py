import unittest
import numpy as np
from hypothesis import given, settings
from src.catalog.fixtures import chain, fig1_chain, fig2_bands, m3, n5, partition
from src.definability.automorphisms import is_isomorphic
from src.errors import (
    CycleDetected,
    DuplicateElement,
    EmptyInterval,
    MissingBound,
    NotALattice,
    UnknownElement,
)
from src.lattice.base import (
    atoms,
    build_from_covers,
    coatoms,
    cover_pairs,
    downset,
    dual,
    interval,
    is_chain,
    join_of,
    meet_of,
    parse_subset,
    upset,
)
from test.strategies import lattices


def check_bounds(test: unittest.TestCase, L):
    """meet/join are the glb/lub of leq, checked over every pair and third element"""
    leq, meet, join = L.leq, L.meet, L.join
    n = len(L)
    idx = np.arange(n)
    test.assertTrue(leq[meet, idx[:, None]].all() and leq[meet, idx[None, :]].all())
    test.assertTrue(leq[idx[:, None], join].all() and leq[idx[None, :], join].all())
    for c in range(n):
        below = leq[c][:, None] & leq[c][None, :]
        test.assertTrue(leq[c, meet][below].all())
        above = leq[:, c][:, None] & leq[:, c][None, :]
        test.assertTrue(leq[join, c][above].all())


class BuildFromCovers(unittest.TestCase):
    def test_singleton(self):
        L = build_from_covers(["t"], [])
        self.assertEqual(len(L), 1)
        self.assertEqual(L.bottom, L.top)

    def test_m3(self):
        L = m3()
        self.assertEqual(meet_of(L, "a", "b"), L.element("0"))
        self.assertEqual(join_of(L, "a", "b"), L.element("1"))
        check_bounds(self, L)

    def test_no_least_upper_bound(self):
        with self.assertRaises(NotALattice) as ctx:
            build_from_covers(["p", "q", "r", "s"], [("p", "r"), ("p", "s"), ("q", "r"), ("q", "s")])
        self.assertEqual(ctx.exception.pair, ("p", "q"))
        self.assertEqual(ctx.exception.reason, NotALattice.NO_LUB)

    def test_cycle(self):
        with self.assertRaises(CycleDetected):
            build_from_covers(["a", "b", "c"], [("a", "b"), ("b", "c"), ("c", "a")])

    def test_duplicate(self):
        with self.assertRaises(DuplicateElement) as ctx:
            build_from_covers(["a", "a"], [])
        self.assertEqual(ctx.exception.id, "a")

    def test_missing_bound(self):
        with self.assertRaises(MissingBound) as ctx:
            build_from_covers([], [])
        self.assertEqual(ctx.exception.which, "bottom")

    def test_unknown_cover_endpoint(self):
        with self.assertRaises(UnknownElement):
            build_from_covers(["a"], [("a", "b")])

    @given(L=lattices())
    @settings(max_examples=50, deadline=None)
    def test_random_lattices_have_valid_tables(self, L):
        check_bounds(self, L)
        self.assertTrue((L.meet == L.meet.T).all())
        idx = np.arange(len(L))
        # absorption a ^ (a v b) = a
        self.assertTrue((L.meet[idx[:, None], L.join] == idx[:, None]).all())
        self.assertTrue((L.meet[idx, idx] == idx).all())


class Queries(unittest.TestCase):
    def test_atoms(self):
        self.assertEqual(atoms(chain(3)), {1})
        L = m3()
        self.assertEqual(L.ids(atoms(L)), ["a", "b", "c"])
        F = fig2_bands()
        self.assertEqual(set(F.ids(atoms(F))), {"SL", "LZ", "RZ"})

    def test_downset_and_chains(self):
        L = fig1_chain(4)
        down = downset(L, "N4")
        self.assertEqual(set(L.ids(down)), {"T", "ZM", "N3", "N4"})
        self.assertTrue(is_chain(L, down))
        self.assertEqual(downset(L, L.bottom), {L.bottom})
        self.assertFalse(is_chain(m3(), parse_subset(m3(), "a,b")))

    def test_fig1_meet(self):
        L = fig1_chain(4)
        self.assertEqual(L.id(meet_of(L, "N3sq", "N3c")), "N3")

    def test_upset(self):
        L = n5()
        self.assertEqual(set(L.ids(upset(L, "a"))), {"a", "b", "1"})

    def test_join_with_top(self):
        L = n5()
        for x in range(len(L)):
            self.assertEqual(join_of(L, x, L.top), L.top)
            self.assertEqual(meet_of(L, x, x), x)

    def test_cover_pairs_are_sorted(self):
        L = n5()
        self.assertEqual([(L.id(a), L.id(b)) for a, b in cover_pairs(L)], [
            ("0", "a"), ("0", "c"), ("a", "b"), ("b", "1"), ("c", "1"),
        ])


class Dual(unittest.TestCase):
    def test_involution(self):
        for L in (chain(4), m3(), n5(), fig1_chain(4), fig2_bands(), partition(3)):
            self.assertEqual(dual(dual(L)), L)

    def test_atoms_of_dual_are_coatoms(self):
        for L in (n5(), fig1_chain(4), fig2_bands(), partition(4)):
            self.assertEqual(atoms(dual(L)), coatoms(L))

    def test_dual_n5_is_isomorphic(self):
        L = n5()
        self.assertTrue(is_isomorphic(dual(L), L))
        self.assertFalse(np.array_equal(dual(L).leq, L.leq))

    def test_dual_of_covers(self):
        L = n5()
        flipped = build_from_covers(L.elements, [(L.id(b), L.id(a)) for a, b in cover_pairs(L)])
        self.assertTrue(np.array_equal(flipped.leq, dual(L).leq))
        self.assertTrue(np.array_equal(flipped.meet, dual(L).meet))

    @given(L=lattices())
    @settings(max_examples=30, deadline=None)
    def test_random_duals(self, L):
        D = dual(L)
        check_bounds(self, D)
        self.assertEqual(atoms(D), coatoms(L))


class Interval(unittest.TestCase):
    def test_interval_keeps_labels(self):
        L = fig1_chain(4)
        sub = interval(L, "ZM", "TOP")
        self.assertIn("N3", sub.elements)
        self.assertNotIn("SL", sub.elements)
        self.assertEqual(sub.id(sub.bottom), "ZM")
        self.assertEqual(sub.id(sub.labels["N4"]), "N4")

    def test_empty_interval(self):
        with self.assertRaises(EmptyInterval):
            interval(m3(), "a", "b")


if __name__ == "__main__":
    unittest.main()
