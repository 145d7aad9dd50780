import itertools
import json
import unittest

from wreathembed.cartdec import MixedRadixIndexing, preserves_decomposition
from wreathembed.diagonal import AutomorphismSet, automorphism_group, cayley_from_table, coset_image
from wreathembed.diagonal import cyclic_table, diagonal_action_on_cosets, diagonal_conjugation_image
from wreathembed.diagonal import diagonal_generators, diagonal_group, direct_product_table, find_outer_complement
from wreathembed.diagonal import inner_automorphisms, prop36_subgroup, supplied_automorphisms, symmetric_group_table
from wreathembed.diagonal import tau
from wreathembed.embedding import in_full_wreath_group
from wreathembed.errors import DegreeBudgetExceeded, IdentityNotZero, InvalidInputError, InvalidTable, NotAssociative
from wreathembed.errors import DegreeMismatch, NotAnAutomorphism, NotLatin, OrderTooLarge
from wreathembed.perm_core import PermGroup, identity, perm_from_images, point_stabilizer
from wreathembed.utils import read_automorphisms, read_cayley_rows
from wreathembed.wreath import WreathContext, full_wreath_group


def load_table(name):
    return cayley_from_table(read_cayley_rows('tests/data/%s.tbl' % name))


class TestCayleyTables(unittest.TestCase):

    def setUp(self):
        self.c2 = load_table('c2')
        self.c3 = load_table('c3')
        self.s3 = load_table('s3')
        self.v4 = load_table('v4')

    def test_fixtures(self):
        self.assertEqual(self.c2, cyclic_table(2))
        self.assertEqual(self.c3.rows(), [[0, 1, 2], [1, 2, 0], [2, 0, 1]])
        self.assertEqual(self.s3, symmetric_group_table(3))
        self.assertEqual(self.v4, direct_product_table(self.c2, self.c2))

    def test_rejections(self):
        with self.assertRaises(NotLatin):
            cayley_from_table([[0, 1], [1, 1]])
        with self.assertRaises(NotLatin):
            cayley_from_table(read_cayley_rows('tests/data/not_latin.tbl'))
        with self.assertRaises(NotLatin):
            cayley_from_table([[0, 1], [1, 2]])
        with self.assertRaises(IdentityNotZero):
            cayley_from_table([[1, 0], [0, 1]])
        with self.assertRaises(InvalidTable):
            cayley_from_table([[0, 1, 2], [1, 0, 2]])
        with self.assertRaises(InvalidTable):
            cayley_from_table([[0, 1], [1]])

    def test_associativity(self):
        # a Latin square with identity 0 that is not a group: a loop of order 5
        rows = [[0, 1, 2, 3, 4],
                [1, 0, 3, 4, 2],
                [2, 4, 0, 1, 3],
                [3, 2, 4, 0, 1],
                [4, 3, 1, 2, 0]]
        with self.assertRaises(NotAssociative):
            cayley_from_table(rows)

    def test_element_arithmetic(self):
        self.assertEqual(self.c3.inverse(1), 2)
        self.assertEqual(self.c3.element_order(1), 3)
        self.assertTrue(self.c3.is_abelian())
        self.assertFalse(self.s3.is_abelian())
        for x in range(6):
            self.assertEqual(self.s3.multiply(x, self.s3.inverse(x)), 0)
            self.assertEqual(self.s3.conjugate(x, 0), x)
        self.assertEqual(sorted(self.s3.element_order(x) for x in range(6)), [1, 2, 2, 2, 3, 3])

    def test_generating_set(self):
        self.assertEqual(cyclic_table(1).generating_set(), [])
        self.assertEqual(self.c3.generating_set(), [1])
        self.assertEqual(self.v4.generating_set(), [1, 2])
        self.assertEqual(len(self.s3.subgroup(self.s3.generating_set())), 6)


class TestAutomorphisms(unittest.TestCase):

    def setUp(self):
        with open('tests/data/expected.json', 'r') as read_file:
            self.data = json.load(read_file)
        self.tables = {name: load_table(name) for name in ('c2', 'c3', 's3', 'v4')}

    def test_orders(self):
        for name, table in self.tables.items():
            automorphisms = automorphism_group(table)
            self.assertEqual(automorphisms.order(), self.data['automorphism_orders'][name])
            self.assertEqual(automorphisms.inner_order(), self.data['inner_orders'][name])

    def test_automorphisms_respect_the_table(self):
        for table in self.tables.values():
            automorphisms = automorphism_group(table)
            self.assertEqual(automorphisms.automorphisms[0], identity(table.order))
            for alpha in automorphisms.automorphisms:
                for a, b in itertools.product(range(table.order), repeat=2):
                    self.assertEqual(alpha.images[table.multiply(a, b)],
                                     table.multiply(alpha.images[a], alpha.images[b]))
            self.assertTrue(automorphisms.inner <= set(automorphisms.automorphisms))

    def test_c3_inversion(self):
        automorphisms = automorphism_group(self.tables['c3'])
        self.assertEqual(list(automorphisms.automorphisms), [identity(3), perm_from_images([0, 2, 1])])
        self.assertEqual(automorphisms.inner_flags, [True, False])

    def test_s3_all_inner(self):
        automorphisms = automorphism_group(self.tables['s3'])
        self.assertTrue(all(automorphisms.inner_flags))
        self.assertEqual(inner_automorphisms(self.tables['s3']), set(automorphisms.automorphisms))

    def test_order_bound(self):
        with self.assertRaises(OrderTooLarge):
            automorphism_group(cyclic_table(13))
        self.assertEqual(automorphism_group(cyclic_table(13), bound=13).order(), 12)

    def test_complements(self):
        for name, table in self.tables.items():
            automorphisms = automorphism_group(table)
            complement = find_outer_complement(automorphisms)
            self.assertEqual(len(complement), self.data['complement_orders'][name])
            self.assertEqual(set(complement) & automorphisms.inner, {identity(table.order)})
            self.assertEqual(len(complement) * automorphisms.inner_order(), automorphisms.order())
        self.assertEqual(find_outer_complement(automorphism_group(self.tables['s3'])), (identity(6),))

    def test_abelian_complement_is_everything(self):
        automorphisms = automorphism_group(self.tables['v4'])
        self.assertEqual(set(find_outer_complement(automorphisms)), set(automorphisms.automorphisms))

    def test_no_complement(self):
        # Aut = C4 acting on 4 points with Inn the subgroup of order 2: no subgroup of order 2 avoids it
        rotation = perm_from_images([1, 2, 3, 0])
        half_turn = perm_from_images([2, 3, 0, 1])
        automorphisms = AutomorphismSet([identity(4), rotation, half_turn, perm_from_images([3, 0, 1, 2])],
                                        [identity(4), half_turn])
        self.assertIsNone(find_outer_complement(automorphisms))

    def test_complement_bound(self):
        automorphisms = automorphism_group(symmetric_group_table(4), bound=24)
        with self.assertRaises(OrderTooLarge):
            find_outer_complement(automorphisms, bound=12)

    def test_with_complement(self):
        automorphisms = automorphism_group(self.tables['c3'])
        stored = automorphisms.with_complement(find_outer_complement(automorphisms))
        self.assertEqual(len(stored.complement), 2)

    def test_supplied_automorphisms(self):
        c3 = self.tables['c3']
        supplied = supplied_automorphisms(c3, [perm_from_images([0, 2, 1])])
        self.assertEqual(supplied.automorphisms, automorphism_group(c3).automorphisms)
        self.assertEqual(supplied.inner_order(), 1)
        s3 = self.tables['s3']
        self.assertEqual(supplied_automorphisms(s3, []).automorphisms, automorphism_group(s3).automorphisms)

    def test_supplied_automorphisms_of_c13(self):
        c13 = load_table('c13')
        supplied = supplied_automorphisms(c13, read_automorphisms('tests/data/c13.aut'))
        self.assertEqual(supplied.order(), 12)
        self.assertEqual(supplied.inner_order(), 1)
        self.assertEqual(len(find_outer_complement(supplied)), 12)

    def test_supplied_automorphisms_are_validated(self):
        c13 = load_table('c13')
        with self.assertRaises(NotAnAutomorphism):
            supplied_automorphisms(c13, read_automorphisms('tests/data/not_automorphism.aut'))
        with self.assertRaises(DegreeMismatch):
            supplied_automorphisms(c13, [perm_from_images([0, 2, 1])])
        with self.assertRaises(NotAnAutomorphism):
            supplied_automorphisms(self.tables['s3'], [perm_from_images([0, 2, 1, 3, 4, 5])])


class TestDiagonalGroup(unittest.TestCase):

    def setUp(self):
        self.c2 = load_table('c2')
        self.c3 = load_table('c3')
        self.s3 = load_table('s3')

    def test_generators_are_bijections(self):
        for table in (self.c2, self.c3, self.s3):
            for n in (1, 2):
                for permutations in diagonal_generators(table, n).values():
                    for p in permutations:
                        self.assertEqual(sorted(p.images), list(range(table.order ** n)))

    def test_tau(self):
        for table in (self.c2, self.c3, self.s3):
            for n in (1, 2):
                self.assertEqual(tau(table, n).images[0], 0)
        indexing = MixedRadixIndexing([3, 3])
        t = tau(self.c3, 2)
        self.assertEqual(indexing.point(t.images[indexing.index((1, 2))]), (2, 1))

    def test_orders(self):
        group = diagonal_group(self.c3, 1, 'ae')
        self.assertEqual(group.degree, 3)
        self.assertEqual(len(group.elements), 6)
        group = diagonal_group(self.c2, 2, 'ad')
        self.assertEqual(group.degree, 4)
        self.assertEqual(len(group.elements), 8)

    def test_family_a_is_semiregular(self):
        for table, n in ((self.c2, 2), (self.c3, 2), (self.c3, 4), (load_table('v4'), 2)):
            group = diagonal_group(table, n, 'a')
            self.assertEqual(len(group.elements), table.order ** n)
            self.assertEqual(len(point_stabilizer(group, 0).elements), 1)

    def test_families(self):
        generators = diagonal_generators(self.c3, 2, 'ce')
        self.assertEqual(list(generators), ['c', 'e'])
        self.assertEqual(len(generators['c']), 1)
        self.assertEqual(diagonal_generators(self.c3, 1, 'd')['d'], [])
        with self.assertRaises(InvalidInputError):
            diagonal_generators(self.c3, 2, 'af')
        with self.assertRaises(InvalidInputError):
            diagonal_generators(self.c3, 0, 'a')

    def test_budget(self):
        with self.assertRaises(DegreeBudgetExceeded):
            diagonal_group(self.s3, 5, 'a')
        with self.assertRaises(DegreeBudgetExceeded):
            diagonal_action_on_cosets(self.s3, 5)

    def test_tau_moves_partitions(self):
        natural = WreathContext(3, 2).natural_decomposition()
        self.assertFalse(preserves_decomposition(PermGroup(9, [tau(self.c3, 2)]), natural)[0])
        for family in 'abcd':
            for p in diagonal_generators(self.c3, 2, family)[family]:
                self.assertTrue(preserves_decomposition(PermGroup(9, [p]), natural)[0])


class TestCosetRealisation(unittest.TestCase):

    def setUp(self):
        self.tables = [load_table('c2'), load_table('c3'), load_table('s3')]

    def test_transposition_display(self):
        for table in self.tables:
            transposition = diagonal_action_on_cosets(table, 2).generators[-1]
            indexing = MixedRadixIndexing([table.order] * 2)
            for g1, g2 in itertools.product(range(table.order), repeat=2):
                inverse = table.inverse(g1)
                image = indexing.point(transposition.images[indexing.index((g1, g2))])
                self.assertEqual(image, (inverse, table.multiply(inverse, g2)))

    def test_right_multiplication_of_cosets(self):
        table = self.tables[2]
        for g1, g2 in itertools.product(range(6), repeat=2):
            self.assertEqual(coset_image(table, (g1, g2), (0, 3, 0)), (table.multiply(g1, 3), g2))
            self.assertEqual(coset_image(table, (g1, g2), (3, 0, 0)),
                             (table.multiply(table.inverse(3), g1), table.multiply(table.inverse(3), g2)))

    def test_identity_coset_fixed_by_transposition(self):
        for table in self.tables:
            cosets = diagonal_action_on_cosets(table, 2)
            self.assertEqual(cosets.generators[-1].images[0], 0)

    def test_c2_transposition_is_trivial(self):
        cosets = diagonal_action_on_cosets(self.tables[0], 1)
        self.assertTrue(cosets.generators[-1].is_identity())

    def test_conjugation_display(self):
        for table in (self.tables[1], self.tables[2]):
            for x in range(table.order):
                for g1, g2 in itertools.product(range(table.order), repeat=2):
                    self.assertEqual(diagonal_conjugation_image(table, (g1, g2), x),
                                     (table.conjugate(g1, x), table.conjugate(g2, x)))

    def test_cosets_match_tuples(self):
        for table in self.tables[:2]:
            for n in (1, 2):
                cosets = diagonal_action_on_cosets(table, n)
                tuples = diagonal_group(table, n, 'abde')
                self.assertEqual(cosets.generators, tuples.generators)
                self.assertEqual(cosets.elements, tuples.elements)

    def test_lift_length(self):
        with self.assertRaises(InvalidInputError):
            coset_image(self.tables[1], (1, 2), (0, 0))


class TestProp36Subgroup(unittest.TestCase):

    def setUp(self):
        with open('tests/data/expected.json', 'r') as read_file:
            self.data = json.load(read_file)

    def test_orders_and_membership(self):
        for name, order in self.data['prop36_orders'].items():
            table = load_table(name)
            complement = find_outer_complement(automorphism_group(table))
            group, generators = prop36_subgroup(table, 2, complement)
            self.assertEqual(len(group.elements), order)
            ctx = WreathContext(table.order, 2)
            self.assertTrue(preserves_decomposition(group, ctx.natural_decomposition())[0])
            if table.order <= 3:
                full = full_wreath_group(ctx)
                self.assertTrue(group.elements <= full.elements)
            for g in group.generators:
                self.assertTrue(in_full_wreath_group(g, ctx))
            self.assertEqual(len(generators), len(group.generators))

    def test_matches_diagonal_families(self):
        table = load_table('c3')
        complement = find_outer_complement(automorphism_group(table))
        group, _ = prop36_subgroup(table, 2, complement)
        diagonal = diagonal_group(table, 2, 'acd', automorphisms=complement)
        self.assertEqual(group.generators, diagonal.generators)
        self.assertEqual(group.elements, diagonal.elements)

    def test_generators_are_pure(self):
        table = load_table('c3')
        _, generators = prop36_subgroup(table, 2, find_outer_complement(automorphism_group(table)))
        for g in generators:
            self.assertTrue(g.top.is_identity() or all(b.is_identity() for b in g.base))
