import json
import unittest

from wreathembed.cartdec import CartesianDecomposition, natural_cartesian_decomposition, partition_image
from wreathembed.embedding import EmbeddingWitness, check_permutational_isomorphism, image_preserves_natural_decomposition
from wreathembed.embedding import in_full_wreath_group, is_permutational_isomorphism, wreath_element_of
from wreathembed.embedding import wreath_embedding
from wreathembed.errors import DegreeMismatch, NotACartesianDecomposition, NotHomogeneous, NotPreserved, SizeMismatch
from wreathembed.perm_core import PermGroup, compose, group_closure, identity, inverse, perm_from_images
from wreathembed.perm_core import symmetric_group_generators
from wreathembed.utils import read_decomposition, read_group
from wreathembed.wreath import WreathContext, WreathElement, full_wreath_group, pure_base, wr_identity
from wreathembed.wreath import wreath_as_permutation, wreath_group


class TestWreathEmbedding(unittest.TestCase):

    def setUp(self):
        with open('tests/data/expected.json', 'r') as read_file:
            self.data = json.load(read_file)
        self.square = read_decomposition('tests/data/square.part')
        self.wreath22 = read_group('tests/data/wreath22.gens')

    def assert_round_trip(self, x_group, decomposition):
        witness = wreath_embedding(x_group, decomposition)
        images = witness.materialized_images()
        verdict, mode = check_permutational_isomorphism(x_group, images, witness.point_bijection)
        self.assertTrue(verdict)
        self.assertEqual(mode, 'exhaustive')
        self.assertTrue(image_preserves_natural_decomposition(witness, witness.context))
        self.assertEqual(len(group_closure(witness.image_group()).elements), len(group_closure(x_group).elements))
        return witness

    def test_full_wreath_groups_round_trip(self):
        for gamma_size, delta_size, order in self.data['full_wreath_orders']:
            ctx = WreathContext(gamma_size, delta_size)
            full = full_wreath_group(ctx)
            witness = self.assert_round_trip(full, ctx.natural_decomposition())
            self.assertEqual(witness.context, ctx)
            self.assertEqual(len(group_closure(witness.image_group()).elements), order)
            self.assertEqual(list(witness.point_bijection), list(range(ctx.degree)))

    def test_generators_file(self):
        witness = self.assert_round_trip(self.wreath22, self.square)
        self.assertEqual([list(top.images) for top in witness.induced_top_actions()], [[0, 1], [0, 1], [1, 0]])

    def test_trivial_group(self):
        witness = wreath_embedding(PermGroup(8, [identity(8)]), read_decomposition('tests/data/example22.part'))
        self.assertEqual(witness.generator_images, (wr_identity(WreathContext(2, 3)),))
        self.assertTrue(image_preserves_natural_decomposition(witness, witness.context))

    def test_coordinatewise_group_has_pure_base_images(self):
        x_group = PermGroup(4, [perm_from_images([2, 3, 0, 1]), perm_from_images([1, 0, 3, 2])])
        witness = self.assert_round_trip(x_group, self.square)
        for image in witness.generator_images:
            self.assertTrue(image.top.is_identity())

    def test_relabelled_points(self):
        relabel = perm_from_images([0, 3, 1, 2])
        moved = CartesianDecomposition(4, [partition_image(p, relabel) for p in self.square.partitions])
        conjugated = PermGroup(4, [compose(compose(inverse(relabel), g), relabel) for g in self.wreath22.generators])
        witness = self.assert_round_trip(conjugated, moved)
        self.assertNotEqual(list(witness.point_bijection), list(range(4)))

    def test_rejections(self):
        with self.assertRaises(NotHomogeneous):
            wreath_embedding(PermGroup(6, [identity(6)]), read_decomposition('tests/data/grid23.part'))
        with self.assertRaises(NotACartesianDecomposition):
            wreath_embedding(PermGroup(4, [identity(4)]), read_decomposition('tests/data/overlap.part'))
        with self.assertRaises(NotPreserved):
            wreath_embedding(PermGroup(4, symmetric_group_generators(4)), self.square)
        with self.assertRaises(DegreeMismatch):
            wreath_embedding(PermGroup(3, [identity(3)]), self.square)


class TestPermutationalIsomorphism(unittest.TestCase):

    def setUp(self):
        self.wreath22 = read_group('tests/data/wreath22.gens')
        self.square = read_decomposition('tests/data/square.part')

    def test_identity_bijection(self):
        self.assertTrue(is_permutational_isomorphism(self.wreath22, self.wreath22.generators, list(range(4))))

    def test_corrupted_image(self):
        witness = wreath_embedding(self.wreath22, self.square)
        first = witness.generator_images[0]
        corrupted = WreathElement([first.base[1], first.base[0]], first.top)
        images = [wreath_as_permutation(corrupted, witness.context)] + witness.materialized_images()[1:]
        self.assertFalse(is_permutational_isomorphism(self.wreath22, images, witness.point_bijection))

    def test_not_a_bijection(self):
        self.assertFalse(is_permutational_isomorphism(self.wreath22, self.wreath22.generators, [0, 0, 1, 2]))

    def test_generator_pairs_mode(self):
        verdict, mode = check_permutational_isomorphism(self.wreath22, self.wreath22.generators, list(range(4)),
                                                        element_cap=3)
        self.assertTrue(verdict)
        self.assertEqual(mode, 'generator_pairs')

    def test_non_injective_images(self):
        one = identity(4)
        g = PermGroup(4, [perm_from_images([1, 0, 3, 2])])
        self.assertFalse(is_permutational_isomorphism(g, [one], list(range(4))))

    def test_size_mismatch(self):
        with self.assertRaises(SizeMismatch):
            check_permutational_isomorphism(self.wreath22, self.wreath22.generators[:2], list(range(4)))
        with self.assertRaises(SizeMismatch):
            check_permutational_isomorphism(self.wreath22, self.wreath22.generators, list(range(3)))
        with self.assertRaises(SizeMismatch):
            check_permutational_isomorphism(self.wreath22, [identity(3)] * 3, list(range(4)))


class TestNaturalImage(unittest.TestCase):

    def test_corrupted_bijection(self):
        ctx = WreathContext(2, 2)
        full = full_wreath_group(ctx)
        witness = wreath_embedding(full, ctx.natural_decomposition())
        corrupted = EmbeddingWitness(witness.group, witness.decomposition, witness.context, [1, 0, 2, 3],
                                     witness.block_labelings, witness.generator_images)
        self.assertFalse(image_preserves_natural_decomposition(corrupted, ctx))
        self.assertFalse(image_preserves_natural_decomposition(witness, WreathContext(2, 3)))


class TestWreathMembership(unittest.TestCase):

    def test_members(self):
        ctx = WreathContext(2, 2)
        full = full_wreath_group(ctx)
        for x in full.elements:
            self.assertTrue(in_full_wreath_group(x, ctx, full))
            self.assertTrue(in_full_wreath_group(x, ctx))
        self.assertFalse(in_full_wreath_group(perm_from_images([1, 0, 2, 3]), ctx))
        self.assertFalse(in_full_wreath_group(perm_from_images([1, 2, 0, 3]), ctx, full))
        with self.assertRaises(DegreeMismatch):
            in_full_wreath_group(identity(3), ctx)

    def test_membership_without_enumeration(self):
        ctx = WreathContext(3, 3)
        natural, _ = natural_cartesian_decomposition(3, 3)
        element = pure_base(ctx, [perm_from_images([1, 2, 0]), identity(3), perm_from_images([0, 2, 1])])
        x = wreath_as_permutation(element, ctx)
        self.assertTrue(in_full_wreath_group(x, ctx))
        self.assertEqual(wreath_element_of(x, natural), element)

    def test_subgroup_materializes_inside(self):
        ctx = WreathContext(3, 2)
        group = wreath_group(ctx, [pure_base(ctx, [perm_from_images([1, 2, 0]), identity(3)])])
        full = full_wreath_group(ctx)
        self.assertTrue(group.elements <= full.elements)
