"""Embedding of a group preserving a homogeneous Cartesian decomposition into Sym Gamma wr Sym Delta.

Blocks of every partition are labelled by their canonical index, so Gamma = {0..m-1}, and a
point w is sent to the function i -> (label of the block of partition i containing w).
A generator x that maps partition i to partition i*h is sent to the wreath element with top
h and base[i] = (label(b) -> label(b*x) for the blocks b of partition i).
"""
import logging
from collections import deque

import numpy as np

from wreathembed.cartdec import is_cartesian_decomposition, is_homogeneous, partition_image
from wreathembed.cartdec import preserves_decomposition
from wreathembed.errors import DegreeMismatch, NotACartesianDecomposition, NotHomogeneous, NotPreserved
from wreathembed.errors import SizeMismatch
from wreathembed.perm_core import Permutation, PermGroup, compose, identity
from wreathembed.profiler import time_usage
from wreathembed.wreath import WreathContext, WreathElement, wreath_as_permutation


class EmbeddingWitness:
    def __init__(self, group, decomposition, context, point_bijection, block_labelings, generator_images):
        self.group = group
        self.decomposition = decomposition
        self.context = context
        self.point_bijection = tuple(point_bijection)
        self.block_labelings = tuple(tuple(labels) for labels in block_labelings)
        self.generator_images = tuple(generator_images)

    def materialized_images(self):
        return [wreath_as_permutation(g, self.context) for g in self.generator_images]

    def image_group(self):
        return PermGroup(self.context.degree, self.materialized_images() or [identity(self.context.degree)],
                         element_cap=self.group.element_cap)

    def induced_top_actions(self):
        return [g.top for g in self.generator_images]


def _block_positions(decomposition):
    return [{block: index for index, block in enumerate(p.blocks)} for p in decomposition.partitions]


def wreath_element_of(x, decomposition, block_positions=None):
    """Decompose one permutation preserving a homogeneous decomposition into a WreathElement."""
    if x.degree != decomposition.ground_size:
        raise DegreeMismatch('permutation of degree %s against a decomposition of %s points'
                             % (x.degree, decomposition.ground_size))
    if block_positions is None:
        block_positions = _block_positions(decomposition)
    position = {partition: index for index, partition in enumerate(decomposition.partitions)}
    top = []
    base = []
    for partition in decomposition.partitions:
        target = position.get(partition_image(partition, x))
        if target is None:
            raise NotPreserved('%s does not map the partitions of the decomposition onto each other' % (x,))
        top.append(target)
        labels = block_positions[target]
        base.append(Permutation(labels[tuple(sorted(x.images[p] for p in block))] for block in partition.blocks))
    return WreathElement(base, Permutation(top))


@time_usage
def wreath_embedding(x_group, decomposition):
    if x_group.degree != decomposition.ground_size:
        raise DegreeMismatch('group of degree %s against a decomposition of %s points'
                             % (x_group.degree, decomposition.ground_size))
    if not is_cartesian_decomposition(decomposition):
        raise NotACartesianDecomposition('the partitions do not form a Cartesian decomposition')
    if not is_homogeneous(decomposition):
        raise NotHomogeneous('block counts %s differ' % decomposition.block_counts())
    preserved, _ = preserves_decomposition(x_group, decomposition)
    if not preserved:
        raise NotPreserved('some generator moves a partition outside the decomposition')

    gamma_size = decomposition.block_counts()[0]
    delta_size = len(decomposition.partitions)
    context = WreathContext(gamma_size, delta_size, degree_budget=decomposition.ground_size)
    point_bijection = context.indexing.indices(decomposition.membership.T).tolist()
    block_labelings = [list(range(gamma_size)) for _ in range(delta_size)]
    positions = _block_positions(decomposition)
    images = [wreath_element_of(x, decomposition, positions) for x in x_group.generators]
    logging.info('embedded %s generators into Sym(%s) wr Sym(%s)' % (len(images), gamma_size, delta_size))
    return EmbeddingWitness(x_group, decomposition, context, point_bijection, block_labelings, images)


def _intertwines(bijection, x, y):
    return np.array_equal(bijection[np.asarray(x.images)], np.asarray(y.images)[bijection])


def check_permutational_isomorphism(g, h_images, point_bijection, element_cap=None):
    """Check bijection(w x) = bijection(w) image(x); return (verdict, mode).

    The relation is checked for generators and products of generator pairs, then for every
    element of g reached by walking its Cayley graph alongside the images. The walk stops at
    element_cap, in which case mode is 'generator_pairs' instead of 'exhaustive'.
    """
    h_images = list(h_images)
    if len(h_images) != len(g.generators):
        raise SizeMismatch('%s images for %s generators' % (len(h_images), len(g.generators)))
    if len(point_bijection) != g.degree:
        raise SizeMismatch('bijection covers %s points, the group acts on %s' % (len(point_bijection), g.degree))
    if any(y.degree != g.degree for y in h_images):
        raise SizeMismatch('images must act on %s points' % g.degree)
    bijection = np.asarray(point_bijection, dtype=np.intp)
    if sorted(bijection.tolist()) != list(range(g.degree)):
        return False, 'generators'

    pairs = list(zip(g.generators, h_images))
    if not all(_intertwines(bijection, x, y) for x, y in pairs):
        return False, 'generators'
    for x1, y1 in pairs:
        for x2, y2 in pairs:
            if not _intertwines(bijection, compose(x1, x2), compose(y1, y2)):
                return False, 'generator_pairs'

    cap = element_cap if element_cap is not None else g.element_cap
    start = identity(g.degree)
    image_of = {start: start}
    preimage_of = {start: start}
    queue = deque([start])
    while queue:
        element = queue.popleft()
        image = image_of[element]
        for x, y in pairs:
            product, product_image = compose(element, x), compose(image, y)
            known = image_of.get(product)
            if known is not None:
                if known != product_image:
                    return False, 'exhaustive'
                continue
            if preimage_of.get(product_image, product) != product:
                return False, 'exhaustive'
            if len(image_of) >= cap:
                logging.info('isomorphism check stopped at %s elements, generator pairs only' % cap)
                return True, 'generator_pairs'
            image_of[product] = product_image
            preimage_of[product_image] = product
            queue.append(product)
    for element, image in image_of.items():
        if not _intertwines(bijection, element, image):
            return False, 'exhaustive'
    return True, 'exhaustive'


def is_permutational_isomorphism(g, h_images, point_bijection, element_cap=None):
    return check_permutational_isomorphism(g, h_images, point_bijection, element_cap)[0]


def image_preserves_natural_decomposition(witness, ctx):
    if witness.context != ctx:
        return False
    natural = ctx.natural_decomposition()
    preserved, _ = preserves_decomposition(witness.image_group(), natural)
    if not preserved:
        return False
    bijection = witness.point_bijection
    for partition, natural_partition, labels in zip(witness.decomposition.partitions, natural.partitions,
                                                    witness.block_labelings):
        for block, label in zip(partition.blocks, labels):
            if sorted(bijection[w] for w in block) != list(natural_partition.blocks[label]):
                return False
    return True


def in_full_wreath_group(x, ctx, full_group=None):
    """Membership of a permutation of Gamma^k in Sym Gamma wr Sym Delta.

    A permutation lies in the wreath product iff it preserves the natural decomposition and
    its decomposition materialises back to itself. When the enumerated full group is supplied
    the element set is consulted as well.
    """
    if x.degree != ctx.degree:
        raise DegreeMismatch('permutation of degree %s tested in Sym(%s) wr Sym(%s)'
                             % (x.degree, ctx.gamma_size, ctx.delta_size))
    try:
        element = wreath_element_of(x, ctx.natural_decomposition())
    except NotPreserved:
        return False
    if wreath_as_permutation(element, ctx) != x:
        return False
    if full_group is not None and full_group.elements is not None:
        return x in full_group.elements
    return True

