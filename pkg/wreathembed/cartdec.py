"""Partitions, Cartesian decompositions and the natural decomposition of Func(Delta, Gamma).

Blocks are kept sorted and ordered by their minimum point, and the partitions of a
decomposition are ordered by their block lists, so equality is structural and block
indices are stable labels.
"""
import functools
import itertools
import logging
import operator

import numpy as np

from wreathembed.errors import BadDimensions, DegreeMismatch, EmptyIntersection, GroundMismatch, IndexOutOfRange
from wreathembed.errors import NonSingletonIntersection, NotACartesianDecomposition, NotAPartition, NotPreserved
from wreathembed.perm_core import Permutation, PermGroup, group_closure


class Partition:
    def __init__(self, ground_size, blocks):
        self.ground_size = ground_size
        self.blocks = tuple(sorted(tuple(sorted(int(x) for x in block)) for block in blocks))

    def block_index(self):
        """Array mapping every point to the index of its block."""
        membership = np.empty(self.ground_size, dtype=np.intp)
        for index, block in enumerate(self.blocks):
            membership[list(block)] = index
        return membership

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return False
        return self.ground_size == other.ground_size and self.blocks == other.blocks

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.ground_size, self.blocks))

    def __len__(self):
        return len(self.blocks)

    def __repr__(self):
        return 'Partition(%s, %s)' % (self.ground_size, [list(b) for b in self.blocks])


def partition_from_blocks(ground_size, blocks):
    seen = set()
    checked = []
    for block in blocks:
        block = [int(x) for x in block]
        if not block:
            raise NotAPartition('empty block in partition of %s points' % ground_size)
        for x in block:
            if x < 0 or x >= ground_size:
                raise NotAPartition('point %s is outside 0..%s' % (x, ground_size - 1))
            if x in seen:
                raise NotAPartition('point %s lies in more than one block' % x)
            seen.add(x)
        checked.append(block)
    if len(seen) != ground_size:
        missing = sorted(set(range(ground_size)) - seen)
        raise NotAPartition('points %s are not covered by any block' % missing)
    return Partition(ground_size, checked)


class CartesianDecomposition:
    """A set of partitions of one ground set, candidate for the Cartesian property."""

    def __init__(self, ground_size, partitions):
        partitions = list(partitions)
        for partition in partitions:
            if partition.ground_size != ground_size:
                raise GroundMismatch('partition of %s points in a decomposition of %s points'
                                     % (partition.ground_size, ground_size))
        self.ground_size = ground_size
        self.partitions = tuple(sorted(partitions, key=lambda p: p.blocks))
        if self.partitions:
            self.membership = np.array([p.block_index() for p in self.partitions])
        else:
            self.membership = np.empty((0, ground_size), dtype=np.intp)

    def block_counts(self):
        return [len(p.blocks) for p in self.partitions]

    def __eq__(self, other):
        if not isinstance(other, CartesianDecomposition):
            return False
        return self.ground_size == other.ground_size and self.partitions == other.partitions

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.ground_size, self.partitions))

    def __len__(self):
        return len(self.partitions)

    def __repr__(self):
        return 'CartesianDecomposition(%s, %s)' % (self.ground_size, list(self.partitions))


def is_cartesian_decomposition(decomposition):
    """Check the Cartesian property through the point-to-block-tuple map.

    Every block tuple meets in exactly one point iff the map from points to block tuples is
    injective and there are as many points as block tuples.
    """
    counts = decomposition.block_counts()
    if not counts or min(counts) < 2:
        return False
    if functools.reduce(operator.mul, counts, 1) != decomposition.ground_size:
        return False
    codes = np.ravel_multi_index(tuple(decomposition.membership), tuple(counts))
    return len(np.unique(codes)) == decomposition.ground_size


def brute_force_is_cartesian_decomposition(decomposition):
    """Reference check intersecting the blocks of every choice of one block per partition."""
    if not decomposition.partitions:
        return False
    if any(len(p.blocks) < 2 for p in decomposition.partitions):
        return False
    block_sets = [[set(block) for block in p.blocks] for p in decomposition.partitions]
    for choice in itertools.product(*block_sets):
        if len(set.intersection(*choice)) != 1:
            return False
    return True


def _require_valid(decomposition):
    if not is_cartesian_decomposition(decomposition):
        raise NotACartesianDecomposition('the partitions do not form a Cartesian decomposition')


def is_homogeneous(decomposition):
    _require_valid(decomposition)
    return len(set(decomposition.block_counts())) == 1


def is_trivial(decomposition):
    return len(decomposition.partitions) == 1


def encode_point(decomposition, point):
    return tuple(int(row[point]) for row in decomposition.membership)


def decode_point(decomposition, choice):
    if len(choice) != len(decomposition.partitions):
        raise IndexOutOfRange('expected %s block indices, got %s' % (len(decomposition.partitions), len(choice)))
    common = None
    for partition, index in zip(decomposition.partitions, choice):
        if index < 0 or index >= len(partition.blocks):
            raise IndexOutOfRange('block index %s is out of range for a partition with %s blocks'
                                  % (index, len(partition.blocks)))
        block = set(partition.blocks[index])
        common = block if common is None else common & block
    if not common:
        raise EmptyIntersection('blocks %s have no common point' % (tuple(choice),))
    if len(common) > 1:
        raise NonSingletonIntersection('blocks %s share %s points' % (tuple(choice), len(common)))
    return common.pop()


class MixedRadixIndexing:
    """Bijection between tuples in range(r_0) x ... x range(r_{k-1}) and 0..prod(r)-1, coordinate 0 most significant."""

    def __init__(self, radices):
        self.radices = tuple(int(r) for r in radices)
        self.size = functools.reduce(operator.mul, self.radices, 1)
        self._coordinates = None

    def index(self, coordinates):
        try:
            return int(np.ravel_multi_index(tuple(coordinates), self.radices))
        except ValueError as err:
            raise IndexOutOfRange('coordinates %s do not fit radices %s: %s' % (tuple(coordinates), self.radices, err))

    def point(self, index):
        if index < 0 or index >= self.size:
            raise IndexOutOfRange('index %s is outside 0..%s' % (index, self.size - 1))
        return tuple(int(c) for c in np.unravel_index(index, self.radices))

    def coordinates(self):
        """Array of shape (size, k) whose row i is point(i)."""
        if self._coordinates is None:
            self._coordinates = np.array(np.unravel_index(np.arange(self.size), self.radices)).T
        return self._coordinates

    def indices(self, coordinates):
        """Vectorised inverse of coordinates() for an array of shape (m, k)."""
        return np.ravel_multi_index(tuple(np.asarray(coordinates).T), self.radices)


def natural_cartesian_decomposition(gamma_size, delta_size):
    """The partitions Gamma_delta of Func(Delta, Gamma) by the value at coordinate delta."""
    if gamma_size < 2:
        raise BadDimensions('|Gamma| must be at least 2, got %s' % gamma_size)
    if delta_size < 1:
        raise BadDimensions('|Delta| must be at least 1, got %s' % delta_size)
    indexing = MixedRadixIndexing([gamma_size] * delta_size)
    coordinates = indexing.coordinates()
    partitions = []
    for delta in range(delta_size):
        blocks = [np.flatnonzero(coordinates[:, delta] == gamma) for gamma in range(gamma_size)]
        partitions.append(Partition(indexing.size, blocks))
    logging.debug('natural decomposition of %s^%s has %s partitions' % (gamma_size, delta_size, len(partitions)))
    return CartesianDecomposition(indexing.size, partitions), indexing


def partition_image(partition, x):
    if x.degree != partition.ground_size:
        raise DegreeMismatch('permutation of degree %s applied to a partition of %s points'
                             % (x.degree, partition.ground_size))
    images = x.images
    return Partition(partition.ground_size, [[images[p] for p in block] for block in partition.blocks])


def preserves_decomposition(g, decomposition):
    """Return (True, induced actions) when every generator permutes the partitions, else (False, None).

    The induced action of a generator is the permutation of partition indices i -> j with
    Gamma_i * x = Gamma_j.
    """
    if g.degree != decomposition.ground_size:
        raise DegreeMismatch('group of degree %s against a decomposition of %s points'
                             % (g.degree, decomposition.ground_size))
    position = {partition: index for index, partition in enumerate(decomposition.partitions)}
    induced = []
    for generator in g.generators:
        targets = []
        for partition in decomposition.partitions:
            target = position.get(partition_image(partition, generator))
            if target is None:
                return False, None
            targets.append(target)
        induced.append(Permutation(targets))
    return True, induced


def induced_partition_action(g, decomposition):
    """The group induced by g on the partition indices of a preserved decomposition."""
    preserved, induced = preserves_decomposition(g, decomposition)
    if not preserved:
        raise NotPreserved('the group does not preserve the decomposition')
    return group_closure(PermGroup(len(decomposition.partitions), induced))
