"""Permutations of {0, ..., n-1} and permutation groups enumerated by closure.

All actions are on the right: the image of point x under p is ``p.images[x]`` and
``compose(p, q)`` applies p first, then q.
"""
import itertools
import logging
import re
from collections import deque

import networkx as nx

from wreathembed import settings
from wreathembed.errors import CapExceeded, DegreeMismatch, InputFormatError, InvalidInputError, InvalidTable
from wreathembed.errors import NotABijection, OrderTooLarge
from wreathembed.profiler import time_usage


class Permutation:
    """A bijection of {0, ..., degree-1} stored as its image array."""

    __slots__ = ('images', '_hash')

    def __init__(self, images):
        self.images = tuple(images)
        self._hash = hash(self.images)

    @property
    def degree(self):
        return len(self.images)

    def image(self, point):
        return self.images[point]

    def is_identity(self):
        return all(x == y for x, y in enumerate(self.images))

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return False
        return self.images == other.images

    def __ne__(self, other):
        return not self == other

    def __lt__(self, other):
        return self.images < other.images

    def __hash__(self):
        return self._hash

    def __len__(self):
        return len(self.images)

    def __repr__(self):
        return 'Permutation(%s)' % list(self.images)


def perm_from_images(images):
    images = [int(x) for x in images]
    if not images:
        raise NotABijection('a permutation needs at least one point')
    degree = len(images)
    seen = [False] * degree
    for x in images:
        if x < 0 or x >= degree:
            raise NotABijection('image %s is outside 0..%s' % (x, degree - 1))
        if seen[x]:
            raise NotABijection('image %s appears more than once in %s' % (x, images))
        seen[x] = True
    return Permutation(images)


def perm_from_cycles(text, degree):
    """Parse cycle notation such as ``(0 1)(2 3 4)`` or ``(0,1)``; ``()`` or an empty string is the identity."""
    images = list(range(degree))
    text = text.strip()
    if text and not re.fullmatch(r'(\(\s*[\d\s,]*\)\s*)+', text):
        raise InputFormatError('cannot parse cycle notation %r' % text)
    used = set()
    for body in re.findall(r'\(([^)]*)\)', text):
        cycle = [int(x) for x in re.split(r'[\s,]+', body.strip()) if x]
        for x in cycle:
            if x < 0 or x >= degree:
                raise NotABijection('point %s of cycle (%s) is outside 0..%s' % (x, body, degree - 1))
            if x in used:
                raise NotABijection('point %s occurs in more than one cycle of %r' % (x, text))
            used.add(x)
        for i, x in enumerate(cycle):
            images[x] = cycle[(i + 1) % len(cycle)]
    return Permutation(images)


def identity(degree):
    return Permutation(range(degree))


def transposition(degree, a, b):
    images = list(range(degree))
    images[a], images[b] = b, a
    return Permutation(images)


def cycle(degree, points):
    images = list(range(degree))
    for i, x in enumerate(points):
        images[x] = points[(i + 1) % len(points)]
    return Permutation(images)


def symmetric_group_generators(m):
    """The canonical generators {(0 1), (0 1 ... m-1)} of Sym on m points."""
    if m == 1:
        return [identity(1)]
    generators = [transposition(m, 0, 1)]
    long_cycle = cycle(m, list(range(m)))
    if long_cycle not in generators:
        generators.append(long_cycle)
    return generators


def compose(p, q):
    if p.degree != q.degree:
        raise DegreeMismatch('cannot compose permutations of degree %s and %s' % (p.degree, q.degree))
    q_images = q.images
    return Permutation([q_images[x] for x in p.images])


def inverse(p):
    inv = [0] * p.degree
    for x, y in enumerate(p.images):
        inv[y] = x
    return Permutation(inv)


def element_order(p):
    result = 1
    current = p
    while not current.is_identity():
        current = compose(current, p)
        result += 1
    return result


class PermGroup:
    """A permutation group given by generators, optionally with its full element set."""

    def __init__(self, degree, generators, elements=None, element_cap=None):
        if degree < 1:
            raise InvalidInputError('degree must be positive, got %s' % degree)
        generators = list(generators)
        if not generators:
            raise InvalidInputError('a permutation group needs at least one generator')
        for generator in generators:
            if generator.degree != degree:
                raise DegreeMismatch('generator %s does not have degree %s' % (generator, degree))
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = frozenset(elements) if elements is not None else None
        self.element_cap = element_cap if element_cap is not None else settings.ELEMENT_CAP

    def is_enumerated(self):
        return self.elements is not None

    def order(self):
        return len(group_closure(self).elements)

    def __repr__(self):
        order = len(self.elements) if self.elements is not None else '?'
        return 'PermGroup(degree=%s, generators=%s, order=%s)' % (self.degree, len(self.generators), order)


@time_usage
def group_closure(g):
    """Enumerate every element of g by breadth-first search on the Cayley graph of its generators."""
    if g.elements is not None:
        return g
    start = identity(g.degree)
    elements = {start}
    queue = deque([start])
    while queue:
        element = queue.popleft()
        for generator in g.generators:
            product = compose(element, generator)
            if product in elements:
                continue
            elements.add(product)
            if len(elements) > g.element_cap:
                raise CapExceeded(g.element_cap, len(elements))
            queue.append(product)
    logging.debug('closure of %s generators on %s points has %s elements' % (len(g.generators), g.degree,
                                                                             len(elements)))
    return PermGroup(g.degree, g.generators, elements, g.element_cap)


def contains(g, p):
    return p in group_closure(g).elements


def orbits(g):
    from wreathembed.cartdec import Partition

    graph = nx.Graph()
    graph.add_nodes_from(range(g.degree))
    for generator in g.generators:
        graph.add_edges_from((x, y) for x, y in enumerate(generator.images) if x != y)
    return Partition(g.degree, nx.connected_components(graph))


def is_transitive(g):
    return len(orbits(g).blocks) == 1


def point_stabilizer(g, point):
    if point < 0 or point >= g.degree:
        raise InvalidInputError('point %s is outside 0..%s' % (point, g.degree - 1))
    closed = group_closure(g)
    fixing = sorted(e for e in closed.elements if e.images[point] == point)
    generators = [e for e in fixing if not e.is_identity()] or [identity(g.degree)]
    return PermGroup(g.degree, generators, fixing, g.element_cap)


def is_semiregular(g):
    closed = group_closure(g)
    for element in closed.elements:
        if element.is_identity():
            continue
        if any(x == y for x, y in enumerate(element.images)):
            return False
    return True


def is_regular(g):
    closed = group_closure(g)
    return is_transitive(closed) and len(closed.elements) == closed.degree


def conjugate(p, x):
    """p^x = x^-1 p x."""
    return compose(compose(inverse(x), p), x)


def normalizes(x, g):
    closed = group_closure(g)
    return all(conjugate(p, x) in closed.elements for p in closed.generators)


@time_usage
def normalizer_in_symmetric_group(g, bound=None):
    """The normalizer of g in Sym(degree), by running through every permutation of the points."""
    bound = bound if bound is not None else settings.NORMALIZER_SEARCH_BOUND
    if g.degree > bound:
        raise OrderTooLarge('normalizer search is limited to degree %s, got %s' % (bound, g.degree))
    closed = group_closure(g)
    found = [x for x in (Permutation(images) for images in itertools.permutations(range(g.degree)))
             if normalizes(x, closed)]
    logging.info('normalizer in Sym(%s) of a group of order %s has order %s' % (g.degree, len(closed.elements),
                                                                                len(found)))
    generators = [x for x in found if not x.is_identity()] or [identity(g.degree)]
    return PermGroup(g.degree, generators, found, g.element_cap)


def right_regular_representation(t):
    """The regular action of a Cayley table on its own elements, x -> x*g."""
    table = getattr(t, 'table', None)
    if table is None or len(table) != t.order:
        raise InvalidTable('right regular representation needs a validated Cayley table')
    columns = [Permutation(int(x) for x in table[:, g]) for g in range(t.order)]
    generators = [columns[g] for g in t.generating_set()] or [identity(t.order)]
    return PermGroup(t.order, generators, columns)
