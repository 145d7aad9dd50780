"""Finite groups as Cayley tables, their automorphisms, and the diagonal group D(G, n).

Group elements are the indices 0..n-1 of a Cayley table with the identity at 0. Tuples in
G^n are numbered by cartdec.MixedRadixIndexing with the first coordinate most significant.
Permutations of G^n are built column-wise on the (|G|^n, n) coordinate array.
"""
import itertools
import logging
from collections import OrderedDict, deque

import numpy as np

from wreathembed import settings
from wreathembed.cartdec import MixedRadixIndexing
from wreathembed.errors import DegreeBudgetExceeded, DegreeMismatch, IdentityNotZero, InvalidInputError, InvalidTable
from wreathembed.errors import NotAnAutomorphism, NotAssociative, NotLatin, OrderTooLarge
from wreathembed.perm_core import Permutation, PermGroup, group_closure, identity
from wreathembed.perm_core import symmetric_group_generators
from wreathembed.profiler import time_usage
from wreathembed.wreath import WreathContext, pure_base, pure_top, wreath_group

DIAGONAL_FAMILIES = 'abcde'


class CayleyTable:
    """A validated multiplication table: table[a][b] is the index of a*b."""

    def __init__(self, table):
        self.table = np.asarray(table, dtype=np.intp)
        self.order = len(self.table)
        self.inverses = np.argmax(self.table == 0, axis=1)

    def multiply(self, a, b):
        return int(self.table[a, b])

    def inverse(self, a):
        return int(self.inverses[a])

    def conjugate(self, x, g):
        """x^g = g^-1 x g."""
        return self.multiply(self.multiply(self.inverse(g), x), g)

    def element_order(self, a):
        result, current = 1, a
        while current != 0:
            current = self.multiply(current, a)
            result += 1
        return result

    def is_abelian(self):
        return np.array_equal(self.table, self.table.T)

    def subgroup(self, generators):
        elements = {0}
        queue = deque([0])
        while queue:
            element = queue.popleft()
            for g in generators:
                product = self.multiply(element, g)
                if product not in elements:
                    elements.add(product)
                    queue.append(product)
        return elements

    def generating_set(self):
        """Greedy generating set: each element not yet generated is added as a generator."""
        generators = []
        generated = {0}
        for g in range(1, self.order):
            if g not in generated:
                generators.append(g)
                generated = self.subgroup(generators)
        return generators

    def rows(self):
        return self.table.tolist()

    def __eq__(self, other):
        if not isinstance(other, CayleyTable):
            return False
        return np.array_equal(self.table, other.table)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.table.tobytes())

    def __repr__(self):
        return 'CayleyTable(order=%s)' % self.order


def cayley_from_table(rows):
    try:
        table = np.array(rows, dtype=np.intp)
    except (TypeError, ValueError):
        raise InvalidTable('Cayley table rows must be integer lists of equal length')
    if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
        raise InvalidTable('Cayley table must be a non-empty square matrix, got shape %s' % (table.shape,))
    order = table.shape[0]
    expected = np.arange(order)
    if not (np.all(np.sort(table, axis=1) == expected) and np.all(np.sort(table, axis=0) == expected[:, None])):
        raise NotLatin('every row and column must be a permutation of 0..%s' % (order - 1))
    if not (np.array_equal(table[0], expected) and np.array_equal(table[:, 0], expected)):
        raise IdentityNotZero('element 0 must be the identity')
    if not np.array_equal(table[table], table[:, table]):
        raise NotAssociative('the table is not associative')
    return CayleyTable(table)


def cyclic_table(n):
    elements = np.arange(n)
    return cayley_from_table((elements[:, None] + elements[None, :]) % n)


def symmetric_group_table(m):
    """Sym(m) with the identity first, multiplied left to right (apply a, then b)."""
    perms = list(itertools.permutations(range(m)))
    position = {p: i for i, p in enumerate(perms)}
    rows = [[position[tuple(b[x] for x in a)] for b in perms] for a in perms]
    return cayley_from_table(rows)


def direct_product_table(first, second):
    n = second.order
    rows = []
    for a1, a2 in itertools.product(range(first.order), range(n)):
        rows.append([first.multiply(a1, b1) * n + second.multiply(a2, b2)
                     for b1, b2 in itertools.product(range(first.order), range(n))])
    return cayley_from_table(rows)


class AutomorphismSet:
    def __init__(self, automorphisms, inner, complement=None):
        self.automorphisms = tuple(sorted(automorphisms))
        self.inner = frozenset(inner)
        self.complement = tuple(sorted(complement)) if complement is not None else None

    @property
    def inner_flags(self):
        return [alpha in self.inner for alpha in self.automorphisms]

    def order(self):
        return len(self.automorphisms)

    def inner_order(self):
        return len(self.inner)

    def with_complement(self, complement):
        return AutomorphismSet(self.automorphisms, self.inner, complement)

    def __repr__(self):
        return 'AutomorphismSet(order=%s, inner=%s)' % (self.order(), self.inner_order())


def inner_automorphisms(t):
    return {Permutation(t.conjugate(x, g) for x in range(t.order)) for g in range(t.order)}


def _is_automorphism(t, alpha):
    if len(set(alpha.tolist())) != t.order:
        return False
    return np.array_equal(alpha[t.table], t.table[alpha[:, None], alpha[None, :]])


@time_usage
def automorphism_group(t, bound=None):
    """All automorphisms of t, by backtracking over images of a generating set.

    A generator may only go to an unused element of the same order; each complete choice is
    extended along a breadth-first spanning tree of the Cayley graph and kept if it respects
    the table.
    """
    bound = bound if bound is not None else settings.AUTOMORPHISM_ORDER_BOUND
    if t.order > bound:
        raise OrderTooLarge('automorphism search is limited to groups of order %s, got %s' % (bound, t.order))
    generators = t.generating_set()
    parent = {0: None}
    spanning_order = []
    queue = deque([0])
    while queue:
        element = queue.popleft()
        for index, g in enumerate(generators):
            product = t.multiply(element, g)
            if product not in parent:
                parent[product] = (element, index)
                spanning_order.append(product)
                queue.append(product)
    orders = [t.element_order(a) for a in range(t.order)]

    found = []

    def extend(images):
        if len(images) == len(generators):
            alpha = np.zeros(t.order, dtype=np.intp)
            for element in spanning_order:
                source, index = parent[element]
                alpha[element] = t.table[alpha[source], images[index]]
            if _is_automorphism(t, alpha):
                found.append(Permutation(alpha.tolist()))
            return
        wanted = orders[generators[len(images)]]
        for candidate in range(1, t.order):
            if orders[candidate] == wanted and candidate not in images:
                extend(images + [candidate])

    extend([])
    inner = inner_automorphisms(t)
    logging.info('group of order %s has %s automorphisms, %s inner' % (t.order, len(found), len(inner)))
    return AutomorphismSet(found, inner)


@time_usage
def supplied_automorphisms(t, permutations, element_cap=None):
    """The automorphism group generated by Inn(G) and the given automorphisms.

    Each permutation is checked against the table. Whether together they reach all of Aut(G)
    is taken on trust.
    """
    for alpha in permutations:
        if alpha.degree != t.order:
            raise DegreeMismatch('automorphism %s does not act on %s elements' % (alpha, t.order))
        if not _is_automorphism(t, np.asarray(alpha.images, dtype=np.intp)):
            raise NotAnAutomorphism('%s does not respect the Cayley table' % (alpha,))
    inner = inner_automorphisms(t)
    closed = group_closure(PermGroup(t.order, list(permutations) + sorted(inner), element_cap=element_cap))
    logging.info('%s supplied automorphisms generate %s automorphisms, %s inner'
                 % (len(permutations), len(closed.elements), len(inner)))
    return AutomorphismSet(closed.elements, inner)


@time_usage
def find_outer_complement(automorphisms, bound=None):
    """A subgroup O of Aut with O & Inn = 1 and |O||Inn| = |Aut|, or None when there is none.

    Every subgroup meeting Inn trivially is reached by adjoining outer automorphisms one at a
    time, so the search below is exhaustive.
    """
    bound = bound if bound is not None else settings.COMPLEMENT_SEARCH_BOUND
    aut_order = automorphisms.order()
    if aut_order > bound:
        raise OrderTooLarge('complement search is limited to |Aut| <= %s, got %s' % (bound, aut_order))
    degree = automorphisms.automorphisms[0].degree
    one = identity(degree)
    target = aut_order // automorphisms.inner_order()
    if target == 1:
        return (one,)
    outer = [alpha for alpha in automorphisms.automorphisms if alpha not in automorphisms.inner]
    start = (frozenset([one]), ())
    seen = {start[0]}
    queue = deque([start])
    while queue:
        elements, generators = queue.popleft()
        for alpha in outer:
            if alpha in elements:
                continue
            candidate = group_closure(PermGroup(degree, generators + (alpha,))).elements
            if len(candidate) > target or target % len(candidate) or candidate & automorphisms.inner != {one}:
                continue
            if len(candidate) == target:
                logging.info('found an outer complement of order %s' % target)
                return tuple(sorted(candidate))
            if candidate not in seen:
                seen.add(candidate)
                queue.append((candidate, generators + (alpha,)))
    logging.info('no complement to Inn(G) in Aut(G)')
    return None


def _check_budget(t, n, degree_budget):
    degree_budget = degree_budget if degree_budget is not None else settings.DEGREE_BUDGET
    if n < 1:
        raise InvalidInputError('n must be a positive integer, got %s' % n)
    if t.order ** n > degree_budget:
        raise DegreeBudgetExceeded('%s^%s points exceed the degree budget %s' % (t.order, n, degree_budget))
    return MixedRadixIndexing([t.order] * n)


def _tuple_permutation(indexing, moved):
    return Permutation(indexing.indices(moved).tolist())


def diagonal_generators(t, n, families=DIAGONAL_FAMILIES, automorphisms=None, degree_budget=None):
    """Generators of D(G, n) on G^n, grouped by family.

    a: right multiplication in one coordinate; b: simultaneous left multiplication by g^-1;
    c: automorphisms on every coordinate (all of Aut(G) unless a list is given);
    d: Sym(n) permuting coordinates; e: tau [x1..xn] -> [x1^-1, x1^-1 x2, ..., x1^-1 xn].
    """
    unknown = set(families) - set(DIAGONAL_FAMILIES)
    if unknown:
        raise InvalidInputError('unknown generator families %s' % sorted(unknown))
    indexing = _check_budget(t, n, degree_budget)
    coordinates = indexing.coordinates()
    table = t.table
    result = OrderedDict()
    for family in DIAGONAL_FAMILIES:
        if family not in families:
            continue
        permutations = []
        if family == 'a':
            for i in range(n):
                for g in t.generating_set():
                    moved = coordinates.copy()
                    moved[:, i] = table[coordinates[:, i], g]
                    permutations.append(_tuple_permutation(indexing, moved))
        elif family == 'b':
            for g in t.generating_set():
                permutations.append(_tuple_permutation(indexing, table[t.inverse(g)][coordinates]))
        elif family == 'c':
            if automorphisms is None:
                automorphisms = automorphism_group(t).automorphisms
            for alpha in automorphisms:
                if not alpha.is_identity():
                    permutations.append(_tuple_permutation(indexing, np.asarray(alpha.images)[coordinates]))
        elif family == 'd':
            if n > 1:
                for sigma in symmetric_group_generators(n):
                    moved = np.empty_like(coordinates)
                    moved[:, list(sigma.images)] = coordinates
                    permutations.append(_tuple_permutation(indexing, moved))
        else:
            first_inverse = t.inverses[coordinates[:, 0]]
            moved = table[first_inverse[:, None], coordinates]
            moved[:, 0] = first_inverse
            permutations.append(_tuple_permutation(indexing, moved))
        result[family] = permutations
    return result


def tau(t, n, degree_budget=None):
    return diagonal_generators(t, n, 'e', degree_budget=degree_budget)['e'][0]


@time_usage
def diagonal_group(t, n, families=DIAGONAL_FAMILIES, automorphisms=None, element_cap=None, degree_budget=None):
    generators = diagonal_generators(t, n, families, automorphisms, degree_budget)
    flat = [p for permutations in generators.values() for p in permutations]
    degree = t.order ** n
    logging.info('D(G, %s) on %s points from families %s: %s generators' % (n, degree, ''.join(generators),
                                                                               len(flat)))
    return group_closure(PermGroup(degree, flat or [identity(degree)], element_cap=element_cap))


def _normalise_cosets(t, lifted):
    """Representatives (1, y0^-1 y1, ..., y0^-1 yn) of the cosets of the diagonal containing rows of lifted."""
    first_inverse = t.inverses[lifted[:, 0]]
    return t.table[first_inverse[:, None], lifted[:, 1:]]


def coset_image(t, representative, lift):
    """Right-multiply the coset of (1, g1..gn) by (y0, y1..yn) and return the new representative (g1'..gn')."""
    if len(lift) != len(representative) + 1:
        raise InvalidInputError('a lift to G^(n+1) needs %s entries' % (len(representative) + 1))
    lifted = np.array([[0] + list(representative)], dtype=np.intp)
    lifted = t.table[lifted, np.asarray(lift, dtype=np.intp)[None, :]]
    return tuple(int(x) for x in _normalise_cosets(t, lifted)[0])


def diagonal_conjugation_image(t, representative, x):
    """The image of the coset of (1, g1..gn) under the diagonal element (x, ..., x)."""
    return coset_image(t, representative, [x] * (len(representative) + 1))


@time_usage
def diagonal_action_on_cosets(t, n, element_cap=None, degree_budget=None):
    """D(G, n) acting on the right cosets of the diagonal subgroup of G^(n+1).

    Generators, in order: G_i right multiplication in slot i, G_0 right multiplication in slot
    0, Sym(n) permuting slots 1..n, and the transposition of slots 0 and 1.
    """
    indexing = _check_budget(t, n, degree_budget)
    lifted = np.hstack([np.zeros((indexing.size, 1), dtype=np.intp), indexing.coordinates()])
    table = t.table
    generators = []
    for i in range(1, n + 1):
        for g in t.generating_set():
            moved = lifted.copy()
            moved[:, i] = table[lifted[:, i], g]
            generators.append(_tuple_permutation(indexing, _normalise_cosets(t, moved)))
    for g in t.generating_set():
        moved = lifted.copy()
        moved[:, 0] = table[lifted[:, 0], g]
        generators.append(_tuple_permutation(indexing, _normalise_cosets(t, moved)))
    if n > 1:
        for sigma in symmetric_group_generators(n):
            moved = lifted.copy()
            moved[:, [1 + s for s in sigma.images]] = lifted[:, 1:]
            generators.append(_tuple_permutation(indexing, _normalise_cosets(t, moved)))
    swapped = lifted.copy()
    swapped[:, [0, 1]] = lifted[:, [1, 0]]
    generators.append(_tuple_permutation(indexing, _normalise_cosets(t, swapped)))
    return group_closure(PermGroup(indexing.size, generators, element_cap=element_cap))


@time_usage
def prop36_subgroup(t, n, complement, element_cap=None, degree_budget=None):
    """The subgroup <M, D, Sym(n)> of Sym G wr Sym(n), G acting on itself by right multiplication.

    M = G^n in the base group, D = {(x, ..., x) | x in the complement} and Sym(n) on top.
    Returns the enumerated group and its generators as wreath elements.
    """
    _check_budget(t, n, degree_budget)
    ctx = WreathContext(t.order, n, degree_budget=t.order ** n)
    columns = {g: Permutation(int(x) for x in t.table[:, g]) for g in t.generating_set()}
    one = identity(t.order)
    generators = []
    for i in range(n):
        for g in t.generating_set():
            generators.append(pure_base(ctx, [columns[g] if d == i else one for d in range(n)]))
    for alpha in complement:
        if not alpha.is_identity():
            generators.append(pure_base(ctx, [alpha] * n))
    if n > 1:
        for h in symmetric_group_generators(n):
            generators.append(pure_top(ctx, h))
    return wreath_group(ctx, generators, element_cap), generators
