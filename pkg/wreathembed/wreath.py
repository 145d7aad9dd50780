"""The wreath product G wr H in tuple form and its product action on Func(Delta, Gamma).

A WreathElement g = f h is the pair (base, top): base[d] is the permutation of Gamma at
coordinate d and top permutes the coordinates. In product action g first applies base[d]
to coordinate d and then moves coordinate d to position d*top, so that

    (phi g)(d) = phi(d h^-1) ^ f(d h^-1).

Points of Func(Delta, Gamma) are numbered by cartdec.MixedRadixIndexing.
"""
import logging
import math

import numpy as np

from wreathembed import settings
from wreathembed.cartdec import MixedRadixIndexing, natural_cartesian_decomposition
from wreathembed.errors import BadDimensions, ContextMismatch, DegreeBudgetExceeded, DegreeMismatch
from wreathembed.errors import IndexOutOfRange, InputFormatError
from wreathembed.perm_core import Permutation, PermGroup, compose, group_closure, identity, inverse
from wreathembed.perm_core import perm_from_cycles, symmetric_group_generators
from wreathembed.profiler import time_usage
from wreathembed.utils import parse_images


class WreathContext:
    def __init__(self, gamma_size, delta_size, degree_budget=None):
        if gamma_size < 2:
            raise BadDimensions('|Gamma| must be at least 2, got %s' % gamma_size)
        if delta_size < 1:
            raise BadDimensions('|Delta| must be at least 1, got %s' % delta_size)
        degree_budget = degree_budget if degree_budget is not None else settings.DEGREE_BUDGET
        if gamma_size ** delta_size > degree_budget:
            raise DegreeBudgetExceeded('%s^%s points exceed the degree budget %s'
                                       % (gamma_size, delta_size, degree_budget))
        self.gamma_size = gamma_size
        self.delta_size = delta_size
        self.indexing = MixedRadixIndexing([gamma_size] * delta_size)
        self._decomposition = None

    @property
    def degree(self):
        return self.indexing.size

    def natural_decomposition(self):
        if self._decomposition is None:
            self._decomposition, _ = natural_cartesian_decomposition(self.gamma_size, self.delta_size)
        return self._decomposition

    def __eq__(self, other):
        if not isinstance(other, WreathContext):
            return False
        return self.gamma_size == other.gamma_size and self.delta_size == other.delta_size

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.gamma_size, self.delta_size))

    def __repr__(self):
        return 'WreathContext(gamma_size=%s, delta_size=%s)' % (self.gamma_size, self.delta_size)


class WreathElement:
    __slots__ = ('base', 'top')

    def __init__(self, base, top):
        base = tuple(base)
        if len(base) != top.degree:
            raise DegreeMismatch('%s base entries for a top permutation of degree %s' % (len(base), top.degree))
        if len(set(b.degree for b in base)) > 1:
            raise DegreeMismatch('base permutations have different degrees')
        self.base = base
        self.top = top

    @property
    def gamma_size(self):
        return self.base[0].degree

    @property
    def delta_size(self):
        return self.top.degree

    def __eq__(self, other):
        if not isinstance(other, WreathElement):
            return False
        return self.base == other.base and self.top == other.top

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.base, self.top))

    def __repr__(self):
        return 'WreathElement(base=%s, top=%s)' % ([list(b.images) for b in self.base], list(self.top.images))


def _check_context(g, ctx):
    if g.gamma_size != ctx.gamma_size or g.delta_size != ctx.delta_size:
        raise ContextMismatch('element over %s^%s used in context %s^%s'
                              % (g.gamma_size, g.delta_size, ctx.gamma_size, ctx.delta_size))


def wr_identity(ctx):
    return WreathElement([identity(ctx.gamma_size)] * ctx.delta_size, identity(ctx.delta_size))


def pure_base(ctx, base):
    return WreathElement(base, identity(ctx.delta_size))


def pure_top(ctx, top):
    return WreathElement([identity(ctx.gamma_size)] * ctx.delta_size, top)


def wr_multiply(a, b):
    if a.gamma_size != b.gamma_size or a.delta_size != b.delta_size:
        raise ContextMismatch('cannot multiply elements of %s wr %s and %s wr %s'
                              % (a.gamma_size, a.delta_size, b.gamma_size, b.delta_size))
    shifted = a.top.images
    base = [compose(a.base[d], b.base[shifted[d]]) for d in range(a.delta_size)]
    return WreathElement(base, compose(a.top, b.top))


def wr_inverse(a):
    top_inverse = inverse(a.top)
    pulled_back = top_inverse.images
    base = [inverse(a.base[pulled_back[d]]) for d in range(a.delta_size)]
    return WreathElement(base, top_inverse)


def top_conjugate(base, h):
    """The conjugate f^h of a base tuple: (f^h)(d) = f(d h^-1)."""
    base = tuple(base)
    if len(base) != h.degree:
        raise DegreeMismatch('%s coordinates conjugated by a permutation of degree %s' % (len(base), h.degree))
    pulled_back = inverse(h).images
    return tuple(base[pulled_back[d]] for d in range(h.degree))


def base_projection(base, delta):
    """Return (f(delta), the element of G_delta agreeing with f at delta)."""
    base = tuple(base)
    if delta < 0 or delta >= len(base):
        raise IndexOutOfRange('coordinate %s is outside 0..%s' % (delta, len(base) - 1))
    one = identity(base[delta].degree)
    projected = [base[d] if d == delta else one for d in range(len(base))]
    return base[delta], WreathElement(projected, identity(len(base)))


def product_action_image(phi, g):
    phi = tuple(phi)
    if len(phi) != g.delta_size or any(c < 0 or c >= g.gamma_size for c in phi):
        raise ContextMismatch('point %s is not a function from %s points to %s points'
                              % (phi, g.delta_size, g.gamma_size))
    pulled_back = inverse(g.top).images
    return tuple(g.base[pulled_back[d]].images[phi[pulled_back[d]]] for d in range(g.delta_size))


def wreath_as_permutation(g, ctx):
    _check_context(g, ctx)
    coordinates = ctx.indexing.coordinates()
    pulled_back = inverse(g.top).images
    moved = np.empty_like(coordinates)
    for d in range(ctx.delta_size):
        source = pulled_back[d]
        moved[:, d] = np.asarray(g.base[source].images)[coordinates[:, source]]
    return Permutation(ctx.indexing.indices(moved).tolist())


def wreath_group(ctx, elements, element_cap=None):
    generators = [wreath_as_permutation(g, ctx) for g in elements] or [identity(ctx.degree)]
    return group_closure(PermGroup(ctx.degree, generators, element_cap=element_cap))


def full_wreath_generators(ctx):
    """Sym Gamma generators in every coordinate followed by Sym Delta generators on top."""
    one = identity(ctx.gamma_size)
    generators = []
    for d in range(ctx.delta_size):
        for s in symmetric_group_generators(ctx.gamma_size):
            generators.append(pure_base(ctx, [s if c == d else one for c in range(ctx.delta_size)]))
    if ctx.delta_size > 1:
        for h in symmetric_group_generators(ctx.delta_size):
            generators.append(pure_top(ctx, h))
    return generators


def full_wreath_order(ctx):
    return math.factorial(ctx.gamma_size) ** ctx.delta_size * math.factorial(ctx.delta_size)


@time_usage
def full_wreath_group(ctx, element_cap=None):
    logging.info('enumerating Sym(%s) wr Sym(%s) of order %s' % (ctx.gamma_size, ctx.delta_size,
                                                                 full_wreath_order(ctx)))
    return wreath_group(ctx, full_wreath_generators(ctx), element_cap)


def parse_wreath_element(spec, ctx):
    """Parse ``b_0;b_1;...;b_{k-1}|cycles``: base permutations in image notation, top in cycle notation."""
    base_part, _, top_part = spec.partition('|')
    entries = [entry for entry in base_part.split(';')]
    if len(entries) != ctx.delta_size:
        raise InputFormatError('element %r has %s base entries, expected %s' % (spec, len(entries), ctx.delta_size))
    base = [parse_images(entry) for entry in entries]
    for b in base:
        if b.degree != ctx.gamma_size:
            raise ContextMismatch('base permutation %s does not act on %s points' % (list(b.images), ctx.gamma_size))
    return WreathElement(base, perm_from_cycles(top_part, ctx.delta_size))
