"""End-to-end checkers for the embedding statements, each producing a VerificationReport.

Invalid intermediate objects are recorded as failed checks; only budget overruns propagate.
"""
import logging
import math

from joblib import Parallel, delayed

from wreathembed import settings
from wreathembed.cartdec import brute_force_is_cartesian_decomposition, induced_partition_action
from wreathembed.cartdec import is_cartesian_decomposition, is_homogeneous, is_trivial, preserves_decomposition
from wreathembed.diagonal import automorphism_group, diagonal_generators, diagonal_group, find_outer_complement
from wreathembed.diagonal import prop36_subgroup
from wreathembed.embedding import check_permutational_isomorphism, in_full_wreath_group, wreath_embedding
from wreathembed.errors import InvalidInputError
from wreathembed.perm_core import PermGroup, group_closure, identity, is_regular, is_transitive, normalizes
from wreathembed.perm_core import normalizer_in_symmetric_group, right_regular_representation
from wreathembed.profiler import time_usage
from wreathembed.report import VerificationReport
from wreathembed.wreath import WreathContext, full_wreath_group, full_wreath_order, pure_base, wreath_as_permutation
from wreathembed.wreath import wreath_group


def _full_group_if_small(ctx, element_cap):
    cap = element_cap if element_cap is not None else settings.ELEMENT_CAP
    if full_wreath_order(ctx) <= cap:
        return full_wreath_group(ctx, cap)
    logging.info('Sym(%s) wr Sym(%s) is too large to enumerate, membership by decomposition only'
                 % (ctx.gamma_size, ctx.delta_size))
    return None


def _verify_embedding(report, x_group, decomposition, element_cap):
    """Shared tail of every checker: embed, verify the isomorphism and membership of the images."""
    try:
        witness = wreath_embedding(x_group, decomposition)
    except InvalidInputError as err:
        report.add_check('wreath embedding constructed', False, str(err))
        return None
    report.add_check('wreath embedding constructed', True,
                     'Sym(%s) wr Sym(%s)' % (witness.context.gamma_size, witness.context.delta_size))
    images = witness.materialized_images()
    verdict, mode = check_permutational_isomorphism(x_group, images, witness.point_bijection, element_cap)
    report.add_check('embedding is a permutational isomorphism', verdict, 'checked on %s' % mode)
    full = _full_group_if_small(witness.context, element_cap)
    inside = all(in_full_wreath_group(y, witness.context, full) for y in images)
    report.add_check('images lie in the full wreath product', inside,
                     'set containment' if full is not None else 'by decomposition')
    report.add_derived('induced_top_actions', [list(top.images) for top in witness.induced_top_actions()],
                       'wreath_embedding')
    report.add_derived('full_wreath_order', full_wreath_order(witness.context), 'full_wreath_order')
    return witness


def _family_preservation(generators, decomposition):
    result = {}
    for family, permutations in generators.items():
        result[family] = all(preserves_decomposition(PermGroup(p.degree, [p]), decomposition)[0]
                             for p in permutations)
    return result


def _dimension_checks(report, order, k, name):
    ok = report.add_check('%s >= 2' % name, k >= 2, '%s = %s' % (name, k))
    return report.add_check('|G| >= 2', order >= 2, '|G| = %s' % order) and ok


@time_usage
def check_prop_3_2(s_table, k, element_cap=None):
    """A group S^k, S regular on Gamma, acting coordinate-wise on Gamma^k embeds in Sym Gamma wr Sym(k)."""
    report = VerificationReport('3.2', {'group_order': s_table.order, 'k': k, 'gamma_size': s_table.order})
    if not _dimension_checks(report, s_table.order, k, 'k'):
        return report
    ctx = WreathContext(s_table.order, k)
    regular = right_regular_representation(s_table)
    report.add_check('S acts regularly on Gamma', is_regular(regular), '|S| = |Gamma| = %s' % s_table.order)

    one = identity(s_table.order)
    elements = [pure_base(ctx, [s if d == i else one for d in range(k)])
                for i in range(k) for s in regular.generators]
    t_group = wreath_group(ctx, elements, element_cap)
    report.add_derived('order_T', len(t_group.elements), 'group_closure')
    report.add_derived('degree', ctx.degree, 'MixedRadixIndexing')
    report.add_check('T = S^k is regular on Gamma^k', is_regular(t_group),
                     '|T| = %s on %s points' % (len(t_group.elements), ctx.degree))

    decomposition = ctx.natural_decomposition()
    report.add_derived('block_counts', decomposition.block_counts(), 'natural_cartesian_decomposition')
    if not report.add_check('natural decomposition is Cartesian', is_cartesian_decomposition(decomposition)):
        return report
    report.add_check('natural decomposition is homogeneous', is_homogeneous(decomposition))
    preserved, _ = preserves_decomposition(t_group, decomposition)
    report.add_check('T preserves the natural decomposition', preserved)
    _verify_embedding(report, t_group, decomposition, element_cap)
    return report


def _automorphisms_for(report, g_table, automorphisms):
    if automorphisms is None:
        automorphisms = automorphism_group(g_table)
        operation = 'automorphism_group'
    else:
        operation = 'supplied_automorphisms'
    report.add_derived('aut_order', automorphisms.order(), operation)
    report.add_derived('inn_order', automorphisms.inner_order(), 'inner_automorphisms')
    return automorphisms


@time_usage
def check_prop_3_4(g_table, k, element_cap=None, automorphisms=None):
    """The coordinate-preserving part of D(G, k) on G^k embeds with the partitions permuted as Sym(k).

    Aut(G) is searched for unless an AutomorphismSet is given.
    """
    report = VerificationReport('3.4', {'group_order': g_table.order, 'k': k, 'gamma_size': g_table.order})
    if not _dimension_checks(report, g_table.order, k, 'k'):
        return report
    ctx = WreathContext(g_table.order, k)
    decomposition = ctx.natural_decomposition()
    automorphisms = _automorphisms_for(report, g_table, automorphisms).automorphisms
    generators = diagonal_generators(g_table, k, automorphisms=automorphisms)
    preservation = _family_preservation(generators, decomposition)
    report.add_derived('family_preserves_decomposition', preservation, 'preserves_decomposition')
    kept = [family for family in 'abcd' if generators[family]]
    report.add_check('families a-d preserve the natural decomposition', all(preservation[f] for f in kept),
                     'families %s' % ''.join(kept))

    x_group = diagonal_group(g_table, k, 'abcd', automorphisms=automorphisms, element_cap=element_cap)
    report.add_derived('order_X', len(x_group.elements), 'diagonal_group')
    preserved, _ = preserves_decomposition(x_group, decomposition)
    if not report.add_check('X preserves the natural decomposition', preserved):
        return report
    report.add_check('natural decomposition is homogeneous', is_homogeneous(decomposition))
    top = induced_partition_action(x_group, decomposition)
    report.add_derived('top_action_order', len(top.elements), 'induced_partition_action')
    report.add_check('partitions are permuted transitively', is_transitive(top))
    report.add_check('induced action on partitions is Sym(k)', len(top.elements) == math.factorial(k),
                     'order %s' % len(top.elements))
    _verify_embedding(report, x_group, decomposition, element_cap)
    return report


def _greedy_generators(elements, degree):
    generators = []
    generated = {identity(degree)}
    for alpha in sorted(elements):
        if alpha not in generated:
            generators.append(alpha)
            generated = group_closure(PermGroup(degree, generators)).elements
    return generators


def _normalizer_checks(report, g_table, ctx, m_group, others, complement, automorphisms, element_cap):
    """M is normalised by the rest of <M, D, Sym(n)> and by O^n, and Aut(G) gives the holomorph."""
    report.add_check('top and D generators normalise M', all(normalizes(y, m_group) for y in others),
                     '%s generators' % len(others))
    one = identity(g_table.order)
    o_generators = _greedy_generators([alpha for alpha in complement if not alpha.is_identity()], g_table.order)
    coordinatewise = []
    for i in range(ctx.delta_size):
        for alpha in o_generators:
            base = [alpha if d == i else one for d in range(ctx.delta_size)]
            coordinatewise.append(wreath_as_permutation(pure_base(ctx, base), ctx))
    report.add_check('O^n in the base group normalises M', all(normalizes(y, m_group) for y in coordinatewise),
                     '%s generators' % len(coordinatewise))
    m_o = group_closure(PermGroup(ctx.degree, list(m_group.generators) + coordinatewise, element_cap=element_cap))
    expected = (g_table.order * len(complement)) ** ctx.delta_size
    report.add_derived('order_M_On', len(m_o.elements), 'group_closure')
    report.add_check('M O^n has order (|G| |O|)^n', len(m_o.elements) == expected,
                     '%s and %s' % (len(m_o.elements), expected))

    regular = right_regular_representation(g_table)
    report.add_check('O normalises the right regular action of G',
                     all(normalizes(alpha, regular) for alpha in complement))
    if g_table.order > settings.NORMALIZER_SEARCH_BOUND:
        logging.info('normalizer of the right regular action skipped for |G| = %s' % g_table.order)
        return
    normalizer = normalizer_in_symmetric_group(regular)
    holomorph_order = g_table.order * automorphisms.order()
    report.add_derived('normalizer_order', len(normalizer.elements), 'normalizer_in_symmetric_group')
    report.add_check('normalizer of G in Sym(G) has order |G| |Aut(G)|', len(normalizer.elements) == holomorph_order,
                     '%s and %s' % (len(normalizer.elements), holomorph_order))


@time_usage
def check_prop_3_6(g_table, n, element_cap=None, automorphisms=None):
    """<M, D, Sym(n)> inside Sym G wr Sym(n) is a copy of the coordinate-preserving part of D(G, n).

    Requires a complement O to Inn(G) in Aut(G); without one the hypothesis check fails.
    """
    report = VerificationReport('3.6', {'group_order': g_table.order, 'n': n, 'gamma_size': g_table.order})
    ok = report.add_check('n >= 1', n >= 1, 'n = %s' % n)
    if not (report.add_check('|G| >= 2', g_table.order >= 2, '|G| = %s' % g_table.order) and ok):
        return report
    automorphisms = _automorphisms_for(report, g_table, automorphisms)
    complement = find_outer_complement(automorphisms)
    if not report.add_hypothesis('Inn(G) has a complement in Aut(G)', complement is not None):
        return report
    report.add_derived('complement_order', len(complement), 'find_outer_complement')

    group, elements = prop36_subgroup(g_table, n, complement, element_cap)
    ctx = WreathContext(g_table.order, n)
    decomposition = ctx.natural_decomposition()
    report.add_derived('order_MDS', len(group.elements), 'prop36_subgroup')
    preserved, _ = preserves_decomposition(group, decomposition)
    report.add_check('generators preserve the natural decomposition', preserved)
    full = _full_group_if_small(ctx, element_cap)
    report.add_check('generators lie in the full wreath product',
                     all(in_full_wreath_group(y, ctx, full) for y in group.generators),
                     'set containment' if full is not None else 'by decomposition')

    m_count = n * len(g_table.generating_set())
    m_group = group_closure(PermGroup(ctx.degree, group.generators[:m_count], element_cap=element_cap))
    report.add_derived('order_M', len(m_group.elements), 'group_closure')
    report.add_check('M = G^n acts regularly', is_regular(m_group), '|M| = %s' % len(m_group.elements))
    _normalizer_checks(report, g_table, ctx, m_group, group.generators[m_count:], complement, automorphisms,
                       element_cap)

    diagonal = diagonal_group(g_table, n, 'acd', automorphisms=complement, element_cap=element_cap)
    report.add_derived('order_diagonal_acd', len(diagonal.elements), 'diagonal_group')
    report.add_check('orders agree', len(diagonal.elements) == len(group.elements),
                     '%s and %s' % (len(diagonal.elements), len(group.elements)))
    verdict, mode = check_permutational_isomorphism(diagonal, group.generators, list(range(ctx.degree)),
                                                    element_cap)
    report.add_check('copy of D(G, n) families a, c|O, d', verdict, 'checked on %s' % mode)
    report.add_derived('family_preserves_decomposition',
                       _family_preservation(diagonal_generators(g_table, n,
                                                                automorphisms=automorphisms.automorphisms),
                                            decomposition),
                       'preserves_decomposition')
    return report


@time_usage
def check_cartesian_decomposition(decomposition, oracle=False):
    report = VerificationReport('cartesian_decomposition', {'ground_size': decomposition.ground_size,
                                                            'partitions': len(decomposition.partitions)})
    counts = decomposition.block_counts()
    report.add_derived('block_counts', counts, 'CartesianDecomposition.block_counts')
    report.add_check('every partition has at least 2 blocks', bool(counts) and min(counts) >= 2,
                     'block counts %s' % counts)
    valid = is_cartesian_decomposition(decomposition)
    report.add_check('one block from each partition meets in exactly one point', valid)
    if oracle:
        report.add_check('agrees with the all-block-tuples check',
                         brute_force_is_cartesian_decomposition(decomposition) == valid)
    if valid:
        report.add_derived('homogeneous', is_homogeneous(decomposition), 'is_homogeneous')
        report.add_derived('trivial', is_trivial(decomposition), 'is_trivial')
    return report


@time_usage
def check_embedding(x_group, decomposition, element_cap=None):
    """A group preserving a homogeneous Cartesian decomposition embeds in the matching wreath product."""
    report = VerificationReport('embedding', {'degree': x_group.degree, 'generators': len(x_group.generators),
                                              'partitions': len(decomposition.partitions)})
    if not report.add_check('partitions form a Cartesian decomposition', is_cartesian_decomposition(decomposition)):
        return report
    if not report.add_check('decomposition is homogeneous', is_homogeneous(decomposition),
                            'block counts %s' % decomposition.block_counts()):
        return report
    preserved, _ = preserves_decomposition(x_group, decomposition)
    if not report.add_check('group preserves the decomposition', preserved):
        return report
    report.add_derived('order_X', len(group_closure(x_group).elements), 'group_closure')
    _verify_embedding(report, x_group, decomposition, element_cap)
    return report


PROPOSITION_CHECKERS = {'3.2': check_prop_3_2, '3.4': check_prop_3_4, '3.6': check_prop_3_6}
WORKER_SETTINGS = ('ELEMENT_CAP', 'DEGREE_BUDGET', 'AUTOMORPHISM_ORDER_BOUND', 'COMPLEMENT_SEARCH_BOUND',
                   'NORMALIZER_SEARCH_BOUND', 'LOG_FORMAT', 'LOG_FILE', 'LOG_LEVEL', 'LOGGING_DISABLED')


def _run_checker(kind, table, k, cap, automorphisms):
    if kind == '3.2':
        return check_prop_3_2(table, k, cap)
    return PROPOSITION_CHECKERS[kind](table, k, cap, automorphisms)


def _run_checker_in_worker(kind, table, k, cap, automorphisms, parent_settings):
    """Worker processes start from default settings and an unconfigured root logger."""
    for name, value in parent_settings.items():
        setattr(settings, name, value)
    if settings.LOG_FILE:
        logging.basicConfig(format=settings.LOG_FORMAT, filename=settings.LOG_FILE, level=settings.LOG_LEVEL,
                            filemode='a', force=True)
    else:
        logging.basicConfig(format=settings.LOG_FORMAT, level=settings.LOG_LEVEL, force=True)
    logging.disable(level=logging.CRITICAL if settings.LOGGING_DISABLED else logging.NOTSET)
    return _run_checker(kind, table, k, cap, automorphisms)


def run_propositions(kind, tables, k, element_cap=None, automorphism_sets=None):
    """Run one checker over several Cayley tables; reports come back in input order.

    automorphism_sets, when given, holds one AutomorphismSet (or None) per table.
    """
    if kind not in PROPOSITION_CHECKERS:
        raise InvalidInputError('unknown proposition %s, expected one of %s' % (kind, sorted(PROPOSITION_CHECKERS)))
    if automorphism_sets is None:
        automorphism_sets = [None] * len(tables)
    if len(automorphism_sets) != len(tables):
        raise InvalidInputError('%s automorphism sets given for %s tables' % (len(automorphism_sets), len(tables)))
    cap = element_cap if element_cap is not None else settings.ELEMENT_CAP
    if len(tables) == 1 or settings.CORES == 1:
        return [_run_checker(kind, t, k, cap, a) for t, a in zip(tables, automorphism_sets)]
    logging.info('dispatching %s checks of %s on %s workers' % (len(tables), kind, settings.CORES))
    parent_settings = {name: getattr(settings, name) for name in WORKER_SETTINGS}
    return Parallel(n_jobs=settings.CORES)(delayed(_run_checker_in_worker)(kind, t, k, cap, a, parent_settings)
                                           for t, a in zip(tables, automorphism_sets))
