import json
import logging
import sys

from wreathembed.cartdec import decode_point
from wreathembed.diagonal import cayley_from_table, supplied_automorphisms
from wreathembed.propositions import check_cartesian_decomposition, check_embedding, run_propositions
from wreathembed.report import FAIL, HYPOTHESIS_NOT_SATISFIED, PASS, print_reports
from wreathembed.utils import parse_point, read_automorphisms, read_cayley_rows, read_decomposition, read_group
from wreathembed.wreath import WreathContext, full_wreath_group, full_wreath_order, parse_wreath_element
from wreathembed.wreath import product_action_image
from wreathembed import settings
from wreathembed import __version__

EXIT_CODES = {PASS: 0, FAIL: 1, HYPOTHESIS_NOT_SATISFIED: 1}
INVALID_INPUT_EXIT_CODE = 2
BUDGET_EXCEEDED_EXIT_CODE = 3


def print_error(subparser, msg):
    subparser.print_help(sys.stderr)
    sys.stderr.write('\nERROR: %s\n' % msg)
    sys.exit(INVALID_INPUT_EXIT_CODE)


def exit_code_for(reports):
    return max(EXIT_CODES[report.verdict] for report in reports)


def configure(args, subparser):
    if args.cap < 1:
        print_error(subparser, 'cap cannot be less than 1')
    if args.threads < 1:
        print_error(subparser, 'threads cannot be less than 1')
    settings.ELEMENT_CAP = args.cap
    settings.CORES = args.threads

    level = 'DEBUG' if args.verbose else 'INFO' if args.log_file else 'WARNING'
    settings.LOG_FILE = args.log_file
    settings.LOG_LEVEL = level
    settings.LOGGING_DISABLED = args.disable_logging
    if args.log_file:
        logging.basicConfig(format=settings.LOG_FORMAT, filename=args.log_file, level=level, filemode='w')
    else:
        logging.basicConfig(format=settings.LOG_FORMAT, level=level)
    if args.disable_logging:
        logging.disable(level=logging.CRITICAL)
    logging.info('wreathembed %s, element cap %s, %s workers' % (__version__, settings.ELEMENT_CAP, settings.CORES))


def cartdec_verify(args, cartdec_parser):
    configure(args, cartdec_parser)
    decomposition = read_decomposition(args.partitions)
    report = check_cartesian_decomposition(decomposition, oracle=args.oracle)
    print_reports([report], args.outfmt)
    return exit_code_for([report])


def wreath_order(args, order_parser):
    configure(args, order_parser)
    ctx = WreathContext(args.gamma, args.k)
    order = full_wreath_order(ctx)
    operation = 'full_wreath_order'
    if order <= settings.ELEMENT_CAP:
        order = len(full_wreath_group(ctx, settings.ELEMENT_CAP).elements)
        operation = 'full_wreath_group'
    if args.outfmt == 'json':
        print(json.dumps({'gamma_size': args.gamma, 'k': args.k, 'order': order, 'operation': operation},
                         sort_keys=True))
    else:
        print(order)
    return 0


def wreath_act(args, act_parser):
    configure(args, act_parser)
    if args.element is None or args.point is None:
        print_error(act_parser, 'Please specify both --element and --point')
    ctx = WreathContext(args.gamma, args.k)
    element = parse_wreath_element(args.element, ctx)
    image = product_action_image(parse_point(args.point), element)
    if args.outfmt == 'json':
        print(json.dumps({'point': list(parse_point(args.point)), 'image': list(image),
                          'image_index': ctx.indexing.index(image)}, sort_keys=True))
    else:
        print('(%s)' % ', '.join(str(c) for c in image))
    return 0


def embed(args, embed_parser):
    configure(args, embed_parser)
    if args.group is None or args.decomp is None:
        print_error(embed_parser, 'Please specify both --group and --decomp')
    x_group = read_group(args.group)
    decomposition = read_decomposition(args.decomp)
    report = check_embedding(x_group, decomposition, settings.ELEMENT_CAP)
    print_reports([report], args.outfmt)
    return exit_code_for([report])


def prop(args, prop_parser):
    configure(args, prop_parser)
    if not args.table:
        print_error(prop_parser, 'Please specify at least one Cayley table with --table')
    if args.automorphisms and len(args.automorphisms) != len(args.table):
        print_error(prop_parser, 'Please give one --automorphisms file for each --table')
    dimension = args.k if args.k is not None else args.n
    if dimension is None:
        dimension = 2
    tables = [cayley_from_table(read_cayley_rows(path)) for path in args.table]
    automorphism_sets = None
    if args.automorphisms:
        if args.proposition == '3.2':
            logging.warning('--automorphisms is not used by 3.2')
        automorphism_sets = [supplied_automorphisms(t, read_automorphisms(path), settings.ELEMENT_CAP)
                             for t, path in zip(tables, args.automorphisms)]
    logging.info('checking %s on %s tables with dimension %s' % (args.proposition, len(tables), dimension))
    reports = run_propositions(args.proposition, tables, dimension, settings.ELEMENT_CAP, automorphism_sets)
    for index, report in enumerate(reports):
        report.inputs['table'] = args.table[index]
        if args.automorphisms:
            report.inputs['automorphisms'] = args.automorphisms[index]
    print_reports(reports, args.outfmt)
    return exit_code_for(reports)


def locate_point(args, locate_parser):
    configure(args, locate_parser)
    decomposition = read_decomposition(args.partitions)
    point = decode_point(decomposition, parse_point(args.blocks))
    print(point)
    return 0
