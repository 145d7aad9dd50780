#!/usr/bin/env python
# -*- coding: utf-8 -*-

import argparse
import logging
import sys

from wreathembed.errors import BudgetExceededError, InvalidInputError
from wreathembed.wreathembed_commands import BUDGET_EXCEEDED_EXIT_CODE, INVALID_INPUT_EXIT_CODE
from wreathembed.wreathembed_commands import cartdec_verify, embed, locate_point, prop, wreath_act, wreath_order
from wreathembed import settings
from wreathembed import __version__


class CustomHelpFormatter(argparse.HelpFormatter):
    def __init__(self, prog):
        super(CustomHelpFormatter, self).__init__(prog, max_help_position=40, width=110)

    def _format_action_invocation(self, action):
        if not action.option_strings:
            return super(CustomHelpFormatter, self)._format_action_invocation(action)
        default = self._metavar_formatter(action, action.dest)
        args_string = self._format_args(action, default)
        return '/'.join(action.option_strings) + ' ' + args_string


ELEMENT_SPEC_HELP = 'wreath element: base permutations of Gamma in image notation, one per coordinate, ' \
                    'separated by ";", then "|" and the top permutation in cycle notation, e.g. "1,0;0,1|(0 1)"'


def common_options():
    parent = argparse.ArgumentParser(add_help=False)
    io_group = parent.add_argument_group('Output options')
    outfmt_choices = ['text', 'json']
    io_group.add_argument('-of', '--format', dest='outfmt', metavar='<format>', default='text', choices=outfmt_choices,
                          help='output format. Allowed values are {' + ', '.join(outfmt_choices) + '} [%(default)s]')
    io_group.add_argument('--log_file', type=str, metavar='<file>', default=None,
                          help='file to write the log to. Warnings go to stderr if not specified')
    io_group.add_argument('--verbose', action='store_true', default=False,
                          help='set this flag to log debugging information')
    io_group.add_argument('--disable_logging', action='store_true', default=False,
                          help='set this flag to stop logging except for critical errors.')

    others_group = parent.add_argument_group('Other options')
    others_group.add_argument('-h', '--help', action='help', help='show this help message and exit')
    others_group.add_argument('--cap', type=int, metavar='<int>', default=settings.ELEMENT_CAP,
                              help='largest number of group elements enumerated [%(default)s]')
    others_group.add_argument('-t', '--threads', type=int, metavar='<int>', default=1,
                              help='number of workers for independent checks [%(default)s]')
    return parent


def build_parser():
    description = '=======================================================\n' \
                  'wreathembed %s: wreath products and Cartesian decompositions\n' \
                  '=======================================================\n' % __version__
    help = 'Command: cartdec\tverify a Cartesian decomposition or locate a point\n' \
           '         wreath\torder of Sym(M) wr Sym(K), product action of an element\n' \
           '         embed\t\tembed a group preserving a decomposition into a wreath product\n' \
           '         prop\t\tverify an embedding statement for Cayley tables (3.2, 3.4, 3.6)\n'

    usage = '\r{}\nusage: %(prog)s <command> [options]\n\n\r{}\r{}'.format(description.ljust(len('usage:')), help, '\n')
    parser = argparse.ArgumentParser(prog='wreathembed', usage=usage, add_help=False)
    subparsers = parser.add_subparsers(title='Commands', dest='command')
    parent = common_options()
    fmt = lambda prog: CustomHelpFormatter(prog)
    parsers = {}

    cartdec_parser = subparsers.add_parser('cartdec', usage='wreathembed cartdec <verify|locate> [options]')
    cartdec_commands = cartdec_parser.add_subparsers(title='Commands', dest='action')
    verify_parser = cartdec_commands.add_parser('verify', usage='wreathembed cartdec verify <file> [options]',
                                                formatter_class=fmt, parents=[parent], add_help=False)
    verify_parser.add_argument('partitions', metavar='<file>',
                               help='partitions file: one comma separated block per line, '
                                    'partitions separated by blank lines')
    verify_parser.add_argument('--oracle', action='store_true', default=False,
                               help='also intersect every choice of one block per partition')
    parsers['cartdec verify'] = (verify_parser, cartdec_verify)
    locate_parser = cartdec_commands.add_parser('locate', usage='wreathembed cartdec locate <file> --blocks <tuple>',
                                                formatter_class=fmt, parents=[parent], add_help=False)
    locate_parser.add_argument('partitions', metavar='<file>', help='partitions file')
    locate_parser.add_argument('--blocks', type=str, metavar='<tuple>', required=True,
                               help='one block index per partition, e.g. "0,1"')
    parsers['cartdec locate'] = (locate_parser, locate_point)

    wreath_parser = subparsers.add_parser('wreath', usage='wreathembed wreath <order|act> [options]')
    wreath_commands = wreath_parser.add_subparsers(title='Commands', dest='action')
    order_parser = wreath_commands.add_parser('order', usage='wreathembed wreath order --gamma M --k K',
                                              formatter_class=fmt, parents=[parent], add_help=False)
    act_parser = wreath_commands.add_parser('act', usage='wreathembed wreath act --gamma M --k K --element <spec> '
                                                         '--point <tuple>',
                                            formatter_class=fmt, parents=[parent], add_help=False)
    for dimension_parser in (order_parser, act_parser):
        dimension_group = dimension_parser.add_argument_group('Required arguments')
        dimension_group.add_argument('--gamma', type=int, metavar='<int>', required=True, help='size of Gamma')
        dimension_group.add_argument('--k', type=int, metavar='<int>', required=True, help='number of coordinates')
    act_parser.add_argument('--element', type=str, metavar='<spec>', default=None, help=ELEMENT_SPEC_HELP)
    act_parser.add_argument('--point', type=str, metavar='<tuple>', default=None,
                            help='point of Gamma^k, e.g. "(0,1)"')
    parsers['wreath order'] = (order_parser, wreath_order)
    parsers['wreath act'] = (act_parser, wreath_act)

    embed_parser = subparsers.add_parser('embed', usage='wreathembed embed --group <file> --decomp <file>',
                                         formatter_class=fmt, parents=[parent], add_help=False)
    embed_group = embed_parser.add_argument_group('Required arguments')
    embed_group.add_argument('--group', type=str, metavar='<file>', default=None,
                             help='generators file: the degree, then one permutation per line in image notation')
    embed_group.add_argument('--decomp', type=str, metavar='<file>', default=None, help='partitions file')
    parsers['embed'] = (embed_parser, embed)

    prop_parser = subparsers.add_parser('prop', usage='wreathembed prop <3.2|3.4|3.6> --table <file> [options]',
                                        formatter_class=fmt, parents=[parent], add_help=False)
    prop_parser.add_argument('proposition', choices=['3.2', '3.4', '3.6'], metavar='<3.2|3.4|3.6>',
                             help='statement to verify')
    prop_group = prop_parser.add_argument_group('Algorithm options')
    prop_group.add_argument('--table', type=str, metavar='<file>', action='append', default=[],
                            help='Cayley table file; repeat to check several groups')
    prop_group.add_argument('--k', type=int, metavar='<int>', default=None, help='number of coordinates [2]')
    prop_group.add_argument('--n', type=int, metavar='<int>', default=None, help='alias of --k')
    prop_group.add_argument('--automorphisms', type=str, metavar='<file>', action='append', default=[],
                            help='automorphisms of the table, one per line in image notation; together with the '
                                 'inner automorphisms they must generate Aut(G). Repeat once per --table to '
                                 'skip the automorphism search')
    parsers['prop'] = (prop_parser, prop)
    return parser, parsers


def run_cli(argv):
    parser, parsers = build_parser()
    try:
        args = parser.parse_args(argv)
        key = args.command if args.command not in ('cartdec', 'wreath') else '%s %s' % (args.command, args.action)
        if key not in parsers:
            parser.error('Please specify a valid command')
        subparser, handler = parsers[key]
        return handler(args, subparser)
    except SystemExit as exit_request:
        if exit_request.code is None or isinstance(exit_request.code, int):
            return exit_request.code or 0
        sys.stderr.write('%s\n' % exit_request.code)
        return INVALID_INPUT_EXIT_CODE
    except (InvalidInputError, IOError) as err:
        logging.error('invalid input: %s' % err)
        sys.stderr.write('ERROR: %s\n' % err)
        return INVALID_INPUT_EXIT_CODE
    except BudgetExceededError as err:
        logging.error('budget exceeded: %s' % err)
        sys.stderr.write('ERROR: %s\n' % err)
        return BUDGET_EXCEEDED_EXIT_CODE


def main():
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == '__main__':
    main()
