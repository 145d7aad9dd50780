import logging
import re

from wreathembed.cartdec import CartesianDecomposition, partition_from_blocks
from wreathembed.errors import InputFormatError
from wreathembed.perm_core import PermGroup, perm_from_images


def _split_numbers(text):
    fields = [f for f in re.split(r'[\s,]+', text.strip()) if f]
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise InputFormatError('expected integers, got %r' % text)


def parse_images(text):
    """A permutation in image notation, comma or space separated: ``1,0,2``."""
    return perm_from_images(_split_numbers(text))


def parse_point(text):
    return tuple(_split_numbers(text.strip().strip('()[]')))


def _content_lines(path):
    with open(path) as input_file:
        return [line.rstrip('\n') for line in input_file if not line.lstrip().startswith('#')]


def read_cayley_rows(path):
    """Read a Cayley table file: first line n, then n lines of n space separated indices."""
    lines = [line for line in _content_lines(path) if line.strip()]
    if not lines:
        raise InputFormatError('%s is empty' % path)
    order = _split_numbers(lines[0])
    if len(order) != 1 or order[0] < 1:
        raise InputFormatError('%s: first line must hold the group order' % path)
    rows = [_split_numbers(line) for line in lines[1:]]
    if len(rows) != order[0]:
        raise InputFormatError('%s: expected %s rows, found %s' % (path, order[0], len(rows)))
    logging.debug('read Cayley table of order %s from %s' % (order[0], path))
    return rows


def read_partition_blocks(path):
    """Read a decomposition file: one comma separated block per line, blank lines between partitions."""
    partitions = []
    current = []
    for line in _content_lines(path):
        if not line.strip():
            if current:
                partitions.append(current)
                current = []
            continue
        current.append(_split_numbers(line))
    if current:
        partitions.append(current)
    if not partitions:
        raise InputFormatError('%s holds no partitions' % path)
    return partitions


def read_decomposition(path):
    partitions = read_partition_blocks(path)
    ground_size = sum(len(block) for block in partitions[0])
    return CartesianDecomposition(ground_size, [partition_from_blocks(ground_size, p) for p in partitions])


def read_group(path):
    """Read a group-by-generators file: first line the degree, then one permutation per line in image notation."""
    lines = [line for line in _content_lines(path) if line.strip()]
    if len(lines) < 2:
        raise InputFormatError('%s needs a degree line and at least one generator' % path)
    degree = _split_numbers(lines[0])
    if len(degree) != 1:
        raise InputFormatError('%s: first line must hold the degree' % path)
    generators = [parse_images(line) for line in lines[1:]]
    return PermGroup(degree[0], generators)


def read_automorphisms(path):
    """Read an automorphisms file: one automorphism of the Cayley table per line in image notation."""
    lines = [line for line in _content_lines(path) if line.strip()]
    if not lines:
        raise InputFormatError('%s holds no automorphisms' % path)
    automorphisms = [parse_images(line) for line in lines]
    logging.debug('read %s automorphisms from %s' % (len(automorphisms), path))
    return automorphisms
