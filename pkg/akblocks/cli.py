# -*- coding: utf-8 -*-
#
# Copyright (C) 2006-2007 Alec Thomas <alec@swapoff.org>
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.
#

"""The ``akblocks`` command line.

The command line is parsed with the grammar engine in
:mod:`akblocks.builder`: every command is a :class:`~akblocks.builder.Node`
whose options loop back to their siblings through an
:class:`~akblocks.builder.Alias`, so options may come in any order and at
most once. The final :class:`~akblocks.builder.Action` builds a
:class:`JobSpec`, which :func:`run` executes.

Reports are JSON documents carrying the schema ``akblocks/1`` and the tool
version, or text with abaci and tables. Exit status is ``0`` on success,
``2`` for malformed input, ``3`` when a budget runs out (the partial report
is flagged ``truncated``) and ``4`` when a core-only command is given a
block that is not a core block.

>>> status = main(['mv', '--e', '5', '--l', '4', '--charge', '1,3,3,6',
...                '--mp', '[[3,2,1,1,1,1],[4,2,1],[2,2,1],[1]]',
...                '--output', 'text'])
core_block True
mv 0 1 0 1
>>> status
0
"""

import hashlib
import json
import os
import shlex
import sys
import tempfile
from multiprocessing import Pool


__all__ = ['JobSpec', 'SCHEMA', 'grammar', 'run', 'atlas', 'main']
__docformat__ = 'restructuredtext en'


from akblocks import __version__
from akblocks.exceptions import *
from akblocks.console import cprint, cerror, cwarning, cinfo, cescape, \
    print_table
from akblocks.builder import Grammar, Node, Alias, Action, Help, Integer, \
    IntegerList, JSONValue, Choice, Path
from akblocks.parser import Parser, Context, HelpParser
from akblocks.betaset import BetaSet, abacus
from akblocks.multipartition import ChargedMultipartition, multipartitions, \
    is_kleshchev
from akblocks.weyl import in_closed_alcove, reduce_to_domain
from akblocks.blocks import block_of, moving_vector, weight_bound, \
    enumerate_in_block
from akblocks.scopes import ScopesData, scopes_chain, is_initial, \
    chain_terminal_r_star, orbit_class_count
from akblocks.simples import count_simples, count_simples_level_two
from akblocks.fock import CanonicalBasis, decomposition_matrix, \
    level_one_reduction


SCHEMA = 'akblocks/1'

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_PARSE = 2
EXIT_BUDGET = 3
EXIT_NOT_CORE = 4


class JobSpec(object):
    """One validated command line request.

    Class attributes are the defaults; keyword arguments override them.

    >>> spec = JobSpec('block', e=2, charge=(0,), mp=[[]])
    >>> spec.l, spec.output, spec.out_dir
    (1, 'json', 'atlas')
    >>> JobSpec('mv', e=3, l=2, charge=(0, 1, 2), mp=[[], [], []])
    Traceback (most recent call last):
    ...
    akblocks.exceptions.RankMismatch: rank mismatch: 3 != 2
    """
    e = None
    l = None
    charge = None
    mp = None
    n = None
    n_max = None
    output = 'json'
    budget = None
    out_dir = 'atlas'
    jobs = 1

    FIELDS = ('e', 'l', 'charge', 'mp', 'n', 'n_max', 'output', 'budget',
              'out_dir', 'jobs')

    def __init__(self, command, **kwargs):
        self.command = command
        for key in self.FIELDS:
            if key in kwargs:
                setattr(self, key, kwargs.pop(key))
        if kwargs:
            raise TypeError('unexpected arguments %s' % ', '.join(kwargs))
        if self.e is not None and self.e < 2:
            raise RankMismatch('e must be at least 2, not %d' % self.e)
        if self.charge is not None:
            self.charge = tuple(self.charge)
            if self.l is None:
                self.l = len(self.charge)
            if len(self.charge) != self.l:
                raise RankMismatch(left=len(self.charge), right=self.l)
        if self.l is not None and self.l < 1:
            raise RankMismatch('l must be at least 1, not %d' % self.l)
        if self.budget is not None and self.budget < 1:
            raise PreconditionError('budget must be positive')
        self.multipartition = None
        if self.mp is not None:
            if not isinstance(self.mp, list):
                raise InvalidMultipartition('%r is not a list of partitions'
                                            % (self.mp,))
            self.multipartition = ChargedMultipartition(self.mp, self.charge,
                                                        self.e)

    def budgeted(self):
        """Keyword arguments for budgeted computations."""
        return {} if self.budget is None else {'budget': self.budget}

    def block(self):
        return block_of(self.multipartition)


def _require_core(block):
    if not block.is_core:
        raise NotCoreBlock(mv=block.mv)
    return block


def _class_key(block):
    """The Scopes class of a core block: the moving vector at the
    fundamental domain, which names the Weyl group orbit, and the Scopes
    vector."""
    sc = ScopesData(block).scopes_vector
    return '%s|%s' % (','.join(map(str, block.domain_mv)),
                      ','.join(map(str, sc)))


def _digest(block):
    key = [block.e, block.l, list(block.domain_charge),
           block.domain_core.threshold, list(block.domain_core.excess),
           block.weight]
    return hashlib.sha1(json.dumps(key).encode('ascii')).hexdigest()[:12]


def _jsonable(value):
    if hasattr(value, 'to_json'):
        return value.to_json()
    if isinstance(value, dict):
        return dict((str(k), _jsonable(v)) for k, v in value.items())
    if isinstance(value, (list, tuple, set, frozenset)):
        return [_jsonable(v) for v in value]
    if value is None or isinstance(value, (bool, int, str)):
        return value
    return str(value)


def _document(command, body):
    document = {'schema': SCHEMA, 'version': __version__, 'command': command}
    document.update(body)
    return document


def dumps(document):
    """Serialise a report; equal documents give identical text."""
    return json.dumps(document, sort_keys=True, indent=2,
                      ensure_ascii=False) + '\n'


# Commands. Each returns the body of its report.

def cmd_block(spec):
    block = spec.block()
    body = {'block': block.to_json(),
            'weight_bound': weight_bound(block.e, block.l)}
    return body


def cmd_mv(spec):
    lm = spec.multipartition
    w = None
    if not in_closed_alcove(lm.charge, lm.e):
        w, _ = reduce_to_domain(lm.charge, lm.e)
    mv = moving_vector(lm, w)
    body = {'mv': list(mv), 'core_block': 0 in mv}
    if w is not None:
        body['frame'] = {'perm': list(w.perm), 'trans': list(w.trans)}
    return body


def cmd_core_block(spec):
    block = spec.block()
    bound = weight_bound(block.e, block.l)
    return {'core_block': block.is_core, 'mv': list(block.domain_mv),
            'weight': block.weight, 'weight_bound': bound}


def cmd_scopes(spec):
    block = _require_core(spec.block())
    data = ScopesData(block)
    chain = scopes_chain(block)
    body = data.to_json()
    body.update({
        'reduced_charge': list(block.reduced_charge),
        'r_star': list(block.r_star),
        'initial': is_initial(block),
        'chain': [j for j, _ in chain],
        'initial_r_star': list(chain_terminal_r_star(block)),
        'orbit_class_count': orbit_class_count(block),
        'class_id': _class_key(block),
        })
    return body


def cmd_simples(spec):
    block = _require_core(spec.block())
    body = {'simples': count_simples(block)}
    if block.l == 2:
        body['level_two'] = count_simples_level_two(block)
    return body


def cmd_decomp(spec):
    block = spec.block()
    members = enumerate_in_block(block, **spec.budgeted())
    basis = CanonicalBasis(**spec.budgeted())
    matrix = decomposition_matrix(block, basis=basis, members=members)
    body = {'matrix': matrix.to_json(), 'level_one': None}
    if block.is_core:
        try:
            reduction = level_one_reduction(block, basis=basis)
        except HypothesisNotSatisfied:
            body['level_one'] = {'applicable': False}
        else:
            body['level_one'] = {'applicable': True,
                                 'u': list(reduction.u),
                                 'frame_trans': list(reduction.frame.trans)}
    body['_table'] = matrix.table()
    return body


def cmd_enumerate(spec):
    block = spec.block()
    members = enumerate_in_block(block, **spec.budgeted())
    return {'count': len(members),
            'members': [{'multipartition': lm.to_json(),
                         'kleshchev': is_kleshchev(lm),
                         'multicore': lm.is_multicore()} for lm in members]}


def _atlas_entry(block):
    """The atlas document of one block."""
    entry = {'block': block.to_json(),
             'weight_bound': weight_bound(block.e, block.l),
             'digest': _digest(block)}
    if block.is_core:
        entry.update({'scopes': ScopesData(block).to_json(),
                      'class_id': _class_key(block),
                      'orbit_class_count': orbit_class_count(block),
                      'simples': count_simples(block)})
    return entry


def _umask():
    mask = os.umask(0)
    os.umask(mask)
    return mask


def _write_atomic(path, text):
    directory = os.path.dirname(path) or os.curdir
    tmp = None
    try:
        fd, tmp = tempfile.mkstemp(dir=directory, prefix='.tmp-')
        with os.fdopen(fd, 'w', encoding='utf-8') as io:
            io.write(text)
        os.chmod(tmp, 0o666 & ~_umask())
        os.replace(tmp, path)
    except OSError as e:
        if tmp is not None and os.path.exists(tmp):
            os.unlink(tmp)
        raise Error('%s: %s' % (path, e.strerror or e))


def atlas(spec):
    """Write one JSON document per block of size ``n`` to ``n_max`` at the
    given charge into ``spec.out_dir``; return the written file names.

    Blocks are found by scanning every ℓ-partition; the scan counts against
    the budget. Documents are built in ``spec.jobs`` worker processes.
    """
    low = spec.n if spec.n is not None else 0
    high = spec.n_max if spec.n_max is not None else low
    written = []
    if high < low:
        cwarning('empty size range %d..%d; nothing written' % (low, high))
        return written
    try:
        os.makedirs(spec.out_dir, exist_ok=True)
    except OSError as e:
        raise Error('%s: %s' % (spec.out_dir, e.strerror or e))
    scanned = 0
    for n in range(low, high + 1):
        blocks = {}
        for components in multipartitions(n, spec.l):
            scanned += 1
            if spec.budget is not None and scanned > spec.budget:
                raise BudgetExceeded(spec.budget, partial=written)
            block = block_of(ChargedMultipartition(components, spec.charge,
                                                   spec.e))
            blocks.setdefault(block, block)
        found = list(blocks)
        if spec.jobs > 1 and len(found) > 1:
            with Pool(processes=spec.jobs) as pool:
                entries = pool.map(_atlas_entry, found)
        else:
            entries = [_atlas_entry(block) for block in found]
        for entry in entries:
            name = 'n%d-%s.json' % (n, entry['digest'])
            _write_atomic(os.path.join(spec.out_dir, name),
                          dumps(_document('atlas', entry)))
            written.append(name)
        cinfo('n=%d: %d blocks' % (n, len(found)))
    return written


def cmd_atlas(spec):
    return {'out_dir': spec.out_dir, 'files': atlas(spec)}


COMMANDS = {
    'block': (cmd_block, 'Block invariants of a charged multipartition'),
    'mv': (cmd_mv, 'Moving vector'),
    'core-block': (cmd_core_block, 'Decide whether the block is a core block'),
    'scopes': (cmd_scopes, 'Scopes invariants of a core block'),
    'simples': (cmd_simples, 'Number of simple modules of a core block'),
    'decomp': (cmd_decomp, 'v-decomposition matrix of the block'),
    'enumerate': (cmd_enumerate, 'Members of the block'),
    'atlas': (cmd_atlas, 'Write a JSON atlas of blocks by size'),
    }

OPTIONS = {
    'e': (Integer, '--e <int>', 'Quantum characteristic, at least 2'),
    'l': (Integer, '--l <int>', 'Level; defaults to the charge length'),
    'charge': (IntegerList, '--charge <r1,...,rl>', 'Multicharge'),
    'mp': (JSONValue, '--mp <json>',
           'Multipartition as a JSON list of partitions'),
    'n': (Integer, '--n <int>', 'Least size for an atlas'),
    'n_max': (Integer, '--n-max <int>', 'Largest size for an atlas'),
    'output': (lambda **kw: Choice(choices=['json', 'text'], **kw),
               '--output json|text', 'Report format'),
    'budget': (Integer, '--budget <int>', 'Cap on candidates examined'),
    'out_dir': (Path, '--out-dir <path>', 'Atlas directory'),
    'jobs': (Integer, '--jobs <int>', 'Worker processes for an atlas'),
    }

REQUIRED = ('e', 'charge', 'mp')
ATLAS_REQUIRED = ('e', 'charge')


def _option(name):
    variable, key, text = OPTIONS[name]
    flag = key.split()[0]
    return Node(value=variable(var_name=name)(Alias(target='../../../*')),
                pattern=flag.replace('-', r'\-'), help=Help.pair(key, text),
                group=1)


def _has(required):
    return lambda context: all(k in context.vars for k in required)


def grammar():
    """The command grammar."""
    root = Grammar()
    for name, (command, text) in COMMANDS.items():
        required = ATLAS_REQUIRED if name == 'atlas' else REQUIRED
        allowed = [o for o in OPTIONS
                   if name == 'atlas' or o not in ('n', 'n_max', 'out_dir',
                                                   'jobs')]
        if name == 'atlas':
            allowed.remove('mp')
        node = Node(help=text, **dict((o, _option(o)) for o in allowed))
        node(Action(callback=_spec_factory(name), valid=_has(required),
                    help='Run %s' % name))
        root[name] = node
    root['help'] = Node(Action(callback=lambda **kw: None),
                        help='Show this help')
    return root


def _spec_factory(name):
    def make(**kwargs):
        return JobSpec(name, **kwargs)
    return make


def run(spec, stream=None):
    """Execute ``spec`` and write its report; return the exit status."""
    if stream is None:
        stream = sys.stdout
    command, _ = COMMANDS[spec.command]
    status = EXIT_OK
    try:
        body = command(spec)
    except BudgetExceeded as e:
        cerror(str(e))
        body = {'truncated': True, 'budget': e.budget,
                'partial': _jsonable(e.partial)}
        status = EXIT_BUDGET
    except NotCoreBlock as e:
        cerror(str(e))
        return EXIT_NOT_CORE
    except Error as e:
        cerror(str(e))
        return EXIT_ERROR
    table = body.pop('_table', None)
    if spec.output == 'text':
        _render(spec.command, body, table, stream)
    else:
        stream.write(dumps(_document(spec.command, _jsonable(body))))
    return status


def _render(command, body, table, stream):
    block = body.get('block')
    if command == 'block':
        rows = [[k, json.dumps(v)] for k, v in sorted(block.items())]
        print_table(['field', 'value'], rows, stream=stream)
        cprint(stream, '')
        cprint(stream, '^Bcore^B')
        cprint(stream, abacus(_core_of(block), block['e']))
        return
    if table is not None:
        header, rows = table
        print_table([cescape(c) for c in header],
                    [[cescape(c) for c in row] for row in rows], stream=stream)
        return
    if command == 'enumerate':
        print_table(['multipartition', 'kleshchev', 'multicore'],
                    [[json.dumps(m['multipartition']), m['kleshchev'],
                      m['multicore']] for m in body['members']],
                    stream=stream)
        return
    for key, value in sorted(body.items()):
        if isinstance(value, list):
            value = ' '.join(map(str, value))
        cprint(stream, key, cescape(value))


def _core_of(block):
    return BetaSet(block['core_threshold'], block['core_excess'])


def _print_help(context, node, stream):
    for line in HelpParser(context, node).format():
        cprint(stream, line)


def main(argv=None, stream=None):
    """Entry point of the ``akblocks`` console script.

    An empty command line, or ``help``, lists the commands:

    >>> main(['help'])
      atlas      Write a JSON atlas of blocks by size
      block      Block invariants of a charged multipartition
      core-block Decide whether the block is a core block
      decomp     v-decomposition matrix of the block
      enumerate  Members of the block
      help       Show this help
      mv         Moving vector
      scopes     Scopes invariants of a core block
      simples    Number of simple modules of a core block
    0
    """
    if argv is None:
        argv = sys.argv[1:]
    if stream is None:
        stream = sys.stdout
    parser = Parser(grammar())
    try:
        spec = parser.parse(shlex.join(argv)).execute()
    except ParseError as e:
        cerror(str(e))
        _print_help(e.context, e.context.last_node, sys.stderr)
        return EXIT_PARSE
    except Error as e:
        cerror(str(e))
        return EXIT_PARSE
    if spec is None:
        _print_help(Context(parser, ''), parser.grammar, stream)
        return EXIT_OK
    return run(spec, stream)


if __name__ == '__main__':
    sys.exit(main())
