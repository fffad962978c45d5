# -*- coding: utf-8 -*-
#
# Copyright (C) 2006-2007 Alec Thomas <alec@swapoff.org>
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.
#


"""Grammar nodes for the ``akblocks`` command line.

A command line such as::

    block --e 5 --charge 1,3,3,6 --mp '[[1],[],[],[]]'

is matched against a tree of :class:`Node` objects, one token per node. Each
option node owns a :class:`Variable` that converts its argument, and the
variable loops back to the command through an :class:`Alias` so that the
options may be given in any order. An :class:`Action` matches the end of the
line and receives the converted values as keyword arguments.
"""


import json
import os
import posixpath
import re
import shlex
from fnmatch import fnmatch
from akblocks.exceptions import *


__all__ = [
    'Node', 'Alias', 'Action', 'Variable', 'Grammar', 'Help',
    'Integer', 'IntegerList', 'JSONValue', 'Choice', 'Path',
    ]
__docformat__ = 'restructuredtext en'


def _natural_key(name, splitter=re.compile(r'(\d+)')):
    return [int(k) if k.isdigit() else k for k in splitter.split(name)]


class Node(object):
    """A node of the command grammar.

    Nodes passed as keyword arguments become children named after the
    keyword (a trailing underscore is dropped, so ``n_=`` names ``n``).
    Positional nodes are children with generated names. Any other keyword
    argument is set as an attribute, which is how a node's ``valid``
    predicate, ``group`` or ``traversals`` are overridden per instance.

    :param help: A string, or a callable returning ``(key, help)`` pairs.
    :param pattern: Regular expression matching the token. Defaults to the
                    escaped node name.
    :param separator: Regular expression for the text following the token.

    >>> mv = Node(name='mv', help='Moving vector')
    >>> mv.pattern
    'mv'
    >>> list(mv.help(None))
    [('mv', 'Moving vector')]

    ``traversals`` bounds how often a node may match in one command line;
    ``0`` is unbounded. Children are ordered by ``group``, then ``order``,
    then by name with digits compared numerically:

    >>> [n.name for n in Node(e10=Node(), e2=Node(), block=Node(group=1))]
    ['e2', 'e10', 'block']
    """
    pattern = None
    separator = r'\s+|\s*$'
    group = 0
    order = 0
    traversals = 1

    def __init__(self, *anonymous, **kwargs):
        self._children = {}
        self._anonymous = 0
        self.parent = None
        help = kwargs.pop('help', '')
        if isinstance(help, str):
            self._help = help
        elif callable(help):
            self.help = help
        else:
            raise InvalidHelp('help must be a callable or a string')
        self.pattern = kwargs.pop('pattern', self.pattern)
        self.separator = kwargs.pop('separator', self.separator)
        self._name = None
        self.name = kwargs.pop('name', None)
        self(*anonymous, **kwargs)

    def _set_name(self, name):
        self._name = name
        if self.pattern is None and isinstance(name, str):
            self.pattern = re.escape(name)
        self._compile()

    name = property(lambda self: self._name, _set_name)

    def _compile(self):
        if self.pattern is None:
            return
        self._pattern = re.compile(self.pattern)
        self._separator = re.compile(self.separator)
        self._full_match = re.compile('(?:%s)(?:%s)' % (self.pattern,
                                                        self.separator))

    def __call__(self, *anonymous, **options):
        """Attach children and set options; returns the node itself.

        >>> top = Node(name='scopes')
        >>> top(Node(), e=Node())
        <Node:/scopes>
        >>> sorted(top._children)
        ['__anonymous_0', 'e']
        """
        for node in anonymous:
            if not isinstance(node, Node):
                raise InvalidAnonymousNode('"%r" must be a Node object' % node)
            self._attach('__anonymous_%i' % self._anonymous, node)
            self._anonymous += 1
        for key, value in options.items():
            if isinstance(value, Node):
                self._attach(key.rstrip('_'), value)
            else:
                setattr(self, key, value)
        return self

    def _attach(self, name, node):
        node.name = name
        node.parent = self
        self._children[name] = node

    def __setitem__(self, key, child):
        self(**{key: child})

    def __getitem__(self, key):
        return self._children[key]

    def __iter__(self):
        return iter(sorted(self._children.values(),
                           key=lambda n: (n.group, n.order,
                                          _natural_key(n.name))))

    def help(self, context):
        """Yield ``(key, help)`` pairs describing this node."""
        if self.pattern == re.escape(self.name):
            yield (self.name, self._help)
        else:
            yield ('<%s>' % self.name, self._help)

    def path(self):
        """The slash separated path from the root.

        >>> Grammar(scopes=Node(e=Node())).find('/scopes/e').path()
        '/scopes/e'
        """
        names = []
        node = self
        while node is not None:
            if node.name is not None:
                names.insert(0, node.name)
            node = node.parent
        return '/' + '/'.join(names)

    def root(self):
        node = self
        while node.parent is not None:
            node = node.parent
        return node

    def find(self, path):
        """Find a descendant by path; absolute paths start at this node.

        >>> top = Node(name='top', block=Node(), mv=Node(e=Node()))
        >>> top.find('/mv/e')
        <Node:/top/mv/e>
        >>> top.find('/block/e')
        Traceback (most recent call last):
        ...
        akblocks.exceptions.InvalidNodePath: /top/block/e
        """
        node = self
        for component in (c for c in path.split('/') if c):
            if component not in node._children:
                raise InvalidNodePath(posixpath.join(self.path(),
                                                     path.strip('/')))
            node = node._children[component]
        return node

    def valid(self, context):
        """Whether the node may still match in ``context``."""
        return not self.traversals or \
            context.traversed(self) < self.traversals

    def visible(self, context):
        return True

    def follow(self, context):
        """The nodes this node stands for; itself unless it is an alias."""
        yield self

    def children(self, context, follow=False):
        """Valid children in order, aliases expanded when ``follow``."""
        for child in self:
            if not child.valid(context):
                continue
            if not follow:
                yield child
                continue
            for branch in child.follow(context):
                if branch.valid(context):
                    yield branch

    def next(self, context):
        return self.children(context, follow=True)

    def match(self, context):
        """Match the token at the cursor, followed by a separator."""
        if not self.valid(context):
            return None
        match = self._pattern.match(context.command, context.cursor)
        if match is None:
            return None
        if not self._separator.match(context.command, match.end()):
            return None
        return match

    def advance(self, context):
        match = self._full_match.match(context.command, context.cursor)
        context.advance(len(match.group()))

    def selected(self, context, match):
        context.selected(self)

    def terminal(self, context):
        """Called when the command line ends on this node."""
        raise UnexpectedEOL(context)

    def __repr__(self):
        return '<%s:%s>' % (self.__class__.__name__, self.path())


class Alias(Node):
    """Stands in for the nodes at ``target``.

    ``target`` is resolved relative to the alias. A final component with
    glob characters aliases every matching sibling, which is how an option
    returns to the choice between its command's remaining options:

    >>> from akblocks.parser import Parser, Context
    >>> parser = Parser(Grammar(mv=Node(e=Node(), l=Node(
    ...     again=Alias(target='../../*')))))
    >>> alias = parser.find('/mv/l/again')
    >>> alias
    <Alias:/mv/l/again for /mv/*>
    >>> list(alias.follow(Context(parser, '')))
    [<Node:/mv/e>, <Node:/mv/l>]
    """

    pattern = ''

    def __init__(self, target, *anonymous, **kwargs):
        self._target = target
        Node.__init__(self, help='<alias for "%s">' % target,
                      *anonymous, **kwargs)

    @property
    def target(self):
        return posixpath.normpath(posixpath.join(self.path(), self._target))

    def aliased(self, context):
        root = self.root()
        target = self.target
        try:
            yield root.find(target)
        except InvalidNodePath:
            parent = root.find(posixpath.dirname(target))
            pattern = posixpath.basename(target)
            for child in parent.children(context, follow=True):
                if fnmatch(child.name, pattern):
                    yield child

    def follow(self, context):
        return list(self.aliased(context))

    def valid(self, context):
        return any(node.valid(context) for node in self.aliased(context))

    def visible(self, context):
        return any(node.visible(context) for node in self.aliased(context))

    def selected(self, context, match):
        raise SystemError('aliases are expanded before selection')

    def __repr__(self):
        return '<%s:%s for %s>' % (self.__class__.__name__, self.path(),
                                   self.target)


class Action(Node):
    """Matches the end of the line and calls ``callback`` with the
    collected variables.

    >>> from akblocks.parser import Parser
    >>> grammar = Grammar(mv=Node(e=Integer()(Action(
    ...     callback=lambda e: 'e=%d' % e))))
    >>> Parser(grammar).execute('mv 5')
    'e=5'
    >>> list(grammar.find('/mv/e/__anonymous_0').help(None))
    [('<eol>', '')]
    """
    pattern = '$'
    group = 9999

    def __init__(self, callback, *anonymous, **kwargs):
        help = kwargs.pop('help', '')
        if isinstance(help, str):
            help = Help.pair('<eol>', help)
        self.callback = callback
        Node.__init__(self, help=help, *anonymous, **kwargs)

    def terminal(self, context):
        return self.callback(**context.vars)

    def selected(self, context, match):
        # Not counted; the action stays listed in help after it matches.
        pass


class Variable(Node):
    """Converts its token with :meth:`parse` and stores the value under
    ``var_name`` (the node name by default) in ``context.vars``.

    A variable allowed more than one traversal collects a list. A failed
    conversion surfaces as :class:`~akblocks.exceptions.ValidationError`.

    >>> from akblocks.parser import Parser
    >>> Parser(Grammar(label=Variable())).parse('rouquier').vars
    {'label': 'rouquier'}
    """

    pattern = r'\S+'
    var_name = None

    def __init__(self, *anonymous, **kwargs):
        Node.__init__(self, *anonymous, **kwargs)
        if self.var_name is None:
            self.var_name = self.name

    def _set_name(self, name):
        if self.var_name is None or self.var_name == self._name:
            self.var_name = name
        Node._set_name(self, name)

    name = property(lambda self: self._name, _set_name)

    def selected(self, context, match):
        try:
            value = self.parse(context, match)
        except (ValueError, Error) as e:
            raise ValidationError(context, token=match.group(), exception=e)
        if self.traversals != 1:
            context.vars.setdefault(self.var_name, []).append(value)
        else:
            context.vars[self.var_name] = value
        Node.selected(self, context, match)

    def parse(self, context, match):
        return match.group()


class Grammar(Node):
    """Root of a grammar. An empty command line is accepted and does
    nothing."""
    pattern = '^'

    def __init__(self, *anonymous, **kwargs):
        Node.__init__(self, help='<root>', *anonymous, **kwargs)

    def terminal(self, context):
        return None


class Help(object):
    """Fixed help for a node whose help key is not its name.

    >>> list(Help.pair('--e <int>', 'Quantum characteristic')(None))
    [('--e <int>', 'Quantum characteristic')]
    """
    def __init__(self, pairs):
        self.pairs = list(pairs)

    def __call__(self, context):
        return iter(self.pairs)

    @staticmethod
    def pair(key, help):
        return Help([(key, help)])


class Integer(Variable):
    """Matches an integer.

    >>> from akblocks.parser import Parser
    >>> parser = Parser(Grammar(e=Integer()))
    >>> parser.parse('-12').vars['e']
    -12
    >>> parser.parse('1.5').remaining
    '1.5'
    """
    pattern = r'[-+]?\d+'

    def parse(self, context, match):
        return int(match.group())


class IntegerList(Variable):
    """Matches a comma separated list of integers, such as a multicharge.

    >>> from akblocks.parser import Parser
    >>> Parser(Grammar(charge=IntegerList())).parse('1,3,3,6').vars
    {'charge': (1, 3, 3, 6)}
    """
    pattern = r'[-+]?\d+(?:,[-+]?\d+)*'

    def parse(self, context, match):
        return tuple(int(x) for x in match.group().split(','))


class JSONValue(Variable):
    """Matches a JSON literal, bare or shell quoted.

    >>> from akblocks.parser import Parser
    >>> parser = Parser(Grammar(mp=JSONValue()))
    >>> parser.parse("'[[2, 1], []]'").vars['mp']
    [[2, 1], []]
    >>> parser.parse('[[1],[1]]').vars['mp']
    [[1], [1]]
    >>> parser.parse('[[1],')  # doctest: +ELLIPSIS
    Traceback (most recent call last):
    ...
    akblocks.exceptions.ValidationError: validation of '[[1],' failed; ...
    """
    pattern = r"""'[^']*'|"(?:[^"\\]|\\.)*"|[^\s'"]+"""

    def parse(self, context, match):
        return json.loads(shlex.split(match.group())[0])


class Choice(Variable):
    """Matches one of the words in ``choices``.

    >>> from akblocks.parser import Parser
    >>> parser = Parser(Grammar(output=Choice(choices=['json', 'text'])))
    >>> parser.parse('text').vars
    {'output': 'text'}
    >>> parser.parse('yaml').vars
    {}
    """
    pattern = r'\w+'
    choices = ()

    def match(self, context):
        match = Variable.match(self, context)
        if match is not None and match.group() in self.choices:
            return match
        return None


class Path(Variable):
    """Matches a filesystem path, expanding ``~``.

    >>> from akblocks.parser import Parser
    >>> Parser(Grammar(out=Path())).parse('atlas/e2').vars
    {'out': 'atlas/e2'}
    """
    pattern = r"""'[^']*'|[^\s'"]+"""

    def parse(self, context, match):
        return os.path.expanduser(shlex.split(match.group())[0])


if __name__ == '__main__':
    import doctest
    doctest.testmod()
