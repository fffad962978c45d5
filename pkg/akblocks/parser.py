# -*- coding: utf-8 -*-
#
# Copyright (C) 2006-2008 Alec Thomas <alec@swapoff.org>
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.
#

"""Parsing command lines against a :class:`~akblocks.builder.Grammar`."""


__all__ = ['HelpParser', 'Context', 'Parser']
__docformat__ = 'restructuredtext en'


from akblocks.exceptions import *


class HelpParser(object):
    """Help for the nodes that may follow ``node``, sorted by group, order
    and key.

    >>> from akblocks.builder import Grammar, Node, Help
    >>> grammar = Grammar(
    ...     scopes=Node(help='Scopes invariants'),
    ...     e=Node(help=Help.pair('--e <int>', 'Quantum characteristic'),
    ...            group=2),
    ...     mv=Node(help='Moving vector'))
    >>> help = HelpParser(Context(None, ''), grammar)
    >>> list(help)  # doctest: +NORMALIZE_WHITESPACE
    [(0, 'mv', 'Moving vector'), (0, 'scopes', 'Scopes invariants'),
     (2, '--e <int>', 'Quantum characteristic')]
    >>> print('\\n'.join(help.format()))
      ^Bmv       ^B Moving vector
      ^Bscopes   ^B Scopes invariants
    <BLANKLINE>
      ^B--e <int>^B Quantum characteristic
    """
    def __init__(self, context, node):
        self.node = node
        self.help = sorted(
            (child.group, child.order, key, text)
            for child in node.children(context, follow=True)
            if child.visible(context)
            for key, text in child.help(context))

    def __iter__(self):
        for group, order, key, text in self.help:
            yield (group, key, text)

    def format(self):
        """Lines of help for :mod:`akblocks.console`, with a blank line
        between groups."""
        if not self.help:
            return []
        width = max(len(h[2]) for h in self.help)
        out = []
        last_group = None
        for group, order, key, text in self.help:
            if last_group is not None and group != last_group:
                out.append('')
            last_group = group
            out.append('  ^B%-*s^B %s' % (width, key, text))
        return out


class Context(object):
    """State of one parse: the command, the cursor, the variables collected
    and the trail of ``(node, match)`` pairs selected so far.

    When the command does not parse, the context keeps what was consumed, so
    ``parsed`` and ``remaining`` locate the error.

    >>> context = Context(None, 'mv --e 5')
    >>> context.advance(3)
    >>> context.parsed, context.remaining
    ('mv ', '--e 5')
    """
    def __init__(self, parser, command, data=None):
        self.parser = parser
        self.command = command
        self.data = data
        self.cursor = 0
        self.vars = {}
        self.trail = []
        self._traversed = {}

    @property
    def remaining(self):
        return self.command[self.cursor:]

    @property
    def parsed(self):
        return self.command[:self.cursor]

    @property
    def last_node(self):
        """The last node that consumed input.

        >>> from akblocks.builder import Grammar, Node
        >>> parser = Parser(Grammar(scopes=Node(e=Node())))
        >>> parser.parse('scopes e 5').last_node
        <Node:/scopes/e>
        """
        return self.trail[-1][0]

    def advance(self, distance):
        self.cursor += distance

    def selected(self, node):
        path = node.path()
        self._traversed[path] = self._traversed.get(path, 0) + 1

    def traversed(self, node):
        """How many times ``node`` has matched.

        >>> from akblocks.builder import Grammar, Node, Alias
        >>> parser = Parser(Grammar(e=Node(traversals=0)(Alias(target='/e'))))
        >>> node = parser.find('/e')
        >>> [parser.parse('e ' * i).traversed(node) for i in range(4)]
        [0, 1, 2, 3]
        """
        return self._traversed.get(node.path(), 0)

    def execute(self):
        """Run the terminal node; input left over is an
        :class:`~akblocks.exceptions.InvalidToken`.

        >>> from akblocks.builder import Grammar, Node, Action
        >>> parser = Parser(Grammar(mv=Node()(Action(callback=lambda: 'OK'))))
        >>> parser.parse('mv').execute()
        'OK'
        >>> parser.parse('mv block').execute()
        Traceback (most recent call last):
        ...
        akblocks.exceptions.InvalidToken: invalid token 'block'
        """
        if self.remaining.strip():
            raise InvalidToken(self)
        return self.last_node.terminal(self)

    def __repr__(self):
        return "<Context command:'%s' remaining:'%s'>" % (self.command,
                                                          self.remaining)


class Parser(object):
    """Parses and executes command lines.

    :param grammar: The :class:`~akblocks.builder.Grammar` to parse with.
    :param data: Attached to every :class:`Context`.

    >>> from akblocks.builder import Grammar, Node, Action
    >>> parser = Parser(Grammar(block=Node(), core_block=Node(e=Node(
    ...     action=Action(callback=lambda: 'done')))))
    >>> parser.parse('core_block e')
    <Context command:'core_block e' remaining:''>
    >>> parser.execute('core_block e')
    'done'
    >>> parser.parse('core_block mv')
    <Context command:'core_block mv' remaining:'mv'>
    """
    def __init__(self, grammar, data=None, context_factory=Context):
        from akblocks.builder import Grammar
        assert isinstance(grammar, Grammar)
        self.grammar = grammar
        self.data = data
        self.context_factory = context_factory

    def parse(self, command, data=None):
        """Consume as much of ``command`` as the grammar allows and return
        the :class:`Context`."""
        context = self.context_factory(self, command,
                                       self.data if data is None else data)
        node, match = self.grammar, None
        while node is not None:
            context.trail.append((node, match))
            if match is not None:
                node.advance(context)
            node.selected(context, match)
            node, match = self._step(context, node)
        return context

    def _step(self, context, node):
        for candidate in node.next(context):
            match = candidate.match(context)
            if match is not None:
                return candidate, match
        return None, None

    def execute(self, command, data=None):
        return self.parse(command, data).execute()

    def find(self, path):
        return self.grammar.find(path)


if __name__ == '__main__':
    import doctest
    doctest.testmod()
