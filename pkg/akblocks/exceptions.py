# -*- coding: utf-8 -*-
#
# Copyright (C) 2006-2007 Alec Thomas <alec@swapoff.org>
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.
#

"""akblocks exception hierarchy.

Two families share the :class:`Error` base: domain errors raised by the
combinatorial modules, and the :class:`ParseError` family raised while parsing
a command line with a :class:`~akblocks.builder.Grammar`.
"""


import string


__all__ = ['Error', 'InvalidPartition', 'InvalidBetaSet',
           'InvalidMultipartition', 'InvalidResidue', 'RankMismatch',
           'NotInClosedAlcove', 'NotCoreBlock', 'NotKleshchev',
           'IncompatibleBlocks', 'PreconditionError', 'ShapeError',
           'HypothesisNotSatisfied', 'ComputationError', 'BudgetExceeded',
           'InvalidHelp', 'InvalidNodePath', 'InvalidAnonymousNode',
           'ParseError', 'UnexpectedEOL', 'InvalidToken', 'ValidationError']
__docformat__ = 'restructuredtext en'


class Error(Exception):
    """The base of all akblocks exceptions.

    Subclasses may define a ``message`` template; keyword arguments passed to
    the constructor are substituted into it.

    >>> print(InvalidResidue(j=7, e=3))
    residue 7 is not in [0, 2]
    """
    message = None

    def __init__(self, *args, **kwargs):
        if not args and self.message is not None:
            template = string.Template(self.message)
            args = (template.safe_substitute(**kwargs),)
        Exception.__init__(self, *args)
        self.details = kwargs


class InvalidPartition(Error):
    """A sequence of integers is not a partition."""


class InvalidBetaSet(Error):
    """A set of integers is not a beta-set: bounded above and containing
    every integer below some point."""


class InvalidMultipartition(Error):
    """A multipartition has the wrong number of components or an invalid
    component."""


class InvalidResidue(Error):
    """A residue index is outside ``[0, e-1]``."""
    message = 'residue $j is not in [0, $last]'

    def __init__(self, *args, **kwargs):
        if 'e' in kwargs:
            kwargs.setdefault('last', kwargs['e'] - 1)
        Error.__init__(self, *args, **kwargs)


class RankMismatch(Error):
    """Two objects that must share a rank (``e`` or ``l``) do not."""
    message = 'rank mismatch: $left != $right'


class NotInClosedAlcove(Error):
    """A charge expected in the closed alcove is not there."""
    message = 'charge $charge is not in the closed alcove for e=$e'


class NotCoreBlock(Error):
    """An operation that needs a core block was given a non-core block."""
    message = 'block is not a core block (moving vector $mv)'


class NotKleshchev(Error):
    """A multipartition that must be Kleshchev is not."""


class IncompatibleBlocks(Error):
    """Blocks that should be comparable have different parameters."""


class PreconditionError(Error):
    """The hypotheses of a construction do not hold on its input."""


class ShapeError(Error):
    """Beta-sets are not of the shape a formula applies to."""


class HypothesisNotSatisfied(Error):
    """No frame satisfying a reduction's hypotheses exists."""


class ComputationError(Error):
    """An internal consistency check failed. This always indicates a bug."""


class BudgetExceeded(Error):
    """A configured budget was exhausted.

    The work completed so far is kept on ``partial`` so callers can report it.
    """
    message = 'budget of $budget exceeded'

    def __init__(self, budget, partial=None):
        Error.__init__(self, budget=budget)
        self.budget = budget
        self.partial = partial


class InvalidHelp(Error):
    """Thrown when the help provided to a Node is of an invalid type."""


class InvalidNodePath(Error):
    """Thrown when an attempt is made to reference an invalid node path. This
    can occur when an Alias target is invalid."""


class InvalidAnonymousNode(Error):
    """When Node is used as a callable to add child nodes, positional arguments
    are treated as anonymous child nodes. This exception is thrown if an object
    that is not a Node is passed."""


class ParseError(Error):
    """Report a parse error. Output is formatted using string templates,
    where template variables are passed as arguments to the constructor.

    >>> from akblocks.parser import Context
    >>> print(ParseError(Context(None, 'foo bar'), "remaining=$remaining, n=$n", n=3))
    remaining=foo bar, n=3
    """
    message = 'parse error'

    def __init__(self, context, message=None, **kwargs):
        template = string.Template(message or self.message)
        message = template.safe_substitute(remaining=context.remaining,
                                           **kwargs)
        Error.__init__(self, message)
        self.context = context


class UnexpectedEOL(ParseError):
    """Raised when all input is consumed and no terminal (``Action``) node is
    reached."""
    message = 'more input required'


class InvalidToken(ParseError):
    """Raised when a token is reached that is invalid at the current grammar
    branch."""
    message = "invalid token '$remaining'"


class ValidationError(ParseError):
    """Raised when a variable fails to parse, eg. a malformed multipartition
    literal."""
    message = "validation of '$token' failed; $exception"


if __name__ == '__main__':
    import doctest
    doctest.testmod()
