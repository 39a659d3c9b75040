"""Exceptions raised throughout bullcolor.

Everything derives from :class:`BullcolorError` so that the command line tool
can catch the whole family and turn it into an exit status.  Errors that
refute an assumption about the input graph carry a witness, which is the
whole point of raising them rather than quietly returning a worse answer.
"""

class BullcolorError(Exception):
    """Base class for all bullcolor errors."""

class InputError(BullcolorError, ValueError):
    """An argument violated a precondition of the routine it was passed to."""

class ParseError(InputError):
    """A graph or certificate file could not be read.

    Args:
        msg (str): What went wrong.
        lineno (int): 1-based line number, or None if unknown.
        sourcefile (str): Name of the file being read, or None.
    """

    def __init__(self, msg, lineno=None, sourcefile=None):
        super().__init__(msg, lineno, sourcefile)
        self.msg = msg
        self.lineno = lineno
        self.sourcefile = sourcefile

    def __str__(self):
        where = self.sourcefile or '<input>'
        if self.lineno is not None:
            where = '{}:{}'.format(where, self.lineno)
        return 'parse error in {}: {}'.format(where, self.msg)

class ClassViolation(BullcolorError):
    """The graph is outside the class a routine requires.

    Args:
        claim (str): Short name of the violated condition, e.g. 'odd hole',
            'T sees P1', 'central aux'.
        witness: Vertex tuple or certificate object demonstrating it.
        msg (str): Optional extra detail.
    """

    def __init__(self, claim, witness=None, msg=None):
        super().__init__(claim, witness, msg)
        self.claim = claim
        self.witness = witness
        self.msg = msg

    def __str__(self):
        text = 'violated {}'.format(self.claim)
        if self.witness is not None:
            text += ', witness {}'.format(_render(self.witness))
        if self.msg:
            text += ': ' + self.msg
        return text

class OrientationConflict(ClassViolation):
    """Two orientation rules disagree on the direction of one edge.

    first and second are (tail, head, tag, configuration) tuples.
    """

    def __init__(self, edge, first, second):
        super().__init__('edge oriented twice', edge,
            '{} gives {}->{} via {}, {} gives {}->{} via {}'.format(
                first[2], first[0], first[1], _render(first[3]),
                second[2], second[0], second[1], _render(second[3])
        ))
        self.edge = edge
        self.first = first
        self.second = second

class Refusal(BullcolorError):
    """A configured size cap would be exceeded."""

class GenerationError(BullcolorError):
    """An instance generator ran out of retries."""

class InternalError(BullcolorError):
    """Something theory says cannot happen did."""

def _render(witness):
    if isinstance(witness, (tuple, list, frozenset, set)):
        members = sorted(witness) if isinstance(witness, (frozenset, set)) else witness
        return '(' + ' '.join(str(v) for v in members) + ')'
    return str(witness)
