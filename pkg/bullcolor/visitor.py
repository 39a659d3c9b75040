"""Defines a base Visitor class for all the outputs.

Every rendering of a Report (text tree, certificates, json, xml, dot) is a
Visitor subclass.  The visitor walks a Report, its checks, its certificates
and its driver trace, dispatching on the type name of each node.
"""

from collections import ChainMap
import sys
from os import makedirs
import os.path
import contextlib

from .report import Report
from .util import printverbose, resource_template

class Visitor:
    """An abstract Visitor over Report trees.

    Subclasses work by overloading some combination of defaultvisit and
    visit_Report, visit_Check, visit_TraceNode, visit_Coloring and so on.
    These are called on a single node and do not recurse by default;
    overloaded functions call self.visit(child) or self.visitchildren(node)
    explicitly.

    Subclasses can also overload begin and finish, which are called before
    the walk starts and after it is completed.

    Create an instance, then call .execute on the Report.  The return value
    is that of finish, usually None.
    """

    binary = False
    encoding = None
    extension = ''

    def __init__(self, output=None):
        """Create this visitor bound to an output.

        Args:
            output: None for no output, '-' for stdout, the name of a file,
                or an open file-like object.
        """
        self.printoptions = {}
        self._output = output
        self.path = self.filename = self.output = None

    def _openfile(self):
        """Open self.path/self.filename as self.output, creating directories."""
        mode = 'wb' if self.binary else 'w'
        if self.path:
            makedirs(self.path, exist_ok = True)
        fn = os.path.join(self.path, self.filename)
        self.output = open(fn, mode, encoding=self.encoding)
        printverbose(fn)

    def execute(self, startnode):
        """Run the Visitor starting from startnode.

        If a filename has been provided, this is when the file is opened;
        it is closed again once the walk is done.
        """
        opened = False
        if isinstance(self._output, str):
            if self._output == '-':
                self.output = sys.stdout.buffer if self.binary else sys.stdout
            else:
                self.filename = os.path.basename(self._output)
                self.path = os.path.dirname(self._output)
                self._openfile()
                opened = True
        else:
            self.output = self._output

        try:
            self.begin(startnode)
            return self.finish(self.visit(startnode))
        finally:
            if opened:
                self.output.close()

    def visit(self, node):
        """Base visit operation.  This shouldn't need overloading."""
        visitname = 'visit_' + type(node).__name__
        fn = getattr(self, visitname, self.defaultvisit)
        return fn(node)

    def visitchildren(self, node):
        """Visit the children of a Report or TraceNode.

        Returns a list of all return values from the child visits.
        """
        return [self.visit(child) for child in children(node)]

    def defaultvisit(self, node):
        """Called when there is no explicit visitor for this node type."""
        raise AttributeError('{} has no method for {}'.format(
            type(self).__name__,
            type(node).__name__
        ))

    def begin(self, startnode):
        """Things to do before we begin visiting the first node."""
        pass

    def finish(self, lastvalue):
        """Things to do after we have visited the entire tree."""
        return lastvalue

    # Convenience output methods.
    def print(self, *args, **kwargs):
        """Prints to self.output; kwargs override self.printoptions."""
        options = ChainMap(kwargs, self.printoptions, {'file' : self.output})
        print(*args, **options)

    def printf(self, formatstr, *args, printargs={}, **kwargs):
        """Prints to self.output using a format string."""
        text = formatstr.format(*args, **kwargs)
        self.print(text, **printargs)

    def write(self, data):
        """Write data to self.output."""
        self.output.write(data)

    @contextlib.contextmanager
    def tempvars(self, **kwargs):
        """Stores kwargs as attributes of the visitor during the context,
        restoring or deleting them on the way out."""
        deleteattrs = []
        restoreattrs = []

        for k, v in kwargs.items():
            try:
                restoreattrs.append( (k, getattr(self, k)) )
            except AttributeError:
                deleteattrs.append(k)
            setattr(self, k, v)

        yield

        for k, v in restoreattrs:
            setattr(self, k, v)
        for k in deleteattrs:
            delattr(self, k)

    @classmethod
    def template(self, resourcename):
        """Get a template resource from this resource subdirectory."""
        return resource_template('{}/{}'.format(self.outputname, resourcename))

def children(node):
    """The child nodes of a Report (checks, certificates, trace, bench rows)
    or a TraceNode (its sub-steps)."""
    if isinstance(node, Report):
        out = list(node.checks)
        out.extend(node.certificates.values())
        if node.trace is not None:
            out.append(node.trace)
        out.extend(node.rows)
        return out
    return list(getattr(node, 'children', ()))
