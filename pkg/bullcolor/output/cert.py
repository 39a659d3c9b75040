"""Certificate output: the bit-exact text forms that ``verify`` reads back."""

from ..visitor import Visitor
from ..errors import InputError
from ..util import Outputs, printverbose
from ..graph_parser import format_certificate, format_graph, format_json
from ..report import plain

@Outputs.register
class cert(Visitor):
    """Write every certificate in the report, in its documented text form.

    A generated graph is written in the requested graph format (json by
    default, carrying the generator metadata).  Reports with no certificate
    write nothing.
    """

    outputname = 'cert'
    extension = '.cert'

    def visit_Report(self, node):
        self.meta = node.meta
        self.graphformat = node.graphformat
        for c in node.certificates.values():
            self.visit(c)

    def visit_Graph(self, node):
        if self.graphformat == 'json':
            extra = {'meta' : _jsonable(self.meta)} if self.meta else {}
            weights = self.meta.get('weights') if self.meta else None
            self.write(format_json(node, weights, **extra))
        else:
            self.write(format_graph(node, self.graphformat))

    def defaultvisit(self, node):
        try:
            self.write(format_certificate(node))
        except InputError:
            printverbose('no certificate form for {}, skipped'.format(type(node).__name__))

def _jsonable(meta):
    return {k : plain(v) for k, v in meta.items() if k != 'weights'}
