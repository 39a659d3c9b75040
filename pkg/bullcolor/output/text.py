"""Output formatters in the text class."""

import textwrap
from ..visitor import Visitor
from ..util import Outputs, vertexlist

@Outputs.register
class text(Visitor):
    """An indented tree of the report: verdicts, certificates in brief, and
    the driver trace.  Bench reports become a summary table."""

    outputname = 'text'
    extension = '.txt'
    indentper = '    '

    def begin(self, startnode):
        self.indent = ''
        self.wrapper = textwrap.TextWrapper(width = 100)

    def headline(self, line, node=None, body=()):
        """Output text:

        line
            each line of body
            various children of node
        """
        oldindent = self.indent
        self.print(oldindent + line)
        self.indent = oldindent + self.indentper
        self.wrapper.initial_indent = self.wrapper.subsequent_indent = self.indent
        for b in body:
            for wrapped in self.wrapper.wrap(b):
                self.print(wrapped)
        if node is not None:
            self.visitchildren(node)
        self.indent = oldindent

    def visit_Report(self, node):
        if node.rows:
            self.write(self.template('bench.txt').render(report=node))
            return
        line = '{} {}'.format(node.command, node.source or '')
        with self.tempvars(names={id(v) : k for k, v in node.certificates.items()}):
            self.headline(line.rstrip(), node)
        for name, seconds in sorted(node.timings.items()):
            self.printf('{}{} {:.4f}s', self.indentper, name, seconds)

    def visit_Check(self, node):
        mark = {True : 'ok', False : 'FAIL', None : '--'}[node.ok]
        line = '[{}] {}'.format(mark, node.name)
        body = [node.detail] if node.detail else []
        if node.witness is not None:
            body.append('witness: {}'.format(node.witness))
        self.headline(line, body=body)

    def _name(self, node, default):
        return getattr(self, 'names', {}).get(id(node), default)

    def visit_Coloring(self, node):
        self.headline(
            '{}: {} colours'.format(self._name(node, 'coloring'), node.count),
            body = ['{}: {}'.format(c, vertexlist(cls_)) for c, cls_ in enumerate(node.classes)]
        )

    def visit_WeightedColoring(self, node):
        self.headline(
            '{}: total weight {}'.format(self._name(node, 'weighted coloring'), node.total),
            body = ['{} x {{{}}}'.format(wt, vertexlist(s, ', ')) for s, wt in node]
        )

    def visit_Orientation(self, node):
        self.headline(
            '{}: {} arcs'.format(self._name(node, 'orientation'), len(node)),
            body = ['{} -> {} ({})'.format(*arc) for arc in node.arcs()]
        )

    def visit_BoxPartition(self, node):
        self.headline(
            '{}: {} boxes, {} central'.format(self._name(node, 'boxes'), len(node), len(node.central)),
            body = [
                'box {} level {} {} {}: {{{}}} aux {}'.format(
                    b.id, b.level, b.kind, b.label, vertexlist(b.members, ', '), b.aux)
                for b in node
            ]
        )

    def visit_SpikedDecomposition(self, node):
        self.headline(
            '{}: |H| = {}'.format(self._name(node, 'spiked decomposition'), len(node.h)),
            body = ['{} = {{{}}}'.format(k, vertexlist(v, ', ') if isinstance(v, frozenset) else v)
                for k, v in node._asdict().items()]
        )

    def visit_Graph(self, node):
        self.headline(
            '{}: {} vertices, {} edges'.format(self._name(node, 'graph'), node.n, node.m),
            body = [' '.join('{}-{}'.format(u, v) for u, v in node.edges())]
        )

    def visit_TraceNode(self, node):
        detail = ', '.join(
            '{}={}'.format(k, v) for k, v in sorted(node.detail.items()) if k != 'orientation'
        )
        line = '{} n={} colours={}'.format(node.branch, node.n, node.colors)
        if detail:
            line += ' ({})'.format(detail)
        self.headline(line, node)
