"""Manage XML output formats."""

from lxml.builder import E
from lxml.etree import tostring

from ..visitor import Visitor
from ..report import plain
from ..util import Outputs, vertexlist

def _attrs(**kwargs):
    return {k : str(v) for k, v in kwargs.items() if v is not None}

@Outputs.register
class XmlReport(Visitor):
    """The report as an XML document.

    Vertex sets are written as space separated ids in element text; witnesses
    and details, which vary in shape, are written as their JSON-like plain
    form.
    """

    outputname = 'xml'
    extension = '.xml'
    binary = True

    def visit_Report(self, node):
        names = {id(v) : k for k, v in node.certificates.items()}
        root = E.report(**_attrs(command=node.command, source=node.source, status=node.status))
        if node.graph is not None:
            root.append(E.graph(**_attrs(n=node.graph.n, m=node.graph.m)))
        for c in node.checks:
            root.append(self.visit(c))
        for cert in node.certificates.values():
            el = self.visit(cert)
            el.set('name', names[id(cert)])
            root.append(el)
        if node.trace is not None:
            root.append(E.trace(self.visit(node.trace)))
        for row in node.rows:
            root.append(E.row(**_attrs(**{k : plain(v) for k, v in row._asdict().items()})))
        for name, seconds in sorted(node.timings.items()):
            root.append(E.timing('{:.6f}'.format(seconds), name=name))
        return root

    def visit_Check(self, node):
        el = E.check(**_attrs(name=node.name, ok={True : 'yes', False : 'no', None : 'skipped'}[node.ok]))
        if node.detail:
            el.append(E.detail(node.detail))
        if node.witness is not None:
            el.append(E.witness(str(plain(node.witness))))
        return el

    def visit_TraceNode(self, node):
        el = E.step(**_attrs(branch=node.branch, n=node.n, colors=node.colors))
        for k, v in sorted(node.detail.items()):
            if k != 'orientation':
                el.append(E.detail(str(plain(v)), key=k))
        el.extend(self.visitchildren(node))
        return el

    def visit_Coloring(self, node):
        return E.coloring(
            *(E('class', vertexlist(cls_), color=str(c)) for c, cls_ in enumerate(node.classes)),
            count=str(node.count)
        )

    def visit_WeightedColoring(self, node):
        return E.weightedcoloring(
            *(E.set(vertexlist(s), weight=str(wt)) for s, wt in node),
            total=str(node.total)
        )

    def visit_Orientation(self, node):
        return E.orientation(
            *(E.arc(tail=str(t), head=str(h), tag=tag) for t, h, tag in node.arcs())
        )

    def visit_BoxPartition(self, node):
        return E.boxpartition(*(
            E.box(
                vertexlist(b.members),
                **_attrs(id=b.id, label=b.label, kind=b.kind, level=b.level, aux=' '.join(str(v) for v in b.aux))
            ) for b in node
        ))

    def visit_Graph(self, node):
        return E.graph(
            *(E.edge(u=str(u), v=str(v)) for u, v in node.edges()),
            n=str(node.n)
        )

    def defaultvisit(self, node):
        return E.certificate(str(plain(node)), type=type(node).__name__)

    def finish(self, tree):
        self.write(
            tostring(
                tree,
                xml_declaration=True, pretty_print=True,
                encoding = 'UTF-8'
        ))
