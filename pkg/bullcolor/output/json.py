"""Machine-readable JSON output."""

import json

from ..visitor import Visitor
from ..report import plain
from ..util import Outputs

@Outputs.register
class JsonReport(Visitor):
    """The whole report as one JSON object with sorted keys.

    Apart from the ``timings`` member, the same command on the same input
    and seed gives byte-identical output.
    """

    outputname = 'json'
    extension = '.json'

    def visit_Report(self, node):
        doc = {
            'command' : node.command,
            'source' : node.source,
            'status' : node.status,
            'checks' : [self.visit(c) for c in node.checks],
            'certificates' : {k : self.visit(v) for k, v in node.certificates.items()},
            'timings' : node.timings,
        }
        if node.graph is not None:
            doc['graph'] = {'n' : node.graph.n, 'm' : node.graph.m}
        if node.meta:
            doc['meta'] = plain(node.meta)
        if node.trace is not None:
            doc['trace'] = self.visit(node.trace)
        if node.rows:
            doc['rows'] = [plain(r) for r in node.rows]
        return doc

    def visit_Check(self, node):
        return {
            'name' : node.name, 'ok' : node.ok,
            'witness' : plain(node.witness), 'detail' : node.detail
        }

    def visit_TraceNode(self, node):
        return {
            'branch' : node.branch, 'n' : node.n, 'colors' : node.colors,
            'detail' : plain(node.detail),
            'children' : self.visitchildren(node),
        }

    def visit_Coloring(self, node):
        return {'type' : 'coloring', 'count' : node.count, 'colors' : list(node.colors)}

    def visit_WeightedColoring(self, node):
        return {
            'type' : 'weighted-coloring', 'total' : node.total,
            'sets' : [[sorted(s), wt] for s, wt in node]
        }

    def visit_Orientation(self, node):
        return {'type' : 'orientation', 'arcs' : [list(arc) for arc in node.arcs()]}

    def visit_BoxPartition(self, node):
        return {'type' : 'boxpartition', 'boxes' : [plain(b) for b in node]}

    def visit_Graph(self, node):
        return {'type' : 'graph', 'n' : node.n, 'edges' : [list(e) for e in node.edges()]}

    def defaultvisit(self, node):
        return plain(node)

    def finish(self, doc):
        self.write(json.dumps(doc, sort_keys=True, indent=2) + '\n')
