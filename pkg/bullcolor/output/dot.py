"""Graphviz output: the graph, orientation arrows, and box or colour fills."""

from ..visitor import Visitor
from ..boxes import BoxPartition
from ..coloring import Coloring
from ..orientation import Orientation
from ..errors import InputError
from ..util import Outputs

#: Fill colours, cycled by colour class or box id.
PALETTE = (
    'lightblue', 'salmon', 'palegreen', 'khaki', 'plum', 'lightgray',
    'orange', 'cyan', 'pink', 'wheat',
)

@Outputs.register
class dot(Visitor):
    """Render the report's graph for Graphviz.

    With an orientation certificate the graph is a digraph whose arcs are
    labelled by the rule that oriented them.  Vertices are filled by colour
    class when there is a coloring, otherwise by box, with central boxes
    drawn with a double outline.
    """

    outputname = 'dot'
    extension = '.dot'

    def visit_Report(self, node):
        if node.graph is None:
            raise InputError('{} report has no graph to draw'.format(node.command))
        certs = list(node.certificates.values())
        orientation = next((c for c in certs if isinstance(c, Orientation)), None)
        coloring = next((c for c in certs if isinstance(c, Coloring)), None)
        boxes = next((c for c in certs if isinstance(c, BoxPartition)), None)

        vertices = []
        for v in range(node.graph.n):
            attrs = {}
            if coloring is not None:
                attrs['fillcolor'] = PALETTE[coloring[v] % len(PALETTE)]
                attrs['xlabel'] = 'c{}'.format(coloring[v])
            elif boxes is not None:
                box = boxes.box_of(v)
                attrs['fillcolor'] = PALETTE[box.id % len(PALETTE)]
                attrs['xlabel'] = 'B{}'.format(box.id)
                if box.kind == 'central':
                    attrs['peripheries'] = 2
            vertices.append((v, attrs))

        if orientation is not None:
            edges = [(t, h, tag) for t, h, tag in orientation.arcs()]
        else:
            edges = [(u, v, None) for u, v in node.graph.edges()]

        self.write(self.template('graph.dot').render(
            name = node.command,
            directed = orientation is not None,
            vertices = vertices,
            edges = edges,
        ))
