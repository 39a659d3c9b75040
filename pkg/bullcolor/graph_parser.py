"""
Reading and writing graphs and certificates.

Three graph formats are understood:

dimacs
    The coloring-benchmark text format.  ``c`` lines are comments, one
    ``p edge N M`` line gives the sizes, and each ``e U V`` line is an edge
    with 1-based vertex numbers.  Internally vertices are 0-based.

json
    An object ``{"n": N, "edges": [[u, v], ...]}`` with 0-based ids and an
    optional ``"weights"`` array.  This is the canonical form for anything
    the tool writes back out.

graphml
    GraphML as written by most graph tools.  Nodes are numbered in document
    order; edge direction is ignored.

Certificates are line-oriented text, each kind starting with its own header
line so that ``verify`` can tell them apart:

    # coloring              then "vertex color" per line
    # orientation           then "tail head tag" per line
    # weighted-coloring     then "id weight: members" per line
    boxpartition v1         then "box ID LABEL KIND LEVEL : MEMBERS | AUX"

Errors are reported as ParseError with the offending line number wherever
the format has lines.
"""

import json
import os.path
from lxml import etree
from lxml.builder import ElementMaker

from .boxes import Box, BoxPartition, ODD, EVEN, CENTRAL, PERIPHERAL
from .coloring import Coloring, WeightedColoring
from .errors import ParseError, InputError, OrientationConflict
from .graph import Graph
from .orientation import Orientation, TAGS

FORMATS = ('dimacs', 'json', 'graphml')

_extensions = {
    '.col' : 'dimacs',
    '.dimacs' : 'dimacs',
    '.clq' : 'dimacs',
    '.json' : 'json',
    '.graphml' : 'graphml',
    '.xml' : 'graphml',
}

def infer_format(filename):
    """Guess the graph format from a file extension."""
    ext = os.path.splitext(filename)[1].casefold()
    try:
        return _extensions[ext]
    except KeyError:
        raise ParseError(
            'cannot tell the format of {!r}; use --format'.format(filename),
            sourcefile=filename
        ) from None

def _toint(text, lineno, sourcefile, what='integer'):
    try:
        return int(text)
    except (TypeError, ValueError):
        raise ParseError('expected {}, got {!r}'.format(what, text), lineno, sourcefile) from None

class _EdgeCollector:
    """Accumulates edges, rejecting self-loops and repeats."""

    def __init__(self, n, sourcefile):
        self.n = n
        self.sourcefile = sourcefile
        self.edges = []
        self.seen = set()

    def add(self, u, v, lineno=None):
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise ParseError('edge ({}, {}) out of range for {} vertices'.format(u, v, self.n),
                lineno, self.sourcefile)
        if u == v:
            raise ParseError('self-loop at vertex {}'.format(u), lineno, self.sourcefile)
        key = (min(u, v), max(u, v))
        if key in self.seen:
            raise ParseError('duplicate edge ({}, {})'.format(u, v), lineno, self.sourcefile)
        self.seen.add(key)
        self.edges.append(key)

    def graph(self):
        try:
            return Graph(self.n, self.edges)
        except InputError as e:
            raise ParseError(str(e), sourcefile=self.sourcefile) from e

######################################################################
# Graph readers

def parse_dimacs(text, sourcefile=None):
    collector = None
    declared = None
    for lineno, line in enumerate(text.splitlines(), 1):
        fields = line.split()
        if not fields or fields[0] == 'c':
            continue
        if fields[0] == 'p':
            if collector is not None:
                raise ParseError('second problem line', lineno, sourcefile)
            if len(fields) != 4 or fields[1] not in ('edge', 'col'):
                raise ParseError('problem line must be "p edge N M"', lineno, sourcefile)
            n = _toint(fields[2], lineno, sourcefile, 'vertex count')
            declared = (_toint(fields[3], lineno, sourcefile, 'edge count'), lineno)
            collector = _EdgeCollector(n, sourcefile)
        elif fields[0] == 'e':
            if collector is None:
                raise ParseError('edge before the problem line', lineno, sourcefile)
            if len(fields) != 3:
                raise ParseError('edge line must be "e U V"', lineno, sourcefile)
            u = _toint(fields[1], lineno, sourcefile, 'vertex')
            v = _toint(fields[2], lineno, sourcefile, 'vertex')
            collector.add(u - 1, v - 1, lineno)
        else:
            raise ParseError('unknown line type {!r}'.format(fields[0]), lineno, sourcefile)
    if collector is None:
        raise ParseError('no problem line', sourcefile=sourcefile)
    m, lineno = declared
    if m != len(collector.edges):
        raise ParseError('problem line declares {} edges, found {}'.format(m, len(collector.edges)),
            lineno, sourcefile)
    return collector.graph()

def parse_json(text, sourcefile=None):
    g, _ = parse_json_weighted(text, sourcefile)
    return g

def parse_json_weighted(text, sourcefile=None):
    """Parse the json form, returning (Graph, weights or None)."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, e.lineno, sourcefile) from e
    if not isinstance(doc, dict) or 'n' not in doc or 'edges' not in doc:
        raise ParseError('expected an object with "n" and "edges"', 1, sourcefile)
    n = doc['n']
    if not isinstance(n, int) or n < 0:
        raise ParseError('"n" must be a non-negative integer', 1, sourcefile)
    collector = _EdgeCollector(n, sourcefile)
    for e in doc['edges']:
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)):
            raise ParseError('bad edge {!r}'.format(e), sourcefile=sourcefile)
        collector.add(e[0], e[1])
    weights = doc.get('weights')
    if weights is not None and len(weights) != n:
        raise ParseError('{} weights for {} vertices'.format(len(weights), n), sourcefile=sourcefile)
    return collector.graph(), weights

_GRAPHML = '{http://graphml.graphdrawing.org/xmlns}'

def parse_graphml(text, sourcefile=None):
    parser = etree.XMLParser(remove_comments=True, remove_pis=True)
    try:
        root = etree.fromstring(text.encode('utf-8') if isinstance(text, str) else text, parser)
    except etree.XMLSyntaxError as e:
        raise ParseError(e.msg, e.lineno, sourcefile) from e

    def find(name):
        return root.iter(_GRAPHML + name, name)

    ids = {}
    for node in find('node'):
        key = node.get('id')
        if key is None or key in ids:
            raise ParseError('node without a unique id', node.sourceline, sourcefile)
        ids[key] = len(ids)
    collector = _EdgeCollector(len(ids), sourcefile)
    for edge in find('edge'):
        try:
            u, v = ids[edge.get('source')], ids[edge.get('target')]
        except KeyError:
            raise ParseError('edge names an unknown node', edge.sourceline, sourcefile) from None
        collector.add(u, v, edge.sourceline)
    return collector.graph()

_readers = {
    'dimacs' : parse_dimacs,
    'json' : parse_json,
    'graphml' : parse_graphml,
}

def parse_graph(text, format, sourcefile=None):
    """Parse a graph.

    Args:
        text (str): File contents.
        format (str): One of FORMATS.
        sourcefile (str): Name used in error messages.

    Raises:
        ParseError: malformed line, duplicate edge, self-loop...
    """
    try:
        reader = _readers[format]
    except KeyError:
        raise InputError('unknown graph format {!r}'.format(format)) from None
    return reader(text, sourcefile)

def parse_weights(text, n, sourcefile=None):
    """Whitespace separated integer weights in vertex order, '#' comments."""
    weights = []
    for lineno, line in enumerate(text.splitlines(), 1):
        for field in line.split('#', 1)[0].split():
            w = _toint(field, lineno, sourcefile, 'weight')
            if w < 0:
                raise ParseError('negative weight {}'.format(w), lineno, sourcefile)
            weights.append(w)
    if len(weights) != n:
        raise ParseError('{} weights for {} vertices'.format(len(weights), n), sourcefile=sourcefile)
    return weights

######################################################################
# Graph writers

def format_dimacs(g, comment=None):
    lines = []
    if comment:
        lines.extend('c ' + c for c in comment.splitlines())
    lines.append('p edge {} {}'.format(g.n, g.m))
    lines.extend('e {} {}'.format(u + 1, v + 1) for u, v in g.edges())
    return '\n'.join(lines) + '\n'

def format_json(g, weights=None, **extra):
    doc = {'n' : g.n, 'edges' : [list(e) for e in g.edges()]}
    if weights is not None:
        doc['weights'] = list(weights)
    doc.update(extra)
    return json.dumps(doc, sort_keys=True) + '\n'

def format_graphml(g):
    E = ElementMaker(namespace=_GRAPHML[1:-1], nsmap={None : _GRAPHML[1:-1]})
    graph = E.graph(id='G', edgedefault='undirected')
    for v in range(g.n):
        graph.append(E.node(id='n{}'.format(v)))
    for u, v in g.edges():
        graph.append(E.edge(source='n{}'.format(u), target='n{}'.format(v)))
    root = E.graphml(graph)
    return etree.tostring(root, pretty_print=True, xml_declaration=True, encoding='UTF-8').decode('utf-8')

_writers = {
    'dimacs' : format_dimacs,
    'json' : format_json,
    'graphml' : format_graphml,
}

def format_graph(g, format):
    try:
        return _writers[format](g)
    except KeyError:
        raise InputError('unknown graph format {!r}'.format(format)) from None

######################################################################
# Certificates

COLORING_HEADER = '# coloring'
ORIENTATION_HEADER = '# orientation'
WEIGHTED_HEADER = '# weighted-coloring'
BOXES_HEADER = 'boxpartition v1'

def format_coloring(coloring):
    lines = [COLORING_HEADER]
    lines.extend('{} {}'.format(v, c) for v, c in enumerate(coloring.colors))
    return '\n'.join(lines) + '\n'

def format_orientation(o):
    lines = [ORIENTATION_HEADER]
    lines.extend('{} {} {}'.format(*arc) for arc in o.arcs())
    return '\n'.join(lines) + '\n'

def format_weighted_coloring(wc):
    lines = [WEIGHTED_HEADER]
    for i, (s, wt) in enumerate(wc):
        lines.append('{} {}: {}'.format(i, wt, ' '.join(str(v) for v in sorted(s))))
    return '\n'.join(lines) + '\n'

def format_box_partition(bp):
    lines = [BOXES_HEADER]
    for b in bp:
        lines.append('box {} {} {} {} : {} | {}'.format(
            b.id, b.label, b.kind, b.level,
            ' '.join(str(v) for v in sorted(b.members)),
            ' '.join(str(v) for v in b.aux)
        ))
    return '\n'.join(lines) + '\n'

def format_certificate(cert):
    """Serialize any certificate object to its text form."""
    for kls, fn in (
        (Coloring, format_coloring),
        (Orientation, format_orientation),
        (WeightedColoring, format_weighted_coloring),
        (BoxPartition, format_box_partition),
    ):
        if isinstance(cert, kls):
            return fn(cert)
    raise InputError('no certificate form for {!r}'.format(cert))

def _body(text):
    """(lineno, fields) for every non-blank line after the header."""
    for lineno, line in enumerate(text.splitlines(), 1):
        if lineno == 1 or not line.strip():
            continue
        yield lineno, line

def _parse_coloring(text, n, sourcefile):
    colors = {}
    for lineno, line in _body(text):
        fields = line.split()
        if len(fields) != 2:
            raise ParseError('expected "vertex color"', lineno, sourcefile)
        v = _toint(fields[0], lineno, sourcefile, 'vertex')
        if v in colors:
            raise ParseError('vertex {} coloured twice'.format(v), lineno, sourcefile)
        colors[v] = _toint(fields[1], lineno, sourcefile, 'colour')
    size = n if n is not None else len(colors)
    missing = [v for v in range(size) if v not in colors]
    if missing or len(colors) != size:
        raise ParseError('coloring does not cover vertices 0..{}'.format(size - 1), sourcefile=sourcefile)
    return Coloring([colors[v] for v in range(size)])

def _parse_orientation(text, n, sourcefile):
    arcs = []
    for lineno, line in _body(text):
        fields = line.split()
        if len(fields) not in (2, 3):
            raise ParseError('expected "tail head tag"', lineno, sourcefile)
        tail = _toint(fields[0], lineno, sourcefile, 'vertex')
        head = _toint(fields[1], lineno, sourcefile, 'vertex')
        tag = fields[2] if len(fields) == 3 else None
        if tag is not None and tag not in TAGS:
            raise ParseError('unknown tag {!r}'.format(tag), lineno, sourcefile)
        arcs.append((lineno, tail, head, tag))
    size = n if n is not None else max((max(a[1], a[2]) for a in arcs), default=-1) + 1
    o = Orientation(size)
    for lineno, tail, head, tag in arcs:
        try:
            o.orient(tail, head, tag or 'forcing')
        except InputError as e:
            raise ParseError(str(e), lineno, sourcefile) from e
        except OrientationConflict as e:
            raise ParseError('edge {}-{} listed twice'.format(tail, head), lineno, sourcefile) from e
    return o

def _parse_weighted(text, n, sourcefile):
    pairs = []
    for lineno, line in _body(text):
        head, sep, rest = line.partition(':')
        fields = head.split()
        if not sep or len(fields) != 2:
            raise ParseError('expected "id weight: members"', lineno, sourcefile)
        wt = _toint(fields[1], lineno, sourcefile, 'weight')
        members = [_toint(x, lineno, sourcefile, 'vertex') for x in rest.split()]
        pairs.append((members, wt))
    return WeightedColoring(pairs)

def _parse_boxes(text, n, sourcefile):
    boxes = []
    for lineno, line in _body(text):
        head, sep, rest = line.partition(':')
        fields = head.split()
        members, bar, aux = rest.partition('|')
        if not sep or not bar or len(fields) != 5 or fields[0] != 'box':
            raise ParseError('expected "box ID LABEL KIND LEVEL : MEMBERS | AUX"', lineno, sourcefile)
        _, ident, label, kind, level = fields
        if label not in (ODD, EVEN) or kind not in (CENTRAL, PERIPHERAL):
            raise ParseError('bad label or kind', lineno, sourcefile)
        ident = _toint(ident, lineno, sourcefile, 'box id')
        if ident != len(boxes):
            raise ParseError('box ids must count up from 0', lineno, sourcefile)
        boxes.append(Box(
            ident,
            frozenset(_toint(x, lineno, sourcefile, 'vertex') for x in members.split()),
            label, kind,
            _toint(level, lineno, sourcefile, 'level'),
            tuple(_toint(x, lineno, sourcefile, 'vertex') for x in aux.split())
        ))
    size = n if n is not None else max((max(b.members) for b in boxes if b.members), default=-1) + 1
    return BoxPartition(size, boxes)

_certificates = {
    COLORING_HEADER : _parse_coloring,
    ORIENTATION_HEADER : _parse_orientation,
    WEIGHTED_HEADER : _parse_weighted,
    BOXES_HEADER : _parse_boxes,
}

def parse_certificate(text, n=None, sourcefile=None):
    """Parse any certificate, telling the kind from its header line.

    Args:
        text (str): The certificate.
        n (int): Vertex count of the graph it refers to, if known.
        sourcefile (str): Name used in error messages.

    Returns:
        Coloring, Orientation, WeightedColoring or BoxPartition.
    """
    header = text.split('\n', 1)[0].strip()
    try:
        parser = _certificates[header]
    except KeyError:
        raise ParseError('unknown certificate header {!r}'.format(header), 1, sourcefile) from None
    return parser(text, n, sourcefile)
