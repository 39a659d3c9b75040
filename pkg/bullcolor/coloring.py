"""Colorings, weighted colorings, and the coloring routines that do not need
the structural driver: chain coloring of a transitive orientation, even-pair
contraction for weakly chordal graphs, and vertex replication for weights.
"""

from .errors import InputError, InternalError, Refusal
from .graph import Graph, Verdict, bits, mask_of, iter_chordless_paths
from .util import ProgramGlobals, printverbose

######################################################################
# Certificates

class Coloring:
    """A partition of the vertices of a graph into stable sets.

    Stored as one colour per vertex.  Colours are renumbered 0..k-1 in order
    of first appearance, so two colorings with the same classes compare
    equal.

    Args:
        colors: Sequence giving the colour of vertex i at position i.
    """

    __slots__ = ('colors',)

    def __init__(self, colors):
        relabel = {}
        self.colors = tuple(relabel.setdefault(c, len(relabel)) for c in colors)

    @classmethod
    def from_classes(cls, n, classes):
        colors = [None] * n
        for i, cls_ in enumerate(classes):
            for v in cls_:
                if colors[v] is not None:
                    raise InputError('vertex {} is in two colour classes'.format(v))
                colors[v] = i
        if None in colors:
            raise InputError('vertex {} has no colour'.format(colors.index(None)))
        return cls(colors)

    @property
    def count(self):
        return max(self.colors) + 1 if self.colors else 0

    @property
    def classes(self):
        """Colour classes as frozensets, indexed by colour."""
        out = [set() for _ in range(self.count)]
        for v, c in enumerate(self.colors):
            out[c].add(v)
        return [frozenset(s) for s in out]

    def check(self, g):
        """Verdict: covers exactly the vertices of g with no monochromatic edge."""
        if len(self.colors) != g.n:
            return Verdict(False, None, 'colours {} vertices of a {}-vertex graph'.format(len(self.colors), g.n))
        for u, v in g.edges():
            if self.colors[u] == self.colors[v]:
                return Verdict(False, (u, v), 'monochromatic edge')
        return Verdict(True)

    def __getitem__(self, v):
        return self.colors[v]

    def __len__(self):
        return len(self.colors)

    def __eq__(self, other):
        return isinstance(other, Coloring) and self.colors == other.colors

    def __hash__(self):
        return hash(self.colors)

    def __repr__(self):
        return 'Coloring({} colours on {} vertices)'.format(self.count, len(self.colors))

class WeightedColoring:
    """Stable sets with non-negative integer weights.

    Feasible for vertex weights w when every vertex x is covered with
    w(x) <= sum of W(S) over the sets S containing x.

    Args:
        pairs: Iterable of (stable set, weight).
    """

    __slots__ = ('classes', 'weights')

    def __init__(self, pairs=()):
        self.classes = []
        self.weights = []
        for s, wt in pairs:
            self.classes.append(frozenset(s))
            self.weights.append(wt)

    @property
    def total(self):
        return sum(self.weights)

    def __iter__(self):
        return iter(zip(self.classes, self.weights))

    def __len__(self):
        return len(self.classes)

    def coverage(self, v):
        return sum(wt for s, wt in self if v in s)

    def normalized(self):
        """Merge repeated sets, drop empty or weightless ones, sort."""
        acc = {}
        for s, wt in self:
            if s and wt:
                acc[s] = acc.get(s, 0) + wt
        return WeightedColoring(sorted(acc.items(), key=lambda kv: sorted(kv[0])))

    def check(self, g, w):
        """Verdict for stability of every set and feasibility for weights w."""
        for i, (s, wt) in enumerate(self):
            if wt < 0:
                return Verdict(False, i, 'negative weight')
            if any(v >= g.n for v in s) or not g.is_stable(mask_of(s)):
                return Verdict(False, i, 'set {} is not stable'.format(i))
        for v in range(g.n):
            if self.coverage(v) < w[v]:
                return Verdict(False, v, 'vertex {} covered {} < {}'.format(v, self.coverage(v), w[v]))
        return Verdict(True)

    def __eq__(self, other):
        return isinstance(other, WeightedColoring) and list(self) == list(other)

    def __repr__(self):
        return 'WeightedColoring({} sets, total {})'.format(len(self), self.total)

BASE_CASE = 'BaseCase'
COMPONENTS = 'Components'
CO_COMPONENTS = 'CoComponents'
HOMOGENEOUS = 'Homogeneous'
WEAKLY_CHORDAL = 'WeaklyChordal'
SENSITIVE_PEEL = 'SensitivePeel'
BOX_ORIENTATION = 'BoxOrientation'
FORCING_BRANCH = 'Forcing'

class TraceNode:
    """One step of the coloring recursion.

    Args:
        branch (str): Which case applied, one of the branch constants.
        n (int): Vertex count of the graph handled at this step.
        detail (dict): Branch-specific facts (the homogeneous set, the
            peeled vertex, the number of boxes...).
        certificate: The object that justifies the step, if any: a Coloring,
            an Orientation, a BoxPartition.
    """

    def __init__(self, branch, n, detail=None, certificate=None):
        self.branch = branch
        self.n = n
        self.detail = dict(detail or {})
        self.certificate = certificate
        self.coloring = None
        self.children = []

    @property
    def colors(self):
        """Colours used at this step (total weight for weighted colorings)."""
        if self.coloring is None:
            return None
        if isinstance(self.coloring, WeightedColoring):
            return self.coloring.total
        return self.coloring.count

    def walk(self):
        """This node and all its descendants, depth first."""
        yield self
        for child in self.children:
            yield from child.walk()

    def branches(self):
        return [node.branch for node in self.walk()]

    def __repr__(self):
        return 'TraceNode({}, n={}, {} children)'.format(self.branch, self.n, len(self.children))

def check_weights(g, w):
    """Validate per-vertex weights; returns them as a tuple of ints."""
    w = tuple(w)
    if len(w) != g.n:
        raise InputError('{} weights for {} vertices'.format(len(w), g.n))
    for v, x in enumerate(w):
        if not isinstance(x, int) or isinstance(x, bool) or x < 0:
            raise InputError('weight of vertex {} must be a non-negative integer, not {!r}'.format(v, x))
    return w

######################################################################
# Chain coloring

def heights(o):
    """Longest directed path ending at each vertex, in edges.

    Raises:
        InputError: o has a directed cycle.
    """
    order = o.topological_order()
    if order is None:
        raise InputError('orientation has a directed cycle')
    h = [0] * o.n
    for v in order:
        for w in bits(o.succ(v)):
            if h[v] + 1 > h[w]:
                h[w] = h[v] + 1
    return h

def chain_color(g, o):
    """Colour each vertex by the height of the longest chain ending at it.

    Args:
        g (Graph): A comparability graph.
        o (Orientation): An acyclic transitive orientation of g.

    Raises:
        InputError: o is not acyclic and transitive on g.
    """
    from .orientation import verify_acyclic, verify_transitive
    ok = verify_transitive(g, o)
    if not ok:
        raise InputError('orientation is not transitive: {}'.format(ok.witness))
    ok = verify_acyclic(g, o)
    if not ok:
        raise InputError('orientation has a circuit: {}'.format(ok.witness))
    coloring = Coloring(heights(o))
    _certify(g, coloring)
    return coloring

def heaviest_chain(g, o, w):
    """The maximum-weight chain of an acyclic transitive orientation.

    In a comparability graph chains are exactly the cliques, so this is a
    maximum-weight clique.

    Returns:
        (frozenset, weight)
    """
    w = check_weights(g, w)
    order = o.topological_order()
    if order is None:
        raise InputError('orientation has a directed cycle')
    best = [w[v] for v in range(g.n)]
    back = [None] * g.n
    for v in order:
        for x in bits(o.succ(v)):
            if best[v] + w[x] > best[x]:
                best[x] = best[v] + w[x]
                back[x] = v
    if not g.n:
        return frozenset(), 0
    top = max(range(g.n), key=lambda v: (best[v], -v))
    chain = []
    v = top
    while v is not None:
        chain.append(v)
        v = back[v]
    return frozenset(chain), best[top]

######################################################################
# Weakly chordal graphs

def _two_pair(g):
    """First non-adjacent pair joined only by chordless paths of length 2."""
    adj = g._adj
    for a in range(g.n):
        for b in bits(g.full & ~adj[a] >> (a+1) << (a+1)):
            if all(len(p) == 3 for p in iter_chordless_paths(g, a, b)):
                return a, b
    return None

def find_even_pair(g):
    """A non-adjacent pair whose chordless connecting paths all have even
    length, or None.

    A 2-pair (all paths of length exactly 2) is preferred when one exists,
    since contracting one keeps a weakly chordal graph weakly chordal.
    """
    pair = _two_pair(g)
    if pair is not None:
        return pair
    adj = g._adj
    for a in range(g.n):
        for b in bits(g.full & ~adj[a] >> (a+1) << (a+1)):
            if all(len(p) % 2 for p in iter_chordless_paths(g, a, b)):
                return a, b
    return None

def contract(g, a, b):
    """Merge non-adjacent a and b into a; b's id is dropped.

    Returns:
        (Graph, dict) with the dict mapping old ids to new ones; both a and
        b map to the merged vertex.
    """
    keep = [v for v in range(g.n) if v != b]
    mapping = {old: new for new, old in enumerate(keep)}
    mapping[b] = mapping[a]
    adj = g._adj
    masks = []
    for old in keep:
        nbrs = adj[old]
        if old == a:
            nbrs |= adj[b]
        m = 0
        for x in bits(nbrs & ~(1 << b)):
            m |= 1 << mapping[x]
        if nbrs >> b & 1:
            m |= 1 << mapping[a]
        masks.append(m)
    return Graph.from_masks(masks), mapping

def color_weakly_chordal(g):
    """Optimally colour a weakly chordal graph by contracting 2-pairs until
    a clique is left.

    Raises:
        InternalError: a non-clique was left without an even pair.
    """
    current = g
    # lift[v] is the vertex of current that v of g has been merged into
    lift = list(range(g.n))
    while not current.is_clique():
        pair = find_even_pair(current)
        if pair is None:
            raise InternalError('weakly chordal graph {!r} has no even pair'.format(current))
        current, mapping = contract(current, *pair)
        lift = [mapping[x] for x in lift]
    coloring = Coloring(lift)
    _certify(g, coloring)
    return coloring

######################################################################
# Weights by replication

def replicate(g, w):
    """Blow every vertex x up into a clique of w(x) true twins.

    Returns:
        (Graph, list) where the list gives, for each copy, its original
        vertex.  Vertices of weight 0 disappear.

    Raises:
        Refusal: the blown-up graph would exceed ProgramGlobals['replication_cap'].
    """
    w = check_weights(g, w)
    size = sum(w)
    if size > ProgramGlobals['replication_cap']:
        raise Refusal('replicating to {} vertices exceeds the cap of {}'.format(
            size, ProgramGlobals['replication_cap']))
    origin = [v for v in range(g.n) for _ in range(w[v])]
    edges = [
        (i, j) for i in range(size) for j in range(i+1, size)
        if origin[i] == origin[j] or g.has_edge(origin[i], origin[j])
    ]
    saved = ProgramGlobals['vertex_cap']
    try:
        ProgramGlobals['vertex_cap'] = max(saved, size)
        blown = Graph(size, edges)
    finally:
        ProgramGlobals['vertex_cap'] = saved
    return blown, origin

def regroup(coloring, origin):
    """Turn a coloring of a replicated graph into weighted stable sets of the
    original: each colour class becomes one set of weight 1."""
    return WeightedColoring(
        (frozenset(origin[i] for i in cls_), 1) for cls_ in coloring.classes
    ).normalized()

######################################################################

def _certify(g, coloring):
    ok = coloring.check(g)
    if not ok:
        raise InternalError('improper coloring produced: {} {}'.format(ok.reason, ok.witness))
    printverbose('coloring certified: {} colours on {} vertices'.format(coloring.count, g.n))
