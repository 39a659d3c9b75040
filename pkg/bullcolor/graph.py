"""Undirected simple graphs with bitset adjacency.

Vertices are the dense integers 0..n-1.  Each neighbourhood is held as a
Python int used as a bitset, so that the set algebra every recognition
routine leans on (common neighbours, partial vertices, closures) comes down
to a handful of integer operations.  Graphs are immutable once built.

Vertex sets cross the public API as frozensets of ints.  Internally most
routines work on masks and convert at the boundary with :func:`mask_of` and
:func:`bits`.
"""

import networkx as nx

from .errors import InputError
from .util import ProgramGlobals, MAX_VERTEX_CAP

######################################################################
# Bitset helpers

def bits(mask):
    """Yield the members of a bitset in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low

def mask_of(vertices):
    """Bitset of an iterable of vertex ids."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m

def popcount(mask):
    return bin(mask).count('1')

def lowest(mask):
    """Smallest member of a non-empty bitset."""
    return (mask & -mask).bit_length() - 1

def members(mask):
    return frozenset(bits(mask))

######################################################################
# Check results

class Verdict:
    """Outcome of a check.

    Truthy iff the check passed.  For failures, witness is whatever
    demonstrates the failure and reason names the failed condition.
    Unpacks as (ok, witness).
    """

    __slots__ = ('ok', 'witness', 'reason')

    def __init__(self, ok, witness=None, reason=None):
        self.ok = bool(ok)
        self.witness = witness
        self.reason = reason

    def __bool__(self):
        return self.ok

    def __iter__(self):
        return iter((self.ok, self.witness))

    def __repr__(self):
        if self.ok:
            return 'Verdict(True)'
        return 'Verdict(False, witness={!r}, reason={!r})'.format(self.witness, self.reason)

######################################################################
# The graph itself

class Graph:
    """An undirected simple graph on vertices 0..n-1.

    Args:
        n (int): Number of vertices.
        edges: Iterable of (u, v) pairs.  Repeats are harmless.

    Raises:
        InputError: Self-loop, vertex out of range, or n beyond
            ProgramGlobals['vertex_cap'].
    """

    __slots__ = ('n', '_adj')

    def __init__(self, n, edges=()):
        _checksize(n)
        adj = [0] * n
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise InputError('edge ({}, {}) out of range for {} vertices'.format(u, v, n))
            if u == v:
                raise InputError('self-loop at vertex {}'.format(u))
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self._adj = tuple(adj)

    @classmethod
    def from_masks(cls, masks):
        """Build a graph directly from symmetric neighbour bitsets."""
        _checksize(len(masks))
        g = cls.__new__(cls)
        g.n = len(masks)
        g._adj = tuple(masks)
        return g

    # Basic queries.
    @property
    def vertices(self):
        return range(self.n)

    @property
    def full(self):
        """Bitset of every vertex."""
        return (1 << self.n) - 1

    @property
    def m(self):
        return sum(popcount(a) for a in self._adj) // 2

    def adj(self, v):
        """Neighbourhood of v as a bitset."""
        return self._adj[v]

    def neighbors(self, v):
        return list(bits(self._adj[v]))

    def degree(self, v):
        return popcount(self._adj[v])

    def has_edge(self, u, v):
        return bool(self._adj[u] >> v & 1)

    def edges(self):
        """All edges as (u, v) with u < v, in ascending order."""
        return [(u, v) for u in range(self.n) for v in bits(self._adj[u] >> (u+1) << (u+1))]

    def check_vertex(self, v):
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise InputError('vertex {!r} out of range 0..{}'.format(v, self.n - 1))

    def mask(self, vertices):
        """Bitset of a vertex collection, validated against this graph."""
        m = 0
        for v in vertices:
            self.check_vertex(v)
            m |= 1 << v
        return m

    def is_clique(self, mask=None):
        if mask is None:
            mask = self.full
        return all((self._adj[v] | 1 << v) & mask == mask for v in bits(mask))

    def is_stable(self, mask):
        return not any(self._adj[v] & mask for v in bits(mask))

    def to_networkx(self):
        """Copy into a networkx.Graph with the same vertex ids."""
        G = nx.Graph()
        G.add_nodes_from(range(self.n))
        G.add_edges_from(self.edges())
        return G

    def __len__(self):
        return self.n

    def __eq__(self, other):
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self):
        return hash(self._adj)

    def __repr__(self):
        return 'Graph(n={}, m={})'.format(self.n, self.m)

def _checksize(n):
    if not isinstance(n, int) or n < 0:
        raise InputError('vertex count must be a non-negative integer, not {!r}'.format(n))
    cap = min(ProgramGlobals['vertex_cap'], MAX_VERTEX_CAP)
    if n > cap:
        raise InputError('{} vertices exceeds the vertex cap of {}'.format(n, cap))

######################################################################
# Derived graphs

def induced_subgraph(g, s):
    """The subgraph induced by s, renumbered densely.

    Args:
        g (Graph): Ambient graph.
        s: Iterable of vertices of g.

    Returns:
        (Graph, dict) where the dict maps old ids to new ids.  New ids follow
        the ascending order of the old ones.
    """
    smask = g.mask(s)
    order = list(bits(smask))
    mapping = {old: new for new, old in enumerate(order)}
    masks = []
    for old in order:
        m = 0
        for w in bits(g._adj[old] & smask):
            m |= 1 << mapping[w]
        masks.append(m)
    return Graph.from_masks(masks), mapping

def complement(g):
    full = g.full
    return Graph.from_masks([full & ~a & ~(1 << v) for v, a in enumerate(g._adj)])

def partial_mask(g, mask):
    """Vertices outside mask with both a neighbour and a non-neighbour in it."""
    out = 0
    for v in bits(g.full & ~mask):
        seen = g._adj[v] & mask
        if seen and seen != mask:
            out |= 1 << v
    return out

######################################################################
# Connectivity

def reach(g, start, within):
    """Vertices reachable from the bitset start using only vertices of within.

    start itself is included whether or not it lies in within.
    """
    seen = frontier = start
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g._adj[v]
        frontier = nxt & within & ~seen
        seen |= frontier
    return seen

def component_masks(g, mask):
    """Connected components of g[mask] as bitsets, ordered by least vertex."""
    comps = []
    rest = mask
    while rest:
        c = reach(g, rest & -rest, mask)
        comps.append(c)
        rest &= ~c
    return comps

def connected_components(g, s=None):
    """Partition s (default: all vertices) into the components of g[s].

    Returns:
        List of frozensets, ordered by their smallest member.
    """
    mask = g.full if s is None else g.mask(s)
    return [members(c) for c in component_masks(g, mask)]

def is_connected(g, mask=None):
    if mask is None:
        mask = g.full
    if not mask:
        return True
    return reach(g, mask & -mask, mask) == mask

######################################################################
# Paths

def _bfs_path(adj, a, b, allowed):
    parent = {a: None}
    seen = 1 << a
    frontier = [a]
    while frontier:
        nxt = []
        for u in frontier:
            for w in bits(adj[u] & allowed & ~seen):
                seen |= 1 << w
                parent[w] = u
                if w == b:
                    path = [b]
                    while parent[path[-1]] is not None:
                        path.append(parent[path[-1]])
                    path.reverse()
                    return path
                nxt.append(w)
        frontier = nxt
    return None

def shortest_path(g, a, b, within=None):
    """A shortest a-b path through vertices of within, or None.

    The path is returned as a vertex list from a to b.  Ties are broken
    towards smaller ids, so the answer is deterministic.  A shortest path is
    always chordless.
    """
    g.check_vertex(a)
    g.check_vertex(b)
    if a == b:
        return [a]
    allowed = g.full if within is None else g.mask(within)
    return _bfs_path(g._adj, a, b, allowed | 1 << b)

def _chordless(adj, a, b, max_len, allowed):
    # Each stack entry is (path, on-path mask, closed neighbourhoods of all
    # path vertices but the last).  Nothing in that last mask may follow.
    bbit = 1 << b
    stack = [([a], 1 << a, 0)]
    while stack:
        path, onpath, blocked = stack.pop()
        if len(path) > max_len:
            continue
        u = path[-1]
        cand = adj[u] & allowed & ~blocked & ~onpath
        if cand & bbit:
            yield path + [b]
            continue
        nb = blocked | adj[u] | 1 << u
        if nb & bbit:
            continue
        for w in reversed(list(bits(cand))):
            stack.append((path + [w], onpath | 1 << w, nb))

def iter_chordless_paths(g, a, b, max_len=None, within=None):
    """Generate the chordless a-b paths of g, shortest-first within each branch.

    Args:
        g (Graph): The graph.
        a, b (int): Distinct endpoints.
        max_len (int): Longest path length (in edges) to report; default n-1.
        within: Optional vertex collection the interior must lie in.

    Raises:
        InputError: a == b or a vertex is out of range.
    """
    g.check_vertex(a)
    g.check_vertex(b)
    if a == b:
        raise InputError('chordless path endpoints must differ')
    if max_len is None:
        max_len = g.n - 1
    allowed = g.full if within is None else g.mask(within)
    return _chordless(g._adj, a, b, max_len, allowed | 1 << b)

def chordless_paths(g, a, b, max_len=None):
    """Every chordless path from a to b of length at most max_len."""
    return list(iter_chordless_paths(g, a, b, max_len))

def is_induced_path(g, seq):
    """True iff seq (distinct vertices) induces exactly the path it lists."""
    if len(set(seq)) != len(seq):
        return False
    for i, u in enumerate(seq):
        for j in range(i+1, len(seq)):
            if g.has_edge(u, seq[j]) != (j == i + 1):
                return False
    return True

def is_induced_cycle(g, seq):
    """True iff seq (distinct vertices, length >= 4) induces a chordless cycle."""
    k = len(seq)
    if k < 4 or len(set(seq)) != k:
        return False
    for i in range(k):
        for j in range(i+1, k):
            consecutive = (j == i + 1) or (i == 0 and j == k - 1)
            if g.has_edge(seq[i], seq[j]) != consecutive:
                return False
    return True

__all__ = [
    'Graph', 'Verdict',
    'bits', 'mask_of', 'members', 'popcount', 'lowest',
    'induced_subgraph', 'complement', 'partial_mask',
    'reach', 'component_masks', 'connected_components', 'is_connected',
    'shortest_path', 'iter_chordless_paths', 'chordless_paths',
    'is_induced_path', 'is_induced_cycle',
]
