"""Detection of the induced configurations the coloring algorithm reasons about.

Everything here is an exhaustive search over a graph small enough to make
that reasonable.  Holes are found two ways:

* by extending a P3 a-b-c: delete b, the other neighbours of b, and the
  common neighbours of a and c, then take a shortest a-c path.  Together with
  b that path closes the shortest hole through a-b-c, and every hole passes
  through some P3, so a scan over all P3s finds a hole whenever there is one.
* by enumeration: every hole is produced exactly once from its smallest
  vertex b, its two hole-neighbours a < c, and a chordless a-c path through
  vertices larger than b that avoids the rest of N(b).  This is what the odd
  hole test and the wheel search use.

Antiholes are holes of the complement; a C5 is both.
"""

from collections import namedtuple

from .errors import InputError, ClassViolation
from .graph import (
    Verdict, bits, mask_of, complement, induced_subgraph,
    _bfs_path, _chordless, is_induced_cycle
)

######################################################################
# Bulls

class Bull(namedtuple('Bull', 'r y x z s')):
    """An induced bull r-yxz-s: triangle y, x, z with horn r on y and s on z."""

    __slots__ = ()

    @property
    def labeled(self):
        """The bull as u1..u5 in the order u1-u2u5u3-u4."""
        return (self.r, self.y, self.z, self.s, self.x)

    def check(self, g):
        return is_bull(g, *self)

def is_bull(g, r, y, x, z, s):
    """The ten adjacency predicates of an induced bull r-yxz-s."""
    if len({r, y, x, z, s}) != 5:
        return False
    e = g.has_edge
    return (e(r, y) and e(y, x) and e(y, z) and e(x, z) and e(z, s) and
        not (e(r, x) or e(r, z) or e(r, s) or e(y, s) or e(x, s)))

def iter_bulls(g):
    """Generate every induced bull once, with y < z."""
    adj = g._adj
    for y in range(g.n):
        for z in bits(adj[y] >> (y+1) << (y+1)):
            for x in bits(adj[y] & adj[z]):
                horns_r = adj[y] & ~adj[x] & ~adj[z] & ~(1 << z | 1 << x)
                horns_s = adj[z] & ~adj[x] & ~adj[y] & ~(1 << y | 1 << x)
                for r in bits(horns_r):
                    for s in bits(horns_s & ~adj[r]):
                        yield Bull(r, y, x, z, s)

def enumerate_bulls(g):
    """List every induced bull of g exactly once."""
    return list(iter_bulls(g))

def is_bull_reducible(g):
    """Check that no vertex lies in two distinct bulls.

    Returns:
        Verdict whose witness on failure is the smallest vertex lying in two
        bulls, and whose reason carries those two bulls.
    """
    owner = {}
    clash = None
    for bull in iter_bulls(g):
        for v in bull:
            if v in owner:
                if clash is None or v < clash[0]:
                    clash = (v, owner[v], bull)
            else:
                owner[v] = bull
    if clash is None:
        return Verdict(True)
    return Verdict(False, clash[0], clash[1:])

######################################################################
# Holes

class Hole:
    """A chordless cycle of length at least 5, as its vertex sequence."""

    __slots__ = ('cycle',)

    def __init__(self, cycle):
        self.cycle = tuple(cycle)

    def __len__(self):
        return len(self.cycle)

    def __iter__(self):
        return iter(self.cycle)

    def __getitem__(self, i):
        return self.cycle[i % len(self.cycle)]

    @property
    def mask(self):
        return mask_of(self.cycle)

    @property
    def vertices(self):
        return frozenset(self.cycle)

    def canonical(self):
        """The same hole rotated to start at its least vertex, heading
        towards the smaller of that vertex's two hole neighbours."""
        c = self.cycle
        i = c.index(min(c))
        rot = c[i:] + c[:i]
        if rot[-1] < rot[1]:
            rot = rot[:1] + tuple(reversed(rot[1:]))
        return Hole(rot)

    def check(self, g):
        return len(self.cycle) >= 5 and is_induced_cycle(g, self.cycle)

    def __eq__(self, other):
        return isinstance(other, Hole) and self.canonical().cycle == other.canonical().cycle

    def __hash__(self):
        return hash(self.canonical().cycle)

    def __repr__(self):
        return 'Hole({})'.format(' '.join(str(v) for v in self.cycle))

def iter_p3(g):
    """Generate every induced P3 a-b-c once, as (a, b, c) with a < c."""
    adj = g._adj
    for b in range(g.n):
        nb = adj[b]
        for a in bits(nb):
            for c in bits(nb & ~adj[a] >> (a+1) << (a+1)):
                yield a, b, c

def _hole_through(adj, allowed, a, b, c):
    removed = (adj[a] & adj[c]) | (adj[b] & ~(1 << a | 1 << c)) | 1 << b
    path = _bfs_path(adj, a, c, allowed & ~removed)
    if path is None:
        return None
    return Hole((a, b, c) + tuple(path[-2:0:-1]))

def hole_through_p3(g, a, b, c):
    """Shortest hole containing a-b-c as consecutive vertices.

    Raises:
        InputError: a-b-c is not an induced P3.

    Returns:
        Hole starting a, b, c, or None.
    """
    for v in (a, b, c):
        g.check_vertex(v)
    if (len({a, b, c}) < 3 or not g.has_edge(a, b) or not g.has_edge(b, c)
        or g.has_edge(a, c)):
        raise InputError('{}-{}-{} is not an induced P3'.format(a, b, c))
    return _hole_through(g._adj, g.full, a, b, c)

def find_hole(g):
    """Any hole of g, found by the P3 scan, or None."""
    adj = g._adj
    for a, b, c in iter_p3(g):
        h = _hole_through(adj, g.full, a, b, c)
        if h is not None:
            return h
    return None

def iter_holes(g, min_len=5):
    """Generate every hole of g exactly once, each starting at its least
    vertex and heading to the smaller neighbour."""
    adj = g._adj
    n = g.n
    for b in range(n):
        higher = g.full >> (b+1) << (b+1)
        nb = adj[b] & higher
        for a in bits(nb):
            for c in bits(nb & ~adj[a] >> (a+1) << (a+1)):
                allowed = higher & ~(adj[b] & ~(1 << a | 1 << c))
                for path in _chordless(adj, a, c, n, allowed):
                    if len(path) + 1 >= min_len:
                        yield Hole([b] + path)

def find_odd_hole(g):
    for h in iter_holes(g):
        if len(h) % 2:
            return h
    return None

def has_odd_hole(g):
    return find_odd_hole(g) is not None

def find_antihole(g):
    """An antihole of g, returned as a Hole of the complement, or None."""
    return find_hole(complement(g))

def find_shortest_even_hole(g):
    """An even hole of minimum length, or None.

    The shortest hole through each P3 is computed.  When none of those is
    odd, the minimum among the even ones is the answer.  An odd one can hide
    a longer even hole through the same P3, so in that case fall back to
    full enumeration.
    """
    adj = g._adj
    best = None
    odd_seen = False
    for a, b, c in iter_p3(g):
        h = _hole_through(adj, g.full, a, b, c)
        if h is None:
            continue
        if len(h) % 2:
            odd_seen = True
        elif best is None or len(h) < len(best):
            best = h

    if odd_seen:
        best = None
        for h in iter_holes(g):
            if len(h) % 2 == 0 and (best is None or len(h) < len(best)):
                best = h
    return best.canonical() if best is not None else None

def is_weakly_chordal(g):
    """Verdict for 'no hole and no antihole'; the witness is the offending
    Hole (of the complement, for reason 'antihole')."""
    h = find_hole(g)
    if h is not None:
        return Verdict(False, h.canonical(), 'hole')
    h = find_antihole(g)
    if h is not None:
        return Verdict(False, h.canonical(), 'antihole')
    return Verdict(True)

######################################################################
# Wheels, brooms, locks and spiked graphs

WHEEL = 'wheel'
DOUBLE_BROOM = 'double-broom'
LOCK = 'lock'
SPIKED_F1 = 'spiked-f1'
SPIKED_F2 = 'spiked-f2'

#: Structures whose absence, on top of class membership, defines class B.
EXCLUDED_STRUCTURES = (WHEEL, DOUBLE_BROOM, SPIKED_F1, SPIKED_F2)

# u1-u2u5u3-u4 and the lock, both 0-indexed.
_BULL_EDGES = ((0, 1), (1, 4), (1, 2), (4, 2), (2, 3))
_LOCK_EDGES = ((0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2), (4, 3), (0, 5), (1, 5))

def pattern_edges(kind, size):
    """Edge set, on tuple positions, of a structure with size vertices."""
    if kind == WHEEL:
        k = size - 1
        edges = {(i, (i+1) % k) for i in range(k)} | {(i, k) for i in range(k)}
    elif kind == DOUBLE_BROOM:
        edges = {(0, 1), (1, 2), (2, 3), (4, 6), (5, 7)}
        edges |= {(i, a) for i in range(4) for a in (4, 5)}
    elif kind == LOCK:
        edges = set(_LOCK_EDGES)
    elif kind in (SPIKED_F1, SPIKED_F2):
        base = _BULL_EDGES if kind == SPIKED_F1 else _LOCK_EDGES
        k = size - 2
        edges = set(base) | {(i, k) for i in range(k)} | {(k, k+1)}
    else:
        raise InputError('unknown structure {!r}'.format(kind))
    return {(min(e), max(e)) for e in edges}

class StructureWitness:
    """An induced occurrence of a named structure.

    vertices lists, in order:

    * wheel: the hole, then the centre.
    * double-broom: p1..p4, a, a', b, b'.
    * lock: u1..u6.
    * spiked-f1 / spiked-f2: the core labeled u1..uk, then a, then b.
    """

    __slots__ = ('kind', 'vertices')

    def __init__(self, kind, vertices):
        self.kind = kind
        self.vertices = tuple(vertices)

    @property
    def core(self):
        """For spiked structures, the F_j copy W."""
        return self.vertices[:-2]

    @property
    def spike(self):
        """For spiked structures, the pair (a, b)."""
        return self.vertices[-2:]

    def check(self, g):
        vs = self.vertices
        if len(set(vs)) != len(vs):
            return False
        edges = pattern_edges(self.kind, len(vs))
        return all(
            g.has_edge(vs[i], vs[j]) == ((i, j) in edges)
            for i in range(len(vs)) for j in range(i+1, len(vs))
        )

    def __eq__(self, other):
        return (isinstance(other, StructureWitness) and
            (self.kind, self.vertices) == (other.kind, other.vertices))

    def __hash__(self):
        return hash((self.kind, self.vertices))

    def __repr__(self):
        return 'StructureWitness({}, {})'.format(self.kind, self.vertices)

def _find_wheel(g):
    for v in range(g.n):
        sub, mapping = induced_subgraph(g, bits(g._adj[v]))
        inverse = sorted(mapping)
        for h in iter_holes(sub, 6):
            if len(h) % 2 == 0:
                return StructureWitness(WHEEL, tuple(inverse[i] for i in h) + (v,))
    return None

def _induced_p4s(adj, mask):
    for p2 in bits(mask):
        for p3 in bits(adj[p2] & mask):
            for p1 in bits(adj[p2] & mask & ~adj[p3] & ~(1 << p3)):
                for p4 in bits(adj[p3] & mask & ~adj[p2] & ~adj[p1] & ~(1 << p2)):
                    if p1 < p4:
                        yield (p1, p2, p3, p4)

def _find_double_broom(g):
    adj = g._adj
    for a in range(g.n):
        for a2 in bits(g.full & ~adj[a] >> (a+1) << (a+1)):
            common = adj[a] & adj[a2]
            horns = adj[a] & ~adj[a2] & ~(1 << a2)
            horns2 = adj[a2] & ~adj[a] & ~(1 << a)
            if not (horns and horns2):
                continue
            for p in _induced_p4s(adj, common):
                touched = adj[p[0]] | adj[p[1]] | adj[p[2]] | adj[p[3]]
                for b in bits(horns & ~touched):
                    for b2 in bits(horns2 & ~touched & ~adj[b]):
                        return StructureWitness(DOUBLE_BROOM, p + (a, a2, b, b2))
    return None

def iter_locks(g):
    """Generate labeled locks (u1, ..., u6): u1u2u3u4 a C4, u5 complete to
    it, u6 adjacent to exactly u1 and u2."""
    adj = g._adj
    for u5 in range(g.n):
        n5 = adj[u5]
        for u1 in bits(n5):
            for u2 in bits(adj[u1] & n5):
                for u3 in bits(adj[u2] & n5 & ~adj[u1] & ~(1 << u1)):
                    for u4 in bits(adj[u3] & adj[u1] & n5 & ~adj[u2] & ~(1 << u2)):
                        tips = adj[u1] & adj[u2] & ~adj[u3] & ~adj[u4] & ~n5 & ~(1 << u5)
                        for u6 in bits(tips):
                            yield (u1, u2, u3, u4, u5, u6)

def _find_spiked(g, cores, kind):
    adj = g._adj
    for w in cores:
        wm = mask_of(w)
        seen_all = g.full & ~wm
        touched = 0
        for u in w:
            seen_all &= adj[u]
            touched |= adj[u]
        for a in bits(seen_all):
            for b in bits(adj[a] & ~wm & ~touched):
                return StructureWitness(kind, tuple(w) + (a, b))
    return None

def detect_structure(g, kind):
    """Find an induced wheel, double broom, lock, spiked F1 or spiked F2.

    Args:
        g (Graph): The graph.
        kind (str): One of WHEEL, DOUBLE_BROOM, LOCK, SPIKED_F1, SPIKED_F2.

    Returns:
        StructureWitness or None.
    """
    if kind == WHEEL:
        return _find_wheel(g)
    elif kind == DOUBLE_BROOM:
        return _find_double_broom(g)
    elif kind == LOCK:
        lock = next(iter_locks(g), None)
        return StructureWitness(LOCK, lock) if lock else None
    elif kind == SPIKED_F1:
        return _find_spiked(g, (b.labeled for b in iter_bulls(g)), kind)
    elif kind == SPIKED_F2:
        return _find_spiked(g, iter_locks(g), kind)
    raise InputError('unknown structure {!r}'.format(kind))

######################################################################
# Class membership

def is_class_member(g, strict=False):
    """Check membership in the bull-reducible Berge antihole-free class.

    Conditions are checked in order: bull-reducibility, no odd hole, no
    antihole; with strict, additionally no wheel, no double broom, no spiked
    F1 and no spiked F2 (the subclass B).

    Returns:
        Verdict whose reason names the first violated condition ('bull',
        'odd hole', 'antihole' or a structure name) and whose witness
        demonstrates it.
    """
    reducible = is_bull_reducible(g)
    if not reducible:
        return Verdict(False, reducible.witness, 'bull')
    h = find_odd_hole(g)
    if h is not None:
        return Verdict(False, h, 'odd hole')
    h = find_antihole(g)
    if h is not None:
        return Verdict(False, h.canonical(), 'antihole')
    if strict:
        for kind in EXCLUDED_STRUCTURES:
            sw = detect_structure(g, kind)
            if sw is not None:
                return Verdict(False, sw, kind)
    return Verdict(True)

######################################################################
# Sensitive vertices

SensitiveWitness = namedtuple('SensitiveWitness', 'x u closed hole')
SensitiveWitness.__doc__ = """A sensitive vertex x with its P6 or C6 u1..u6.

closed is True when u1u6 is an edge; hole is a hole of g - x, in g's ids.
"""

def _sensitive_sequences(g, x):
    adj = g._adj
    nbr = adj[x]
    off = g.full & ~nbr & ~(1 << x)
    for u2 in bits(nbr):
        for u3 in bits(adj[u2] & nbr):
            for u1 in bits(adj[u2] & off & ~adj[u3]):
                for u4 in bits(adj[u3] & off & ~adj[u2] & ~adj[u1]):
                    for u5 in bits(adj[u4] & off & ~adj[u1] & ~adj[u2] & ~adj[u3]):
                        for u6 in bits(adj[u5] & off & ~adj[u2] & ~adj[u3] & ~adj[u4]):
                            yield (u1, u2, u3, u4, u5, u6)

def find_sensitive_vertex(g):
    """The smallest sensitive vertex of g with its witness, or None.

    x is sensitive when it is adjacent to u2 and u3 and to no other u_i of
    an induced P6 or C6 u1..u6, and g - x still has a hole.
    """
    holes = {}
    for x in range(g.n):
        for u in _sensitive_sequences(g, x):
            if x not in holes:
                sub, mapping = induced_subgraph(g, (v for v in range(g.n) if v != x))
                h = find_hole(sub)
                if h is not None:
                    inverse = sorted(mapping)
                    h = Hole(inverse[v] for v in h)
                holes[x] = h
            if holes[x] is None:
                break
            return SensitiveWitness(x, u, g.has_edge(u[0], u[5]), holes[x])
    return None

######################################################################
# Vertices against a shortest even hole

FULL_WHEEL = 'full-wheel'
ALL_ONE_PARITY = 'all-one-parity'
CONSECUTIVE_RUN = 'consecutive-run'
TWO_AT_DISTANCE_2 = 'two-at-distance-2'
FOUR_THREE_CONSECUTIVE = 'four-three-consecutive'
NO_NEIGHBOR = 'no-neighbor'

class HoleClassification(namedtuple('HoleClassification', 'variant run')):
    """How a vertex attaches to a shortest even hole.

    run is the run length (1, 2 or 3) for CONSECUTIVE_RUN, otherwise None.
    """

    __slots__ = ()

    @property
    def extension(self):
        """True for NO_NEIGHBOR, which lies outside the classical case list."""
        return self.variant == NO_NEIGHBOR

    def __str__(self):
        if self.run:
            return '{}({})'.format(self.variant, self.run)
        return self.variant

class NoMatch(ClassViolation):
    """A vertex attaches to a shortest even hole in none of the known ways."""

def _cyclic_run(pos, length):
    k = len(pos)
    return any(
        all((i + d) % length in pos for d in range(k)) for i in pos
    )

def classify_vertex_vs_hole(g, c, v):
    """Classify the neighbours of v on the even hole c.

    Args:
        g (Graph): A class member.
        c (Hole): A shortest even hole of length >= 6.
        v (int): A vertex off c.

    Raises:
        InputError: c is not an even hole of length >= 6, or v lies on it.
        NoMatch: the attachment fits no variant, so g breaks the
            hypotheses this classification relies on.
    """
    g.check_vertex(v)
    length = len(c)
    if length < 6 or length % 2:
        raise InputError('{!r} is not an even hole of length at least 6'.format(c))
    if v in c.cycle:
        raise InputError('vertex {} lies on {!r}'.format(v, c))
    pos = frozenset(i for i, u in enumerate(c) if g.has_edge(u, v))
    k = len(pos)

    if k == 0:
        return HoleClassification(NO_NEIGHBOR, None)
    if k == length:
        return HoleClassification(FULL_WHEEL, None)
    if k == length // 2 and len({i % 2 for i in pos}) == 1:
        return HoleClassification(ALL_ONE_PARITY, None)
    if k <= 3 and _cyclic_run(pos, length):
        return HoleClassification(CONSECUTIVE_RUN, k)
    if k == 2:
        i, j = sorted(pos)
        if min(j - i, length - (j - i)) == 2:
            return HoleClassification(TWO_AT_DISTANCE_2, None)
    if length == 6 and k == 4:
        i, j = sorted(set(range(6)) - pos)
        if min(j - i, 6 - (j - i)) == 2:
            return HoleClassification(FOUR_THREE_CONSECUTIVE, None)
    raise NoMatch('vertex versus hole', (v,) + c.cycle,
        'neighbours at hole positions {}'.format(sorted(pos)))
