"""Box partitions around a shortest even hole.

The construction starts from a shortest even hole v1..vl (l >= 6), blows
each hole vertex up into a maximal set V_i, attaches the vertices that see
one whole side of the hole (A1*, A2*) or nearly all of one V_i (X_i), and
hangs the rest of the graph from C1* = odd D_i + A1* in breadth-first
levels.  Boxes are the components of the levels; boxes on odd levels are
odd and boxes on even levels are even.

Hole positions are 1-based throughout this module, as in V_1..V_l.
"""

from collections import namedtuple

from .errors import ClassViolation, InputError
from .graph import (
    bits, mask_of, members, lowest, popcount, partial_mask, component_masks,
    is_connected
)
from .recognition import find_shortest_even_hole
from .util import printverbose

ODD = 'odd'
EVEN = 'even'
CENTRAL = 'central'
PERIPHERAL = 'peripheral'

def partial_vertices(g, b):
    """Vertices outside b with a neighbour and a non-neighbour in b."""
    return members(partial_mask(g, g.mask(b)))

######################################################################
# The skeleton

class HoleSkeleton:
    """The sets built around a shortest even hole.

    All sets are held as bitsets; the *_sets properties give frozensets.
    v[i-1], x[i-1] and d[i-1] are V_i, X_i and D_i.

    Args:
        hole (Hole): The hole the skeleton grew from.
        v, x (list): Bitsets of V_1..V_l and X_1..X_l.
        a1, a2, z (int): Bitsets of A1*, A2* and Z.
        z1, z2 (int): Z1* (neighbours in C2*) and Z2* (neighbours in C1*).
    """

    def __init__(self, hole, v, x, a1, a2, z, z1, z2):
        self.hole = hole
        self.ell = len(hole)
        self.v = list(v)
        self.x = list(x)
        self.d = [vi | xi for vi, xi in zip(self.v, self.x)]
        self.a1 = a1
        self.a2 = a2
        self.z = z
        self.z1 = z1
        self.z2 = z2

    def V(self, i):
        """Bitset of V_i, i taken cyclically."""
        return self.v[(i - 1) % self.ell]

    def _side(self, sets, parity):
        m = 0
        for i in range(parity, self.ell + 1, 2):
            m |= sets[i - 1]
        return m

    @property
    def v1(self):
        return self._side(self.v, 1)

    @property
    def v2(self):
        return self._side(self.v, 2)

    @property
    def c1(self):
        return self._side(self.d, 1) | self.a1

    @property
    def c2(self):
        return self._side(self.d, 2) | self.a2

    @property
    def v_sets(self):
        return [members(m) for m in self.v]

    @property
    def x_sets(self):
        return [members(m) for m in self.x]

    @property
    def d_sets(self):
        return [members(m) for m in self.d]

    a1_star = property(lambda self: members(self.a1))
    a2_star = property(lambda self: members(self.a2))
    z_set = property(lambda self: members(self.z))
    z1_star = property(lambda self: members(self.z1))
    z2_star = property(lambda self: members(self.z2))

    def violations(self, g):
        """Re-derive every structural fact the skeleton should satisfy.

        Returns:
            List of (claim, witness) pairs; empty when all hold.
        """
        adj = g._adj
        ell = self.ell
        out = []

        parts = self.d + [self.a1, self.a2, self.z]
        covered = 0
        for part in parts:
            if part & covered:
                out.append(('skeleton partition', members(part & covered)))
            covered |= part
        if covered != g.full:
            out.append(('skeleton partition', members(g.full & ~covered)))

        for i in range(1, ell + 1):
            for u in bits(self.V(i)):
                want = self.V(i - 1) | self.V(i + 1)
                if adj[u] & want != want:
                    out.append(('V pattern', (u, lowest(want & ~adj[u]))))
                far = 0
                for j in range(i + 2, i + ell - 1):
                    far |= self.V(j)
                if adj[u] & far:
                    out.append(('V pattern', (u, lowest(adj[u] & far))))

        if any(self.x) and ell != 6:
            out.append(('X needs a 6-hole', members(self._side(self.x, 1) | self._side(self.x, 2))))

        for i in range(ell):
            for j in range(i + 2, ell, 2):
                for u in bits(self.d[i]):
                    if adj[u] & self.d[j]:
                        out.append(('D same parity edge', (u, lowest(adj[u] & self.d[j]))))

        d1, d2 = self._side(self.d, 1), self._side(self.d, 2)
        for a, d in ((self.a1, d1), (self.a2, d2)):
            for u in bits(a):
                if adj[u] & d:
                    out.append(('A-D edge', (u, lowest(adj[u] & d))))

        v1, v2, c1, c2 = self.v1, self.v2, self.c1, self.c2
        for u in bits(self.z):
            if adj[u] & v1 and adj[u] & v2:
                out.append(('Z sees both sides of V', (u,)))
            full = [i for i in range(1, ell + 1) if adj[u] & self.V(i) == self.V(i)]
            if len(full) > 1:
                out.append(('Z complete to one V_i', (u,) + tuple(full)))
            if adj[u] & c1 and adj[u] & c2:
                out.append(('Z sees both sides of C', (u, lowest(adj[u] & c1), lowest(adj[u] & c2))))
        return out

    def __repr__(self):
        return 'HoleSkeleton(ell={}, |V*|={}, |A*|={}, |X|={}, |Z|={})'.format(
            self.ell, popcount(self.v1 | self.v2), popcount(self.a1 | self.a2),
            popcount(self._side(self.x, 1) | self._side(self.x, 2)), popcount(self.z))

def _fits(adj, v, sets, i, ell):
    """Does v fit the adjacency pattern of V_i against the current sets?"""
    prev, nxt = sets[(i - 2) % ell], sets[i % ell]
    want = prev | nxt
    if adj[v] & want != want:
        return False
    for j in range(ell):
        if j not in ((i - 2) % ell, (i - 1) % ell, i % ell) and adj[v] & sets[j]:
            return False
    return True

def build_hole_skeleton(g, c):
    """Saturate the hole c into V_1..V_l and derive A*, X_i, D_i, Z, Z1*, Z2*.

    Vertices join the first V_i whose pattern they fit, scanning in
    ascending id and repeating until nothing changes.

    Raises:
        InputError: c is not an even hole of length at least 6 in g.
        ClassViolation: the skeleton breaks a fact that holds in class B
            graphs with no sensitive vertex; claim and witness say which.
    """
    ell = len(c)
    if ell < 6 or ell % 2 or not c.check(g):
        raise InputError('{!r} is not an even hole of length at least 6'.format(c))
    adj = g._adj
    v = [1 << u for u in c]
    placed = mask_of(c)
    changed = True
    while changed:
        changed = False
        for u in bits(g.full & ~placed):
            for i in range(1, ell + 1):
                if _fits(adj, u, v, i, ell):
                    v[i - 1] |= 1 << u
                    placed |= 1 << u
                    changed = True
                    break

    v1 = v2 = 0
    for i in range(ell):
        if i % 2 == 0:
            v1 |= v[i]
        else:
            v2 |= v[i]
    a1 = a2 = 0
    for u in bits(g.full & ~placed):
        if adj[u] & v2 == v2 and not adj[u] & v1:
            a1 |= 1 << u
        elif adj[u] & v1 == v1 and not adj[u] & v2:
            a2 |= 1 << u

    x = [0] * ell
    free = g.full & ~placed & ~a1 & ~a2
    for u in bits(free):
        for i in range(1, ell + 1):
            want = v[(i - 2) % ell] | v[i % ell]
            avoid = v[(i - 3) % ell] | v[(i + 1) % ell]
            if adj[u] & want == want and not adj[u] & avoid:
                x[i - 1] |= 1 << u
                break
    xs = 0
    for m in x:
        xs |= m
    z = free & ~xs

    sk = HoleSkeleton(c, v, x, a1, a2, z, 0, 0)
    c1, c2 = sk.c1, sk.c2
    for u in bits(z):
        if adj[u] & c2:
            sk.z1 |= 1 << u
        if adj[u] & c1:
            sk.z2 |= 1 << u

    bad = sk.violations(g)
    if bad:
        claim, witness = bad[0]
        raise ClassViolation(claim, witness, '{} skeleton violation(s)'.format(len(bad)))
    printverbose('skeleton:', sk)
    return sk

def build_levels(g, sk):
    """Hang the graph from C1* in breadth-first levels L_1, L_2, ...

    Returns:
        List of frozensets, L_1 first.

    Raises:
        ClassViolation: some vertex is never reached, or Z1* is not inside L_3.
    """
    levels = _level_masks(g, sk)
    if sk.z1 and (len(levels) < 3 or sk.z1 & ~levels[2]):
        raise ClassViolation('Z1* on level 3', members(sk.z1))
    return [members(m) for m in levels]

def _level_masks(g, sk):
    adj = g._adj
    seen = frontier = sk.c1
    levels = [frontier]
    while True:
        nxt = 0
        for u in bits(frontier):
            nxt |= adj[u]
        frontier = nxt & ~seen
        if not frontier:
            break
        seen |= frontier
        levels.append(frontier)
    if seen != g.full:
        raise ClassViolation('levels cover the graph', members(g.full & ~seen))
    return levels

######################################################################
# Boxes

class Box(namedtuple('Box', 'id members label kind level aux')):
    """One box: id, member frozenset, 'odd'/'even', 'central'/'peripheral',
    1-based level, and its auxiliary vertices (a, b, c, d) for central
    boxes or (a, b) for peripheral ones."""

    __slots__ = ()

    @property
    def mask(self):
        return mask_of(self.members)

class BoxPartition:
    """A partition of the vertices into labelled boxes.

    Args:
        n (int): Vertex count of the graph partitioned.
        boxes (list): Box objects; ids are their positions.
        skeleton (HoleSkeleton): The skeleton it was built from, if any.
    """

    def __init__(self, n, boxes, skeleton=None):
        self.n = n
        self.boxes = list(boxes)
        self.skeleton = skeleton
        self._where = {}
        for box in self.boxes:
            for v in box.members:
                self._where.setdefault(v, box.id)

    def box_of(self, v):
        """The box containing v."""
        try:
            return self.boxes[self._where[v]]
        except KeyError:
            raise InputError('vertex {} is in no box'.format(v)) from None

    def label_of(self, v):
        return self.box_of(v).label

    @property
    def central(self):
        return [b for b in self.boxes if b.kind == CENTRAL]

    @property
    def peripheral(self):
        return [b for b in self.boxes if b.kind == PERIPHERAL]

    def __iter__(self):
        return iter(self.boxes)

    def __len__(self):
        return len(self.boxes)

    def __eq__(self, other):
        return (isinstance(other, BoxPartition) and self.n == other.n and
            self.boxes == other.boxes)

    def __repr__(self):
        return 'BoxPartition({} boxes, {} central)'.format(len(self.boxes), len(self.central))

def _central_index(sk, m):
    for i in range(1, sk.ell + 1):
        if m & ~sk.d[i - 1] == 0:
            return i
    if m & ~sk.a1 == 0:
        return 3
    if m & ~sk.a2 == 0:
        return 4
    return None

def _peripheral_aux(g, m, above):
    adj = g._adj
    p = partial_mask(g, m)
    for a in bits(above):
        if adj[a] & m == m and not adj[a] & p:
            cands = adj[a] & ~m
            for b in bits(cands):
                if not adj[b] & m:
                    return (a, b)
    return None

def build_box_partition(g, hole=None):
    """Build and validate a box partition of g.

    Args:
        g (Graph): A class B graph with an even hole of length at least 6 and
            no sensitive vertex.
        hole (Hole): A shortest even hole to build around; found if omitted.

    Raises:
        ClassViolation: g has no suitable hole, a construction step fails,
            or the result breaks a box partition property.
    """
    if hole is None:
        hole = find_shortest_even_hole(g)
        if hole is None or len(hole) < 6:
            raise ClassViolation('even hole of length at least 6', None)
    sk = build_hole_skeleton(g, hole)
    levels = _level_masks(g, sk)
    if sk.z1 and (len(levels) < 3 or sk.z1 & ~levels[2]):
        raise ClassViolation('Z1* on level 3', members(sk.z1))

    central = sk.c1 | sk.c2
    boxes = []
    for j, level in enumerate(levels, 1):
        for m in component_masks(g, level):
            if m & ~central == 0:
                kind = CENTRAL
                i = _central_index(sk, m)
                if i is None:
                    raise ClassViolation('central box inside one D_i or A*', members(m))
                aux = tuple(lowest(sk.V(k)) for k in (i - 1, i - 2, i + 1, i + 2))
            elif m & central == 0:
                kind = PERIPHERAL
                aux = _peripheral_aux(g, m, levels[j - 2] if j > 1 else 0)
                if aux is None:
                    raise ClassViolation('peripheral aux', members(m),
                        'no vertex of level {} sees the box and misses its partials'.format(j - 1))
            else:
                raise ClassViolation('box is central or peripheral', members(m))
            boxes.append(Box(len(boxes), members(m), ODD if j % 2 else EVEN, kind, j, aux))

    bp = BoxPartition(g.n, boxes, sk)
    bad = validate_box_partition(g, bp)
    if bad:
        first = bad[0]
        raise ClassViolation(first.property, first.witness,
            'box {}; {} violation(s) in all'.format(first.box, len(bad)))
    printverbose('box partition: {} boxes on {} levels'.format(len(boxes), len(levels)))
    return bp

######################################################################
# Validation

BoxViolation = namedtuple('BoxViolation', 'property box witness')
BoxViolation.__doc__ = """One failed box partition property: the property key,
the box id (None for global properties) and a witness."""

#: Property keys reported by validate_box_partition, in checking order.
PROPERTIES = (
    'partition', 'same-label edge', 'connected', 'six central',
    'central aux', 'peripheral aux', 'nested partials', 'partial pair path',
    'partial P4',
)

def validate_box_partition(g, bp):
    """Re-check every box partition property independently.

    Returns:
        List of BoxViolation, empty when bp is valid for g.
    """
    adj = g._adj
    out = []
    seen = 0
    for box in bp:
        m = g.mask(box.members)
        if not m or m & seen:
            out.append(BoxViolation('partition', box.id, box.members))
        seen |= m
    if seen != g.full:
        out.append(BoxViolation('partition', None, members(g.full & ~seen)))

    labels = {}
    for box in bp:
        for v in box.members:
            labels[v] = box.label
    for u, v in g.edges():
        if bp._where.get(u) != bp._where.get(v) and labels.get(u) == labels.get(v):
            out.append(BoxViolation('same-label edge', bp._where.get(u), (u, v)))

    if len(bp.central) < 6:
        out.append(BoxViolation('six central', None, len(bp.central)))

    for box in bp:
        m = mask_of(box.members)
        if not is_connected(g, m):
            out.append(BoxViolation('connected', box.id, box.members))
        p = partial_mask(g, m)
        if box.kind == CENTRAL:
            out.extend(_check_central_aux(g, box, m, p))
        else:
            out.extend(_check_peripheral_aux(g, box, m, p))
            out.extend(_check_nested(g, box, m, p))
        out.extend(_check_partial_paths(g, box, m, p))
        out.extend(_check_partial_p4(g, box, m, p))
    return out

def _sees_all_misses(adj, a, m, p):
    return adj[a] & m == m and not adj[a] & p

def _check_central_aux(g, box, m, p):
    adj = g._adj
    aux = box.aux
    if len(aux) != 4 or len(set(aux)) != 4 or mask_of(aux) & m:
        return [BoxViolation('central aux', box.id, aux)]
    a, b, c, d = aux
    ok = (_sees_all_misses(adj, a, m, p) and _sees_all_misses(adj, c, m, p) and
        not adj[b] & m and not adj[d] & m)
    edges = {frozenset((s, t)) for s in aux for t in aux if s < t and g.has_edge(s, t)}
    ok = ok and edges == {frozenset((a, b)), frozenset((c, d))}
    return [] if ok else [BoxViolation('central aux', box.id, aux)]

def _check_peripheral_aux(g, box, m, p):
    adj = g._adj
    aux = box.aux
    if len(aux) != 2 or aux[0] == aux[1] or mask_of(aux) & m:
        return [BoxViolation('peripheral aux', box.id, aux)]
    a, b = aux
    if _sees_all_misses(adj, a, m, p) and not adj[b] & m and g.has_edge(a, b):
        return []
    return [BoxViolation('peripheral aux', box.id, aux)]

def _check_nested(g, box, m, p):
    adj = g._adj
    out = []
    for u in bits(m):
        for v in bits(adj[u] & m):
            if u < v:
                pu, pv = adj[u] & p, adj[v] & p
                if pu & ~pv and pv & ~pu:
                    out.append(BoxViolation('nested partials', box.id,
                        (u, v, lowest(pu & ~pv), lowest(pv & ~pu))))
    return out

def _check_partial_paths(g, box, m, p):
    # chordless u-v-w in the box, adjacent x, y partial with
    # x seeing only u and y seeing u, v but not w
    adj = g._adj
    out = []
    for v in bits(m):
        for u in bits(adj[v] & m):
            for w in bits(adj[v] & m & ~adj[u] & ~(1 << u)):
                xs = p & adj[u] & ~adj[v] & ~adj[w]
                ys = p & adj[u] & adj[v] & ~adj[w]
                for x in bits(xs):
                    if adj[x] & ys:
                        out.append(BoxViolation('partial pair path', box.id,
                            (u, v, w, x, lowest(adj[x] & ys))))
    return out

def _check_partial_p4(g, box, m, p):
    adj = g._adj
    out = []
    for u in bits(m):
        for v in bits(adj[u] & m):
            xs = p & adj[u] & ~adj[v]
            ys = p & adj[v] & ~adj[u]
            for x in bits(xs):
                free = ys & ~adj[x]
                if free:
                    out.append(BoxViolation('partial P4', box.id, (x, u, v, lowest(free))))
    return out

__all__ = [
    'ODD', 'EVEN', 'CENTRAL', 'PERIPHERAL', 'PROPERTIES',
    'partial_vertices', 'HoleSkeleton', 'build_hole_skeleton', 'build_levels',
    'Box', 'BoxPartition', 'BoxViolation', 'build_box_partition',
    'validate_box_partition',
]
