"""Transitive orientations.

Three sources of orientations live here:

* :func:`comparability_orientation`, the edge-forcing (implication class)
  method, which orients any comparability graph and is used for single
  boxes and for hole-free components.
* :func:`orient_by_rules`, which orients a whole graph from a box partition
  with the odd/even rules, the sharp-edge rule, the four dull-edge pattern
  rules and, failing those, the box's own forcing orientation.
* :func:`extend_orientation_sensitive`, which puts a sensitive vertex back
  on top of an orientation of the rest of the graph.

:func:`orient_components` strings them together the way the coloring
driver needs them.
"""

import heapq
from collections import namedtuple

from .boxes import ODD, build_box_partition
from .coloring import TraceNode, SENSITIVE_PEEL, BOX_ORIENTATION, FORCING_BRANCH
from .errors import InputError, InternalError, ClassViolation, OrientationConflict
from .graph import (
    Graph, Verdict, bits, mask_of, members, lowest, partial_mask,
    induced_subgraph, component_masks, reach, is_induced_path, is_induced_cycle
)
from .recognition import (
    find_sensitive_vertex, find_shortest_even_hole, is_class_member
)
from .util import ProgramGlobals, printverbose

RULE_0 = 'rule-0'
RULE_S = 'rule-s'
RULE_P3 = 'rule-p3'
RULE_P4 = 'rule-p4'
RULE_Q3 = 'rule-q3'
RULE_Q4 = 'rule-q4'
RULE_D = 'rule-d'
SENSITIVE = 'sensitive'
FORCING = 'forcing'

#: Every provenance tag an arc can carry.
TAGS = (RULE_0, RULE_S, RULE_P3, RULE_P4, RULE_Q3, RULE_Q4, RULE_D, SENSITIVE, FORCING)

######################################################################
# The orientation itself

class Orientation:
    """A partial assignment of directions to the edges of a graph.

    Each arc remembers how it was oriented: its tag and a tuple of the
    vertices that made the rule fire.  Orienting an edge a second time the
    same way is a no-op; the other way raises OrientationConflict.

    Args:
        n (int): Number of vertices.
    """

    def __init__(self, n):
        self.n = n
        self._succ = [0] * n
        self._why = {}

    @classmethod
    def from_arcs(cls, n, arcs):
        """Build from (tail, head) or (tail, head, tag) tuples."""
        o = cls(n)
        for arc in arcs:
            tag = arc[2] if len(arc) > 2 else FORCING
            o.orient(arc[0], arc[1], tag)
        return o

    def orient(self, tail, head, tag, config=()):
        if not (0 <= tail < self.n and 0 <= head < self.n) or tail == head:
            raise InputError('bad arc {}->{}'.format(tail, head))
        key = (min(tail, head), max(tail, head))
        prev = self._why.get(key)
        if prev is not None:
            if prev[0] == tail:
                return
            raise OrientationConflict(key, prev, (tail, head, tag, tuple(config)))
        self._why[key] = (tail, head, tag, tuple(config))
        self._succ[tail] |= 1 << head

    def succ(self, v):
        """Out-neighbours of v as a bitset."""
        return self._succ[v]

    def has_arc(self, tail, head):
        return bool(self._succ[tail] >> head & 1)

    def why(self, u, v):
        """(tail, head, tag, config) for the edge uv, or None."""
        return self._why.get((min(u, v), max(u, v)))

    def tag(self, u, v):
        rec = self.why(u, v)
        return rec[2] if rec else None

    def arcs(self):
        """All arcs as (tail, head, tag), ordered by edge."""
        return [self._why[k][:3] for k in sorted(self._why)]

    def reversed(self):
        o = Orientation(self.n)
        for tail, head, tag, config in self._why.values():
            o.orient(head, tail, tag, config)
        return o

    def lift(self, ids, n):
        """Renumber into a graph of n vertices, vertex i becoming ids[i]."""
        o = Orientation(n)
        for tail, head, tag, config in self._why.values():
            o.orient(ids[tail], ids[head], tag, tuple(ids[c] for c in config))
        return o

    def restrict(self, ids):
        """The arcs inside ids, renumbered so that ids[i] becomes i."""
        where = {v : i for i, v in enumerate(ids)}
        o = Orientation(len(ids))
        for tail, head, tag, config in self._why.values():
            if tail in where and head in where:
                o.orient(where[tail], where[head], tag, tuple(where[c] for c in config if c in where))
        return o

    def update(self, other):
        """Copy every arc of other into self."""
        for tail, head, tag, config in other._why.values():
            self.orient(tail, head, tag, config)

    def topological_order(self):
        """Vertices with every arc pointing forward, smallest first among
        ties, or None if there is a directed cycle."""
        indeg = [0] * self.n
        for u in range(self.n):
            for v in bits(self._succ[u]):
                indeg[v] += 1
        ready = [v for v in range(self.n) if not indeg[v]]
        heapq.heapify(ready)
        order = []
        while ready:
            u = heapq.heappop(ready)
            order.append(u)
            for v in bits(self._succ[u]):
                indeg[v] -= 1
                if not indeg[v]:
                    heapq.heappush(ready, v)
        return order if len(order) == self.n else None

    def __len__(self):
        return len(self._why)

    def __eq__(self, other):
        return isinstance(other, Orientation) and self._succ == other._succ

    def __repr__(self):
        return 'Orientation({} arcs on {} vertices)'.format(len(self._why), self.n)

######################################################################
# Checks

def _check_total(g, o):
    if o.n != g.n:
        return Verdict(False, None, 'orientation has {} vertices, graph {}'.format(o.n, g.n))
    for u, v in g.edges():
        if o.why(u, v) is None:
            return Verdict(False, (u, v), 'unoriented edge')
    if len(o) != g.m:
        for tail, head, _ in o.arcs():
            if not g.has_edge(tail, head):
                return Verdict(False, (tail, head), 'arc on a non-edge')
    return Verdict(True)

def verify_transitive(g, o):
    """Every edge oriented once, and no u->v->w with uw a non-edge.

    Returns:
        Verdict with witness (u, v, w) for a transitivity failure, or the
        offending edge for a totality failure.
    """
    ok = _check_total(g, o)
    if not ok:
        return ok
    adj = g._adj
    preds = [0] * g.n
    for u in range(g.n):
        for v in bits(o.succ(u)):
            preds[v] |= 1 << u
    for v in range(g.n):
        for u in bits(preds[v]):
            bad = o.succ(v) & ~adj[u]
            if bad:
                return Verdict(False, (u, v, lowest(bad)), 'transitivity')
    return Verdict(True)

def verify_acyclic(g, o):
    """Verdict for 'no directed cycle'; the witness is a cycle as a tuple."""
    if o.topological_order() is not None:
        return Verdict(True)
    return Verdict(False, _find_cycle(o), 'circuit')

def _find_cycle(o):
    state = [0] * o.n
    for root in range(o.n):
        if state[root]:
            continue
        path = [root]
        state[root] = 1
        stack = [iter(bits(o.succ(root)))]
        while stack:
            nxt = next(stack[-1], None)
            if nxt is None:
                state[path.pop()] = 2
                stack.pop()
            elif state[nxt] == 1:
                return tuple(path[path.index(nxt):])
            elif not state[nxt]:
                state[nxt] = 1
                path.append(nxt)
                stack.append(iter(bits(o.succ(nxt))))
    return None

######################################################################
# Forcing classes

def comparability_orientation(g):
    """An acyclic transitive orientation of g, or None if g is not a
    comparability graph.

    Picks the smallest remaining edge, closes it under forcing in the graph
    of remaining edges (p->q forces p->q' when q' is a remaining neighbour
    of p not adjacent to q, and p'->q likewise), orients the whole class and
    deletes it.  A class containing an arc and its reverse means g is not a
    comparability graph.
    """
    n = g.n
    rem = list(g._adj)
    o = Orientation(n)
    while True:
        start = None
        for u in range(n):
            higher = rem[u] >> (u+1) << (u+1)
            if higher:
                start = (u, lowest(higher))
                break
        if start is None:
            break
        cls_ = {start}
        stack = [start]
        while stack:
            p, q = stack.pop()
            for q2 in bits(rem[p] & ~rem[q] & ~(1 << q)):
                if (p, q2) not in cls_:
                    cls_.add((p, q2))
                    stack.append((p, q2))
            for p2 in bits(rem[q] & ~rem[p] & ~(1 << p)):
                if (p2, q) not in cls_:
                    cls_.add((p2, q))
                    stack.append((p2, q))
        for p, q in cls_:
            if (q, p) in cls_:
                return None
        for p, q in cls_:
            o.orient(p, q, FORCING)
            rem[p] &= ~(1 << q)
            rem[q] &= ~(1 << p)

    for check in (verify_transitive, verify_acyclic):
        ok = check(g, o)
        if not ok:
            raise InternalError('forcing orientation failed {}: {}'.format(ok.reason, ok.witness))
    return o

def make_acyclic_transitive(g, o):
    """Return o if acyclic, otherwise a fresh forcing orientation of g.

    Raises:
        InputError: o is not transitive.
        InternalError: g has a transitive orientation but forcing found none.
    """
    ok = verify_transitive(g, o)
    if not ok:
        raise InputError('orientation is not transitive: {} {}'.format(ok.reason, ok.witness))
    acyclic = verify_acyclic(g, o)
    if acyclic:
        return o
    printverbose('repairing cyclic transitive orientation, circuit {}'.format(acyclic.witness))
    fresh = comparability_orientation(g)
    if fresh is None:
        raise InternalError('transitively oriented graph is not a comparability graph')
    return fresh

######################################################################
# Orientation rules on a box partition

EdgeClass = namedtuple('EdgeClass', 'sharp witnesses')
EdgeClass.__doc__ = """sharp is True when some partial vertex of the box sees
exactly one endpoint; witnesses lists all such vertices."""

def classify_edge(g, bp, b, u, v):
    """Sharp or dull, for the edge uv inside box b.

    Raises:
        InputError: u, v are not both in b, or not adjacent.
    """
    if u not in b.members or v not in b.members:
        raise InputError('{} and {} are not both in box {}'.format(u, v, b.id))
    if not g.has_edge(u, v):
        raise InputError('{}{} is not an edge'.format(u, v))
    p = partial_mask(g, b.mask)
    wit = p & (g.adj(u) ^ g.adj(v))
    return EdgeClass(bool(wit), members(wit))

def _pattern_rules(adj, m, p, u, v, put, dull):
    """Fire the dull-edge pattern rules for uv read in the direction u, v."""
    fired = False
    for w in bits(adj[v] & m & ~adj[u] & ~(1 << u)):
        xs = p & adj[w] & ~adj[u] & ~adj[v]
        if xs:
            put(u, v, RULE_P3, (w, lowest(xs)))
            fired = True
        ys = p & adj[u] & adj[v] & ~adj[w]
        if ys:
            put(v, u, RULE_Q3, (w, lowest(ys)))
            fired = True
        for z in bits(adj[w] & m & ~adj[u] & ~adj[v] & ~(1 << v)):
            xs = p & adj[z] & ~adj[u] & ~adj[v] & ~adj[w]
            if xs and dull(v, w):
                put(v, u, RULE_P4, (w, z, lowest(xs)))
                fired = True
            ys = p & adj[u] & adj[v] & adj[w] & ~adj[z]
            if ys:
                put(u, v, RULE_Q4, (w, z, lowest(ys)))
                fired = True
    return fired

def _orient_box(g, box, o):
    adj = g._adj
    m = box.mask
    p = partial_mask(g, m)
    odd = box.label == ODD

    def put(s, t, tag, config):
        if odd:
            o.orient(s, t, tag, config)
        else:
            o.orient(t, s, tag, config)

    def dull(a, b):
        return not p & (adj[a] ^ adj[b])

    pending = []
    for u in bits(m):
        for v in bits(adj[u] & m >> (u+1) << (u+1)):
            sharp = p & (adj[u] ^ adj[v])
            if sharp:
                for x in bits(sharp):
                    if adj[x] >> u & 1:
                        put(u, v, RULE_S, (x,))
                    else:
                        put(v, u, RULE_S, (x,))
                continue
            fired = _pattern_rules(adj, m, p, u, v, put, dull)
            fired = _pattern_rules(adj, m, p, v, u, put, dull) or fired
            if not fired:
                pending.append((u, v))

    if pending:
        sub, mapping = induced_subgraph(g, box.members)
        to = comparability_orientation(sub)
        if to is None:
            raise ClassViolation('box transitively orientable', box.members)
        for u, v in pending:
            if to.has_arc(mapping[u], mapping[v]):
                o.orient(u, v, RULE_D)
            else:
                o.orient(v, u, RULE_D)

def orient_by_rules(g, bp):
    """Orient every edge of g from the box partition bp.

    Edges between boxes go from the odd box to the even one.  Inside a box
    the sharp-edge rule orients sharp edges, the pattern rules orient dull
    edges where their patterns occur, and the box's forcing orientation does
    the rest.  Even boxes use every rule reversed except the last.

    Returns:
        A transitive Orientation.  It is usually acyclic; callers that need
        that pass it through make_acyclic_transitive.

    Raises:
        OrientationConflict: two rules disagree on an edge.
        ClassViolation: the result is not transitive.
    """
    o = Orientation(g.n)
    for u, v in g.edges():
        bu, bv = bp.box_of(u), bp.box_of(v)
        if bu.id == bv.id:
            continue
        if bu.label == bv.label:
            raise ClassViolation('same-label edge', (u, v))
        if bu.label == ODD:
            o.orient(u, v, RULE_0, (bu.id, bv.id))
        else:
            o.orient(v, u, RULE_0, (bv.id, bu.id))
    for box in bp:
        _orient_box(g, box, o)
    ok = verify_transitive(g, o)
    if not ok:
        raise ClassViolation('rule orientation transitive', ok.witness, ok.reason)
    return o

######################################################################
# Sensitive vertices

class SensitiveContext(namedtuple('SensitiveContext', 'x u a_set b_set u2_class n2 m2 d')):
    """The sets around a sensitive vertex x with path or hexagon u1..u6.

    a_set sees x and u2 but not u3, u5; b_set sees x and u3 but not u1, u2,
    u4, u6.  u2_class sees u1 and u3 but not u4, u5, u6; it contains u2 and
    splits into n2 (neighbours of u2) and m2 (the rest).  d is the
    component of u2_class containing u2.
    """

    __slots__ = ()

def _is_sensitive_witness(g, x, u):
    if len(u) != 6 or len(set(u)) != 6 or x in u:
        return False
    if not (is_induced_path(g, u) or is_induced_cycle(g, u)):
        return False
    return [g.has_edge(x, v) for v in u] == [False, True, True, False, False, False]

def build_sensitive_context(g, x, u):
    """Compute the sets around a sensitive vertex and check their shape.

    Raises:
        InputError: x, u is not a sensitive configuration of g.
        ClassViolation: one of the structural facts that hold for class B
            graphs fails; the claim names it.
    """
    g.check_vertex(x)
    u = tuple(u)
    if not _is_sensitive_witness(g, x, u):
        raise InputError('{} with {} is not a sensitive configuration'.format(x, u))
    adj = g._adj
    u1, u2, u3, u4, u5, u6 = u
    bit = lambda *vs: mask_of(vs)
    nx_ = adj[x]

    a_set = b_set = u2_class = 0
    for v in range(g.n):
        if v == x or v in u:
            continue
        av = adj[v]
        if av >> x & 1 and av >> u2 & 1 and not av & bit(u3, u5):
            a_set |= 1 << v
        if av >> x & 1 and av >> u3 & 1 and not av & bit(u1, u2, u4, u6):
            b_set |= 1 << v
        if av & bit(u1, u3) == bit(u1, u3) and not av & bit(u4, u5, u6):
            u2_class |= 1 << v
    u2_class |= 1 << u2

    expected = bit(u2, u3) | a_set | b_set
    if nx_ != expected:
        raise ClassViolation('N(x) = u2 + u3 + A + B', (x,) + tuple(bits(nx_ ^ expected)))
    for a in bits(a_set):
        if b_set & ~adj[a]:
            raise ClassViolation('A sees B', (a, lowest(b_set & ~adj[a])))

    n2 = u2_class & adj[u2]
    m2 = u2_class & ~n2 & ~(1 << u2)
    for v in bits(n2):
        if m2 & ~adj[v]:
            raise ClassViolation('N2 sees M2', (v, lowest(m2 & ~adj[v])))
    d = reach(g, 1 << u2, u2_class)
    if d != 1 << u2 and d != u2_class:
        raise ClassViolation('D is u2 or U2', members(d))
    return SensitiveContext(x, u, members(a_set), members(b_set), members(u2_class),
        members(n2), members(m2), members(d))

def extend_orientation_sensitive(g, ctx, base):
    """Orient the edges at x on top of an orientation of g - x.

    Args:
        g (Graph): The whole graph.
        ctx (SensitiveContext): From build_sensitive_context.
        base (Orientation): Acyclic transitive orientation of g - x, in g's
            vertex ids (x has no arcs).

    Returns:
        Acyclic transitive Orientation of g.

    Raises:
        InputError: base is not acyclic and transitive on g - x.
        InternalError: base orients the path u1..u6 in neither alternating
            pattern.
        ClassViolation: the extension fails verification.
    """
    x = ctx.x
    adj = g._adj
    rest = Graph.from_masks([0 if v == x else a & ~(1 << x) for v, a in enumerate(adj)])
    for check in (verify_transitive, verify_acyclic):
        ok = check(rest, base)
        if not ok:
            raise InputError('base orientation of g - x fails {}: {}'.format(ok.reason, ok.witness))

    u1, u2, u3, u4, u5, u6 = ctx.u
    o = base.reversed() if base.has_arc(u2, u1) else _copy(base)
    pattern = ((u1, u2), (u3, u2), (u3, u4), (u5, u4), (u5, u6))
    if not all(o.has_arc(s, t) for s, t in pattern):
        raise InternalError('base does not alternate along {}'.format(ctx.u))

    dmask = mask_of(ctx.d)
    outside = partial_mask(g, dmask) & ~(1 << x)
    n2 = mask_of(ctx.n2)
    targets = mask_of(ctx.m2) | 1 << u2
    if not outside and n2:
        o = _reorient(o, n2, targets, adj)
    else:
        for v in bits(n2):
            if not o.has_arc(v, u2):
                raise ClassViolation('N2 into u2', (v, u2))

    for a in ctx.a_set | {u3}:
        o.orient(a, x, SENSITIVE, (u2, u3))
    for b in ctx.b_set | {u2}:
        o.orient(x, b, SENSITIVE, (u2, u3))

    for check in (verify_transitive, verify_acyclic):
        ok = check(g, o)
        if not ok:
            raise ClassViolation('sensitive extension', ok.witness, ok.reason)
    return o

def _copy(o):
    c = Orientation(o.n)
    c.update(o)
    return c

def _reorient(o, sources, targets, adj):
    """Point every edge between sources and targets into targets."""
    out = Orientation(o.n)
    for tail, head, tag, config in o._why.values():
        if sources >> head & 1 and targets >> tail & 1:
            out.orient(head, tail, SENSITIVE, config)
        else:
            out.orient(tail, head, tag, config)
    return out

######################################################################
# The orientation routine used by the driver

def orient_components(g, trace=None):
    """Acyclic transitive orientation of a class B graph with a hole.

    Sensitive vertices are peeled off one at a time (smallest first), the
    rest is oriented recursively, and each peeled vertex is put back.  With
    none left, every component with an even hole is oriented from its box
    partition; hole-free components are oriented by forcing.

    Args:
        g (Graph): The graph.
        trace (TraceNode): If given, a child node is appended per step.

    Raises:
        ClassViolation: g is outside the class somewhere along the way.
    """
    sw = find_sensitive_vertex(g)
    if sw is not None:
        keep = [v for v in range(g.n) if v != sw.x]
        sub, _ = induced_subgraph(g, keep)
        if ProgramGlobals['recheck_class']:
            ok = is_class_member(sub, strict=True)
            if not ok:
                raise ClassViolation('class after peeling {}'.format(sw.x), ok.witness, ok.reason)
        printverbose('peeling sensitive vertex {} with {}'.format(sw.x, sw.u))
        node = TraceNode(SENSITIVE_PEEL, g.n, {'x': sw.x, 'u': sw.u, 'closed': sw.closed})
        if trace is not None:
            trace.children.append(node)
        base = orient_components(sub, node).lift(keep, g.n)
        ctx = build_sensitive_context(g, sw.x, sw.u)
        o = extend_orientation_sensitive(g, ctx, base)
        node.certificate = o
        return o

    o = Orientation(g.n)
    for comp in component_masks(g, g.full):
        ids = list(bits(comp))
        sub, _ = induced_subgraph(g, ids)
        hole = find_shortest_even_hole(sub)
        if hole is not None:
            bp = build_box_partition(sub, hole)
            part = make_acyclic_transitive(sub, orient_by_rules(sub, bp))
            node = TraceNode(BOX_ORIENTATION, sub.n, {'vertices': tuple(ids), 'boxes': len(bp)}, bp)
        else:
            part = comparability_orientation(sub)
            if part is None:
                raise ClassViolation('hole-free component transitively orientable', tuple(ids))
            node = TraceNode(FORCING_BRANCH, sub.n, {'vertices': tuple(ids)}, part)
        if trace is not None:
            trace.children.append(node)
        o.update(part.lift(ids, g.n))
    return o

__all__ = [
    'TAGS', 'RULE_0', 'RULE_S', 'RULE_P3', 'RULE_P4', 'RULE_Q3', 'RULE_Q4',
    'RULE_D', 'SENSITIVE', 'FORCING',
    'Orientation', 'verify_transitive', 'verify_acyclic',
    'comparability_orientation', 'make_acyclic_transitive',
    'EdgeClass', 'classify_edge', 'orient_by_rules',
    'SensitiveContext', 'build_sensitive_context', 'extend_orientation_sensitive',
    'orient_components',
]
