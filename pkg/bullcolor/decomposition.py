"""Homogeneous sets: finding them, extracting one from a spiked F1 or F2,
replacing one by a clique, and putting colorings back together afterwards.
"""

from collections import namedtuple
from itertools import combinations

from .coloring import Coloring, WeightedColoring
from .errors import InputError, InternalError, ClassViolation
from .graph import (
    Graph, Verdict, bits, mask_of, members, lowest, popcount,
    complement, partial_mask, reach
)
from .recognition import SPIKED_F1, SPIKED_F2, _BULL_EDGES, _LOCK_EDGES
from .util import printverbose

######################################################################
# Detection

def is_homogeneous(g, h):
    """Check that h is a proper homogeneous set of g.

    Returns:
        Verdict; on failure the witness is the smallest partial vertex, or
        None when h is too small or not proper.
    """
    hm = g.mask(h)
    size = popcount(hm)
    if size < 2:
        return Verdict(False, None, 'fewer than two vertices')
    if hm == g.full:
        return Verdict(False, None, 'not proper')
    partial = partial_mask(g, hm)
    if partial:
        return Verdict(False, lowest(partial), 'partial vertex')
    return Verdict(True)

def _closure(g, mask):
    while True:
        partial = partial_mask(g, mask)
        if not partial:
            return mask
        mask |= partial

def homogeneous_closure(g, s):
    """Smallest superset of s on which no outside vertex is partial.

    The result may be the whole vertex set.
    """
    return members(_closure(g, g.mask(s)))

def _pair_closures(g):
    full = g.full
    out = []
    for u, v in combinations(range(g.n), 2):
        c = _closure(g, 1 << u | 1 << v)
        if c != full:
            out.append(c)
    return out

def find_homogeneous_set(g):
    """A smallest pair closure that is a proper homogeneous set, or None."""
    closures = _pair_closures(g)
    if not closures:
        return None
    return members(min(closures, key=lambda c: (popcount(c), lowest(c))))

def maximal_homogeneous_sets(g):
    """All inclusion-maximal proper homogeneous sets of g.

    Every homogeneous set is a union of pair closures, so merging
    overlapping proper pair closures yields the maximal sets.

    Returns:
        List of frozensets ordered by smallest member.

    Raises:
        InternalError: two maximal sets overlap.  This happens exactly when
            g or its complement is disconnected with three or more parts,
            which callers split off first.
    """
    merged = []
    for c in _pair_closures(g):
        hit = [m for m in merged if m & c]
        for m in hit:
            merged.remove(m)
            c |= m
        if c == g.full:
            raise InternalError('maximal homogeneous sets overlap in {!r}'.format(g))
        merged.append(c)
    merged.sort(key=lowest)
    return [members(m) for m in merged]

######################################################################
# Partial vertices on F1 and F2

BlueRedCount = namedtuple('BlueRedCount', 'blue red')
BlueRedCount.__doc__ = """Blue triples and red paths of a partial vertex on W."""

_KINDS = {
    'F1': (5, _BULL_EDGES), SPIKED_F1: (5, _BULL_EDGES),
    'F2': (6, _LOCK_EDGES), SPIKED_F2: (6, _LOCK_EDGES),
}

def classify_partial_vertex(w_kind, nbrs):
    """Count blue triples and red paths for a vertex partial on W.

    A blue triple is three vertices of W inducing a single edge uv with the
    vertex seeing u and missing v and the third.  A red path is a chordless
    u-v-w in W with the vertex seeing u and v and missing w.

    Args:
        w_kind (str): 'F1' (bull u1-u2u5u3-u4) or 'F2' (lock u1..u6).
        nbrs: The labels (1-based) of W that the vertex sees.

    Raises:
        InputError: nbrs is empty, all of W, or has a bad label.
    """
    try:
        size, edges = _KINDS[w_kind]
    except KeyError:
        raise InputError('unknown W kind {!r}'.format(w_kind)) from None
    seen = frozenset(nbrs)
    if not seen or len(seen) >= size or not seen <= frozenset(range(1, size+1)):
        raise InputError('{} is not partial on {}'.format(sorted(seen), w_kind))
    adj = {frozenset((a+1, b+1)) for a, b in edges}
    e = lambda a, b: frozenset((a, b)) in adj

    blue = 0
    for triple in combinations(range(1, size+1), 3):
        inside = [(a, b) for a, b in combinations(triple, 2) if e(a, b)]
        if len(inside) != 1:
            continue
        u, v = inside[0]
        third, = set(triple) - {u, v}
        if third not in seen and (u in seen) != (v in seen):
            blue += 1

    red = 0
    for v in range(1, size+1):
        for u, w in combinations(range(1, size+1), 2):
            if v in (u, w) or not (e(u, v) and e(v, w)) or e(u, w):
                continue
            if v in seen and (u in seen) != (w in seen):
                red += 1
    return BlueRedCount(blue, red)

######################################################################
# Homogeneous set from a spiked F1 or F2

class SpikedDecomposition(namedtuple('SpikedDecomposition',
        'w a b t z p p1 p2 a_set x_set y_set h')):
    """The sets built around a spiked F1 or F2.

    w is the labeled core u1..u|W|; a sees all of W and b; b misses W.  t, z
    and p split the rest of the graph into vertices complete to W, anticomplete
    to W, and partial on W; p1 holds the members of p whose neighbourhood in W
    is stable.  a_set is the part of t with a neighbour in z.  x_set is what
    p reaches through z, y_set what p and x_set reach through t - a_set in the
    complement, and h = W + p + x_set + y_set is homogeneous.
    """

    __slots__ = ()

def homogeneous_from_spiked(g, witness):
    """Grow the core of a spiked F1 or F2 into a homogeneous set.

    Args:
        g (Graph): A bull-reducible C5-free graph.
        witness (StructureWitness): A spiked F1 or F2 in g.

    Returns:
        SpikedDecomposition whose h is a proper homogeneous set.

    Raises:
        InputError: witness is not a spiked F1 or F2 of g.
        ClassViolation: one of the completeness facts that hold in the class
            fails; the witness is a pair of vertices demonstrating it.
    """
    if witness.kind not in (SPIKED_F1, SPIKED_F2) or not witness.check(g):
        raise InputError('{!r} is not a spiked F1/F2 of the graph'.format(witness))
    adj = g._adj
    w = witness.core
    a, b = witness.spike
    wm = mask_of(w)

    t = z = p = p1 = 0
    for v in bits(g.full & ~wm):
        seen = adj[v] & wm
        if seen == wm:
            t |= 1 << v
        elif not seen:
            z |= 1 << v
        else:
            p |= 1 << v
            if g.is_stable(seen):
                p1 |= 1 << v
    p2 = p & ~p1

    a_set = 0
    for v in bits(t):
        if adj[v] & z:
            a_set |= 1 << v

    _require_complete(g, t, p1, 'T sees P1')
    _require_complete(g, a_set, p, 'A sees P')

    into_z = 0
    for v in bits(p):
        into_z |= adj[v]
    x = reach(g, into_z & z, z)
    _require_complete(g, a_set, x, 'A sees X')

    rest_t = t & ~a_set
    px = p | x
    start = 0
    for v in bits(rest_t):
        if px & ~adj[v]:
            start |= 1 << v
    y = reach(complement(g), start, rest_t) if start else 0

    hm = wm | p | x | y
    _require_complete(g, t & ~y, hm, 'H sees T - Y')
    for v in bits(z & ~x):
        if adj[v] & hm:
            raise ClassViolation('H misses Z - X', (v, lowest(adj[v] & hm)))

    ok = is_homogeneous(g, members(hm))
    if not ok:
        raise ClassViolation('H homogeneous', ok.witness, ok.reason)
    printverbose('spiked {}: |T|={} |Z|={} |P|={} |X|={} |Y|={} -> |H|={}'.format(
        witness.kind, popcount(t), popcount(z), popcount(p), popcount(x),
        popcount(y), popcount(hm)))
    return SpikedDecomposition(
        tuple(w), a, b, members(t), members(z), members(p), members(p1),
        members(p2), members(a_set), members(x), members(y), members(hm)
    )

def _require_complete(g, left, right, claim):
    for v in bits(left):
        missing = right & ~g._adj[v] & ~(1 << v)
        if missing:
            raise ClassViolation(claim, (v, lowest(missing)))

######################################################################
# Substitution and recombination

Substitution = namedtuple('Substitution', 'h outer clique n')
Substitution.__doc__ = """Id bookkeeping for a clique substitution.

h: the replaced set, ascending; outer: old id -> new id for every vertex
outside h; clique: new ids of the clique; n: vertex count before.
"""

def substitute_clique(g, h, k):
    """Replace the homogeneous set h by a k-clique with h's outside
    neighbourhood.

    Vertices outside h keep their relative order and come first; the clique
    takes the last k ids.

    Returns:
        (Graph, Substitution)

    Raises:
        InputError: h is not homogeneous or k < 1.
    """
    ok = is_homogeneous(g, h)
    if not ok:
        raise InputError('cannot substitute a non-homogeneous set: {} {}'.format(
            ok.reason, ok.witness))
    if not isinstance(k, int) or k < 1:
        raise InputError('clique size must be a positive integer, not {!r}'.format(k))
    hm = g.mask(h)
    adj = g._adj
    outside = [v for v in range(g.n) if not hm >> v & 1]
    outer = {old: new for new, old in enumerate(outside)}
    clique = tuple(range(len(outside), len(outside) + k))
    qmask = mask_of(clique)
    attach = adj[lowest(hm)] & ~hm

    masks = []
    for old in outside:
        m = 0
        for x in bits(adj[old] & ~hm):
            m |= 1 << outer[x]
        if attach >> old & 1:
            m |= qmask
        masks.append(m)
    attach_new = mask_of(outer[x] for x in bits(attach))
    for q in clique:
        masks.append(attach_new | qmask & ~(1 << q))
    return Graph.from_masks(masks), Substitution(tuple(bits(hm)), outer, clique, g.n)

def merge_colorings(outer, inner, sub):
    """Colour h by matching inner colour classes to the colours of the clique.

    Args:
        outer (Coloring): Coloring of the substituted graph.
        inner (Coloring): Coloring of g[h], in the ids induced_subgraph gives.
        sub (Substitution): From substitute_clique.

    Raises:
        InternalError: inner does not use exactly one colour per clique
            vertex, or outer repeats a colour on the clique.
    """
    k = len(sub.clique)
    if inner.count != k:
        raise InternalError('inner coloring has {} colours for a {}-clique'.format(inner.count, k))
    qcolors = [outer[q] for q in sub.clique]
    if len(set(qcolors)) != k:
        raise InternalError('outer coloring repeats a colour on the clique')
    colors = [None] * sub.n
    for old, new in sub.outer.items():
        colors[old] = outer[new]
    for i, old in enumerate(sub.h):
        colors[old] = qcolors[inner[i]]
    return Coloring(colors)

def merge_weighted_colorings(outer, inner, sub):
    """Absorb a weighted coloring of g[h] into one of the graph where h was
    replaced by a single vertex q.

    The sets of outer containing q are laid end to end along a line of
    length coverage(q), and so are the sets of inner; each overlap of a q-set
    with an inner set becomes one set of the result.  This needs coverage(q)
    to be at least inner.total.

    Raises:
        InternalError: the substitution was not by a single vertex, or q is
            covered less than inner.total.
    """
    if len(sub.clique) != 1:
        raise InternalError('weighted substitution needs a single vertex')
    q = sub.clique[0]
    back = {new: old for old, new in sub.outer.items()}
    lift_outer = lambda s: frozenset(back[v] for v in s if v != q)
    lift_inner = lambda s: frozenset(sub.h[v] for v in s)

    result = []
    layers = []
    for s, wt in outer:
        if q in s:
            layers.append((lift_outer(s), wt))
        else:
            result.append((lift_outer(s), wt))
    pieces = [(lift_inner(s), wt) for s, wt in inner if wt]

    j = 0
    left = pieces[0][1] if pieces else 0
    for s, wt in layers:
        while wt:
            if j < len(pieces):
                take = min(wt, left)
                result.append((s | pieces[j][0], take))
                wt -= take
                left -= take
                if not left:
                    j += 1
                    left = pieces[j][1] if j < len(pieces) else 0
            else:
                result.append((s, wt))
                wt = 0
    if j < len(pieces):
        raise InternalError('substituted vertex covered less than {}'.format(inner.total))
    return WeightedColoring(result).normalized()

__all__ = [
    'is_homogeneous', 'homogeneous_closure', 'find_homogeneous_set',
    'maximal_homogeneous_sets',
    'BlueRedCount', 'classify_partial_vertex',
    'SpikedDecomposition', 'homogeneous_from_spiked',
    'Substitution', 'substitute_clique', 'merge_colorings',
    'merge_weighted_colorings',
]
