"""The recursive coloring driver.

A bull-reducible Berge graph with no antihole is weakly chordal, has a
homogeneous set, or is transitively orientable.  The driver follows that
case split:

1. Disconnected graphs are coloured component by component, graphs with a
   disconnected complement co-component by co-component.
2. A homogeneous set H that is not a clique is coloured on its own with k
   colours, replaced by a k-clique, and the smaller graph is coloured.
3. Weakly chordal graphs go to even-pair contraction.
4. Everything else is transitively oriented and chain coloured.

Every step is recorded in a TraceNode tree.
"""

from .coloring import (
    Coloring, WeightedColoring, TraceNode, check_weights, chain_color,
    color_weakly_chordal, replicate, regroup,
    BASE_CASE, COMPONENTS, CO_COMPONENTS, HOMOGENEOUS, WEAKLY_CHORDAL,
    BOX_ORIENTATION
)
from .decomposition import (
    maximal_homogeneous_sets, find_homogeneous_set, substitute_clique,
    merge_colorings, merge_weighted_colorings
)
from .errors import ClassViolation, InternalError
from .graph import (
    bits, mask_of, component_masks, complement, induced_subgraph
)
from .orientation import (
    Orientation, orient_components, make_acyclic_transitive,
    comparability_orientation
)
from .recognition import is_class_member, is_weakly_chordal
from .util import printverbose

def _require_class(g):
    ok = is_class_member(g)
    if not ok:
        raise ClassViolation(ok.reason, ok.witness,
            'not a bull-reducible Berge graph without antihole')

######################################################################
# Unweighted

def color_driver(g, check_class=True):
    """Optimally colour a bull-reducible Berge graph with no antihole.

    Args:
        g (Graph): The graph.
        check_class (bool): Verify class membership first.

    Returns:
        (Coloring, TraceNode)

    Raises:
        ClassViolation: g is not in the class, or a step of the recursion
            found evidence that it is not.
    """
    if check_class:
        _require_class(g)
    return _color(g)

def _finish(g, node, coloring):
    ok = coloring.check(g)
    if not ok:
        raise InternalError('{} step produced an improper coloring: {} {}'.format(
            node.branch, ok.reason, ok.witness))
    node.coloring = coloring
    return coloring, node

def _color(g):
    if g.is_clique():
        return _finish(g, TraceNode(BASE_CASE, g.n), Coloring(range(g.n)))

    parts = component_masks(g, g.full)
    if len(parts) > 1:
        printverbose('{} vertices: {} components'.format(g.n, len(parts)))
        node = TraceNode(COMPONENTS, g.n, {'parts': [tuple(bits(m)) for m in parts]})
        colors = [None] * g.n
        for m in parts:
            sub, _ = induced_subgraph(g, bits(m))
            c, child = _color(sub)
            node.children.append(child)
            for i, v in enumerate(bits(m)):
                colors[v] = c[i]
        return _finish(g, node, Coloring(colors))

    parts = component_masks(complement(g), g.full)
    if len(parts) > 1:
        printverbose('{} vertices: {} co-components'.format(g.n, len(parts)))
        node = TraceNode(CO_COMPONENTS, g.n, {'parts': [tuple(bits(m)) for m in parts]})
        colors = [None] * g.n
        offset = 0
        for m in parts:
            sub, _ = induced_subgraph(g, bits(m))
            c, child = _color(sub)
            node.children.append(child)
            for i, v in enumerate(bits(m)):
                colors[v] = offset + c[i]
            offset += c.count
        return _finish(g, node, Coloring(colors))

    # clique modules are skipped: replacing one by a clique changes nothing
    for h in maximal_homogeneous_sets(g):
        if g.is_clique(mask_of(h)):
            continue
        sub, _ = induced_subgraph(g, h)
        inner, child_in = _color(sub)
        reduced, sbst = substitute_clique(g, h, inner.count)
        printverbose('{} vertices: homogeneous set {} -> {}-clique'.format(g.n, sorted(h), inner.count))
        outer, child_out = _color(reduced)
        node = TraceNode(HOMOGENEOUS, g.n, {'h': tuple(sorted(h)), 'k': inner.count})
        node.children.extend((child_in, child_out))
        return _finish(g, node, merge_colorings(outer, inner, sbst))

    wc = is_weakly_chordal(g)
    if wc:
        printverbose('{} vertices: weakly chordal'.format(g.n))
        return _finish(g, TraceNode(WEAKLY_CHORDAL, g.n), color_weakly_chordal(g))

    printverbose('{} vertices: orienting ({} {})'.format(g.n, wc.reason, wc.witness))
    holder = TraceNode(BOX_ORIENTATION, g.n)
    o = make_acyclic_transitive(g, orient_components(g, holder))
    node = holder.children[0] if len(holder.children) == 1 else holder
    node.detail['orientation'] = o
    return _finish(g, node, chain_color(g, o))

######################################################################
# Weighted

def weighted_color(g, w, check_class=True):
    """Minimum-weight coloring: stable sets with weights covering every
    vertex x at least w(x) times, of least total weight.

    Homogeneous sets are replaced by one vertex weighted with the optimum of
    the set; weakly chordal and comparability pieces are solved on the
    graph with each vertex blown up into a clique of w(x) copies.

    Returns:
        (WeightedColoring, TraceNode)

    Raises:
        InputError: bad weights.
        Refusal: a blow-up would exceed ProgramGlobals['replication_cap'].
        ClassViolation: g is not in the class.
    """
    w = check_weights(g, w)
    if check_class:
        _require_class(g)
    return _wcolor(g, w)

def _wfinish(g, w, node, wc):
    ok = wc.check(g, w)
    if not ok:
        raise InternalError('{} step produced an infeasible weighted coloring: {}'.format(
            node.branch, ok.reason))
    node.coloring = wc
    return wc, node

def _lift(wc, ids):
    return WeightedColoring((frozenset(ids[v] for v in s), wt) for s, wt in wc)

def _zip(parts):
    """Lay each part's sets along a line and cut where any part changes."""
    pieces = [list(wc) for wc in parts]
    pos = [0] * len(pieces)
    left = [p[0][1] if p else 0 for p in pieces]
    out = []
    while any(pos[i] < len(pieces[i]) for i in range(len(pieces))):
        live = [i for i in range(len(pieces)) if pos[i] < len(pieces[i])]
        step = min(left[i] for i in live)
        out.append((frozenset().union(*(pieces[i][pos[i]][0] for i in live)), step))
        for i in live:
            left[i] -= step
            if not left[i]:
                pos[i] += 1
                if pos[i] < len(pieces[i]):
                    left[i] = pieces[i][pos[i]][1]
    return WeightedColoring(out)

def _wcolor(g, w):
    keep = [v for v in range(g.n) if w[v]]
    if len(keep) < g.n:
        sub, _ = induced_subgraph(g, keep)
        wc, node = _wcolor(sub, [w[v] for v in keep])
        return _wfinish(g, w, node, _lift(wc, keep).normalized())

    if g.is_clique():
        wc = WeightedColoring(({v}, w[v]) for v in range(g.n))
        return _wfinish(g, w, TraceNode(BASE_CASE, g.n), wc)

    for branch, graph in ((COMPONENTS, g), (CO_COMPONENTS, complement(g))):
        parts = component_masks(graph, g.full)
        if len(parts) < 2:
            continue
        node = TraceNode(branch, g.n, {'parts': [tuple(bits(m)) for m in parts]})
        lifted = []
        for m in parts:
            ids = list(bits(m))
            sub, _ = induced_subgraph(g, ids)
            wc, child = _wcolor(sub, [w[v] for v in ids])
            node.children.append(child)
            lifted.append(_lift(wc, ids))
        if branch == COMPONENTS:
            wc = _zip(lifted)
        else:
            wc = WeightedColoring(pair for part in lifted for pair in part)
        return _wfinish(g, w, node, wc.normalized())

    sets = maximal_homogeneous_sets(g)
    if sets:
        h = sets[0]
        ids = sorted(h)
        sub, _ = induced_subgraph(g, ids)
        inner, child_in = _wcolor(sub, [w[v] for v in ids])
        reduced, sbst = substitute_clique(g, h, 1)
        rw = [None] * reduced.n
        for old, new in sbst.outer.items():
            rw[new] = w[old]
        rw[sbst.clique[0]] = inner.total
        outer, child_out = _wcolor(reduced, rw)
        node = TraceNode(HOMOGENEOUS, g.n, {'h': tuple(ids), 'weight': inner.total})
        node.children.extend((child_in, child_out))
        return _wfinish(g, w, node, merge_weighted_colorings(outer, inner, sbst))

    blown, origin = replicate(g, w)
    if is_weakly_chordal(g):
        node = TraceNode(WEAKLY_CHORDAL, g.n, {'replicated': blown.n})
        return _wfinish(g, w, node, regroup(color_weakly_chordal(blown), origin))

    holder = TraceNode(BOX_ORIENTATION, g.n)
    o = make_acyclic_transitive(g, orient_components(g, holder))
    node = holder.children[0] if len(holder.children) == 1 else holder
    node.detail['replicated'] = blown.n
    coloring = chain_color(blown, replicate_orientation(o, origin))
    return _wfinish(g, w, node, regroup(coloring, origin))

def replicate_orientation(o, origin):
    """Carry an acyclic transitive orientation over to a blow-up.

    Copies of one vertex are ordered by copy index; copies of adjacent
    vertices follow the original arc.
    """
    size = len(origin)
    arcs = []
    for i in range(size):
        for j in range(i + 1, size):
            a, b = origin[i], origin[j]
            if a == b:
                arcs.append((i, j))
            elif o.has_arc(a, b):
                arcs.append((i, j))
            elif o.has_arc(b, a):
                arcs.append((j, i))
    return Orientation.from_arcs(size, arcs)

######################################################################
# The case split as a check

WEAKLY_CHORDAL_CASE = 'weakly chordal'
HOMOGENEOUS_CASE = 'homogeneous set'
COMPARABILITY_CASE = 'comparability'

def trichotomy(g):
    """Which of the three cases hold for g.

    Returns:
        Tuple of the case names that hold, in the order weakly chordal,
        homogeneous set, comparability.  For a class member it is never
        empty.
    """
    cases = []
    if is_weakly_chordal(g):
        cases.append(WEAKLY_CHORDAL_CASE)
    if find_homogeneous_set(g) is not None:
        cases.append(HOMOGENEOUS_CASE)
    if comparability_orientation(g) is not None:
        cases.append(COMPARABILITY_CASE)
    return tuple(cases)

__all__ = [
    'color_driver', 'weighted_color', 'replicate_orientation', 'trichotomy',
    'WEAKLY_CHORDAL_CASE', 'HOMOGENEOUS_CASE', 'COMPARABILITY_CASE',
]
