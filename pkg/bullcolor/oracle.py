"""Brute-force ground truth for small graphs.

None of these use the structure of the class; they exist to check the
answers the structural algorithms give.
"""

import networkx as nx

from .coloring import Coloring, check_weights
from .errors import Refusal
from .graph import bits
from .util import ProgramGlobals

def _refuse_above_cap(g):
    cap = ProgramGlobals['oracle_cap']
    if g.n > cap:
        raise Refusal('{} vertices exceeds the oracle cap of {}'.format(g.n, cap))

def oracle_clique(g):
    """A maximum clique by pivoting Bron-Kerbosch enumeration.

    Returns:
        (size, frozenset); the empty graph gives (0, frozenset()).
    """
    if not g.n:
        return 0, frozenset()
    best = max(nx.find_cliques(g.to_networkx()), key=lambda c: (len(c), -min(c)))
    return len(best), frozenset(best)

def max_weight_clique(g, w):
    """A maximum-weight clique.

    Returns:
        (frozenset, weight)
    """
    w = check_weights(g, w)
    G = g.to_networkx()
    for v in range(g.n):
        G.nodes[v]['weight'] = w[v]
    clique, weight = nx.max_weight_clique(G, weight='weight')
    return frozenset(clique), weight

def _order(g, seed):
    # clique first, then by saturation against what is already ordered
    adj = g._adj
    order = sorted(seed)
    placed = 0
    for v in order:
        placed |= 1 << v
    rest = [v for v in range(g.n) if not placed >> v & 1]
    while rest:
        v = max(rest, key=lambda u: (bin(adj[u] & placed).count('1'), bin(adj[u]).count('1'), -u))
        rest.remove(v)
        order.append(v)
        placed |= 1 << v
    return order

def _k_coloring(g, k, order):
    adj = g._adj
    colors = [-1] * g.n

    def extend(i, used):
        if i == len(order):
            return True
        v = order[i]
        forbidden = {colors[u] for u in bits(adj[v])}
        for c in range(used):
            if c not in forbidden:
                colors[v] = c
                if extend(i + 1, used):
                    return True
        if used < k:
            colors[v] = used
            if extend(i + 1, used + 1):
                return True
        colors[v] = -1
        return False

    return list(colors) if extend(0, 0) else None

def oracle_chromatic(g):
    """Exact chromatic number by branch and bound.

    Tries k = clique number, clique number + 1, ... and for each searches
    colorings in which a vertex only opens the next unused colour.

    Returns:
        (chromatic number, Coloring)

    Raises:
        Refusal: g has more than ProgramGlobals['oracle_cap'] vertices.
    """
    _refuse_above_cap(g)
    if not g.n:
        return 0, Coloring([])
    omega, clique = oracle_clique(g)
    order = _order(g, clique)
    for k in range(omega, g.n + 1):
        colors = _k_coloring(g, k, order)
        if colors is not None:
            return k, Coloring(colors)
    raise AssertionError('every graph is n-colourable')

__all__ = ['oracle_chromatic', 'oracle_clique', 'max_weight_clique']
