"""
Seeded generators for test and benchmark instances.

An instance is described by an InstanceSpec: a generator name, its
parameters, and a seed.  Specs are written on the command line either as
``name:key=value,key=value`` or ``name(value, key=value)``, the bare value
going to the generator's first parameter::

    hole(6)
    spiked(F2)
    sensitive(hole=6)
    sensitive:closed=0,count=3
    attach:hole=8,count=3,wmax=4

Any spec may carry ``wmax=K`` to attach random weights 1..K, and
``shuffle=1`` to renumber the vertices at random.

Generators advertise the class their output belongs to.  Every output is
re-checked against that class, and randomized generators are retried up to
ProgramGlobals['retry_budget'] times before giving up with GenerationError.
"""

import random
import re
from collections import namedtuple

from .errors import GenerationError, InputError
from .graph import Graph
from .recognition import (
    is_class_member, pattern_edges, WHEEL, DOUBLE_BROOM, LOCK, SPIKED_F1, SPIKED_F2
)
from .util import ProgramGlobals, printverbose

#: Advertised classes.
CLASS = 'class'
SUBCLASS_B = 'B'

InstanceSpec = namedtuple('InstanceSpec', 'name params seed')
InstanceSpec.__doc__ = """A generator name, a dict of parameters, and a seed."""

Instance = namedtuple('Instance', 'graph spec meta')
Instance.__doc__ = """A generated graph, the spec it came from, and metadata.

meta always has 'structure' (what was planted), 'planted' (its vertices)
and 'advertised' (CLASS, SUBCLASS_B or None); weighted specs add 'weights'.
"""

_generators = {}

def generator(name):
    """Register a generator function under name.

    The function takes a random.Random followed by its parameters as
    keyword arguments and returns (Graph, meta).
    """
    def register(fn):
        _generators[name] = fn
        return fn
    return register

def generator_names():
    return sorted(_generators)

######################################################################
# Spec parsing

_callform = re.compile(r'^\s*([\w-]+)\s*\((.*)\)\s*$')

def _value(text):
    text = text.strip()
    try:
        return int(text)
    except ValueError:
        return text

def parse_spec(text, seed=0):
    """Turn 'name:k=v,...' or 'name(v, k=v)' into an InstanceSpec."""
    m = _callform.match(text)
    if m:
        name, args = m.group(1), m.group(2)
    else:
        name, _, args = text.partition(':')
        name = name.strip()
    if name not in _generators:
        raise InputError('unknown generator {!r}; known: {}'.format(name, ', '.join(generator_names())))
    params = {}
    for i, arg in enumerate(a for a in args.split(',') if a.strip()):
        key, eq, val = arg.partition('=')
        if eq:
            params[key.strip()] = _value(val)
        elif i == 0:
            params[None] = _value(key)
        else:
            raise InputError('positional value {!r} must come first'.format(arg))
    return InstanceSpec(name, params, seed)

def format_spec(spec):
    """The canonical 'name:k=v,...' form, keys sorted."""
    args = ','.join(
        '{}={}'.format(k, v) for k, v in sorted(spec.params.items(), key=lambda kv: str(kv[0]))
        if k is not None
    )
    if None in spec.params:
        args = '{}{}{}'.format(spec.params[None], ',' if args else '', args)
    return '{}:{}'.format(spec.name, args) if args else spec.name

######################################################################
# Generation

def generate(spec):
    """Build the instance a spec describes.

    Raises:
        InputError: unknown generator or bad parameters.
        GenerationError: no instance of the advertised class was found
            within the retry budget.
    """
    try:
        fn = _generators[spec.name]
    except KeyError:
        raise InputError('unknown generator {!r}'.format(spec.name)) from None
    params = dict(spec.params)
    wmax = params.pop('wmax', None)
    shuffle = params.pop('shuffle', 0)
    if None in params:
        params[_first_parameter(fn)] = params.pop(None)

    rng = random.Random(spec.seed)
    budget = ProgramGlobals['retry_budget']
    for attempt in range(budget):
        try:
            g, meta = fn(rng, **params)
        except TypeError as e:
            raise InputError('bad parameters for {}: {}'.format(spec.name, e)) from e
        meta.setdefault('planted', ())
        if shuffle:
            g, meta = _shuffle(rng, g, meta)
        advertised = meta.get('advertised')
        if advertised is not None:
            ok = is_class_member(g, strict=(advertised == SUBCLASS_B))
            if not ok:
                printverbose('{}: attempt {} rejected ({})'.format(format_spec(spec), attempt, ok.reason))
                if not meta.get('random'):
                    break
                continue
        if wmax is not None:
            meta['weights'] = [rng.randint(1, wmax) for _ in range(g.n)]
        return Instance(g, spec, meta)
    raise GenerationError('{}: no instance of class {!r} after {} attempts'.format(
        format_spec(spec), advertised, attempt + 1))

def _first_parameter(fn):
    code = fn.__code__
    names = code.co_varnames[1:code.co_argcount]
    if not names:
        raise InputError('{} takes no parameters'.format(fn.__name__))
    return names[0]

def _shuffle(rng, g, meta):
    perm = list(range(g.n))
    rng.shuffle(perm)
    g = Graph(g.n, ((perm[u], perm[v]) for u, v in g.edges()))
    meta = dict(meta, planted=tuple(perm[v] for v in meta['planted']))
    return g, meta

######################################################################
# Building blocks

def _cycle_edges(n, start=0):
    return [(start + i, start + (i+1) % n) for i in range(n)]

def _require_even_hole(n):
    if n < 6 or n % 2:
        raise InputError('hole length must be even and at least 6, not {}'.format(n))

def _pattern(kind, size, advertised=CLASS):
    g = Graph(size, pattern_edges(kind, size))
    return g, {'structure' : kind, 'planted' : tuple(range(size)), 'advertised' : advertised}

######################################################################
# Generators

@generator('hole')
def hole(rng, n=6):
    """The chordless cycle C_n.  Odd n gives a non-member on purpose."""
    if n < 4:
        raise InputError('a hole needs at least 4 vertices')
    advertised = SUBCLASS_B if n % 2 == 0 else None
    return Graph(n, _cycle_edges(n)), {
        'structure' : 'hole', 'planted' : tuple(range(n)), 'advertised' : advertised
    }

@generator('wheel')
def wheel(rng, n=6):
    """An even hole of length n plus a centre seeing all of it."""
    _require_even_hole(n)
    return _pattern(WHEEL, n + 1)

@generator('bull')
def bull(rng):
    g = Graph(5, [(0, 1), (1, 2), (1, 4), (2, 4), (2, 3)])
    return g, {'structure' : 'bull', 'planted' : (0, 1, 4, 2, 3), 'advertised' : SUBCLASS_B}

@generator('double-broom')
def double_broom(rng):
    return _pattern(DOUBLE_BROOM, 8)

@generator('lock')
def lock(rng):
    return _pattern(LOCK, 6)

# Neighbourhoods on W (1-based) a planted partial vertex may take.
_PARTIAL_TYPES = {
    SPIKED_F1 : ((1,), (1, 3), (1, 2, 5), (1, 2, 4, 5), (2, 5), (1, 2, 3)),
    SPIKED_F2 : ((1,), (3,), (1, 3), (3, 5), (1, 3, 5), (1, 3, 5, 6)),
}

@generator('spiked')
def spiked(rng, kind='F1', count=0):
    """A bull (F1) or lock (F2) plus a vertex a seeing all of it and a
    pendant b on a.

    count more vertices are attached at random: each is complete to the
    core, anticomplete to it, or partial on it in one of the ways a
    bull-reducible graph allows, and sees a, b and earlier extras at random.
    """
    kinds = {'F1' : (SPIKED_F1, 7), 'F2' : (SPIKED_F2, 8)}
    try:
        kind, size = kinds[str(kind).upper()]
    except KeyError:
        raise InputError('spiked kind must be F1 or F2, not {!r}'.format(kind)) from None
    if not count:
        return _pattern(kind, size)
    k = size - 2
    a, b = k, k + 1
    edges = list(pattern_edges(kind, size))
    roles = []
    for i in range(count):
        v = size + i
        role = rng.choice('tzp')
        if role == 't':
            edges.extend((u, v) for u in range(k))
        elif role == 'p':
            edges.extend((u - 1, v) for u in rng.choice(_PARTIAL_TYPES[kind]))
        if rng.random() < 0.5:
            edges.append((a, v))
        if rng.random() < 0.3:
            edges.append((b, v))
        edges.extend((size + j, v) for j in range(i) if rng.random() < 0.3)
        roles.append(role)
    return Graph(size + count, edges), {
        'structure' : kind, 'planted' : tuple(range(size)), 'roles' : ''.join(roles),
        'advertised' : CLASS, 'random' : True
    }

@generator('blowup')
def blowup(rng, hole=6, size=2):
    """An even hole with each vertex replaced by a clique of 1..size vertices."""
    _require_even_hole(hole)
    sizes = [rng.randint(1, size) for _ in range(hole)]
    start = [sum(sizes[:i]) for i in range(hole)]
    n = sum(sizes)
    edges = []
    for i in range(hole):
        mine = range(start[i], start[i] + sizes[i])
        nxt = (i + 1) % hole
        theirs = range(start[nxt], start[nxt] + sizes[nxt])
        edges.extend((a, b) for a in mine for b in mine if a < b)
        edges.extend((a, b) for a in mine for b in theirs)
    return Graph(n, edges), {
        'structure' : 'blowup', 'planted' : tuple(start), 'sizes' : sizes,
        'advertised' : CLASS, 'random' : True
    }

@generator('attach')
def attach(rng, hole=6, count=2):
    """An even hole plus count vertices, each seeing 1 to 3 consecutive hole
    vertices and possibly earlier attached vertices."""
    _require_even_hole(hole)
    edges = _cycle_edges(hole)
    for k in range(count):
        x = hole + k
        first, run = rng.randrange(hole), rng.randint(1, 3)
        edges.extend((x, (first + i) % hole) for i in range(run))
        edges.extend((y, x) for y in range(hole, x) if rng.random() < 0.3)
    return Graph(hole + count, edges), {
        'structure' : 'attach', 'planted' : tuple(range(hole)),
        'advertised' : CLASS, 'random' : True
    }

@generator('peripheral')
def peripheral(rng, hole=6, depth=2, branch=2):
    """An even hole with a random tree of the given depth hanging off it."""
    _require_even_hole(hole)
    edges = _cycle_edges(hole)
    layer = [rng.randrange(hole)]
    n = hole
    for _ in range(depth):
        nxt = []
        for parent in layer:
            for _ in range(rng.randint(1, branch)):
                edges.append((parent, n))
                nxt.append(n)
                n += 1
        layer = nxt
    return Graph(n, edges), {
        'structure' : 'peripheral', 'planted' : tuple(range(hole)),
        'advertised' : SUBCLASS_B, 'random' : True
    }

@generator('sensitive')
def sensitive(rng, hole=6, count=0, closed=1):
    """A vertex x seeing exactly u2 and u3 of an induced C6 or P6 u1..u6.

    With closed, u1..un is an even hole of the given length.  Otherwise
    u1..u6 is a path and the hole runs through u4, u5 and u6 and back into
    u4, so that u1 is a leaf.

    count more vertices are attached around x at random, each taking one
    of four roles: seeing x and u2, seeing x and u3, seeing u1 u2 and u3, or
    seeing u1 and u3.  Vertices of the first two roles see each other, and
    so do those of the last two; other pairs of extras are joined at
    random.
    """
    _require_even_hole(hole)
    u1, u2, u3 = 0, 1, 2
    if closed:
        edges = _cycle_edges(hole)
        x = hole
        planted = (x,) + tuple(range(hole))
    else:
        ring = [3, 4, 5] + list(range(6, hole + 3))
        edges = [(0, 1), (1, 2), (2, 3)] + [(ring[i], ring[(i+1) % hole]) for i in range(hole)]
        x = hole + 3
        planted = (x,) + tuple(range(6))
    edges += [(x, u2), (x, u3)]
    meta = {'structure' : 'sensitive', 'planted' : planted, 'advertised' : CLASS}
    if not count:
        return Graph(x + 1, edges), meta
    sees = {'a' : (x, u2), 'b' : (x, u3), 'n' : (u1, u2, u3), 'm' : (u1, u3)}
    joined = {frozenset('ab'), frozenset('nm')}
    roles = []
    for i in range(count):
        v = x + 1 + i
        role = rng.choice('abnm')
        edges.extend((u, v) for u in sees[role])
        for j, other in enumerate(roles):
            if frozenset((role, other)) in joined or rng.random() < 0.3:
                edges.append((x + 1 + j, v))
        roles.append(role)
    meta.update(roles=''.join(roles), random=True)
    return Graph(x + 1 + count, edges), meta

@generator('random')
def random_graph(rng, n=7, p=30):
    """G(n, p) with p in percent; generate() rejects and redraws non-members."""
    edges = [(u, v) for u in range(n) for v in range(u+1, n) if rng.randrange(100) < p]
    return Graph(n, edges), {'structure' : 'random', 'advertised' : CLASS, 'random' : True}

__all__ = [
    'InstanceSpec', 'Instance', 'generator', 'generator_names', 'parse_spec',
    'format_spec', 'generate', 'CLASS', 'SUBCLASS_B',
]
