"""
The commands of the command line tool.

Each command takes the parsed arguments, fills in a Report, and leaves
rendering to the output visitors.  Commands are registered by name with the
@command decorator; run_command looks them up.

Exit statuses follow the report: 0 when every check passed, 2 when the input
is outside the class, 3 when a certificate or an optimality cross-check
failed.  Exceptions are left for the caller to map.
"""

import sys
import time
from concurrent.futures import ProcessPoolExecutor

from .boxes import BoxPartition, build_box_partition, validate_box_partition
from .coloring import Coloring, WeightedColoring, TraceNode, heaviest_chain, BOX_ORIENTATION
from .decomposition import (
    find_homogeneous_set, maximal_homogeneous_sets, homogeneous_from_spiked, is_homogeneous
)
from .driver import color_driver, weighted_color, trichotomy
from .errors import BullcolorError, ClassViolation, InputError
from .generators import generate, parse_spec, format_spec, SUBCLASS_B
from .graph import component_masks, complement, bits, mask_of
from .graph_parser import (
    infer_format, parse_graph, parse_json_weighted, parse_weights, parse_certificate
)
from .oracle import oracle_chromatic, oracle_clique, max_weight_clique
from .orientation import (
    Orientation, orient_components, make_acyclic_transitive, verify_transitive,
    verify_acyclic, comparability_orientation
)
from .recognition import (
    is_bull_reducible, find_odd_hole, find_antihole, is_class_member, is_weakly_chordal,
    detect_structure, find_sensitive_vertex, EXCLUDED_STRUCTURES, SPIKED_F1, SPIKED_F2
)
from .report import Report, BenchRow, EXIT_OK, EXIT_REFUSED, EXIT_FAILED
from .util import ProgramGlobals, printverbose

_commands = {}

def command(name):
    """Register fn(report, args) as the command name."""
    def register(fn):
        _commands[name] = fn
        return fn
    return register

def command_names():
    return list(_commands)

def run_command(args):
    """Run the command args.command and return its Report.

    Raises:
        InputError: unknown command, unreadable input, bad flags.
        ClassViolation: the command needs a class member and did not get one.
        Refusal: a size cap was exceeded.
    """
    try:
        fn = _commands[args.command]
    except KeyError:
        raise InputError('unknown command {!r}'.format(args.command)) from None
    report = Report(args.command)
    start = time.perf_counter()
    fn(report, args)
    report.timings['total'] = time.perf_counter() - start
    return report

######################################################################
# Input handling

def _spec(args):
    specs = getattr(args, 'spec', None) or []
    if len(specs) > 1:
        raise InputError('{} takes one --spec'.format(args.command))
    return specs[0] if specs else None

def load_graph(report, args):
    """Read the input graph, or generate it from --spec, into the report."""
    spec = _spec(args)
    if spec is not None:
        inst = generate(parse_spec(spec, args.seed))
        report.source = format_spec(inst.spec)
        report.meta = dict(inst.meta, seed=args.seed)
        report.graph = inst.graph
        return inst.graph
    if not args.graph:
        raise InputError('no input graph: give a file or --spec')
    if args.graph == '-':
        text, name = sys.stdin.read(), '<stdin>'
        fmt = args.format or 'dimacs'
    else:
        name = args.graph
        fmt = args.format or infer_format(name)
        with open(name) as f:
            text = f.read()
    if fmt == 'json':
        g, weights = parse_json_weighted(text, name)
        if weights is not None:
            report.meta['weights'] = weights
    else:
        g = parse_graph(text, fmt, name)
    report.source = name
    report.graph = g
    return g

def load_weights(report, args, g, required=True):
    """Weights from --weights, else from the input file or generator."""
    if getattr(args, 'weights', None):
        with open(args.weights) as f:
            return parse_weights(f.read(), g.n, args.weights)
    if 'weights' in report.meta:
        return list(report.meta['weights'])
    if required:
        raise InputError('no weights: give --weights, a json graph with weights, or wmax= in --spec')
    return None

def _require_member(g, strict=False, what='the command'):
    ok = is_class_member(g, strict=strict)
    if not ok:
        raise ClassViolation(ok.reason, ok.witness, '{} needs a {} graph'.format(
            what, 'class B' if strict else 'bull-reducible Berge antihole-free'))

def _oracle_allowed(g):
    return g.n <= ProgramGlobals['oracle_cap']

######################################################################
# Commands

@command('recognize')
def recognize(report, args):
    """Class verdicts, each with a witness when it fails."""
    g = load_graph(report, args)
    bull = is_bull_reducible(g)
    odd = find_odd_hole(g)
    anti = find_antihole(g)
    report.check('bull-reducible', bool(bull), bull.witness,
        '' if bull else 'vertex in two bulls {}'.format(bull.reason), EXIT_REFUSED)
    report.check('no odd hole', odd is None, odd,
        '' if odd is None else 'odd hole C{}'.format(len(odd)), EXIT_REFUSED)
    report.check('no antihole', anti is None, anti,
        '' if anti is None else 'antihole of length {}'.format(len(anti)), EXIT_REFUSED)

    member = is_class_member(g)
    if not member:
        detail = 'not in class: {}'.format(member.reason)
        if member.reason == 'odd hole':
            detail += ' C{}'.format(len(member.witness))
        report.check('class member', False, member.witness, detail, EXIT_REFUSED)
        return
    report.check('class member', True)

    for kind in EXCLUDED_STRUCTURES:
        sw = detect_structure(g, kind)
        report.check('no ' + kind, sw is None, sw, failure=EXIT_OK)
    wc = is_weakly_chordal(g)
    report.check('weakly chordal', bool(wc), wc.witness, wc.reason or '', EXIT_OK)
    sw = find_sensitive_vertex(g)
    report.check('no sensitive vertex', sw is None, sw, failure=EXIT_OK)
    cases = trichotomy(g)
    report.check('trichotomy', bool(cases), None, ', '.join(cases) or 'no case holds')

@command('decompose')
def decompose(report, args):
    """Components, co-components, homogeneous sets, and the homogeneous set
    grown from any spiked structure."""
    g = load_graph(report, args)
    comps = component_masks(g, g.full)
    cocomps = component_masks(complement(g), g.full)
    report.check('connected', len(comps) < 2, [tuple(bits(m)) for m in comps],
        '{} components'.format(len(comps)), EXIT_OK)
    report.check('co-connected', len(cocomps) < 2, [tuple(bits(m)) for m in cocomps],
        '{} co-components'.format(len(cocomps)), EXIT_OK)

    h = find_homogeneous_set(g)
    report.check('has a homogeneous set', h is not None, h, failure=EXIT_OK)
    if len(comps) < 2 and len(cocomps) < 2:
        sets = maximal_homogeneous_sets(g)
        report.check('maximal homogeneous sets', True, sets, '{} sets'.format(len(sets)))

    for kind in (SPIKED_F1, SPIKED_F2):
        sw = detect_structure(g, kind)
        if sw is None:
            continue
        dec = homogeneous_from_spiked(g, sw)
        ok = is_homogeneous(g, dec.h)
        report.check('{} grows to a homogeneous set'.format(kind), bool(ok), ok.witness or dec.h)
        report.certify(kind, dec)

@command('boxes')
def boxes(report, args):
    """The box partition around a shortest even hole."""
    g = load_graph(report, args)
    _require_member(g, strict=True, what='boxes')
    bp = build_box_partition(g)
    bad = validate_box_partition(g, bp)
    report.check('box partition properties', not bad, bad[0] if bad else None,
        '{} violation(s)'.format(len(bad)) if bad else '')
    claims = bp.skeleton.violations(g) if bp.skeleton is not None else []
    report.check('hole skeleton', not claims, claims[0] if claims else None)
    report.certify('boxes', bp)

@command('orient')
def orient(report, args):
    """An acyclic transitive orientation with the provenance of every arc."""
    g = load_graph(report, args)
    _require_member(g, strict=True, what='orient')
    holder = TraceNode(BOX_ORIENTATION, g.n)
    o = make_acyclic_transitive(g, orient_components(g, holder))
    report.trace = holder.children[0] if len(holder.children) == 1 else holder
    _check_orientation(report, g, o)
    report.certify('orientation', o)

def _check_orientation(report, g, o):
    ok = verify_transitive(g, o)
    report.check('transitive', bool(ok), ok.witness, ok.reason or '')
    ok = verify_acyclic(g, o)
    report.check('acyclic', bool(ok), ok.witness, ok.reason or '')

@command('color')
def color(report, args):
    """Optimal coloring, cross-checked against the oracles."""
    g = load_graph(report, args)
    coloring, trace = color_driver(g)
    report.trace = trace
    report.certify('coloring', coloring)
    ok = coloring.check(g)
    report.check('proper coloring', bool(ok), ok.witness, ok.reason or '')
    omega, clique = oracle_clique(g)
    report.check('matches clique number', coloring.count == omega, sorted(clique),
        '{} colours, clique {}'.format(coloring.count, omega))
    _oracle_chromatic_check(report, g, coloring)

def _oracle_chromatic_check(report, g, coloring, failure=EXIT_FAILED):
    if not _oracle_allowed(g):
        report.check('oracle chromatic number', None, None,
            'skipped: {} vertices above the oracle cap of {}'.format(g.n, ProgramGlobals['oracle_cap']))
        return
    k, best = oracle_chromatic(g)
    report.check('oracle chromatic number', coloring.count == k,
        None if coloring.count == k else list(best.colors),
        '{} colours, oracle {}'.format(coloring.count, k), failure)

@command('color-weighted')
def color_weighted(report, args):
    """Minimum-weight coloring, cross-checked against the heaviest clique."""
    g = load_graph(report, args)
    w = load_weights(report, args, g)
    wc, trace = weighted_color(g, w)
    report.trace = trace
    report.certify('weighted coloring', wc)
    _check_weighted(report, g, w, wc)
    if _oracle_allowed(g):
        clique, weight = max_weight_clique(g, w)
        report.check('matches heaviest clique', wc.total == weight, sorted(clique),
            'total {}, clique weight {}'.format(wc.total, weight))
    else:
        report.check('matches heaviest clique', None, None, 'skipped: above the oracle cap')

def _check_weighted(report, g, w, wc):
    ok = wc.check(g, w)
    report.check('feasible weighted coloring', bool(ok), ok.witness, ok.reason or '')

@command('clique')
def clique(report, args):
    """Maximum clique, or maximum-weight clique when weights are given."""
    g = load_graph(report, args)
    w = load_weights(report, args, g, required=False)
    if w is None:
        omega, c = oracle_clique(g)
        report.check('maximum clique', g.is_clique(mask_of(c)), sorted(c), 'size {}'.format(omega))
        w = [1] * g.n
        weight = omega
    else:
        c, weight = max_weight_clique(g, w)
        report.check('maximum-weight clique', g.is_clique(mask_of(c)), sorted(c), 'weight {}'.format(weight))
    o = comparability_orientation(g)
    if o is not None:
        chain, chain_weight = heaviest_chain(g, o, w)
        report.check('heaviest chain agrees', chain_weight == weight, sorted(chain),
            'chain weight {}'.format(chain_weight))

@command('verify')
def verify(report, args):
    """Re-check a serialized certificate against the graph."""
    g = load_graph(report, args)
    if not args.certificate:
        raise InputError('verify needs --certificate')
    with open(args.certificate) as f:
        cert = parse_certificate(f.read(), g.n, args.certificate)
    report.certify('certificate', cert)
    if isinstance(cert, Coloring):
        ok = cert.check(g)
        report.check('proper coloring', bool(ok), ok.witness, ok.reason or '')
        if ok and _oracle_allowed(g):
            _oracle_chromatic_check(report, g, cert, failure=EXIT_OK)
    elif isinstance(cert, Orientation):
        _check_orientation(report, g, cert)
    elif isinstance(cert, WeightedColoring):
        w = load_weights(report, args, g, required=False) or [1] * g.n
        _check_weighted(report, g, w, cert)
    elif isinstance(cert, BoxPartition):
        bad = validate_box_partition(g, cert)
        report.check('box partition properties', not bad, bad[0] if bad else None,
            '{} violation(s)'.format(len(bad)) if bad else '')

@command('generate')
def generate_command(report, args):
    """Write a generated instance."""
    if not _spec(args):
        raise InputError('generate needs --spec')
    g = load_graph(report, args)
    report.graphformat = args.format or 'json'
    advertised = report.meta.get('advertised')
    if advertised is None:
        report.check('advertised class', None, None, 'nothing advertised')
    else:
        ok = is_class_member(g, strict=(advertised == SUBCLASS_B))
        report.check('advertised class', bool(ok), ok.witness, ok.reason or advertised)
    report.certify('graph', g)

######################################################################
# Benchmarking

def bench_one(spec, seed, settings):
    """Generate one instance and colour it; returns (BenchRow, error or None).

    Runs in a worker process, so the caller's ProgramGlobals come along as
    settings.
    """
    ProgramGlobals.update(settings)
    start = time.perf_counter()
    n = 0
    try:
        inst = generate(parse_spec(spec, seed))
        g = inst.graph
        n = g.n
        coloring, trace = color_driver(g)
        omega, _ = oracle_clique(g)
        oracle = oracle_chromatic(g)[0] if _oracle_allowed(g) else None
        ok = coloring.count == omega and oracle in (None, coloring.count)
        row = BenchRow(spec, seed, n, tuple(sorted(set(trace.branches()))), coloring.count,
            omega, oracle, ok, time.perf_counter() - start)
        error = None if ok else 'driver {} colours, clique {}, oracle {}'.format(coloring.count, omega, oracle)
    except BullcolorError as e:
        row = BenchRow(spec, seed, n, (), None, None, None, False, time.perf_counter() - start)
        error = '{}: {}'.format(type(e).__name__, e)
    return row, error

@command('bench')
def bench(report, args):
    """Colour every --spec at --count consecutive seeds and tabulate."""
    specs = args.spec or []
    if not specs:
        raise InputError('bench needs at least one --spec')
    for s in specs:
        parse_spec(s)
    jobs = [(s, args.seed + i) for s in specs for i in range(args.count)]
    settings = dict(ProgramGlobals)
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(bench_one, *zip(*jobs), [settings] * len(jobs)))
    else:
        results = [bench_one(s, seed, settings) for s, seed in jobs]
    for row, error in results:
        report.rows.append(row)
        if error is not None:
            printverbose('{} seed {}: {}'.format(row.spec, row.seed, error))
            report.check('{} seed {}'.format(row.spec, row.seed), False, None, error)
    report.source = ', '.join(specs)
