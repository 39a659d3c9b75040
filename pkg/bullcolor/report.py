"""The result of one command, as handed to the output visitors."""

from collections import namedtuple

#: Exit statuses.
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_REFUSED = 2
EXIT_FAILED = 3

Check = namedtuple('Check', 'name ok witness detail')
Check.__doc__ = """One verdict in a report.

ok is True, False, or None for a check that was skipped (oracle cap); detail
says why in words.  A failing check always carries a witness that replays the
failure.
"""
Check.__new__.__defaults__ = (None, '')

BenchRow = namedtuple('BenchRow', 'spec seed n branches colors clique oracle ok seconds')
BenchRow.__doc__ = """One benchmark instance: the driver's colour count against
the clique number and, below the oracle cap, the exact chromatic number."""

class Report:
    """What a command found.

    Args:
        command (str): The command that ran.
        source (str): Input file name, or the generator spec.

    Data members:
        graph: The graph worked on, if any.
        meta: Generator metadata for generated inputs.
        checks: Check objects, in the order they were made.
        certificates: Ordered dict of name -> certificate object.
        trace: The driver's TraceNode, if it ran.
        rows: BenchRow objects for bench.
        timings: Name -> seconds.
        status: Exit status.
    """

    def __init__(self, command, source=None):
        self.command = command
        self.source = source
        self.graph = None
        self.meta = {}
        self.checks = []
        self.certificates = {}
        self.trace = None
        self.rows = []
        self.timings = {}
        self.status = EXIT_OK
        self.graphformat = 'json'

    def check(self, name, ok, witness=None, detail='', failure=EXIT_FAILED):
        """Record a verdict; a failing one raises the exit status to failure."""
        self.checks.append(Check(name, ok, witness, detail))
        if ok is False:
            self.status = max(self.status, failure)
        return ok

    def certify(self, name, cert):
        self.certificates[name] = cert

    @property
    def name(self):
        return self.command

    @property
    def failures(self):
        return [c for c in self.checks if c.ok is False]

    def __repr__(self):
        return 'Report({}, {} checks, status {})'.format(self.command, len(self.checks), self.status)

def plain(obj):
    """Reduce a witness or detail to lists, dicts, strings and numbers.

    Sets come out sorted, so the result is deterministic.
    """
    if obj is None or isinstance(obj, (bool, int, float, str)):
        return obj
    if isinstance(obj, dict):
        return {str(k) : plain(v) for k, v in obj.items()}
    if isinstance(obj, (set, frozenset)):
        return sorted(plain(v) for v in obj)
    if hasattr(obj, '_asdict'):
        return {k : plain(v) for k, v in obj._asdict().items()}
    if hasattr(obj, 'arcs'):
        return [list(arc) for arc in obj.arcs()]
    kind = getattr(obj, 'kind', None)
    vertices = getattr(obj, 'vertices', None)
    if kind is not None and vertices is not None:
        return {'kind' : kind, 'vertices' : list(vertices)}
    try:
        return [plain(v) for v in obj]
    except TypeError:
        return str(obj)
