"""Main executable for bullcolor."""

import argparse
import sys
import traceback
import importlib

from .util import __version__, ProgramGlobals, Outputs, MAX_VERTEX_CAP
from .errors import InputError, ClassViolation, Refusal, GenerationError, InternalError
from .commands import run_command, command_names
from .graph_parser import FORMATS
from .report import EXIT_USAGE, EXIT_REFUSED, EXIT_FAILED
from . import output

class _Parser(argparse.ArgumentParser):
    """Usage errors exit with status 1, not argparse's 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, '{}: error: {}\n'.format(self.prog, message))

def make_parser():
    outputs = sorted(Outputs)
    parser = _Parser(
        prog='bullcolor',
        description='Recognize, decompose, orient and optimally colour bull-reducible Berge graphs with no antihole.'
    )
    parser.add_argument('command', choices=command_names())
    parser.add_argument('graph', nargs='?', help="Graph file, or '-' for stdin")
    parser.add_argument('--format', choices=FORMATS, help='Graph format.  Default is inferred from the file extension')
    parser.add_argument('--spec', action='append', help='Generate the input from a spec such as "hole(6)"; repeat for bench')
    parser.add_argument('--seed', type=int, default=0, help='Seed for --spec (first seed for bench)')
    parser.add_argument('--count', type=int, default=1, help='bench: seeds per spec')
    parser.add_argument('--jobs', type=int, default=1, help='bench: worker processes')
    parser.add_argument('--weights', help='File of per-vertex integer weights')
    parser.add_argument('--certificate', help='verify: certificate file to check')
    parser.add_argument('--oracle-cap', type=int, default=ProgramGlobals['oracle_cap'],
        help='Largest graph checked against the exact oracle (default %(default)s)')
    parser.add_argument('--vertex-cap', type=int, default=ProgramGlobals['vertex_cap'],
        help='Largest graph accepted, at most {} (default %(default)s)'.format(MAX_VERTEX_CAP))
    parser.add_argument('--replication-cap', type=int, default=ProgramGlobals['replication_cap'],
        help='Largest weighted blow-up (default %(default)s)')
    parser.add_argument('--emit', choices=outputs, default='text', help='Output rendering')
    parser.add_argument('--out', default='-', help="Output file, '-' for stdout")
    parser.add_argument('--describe', action='store_true', help='Print the description of the --emit rendering and exit')
    parser.add_argument('--verbose', help='Log each step to stderr.', action="store_true")
    parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)
    parser.add_argument('--debug', nargs='?', help='Run with debugger.  pdb by default, ipdb works as well, anything with a post_mortem() function should.', const='pdb')
    return parser

_exit_status = (
    (InputError, EXIT_USAGE),
    (OSError, EXIT_USAGE),
    (ClassViolation, EXIT_REFUSED),
    (Refusal, EXIT_REFUSED),
    (GenerationError, EXIT_REFUSED),
    (InternalError, EXIT_FAILED),
)

def main(argv = None):
    """Run the tool; returns the exit status."""
    if argv is None:
        argv = sys.argv[1:]

    parser = make_parser()
    args = parser.parse_args(argv)

    # Enable debugging if requested
    if args.debug:
        post_mortem = importlib.import_module(args.debug).post_mortem
        def info(type, value, tb):
            traceback.print_exception(type, value, tb)
            post_mortem(tb)
        sys.excepthook = info

    if not 1 <= args.vertex_cap <= MAX_VERTEX_CAP:
        parser.error('--vertex-cap must be between 1 and {}'.format(MAX_VERTEX_CAP))
    ProgramGlobals['verbose'] = args.verbose
    ProgramGlobals['oracle_cap'] = args.oracle_cap
    ProgramGlobals['vertex_cap'] = args.vertex_cap
    ProgramGlobals['replication_cap'] = args.replication_cap

    if args.describe:
        print(Outputs.docs(args.emit))
        return 0

    try:
        report = run_command(args)
        Outputs.output(args.emit)(output=args.out).execute(report)
    except tuple(kls for kls, _ in _exit_status) as e:
        if args.debug:
            raise
        print('bullcolor: {}'.format(e), file=sys.stderr)
        return next(status for kls, status in _exit_status if isinstance(e, kls))
    return report.status

if __name__ == '__main__':
    sys.exit(main())
