#!/usr/bin/env python
#
#    gndbopts.py
#    BalStats
#    Command line options and input/output helpers shared by the gndb commands.
#
#    Part of GNDB
#    GNDB: Generalized Nicely Distance-Balanced graphs
#
#    This program is free software: you can redistribute it and/or modify
#    it under the terms of the GNU General Public License as published by
#    the Free Software Foundation, either version 3 of the License, or
#    (at your option) any later version.
#
#    This program is distributed in the hope that it will be useful,
#    but WITHOUT ANY WARRANTY; without even the implied warranty of
#    MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#    GNU General Public License for more details.
#
#    You should have received a copy of the GNU General Public License
#    along with this program.  If not, see <http://www.gnu.org/licenses/>.
#

from ._version import __version__
import os, sys, argparse
import logging
from . import codec, families
from .enumeration import MAX_ORDER

JOBS_ENV = "GNDB_JOBS"


def positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected a positive integer, got %r" % text)
    if value < 1:
        raise argparse.ArgumentTypeError("expected a positive integer, got %r" % text)
    return value

def order(text):
    value = positive_int(text)
    if value > MAX_ORDER:
        raise argparse.ArgumentTypeError("n must be in 1..%d, got %d" % (MAX_ORDER, value))
    return value

def add_version_argument(parser):
    parser.add_argument("--version", action="version", version="%(prog)s v{version}".format(version=__version__))

def add_k_argument(parser):
    parser.add_argument("-k", "--k", dest="ks", default=[1, 2, 3], type=positive_int, nargs='+', help="One or more values of k (default 1 2 3)")

def add_jobs_argument(parser):
    parser.add_argument("-j", "--jobs", default=None, type=positive_int, help="Number of worker processes (default $%s, else 1)" % JOBS_ENV)

def add_input_arguments(parser):
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("-g", "--graph6", type=str, help="Graph in graph6 format, or - to read it from standard input")
    source.add_argument("-F", "--family", type=str, help="Named family: complete:N, bipartite:M,N, cycle:N, path:N or star:N")
    source.add_argument("-a", "--adjlist", type=str, help="Adjacency list file, one 'v: u1 u2 ...' line per vertex")

def add_output_arguments(parser, timing=False):
    parser.add_argument("-o", "--out", default=None, type=str, help="Write the JSON report document to this file")
    parser.add_argument("--log", default=None, type=str, help="Log filename (default: --out with a .log extension, else no log)")
    parser.add_argument("-q", "--quiet", action="store_true", help="Do not display progress bars. (default False)")
    if timing:
        parser.add_argument("--timing", action="store_true", help="Include wall times in the JSON report (default False)")

def resolve_jobs(args):
    if args.jobs is not None:
        return args.jobs
    env = os.environ.get(JOBS_ENV)
    if not env:
        return 1
    try:
        return positive_int(env)
    except argparse.ArgumentTypeError:
        raise ValueError("%s must be a positive integer, got %r" % (JOBS_ENV, env))

def load_graph(args):
    """Graph from whichever of --graph6, --family or --adjlist was given."""
    if args.graph6 is not None:
        text = sys.stdin.read() if args.graph6 == "-" else args.graph6
        records = codec.read_graph6(text.splitlines())
        if len(records) != 1:
            raise ValueError("expected one graph6 record, got %d" % len(records))
        return codec.graph6_decode(records[0])
    elif args.family is not None:
        return families.from_spec(args.family)
    else:
        with open(args.adjlist, 'r') as f:
            return codec.adjlist_parse(f.read())

def log_filename(args):
    if args.log:
        return args.log
    if args.out:
        return os.path.splitext(args.out)[0] + '.log'
    return None

def start_log(args, argv):
    """Attach a log file handler to the root logger and log the run header."""
    my_logger = logging.getLogger()
    filename = log_filename(args)
    if filename is None:
        return my_logger, None
    my_logger.setLevel(logging.INFO)
    formatter = logging.Formatter('%(asctime)s %(message)s', '%Y-%m-%d %I:%M:%S %p')
    handler = logging.FileHandler(filename, mode='w')
    handler.setLevel(logging.INFO)
    handler.setFormatter(formatter)
    my_logger.addHandler(handler)
    my_logger.info('BEGIN')
    my_logger.info('Command: %s', ' '.join([os.path.basename(sys.argv[0])] + list(argv)))
    my_logger.info('GNDB Version: %s', __version__)
    return my_logger, handler

def end_log(my_logger, handler):
    if handler is None:
        return
    my_logger.info('END')
    my_logger.removeHandler(handler)
    handler.close()

def write_document(text, filename):
    with open(filename, 'w') as f:
        f.write(text)

def fail(message):
    print("Error: %s" % message, file=sys.stderr)
    sys.exit(1)
