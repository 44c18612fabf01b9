#!/usr/bin/env python
#
#    gndb.scan.py
#    Classify every connected graph up to n vertices and report the k-GNDB matches.
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

import sys, argparse
import balstats.codec as codec
import balstats.gndbopts as gopts
import balstats.search as search


def build_parser():
    parser = argparse.ArgumentParser(prog="gndb.scan", description="Classify every connected graph with at most n vertices and report the k-GNDB graphs.", formatter_class=argparse.RawTextHelpFormatter)
    gopts.add_version_argument(parser)
    parser.add_argument("-n", "--n", dest="n_max", required=True, type=gopts.order, help="Largest number of vertices (1..9)")
    gopts.add_k_argument(parser)
    parser.add_argument("--gamma", default=None, type=gopts.positive_int, help="Keep only matches with this gamma")
    parser.add_argument("-c", "--corpus", default=None, type=str, help="Read the graphs from this graph6 file instead of generating them")
    gopts.add_jobs_argument(parser)
    parser.add_argument("--paranoid", action="store_true", help="Classify every graph (no pruning) and check the pruning rules and distances")
    gopts.add_output_arguments(parser, timing=True)
    return parser

def main(argv=None):
    if argv is None:
        argv = sys.argv[1:]
    args = build_parser().parse_args(argv)
    my_logger, handler = gopts.start_log(args, argv)
    try:
        jobs = gopts.resolve_jobs(args)
        report = search.scan(args.n_max, args.ks, gamma=args.gamma, corpus=args.corpus, jobs=jobs,
                             paranoid=args.paranoid, quiet=args.quiet, my_logger=my_logger)
    except (ValueError, IOError) as e:
        my_logger.info('Error: %s', e)
        gopts.end_log(my_logger, handler)
        gopts.fail(e)

    sys.stdout.write(codec.report_serialize(report, mode="summary", timing=True))
    if args.out:
        gopts.write_document(codec.report_serialize(report, mode="json", timing=args.timing), args.out)
        my_logger.info('Report: %s', args.out)
    gopts.end_log(my_logger, handler)
    return 0

if __name__ == "__main__":
    sys.exit(main())
