#!/usr/bin/env python
#
#    gndb.verify.py
#    Check the balance theorems over every connected graph up to n vertices.
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

#predicate inverted by --self-test; checked at every n
SELF_TEST_FAULT = "class_count"


def build_parser():
    parser = argparse.ArgumentParser(prog="gndb.verify", description="Check the balance theorems over every connected graph with at most n vertices.\n Exits with status 1 when any violation is found.", formatter_class=argparse.RawTextHelpFormatter)
    gopts.add_version_argument(parser)
    parser.add_argument("-n", "--n", dest="n_max", required=True, type=gopts.order, help="Largest number of vertices (1..9)")
    gopts.add_jobs_argument(parser)
    parser.add_argument("--self-test", dest="self_test", action="store_true", help="Invert the %s predicate; the run must then fail" % SELF_TEST_FAULT)
    gopts.add_output_arguments(parser, timing=True)
    return parser

def main(argv=None):
    if argv is None:
        argv = sys.argv[1:]
    args = build_parser().parse_args(argv)
    my_logger, handler = gopts.start_log(args, argv)
    fault = SELF_TEST_FAULT if args.self_test else None
    try:
        jobs = gopts.resolve_jobs(args)
        report = search.verify_theorems(args.n_max, jobs=jobs, fault=fault, quiet=args.quiet, my_logger=my_logger)
    except (ValueError, IOError) as e:
        my_logger.info('Error: %s', e)
        gopts.end_log(my_logger, handler)
        gopts.fail(e)

    sys.stdout.write(codec.report_serialize(report, mode="summary", timing=True))
    if args.out:
        gopts.write_document(codec.report_serialize(report, mode="json", timing=args.timing), args.out)
        my_logger.info('Report: %s', args.out)
    if report.violations:
        print(" FAILED: %d violation%s" % (len(report.violations), "s" if len(report.violations) > 1 else ""))
    else:
        print(" OK")
    gopts.end_log(my_logger, handler)
    return 0 if report.ok else 1

if __name__ == "__main__":
    sys.exit(main())
