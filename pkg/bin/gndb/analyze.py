#!/usr/bin/env python
#
#    gndb.analyze.py
#    Classify one graph as DB, NDB, k-GDB and k-GNDB.
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
import balstats.balance as bal
import balstats.codec as codec
import balstats.gndbopts as gopts


def build_parser():
    parser = argparse.ArgumentParser(prog="gndb.analyze", description="Classify one connected graph as DB, NDB, k-GDB and k-GNDB.", formatter_class=argparse.RawTextHelpFormatter)
    gopts.add_version_argument(parser)
    gopts.add_input_arguments(parser)
    gopts.add_k_argument(parser)
    parser.add_argument("-e", "--edges", action="store_true", help="Print |W_ab|, |W_ba| and the D table of every edge")
    gopts.add_output_arguments(parser)
    return parser

def main(argv=None):
    if argv is None:
        argv = sys.argv[1:]
    args = build_parser().parse_args(argv)
    my_logger, handler = gopts.start_log(args, argv)
    try:
        g = gopts.load_graph(args)
        my_logger.info('Graph: %s', codec.graph6_encode(g))
        my_logger.info('k values: %s', " ".join(str(k) for k in args.ks))
        bc = bal.classify(g, args.ks)
    except (ValueError, IOError) as e:
        my_logger.info('Error: %s', e)
        gopts.end_log(my_logger, handler)
        gopts.fail(e)

    sys.stdout.write(codec.report_serialize(bc, mode="summary", edges=args.edges))
    if args.out:
        gopts.write_document(codec.report_serialize(bc, mode="json", edges=args.edges), args.out)
        my_logger.info('Report: %s', args.out)
    my_logger.info('DB: %s, NDB gamma: %s', bc.is_db, bc.ndb_gamma)
    for k in bc.ks:
        my_logger.info('k = %d: GDB %s, GNDB gamma %s', k, bc.kgdb[k], bc.kgndb[k])
    gopts.end_log(my_logger, handler)
    return 0

if __name__ == "__main__":
    sys.exit(main())
