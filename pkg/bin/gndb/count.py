#!/usr/bin/env python
#
#    gndb.count.py
#    Count the isomorphism classes of connected graphs for each order.
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

import sys, json, argparse
import balstats.enumeration as enumeration
import balstats.gndbopts as gopts
from balstats.codec import SCHEMA_VERSION
from resources import resources


def build_parser():
    parser = argparse.ArgumentParser(prog="gndb.count", description="Count the connected graphs on 1..n vertices, one per isomorphism class.", formatter_class=argparse.RawTextHelpFormatter)
    gopts.add_version_argument(parser)
    parser.add_argument("-n", "--n", dest="n_max", required=True, type=gopts.order, help="Largest number of vertices (1..9)")
    parser.add_argument("-o", "--out", default=None, type=str, help="Write the counts as a JSON document to this file")
    return parser

def main(argv=None):
    if argv is None:
        argv = sys.argv[1:]
    args = build_parser().parse_args(argv)
    counts = enumeration.count_classes(args.n_max)

    print("   n    classes  published")
    for n in sorted(counts):
        print("  %2d %10d %10d" % (n, counts[n], resources.connected_counts[n]))
    print(" " + " ".join(str(counts[n]) for n in sorted(counts)))
    if args.out:
        doc = {
            "schema": SCHEMA_VERSION,
            "kind": "count",
            "inputs": {"n_max": args.n_max},
            "counts": [{"n": n, "count": counts[n]} for n in sorted(counts)],
        }
        gopts.write_document(json.dumps(doc, indent=2) + "\n", args.out)
    return 0

if __name__ == "__main__":
    sys.exit(main())
