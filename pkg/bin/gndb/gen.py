#!/usr/bin/env python
#
#    gndb.gen.py
#    Write a named family graph in graph6 or adjacency-list format.
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
import balstats.families as families
import balstats.graphs as graphs
import balstats.gndbopts as gopts


def build_parser():
    parser = argparse.ArgumentParser(prog="gndb.gen", description="Write a named family graph to standard output.", formatter_class=argparse.RawTextHelpFormatter)
    gopts.add_version_argument(parser)
    parser.add_argument("-F", "--family", required=True, type=str, help="complete:N, bipartite:M,N, cycle:N, path:N or star:N")
    parser.add_argument("--canonical", action="store_true", help="Relabel the graph canonically first")
    parser.add_argument("--adjlist", action="store_true", help="Write an adjacency list instead of graph6")
    return parser

def main(argv=None):
    if argv is None:
        argv = sys.argv[1:]
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        g = families.from_spec(args.family)
    except ValueError as e:
        parser.error(str(e))
    if args.canonical:
        g = graphs.canonical_graph(g)
    if args.adjlist:
        sys.stdout.write(codec.adjlist_emit(g))
    else:
        print(codec.graph6_encode(g))
    return 0

if __name__ == "__main__":
    sys.exit(main())
