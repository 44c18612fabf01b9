#!/usr/bin/env python
#
#    gndb.py
#    Run one of the gndb commands: analyze, scan, verify, gen or count.
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

import sys
from balstats._version import __version__
from gndb import analyze, count, gen, scan, verify

COMMANDS = {
    "analyze": analyze.main,
    "scan": scan.main,
    "verify": verify.main,
    "gen": gen.main,
    "count": count.main,
}

USAGE = """usage: gndb <command> [options]

 commands:
   analyze   classify one graph (DB, NDB, k-GDB, k-GNDB)
   scan      classify every connected graph up to n vertices
   verify    check the balance theorems up to n vertices
   gen       write a named family graph
   count     count connected graphs up to n vertices

 gndb <command> -h shows the options of a command.
"""

def main(argv=None):
    if argv is None:
        argv = sys.argv[1:]
    if not argv or argv[0] in ("-h", "--help"):
        sys.stdout.write(USAGE)
        return 0 if argv else 2
    if argv[0] == "--version":
        print("gndb v%s" % __version__)
        return 0
    if argv[0] not in COMMANDS:
        sys.stderr.write(USAGE)
        print("gndb: error: unknown command %r" % argv[0], file=sys.stderr)
        return 2
    return COMMANDS[argv[0]](argv[1:])

if __name__ == "__main__":
    sys.exit(main())
