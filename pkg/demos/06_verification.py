"""
Brute-force verification suites
===============================

Five suites re-check the structural theorems from scratch: composition
identities, one-sided ideal geometry, centralizer dimensions, the census
and lattice, and the orbit structure.  Each prints one line per law with
the number of instances checked.  (This demo runs the two fastest; the
command line runs them all: ``splitoct verify --suite all``.)
"""

from splitoct import run_suite

for suite, field in (("identities", 2), ("centralizers", 3)):
    for result in run_suite(suite, field):
        print("\n".join(result.lines()))
        print()
