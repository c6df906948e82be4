#!/usr/bin/env python3
"""Solve a DIMACS CNF file with python-sat and print an s/v transcript."""

import sys

from pysat.formula import CNF
from pysat.solvers import Cadical153


def main() -> int:
    if len(sys.argv) != 2:
        print("usage: pysat_solve.py FILE.cnf", file=sys.stderr)
        return 1
    formula = CNF(from_file=sys.argv[1])
    with Cadical153(bootstrap_with=formula.clauses) as solver:
        if not solver.solve():
            print("s UNSATISFIABLE")
            return 20
        model = set(solver.get_model() or [])
    values = [v if v in model else -v for v in range(1, formula.nv + 1)]
    print("s SATISFIABLE")
    for i in range(0, len(values), 20):
        print("v " + " ".join(map(str, values[i:i + 20])))
    print("v 0")
    return 10


if __name__ == "__main__":
    sys.exit(main())
