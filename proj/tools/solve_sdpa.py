#!/usr/bin/env python3
"""Solve an SDPA sparse (.dat-s) file with cvxpy and print the optimum.

The file encodes  min c^T x  s.t.  sum_i x_i F_i - F_0 >= 0  blockwise.
Prints the value of  max -c^T x  (the bound the exporter encodes) and its floor.
"""
import argparse
import math
import re
import sys
from fractions import Fraction

import cvxpy as cp
import numpy as np


def tokens(text):
    for line in text.splitlines():
        line = line.strip()
        if not line or line[0] in "*\"":
            continue
        yield [t for t in re.split(r"[\s,(){}]+", line) if t]


def parse(path):
    with open(path) as f:
        lines = list(tokens(f.read()))
    m = int(lines[0][0])
    nblocks = int(lines[1][0])
    sizes = [int(v) for v in lines[2][:nblocks]]
    c = np.array([float(Fraction(v)) for v in lines[3][:m]])
    entries = []
    for row in lines[4:]:
        mat, blk, i, j = (int(v) for v in row[:4])
        entries.append((mat, blk - 1, i - 1, j - 1, float(Fraction(row[4]))))
    return m, sizes, c, entries


def solve(path, solver):
    m, sizes, c, entries = parse(path)
    x = cp.Variable(m)
    per_block = [[] for _ in sizes]
    for e in entries:
        per_block[e[1]].append(e)
    constraints = []
    for b, size in enumerate(sizes):
        dim = abs(size)
        mats = {}
        for mat, _, i, j, v in per_block[b]:
            a = mats.setdefault(mat, np.zeros((dim, dim)))
            a[i, j] = v
            a[j, i] = v
        f0 = mats.pop(0, np.zeros((dim, dim)))
        if size < 0:
            coeff = np.zeros((dim, m))
            for mat, a in mats.items():
                coeff[:, mat - 1] = np.diag(a)
            constraints.append(coeff @ x >= np.diag(f0))
        else:
            expr = -f0
            for mat, a in mats.items():
                expr = expr + x[mat - 1] * a
            constraints.append((expr + expr.T) / 2 >> 0)
    prob = cp.Problem(cp.Minimize(c @ x), constraints)
    prob.solve(solver=solver)
    return prob.status, -prob.value


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("path")
    ap.add_argument("--solver", default="CLARABEL")
    args = ap.parse_args()
    status, value = solve(args.path, args.solver)
    if status not in ("optimal", "optimal_inaccurate"):
        print(f"status {status}")
        return 3
    print(f"status {status}")
    print(f"value {value:.10f}")
    print(f"floor {math.floor(value)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
