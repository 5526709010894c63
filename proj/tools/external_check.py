#!/usr/bin/env python3
# Copyright 2026 The cvxdom Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Re-solve exported LP/MPS models with an independent MIP solver.

Usage: external_check.py MODEL [MODEL...]

Each MODEL is an .lp or .mps file as written by `cvxdom export`. For every
model the script prints "<basename> <optimum>" on stdout. Exit codes: 0 on
success, 1 on a parse/usage error, 2 if the solver fails to prove optimality,
3 if no MIP solver is available in this interpreter.
"""

import os
import re
import sys


def fail(msg, code=1):
    print("external_check: " + msg, file=sys.stderr)
    sys.exit(code)


def parse_mps(lines):
    """Returns (objective_terms, rows) for a G-rows-only binary MPS model.

    objective_terms maps var -> coeff; rows maps row name -> (terms, rhs).
    """
    section = None
    obj_row = None
    obj = {}
    rows = {}
    order = []
    for raw in lines:
        line = raw.rstrip()
        if not line:
            continue
        if not raw[0].isspace():
            section = line.split()[0]
            continue
        fields = line.split()
        if section == "ROWS":
            kind, name = fields[0], fields[1]
            if kind == "N":
                obj_row = name
            elif kind == "G":
                rows[name] = ({}, 0)
                order.append(name)
            else:
                fail("unsupported row kind " + kind)
        elif section == "COLUMNS":
            var = fields[0]
            for at in range(1, len(fields), 2):
                row, coeff = fields[at], int(fields[at + 1])
                if row == obj_row:
                    obj[var] = obj.get(var, 0) + coeff
                else:
                    rows[row][0][var] = rows[row][0].get(var, 0) + coeff
        elif section == "RHS":
            for at in range(1, len(fields), 2):
                row, value = fields[at], int(fields[at + 1])
                rows[row] = (rows[row][0], value)
        elif section == "BOUNDS":
            if fields[0] != "BV":
                fail("unsupported bound kind " + fields[0])
        elif section == "NAME":
            pass
    if obj_row is None:
        fail("MPS model has no objective row")
    return obj, [(name,) + rows[name] for name in order]


LP_TERM = re.compile(r"([+-])?\s*(\d+\s*\*?\s*)?([A-Za-z_][A-Za-z0-9_]*)")


def parse_lp_terms(text):
    terms = {}
    for sign, coeff, var in LP_TERM.findall(text):
        value = int(coeff.rstrip("* \t")) if coeff else 1
        if sign == "-":
            value = -value
        terms[var] = terms.get(var, 0) + value
    return terms


def parse_lp(lines):
    """Parses the Minimize / Subject To / Binary subset of CPLEX LP text."""
    section = None
    obj_text = ""
    row_texts = []
    for raw in lines:
        line = raw.split("\\")[0].rstrip()
        if not line.strip():
            continue
        word = line.strip().lower()
        if word in ("minimize", "subject to", "binary", "end", "general"):
            section = word
            continue
        if section == "minimize":
            obj_text += " " + line
        elif section == "subject to":
            if ":" in line:
                row_texts.append(line)
            elif row_texts:
                row_texts[-1] += " " + line  # wrapped continuation
            else:
                fail("constraint text before any row name")
    if ":" in obj_text:
        obj_text = obj_text.split(":", 1)[1]
    rows = []
    for text in row_texts:
        name, body = text.split(":", 1)
        body, rhs = body.rsplit(">=", 1)
        rows.append((name.strip(), parse_lp_terms(body), int(rhs)))
    return parse_lp_terms(obj_text), rows


def solve(obj, rows):
    try:
        import numpy as np
        from scipy.optimize import Bounds, LinearConstraint, milp
    except ImportError:
        fail("no MIP solver available (scipy missing)", code=3)

    cols = sorted(obj)
    index = {var: c for c, var in enumerate(cols)}
    c = np.array([obj[var] for var in cols], dtype=float)
    a = np.zeros((len(rows), len(cols)))
    lb = np.zeros(len(rows))
    for r, (_, terms, rhs) in enumerate(rows):
        for var, coeff in terms.items():
            if var not in index:
                fail("row references unknown variable " + var)
            a[r, index[var]] = coeff
        lb[r] = rhs
    result = milp(
        c,
        constraints=LinearConstraint(a, lb=lb, ub=np.inf),
        integrality=np.ones(len(cols)),
        bounds=Bounds(0, 1),
    )
    if not result.success:
        fail("solver did not reach optimality: " + str(result.message), code=2)
    return round(result.fun)


def main(argv):
    if len(argv) < 2:
        fail("usage: external_check.py MODEL [MODEL...]")
    for path in argv[1:]:
        with open(path, "r", encoding="utf-8") as handle:
            lines = handle.readlines()
        if path.endswith(".mps"):
            obj, rows = parse_mps(lines)
        elif path.endswith(".lp"):
            obj, rows = parse_lp(lines)
        else:
            fail("unknown model suffix on " + path)
        print(os.path.basename(path), solve(obj, rows))
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
