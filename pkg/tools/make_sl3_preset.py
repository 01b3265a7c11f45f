#!/usr/bin/env python3
"""Generate the sl3r_horocycle preset from defining 3x3 matrices.

The structure constants are read off from matrix commutators of the
standard basis (diagonal H1, H2; upper X12, X13, X23; lower Y21, Y31,
Y32), so the file is produced by a route independent of the library's
bracket code. The subgroup part is the full upper-triangular nilpotent
algebra (the centralizer part of the diagonal is zero for sl3); the
complement is the rotation part R_ab = X_ab - Y_ba together with the
diagonal. Component reps are the adjoint images of the three nontrivial
sign matrices diag(e1, e2, e3) with det 1, which represent the
components of the centralizer subgroup.

Run from the repository root:  python3 tools/make_sl3_preset.py
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path


def mat(entries):
    return [[Fraction(e) for e in row] for row in entries]


def unit_matrix(i, j):
    m = [[Fraction(0)] * 3 for _ in range(3)]
    m[i][j] = Fraction(1)
    return m


def sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3)] for i in range(3)]


def comm(a, b):
    return sub(mul(a, b), mul(b, a))


def flat(m):
    return tuple(e for row in m for e in row)


BASIS = {
    "H1": sub(unit_matrix(0, 0), unit_matrix(1, 1)),
    "H2": sub(unit_matrix(1, 1), unit_matrix(2, 2)),
    "X12": unit_matrix(0, 1),
    "X13": unit_matrix(0, 2),
    "X23": unit_matrix(1, 2),
    "Y21": unit_matrix(1, 0),
    "Y31": unit_matrix(2, 0),
    "Y32": unit_matrix(2, 1),
}
NAMES = list(BASIS)


def coords(m):
    """Coordinates of a traceless matrix in the basis, by direct solve of
    the 9 entry equations (the basis entries are unit patterns, so this is
    a lookup, not an elimination)."""
    out = {}
    rem = [row[:] for row in m]
    assignments = [
        ("X12", 0, 1), ("X13", 0, 2), ("X23", 1, 2),
        ("Y21", 1, 0), ("Y31", 2, 0), ("Y32", 2, 1),
    ]
    for name, i, j in assignments:
        if rem[i][j]:
            out[name] = rem[i][j]
            rem[i][j] = Fraction(0)
    # diagonal: a*H1 + b*H2 = diag(a, b - a, -b)
    a = rem[0][0]
    b = -rem[2][2]
    if a:
        out["H1"] = a
    if b:
        out["H2"] = b
    check = [[Fraction(0)] * 3 for _ in range(3)]
    for name, c in out.items():
        for i in range(3):
            for j in range(3):
                check[i][j] += c * BASIS[name][i][j]
    assert flat(check) == flat(m), "matrix is outside the span of the basis"
    return out


def main():
    brackets = []
    for i, a in enumerate(NAMES):
        for b in NAMES[i + 1:]:
            c = coords(comm(BASIS[a], BASIS[b]))
            if c:
                brackets.append([a, b, {k: str(v) for k, v in sorted(c.items())}])

    # independent Jacobi check at the matrix level
    for a in NAMES:
        for b in NAMES:
            for c in NAMES:
                lhs = comm(comm(BASIS[a], BASIS[b]), BASIS[c])
                lhs = [[x + y for x, y in zip(r1, r2)] for r1, r2 in
                       zip(lhs, comm(comm(BASIS[b], BASIS[c]), BASIS[a]))]
                lhs = [[x + y for x, y in zip(r1, r2)] for r1, r2 in
                       zip(lhs, comm(comm(BASIS[c], BASIS[a]), BASIS[b]))]
                assert all(e == 0 for row in lhs for e in row)

    def adjoint_of_sign(e1, e2, e3):
        g = [[Fraction(e1), 0, 0], [0, Fraction(e2), 0], [0, 0, Fraction(e3)]]
        cols = []
        for name in NAMES:
            img = mul(mul(g, BASIS[name]), g)  # g == g^{-1} for sign matrices
            cv = coords(img)
            cols.append([str(cv.get(nm, Fraction(0))) for nm in NAMES])
        return [[cols[j][i] for j in range(len(NAMES))] for i in range(len(NAMES))]

    reps = [
        {"name": f"Ad(diag({e1},{e2},{e3}))", "matrix": adjoint_of_sign(e1, e2, e3)}
        for e1, e2, e3 in [(1, -1, -1), (-1, 1, -1), (-1, -1, 1)]
    ]

    data = {
        "name": "sl3r_horocycle",
        "description": (
            "sl(3,R) with the horocycle-space setup generated from the defining "
            "3x3 matrices: h is the strictly upper nilpotent part (the diagonal "
            "centralizer part is zero), the complement joins the diagonal H1, H2 "
            "with the rotations R12 = X12 - Y21, R13 = X13 - Y31, R23 = X23 - Y32. "
            "The component reps are the adjoint actions of the nontrivial sign "
            "matrices diag(+-1) with determinant one; they represent the "
            "components of the disconnected centralizer subgroup and act "
            "trivially on the diagonal. Expected invariants: polynomials in "
            "H1 and H2."
        ),
        "basis": NAMES,
        "brackets": brackets,
        "subspaces": {
            "h": {"names": ["X12", "X13", "X23"],
                  "vectors": [{"X12": "1"}, {"X13": "1"}, {"X23": "1"}]},
            "m": {"names": ["H1", "H2", "R12", "R13", "R23"],
                  "vectors": [
                      {"H1": "1"}, {"H2": "1"},
                      {"X12": "1", "Y21": "-1"},
                      {"X13": "1", "Y31": "-1"},
                      {"X23": "1", "Y32": "-1"}
                  ]},
            "a": {"vectors": [{"H1": "1"}, {"H2": "1"}]},
            "k0": {"vectors": [
                {"X12": "1", "Y21": "-1"},
                {"X13": "1", "Y31": "-1"},
                {"X23": "1", "Y32": "-1"}
            ]},
            "n": {"vectors": [{"X12": "1"}, {"X13": "1"}, {"X23": "1"}]}
        },
        "chi": ["0", "0", "0"],
        "component_reps": reps,
        "metadata": {"family": "horocycle"},
    }
    out = Path(__file__).resolve().parent.parent / "src" / "invarops" / "presets" / "sl3r_horocycle.json"
    out.write_text(json.dumps(data, indent=2) + "\n", encoding="utf-8")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
