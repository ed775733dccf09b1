#!/usr/bin/env python3
"""Generate the built-in catalog data files under data/.

Structure constants are computed exactly (fractions) from matrix models:
so(4), so(3), su(2), sp(n) over the quaternions, and two small solvable
algebras.  Each output file follows the input schema documented in the
README (basis, gamma triples, index sets, module data, smoothness).
"""

import json
import math
import os
import sys
from fractions import Fraction
from itertools import combinations


def frac_str(q):
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}" if q.denominator != 1 else str(q.numerator)


# ---------------------------------------------------------------------------
# matrix helpers (dense, Fraction entries)

def mat_zero(n):
    return [[Fraction(0)] * n for _ in range(n)]


def E(n, i, j):
    """Antisymmetric generator E_ij = e_i e_j^T - e_j e_i^T (0-based)."""
    m = mat_zero(n)
    m[i][j] = Fraction(1)
    m[j][i] = Fraction(-1)
    return m


def mat_mul(a, b):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def mat_sub(a, b):
    n = len(a)
    return [[a[i][j] - b[i][j] for j in range(n)] for i in range(n)]


def bracket(a, b):
    return mat_sub(mat_mul(a, b), mat_mul(b, a))


def mat_dot(a, b):
    """Entrywise dot product (trace of a b^T)."""
    return sum(a[i][j] * b[i][j] for i in range(len(a)) for j in range(len(a)))


def expand(x, basis, weights):
    """Coefficients of x in a basis orthogonal under the entrywise dot."""
    return [mat_dot(x, e) / w for e, w in zip(basis, weights)]


def gamma_from_matrices(basis, scale=2):
    """Structure constants w.r.t. the given basis, declared Q-orthonormal
    under Q = (entrywise dot) / scale.

    Entries must pairwise orthogonalize; the normalization ratios
    sqrt(w_c / (w_a w_b)) must be rational.
    """
    n = len(basis)
    raw_w = [mat_dot(e, e) for e in basis]
    weights = [w / Fraction(scale) for w in raw_w]
    for a, b in combinations(range(n), 2):
        assert mat_dot(basis[a], basis[b]) == 0, (a, b)
    gamma = {}
    for a in range(n):
        for b in range(n):
            if a == b:
                continue
            coeffs = expand(bracket(basis[a], basis[b]), basis, raw_w)
            for c, coef in enumerate(coeffs):
                if coef == 0:
                    continue
                ratio = weights[c] / (weights[a] * weights[b])
                root = Fraction(
                    math.isqrt(ratio.numerator), math.isqrt(ratio.denominator))
                assert root * root == ratio, (a, b, c, ratio)
                gamma[(a, b, c)] = coef * root
    return gamma


# ---------------------------------------------------------------------------
# quaternions as 4-tuples (1, i, j, k)

def qmul(p, q):
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return (
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def qconj(p):
    a, b, c, d = p
    return (a, -b, -c, -d)


QZERO = (Fraction(0),) * 4
QONE = (Fraction(1), Fraction(0), Fraction(0), Fraction(0))
QI = (Fraction(0), Fraction(1), Fraction(0), Fraction(0))
QJ = (Fraction(0), Fraction(0), Fraction(1), Fraction(0))
QK = (Fraction(0), Fraction(0), Fraction(0), Fraction(1))
QUNITS = [QONE, QI, QJ, QK]


def qmat_zero(n):
    return [[QZERO] * n for _ in range(n)]


def qmat_bracket(a, b):
    n = len(a)
    out = qmat_zero(n)
    for i in range(n):
        for j in range(n):
            s = QZERO
            for k in range(n):
                s = tuple(x + y for x, y in zip(s, qmul(a[i][k], b[k][j])))
                s = tuple(x - y for x, y in zip(s, qmul(b[i][k], a[k][j])))
            out[i][j] = s
    return out


def qmat_dot(a, b):
    """Re tr(a b*)."""
    n = len(a)
    total = Fraction(0)
    for i in range(n):
        for j in range(n):
            total += qmul(a[i][j], qconj(b[i][j]))[0]
    return total


def sp_basis(n):
    """Basis of sp(n): h = sp(n-1) (lower block), p0 = Im H (top-left),
    p1 = H^{n-1} (off-diagonal first row).  Returns (basis, labels, sizes)."""
    basis, labels = [], []
    # h: lower (n-1)x(n-1) quaternionic anti-hermitian block
    for l in range(1, n):
        for q, nm in [(QI, "i"), (QJ, "j"), (QK, "k")]:
            m = qmat_zero(n)
            m[l][l] = q
            basis.append(m)
            labels.append(f"h_{nm}{l}")
    for l in range(1, n):
        for mth in range(l + 1, n):
            for q, nm in [(QONE, "1"), (QI, "i"), (QJ, "j"), (QK, "k")]:
                m = qmat_zero(n)
                m[l][mth] = q
                m[mth][l] = tuple(-x for x in qconj(q))
                basis.append(m)
                labels.append(f"h_{nm}{l}{mth}")
    dim_h = len(basis)
    # p0: Im H at (0,0)
    for q, nm in [(QI, "i"), (QJ, "j"), (QK, "k")]:
        m = qmat_zero(n)
        m[0][0] = q
        basis.append(m)
        labels.append(f"X_{nm}")
    # p1: off-diagonal first row
    for l in range(1, n):
        for q, nm in [(QONE, "1"), (QI, "i"), (QJ, "j"), (QK, "k")]:
            m = qmat_zero(n)
            m[0][l] = q
            m[l][0] = tuple(-x for x in qconj(q))
            basis.append(m)
            labels.append(f"Y_{nm}{l}")
    return basis, labels, dim_h


def gamma_from_qmatrices(basis):
    n = len(basis)
    weights = [qmat_dot(e, e) for e in basis]
    for a, b in combinations(range(n), 2):
        assert qmat_dot(basis[a], basis[b]) == 0, (a, b)
    gamma = {}
    for a in range(n):
        for b in range(n):
            if a == b:
                continue
            br = qmat_bracket(basis[a], basis[b])
            coeffs = [qmat_dot(br, e) / w for e, w in zip(basis, weights)]
            # verify the expansion is exact
            recon = qmat_zero(len(basis[0]))
            for c, e in zip(coeffs, basis):
                for i in range(len(recon)):
                    for j in range(len(recon)):
                        recon[i][j] = tuple(
                            x + c * y for x, y in zip(recon[i][j], e[i][j]))
            for i in range(len(recon)):
                for j in range(len(recon)):
                    assert recon[i][j] == br[i][j], (a, b)
            for c, coef in enumerate(coeffs):
                if coef == 0:
                    continue
                ratio = weights[c] / (weights[a] * weights[b])
                root = Fraction(
                    math.isqrt(ratio.numerator), math.isqrt(ratio.denominator))
                assert root * root == ratio, (a, b, c, ratio)
                gamma[(a, b, c)] = coef * root
    return gamma


# ---------------------------------------------------------------------------
# consistency checks on the generated structure constants

def check_jacobi(gamma, dim):
    def g(i, j, u):
        return gamma.get((i, j, u), Fraction(0))

    for i in range(dim):
        for j in range(dim):
            for k in range(dim):
                for u in range(dim):
                    s = sum(
                        g(i, j, t) * g(t, k, u)
                        + g(j, k, t) * g(t, i, u)
                        + g(k, i, t) * g(t, j, u)
                        for t in range(dim))
                    assert s == 0, (i, j, k, u)


def killing(gamma, dim, u, v):
    def g(i, j, k):
        return gamma.get((i, j, k), Fraction(0))

    return sum(g(u, a, b) * g(v, b, a) for a in range(dim) for b in range(dim))


# ---------------------------------------------------------------------------
# file assembly

def gamma_json(gamma):
    return [
        [i, j, u, frac_str(v)]
        for (i, j, u), v in sorted(gamma.items())
    ]


def write(name, obj, outdir):
    path = os.path.join(outdir, name + ".json")
    with open(path, "w") as f:
        json.dump(obj, f, indent=1)
        f.write("\n")
    print("wrote", path)


def term(c, d=0, phi=None, param=None):
    t = {"c": frac_str(c), "d": d}
    if phi is not None:
        t["phi"] = phi
    if param is not None:
        t["param"] = param
    return t


def main():
    outdir = sys.argv[1] if len(sys.argv) > 1 else "data"
    os.makedirs(outdir, exist_ok=True)

    # ------------------------------------------------------- example1: so(4)
    # basis: h = {E12}, p = {Z = E34}, m1 = {V1, V2}, m2 = {V3, V4}
    V1 = mat_sub(E(4, 0, 2), mat_sub(mat_zero(4), E(4, 1, 3)))  # E13 + E24
    b4 = [
        E(4, 0, 1),                                   # H (h)
        E(4, 2, 3),                                   # Z
        [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(E(4, 0, 2), E(4, 1, 3))],
        [[-a + b for a, b in zip(r1, r2)] for r1, r2 in zip(E(4, 0, 3), E(4, 1, 2))],
        [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(E(4, 0, 3), E(4, 1, 2))],
        [[-a + b for a, b in zip(r1, r2)] for r1, r2 in zip(E(4, 0, 2), E(4, 1, 3))],
    ]
    g1 = gamma_from_matrices(b4)
    check_jacobi(g1, 6)
    print("example1 B(V1,V1) =", killing(g1, 6, 2, 2), " B(Z,Z) =", killing(g1, 6, 1, 1))
    example1 = {
        "name": "example1",
        "description": "SO(2) in SO(2)xSO(2) in SO(4); singular orbit a torus",
        "basis": ["H", "Z", "V1", "V2", "V3", "V4"],
        "dim_h": 1,
        "gamma": gamma_json(g1),
        "index_I": [1],
        "index_J": [2, 3, 4, 5],
        "p_modules": {"p0": [1], "p1": [], "p2": []},
        "m_modules": {"m0": [], "irreducible": [[2, 3], [4, 5]]},
        "ad_h_modules": [[1], [2, 3], [4, 5]],
        "equivalences": [
            {
                "group": "H", "type": "complex",
                "space_a": [2, 3], "space_b": [4, 5],
                "map": [[2, 4, "1"], [3, 5, "1"]],
                "complex_structures": [[[2, 3, "1"], [3, 2, "-1"]]],
            }
        ],
        "parameters": {"a1": "1", "a2": "2"},
        "smoothness": {
            "functions": ["phi1", "phi2", "phi3", "phi4", "phi5"],
            "constraints": [
                {"a": [[1, 1, "1"]], "d": 4},
                {"a": [[2, 2, "1"], [3, 3, "1"]], "d": 2},
                {"a": [[4, 4, "1"], [5, 5, "1"]], "d": 2},
                {"a": [[2, 4, "1"], [3, 5, "1"]], "d": 2},
                {"a": [[2, 5, "1"], [3, 4, "-1"]], "d": 2},
            ],
            "ansatz": [
                {"entry": [1, 1], "terms": [term(1, 2), term(1, 4, phi=0)]},
                {"entry": [2, 2], "terms": [term(1, param="a1"), term(1, 2, phi=1)]},
                {"entry": [3, 3], "terms": [term(1, param="a1"), term(1, 2, phi=1)]},
                {"entry": [4, 4], "terms": [term(1, param="a2"), term(1, 2, phi=2)]},
                {"entry": [5, 5], "terms": [term(1, param="a2"), term(1, 2, phi=2)]},
                {"entry": [2, 4], "terms": [term(1, 2, phi=3)]},
                {"entry": [3, 5], "terms": [term(1, 2, phi=3)]},
                {"entry": [2, 5], "terms": [term(1, 2, phi=4)]},
                {"entry": [3, 4], "terms": [term(-1, 2, phi=4)]},
            ],
        },
    }
    write("example1", example1, outdir)

    # ------------------------------------------------------- example2: so(4)
    # basis: h = {E12}, p = {V1 = E13, V2 = E23}, m = {Z = E34, V3 = E14, V4 = E24}
    b4b = [E(4, 0, 1), E(4, 0, 2), E(4, 1, 2), E(4, 2, 3), E(4, 0, 3), E(4, 1, 3)]
    g2 = gamma_from_matrices(b4b)
    check_jacobi(g2, 6)
    example2 = {
        "name": "example2",
        "description": "SO(2) in SO(3) in SO(4); C=0 restriction engaged",
        "basis": ["H", "V1", "V2", "Z", "V3", "V4"],
        "dim_h": 1,
        "gamma": gamma_json(g2),
        "index_I": [1, 2],
        "index_J": [3, 4, 5],
        "p_modules": {"p0": [], "p1": [1, 2], "p2": []},
        "m_modules": {"m0": [], "irreducible": [[3, 4, 5]]},
        "ad_h_modules": [[1, 2], [3], [4, 5]],
        "equivalences": [
            {
                "group": "H", "type": "complex",
                "space_a": [1, 2], "space_b": [4, 5],
                "map": [[1, 4, "1"], [2, 5, "1"]],
                "complex_structures": [[[1, 2, "1"], [2, 1, "-1"]]],
            }
        ],
        "parameters": {"a0": "1"},
        "smoothness": {
            "functions": ["phi1", "phi2", "phi3"],
            "constraints": [
                {"a": [[1, 1, "1"], [2, 2, "1"]], "d": 4},
                {"a": [[3, 3, "1"]], "d": 2},
                {"a": [[4, 4, "1"], [5, 5, "1"]], "d": 2},
            ],
            "ansatz": [
                {"entry": [1, 1], "terms": [term(1, 2), term(1, 4, phi=0)]},
                {"entry": [2, 2], "terms": [term(1, 2), term(1, 4, phi=0)]},
                {"entry": [3, 3], "terms": [term(1, param="a0"), term(1, 2, phi=1)]},
                {"entry": [4, 4], "terms": [term(1, param="a0"), term(1, 2, phi=2)]},
                {"entry": [5, 5], "terms": [term(1, param="a0"), term(1, 2, phi=2)]},
            ],
        },
    }
    write("example2", example2, outdir)

    # ------------------------------------------------------- example3: sp(2)
    # Only n = 2 ships: for n >= 3 the orthonormal frame normalization
    # introduces sqrt(2) factors in the structure constants.
    for n in (2,):
        basis, labels, dim_h = sp_basis(n)
        g3 = gamma_from_qmatrices(basis)
        check_jacobi(g3, len(basis))
        dim = len(basis)
        p0 = list(range(dim_h, dim_h + 3))
        p1 = list(range(dim_h + 3, dim))
        # The ansatz t^2 Id + t^4 B describes smooth metrics only if the
        # identity matrix is the unit round sphere of the slice.  In the
        # trace-form normalization the round metric is diag(1,1,1,1/2,...)
        # (fiber great spheres of radius 1, base at half scale), so stretch
        # the p1 vectors by sqrt(2).  Since [p1,p1] lies in h + p0 the
        # structure constants stay rational: those components double, and
        # the background form picks up weight 2 on p1.
        p1set = set(p1)
        g3 = {
            (i, j, k): (2 * v if i in p1set and j in p1set and k not in p1set else v)
            for (i, j, k), v in g3.items()
        }
        check_jacobi(g3, dim)
        fdim = len(p1)
        funcs = [f"phi{i}{j}" for i in range(1, 4) for j in range(i, 4)]
        funcs_order = ["phi11", "phi12", "phi13", "phi22", "phi23", "phi33", "psi"]
        constraints = []
        ansatz = []
        # f_ij on p0
        pairs = [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)]
        fn_index = {f"phi{i+1}{j+1}": k for k, (i, j) in enumerate(pairs)}
        for k, (i, j) in enumerate(pairs):
            bi, bj = p0[i], p0[j]
            constraints.append({"a": [[bi, bj, "1"]], "d": 4})
            if i == j:
                ansatz.append({"entry": [bi, bj], "terms": [term(1, 2), term(1, 4, phi=k)]})
            else:
                ansatz.append({"entry": [bi, bj], "terms": [term(1, 4, phi=k)]})
        # h on p1 (one function, trace constraint)
        constraints.append({"a": [[u, u, "1"] for u in p1], "d": 4})
        for u in p1:
            ansatz.append({"entry": [u, u], "terms": [term(1, 2), term(1, 4, phi=6)]})
        ex3 = {
            "name": "example3" if n == 2 else f"example3_n{n}",
            "description": f"Sp({n}) acting on H^{n}; point singular orbit at the origin",
            "basis": labels,
            "dim_h": dim_h,
            "gamma": gamma_json(g3),
            "index_I": p0 + p1,
            "index_J": [],
            "p_modules": {"p0": p0, "p1": p1, "p2": []},
            "m_modules": {"m0": [], "irreducible": []},
            "ad_h_modules": [[u] for u in p0] + [p1],
            "equivalences": [],
            "parameters": {},
            "q_norms": ["1"] * (dim_h + 3) + ["2"] * fdim,
            "smoothness": {
                "functions": funcs_order,
                "constraints": constraints,
                "ansatz": ansatz,
            },
        }
        write(ex3["name"], ex3, outdir)

    # ------------------------------------------------------- sphere3: so(3)
    b3 = [E(3, 0, 1), E(3, 0, 2), E(3, 1, 2)]
    gs = gamma_from_matrices(b3)
    check_jacobi(gs, 3)
    sphere3 = {
        "name": "sphere3",
        "description": "SO(3)/SO(2) sphere orbits in a 3-ball",
        "basis": ["H", "V1", "V2"],
        "dim_h": 1,
        "gamma": gamma_json(gs),
        "index_I": [1, 2],
        "index_J": [],
        "p_modules": {"p0": [], "p1": [1, 2], "p2": []},
        "m_modules": {"m0": [], "irreducible": []},
        "ad_h_modules": [[1, 2]],
        "equivalences": [],
        "parameters": {},
        "smoothness": {
            "functions": ["phi"],
            "constraints": [{"a": [[1, 1, "1"], [2, 2, "1"]], "d": 4}],
            "ansatz": [
                {"entry": [1, 1], "terms": [term(1, 2), term(1, 4, phi=0)]},
                {"entry": [2, 2], "terms": [term(1, 2), term(1, 4, phi=0)]},
            ],
        },
    }
    write("sphere3", sphere3, outdir)

    # ------------------------------------------------------- flatcone: so(2)
    flatcone = {
        "name": "flatcone",
        "description": "SO(2) acting on the plane; flat cone seed",
        "basis": ["W"],
        "dim_h": 0,
        "gamma": [],
        "index_I": [0],
        "index_J": [],
        "p_modules": {"p0": [0], "p1": [], "p2": []},
        "m_modules": {"m0": [], "irreducible": []},
        "ad_h_modules": [[0]],
        "equivalences": [],
        "parameters": {},
        "smoothness": {
            "functions": ["phi"],
            "constraints": [{"a": [[0, 0, "1"]], "d": 4}],
            "ansatz": [
                {"entry": [0, 0], "terms": [term(1, 2), term(1, 4, phi=0)]},
            ],
        },
    }
    write("flatcone", flatcone, outdir)

    # ------------------------------------------------------- berger: su(2)
    # [e_i, e_j] = eps_ijk e_k; homogeneous-only entry (H, K trivial)
    gb = {}
    for (i, j, k, s) in [(0, 1, 2, 1), (1, 0, 2, -1), (1, 2, 0, 1), (2, 1, 0, -1),
                         (2, 0, 1, 1), (0, 2, 1, -1)]:
        gb[(i, j, k)] = Fraction(s)
    check_jacobi(gb, 3)
    print("berger B =", [killing(gb, 3, i, i) for i in range(3)])
    berger = {
        "name": "berger",
        "description": "su(2) with epsilon brackets; left-invariant metrics",
        "basis": ["e1", "e2", "e3"],
        "dim_h": 0,
        "gamma": gamma_json(gb),
        "index_I": [],
        "index_J": [0, 1, 2],
        "p_modules": {"p0": [], "p1": [], "p2": []},
        "m_modules": {"m0": [0, 1, 2], "irreducible": []},
        "ad_h_modules": [[0], [1], [2]],
        "equivalences": [],
        "parameters": {},
    }
    write("berger", berger, outdir)

    # ------------------------------------------------------- solv2
    solv2 = {
        "name": "solv2",
        "description": "two-dimensional solvable algebra [e1,e2] = e2",
        "basis": ["e1", "e2"],
        "dim_h": 0,
        "gamma": [[0, 1, 1, "1"], [1, 0, 1, "-1"]],
        "index_I": [],
        "index_J": [0, 1],
        "p_modules": {"p0": [], "p1": [], "p2": []},
        "m_modules": {"m0": [0, 1], "irreducible": []},
        "ad_h_modules": [[0], [1]],
        "equivalences": [],
        "parameters": {},
    }
    write("solv2", solv2, outdir)

    # ------------------------------------------------------- solv4
    # g = span{W, D, e1, e2}: [W,e1]=e2, [W,e2]=-e1, [D,e1]=e1, [D,e2]=e2.
    # K = SO(2) generated by W, H trivial; G non-unimodular (tr ad D = 2).
    gsv = {}
    for (i, j, k, v) in [(0, 2, 3, 1), (2, 0, 3, -1), (0, 3, 2, -1), (3, 0, 2, 1),
                         (1, 2, 2, 1), (2, 1, 2, -1), (1, 3, 3, 1), (3, 1, 3, -1)]:
        gsv[(i, j, k)] = Fraction(v)
    check_jacobi(gsv, 4)
    solv4 = {
        "name": "solv4",
        "description": "rot+scale solvable algebra; non-unimodular fibration seed",
        "basis": ["W", "D", "e1", "e2"],
        "dim_h": 0,
        "gamma": gamma_json(gsv),
        "index_I": [0],
        "index_J": [1, 2, 3],
        "p_modules": {"p0": [0], "p1": [], "p2": []},
        "m_modules": {"m0": [1], "irreducible": [[2, 3]]},
        "ad_h_modules": [[0], [1], [2], [3]],
        "equivalences": [],
        "parameters": {"aD": "1", "a1": "1"},
        "smoothness": {
            "functions": ["phi1", "phi2", "phi3"],
            "constraints": [
                {"a": [[0, 0, "1"]], "d": 4},
                {"a": [[1, 1, "1"]], "d": 2},
                {"a": [[2, 2, "1"], [3, 3, "1"]], "d": 2},
            ],
            "ansatz": [
                {"entry": [0, 0], "terms": [term(1, 2), term(1, 4, phi=0)]},
                {"entry": [1, 1], "terms": [term(1, param="aD"), term(1, 2, phi=1)]},
                {"entry": [2, 2], "terms": [term(1, param="a1"), term(1, 2, phi=2)]},
                {"entry": [3, 3], "terms": [term(1, param="a1"), term(1, 2, phi=2)]},
            ],
        },
    }
    write("solv4", solv4, outdir)


if __name__ == "__main__":
    main()
