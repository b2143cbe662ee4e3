#!/usr/bin/env python3
"""Regenerates frozen_values.hpp from high-precision mpmath/sympy computations.

Nothing here calls the C++ library: every number is produced independently at 60 digits
and rounded to double on output.
"""
import sys
from pathlib import Path

import mpmath as mp
import sympy as sp

mp.mp.dps = 60


def canonical(values):
    """Modulus descending, argument ascending in [0, 2pi), then input order."""
    tau = 2 * mp.pi
    order = sorted(enumerate(values), key=lambda it: (-abs(it[1]), mp.arg(it[1]) % tau, it[0]))
    return [z for _, z in order]


def poly_from_roots(roots):
    c = [mp.mpc(1)]
    for r in roots:
        nxt = [mp.mpc(0)] * (len(c) + 1)
        for k, v in enumerate(c):
            nxt[k + 1] += v
            nxt[k] -= r * v
        c = nxt
    return c  # ascending


def derivative(c):
    return [k * c[k] for k in range(1, len(c))]


def roots_of(asc):
    desc = list(reversed(asc))
    return mp.polyroots(desc, maxsteps=500, extraprec=400)


def critical(roots):
    return canonical(roots_of(derivative(poly_from_roots(roots))))


def circulant_row(roots):
    n = len(roots)
    lam = canonical(roots)
    return [sum(mp.exp(-2j * mp.pi * j * k / n) * lam[j] for j in range(n)) / n for k in range(n)]


def submatrix(row):
    n = len(row)
    return mp.matrix([[row[(l - k) % n] for l in range(n - 1)] for k in range(n - 1)])


def power_sums(r):
    return (sum(r), sum(z * z for z in r), sum(abs(z) ** 2 for z in r), sum(abs(z) ** 4 for z in r))


def herm_eigs_desc(m):
    ev = mp.eighe(m, eigvals_only=True)
    return sorted([mp.re(e) for e in ev], reverse=True)


def svd_desc(m):
    return sorted(mp.svd_c(m, compute_uv=False), reverse=True)


def c(z):
    z = mp.mpc(z)
    return "{%s, %s}" % (mp.nstr(z.real, 17, min_fixed=-30, max_fixed=30), mp.nstr(z.imag, 17, min_fixed=-30, max_fixed=30))


def r(x):
    return mp.nstr(mp.mpf(x), 17, min_fixed=-30, max_fixed=30)


out = []


def carr(name, values):
    out.append("inline const CVector %s{\n    %s};" % (name, ",\n    ".join(c(v) for v in values)))


def rarr(name, values):
    out.append("inline const RVector %s{%s};" % (name, ", ".join(r(v) for v in values)))


def scalar(name, x):
    out.append("inline constexpr double %s = %s;" % (name, r(x)))


# A: generic complex root set
A = [mp.mpc(2), mp.mpc(-1, 1), mp.mpc(0.5, -2), mp.mpc(0, -1.5), mp.mpc(3, 0.25)]
carr("kRootsA", A)
carr("kCanonicalA", canonical(A))
carr("kCriticalA", critical(A))
s1, s2, m2, m4 = power_sums(A)
n = len(A)
out.append("inline const cplx kS1A%s;" % c(s1))
out.append("inline const cplx kS2A%s;" % c(s2))
scalar("kM2A", m2)
scalar("kM4A", m4)
scalar("kSchoenbergRhsA", abs(s1) ** 2 / n**2 + mp.mpf(n - 2) / n * m2)
c0 = s1 / n
cross = sum(abs(z) ** 2 * abs(z + c0) ** 2 for z in A)
scalar("kQuarticRhsA",
       mp.mpf(n - 6) / n * m4 + m2**2 / n**2 + abs(s2 - s1**2 / n) ** 2 / n**2 + 2 * cross / n - 4 * m2 * abs(s1) ** 2 / n**3)
crit = critical(A)
scalar("kSumW2A", sum(abs(w) ** 2 for w in crit))
scalar("kSumW4A", sum(abs(w) ** 4 for w in crit))
row = circulant_row(A)
carr("kFirstRowA", row)
sub = submatrix(row)
bb = (sub * sub.H) * (sub.H * sub)
scalar("kTraceBBA", mp.re(sum(bb[i, i] for i in range(n - 1))))
rarr("kSubSingularA", svd_desc(sub))
rarr("kHermPartA", herm_eigs_desc((sub + sub.H) / 2))
rarr("kGramSubA", sorted([mp.re(w) for w in critical([abs(z) ** 2 for z in A])], reverse=True))

# B: centred root set
B0 = [mp.mpc(1, 2), mp.mpc(-2, 0.5), mp.mpc(0.5, -1), mp.mpc(1, -1), mp.mpc(-0.5, -0.5)]
mu = sum(B0) / len(B0)
B = [z - mu for z in B0]
carr("kRootsB", B)
carr("kCriticalB", critical(B))
s1, s2, m2, m4 = power_sums(B)
n = len(B)
scalar("kQuarticCenteredRhsB", mp.mpf(n - 4) / n * m4 + m2**2 / n**2 + abs(s2) ** 2 / n**2)
scalar("kDeBruinSharmaRhsB", mp.mpf(n - 4) / n * m4 + 2 * m2**2 / n**2)
scalar("kSumW4B", sum(abs(w) ** 4 for w in critical(B)))

# C: positive roots (1, 2, 3)
C = [mp.mpf(1), mp.mpf(2), mp.mpf(3)]
rarr("kXiC", sorted([mp.re(w) for w in critical(C)], reverse=True))
rarr("kEtaC", sorted([mp.re(w) for w in critical([x * x for x in C])], reverse=True))

# D: non-normal Gaussian-integer matrix, exact characteristic polynomial
I = sp.I
Dsym = sp.Matrix([[2 + I, 1, 0, -3 * I], [4, -1 + 2 * I, 5, 1], [0, 1 - I, 3, 2], [1, 0, -2 + I, -4]])
z = sp.symbols("z")
cp = sp.Poly((z * sp.eye(4) - Dsym).det(), z).all_coeffs()[::-1]
Dm = mp.matrix([[mp.mpc(complex(sp.N(Dsym[i, j], 30))) for j in range(4)] for i in range(4)])
out.append("inline const std::vector<CVector> kMatrixD{\n    %s};" % ",\n    ".join(
    "{" + ", ".join(c(Dm[i, j]) for j in range(4)) + "}" for i in range(4)))
carr("kCharPolyD", [mp.mpc(complex(sp.N(v, 30))) for v in cp])
carr("kEigD", canonical(mp.eig(Dm, left=False, right=False)))
rarr("kSingularD", svd_desc(Dm))

# E: Hermitian 3x3
Em = mp.matrix([[4, mp.mpc(1, -2), mp.mpc(0, 1)], [mp.mpc(1, 2), -1, 3], [mp.mpc(0, -1), 3, 2]])
out.append("inline const std::vector<CVector> kMatrixE{\n    %s};" % ",\n    ".join(
    "{" + ", ".join(c(Em[i, j]) for j in range(3)) + "}" for i in range(3)))
rarr("kEigE", herm_eigs_desc(Em))

# F: degree-10 polynomial with Gaussian-integer coefficients (ascending)
F = [mp.mpc(3, -1), mp.mpc(0, 2), mp.mpc(-5), mp.mpc(1, 1), mp.mpc(0), mp.mpc(7, -2), mp.mpc(-1), mp.mpc(2, 3),
     mp.mpc(0, -4), mp.mpc(1, 0), mp.mpc(1)]
carr("kCoeffsF", F)
carr("kRootsF", canonical(roots_of(F)))

header = """#pragma once

// Generated by generate_frozen.py from 60-digit mpmath/sympy computations. Do not edit.

#include <vector>

#include "circdiff/core.hpp"

namespace circdiff::frozen {

%s

}  // namespace circdiff::frozen
""" % "\n\n".join(out)

Path(sys.argv[1] if len(sys.argv) > 1 else Path(__file__).with_name("frozen_values.hpp")).write_text(header)
