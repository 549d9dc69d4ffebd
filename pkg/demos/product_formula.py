#!/usr/bin/env python3
"""The two-variable product identity and its rotation-average cross-check.

The normalized product P(x) P(y) / P(1,1) equals a one-dimensional integral
of P at the "split" eigenvalue pair (X1(u), X2(u)) against the symmetric
Beta-type weight.  At k = 1/2 the same average can be taken literally over
SO(2) rotations, which is the independent sanity check run last.
"""

import math
from fractions import Fraction

import numpy as np

from jackb2 import (
    eigen_split,
    gauss_jacobi_rule,
    product_lhs,
    product_rhs,
    rotation_conjugate_eigs,
    verify_product,
    zonal_so2_average,
)

x, y = (2.0, 0.7), (1.3, 0.4)

print("=" * 72)
print("1. The eigenvalue split (X1(u), X2(u))")
print("=" * 72)
print("X1 * X2 is constant (the determinant); X1 + X2 moves linearly in u:")
for u in (-1.0, -0.5, 0.0, 0.5, 1.0):
    sp = eigen_split(x, y, u)
    print(f"  u={u:+.1f}:  X1={sp.x1_big:.6f}  X2={sp.x2_small:.6f}"
          f"  sum={sp.x1_big + sp.x2_small:.6f}  product={sp.x1_big * sp.x2_small:.6f}")

theta = 0.6
sp = eigen_split(x, y, math.cos(2 * theta))
e1, e2 = rotation_conjugate_eigs(x, y, theta)
print(f"\nindependent check via the conjugated 2x2 matrix at theta={theta}:")
print(f"  split: ({sp.x1_big:.12f}, {sp.x2_small:.12f})")
print(f"  matrix eigenvalues: ({e1:.12f}, {e2:.12f})")

print()
print("=" * 72)
print("2. The integral product identity")
print("=" * 72)
for lam, k in (((2,), Fraction(1, 2)), ((3, 1), Fraction(1)), ((4, 2), Fraction(11, 4))):
    npoints = sum(lam) + 4
    report = verify_product(lam, k, x, y, npoints, 1e-10)
    print(f"lambda={lam}, k={k}:  lhs={report.lhs:.12e}  rhs={report.rhs:.12e}"
          f"  rel err={report.rel_err:.2e}  -> {'ok' if report.passed else 'FAIL'}")

print("\nthe rule behind the right-hand side (weight (1-u^2)^(k-1)):")
rule = gauss_jacobi_rule(5, 1.5)
for node, weight in zip(rule.nodes, rule.weights):
    print(f"  u={node:+.6f}  w={weight:.6f}")

print()
print("=" * 72)
print("3. Rotation-average cross-check at k = 1/2")
print("=" * 72)
rng = np.random.default_rng(42)
for lam in ((2,), (3, 1), (4,)):
    xs = tuple(3.0 - rng.uniform(0.0, 3.0, size=2))
    ys = tuple(3.0 - rng.uniform(0.0, 3.0, size=2))
    lhs = product_lhs(lam, Fraction(1, 2), xs, ys)
    avg = zonal_so2_average(lam, xs, ys, ntheta=256)
    print(f"lambda={lam}:  normalized product {lhs:.12f}   SO(2) average {avg:.12f}"
          f"   rel err {abs(lhs - avg) / abs(lhs):.2e}")
