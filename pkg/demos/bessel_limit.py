#!/usr/bin/env python3
"""Limit transition: rescaled Jack ratios converge to the Bessel function.

Evaluating the normalized Jack polynomial of shape (2*ell, ell) at the point
(1 + x/ell, 1 - x/ell) and letting ell grow reproduces the normalized
one-variable Bessel function of order k - 1/2; at k = 1/2 that is the
classical modified Bessel function I_0.  The error halves with each
doubling of ell: clean first-order convergence in 1/ell.
"""

import math
from fractions import Fraction

from jackb2 import bessel_i_norm, limit_transition

for k in (Fraction(1, 2), Fraction(1)):
    order = float(k) - 0.5
    print("=" * 64)
    print(f"k = {k}   (target: normalized Bessel of order {order})")
    print("=" * 64)
    for x in (0.5, 1.0):
        target = bessel_i_norm(order, x)
        if k == Fraction(1, 2):
            i0 = math.fsum((x * x / 4) ** m / math.factorial(m) ** 2
                           for m in range(25))
            assert abs(target - i0) < 1e-14
        print(f"x = {x}: target = {target:.12f}")
        prev = None
        for ell in (8, 16, 32, 64):
            value = limit_transition(k, x, ell)
            err = abs(value - target)
            ratio = "" if prev is None else f"  error ratio {err / prev:.3f}"
            print(f"  ell={ell:3d}:  value {value:.12f}  |error| {err:.3e}{ratio}")
            prev = err
        print()
