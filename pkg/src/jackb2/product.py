"""The two-variable product identity and its verification harness.

For diagonal matrices with entries x = (x1, x2) and y = (y1, y2) conjugated
by a rotation, the eigenvalues of the product depend on the rotation angle
only through u = cos 2*theta.  ``eigen_split`` computes that eigenvalue pair
(X1(u), X2(u)); the product identity states

    P_lam(x) P_lam(y) / P_lam(1,1)
        = c(k) * integral over [-1,1] of P_lam(X1(u), X2(u)) (1-u^2)^(k-1) du

with c(k) the weight's normalization constant.  The integrand is a
polynomial in u of degree lam_1 - lam_2 (X1 + X2 is linear in u and X1*X2
is constant), so a Gauss-Jacobi rule with enough nodes evaluates the right
side exactly up to rounding.

``zonal_so2_average`` is the independent k = 1/2 cross-check: the classical
rotation-group average computed directly as a trapezoid sum over equispaced
angles, which converges spectrally to the same left side.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .jack import jack_p_at_ones, jack_p_two_var
from .partitions import Partition, param_value
from .quadrature import gauss_jacobi_rule, normalization_c


@dataclass(frozen=True)
class SplitPair:
    """Eigenvalue pair of the conjugated product at a fixed u = cos 2*theta."""

    alpha_split: float
    a: float
    a_bar: float
    x1_big: float
    x2_small: float
    discriminant: float


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one identity check; context carries the inputs."""

    lhs: float
    rhs: float
    abs_err: float
    rel_err: float
    passed: bool
    context: dict = field(default_factory=dict)

    def to_json(self):
        out = dict(self.context)
        out.update({
            "lhs": self.lhs,
            "rhs": self.rhs,
            "abs_err": self.abs_err,
            "rel_err": self.rel_err,
            "pass": self.passed,
        })
        return out


def make_report(lhs, rhs, tol, **context):
    """Compare two values: relative error, absolute for vanishing left side."""
    lhs, rhs = float(lhs), float(rhs)
    abs_err = abs(lhs - rhs)
    rel_err = abs_err / abs(lhs) if abs(lhs) >= 1e-300 else abs_err
    return VerificationReport(lhs, rhs, abs_err, rel_err, rel_err <= tol, context)


def eigen_split(x, y, u):
    """Eigenvalues (X1 >= X2) of the rotation-conjugated product at u.

    alpha = ((x1+x2)(y1+y2) + (x1-x2)(y1-y2) u) / 2 is their sum and
    x1 x2 y1 y2 their product; X1 takes the additive root and X2 comes from
    the product, which avoids cancellation when the discriminant is small.
    Discriminants below -1e-12 relative to alpha^2 are a domain violation;
    tiny negatives are rounding and clamp to zero.
    """
    x1, x2 = (float(v) for v in x)
    y1, y2 = (float(v) for v in y)
    u = float(u)
    if min(x1, x2, y1, y2) < 0:
        raise ValueError("inputs must be componentwise nonnegative")
    if abs(u) > 1:
        raise ValueError(f"u must lie in [-1, 1], got {u}")
    alpha = 0.5 * ((x1 + x2) * (y1 + y2) + (x1 - x2) * (y1 - y2) * u)
    a = 0.5 * (y1 + y2 + (y1 - y2) * u)
    a_bar = 0.5 * (y1 + y2 - (y1 - y2) * u)
    prod = x1 * x2 * y1 * y2
    disc = alpha * alpha - 4.0 * prod
    if disc < 0:
        if disc < -1e-12 * max(alpha * alpha, 1e-300):
            raise ArithmeticError(f"discriminant {disc} below the rounding floor")
        disc = 0.0
    big = 0.5 * (alpha + math.sqrt(disc))
    small = prod / big if big > 0 else 0.0
    return SplitPair(alpha, a, a_bar, big, small, disc)


def rotation_conjugate_eigs(x, y, theta):
    """Eigenvalues of the explicit conjugated 2x2 matrix, sorted decreasing.

    Independent code path from eigen_split: builds the matrix entries and
    uses trace/determinant.  Agrees with eigen_split at u = cos 2*theta.
    """
    x1, x2 = (float(v) for v in x)
    y1, y2 = (float(v) for v in y)
    if min(x1, x2, y1, y2) < 0:
        raise ValueError("inputs must be componentwise nonnegative")
    c, s = math.cos(theta), math.sin(theta)
    m11 = x1 * y1 * c * c + x1 * y2 * s * s
    m22 = x2 * y2 * c * c + x2 * y1 * s * s
    m12 = math.sqrt(x1 * x2) * (y1 - y2) * c * s
    tr = m11 + m22
    det = m11 * m22 - m12 * m12
    disc = max(tr * tr - 4.0 * det, 0.0)
    big = 0.5 * (tr + math.sqrt(disc))
    small = det / big if big > 0 else 0.0
    return big, small


def product_lhs(lam, k, x, y):
    """P_lam(x) P_lam(y) / P_lam(1,1)."""
    lam = Partition(lam)
    if len(lam) > 2:
        raise ValueError(f"partition {lam} needs more than two variables")
    px = jack_p_two_var(lam, k, x[0], x[1])
    py = jack_p_two_var(lam, k, y[0], y[1])
    return float(px) * float(py) / float(jack_p_at_ones(lam, k, 2))


def product_rhs(lam, k, x, y, npoints):
    """c(k) * integral of P_lam(X1(u), X2(u)) against (1-u^2)^(k-1)."""
    lam = Partition(lam)
    if len(lam) > 2:
        raise ValueError(f"partition {lam} needs more than two variables")
    kv = float(param_value(k))
    spread = lam.part(0) - lam.part(1)
    if npoints < (spread + 2) // 2:
        raise ValueError(
            f"npoints={npoints} cannot integrate a degree-{spread} integrand exactly")
    rule = gauss_jacobi_rule(npoints, kv)
    total = math.fsum(
        w * jack_p_two_var(lam, kv, *_split_values(lam, x, y, u))
        for u, w in zip(rule.nodes, rule.weights)
    )
    return normalization_c(kv) * total


def _split_values(lam, x, y, u):
    pair = eigen_split(x, y, u)
    return pair.x1_big, pair.x2_small


def verify_product(lam, k, x, y, npoints, tol):
    """Run both sides of the product identity and report the comparison."""
    lhs = product_lhs(lam, k, x, y)
    rhs = product_rhs(lam, k, x, y, npoints)
    return make_report(
        lhs, rhs, tol,
        identity="product",
        **{"lambda": list(Partition(lam))},
        k=str(k),
        x=[float(v) for v in x],
        y=[float(v) for v in y],
        npoints=npoints,
    )


def zonal_so2_average(lam, x, y, ntheta):
    """Rotation-group average of P_lam at parameter 1/2, trapezoid in theta.

    Averages P^(1/2)_lam over the eigenvalues of the conjugated matrix at
    ntheta equispaced angles; by periodicity this converges spectrally and
    is exact once ntheta exceeds the trigonometric degree of the integrand.
    """
    lam = Partition(lam)
    if len(lam) > 2:
        raise ValueError(f"partition {lam} needs more than two variables")
    if ntheta < 1:
        raise ValueError("ntheta must be positive")
    half = 0.5
    vals = []
    for j in range(ntheta):
        theta = 2.0 * math.pi * j / ntheta
        big, small = rotation_conjugate_eigs(x, y, theta)
        vals.append(jack_p_two_var(lam, half, big, small))
    return math.fsum(vals) / ntheta
