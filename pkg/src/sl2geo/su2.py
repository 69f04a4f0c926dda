"""The compact sibling: planar geodesics of the SU(2) reduction.

The SU(2) quotient under the same SO(2) action is the closed unit disc, and
its planar geodesics come from the SL(2) family by the formal substitution
c -> i*omega, t -> -i*s.  Each omega-geodesic starts at (1, 0) and loses
optimality when it lands on the unit circle at s = pi/sqrt(1+omega^2); the
parameter map c(omega) below matches every SU(2) geodesic with the SL(2)
landing geodesic that ends at the same circle point.
"""

from __future__ import annotations

import math

from ._kernels import coshc, sinhc
from .errors import BadGridError
from .geodesics import landing_point


def su2_planar_geodesic(omega: float, s: float) -> tuple[float, float]:
    """Point of the omega-geodesic in the disc at time s."""
    mu = math.sqrt(1.0 + omega * omega)
    cos_m, sin_m = math.cos(mu * s), math.sin(mu * s)
    cos_o, sin_o = math.cos(omega * s), math.sin(omega * s)
    ratio = omega / mu
    return (cos_m * cos_o + ratio * sin_m * sin_o,
            cos_m * sin_o - ratio * sin_m * cos_o)


def _su2_from_kernel(omega: float, s: float) -> tuple[float, float]:
    # Same point evaluated through the shared trig/hyperbolic kernel with
    # the substituted parameters (rate omega, z = -(1+omega^2) s^2); used to
    # cross-check the direct formula above.
    z = -(1.0 + omega * omega) * s * s
    k1 = coshc(z)
    k2 = omega * s * sinhc(z)
    cos_o, sin_o = math.cos(omega * s), math.sin(omega * s)
    return k1 * cos_o + k2 * sin_o, k1 * sin_o - k2 * cos_o


def su2_landing_time(omega: float) -> float:
    """Time pi/sqrt(1+omega^2) at which the geodesic reaches the circle."""
    return math.pi / math.sqrt(1.0 + omega * omega)


def su2_landing_point(omega: float) -> tuple[float, float]:
    """Circle point where the omega-geodesic loses optimality."""
    angle = omega * math.pi / math.sqrt(omega * omega + 1.0)
    return -math.cos(angle), -math.sin(angle)


def c_of_omega(omega: float) -> float:
    """SL(2) landing parameter whose endpoint matches the omega-geodesic.

    Monotone decreasing on each branch: omega >= 0 maps into (-inf, -2/sqrt(3)]
    and omega <= 0 maps into [2/sqrt(3), inf); only |c| = 2/sqrt(3) is
    attained, at omega = 0 (on the nonnegative branch).
    """
    root = math.sqrt(omega * omega + 1.0)
    if omega >= 0.0:
        num = 5.0 * omega * omega + 4.0 - 4.0 * omega * root
        den = 4.0 * omega * omega + 3.0 - 4.0 * omega * root
        return -math.sqrt(num / den)
    num = (omega + 2.0 * root) ** 2
    den = 4.0 * omega * omega + 3.0 + 4.0 * omega * root
    return math.sqrt(num / den)


def landing_match_error(omega: float) -> float:
    """Distance between the SU(2) landing point and the matched SL(2) one."""
    ux, uy = su2_landing_point(omega)
    lp = landing_point(c_of_omega(omega))
    return math.hypot(ux - lp.x, uy - lp.y)


def reachable_boundary(s: float, n: int) -> list[tuple[float, float]]:
    """Boundary of the time-s reachable set in the disc.

    Sweeps omega over a grid uniform in arctan(omega) (resolving both small
    and large parameters) and emits each geodesic at time s, clipped at its
    landing time: geodesics that have already landed contribute their circle
    point.
    """
    if n < 2:
        raise BadGridError(f"need at least 2 boundary samples, got {n}")
    if not s > 0.0:
        raise BadGridError(f"time must be positive, got {s}")
    points = []
    for i in range(n):
        u = -0.5 * math.pi + math.pi * (i + 0.5) / n
        omega = math.tan(u)
        points.append(su2_planar_geodesic(omega, min(s, su2_landing_time(omega))))
    return points
