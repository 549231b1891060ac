"""Asymmetric lemon tables.

A table is the intersection of two disks: a small one of radius ``r``
(fixed to 1, kept symbolic in formulas) and a big one of radius ``R``,
with centers ``b`` apart.  The boundary consists of two circular arcs
meeting at two corners A (upper) and B (lower).

Coordinate frame: the big-disk center sits at the origin, the small-disk
center at ``(b, 0)``, so the table is symmetric about the x-axis.
Position angles on the small arc are measured at its own center from the
+x direction, likewise on the big arc; both increase counterclockwise.
The small arc occupies ``[phi_star, 2*pi - phi_star]`` and the big arc
``(-Phi_star, Phi_star)``.  The corners are carried by the small arc.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import IntEnum

from .errors import DomainError, RangeError

TWO_PI = 2.0 * math.pi

#: Small-disk radius. All lengths in the package are in units of it.
R_SMALL = 1.0

#: Radius-threshold constants: the published triple and the slightly
#: larger triple obtained by collecting every intermediate lower bound.
THRESHOLD_VARIANTS = {
    "theorem": (14.6, 147.0, 1773.7),
    "collected": (16.0, 165.0, 1773.7),
}


class ArcLabel(IntEnum):
    SMALL = 0
    BIG = 1


@dataclass(frozen=True)
class LemonTable:
    r: float
    R: float
    b: float
    phi_star: float
    Phi_star: float
    delta_star: float
    center_r: tuple[float, float]
    center_R: tuple[float, float]
    corner_A: tuple[float, float]
    corner_B: tuple[float, float]
    #: True when phi_star lies in (0, pi/2] (the regime the radius
    #: threshold speaks about). Harness tables for the period-2 orbit
    #: trichotomy may be non-canonical.
    canonical: bool

    def arc_radius(self, arc: ArcLabel) -> float:
        return self.r if arc == ArcLabel.SMALL else self.R

    def arc_center(self, arc: ArcLabel) -> tuple[float, float]:
        return self.center_r if arc == ArcLabel.SMALL else self.center_R

    def phi_in_arc(self, arc: ArcLabel, phi: float) -> bool:
        """Membership of a position angle in the arc's stored range.

        The small-arc range is closed (it owns the corners), the big-arc
        range is open.
        """
        if arc == ArcLabel.SMALL:
            return self.phi_star <= phi <= TWO_PI - self.phi_star
        return -self.Phi_star < phi < self.Phi_star


def _assemble(r: float, R: float, b: float, phi_star: float,
              Phi_star: float, canonical: bool) -> LemonTable:
    corner_x = b + r * math.cos(phi_star)
    corner_y = r * math.sin(phi_star)
    return LemonTable(
        r=r, R=R, b=b,
        phi_star=phi_star, Phi_star=Phi_star,
        delta_star=min(phi_star, math.pi / 2.0 - phi_star),
        center_r=(b, 0.0), center_R=(0.0, 0.0),
        corner_A=(corner_x, corner_y), corner_B=(corner_x, -corner_y),
        canonical=canonical,
    )


def build_table(phi_star: float, R: float) -> LemonTable:
    """Build the table with corners pinned at position angle ``phi_star``.

    ``phi_star`` must lie in (0, pi/2]; the endpoint pi/2 gives the
    table whose corner chord passes through the small center. The center
    separation follows from keeping the corners on the small circle:
    ``b = sqrt(R^2 - r^2 sin^2 phi_star) - r cos phi_star``.
    """
    r = R_SMALL
    if not (0.0 < phi_star <= math.pi / 2.0):
        raise DomainError(f"phi_star={phi_star!r} outside (0, pi/2]")
    if R < r:
        raise DomainError(f"R={R!r} smaller than r={r!r}")
    s = r * math.sin(phi_star)
    b = math.sqrt(R * R - s * s) - r * math.cos(phi_star)
    Phi_star = math.asin(s / R)
    return _assemble(r, R, b, phi_star, Phi_star, canonical=True)


def table_from_separation(b: float, R: float) -> LemonTable:
    """Build a table directly from the center separation ``b``.

    Accepts any nontrivial lemon (``R - r < b < R + r``), including
    ones whose corner angle exceeds pi/2; those are flagged
    non-canonical.  Used by the period-2 stability harness.
    """
    r = R_SMALL
    if not (R - r < b < R + r):
        raise DomainError(f"b={b!r} outside (R-r, R+r): arcs do not intersect")
    cos_phi = (R * R - b * b - r * r) / (2.0 * b * r)
    cos_phi = max(-1.0, min(1.0, cos_phi))
    phi_star = math.acos(cos_phi)
    Phi_star = math.asin(r * math.sin(phi_star) / R)
    canonical = 0.0 < phi_star <= math.pi / 2.0
    return _assemble(r, R, b, phi_star, Phi_star, canonical=canonical)


def min_radius_threshold(phi_star: float, variant: str = "theorem") -> float:
    """Big-disk radius above which the table is certified hyperbolic.

    Largest of three branches: a corner-neighborhood branch that blows
    up as ``phi_star`` approaches 0 or pi/2 (returns +inf at the pi/2
    endpoint), a ``1/sin^2`` branch, and a constant floor.
    """
    if not (0.0 < phi_star <= math.pi / 2.0):
        raise DomainError(f"phi_star={phi_star!r} outside (0, pi/2]")
    c_delta, c_sin2, c_floor = THRESHOLD_VARIANTS[variant]
    delta = min(phi_star, math.pi / 2.0 - phi_star)
    s = math.sin(phi_star)
    if delta <= 0.0:
        return math.inf
    return max(c_delta * R_SMALL / (delta * s),
               c_sin2 * R_SMALL / (s * s),
               c_floor * R_SMALL)


def arc_point(table: LemonTable, arc: ArcLabel, phi: float) -> tuple[float, float]:
    """Embed a boundary coordinate into the plane."""
    if not table.phi_in_arc(arc, phi):
        raise RangeError(f"phi={phi!r} outside arc {arc.name}")
    cx, cy = table.arc_center(arc)
    rho = table.arc_radius(arc)
    return (cx + rho * math.cos(phi), cy + rho * math.sin(phi))
