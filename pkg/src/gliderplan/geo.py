"""Spherical-earth geodesy: distances, bearings, heading arithmetic, projections.

All positions are WGS84-style lon/lat in decimal degrees. Distances are in
meters on a sphere of mean radius 6,371,008.8 m; at transect scales (tens of
km) the sphere-vs-ellipsoid error is far below forecast-grid resolution.
Bearings use the compass convention: 0 = north, clockwise positive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import CoincidentPoints

EARTH_RADIUS_M = 6_371_008.8
M_PER_DEG = EARTH_RADIUS_M * math.pi / 180.0  # meters per degree of latitude


@dataclass(frozen=True)
class GeoPosition:
    """Point on the earth: lon degrees east in [-180, 180], lat degrees north in [-90, 90]."""

    lon: float
    lat: float

    def __post_init__(self):
        if not (math.isfinite(self.lon) and math.isfinite(self.lat)):
            raise ValueError(f"non-finite position ({self.lon}, {self.lat})")
        if not -180.0 <= self.lon <= 180.0:
            raise ValueError(f"lon {self.lon} outside [-180, 180]")
        if not -90.0 <= self.lat <= 90.0:
            raise ValueError(f"lat {self.lat} outside [-90, 90]")


@dataclass(frozen=True)
class SurfaceState:
    """Surfaced vehicle state: position plus a continuous timestamp in seconds."""

    position: GeoPosition
    time: float


def wrap_lon(lon_deg: float) -> float:
    """Wrap a longitude into [-180, 180)."""
    return (lon_deg + 180.0) % 360.0 - 180.0


def wrap_heading(deg: float) -> float:
    """Wrap an angle into [0, 360)."""
    return deg % 360.0


def angle_diff_deg(a: float, b: float) -> float:
    """Smallest absolute difference between two headings, in [0, 180]."""
    d = (a - b) % 360.0
    return d if d <= 180.0 else 360.0 - d


def geodesic_distance(a: GeoPosition, b: GeoPosition) -> float:
    """Great-circle distance between two positions in meters (haversine)."""
    phi1 = math.radians(a.lat)
    phi2 = math.radians(b.lat)
    dphi = math.radians(b.lat - a.lat)
    dlam = math.radians(b.lon - a.lon)
    h = math.sin(dphi / 2.0) ** 2 + math.cos(phi1) * math.cos(phi2) * math.sin(dlam / 2.0) ** 2
    return 2.0 * EARTH_RADIUS_M * math.asin(min(1.0, math.sqrt(h)))


def bearing(origin: GeoPosition, target: GeoPosition) -> float:
    """Initial compass bearing from origin to target, degrees in [0, 360).

    Raises CoincidentPoints when the positions are identical; the caller is
    expected to have handled the already-at-goal case.
    """
    if origin.lon == target.lon and origin.lat == target.lat:
        raise CoincidentPoints(f"bearing undefined from {origin} to itself")
    phi1 = math.radians(origin.lat)
    phi2 = math.radians(target.lat)
    dlam = math.radians(target.lon - origin.lon)
    y = math.sin(dlam) * math.cos(phi2)
    x = math.cos(phi1) * math.sin(phi2) - math.sin(phi1) * math.cos(phi2) * math.cos(dlam)
    return math.degrees(math.atan2(y, x)) % 360.0


def heading_from_action(alpha_deg: float, beta_deg: float) -> float:
    """Commanded heading psi = beta - alpha, normalized to [0, 360).

    alpha is the relative bearing of a dive action and beta the bearing to
    the goal; alpha = 0 aims straight at the goal.
    """
    return (beta_deg - alpha_deg) % 360.0


def point_on_heading(p: GeoPosition, psi_deg: float, dist_m: float) -> GeoPosition:
    """Destination after traveling dist_m along compass heading psi_deg."""
    if dist_m < 0:
        raise ValueError(f"negative distance {dist_m}")
    if dist_m == 0.0:
        return p
    delta = dist_m / EARTH_RADIUS_M
    theta = math.radians(psi_deg)
    phi1 = math.radians(p.lat)
    lam1 = math.radians(p.lon)
    sin_phi2 = math.sin(phi1) * math.cos(delta) + math.cos(phi1) * math.sin(delta) * math.cos(theta)
    phi2 = math.asin(max(-1.0, min(1.0, sin_phi2)))
    lam2 = lam1 + math.atan2(
        math.sin(theta) * math.sin(delta) * math.cos(phi1),
        math.cos(delta) - math.sin(phi1) * sin_phi2,
    )
    return GeoPosition(wrap_lon(math.degrees(lam2)), math.degrees(phi2))


def local_xy(p: GeoPosition, ref: GeoPosition) -> tuple[float, float]:
    """Project p onto the local tangent plane anchored at ref.

    Returns (east_m, north_m). Equirectangular projection, exact enough for
    the few-tens-of-km scales where planar arithmetic (KDE scoring, spread
    penalties, polygon tests) is used.
    """
    east = wrap_lon(p.lon - ref.lon) * M_PER_DEG * math.cos(math.radians(ref.lat))
    north = (p.lat - ref.lat) * M_PER_DEG
    return east, north


def from_local_xy(ref: GeoPosition, east_m: float, north_m: float) -> GeoPosition:
    """Inverse of local_xy: tangent-plane offsets back to a position."""
    lat = ref.lat + north_m / M_PER_DEG
    lon = ref.lon + east_m / (M_PER_DEG * math.cos(math.radians(ref.lat)))
    return GeoPosition(wrap_lon(lon), lat)
