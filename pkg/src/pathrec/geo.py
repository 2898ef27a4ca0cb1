"""Great-circle geometry helpers."""

from math import asin, cos, radians, sin, sqrt

EARTH_RADIUS_KM = 6371.0088


def haversine_km(lat1: float, lon1: float, lat2: float, lon2: float) -> float:
    """Great-circle distance between two (lat, lon) points in kilometres.

    Uses the haversine formula with the mean Earth radius; coordinates are
    decimal degrees. Non-negative, symmetric, and zero iff the coordinates
    are equal.
    """
    phi1, lam1, phi2, lam2 = map(radians, (lat1, lon1, lat2, lon2))
    h = sin((phi2 - phi1) / 2.0) ** 2 + cos(phi1) * cos(phi2) * sin((lam2 - lam1) / 2.0) ** 2
    return 2.0 * EARTH_RADIUS_KM * asin(sqrt(h))
