"""Route scoring with exact per-POI / per-transition decomposition.

A route's total is a convex combination of unary affinity and transition
preference:

    poi_scores[j]        = (1 - alpha) * w.phi(x, p_j)
    transition_scores[j] = alpha * ln P[p_j][p_{j+1}]
    total                = sum(poi_scores) + sum(transition_scores)

The total is computed from the stored parts in stored order with no
re-rounding, so re-summing the parts reproduces it bit-exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .data import POI, Query
from .errors import InvalidRouteError
from .geo import haversine_km


@dataclass(frozen=True)
class ScoredRoute:
    """An ordered POI sequence with its decomposed score and travel stats."""

    pois: tuple[int, ...]
    poi_scores: tuple[float, ...]
    transition_scores: tuple[float, ...]
    total: float
    distance_km: float
    travel_time_h: float


def validate_route(query: Query, route: Sequence[int], pois: Mapping[int, POI]) -> str | None:
    """Check a route against its query; returns the first violation or None.

    Verified in order: POI existence, start, length, repeat freedom.
    """
    for pos, pid in enumerate(route):
        if pid not in pois:
            return f"unknown POI id {pid} at position {pos}"
    if not route or route[0] != query.start:
        return f"route must start at POI {query.start}"
    if len(route) != query.length:
        return f"length mismatch: route has {len(route)} POIs, query asks for {query.length}"
    seen: set[int] = set()
    for pos, pid in enumerate(route):
        if pid in seen:
            return f"repeat of POI {pid} at position {pos}"
        seen.add(pid)
    return None


def route_score(model, query: Query, route: Sequence[int]) -> ScoredRoute:
    """Score a valid route and decompose its total exactly.

    ``model`` must provide ``unary_score(query, poi_id)``,
    ``log_transition(p, p_next)``, ``alpha`` and ``pois``. Adding 0.0 to
    each part normalizes a negative zero (alpha at either boundary) without
    changing any other value. At alpha = 0 the transition structure is
    ignored outright, so a zero-probability transition (possible with
    unsmoothed counts) contributes 0.0 rather than 0 * -inf.
    """
    violation = validate_route(query, route, model.pois)
    if violation is not None:
        raise InvalidRouteError(violation)
    alpha = model.alpha
    route = tuple(route)
    poi_scores = tuple((1.0 - alpha) * model.unary_score(query, pid) + 0.0 for pid in route)
    if alpha == 0.0:
        transition_scores = (0.0,) * (len(route) - 1)
    else:
        transition_scores = tuple(
            alpha * model.log_transition(a, b) + 0.0 for a, b in zip(route, route[1:])
        )
    total = sum(poi_scores) + sum(transition_scores)
    distance = sum(
        haversine_km(model.pois[a].lat, model.pois[a].lon, model.pois[b].lat, model.pois[b].lon)
        for a, b in zip(route, route[1:])
    )
    return ScoredRoute(
        pois=route,
        poi_scores=poi_scores,
        transition_scores=transition_scores,
        total=total,
        distance_km=distance,
        travel_time_h=distance / query.mode.speed_kmh,
    )
