"""Affine rescaling of raw scores into the ranges the UI draws.

Three maps, all strictly increasing on non-degenerate input so display rank
always equals score rank:

* route totals: best route maps to 100, last displayed route to 10, and the
  same parameters rescale the per-POI scores of those routes;
* transition scores: global min/max over the displayed routes map to
  [0.1, 1];
* per-POI feature axes for the radar chart map to [1, 10], axis by axis.

Constant input has no usable slope; by convention it maps to the top of the
target range and the result carries ``degenerate = True``.

Scaled values are for display only. Scaling POIs and transitions with
different maps destroys additivity, so raw scores always travel alongside
display scores and the exact-decomposition identity is stated on raw
scores.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .features import SCALAR_UNARY_FEATURES

#: Radar chart axes: the scalar unary features that can vary between the
#: POIs of one route (trip length is query-constant, the category one-hot
#: block is not a comparable magnitude).
RADAR_AXES = tuple(n for n in SCALAR_UNARY_FEATURES if n != "trip_length")


@dataclass(frozen=True)
class AffineScale:
    """An affine display map anchored at two input points.

    ``apply`` evaluates the map in barycentric form, which lands exactly on
    ``y0``/``y1`` at the anchors (a plain a*x + b can miss an endpoint by an
    ulp). A degenerate scale maps every input to ``y1``.
    """

    x0: float
    x1: float
    y0: float
    y1: float
    degenerate: bool = False

    @property
    def a(self) -> float:
        return 0.0 if self.degenerate else (self.y1 - self.y0) / (self.x1 - self.x0)

    @property
    def b(self) -> float:
        return self.y1 if self.degenerate else self.y0 - self.a * self.x0

    def apply(self, v: float) -> float:
        if self.degenerate:
            return self.y1
        span = self.x1 - self.x0
        return self.y0 * ((self.x1 - v) / span) + self.y1 * ((v - self.x0) / span)

    def apply_all(self, values: Sequence[float]) -> list[float]:
        return [self.apply(float(v)) for v in values]


def scale_route_scores(totals: Sequence[float]) -> tuple[list[float], AffineScale]:
    """Map the displayed route totals so the first scores 100 and the last 10.

    ``totals`` must be sorted descending (the display order). With a single
    route, or all totals equal, the map is degenerate and everything scores
    100.
    """
    if not totals:
        raise ValueError("no route totals to scale")
    totals = [float(v) for v in totals]
    if any(a < b for a, b in zip(totals, totals[1:])):
        raise ValueError("route totals must be sorted descending")
    first, last = totals[0], totals[-1]
    if first == last:
        scale = AffineScale(x0=last, x1=first, y0=100.0, y1=100.0, degenerate=True)
    else:
        scale = AffineScale(x0=first, x1=last, y0=100.0, y1=10.0)
    return scale.apply_all(totals), scale


def scale_transition_scores(values: Sequence[float]) -> tuple[list[float], AffineScale]:
    """Map transition scores linearly onto [0.1, 1] over their global range.

    Constant input maps to 1.0 with the degeneracy flag set.
    """
    if len(values) == 0:
        raise ValueError("no transition scores to scale")
    values = [float(v) for v in values]
    lo, hi = min(values), max(values)
    if lo == hi:
        scale = AffineScale(x0=lo, x1=hi, y0=1.0, y1=1.0, degenerate=True)
    else:
        scale = AffineScale(x0=lo, x1=hi, y0=0.1, y1=1.0)
    return scale.apply_all(values), scale


def scale_feature_scores(rows: np.ndarray) -> tuple[np.ndarray, list[AffineScale]]:
    """Per-axis map of POI feature values onto [1, 10].

    ``rows`` has one row per displayed POI and one column per feature axis.
    An axis with no variation maps to 10 and is flagged degenerate.
    """
    rows = np.asarray(rows, dtype=float)
    if rows.ndim != 2 or rows.shape[0] == 0:
        raise ValueError("need at least one POI row to scale feature scores")
    scaled = np.empty_like(rows)
    scales: list[AffineScale] = []
    for axis in range(rows.shape[1]):
        col = rows[:, axis]
        lo, hi = float(col.min()), float(col.max())
        if lo == hi:
            scale = AffineScale(x0=lo, x1=hi, y0=10.0, y1=10.0, degenerate=True)
        else:
            scale = AffineScale(x0=lo, x1=hi, y0=1.0, y1=10.0)
        scaled[:, axis] = scale.apply_all(col)
        scales.append(scale)
    return scaled, scales
