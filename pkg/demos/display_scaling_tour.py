"""The three display rescalings, endpoint by endpoint.

Raw scores are shipped untouched over the API; the UI-facing numbers are
affine rescalings with fixed anchor ranges. Each map is built from the
two extremes of the raw values, so the endpoints land exactly on the
anchors instead of merely close to them.
"""

import numpy as np

from pathrec.display import (
    RADAR_AXES,
    scale_feature_scores,
    scale_route_scores,
    scale_transition_scores,
)

rng = np.random.default_rng(3)

# Route totals arrive sorted best-first; the best becomes exactly 100 and
# the worst exactly 10.
totals = sorted(rng.normal(loc=-2.0, scale=1.5, size=10).tolist(), reverse=True)
display, scale = scale_route_scores(totals)
print("route totals  ->", [round(v, 2) for v in display])
print("  endpoints exactly 100 and 10:", display[0] == 100.0, display[-1] == 10.0)

# The same affine map is reused for per-POI bar segments so that bars from
# different routes remain comparable on one chart.
print("  a raw total of", round(totals[3], 3), "maps to", round(scale.apply(totals[3]), 3))

# Transition scores from a whole response share one [0.1, 1] map.
trans = rng.normal(loc=-1.0, scale=0.8, size=9).tolist()
scaled, _ = scale_transition_scores(trans)
print("transitions   ->", [round(v, 3) for v in scaled])
print("  span exactly [0.1, 1]:", min(scaled) == 0.1, max(scaled) == 1.0)

# Radar axes rescale each feature column to [1, 10] across the POIs being
# compared. Degenerate columns (all values equal) pin to the top instead.
rows = rng.normal(size=(5, len(RADAR_AXES)))
rows[:, 2] = 0.7  # make one axis degenerate on purpose
radar, scales = scale_feature_scores(rows)
print("radar axes:", RADAR_AXES)
print("  axis 0 spans [1, 10]:", radar[:, 0].min() == 1.0, radar[:, 0].max() == 10.0)
print("  degenerate axis 2 values:", sorted(set(radar[:, 2].tolist())))
print("  degenerate flags:", [s.degenerate for s in scales])

# All three maps are order-preserving, so argsort of display equals
# argsort of raw wherever values are distinct.
print("order preserved:", np.argsort(display).tolist() == np.argsort(totals).tolist())
