"""Query-POI feature extraction and ranking-pair construction.

The unary feature vector for a (query, POI) pair concatenates a category
one-hot block with scalar features (popularity, visit counts, differences
relative to the query's start POI, distance to start, trip length). Scalar
features are standardized to zero mean / unit variance with statistics
frozen at training time; the one-hot block and the trip length pass through
unchanged.

Pairwise features describe one transition: distance, travel time for the
query's mode, and same-category / same-neighbourhood indicators.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .data import Dataset, POI, Query, TravelMode, travel_mode
from .errors import UnknownPoiError
from .geo import haversine_km

SCHEMA_VERSION = 1

#: Scalar unary features, appended after the category one-hot block.
SCALAR_UNARY_FEATURES = (
    "popularity",
    "visits",
    "avg_duration",
    "popularity_diff",
    "visits_diff",
    "duration_diff",
    "dist_to_start",
    "same_category_as_start",
    "trip_length",
)

PAIRWISE_FEATURES = ("distance_km", "travel_time_h", "same_category", "same_neighbourhood")

DEFAULT_NEIGHBOURHOOD_RADIUS_KM = 1.0


@dataclass(frozen=True)
class FeatureSchema:
    """Fixed feature ordering for a trained model's lifetime."""

    categories: tuple[str, ...]
    version: int = SCHEMA_VERSION

    @property
    def unary_names(self) -> tuple[str, ...]:
        return tuple(f"category={c}" for c in self.categories) + SCALAR_UNARY_FEATURES

    @property
    def pairwise_names(self) -> tuple[str, ...]:
        return PAIRWISE_FEATURES

    @property
    def unary_dim(self) -> int:
        return len(self.categories) + len(SCALAR_UNARY_FEATURES)

    def standardized_mask(self) -> np.ndarray:
        """Boolean mask of unary entries that get standardized.

        The one-hot block and trip_length are exempt.
        """
        mask = np.ones(self.unary_dim, dtype=bool)
        mask[: len(self.categories)] = False
        mask[self.unary_names.index("trip_length")] = False
        return mask


def schema_for(dataset: Dataset) -> FeatureSchema:
    """Derive the schema (category vocabulary) from a dataset."""
    categories = tuple(sorted({p.category for p in dataset.pois.values()}))
    return FeatureSchema(categories=categories)


def _require_poi(pois: Mapping[int, POI], poi_id: int) -> POI:
    try:
        return pois[poi_id]
    except KeyError:
        raise UnknownPoiError(f"unknown POI id {poi_id}") from None


def raw_unary_features(query: Query, poi_id: int, pois: Mapping[int, POI], schema: FeatureSchema) -> np.ndarray:
    """Unstandardized unary feature vector for one (query, POI) pair."""
    poi = _require_poi(pois, poi_id)
    start = _require_poi(pois, query.start)
    x = np.zeros(schema.unary_dim)
    if poi.category in schema.categories:
        x[schema.categories.index(poi.category)] = 1.0
    base = len(schema.categories)
    x[base + 0] = poi.popularity
    x[base + 1] = poi.visits
    x[base + 2] = poi.avg_duration
    x[base + 3] = poi.popularity - start.popularity
    x[base + 4] = poi.visits - start.visits
    x[base + 5] = poi.avg_duration - start.avg_duration
    x[base + 6] = haversine_km(poi.lat, poi.lon, start.lat, start.lon)
    x[base + 7] = 1.0 if poi.category == start.category else 0.0
    x[base + 8] = query.length
    return x


@dataclass(frozen=True, eq=False)
class Standardization:
    """Per-feature affine normalization frozen at training time."""

    mean: np.ndarray
    std: np.ndarray

    def apply(self, x: np.ndarray) -> np.ndarray:
        return (x - self.mean) / self.std

    @classmethod
    def identity(cls, dim: int) -> "Standardization":
        return cls(mean=np.zeros(dim), std=np.ones(dim))


def fit_standardization(
    rows: np.ndarray, schema: FeatureSchema, eps: float = 1e-12
) -> Standardization:
    """Compute frozen standardization statistics from raw feature rows.

    Exempt entries (one-hot block, trip_length) keep mean 0 / std 1; a
    zero-variance feature keeps std 1 so standardizing stays well defined.
    """
    mask = schema.standardized_mask()
    mean = np.zeros(schema.unary_dim)
    std = np.ones(schema.unary_dim)
    mean[mask] = rows[:, mask].mean(axis=0)
    sd = rows[:, mask].std(axis=0)
    std[mask] = np.where(sd > eps, sd, 1.0)
    return Standardization(mean=mean, std=std)


def unary_features(
    query: Query,
    poi_id: int,
    pois: Mapping[int, POI],
    schema: FeatureSchema,
    standardization: Standardization,
) -> np.ndarray:
    """Standardized unary feature vector per the schema."""
    return standardization.apply(raw_unary_features(query, poi_id, pois, schema))


def pairwise_features(
    p: int,
    p_next: int,
    mode: TravelMode,
    pois: Mapping[int, POI],
    schema: FeatureSchema,
    neighbourhood_radius_km: float = DEFAULT_NEIGHBOURHOOD_RADIUS_KM,
) -> np.ndarray:
    """Transition feature vector for one ordered POI pair."""
    a = _require_poi(pois, p)
    b = _require_poi(pois, p_next)
    dist = haversine_km(a.lat, a.lon, b.lat, b.lon)
    return np.array(
        [
            dist,
            dist / mode.speed_kmh,
            1.0 if a.category == b.category else 0.0,
            1.0 if dist <= neighbourhood_radius_km else 0.0,
        ]
    )


@dataclass(frozen=True)
class RankingPairs:
    """Observation counts and the induced ordered preference pairs for one query.

    ``pairs`` holds every (p, p') with count(p) > count(p'), so the relation
    is irreflexive and antisymmetric by construction.
    """

    counts: Mapping[int, int]
    pairs: tuple[tuple[int, int], ...]


def training_queries(dataset: Dataset, mode: TravelMode | None = None) -> list[Query]:
    """Distinct (start, length) queries observed in the training trajectories.

    Trajectories shorter than 2 POIs cannot form a valid query and are
    skipped. Queries are returned sorted for deterministic downstream order.
    """
    mode = mode or travel_mode("walking")
    seen: set[tuple[int, int]] = set()
    for traj in dataset.trajectories:
        if len(traj) >= 2:
            seen.add((traj.poi_ids[0], len(traj)))
    return [Query(start=s, length=l, mode=mode) for s, l in sorted(seen)]


def build_ranking_pairs(
    dataset: Dataset, mode: TravelMode | None = None
) -> list[tuple[Query, RankingPairs]]:
    """Per-query POI occurrence counts and preference pairs.

    For a query (s, l), count(p) is the number of training trajectories with
    start s and length l that contain p; POIs never observed for the query
    count 0. Pairs (p, p') require a strictly larger count for p, over the
    full POI set.
    """
    all_ids = sorted(dataset.pois)
    result = []
    for query in training_queries(dataset, mode):
        counts = {pid: 0 for pid in all_ids}
        for traj in dataset.trajectories:
            if len(traj) >= 2 and traj.poi_ids[0] == query.start and len(traj) == query.length:
                for pid in traj.poi_ids:
                    counts[pid] += 1
        pairs = tuple(
            (p, q) for p in all_ids for q in all_ids if counts[p] > counts[q]
        )
        result.append((query, RankingPairs(counts=counts, pairs=pairs)))
    return result


def feature_rows(
    dataset: Dataset, schema: FeatureSchema, queries: Sequence[Query]
) -> np.ndarray:
    """Stack raw unary features for every (query, POI) combination."""
    rows = [
        raw_unary_features(q, pid, dataset.pois, schema)
        for q in queries
        for pid in sorted(dataset.pois)
    ]
    return np.array(rows) if rows else np.zeros((0, schema.unary_dim))
