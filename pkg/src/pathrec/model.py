"""Trained model bundle and its versioned JSON file format.

A model file is self-contained for inference: besides the learned weight
vector it stores the feature schema, frozen standardization statistics, the
smoothed transition matrix, the unary/transition trade-off alpha, mode
speeds, the neighbourhood radius, and the POI table with derived
statistics, so a recommendation needs nothing but the model file.

The ``model_version`` string is a content hash of the serialized model, so
retraining with identical inputs and settings reproduces it exactly.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping

import numpy as np

from . import jsonio
from .data import (
    DEFAULT_MODE_SPEEDS_KMH,
    Dataset,
    POI,
    Query,
    TravelMode,
    travel_mode,
)
from .errors import DataFormatError, TrainingError, UnknownPoiError
from .features import (
    DEFAULT_NEIGHBOURHOOD_RADIUS_KM,
    FeatureSchema,
    Standardization,
    feature_rows,
    fit_standardization,
    schema_for,
    training_queries,
    unary_features,
)
from .ranking import TrainConfig, TrainResult, build_training_deltas, fit_ranksvm
from .transitions import TransitionMatrix, fit_markov, log_transition

MODEL_FORMAT_VERSION = 1

#: Trade-off between unary affinity and transition preference.
DEFAULT_ALPHA = 0.5
DEFAULT_SMOOTHING = 1.0


@dataclass(eq=False)
class Model:
    """Everything needed to score and rank routes for queries."""

    schema: FeatureSchema
    standardization: Standardization
    weights: np.ndarray
    C: float
    alpha: float
    kappa: float
    neighbourhood_radius_km: float
    mode_speeds_kmh: Mapping[str, float]
    transitions: TransitionMatrix
    pois: Mapping[int, POI]
    version: str = ""
    train_meta: dict = field(default_factory=dict)
    _unary_cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        if not 0.0 <= self.alpha <= 1.0:
            raise ValueError(f"alpha must be in [0, 1], got {self.alpha}")
        if self.weights.shape != (self.schema.unary_dim,):
            raise ValueError(
                f"weight vector has shape {self.weights.shape}, "
                f"schema expects ({self.schema.unary_dim},)"
            )
        if not self.version:
            self.version = self._content_hash()

    # -- scoring primitives -------------------------------------------------

    def mode(self, name: str) -> TravelMode:
        return travel_mode(name, self.mode_speeds_kmh)

    def query(self, start: int, length: int, mode_name: str = "walking") -> Query:
        if start not in self.pois:
            raise UnknownPoiError(f"unknown start POI id {start}")
        return Query(start=start, length=length, mode=self.mode(mode_name))

    def unary_score(self, query: Query, poi_id: int) -> float:
        """w . phi(x, p) with standardized features (mode independent)."""
        key = (query.start, query.length, poi_id)
        cached = self._unary_cache.get(key)
        if cached is None:
            phi = unary_features(query, poi_id, self.pois, self.schema, self.standardization)
            cached = float(np.dot(self.weights, phi))
            self._unary_cache[key] = cached
        return cached

    def log_transition(self, p: int, p_next: int) -> float:
        return log_transition(self.transitions, p, p_next)

    # -- serialization ------------------------------------------------------

    def to_json_dict(self) -> dict:
        body = {
            "format_version": MODEL_FORMAT_VERSION,
            "model_version": self.version,
            "schema": {
                "version": self.schema.version,
                "categories": list(self.schema.categories),
                "unary": list(self.schema.unary_names),
                "pairwise": list(self.schema.pairwise_names),
            },
            "standardization": {
                "mean": self.standardization.mean,
                "std": self.standardization.std,
            },
            "weights": self.weights,
            "C": float(self.C),
            "alpha": float(self.alpha),
            "kappa": float(self.kappa),
            "neighbourhood_radius_km": float(self.neighbourhood_radius_km),
            "mode_speeds_kmh": {k: float(v) for k, v in sorted(self.mode_speeds_kmh.items())},
            "transitions": {
                "poi_ids": list(self.transitions.poi_ids),
                "probs": self.transitions.probs,
            },
            "pois": [
                {
                    "id": p.id,
                    "name": p.name,
                    "category": p.category,
                    "lat": p.lat,
                    "lon": p.lon,
                    "popularity": p.popularity,
                    "visits": p.visits,
                    "avg_duration": p.avg_duration,
                }
                for p in (self.pois[i] for i in sorted(self.pois))
            ],
            "train_meta": self.train_meta,
        }
        return body

    def _content_hash(self) -> str:
        body = self.to_json_dict()
        body["model_version"] = ""
        return hashlib.sha256(jsonio.dump_bytes(body)).hexdigest()[:12]

    def save(self, path: str | Path) -> None:
        Path(path).write_bytes(jsonio.dump_bytes(self.to_json_dict()))

    @classmethod
    def from_json_dict(cls, body: dict) -> "Model":
        if body.get("format_version") != MODEL_FORMAT_VERSION:
            raise DataFormatError(
                f"unsupported model format_version {body.get('format_version')!r}"
            )
        schema = FeatureSchema(
            categories=tuple(body["schema"]["categories"]),
            version=int(body["schema"]["version"]),
        )
        if list(schema.unary_names) != list(body["schema"]["unary"]):
            raise DataFormatError("model file unary feature list does not match schema")
        pois = {}
        for row in body["pois"]:
            poi = POI(
                id=int(row["id"]),
                name=row["name"],
                category=row["category"],
                lat=float(row["lat"]),
                lon=float(row["lon"]),
                popularity=int(row["popularity"]),
                visits=int(row["visits"]),
                avg_duration=float(row["avg_duration"]),
            )
            pois[poi.id] = poi
        transitions = TransitionMatrix(
            poi_ids=tuple(int(i) for i in body["transitions"]["poi_ids"]),
            probs=np.array(body["transitions"]["probs"], dtype=float),
        )
        return cls(
            schema=schema,
            standardization=Standardization(
                mean=np.array(body["standardization"]["mean"], dtype=float),
                std=np.array(body["standardization"]["std"], dtype=float),
            ),
            weights=np.array(body["weights"], dtype=float),
            C=float(body["C"]),
            alpha=float(body["alpha"]),
            kappa=float(body["kappa"]),
            neighbourhood_radius_km=float(body["neighbourhood_radius_km"]),
            mode_speeds_kmh=dict(body["mode_speeds_kmh"]),
            transitions=transitions,
            pois=pois,
            version=body["model_version"],
            train_meta=dict(body.get("train_meta", {})),
        )

    @classmethod
    def load(cls, path: str | Path) -> "Model":
        import json

        path = Path(path)
        if not path.exists():
            raise DataFormatError(f"model file not found: {path}")
        try:
            body = json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise DataFormatError(f"{path}: not valid JSON: {exc}") from exc
        return cls.from_json_dict(body)


def score_poi(model: Model, query: Query, poi_id: int) -> float:
    """Rank score of one POI for a query under the trained weights."""
    if poi_id not in model.pois:
        raise UnknownPoiError(f"unknown POI id {poi_id}")
    return model.unary_score(query, poi_id)


def train_model(
    dataset: Dataset,
    config: TrainConfig = TrainConfig(),
    alpha: float = DEFAULT_ALPHA,
    kappa: float = DEFAULT_SMOOTHING,
    neighbourhood_radius_km: float = DEFAULT_NEIGHBOURHOOD_RADIUS_KM,
    mode_speeds_kmh: Mapping[str, float] | None = None,
) -> tuple[Model, TrainResult]:
    """Full training pipeline: schema, standardization, ranker, transitions."""
    speeds = dict(mode_speeds_kmh or DEFAULT_MODE_SPEEDS_KMH)
    schema = schema_for(dataset)
    queries = training_queries(dataset)
    rows = feature_rows(dataset, schema, queries)
    standardization = (
        fit_standardization(rows, schema) if rows.size else Standardization.identity(schema.unary_dim)
    )
    deltas = build_training_deltas(dataset, schema, standardization)
    if deltas.shape[0] == 0:
        raise TrainingError("nothing to rank: the dataset yields no preference pairs")
    result = fit_ranksvm(deltas, config)
    transitions = fit_markov(dataset, smoothing=kappa)
    model = Model(
        schema=schema,
        standardization=standardization,
        weights=result.weights,
        C=config.C,
        alpha=alpha,
        kappa=kappa,
        neighbourhood_radius_km=neighbourhood_radius_km,
        mode_speeds_kmh=speeds,
        transitions=transitions,
        pois=dict(dataset.pois),
        train_meta={
            "objective": result.objective,
            "iterations": result.iterations,
            "converged": result.converged,
            "pair_count": int(deltas.shape[0]),
            "seed": config.seed,
        },
    )
    return model, result
