"""Shared fixtures: toy datasets, a trained synthetic model, random models."""

import numpy as np
import pytest

from pathrec.data import (
    DEFAULT_MODE_SPEEDS_KMH,
    POI,
    Dataset,
    Query,
    Trajectory,
    Visit,
    load_dataset,
    travel_mode,
)
from pathrec.features import FeatureSchema, fit_standardization, raw_unary_features
from pathrec.model import Model, train_model
from pathrec.ranking import TrainConfig
from pathrec.synth import write_fixture
from pathrec.transitions import TransitionMatrix


def make_poi(pid, lat, lon, category="museum", popularity=0, visits=None, avg_duration=0.0):
    return POI(
        id=pid,
        name=f"POI {pid}",
        category=category,
        lat=lat,
        lon=lon,
        popularity=popularity,
        visits=popularity if visits is None else visits,
        avg_duration=avg_duration,
    )


def seq_trajectory(traj_id, poi_seq, user="u1", t0=1_000_000, duration=600, gap=60):
    """Build a trajectory visiting ``poi_seq`` in order with synthetic times."""
    t = t0
    visits = []
    for pid in poi_seq:
        visits.append(Visit(user, traj_id, pid, t, t + duration))
        t += duration + gap
    return Trajectory(traj_id, tuple(visits))


def build_dataset(pois, seqs):
    """Dataset from POIs (stats as given) and (traj_id, user, sequence) triples."""
    trajectories = tuple(
        seq_trajectory(tid, seq, user=user, t0=1_000_000 + 10_000 * i)
        for i, (tid, user, seq) in enumerate(seqs)
    )
    return Dataset(pois=pois, trajectories=trajectories)


def make_random_model(rng, m, alpha=0.5, categories=("museum", "park")):
    """A structurally valid model with random weights and transitions.

    Used where inference behaviour matters but training provenance does not:
    uniform POI grid, smoothed random transition rows, standardization
    fitted on a reference query so unary scores sit at a realistic scale.
    """
    pois = {}
    for i in range(m):
        pop = int(rng.integers(1, 50))
        pois[i + 1] = POI(
            id=i + 1,
            name=f"P{i + 1}",
            category=categories[i % len(categories)],
            lat=round(45.0 + 0.01 * float(rng.integers(-40, 41)), 6),
            lon=round(7.0 + 0.01 * float(rng.integers(-40, 41)), 6),
            popularity=pop,
            visits=pop + int(rng.integers(0, 20)),
            avg_duration=float(rng.integers(300, 3600)),
        )
    schema = FeatureSchema(categories=tuple(sorted(set(categories))))
    ref = Query(start=1, length=3, mode=travel_mode("walking"))
    rows = np.array([raw_unary_features(ref, pid, pois, schema) for pid in sorted(pois)])
    standardization = fit_standardization(rows, schema)
    weights = rng.normal(size=schema.unary_dim)
    raw = rng.uniform(0.05, 1.0, size=(m, m))
    np.fill_diagonal(raw, 0.0)
    probs = raw / raw.sum(axis=1, keepdims=True)
    return Model(
        schema=schema,
        standardization=standardization,
        weights=weights,
        C=10.0,
        alpha=alpha,
        kappa=1.0,
        neighbourhood_radius_km=1.0,
        mode_speeds_kmh=dict(DEFAULT_MODE_SPEEDS_KMH),
        transitions=TransitionMatrix(poi_ids=tuple(sorted(pois)), probs=probs),
        pois=pois,
    )


@pytest.fixture(scope="session")
def synth_summary(tmp_path_factory):
    out = tmp_path_factory.mktemp("synth")
    return write_fixture(out, num_pois=8, num_trajectories=60, seed=20240817)


@pytest.fixture(scope="session")
def synth_dataset(synth_summary):
    return load_dataset(synth_summary["pois_path"], synth_summary["trajectories_path"])


@pytest.fixture(scope="session")
def trained_model(synth_dataset):
    model, _ = train_model(synth_dataset, TrainConfig(C=10.0, max_iters=300))
    return model
