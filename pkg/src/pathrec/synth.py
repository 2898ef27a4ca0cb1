"""Deterministic synthetic fixtures with planted, recoverable structure.

The generator plants two signals a trained model should pick up:

* one POI gets an attractiveness far above everyone else, so it appears in
  most trajectories and dominates the popularity/visits/duration features;
* within a trajectory, POIs are visited in nearest-neighbour order, which
  concentrates transition probability on spatially close pairs.

A ground-truth JSON records the planted top POI and the evaluation queries,
so recovery tests can ask: does a model retrained on these files rank the
planted POI first?
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from . import jsonio
from .data import POI, Dataset, Trajectory, Visit, save_pois, save_trajectories
from .errors import ConfigError
from .geo import haversine_km
from .model import Model, score_poi

CATEGORIES = ("museum", "park", "historic", "viewpoint")

#: Attractiveness of the planted POI versus roughly 0.5-2 for the rest.
PLANTED_ATTRACTIVENESS = 60.0

CENTER_LAT = 45.0
CENTER_LON = 7.0

TRUTH_FILENAME = "ground_truth.json"
POIS_FILENAME = "pois.csv"
TRAJECTORIES_FILENAME = "trajectories.csv"


def generate_dataset(
    num_pois: int, num_trajectories: int, seed: int
) -> tuple[dict[int, POI], list[Trajectory], dict]:
    """Build POIs, trajectories and the ground-truth record in memory."""
    if num_pois < 3:
        raise ConfigError(f"need at least 3 POIs, got {num_pois}")
    if num_trajectories < 1:
        raise ConfigError(f"need at least 1 trajectory, got {num_trajectories}")

    rng = np.random.default_rng(seed)
    ids = list(range(1, num_pois + 1))

    offsets = rng.uniform(-0.05, 0.05, size=(num_pois, 2))
    pois = {
        pid: POI(
            id=pid,
            name=f"POI {pid}",
            category=CATEGORIES[i % len(CATEGORIES)],
            lat=round(float(CENTER_LAT + offsets[i, 0]), 6),
            lon=round(float(CENTER_LON + offsets[i, 1]), 6),
        )
        for i, pid in enumerate(ids)
    }

    attractiveness = rng.uniform(0.5, 2.0, size=num_pois)
    planted_idx = int(rng.integers(0, num_pois))
    attractiveness[planted_idx] = PLANTED_ATTRACTIVENESS
    planted = ids[planted_idx]

    max_len = min(5, num_pois)
    t = 1_600_000_000
    trajectories: list[Trajectory] = []
    for i in range(num_trajectories):
        length = int(rng.integers(2, max_len + 1))
        start = ids[int(rng.integers(0, num_pois))]
        others = [pid for pid in ids if pid != start]
        weights = np.array([attractiveness[pid - 1] for pid in others])
        chosen = rng.choice(others, size=length - 1, replace=False, p=weights / weights.sum())
        route = [start] + _nearest_neighbour_order(start, [int(p) for p in chosen], pois)

        visits = []
        clock = t
        for pid in route:
            duration = int(900 + 120 * attractiveness[pid - 1])
            visits.append(
                Visit(
                    user_id=f"user{i + 1}",
                    traj_id=f"t{i + 1}",
                    poi_id=pid,
                    arrival=clock,
                    departure=clock + duration,
                )
            )
            clock += duration + 600
        trajectories.append(Trajectory(traj_id=f"t{i + 1}", visits=tuple(visits)))
        t += 86_400

    truth = {
        "seed": seed,
        "num_pois": num_pois,
        "num_trajectories": num_trajectories,
        "planted_top": planted,
        "attractiveness": [[pid, float(attractiveness[pid - 1])] for pid in ids],
        "eval_queries": [[pid, 3] for pid in ids if pid != planted],
    }
    return pois, trajectories, truth


def _nearest_neighbour_order(start: int, chosen: list[int], pois: dict[int, POI]) -> list[int]:
    """Visit the chosen POIs greedily by distance, ties to the smaller id."""
    order = []
    current = pois[start]
    remaining = sorted(chosen)
    while remaining:
        nxt = min(remaining, key=lambda pid: (haversine_km(current.lat, current.lon, pois[pid].lat, pois[pid].lon), pid))
        order.append(nxt)
        remaining.remove(nxt)
        current = pois[nxt]
    return order


def write_fixture(out_dir: str | Path, num_pois: int, num_trajectories: int, seed: int) -> dict:
    """Generate and write the CSV pair plus the ground-truth JSON.

    Returns a summary with the file paths and the planted POI id. Identical
    arguments produce byte-identical files.
    """
    pois, trajectories, truth = generate_dataset(num_pois, num_trajectories, seed)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    pois_path = out / POIS_FILENAME
    trajs_path = out / TRAJECTORIES_FILENAME
    truth_path = out / TRUTH_FILENAME

    save_pois(pois, pois_path)
    save_trajectories(Dataset(pois=pois, trajectories=tuple(trajectories)), trajs_path)
    truth_path.write_bytes(jsonio.dump_bytes(truth))

    return {
        "pois_path": str(pois_path),
        "trajectories_path": str(trajs_path),
        "truth_path": str(truth_path),
        "planted_top": truth["planted_top"],
        "num_pois": num_pois,
        "num_trajectories": num_trajectories,
        "seed": seed,
    }


def planted_top_rate(model: Model, truth: dict) -> float:
    """Fraction of ground-truth queries whose best-scored POI is the planted one.

    For each evaluation query the candidate set is every POI except the
    start; candidates are ranked by the model's unary score with ties going
    to the smaller id.
    """
    planted = int(truth["planted_top"])
    queries = truth["eval_queries"]
    if not queries:
        raise ConfigError("ground truth contains no evaluation queries")
    hits = 0
    for s, length in queries:
        query = model.query(int(s), int(length))
        best = max(
            (pid for pid in model.pois if pid != query.start),
            key=lambda pid: (score_poi(model, query, pid), -pid),
        )
        hits += best == planted
    return hits / len(queries)
