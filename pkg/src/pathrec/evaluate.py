"""Held-out evaluation: compare top-1 predictions against real trajectories.

For every held-out trajectory the model answers the query ``(first POI,
length)`` and the predicted route is compared with the actual one on two
overlap metrics:

* points-F1 over the unordered POI sets;
* pairs-F1 over the ordered consecutive POI pairs, which is sensitive to
  visiting order (a permuted route can score 1.0 on points and 0.0 on
  pairs).

Held-out files may mention POIs the model has never seen, so trajectories
are parsed leniently here; queries the model cannot answer are skipped and
counted by reason rather than failing the run.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .data import (
    TRAJECTORY_HEADER,
    Trajectory,
    Visit,
    _read_rows,
    clean_visit_sequence,
)
from .errors import DataFormatError
from .inference import top_k_routes
from .model import Model

SKIP_TOO_SHORT = "too_short"
SKIP_UNKNOWN_START = "unknown_start"
SKIP_INFEASIBLE_LENGTH = "infeasible_length"


def f1_score(predicted: set, actual: set) -> float:
    """Harmonic mean of precision and recall over two sets."""
    if not predicted and not actual:
        return 1.0
    overlap = len(predicted & actual)
    if overlap == 0:
        return 0.0
    precision = overlap / len(predicted)
    recall = overlap / len(actual)
    return 2.0 * precision * recall / (precision + recall)


def points_f1(predicted: Sequence[int], actual: Sequence[int]) -> float:
    """F1 over the POI sets, ignoring visiting order."""
    return f1_score(set(predicted), set(actual))


def pairs_f1(predicted: Sequence[int], actual: Sequence[int]) -> float:
    """F1 over ordered consecutive POI pairs."""
    return f1_score(set(zip(predicted, predicted[1:])), set(zip(actual, actual[1:])))


def load_heldout_trajectories(path: str | Path) -> list[Trajectory]:
    """Parse a trajectory CSV without checking POI ids against any table.

    Grouping, arrival sorting and repeat cleaning match the training
    loader; the only difference is that unknown POI ids are allowed through
    so the evaluation layer can decide what to skip.
    """
    visits = []
    for lineno, row in enumerate(_read_rows(path, TRAJECTORY_HEADER), start=2):
        if not row or all(not c.strip() for c in row):
            continue
        if len(row) != 5:
            raise DataFormatError(f"{path} row {lineno}: expected 5 fields, got {len(row)}")
        try:
            visits.append(Visit(row[0], row[1], int(row[2]), int(row[3]), int(row[4])))
        except (ValueError, DataFormatError) as exc:
            raise DataFormatError(f"{path} row {lineno}: {exc}") from None

    groups: dict[str, list[Visit]] = {}
    for v in visits:
        groups.setdefault(v.traj_id, []).append(v)

    trajectories = []
    for traj_id, group in groups.items():
        group.sort(key=lambda v: v.arrival)
        for i, part in enumerate(clean_visit_sequence(group)):
            part_id = traj_id if i == 0 else f"{traj_id}#{i + 1}"
            trajectories.append(Trajectory(part_id, tuple(part)))
    return trajectories


@dataclass(frozen=True)
class TrajectoryEval:
    """Scores of one evaluated held-out trajectory."""

    traj_id: str
    start: int
    length: int
    predicted: tuple[int, ...]
    actual: tuple[int, ...]
    points_f1: float
    pairs_f1: float


@dataclass
class EvalReport:
    """All per-trajectory results plus skip counts."""

    results: list[TrajectoryEval]
    skipped: dict[str, int]

    @property
    def mean_points_f1(self) -> float | None:
        if not self.results:
            return None
        return sum(r.points_f1 for r in self.results) / len(self.results)

    @property
    def mean_pairs_f1(self) -> float | None:
        if not self.results:
            return None
        return sum(r.pairs_f1 for r in self.results) / len(self.results)

    def to_json_dict(self) -> dict:
        return {
            "evaluated": len(self.results),
            "skipped": {k: self.skipped[k] for k in sorted(self.skipped)},
            "mean_points_f1": self.mean_points_f1,
            "mean_pairs_f1": self.mean_pairs_f1,
            "results": [
                {
                    "traj_id": r.traj_id,
                    "start": r.start,
                    "length": r.length,
                    "predicted": list(r.predicted),
                    "actual": list(r.actual),
                    "points_f1": r.points_f1,
                    "pairs_f1": r.pairs_f1,
                }
                for r in self.results
            ],
        }


def evaluate_heldout(
    model: Model, trajectories: Sequence[Trajectory], mode_name: str = "walking"
) -> EvalReport:
    """Score the model's top-1 route against each held-out trajectory."""
    results: list[TrajectoryEval] = []
    skipped = {SKIP_TOO_SHORT: 0, SKIP_UNKNOWN_START: 0, SKIP_INFEASIBLE_LENGTH: 0}

    for traj in trajectories:
        actual = traj.poi_ids
        length = len(actual)
        if length < 2:
            skipped[SKIP_TOO_SHORT] += 1
            continue
        if actual[0] not in model.pois:
            skipped[SKIP_UNKNOWN_START] += 1
            continue
        if length > len(model.pois):
            skipped[SKIP_INFEASIBLE_LENGTH] += 1
            continue
        query = model.query(actual[0], length, mode_name)
        predicted = top_k_routes(model, query, 1).routes[0].pois
        results.append(
            TrajectoryEval(
                traj_id=traj.traj_id,
                start=actual[0],
                length=length,
                predicted=predicted,
                actual=actual,
                points_f1=points_f1(predicted, actual),
                pairs_f1=pairs_f1(predicted, actual),
            )
        )
    return EvalReport(results=results, skipped=skipped)
