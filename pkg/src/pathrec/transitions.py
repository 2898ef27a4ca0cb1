"""First-order Markov chain over POI transitions.

Transition counts come from consecutive POI pairs in the training
trajectories. Rows are smoothed with an additive pseudo-count so every
off-diagonal probability stays positive; self-transitions are structurally
zero because the route space forbids repeated visits.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import log

import numpy as np

from .data import Dataset
from .errors import InvalidRouteError, TrainingError, UnknownPoiError

ROW_SUM_TOLERANCE = 1e-9


@dataclass(frozen=True, eq=False)
class TransitionMatrix:
    """Row-stochastic POI-to-POI transition probabilities with log values.

    ``probs[i, j]`` is the probability of moving from ``poi_ids[i]`` to
    ``poi_ids[j]``; the diagonal is fixed at zero and ``log_probs`` carries
    ``-inf`` there.
    """

    poi_ids: tuple[int, ...]
    probs: np.ndarray
    log_probs: np.ndarray = field(init=False, repr=False)

    def __post_init__(self) -> None:
        m = len(self.poi_ids)
        if self.probs.shape != (m, m):
            raise ValueError(f"probs shape {self.probs.shape} does not match {m} POIs")
        if np.any(np.diag(self.probs) != 0.0):
            raise ValueError("self-transition probabilities must be zero")
        row_sums = self.probs.sum(axis=1)
        if np.any(np.abs(row_sums - 1.0) > ROW_SUM_TOLERANCE):
            worst = int(np.argmax(np.abs(row_sums - 1.0)))
            raise ValueError(
                f"row for POI {self.poi_ids[worst]} sums to {row_sums[worst]!r}, not 1"
            )
        with np.errstate(divide="ignore"):
            logs = np.log(self.probs)
        object.__setattr__(self, "log_probs", logs)
        object.__setattr__(self, "_index", {pid: i for i, pid in enumerate(self.poi_ids)})

    def index_of(self, poi_id: int) -> int:
        """Row/column index of ``poi_id`` in ``probs``."""
        try:
            return self._index[poi_id]
        except KeyError:
            raise UnknownPoiError(f"unknown POI id {poi_id}") from None

    def prob(self, p: int, p_next: int) -> float:
        return float(self.probs[self.index_of(p), self.index_of(p_next)])


def fit_markov(dataset: Dataset, smoothing: float = 1.0) -> TransitionMatrix:
    """Fit the transition matrix from trajectory data.

    P[p][p'] = (count(p -> p') + k) / (sum_q count(p -> q) + k * (M - 1))
    with pseudo-count ``k = smoothing`` and the diagonal excluded. With
    ``smoothing > 0`` every row is strictly positive off the diagonal; with
    ``smoothing = 0`` a POI without outgoing observations has no valid row
    and fitting fails.
    """
    if smoothing < 0:
        raise TrainingError(f"smoothing must be non-negative, got {smoothing}")
    ids = tuple(sorted(dataset.pois))
    m = len(ids)
    if m < 2:
        raise TrainingError(f"need at least 2 POIs for a transition model, got {m}")
    index = {pid: i for i, pid in enumerate(ids)}

    counts = np.zeros((m, m))
    for traj in dataset.trajectories:
        seq = traj.poi_ids
        for a, b in zip(seq, seq[1:]):
            counts[index[a], index[b]] += 1.0

    if smoothing == 0.0:
        missing = np.where(counts.sum(axis=1) == 0)[0]
        if missing.size:
            raise TrainingError(
                "no outgoing transitions observed for POI "
                f"{ids[int(missing[0])]} and smoothing is 0"
            )

    off_diag = ~np.eye(m, dtype=bool)
    smoothed = np.where(off_diag, counts + smoothing, 0.0)
    probs = smoothed / smoothed.sum(axis=1, keepdims=True)
    return TransitionMatrix(poi_ids=ids, probs=probs)


def log_transition(matrix: TransitionMatrix, p: int, p_next: int) -> float:
    """Natural log of the transition probability from p to p_next.

    Repeat visits are outside the route space, so p == p_next is an error.
    """
    if p == p_next:
        raise InvalidRouteError(f"self-transition {p} -> {p} is outside the route space")
    return log(matrix.prob(p, p_next))
