"""Pairwise POI ranker: L2-regularized squared-hinge ranking objective.

The trainable objective over precomputed feature differences
``delta = phi(x, p) - phi(x, p')`` for preferred pairs (p, p') is

    f(w) = 0.5 * w.w + C * sum_r max(0, 1 - w.delta_r)^2

which is smooth and convex, so deterministic full-batch gradient descent
with a backtracking (Armijo) line search converges from w = 0 without any
randomness.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .data import Dataset, TravelMode
from .errors import TrainingError
from .features import (
    FeatureSchema,
    Standardization,
    build_ranking_pairs,
    unary_features,
)


@dataclass(frozen=True)
class TrainConfig:
    """Hyperparameters for ranker training."""

    C: float = 10.0
    max_iters: int = 2000
    step_size: float = 1.0  # initial line-search step
    tolerance: float = 1e-6  # stop when the gradient norm falls below this
    seed: int = 0

    def __post_init__(self) -> None:
        if self.C <= 0:
            raise TrainingError(f"C must be positive, got {self.C}")
        if self.max_iters < 1:
            raise TrainingError(f"max_iters must be at least 1, got {self.max_iters}")


@dataclass(eq=False)
class TrainResult:
    """Fitted weights plus the optimization trace."""

    weights: np.ndarray
    objective: float
    iterations: int
    converged: bool
    objective_history: list[float] = field(default_factory=list)


def _check_dims(w: np.ndarray, deltas: np.ndarray) -> None:
    if deltas.ndim != 2 or w.shape != (deltas.shape[1],):
        raise TrainingError(
            f"dimension mismatch: w has shape {w.shape}, deltas {deltas.shape}"
        )


def ranksvm_objective(w: np.ndarray, deltas: np.ndarray, C: float) -> float:
    """Evaluate 0.5 ||w||^2 + C * sum max(0, 1 - w.delta)^2."""
    _check_dims(w, deltas)
    hinge = np.maximum(0.0, 1.0 - deltas @ w)
    return float(0.5 * (w @ w) + C * np.sum(hinge * hinge))


def ranksvm_gradient(w: np.ndarray, deltas: np.ndarray, C: float) -> np.ndarray:
    """Exact gradient of the objective (the squared hinge is differentiable)."""
    _check_dims(w, deltas)
    hinge = np.maximum(0.0, 1.0 - deltas @ w)
    return w - 2.0 * C * (deltas.T @ hinge)


def fit_ranksvm(deltas: np.ndarray, config: TrainConfig = TrainConfig()) -> TrainResult:
    """Minimize the pairwise objective with Armijo-backtracking descent.

    Starts at w = 0 (the optimum of a convex problem does not depend on the
    start, and zero is reproducible). The recorded objective sequence is
    non-increasing because a step is only accepted when it satisfies the
    Armijo decrease condition.
    """
    if deltas.shape[0] == 0:
        raise TrainingError("nothing to rank: no preference pairs supplied")
    C = config.C
    w = np.zeros(deltas.shape[1])
    f = ranksvm_objective(w, deltas, C)
    history = [f]
    step = config.step_size
    converged = False
    iterations = 0

    for iterations in range(1, config.max_iters + 1):
        g = ranksvm_gradient(w, deltas, C)
        gnorm_sq = float(g @ g)
        if np.sqrt(gnorm_sq) <= config.tolerance:
            converged = True
            iterations -= 1
            break
        # backtracking: shrink until Armijo sufficient decrease holds
        t = min(step * 2.0, config.step_size)
        accepted = False
        for _ in range(60):
            w_new = w - t * g
            f_new = ranksvm_objective(w_new, deltas, C)
            if f_new <= f - 1e-4 * t * gnorm_sq:
                accepted = True
                break
            t *= 0.5
        if not accepted:
            # no numerically meaningful descent step exists
            converged = True
            iterations -= 1
            break
        progress = f - f_new
        w, f, step = w_new, f_new, t
        history.append(f)
        if progress <= 1e-12 * max(1.0, abs(f)):
            # decrease has fallen below float resolution; the gradient-norm
            # target may be unreachable at this objective scale
            converged = True
            break

    return TrainResult(
        weights=w,
        objective=f,
        iterations=iterations,
        converged=converged,
        objective_history=history,
    )


def build_training_deltas(
    dataset: Dataset,
    schema: FeatureSchema,
    standardization: Standardization,
    mode: TravelMode | None = None,
) -> np.ndarray:
    """Stack phi(x, p) - phi(x, p') for every preference pair of every query.

    Pair order is fixed (queries sorted, pairs sorted by id) so the
    reduction order, and therefore training, is deterministic.
    """
    blocks = []
    for query, ranking in build_ranking_pairs(dataset, mode):
        if not ranking.pairs:
            continue
        phi = {
            pid: unary_features(query, pid, dataset.pois, schema, standardization)
            for pid in sorted(dataset.pois)
        }
        for p, p_prime in ranking.pairs:
            blocks.append(phi[p] - phi[p_prime])
    if not blocks:
        return np.zeros((0, schema.unary_dim))
    return np.array(blocks)


def train_ranksvm(
    dataset: Dataset,
    schema: FeatureSchema,
    standardization: Standardization,
    config: TrainConfig = TrainConfig(),
    mode: TravelMode | None = None,
) -> TrainResult:
    """Build the pairwise training set from a dataset and fit the ranker."""
    deltas = build_training_deltas(dataset, schema, standardization, mode)
    if deltas.shape[0] == 0:
        raise TrainingError("nothing to rank: the dataset yields no preference pairs")
    return fit_ranksvm(deltas, config)
