"""Travel route recommendation: pairwise POI ranking, Markov transitions,
exact top-k route inference, and display-ready score normalization.

The HTTP layer lives in :mod:`pathrec.service` and the operator tool in
:mod:`pathrec.cli`; neither is imported here so that importing the library
stays light.
"""

from .data import (
    DEFAULT_MODE_SPEEDS_KMH,
    POI,
    Dataset,
    Query,
    Trajectory,
    TravelMode,
    Visit,
    load_dataset,
    load_pois,
    load_trajectories,
    travel_mode,
)
from .display import (
    RADAR_AXES,
    AffineScale,
    scale_feature_scores,
    scale_route_scores,
    scale_transition_scores,
)
from .errors import (
    ConfigError,
    DataFormatError,
    InferenceError,
    InvalidQueryError,
    InvalidRouteError,
    PathrecError,
    TrainingError,
    UnknownPoiError,
)
from .evaluate import evaluate_heldout, pairs_f1, points_f1
from .features import (
    FeatureSchema,
    Standardization,
    fit_standardization,
    pairwise_features,
    raw_unary_features,
    schema_for,
    unary_features,
)
from .geo import EARTH_RADIUS_KM, haversine_km
from .inference import TopKResult, brute_force_top_k, top_k_routes
from .model import Model, score_poi, train_model
from .ranking import (
    TrainConfig,
    TrainResult,
    fit_ranksvm,
    ranksvm_gradient,
    ranksvm_objective,
)
from .scoring import ScoredRoute, route_score, validate_route
from .transitions import TransitionMatrix, fit_markov, log_transition

__version__ = "1.0.0"

__all__ = [
    "DEFAULT_MODE_SPEEDS_KMH",
    "EARTH_RADIUS_KM",
    "RADAR_AXES",
    "AffineScale",
    "ConfigError",
    "DataFormatError",
    "Dataset",
    "FeatureSchema",
    "InferenceError",
    "InvalidQueryError",
    "InvalidRouteError",
    "Model",
    "POI",
    "PathrecError",
    "Query",
    "ScoredRoute",
    "Standardization",
    "TopKResult",
    "TrainConfig",
    "TrainResult",
    "Trajectory",
    "TransitionMatrix",
    "TravelMode",
    "TrainingError",
    "UnknownPoiError",
    "Visit",
    "brute_force_top_k",
    "evaluate_heldout",
    "fit_markov",
    "fit_ranksvm",
    "fit_standardization",
    "haversine_km",
    "load_dataset",
    "load_pois",
    "load_trajectories",
    "pairs_f1",
    "pairwise_features",
    "points_f1",
    "raw_unary_features",
    "ranksvm_gradient",
    "ranksvm_objective",
    "route_score",
    "scale_feature_scores",
    "scale_route_scores",
    "scale_transition_scores",
    "schema_for",
    "score_poi",
    "top_k_routes",
    "train_model",
    "travel_mode",
    "unary_features",
    "validate_route",
]
