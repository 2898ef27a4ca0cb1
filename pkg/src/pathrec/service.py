"""HTTP/JSON API serving recommendations to the web client.

The service is stateless: every request is validated from scratch against
the current immutable model snapshot, so replicas answer identically and
nothing is stored between calls. Responses are rendered through the
package's own float-exact JSON writer, which makes identical requests
byte-identical and lets raw score identities survive the wire.

Response assembly lives in plain functions so the command line tool can
emit exactly the same payloads without going through HTTP.
"""

from __future__ import annotations

import json
from typing import Mapping, Sequence

import numpy as np
from fastapi import FastAPI, Request, Response

from . import jsonio
from .data import Query
from .display import (
    RADAR_AXES,
    scale_feature_scores,
    scale_route_scores,
    scale_transition_scores,
)
from .errors import InferenceError, InvalidQueryError, UnknownPoiError
from .features import raw_unary_features
from .inference import top_k_routes
from .model import Model
from .scoring import validate_route

#: Version of the wire format; bumped on breaking payload changes.
SERVICE_SCHEMA_VERSION = 1

#: Radar scaling is computed over the checked POIs of one route, not the
#: whole dataset; responses carry the scope so clients need not guess.
RADAR_SCOPE = "route"

MAX_K = 50
DEFAULT_K = 10


class ServiceError(Exception):
    """Validation failure carrying an HTTP status and a machine-readable code."""

    def __init__(self, status: int, code: str, message: str) -> None:
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message


class ModelHolder:
    """Mutable cell holding the current model snapshot.

    Swapping is a single attribute assignment, so readers always observe
    either the old snapshot or the new one, never a mixture; in-flight
    requests keep the reference they already took.
    """

    def __init__(self, model: Model | None = None) -> None:
        self._model = model

    def get(self) -> Model | None:
        return self._model

    def swap(self, model: Model | None) -> None:
        self._model = model

    def require(self) -> Model:
        model = self._model
        if model is None:
            raise ServiceError(503, "model_unavailable", "no model is loaded")
        return model


# -- request validation -----------------------------------------------------


def _require_int(body: Mapping, name: str, default: int | None = None) -> int:
    if name not in body:
        if default is not None:
            return default
        raise ServiceError(400, "bad_request", f"missing required field {name!r}")
    value = body[name]
    if isinstance(value, bool) or not isinstance(value, int):
        raise ServiceError(400, "bad_request", f"field {name!r} must be an integer")
    return value


def parse_recommend_request(model: Model, body: object) -> tuple[Query, int]:
    """Validate a /recommend payload against the model; returns (query, k)."""
    if not isinstance(body, dict):
        raise ServiceError(400, "bad_request", "request body must be a JSON object")
    start = _require_int(body, "start_poi")
    length = _require_int(body, "length")
    k = _require_int(body, "k", default=DEFAULT_K)
    mode = body.get("mode")
    if mode is None:
        raise ServiceError(400, "bad_request", "missing required field 'mode'")
    if not isinstance(mode, str):
        raise ServiceError(400, "bad_request", "field 'mode' must be a string")

    if not 1 <= k <= MAX_K:
        raise ServiceError(400, "bad_k", f"k must lie in [1, {MAX_K}], got {k}")
    if mode not in model.mode_speeds_kmh:
        known = ", ".join(sorted(model.mode_speeds_kmh))
        raise ServiceError(400, "bad_mode", f"unknown mode {mode!r} (known: {known})")
    if start not in model.pois:
        raise ServiceError(400, "unknown_poi", f"unknown start POI id {start}")
    if length < 2:
        raise ServiceError(400, "bad_length", f"trip length must be at least 2, got {length}")
    if length > len(model.pois):
        raise ServiceError(
            422,
            "infeasible_length",
            f"trip length {length} exceeds the {len(model.pois)} known POIs",
        )
    return model.query(start, length, mode), k


# -- payload builders -------------------------------------------------------


def _poi_entry(model: Model, poi_id: int) -> dict:
    p = model.pois[poi_id]
    return {"id": p.id, "name": p.name, "category": p.category, "lat": p.lat, "lon": p.lon}


def build_recommend_response(model: Model, query: Query, k: int) -> dict:
    """Run inference and assemble the full response payload.

    Raw scores are shipped untouched so the additive decomposition holds
    exactly; display scores are the affine rescalings, POI scores reusing
    the route-total map and transitions sharing one global [0.1, 1] map.
    """
    result = top_k_routes(model, query, k)
    routes = result.routes

    display_totals, route_scale = scale_route_scores([r.total for r in routes])
    all_transitions = [v for r in routes for v in r.transition_scores]
    scaled_transitions, transition_scale = scale_transition_scores(all_transitions)

    route_payloads = []
    cursor = 0
    for i, route in enumerate(routes):
        n_trans = len(route.transition_scores)
        route_payloads.append(
            {
                "pois": [_poi_entry(model, pid) for pid in route.pois],
                "poi_scores": list(route.poi_scores),
                "transition_scores": list(route.transition_scores),
                "total": route.total,
                "distance_km": route.distance_km,
                "travel_time_h": route.travel_time_h,
                "display": {
                    "total": display_totals[i],
                    "poi_scores": route_scale.apply_all(route.poi_scores),
                    "transition_scores": scaled_transitions[cursor : cursor + n_trans],
                },
            }
        )
        cursor += n_trans

    return {
        "schema_version": SERVICE_SCHEMA_VERSION,
        "model_version": model.version,
        "query": {
            "start_poi": query.start,
            "length": query.length,
            "mode": query.mode.name,
            "k": k,
        },
        "radar_scope": RADAR_SCOPE,
        "truncated": result.truncated,
        "degenerate": {
            "route_totals": route_scale.degenerate,
            "transition_scores": transition_scale.degenerate,
        },
        "routes": route_payloads,
    }


def build_pois_response(model: Model) -> dict:
    """All POIs with static and derived attributes, ordered by id."""
    return {
        "schema_version": SERVICE_SCHEMA_VERSION,
        "model_version": model.version,
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
            for p in (model.pois[i] for i in sorted(model.pois))
        ],
    }


def build_radar_response(
    model: Model,
    poi_id: int,
    route: Sequence[int],
    checked: Sequence[int] | None = None,
) -> dict:
    """Raw and [1, 10]-scaled radar axis values for the checked POIs.

    The route is re-validated on every call (the service stores nothing);
    the scaling basis is the checked subset, which defaults to the whole
    route. The named POI must be among the checked ones.
    """
    route = [int(p) for p in route]
    if len(route) < 2:
        raise ServiceError(400, "invalid_route", "a route needs at least 2 POIs")
    mode_name = "walking" if "walking" in model.mode_speeds_kmh else sorted(model.mode_speeds_kmh)[0]
    try:
        query = model.query(route[0], len(route), mode_name)
    except (UnknownPoiError, InvalidQueryError) as exc:
        raise ServiceError(400, "invalid_route", str(exc)) from None
    problem = validate_route(query, route, model.pois)
    if problem is not None:
        raise ServiceError(400, "invalid_route", problem)

    if checked is None:
        checked_set = set(route)
    else:
        checked_list = [int(p) for p in checked]
        if not checked_list:
            raise ServiceError(400, "bad_request", "checked POI list must not be empty")
        if len(set(checked_list)) != len(checked_list):
            raise ServiceError(400, "bad_request", "checked POI list contains duplicates")
        outside = [p for p in checked_list if p not in route]
        if outside:
            raise ServiceError(
                400, "bad_request", f"checked POI {outside[0]} is not part of the route"
            )
        checked_set = set(checked_list)
    if poi_id not in checked_set:
        raise ServiceError(400, "bad_request", f"POI {poi_id} is not among the checked POIs")
    ordered_checked = [p for p in route if p in checked_set]

    axis_idx = [model.schema.unary_names.index(a) for a in RADAR_AXES]
    rows = np.array(
        [
            raw_unary_features(query, pid, model.pois, model.schema)[axis_idx]
            for pid in ordered_checked
        ]
    )
    scaled, scales = scale_feature_scores(rows)

    return {
        "schema_version": SERVICE_SCHEMA_VERSION,
        "model_version": model.version,
        "poi": poi_id,
        "route": route,
        "checked": ordered_checked,
        "radar_scope": RADAR_SCOPE,
        "axes": list(RADAR_AXES),
        "degenerate_axes": [s.degenerate for s in scales],
        "pois": [
            {"id": pid, "raw": rows[i].tolist(), "scaled": scaled[i].tolist()}
            for i, pid in enumerate(ordered_checked)
        ],
    }


def build_health_response(model: Model | None) -> dict:
    return {
        "status": "ok" if model is not None else "unavailable",
        "model_version": model.version if model is not None else None,
    }


# -- HTTP plumbing ----------------------------------------------------------


def _json_response(payload: dict, status: int = 200) -> Response:
    return Response(
        content=jsonio.dump_bytes(payload),
        status_code=status,
        media_type="application/json",
    )


def _error_response(exc: ServiceError) -> Response:
    return _json_response({"code": exc.code, "message": exc.message}, status=exc.status)


def _parse_id_list(raw: str, param: str) -> list[int]:
    items = [s.strip() for s in raw.split(",")]
    if any(not s for s in items):
        raise ServiceError(400, "bad_request", f"query parameter {param!r} is malformed")
    try:
        return [int(s) for s in items]
    except ValueError:
        raise ServiceError(
            400, "bad_request", f"query parameter {param!r} must be comma-separated POI ids"
        ) from None


def create_app(model: Model | None = None) -> FastAPI:
    """Build the application around a model holder.

    The holder is exposed as ``app.state.holder`` so operators and tests can
    hot-swap the model; requests already running keep the snapshot they
    started with.
    """
    app = FastAPI(title="pathrec", docs_url=None, redoc_url=None, openapi_url=None)
    holder = ModelHolder(model)
    app.state.holder = holder

    @app.get("/health")
    def health() -> Response:
        return _json_response(build_health_response(holder.get()))

    @app.get("/pois")
    def pois() -> Response:
        try:
            return _json_response(build_pois_response(holder.require()))
        except ServiceError as exc:
            return _error_response(exc)

    @app.post("/recommend")
    async def recommend(request: Request) -> Response:
        try:
            current = holder.require()
            raw = await request.body()
            try:
                body = json.loads(raw)
            except (UnicodeDecodeError, json.JSONDecodeError):
                raise ServiceError(400, "bad_request", "request body is not valid JSON") from None
            query, k = parse_recommend_request(current, body)
            try:
                payload = build_recommend_response(current, query, k)
            except InferenceError as exc:
                raise ServiceError(500, "inference_failed", str(exc)) from None
            return _json_response(payload)
        except ServiceError as exc:
            return _error_response(exc)

    @app.get("/poi/{poi_id}/features")
    def poi_features(poi_id: str, route: str | None = None, checked: str | None = None) -> Response:
        try:
            current = holder.require()
            try:
                pid = int(poi_id)
            except ValueError:
                raise ServiceError(400, "bad_request", "POI id must be an integer") from None
            if route is None:
                raise ServiceError(400, "bad_request", "missing required query parameter 'route'")
            route_ids = _parse_id_list(route, "route")
            checked_ids = _parse_id_list(checked, "checked") if checked is not None else None
            return _json_response(build_radar_response(current, pid, route_ids, checked_ids))
        except ServiceError as exc:
            return _error_response(exc)

    return app
