"""Operator command line: train, recommend, serve, eval, synth.

Every subcommand prints a single JSON line on success so CI scripts can
parse results without scraping; ``recommend --table`` renders a human
layout instead. Exit codes: 0 success, 1 user error (bad flags, bad data,
bad query), 2 internal error.
"""

from __future__ import annotations

import argparse
import sys
import traceback

from . import jsonio
from .config import load_config
from .data import load_dataset
from .errors import ConfigError, PathrecError
from .evaluate import evaluate_heldout, load_heldout_trajectories
from .model import DEFAULT_ALPHA, DEFAULT_SMOOTHING, Model, train_model
from .ranking import TrainConfig
from .service import ServiceError, build_recommend_response, create_app, parse_recommend_request
from .synth import write_fixture


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; the contract here is 1."""

    def error(self, message: str) -> None:  # noqa: D102 - argparse override
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pathrec", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("train", help="fit a model from POI and trajectory CSVs")
    p.add_argument("--pois", required=True, help="POI CSV path")
    p.add_argument("--trajs", required=True, help="trajectory CSV path")
    p.add_argument("--out", required=True, help="output model file")
    p.add_argument("--C", type=float, default=10.0, help="ranking regularization trade-off")
    p.add_argument("--alpha", type=float, default=DEFAULT_ALPHA, help="transition weight in [0, 1]")
    p.add_argument("--kappa", type=float, default=DEFAULT_SMOOTHING, help="transition smoothing")
    p.add_argument("--seed", type=int, default=0, help="training seed (recorded in the model)")
    p.add_argument("--max-iters", type=int, default=2000)
    p.add_argument("--tolerance", type=float, default=1e-6)
    p.add_argument("--neighbourhood-radius", type=float, default=1.0, help="km")
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("recommend", help="print top-k routes for one query")
    p.add_argument("--model", required=True, help="model file path")
    p.add_argument("--start", type=int, required=True, help="start POI id")
    p.add_argument("--length", type=int, required=True, help="number of POIs to visit")
    p.add_argument("--mode", required=True, help="travel mode name")
    p.add_argument("--k", type=int, default=10, help="number of routes")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", default=True, help="JSON output (default)")
    fmt.add_argument("--table", action="store_true", help="human-readable table")
    p.set_defaults(func=cmd_recommend)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--config", help="config file (overrides $PATHREC_CONFIG)")
    p.add_argument("--model", help="model file (overrides config)")
    p.add_argument("--host", help="bind host (overrides config)")
    p.add_argument("--port", type=int, help="bind port (overrides config)")
    p.set_defaults(func=cmd_serve)

    p = sub.add_parser("eval", help="score held-out trajectories against the model")
    p.add_argument("--model", required=True, help="model file path")
    p.add_argument("--trajs", required=True, help="held-out trajectory CSV")
    p.add_argument("--mode", default="walking", help="travel mode for queries")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("synth", help="generate a synthetic fixture with planted structure")
    p.add_argument("--pois", type=int, required=True, help="number of POIs (>= 3)")
    p.add_argument("--trajs", type=int, required=True, help="number of trajectories (>= 1)")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out-dir", required=True)
    p.set_defaults(func=cmd_synth)

    return parser


def cmd_train(args: argparse.Namespace) -> int:
    dataset = load_dataset(args.pois, args.trajs)
    config = TrainConfig(
        C=args.C, max_iters=args.max_iters, tolerance=args.tolerance, seed=args.seed
    )
    model, result = train_model(
        dataset,
        config,
        alpha=args.alpha,
        kappa=args.kappa,
        neighbourhood_radius_km=args.neighbourhood_radius,
    )
    model.save(args.out)
    print(
        jsonio.dumps(
            {
                "model_path": args.out,
                "model_version": model.version,
                "objective": result.objective,
                "pair_count": model.train_meta["pair_count"],
                "poi_count": len(model.pois),
                "iterations": result.iterations,
                "converged": result.converged,
            }
        )
    )
    return 0


def cmd_recommend(args: argparse.Namespace) -> int:
    model = Model.load(args.model)
    body = {"start_poi": args.start, "length": args.length, "mode": args.mode, "k": args.k}
    query, k = parse_recommend_request(model, body)
    payload = build_recommend_response(model, query, k)
    if args.table:
        print(_render_table(payload))
    else:
        print(jsonio.dumps(payload))
    return 0


def _render_table(payload: dict) -> str:
    q = payload["query"]
    lines = [f"query: start={q['start_poi']} length={q['length']} mode={q['mode']} k={q['k']}"]
    for i, route in enumerate(payload["routes"], start=1):
        lines.append(
            f"#{i}  total={route['total']:.6f}  display={route['display']['total']:.2f}  "
            f"distance={route['distance_km']:.3f} km  time={route['travel_time_h']:.3f} h"
        )
        for j, poi in enumerate(route["pois"]):
            lines.append(
                f"    {j + 1}. [{poi['id']}] {poi['name']} ({poi['category']})  "
                f"score={route['poi_scores'][j]:.6f}"
            )
            if j < len(route["transition_scores"]):
                lines.append(f"        -> transition={route['transition_scores'][j]:.6f}")
    return "\n".join(lines)


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    cfg = load_config(args.config)
    model_path = args.model or cfg.model_path
    if not model_path:
        raise ConfigError("no model file given: pass --model or set model_path in the config")
    model = Model.load(model_path)
    host = args.host or cfg.host
    port = args.port if args.port is not None else cfg.port
    print(
        jsonio.dumps(
            {"status": "serving", "host": host, "port": port, "model_version": model.version}
        ),
        flush=True,
    )
    uvicorn.run(create_app(model), host=host, port=port, log_level="warning")
    return 0


def cmd_eval(args: argparse.Namespace) -> int:
    model = Model.load(args.model)
    trajectories = load_heldout_trajectories(args.trajs)
    report = evaluate_heldout(model, trajectories, mode_name=args.mode)
    print(jsonio.dumps(report.to_json_dict()))
    return 0


def cmd_synth(args: argparse.Namespace) -> int:
    summary = write_fixture(args.out_dir, args.pois, args.trajs, args.seed)
    print(jsonio.dumps(summary))
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (PathrecError, ServiceError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception:
        traceback.print_exc()
        return 2


if __name__ == "__main__":
    sys.exit(main())
