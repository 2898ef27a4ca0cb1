"""Quickstart: synthesise a small city, train a model, ask for trips.

Run from the repository root after installing the package:

    python3 demos/quickstart_train_and_recommend.py
"""

import tempfile

from pathrec.data import load_dataset
from pathrec.inference import top_k_routes
from pathrec.model import train_model
from pathrec.ranking import TrainConfig
from pathrec.synth import write_fixture

# Step 1: generate a reproducible fixture. The generator plants one POI as
# the clear crowd favourite, which gives training something to recover.
workdir = tempfile.mkdtemp(prefix="pathrec_demo_")
summary = write_fixture(workdir, num_pois=12, num_trajectories=80, seed=7)
print("fixture written to", workdir)
print("planted favourite POI:", summary["planted_top"])

# Step 2: load it back and train. train_model fits the pairwise ranker on
# preference pairs mined from the trajectories, then the transition matrix.
dataset = load_dataset(summary["pois_path"], summary["trajectories_path"])
model, fit = train_model(dataset, TrainConfig(C=10.0, max_iters=300))
print("trained model version:", model.version)
print("training objective:", round(fit.objective, 4), "converged:", fit.converged)

# Step 3: recommend. A query fixes the start POI and the number of POIs to
# visit; k asks for the ten best repeat-free routes.
start = sorted(dataset.pois)[0]
query = model.query(start, 4)
result = top_k_routes(model, query, k=10)

print(f"\ntop routes from POI {start}, 4 stops, walking:")
for rank, route in enumerate(result.routes, start=1):
    names = " -> ".join(dataset.pois[pid].name for pid in route.pois)
    print(f"  {rank:2d}. total={route.total:+.4f}  {route.distance_km:.2f} km  {names}")

# Every total decomposes into per-POI and per-transition parts, and the
# parts re-sum to the total exactly, not just approximately.
best = result.routes[0]
print("\nbest route decomposition:")
print("  poi parts       ", [round(v, 4) for v in best.poi_scores])
print("  transition parts", [round(v, 4) for v in best.transition_scores])
print("  re-summed == total:", sum(best.poi_scores) + sum(best.transition_scores) == best.total)
