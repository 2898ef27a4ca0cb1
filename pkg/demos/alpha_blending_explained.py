"""How alpha trades POI affinity against transition plausibility.

alpha = 0 ranks routes purely by how much the model likes the POIs;
alpha = 1 purely by how plausible the consecutive hops are under the
Markov chain; anything in between blends the two. Because the blend is
applied per term, the published decomposition makes the trade visible.
"""

import tempfile

from pathrec.data import load_dataset
from pathrec.inference import top_k_routes
from pathrec.model import train_model
from pathrec.ranking import TrainConfig
from pathrec.synth import write_fixture

workdir = tempfile.mkdtemp(prefix="pathrec_demo_")
summary = write_fixture(workdir, num_pois=10, num_trajectories=70, seed=11)
dataset = load_dataset(summary["pois_path"], summary["trajectories_path"])
start = sorted(dataset.pois)[0]

for alpha in (0.0, 0.5, 1.0):
    model, _ = train_model(dataset, TrainConfig(C=10.0, max_iters=300), alpha=alpha)
    result = top_k_routes(model, model.query(start, 4), k=3)
    print(f"alpha = {alpha}")
    for route in result.routes:
        poi_part = sum(route.poi_scores)
        trans_part = sum(route.transition_scores)
        print(
            f"  {route.pois}  total={route.total:+.4f}"
            f"  (poi {poi_part:+.4f}, transitions {trans_part:+.4f})"
        )
    print()

# At alpha = 0 the transition column is exactly zero and permutations of
# the same POI set tie; ties resolve deterministically by POI sequence.
# At alpha = 1 the poi column is exactly zero instead.
