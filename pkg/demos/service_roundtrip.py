"""Talk to the HTTP service in process, no sockets needed.

Uses the test client against the real app object, which exercises the
exact request/response path of `pathrec serve`: same parsing, same JSON
bytes, same errors.
"""

import tempfile

from fastapi.testclient import TestClient

from pathrec.data import load_dataset
from pathrec.model import train_model
from pathrec.ranking import TrainConfig
from pathrec.service import create_app
from pathrec.synth import write_fixture

workdir = tempfile.mkdtemp(prefix="pathrec_demo_")
summary = write_fixture(workdir, num_pois=9, num_trajectories=60, seed=5)
dataset = load_dataset(summary["pois_path"], summary["trajectories_path"])
model, _ = train_model(dataset, TrainConfig(C=10.0, max_iters=300))

client = TestClient(create_app(model))

print("GET /health ->", client.get("/health").json())

pois = client.get("/pois").json()["pois"]
print("GET /pois ->", len(pois), "POIs; first:", pois[0]["name"])

body = {"start_poi": pois[0]["id"], "length": 4, "mode": "walking", "k": 5}
resp = client.post("/recommend", json=body)
payload = resp.json()
print("POST /recommend -> status", resp.status_code, "routes:", len(payload["routes"]))

best = payload["routes"][0]
print("  best route ids:", [p["id"] for p in best["pois"]])
print("  display total:", best["display"]["total"], "(raw", round(best["total"], 4), ")")

# Responses are deterministic down to the byte, a property the tests lean
# on and caches are allowed to rely on.
again = client.post("/recommend", json=body)
print("byte-identical repeat:", again.content == resp.content)

# The radar endpoint compares the POIs of one served route on fixed axes.
ids = [p["id"] for p in best["pois"]]
route_param = ",".join(str(i) for i in ids)
radar = client.get(f"/poi/{ids[0]}/features?route={route_param}").json()
print(f"GET /poi/{ids[0]}/features -> axes:", radar["axes"])
first = radar["pois"][0]
print("  first polygon (scaled to [1, 10]):", [round(v, 2) for v in first["scaled"]])

# Errors come back as structured JSON with a stable error code.
bad = client.post("/recommend", json={"start_poi": 10_000, "length": 3, "mode": "walking"})
print("unknown POI ->", bad.status_code, bad.json()["code"])
