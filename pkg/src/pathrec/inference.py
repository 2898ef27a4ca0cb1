"""Top-k route enumeration: serial list-Viterbi plus an exhaustive oracle.

The dynamic program runs over the unconstrained sequence space (repeats
allowed except for structurally impossible self-transitions), keeping per
state a lazily ranked list of the best partial paths. Full sequences are
emitted one at a time in global score order; those containing a repeated
POI are discarded and enumeration stops after k survivors, which makes
the result exactly the k best repeat-free routes while each additional
candidate costs a few heap operations rather than a fresh
dynamic-programming pass.

Ordering is the total order (score desc, then POI-id sequence ascending).
Candidate heaps are keyed by that order, and runs of equal-score
alternatives are inserted together, so emission stays exact even when
scores tie, e.g. when alpha = 0 makes all interior permutations of a
route score identically, or when cycling sequences revisit a state.

When transition structure concentrates probability on a small clique of
high-affinity POIs, cycling sequences can dominate the top of the
unconstrained order and the enumerator must discard many of them; the
discard cap turns that pathology into a loud failure instead of an
unbounded search.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from heapq import heappop, heappush
from itertools import permutations
from math import inf

import numpy as np

from .data import Query
from .errors import InferenceError, InvalidQueryError, UnknownPoiError
from .scoring import ScoredRoute, route_score

#: Abort if this many repeat-containing candidates are discarded before k
#: routes survive; a loud failure instead of a silent truncation.
EMISSION_CAP = 1_000_000

#: Refusal threshold for the exhaustive oracle.
BRUTE_FORCE_GUARD = 10_000_000


@dataclass(eq=False)
class TopKResult:
    """Routes sorted by (total desc, POI sequence asc); truncated marks an
    exhausted route space with fewer than k repeat-free routes."""

    routes: list[ScoredRoute] = field(default_factory=list)
    truncated: bool = False


def _check_query(model, query: Query, k: int) -> None:
    if k < 1:
        raise InvalidQueryError(f"k must be at least 1, got {k}")
    if query.start not in model.pois:
        raise UnknownPoiError(f"unknown start POI id {query.start}")
    if query.length > len(model.pois):
        raise InvalidQueryError(
            f"trip length {query.length} exceeds the {len(model.pois)} known POIs"
        )


def _contribution_matrices(model, query: Query, ids: list[int]) -> tuple[np.ndarray, np.ndarray]:
    """Per-POI and per-transition score contributions, index aligned to ids."""
    alpha = model.alpha
    u = np.array([(1.0 - alpha) * model.unary_score(query, pid) + 0.0 for pid in ids])
    order = [model.transitions.index_of(pid) for pid in ids]
    logs = model.transitions.log_probs[np.ix_(order, order)]
    if alpha == 0.0:
        t = np.zeros_like(logs)  # transition structure ignored, matching route_score
    else:
        t = alpha * logs + 0.0
    np.fill_diagonal(t, -inf)  # self-transitions stay impossible for any alpha
    return u, t


class _SerialViterbi:
    """Lazy exact enumeration of unconstrained sequences in total order.

    ``best[i][j]`` from a vectorized forward pass gives every state's top
    score. Ranked lists per state are then grown on demand: the r-th best
    path into a state is derived from earlier pops of its candidate heap,
    each pop scheduling at most two successor candidates (the next rank
    of the same predecessor, and the next predecessor in static score
    order). Scores are accumulated left to right in both the forward pass
    and the lazy expansion, so they agree bit for bit.

    Heap keys are (-score, path); when consecutive static-order
    candidates tie in score they are inserted together, so the path
    tie-break always has the full tie group to choose from.
    """

    def __init__(self, u: np.ndarray, t: np.ndarray, s_idx: int, length: int) -> None:
        self.s_idx = s_idx
        self.length = length
        m = u.shape[0]
        best = np.full((length, m), -inf)
        best[0, s_idx] = u[s_idx]
        for i in range(1, length):
            best[i] = (best[i - 1][:, None] + t).max(axis=0) + u
        self._best = best
        self._t_np = t
        # plain-float copies for the per-candidate hot path
        self._u = u.tolist()
        self._t = t.tolist()
        # (stage, state) -> [derivs, heap, pred order, pred scores, cursor]
        self._states: dict[tuple[int, int], list] = {}

    # -- per-state ranked lists ---------------------------------------------

    def _open(self, i: int, j: int) -> list:
        """Build the state record for (i, j) and seed its candidate heap."""
        if i == 0:
            derivs = [(self._u[j], (j,))] if j == self.s_idx else []
            st = [derivs, [], [], [], 0]
        else:
            svec = self._best[i - 1] + self._t_np[:, j] + self._u[j]
            order = np.argsort(-svec, kind="stable")
            order = order[np.isfinite(svec[order])]
            st = [[], [], order.tolist(), svec[order].tolist(), 0]
            self._states[(i, j)] = st
            self._push_static(st, i, j)
            return st
        self._states[(i, j)] = st
        return st

    def _push_static(self, st: list, i: int, j: int) -> None:
        """Insert the next uninserted rank-0 candidate of (i, j), plus its tie run.

        Equal-score runs go in together so the heap's path tie-break always
        sees the whole group; the cursor marks the next uninserted index.
        """
        heap, order, scores = st[1], st[2], st[3]
        s = st[4]
        n = len(order)
        while s < n:
            pred = self.get(i - 1, order[s], 0)
            heappush(heap, ((-scores[s], pred[1] + (j,)), s, 0))
            s += 1
            if s < n and scores[s] == scores[s - 1]:
                continue
            break
        st[4] = s

    def get(self, i: int, j: int, r: int) -> tuple[float, tuple[int, ...]] | None:
        """The r-th best path into state j at stage i, or None past the end."""
        st = self._states.get((i, j))
        if st is None:
            st = self._open(i, j)
        derivs = st[0]
        if r < len(derivs):
            return derivs[r]
        heap, order = st[1], st[2]
        trans = self._t
        uj = self._u[j]
        while r >= len(derivs):
            if not heap:
                return None
            (negscore, path), s, rank = heappop(heap)
            derivs.append((-negscore, path))
            p = order[s]
            nxt = self.get(i - 1, p, rank + 1)
            if nxt is not None:
                nscore = nxt[0] + trans[p][j] + uj
                heappush(heap, ((-nscore, nxt[1] + (j,)), s, rank + 1))
            if rank == 0 and s + 1 == st[4]:
                self._push_static(st, i, j)
        return derivs[r]

    # -- global emission ----------------------------------------------------

    def __iter__(self):
        """Yield (score, path) for every full sequence, best first."""
        last = self.length - 1
        svec = self._best[last]
        order = np.argsort(-svec, kind="stable")
        order = order[np.isfinite(svec[order])].tolist()
        scores = [float(svec[p]) for p in order]
        heap: list = []
        cursor = 0
        get = self.get

        def push_static() -> None:
            nonlocal cursor
            s = cursor
            n = len(order)
            while s < n:
                d = get(last, order[s], 0)
                heappush(heap, ((-scores[s], d[1]), s, 0))
                s += 1
                if s < n and scores[s] == scores[s - 1]:
                    continue
                break
            cursor = s

        push_static()
        while heap:
            (negscore, path), s, rank = heappop(heap)
            yield -negscore, path
            nxt = get(last, order[s], rank + 1)
            if nxt is not None:
                heappush(heap, ((-nxt[0], nxt[1]), s, rank + 1))
            if rank == 0 and s + 1 == cursor:
                push_static()


def top_k_routes(model, query: Query, k: int) -> TopKResult:
    """Exactly the k best repeat-free routes for the query.

    Candidates are emitted in global score order, repeat-containing ones
    are discarded, and enumeration stops after k survivors or when the
    sequence space is exhausted. Results are re-scored through
    :func:`route_score` so the published decomposition uses the canonical
    arithmetic.
    """
    _check_query(model, query, k)
    ids = sorted(model.pois)
    length = query.length
    s_idx = ids.index(query.start)
    u, t = _contribution_matrices(model, query, ids)

    survivors: list[tuple[int, ...]] = []
    discarded = 0
    for _, path in _SerialViterbi(u, t, s_idx, length):
        if len(set(path)) == length:
            survivors.append(path)
            if len(survivors) == k:
                break
        else:
            discarded += 1
            if discarded > EMISSION_CAP:
                raise InferenceError(
                    f"discarded more than {EMISSION_CAP} repeat-containing "
                    f"candidates before finding {k} routes; the transition "
                    "model makes repeats dominate this query"
                )

    routes = [route_score(model, query, tuple(ids[i] for i in path)) for path in survivors]
    routes.sort(key=lambda sr: (-sr.total, sr.pois))
    return TopKResult(routes=routes, truncated=len(routes) < k)


def brute_force_top_k(model, query: Query, k: int) -> TopKResult:
    """Exhaustive oracle: enumerate, score and sort every repeat-free route.

    Refuses instances whose route count exceeds the safety guard; intended
    for verification at desk scale only.
    """
    _check_query(model, query, k)
    ids = sorted(model.pois)
    others = [pid for pid in ids if pid != query.start]
    count = 1
    for i in range(query.length - 1):
        count *= len(others) - i
    if count > BRUTE_FORCE_GUARD:
        raise InferenceError(
            f"refusing exhaustive enumeration of {count} routes "
            f"(guard is {BRUTE_FORCE_GUARD})"
        )
    routes = [
        route_score(model, query, (query.start,) + suffix)
        for suffix in permutations(others, query.length - 1)
    ]
    routes.sort(key=lambda sr: (-sr.total, sr.pois))
    return TopKResult(routes=routes[:k], truncated=len(routes) < k)
