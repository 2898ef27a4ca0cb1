"""Domain types and CSV ingestion.

Two files describe a dataset:

* POI CSV with header ``poiID,name,category,lat,lon`` (static attributes).
* Trajectory CSV with header ``userID,trajID,poiID,arrivalTime,departureTime``
  where the rows of one trajectory are contiguous and sorted by arrival, and
  timestamps are unix seconds (UTC).

Loading populates the derived POI statistics (visit counts, distinct-user
popularity, mean visit duration). Raw trajectories are cleaned so that the
stored sequences are repeat free: consecutive repeats of a POI collapse into
one visit (arrival of the first record, departure of the last) and a
non-consecutive repeat starts a new trajectory part.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .errors import DataFormatError, InvalidQueryError, UnknownPoiError

POI_HEADER = ("poiID", "name", "category", "lat", "lon")
TRAJECTORY_HEADER = ("userID", "trajID", "poiID", "arrivalTime", "departureTime")

#: Default travel speeds in km/h; configuration may override them.
DEFAULT_MODE_SPEEDS_KMH = {"walking": 5.0, "bicycling": 15.0, "driving": 40.0}


@dataclass(frozen=True)
class POI:
    """A point of interest with static attributes and visit-derived statistics."""

    id: int
    name: str
    category: str
    lat: float
    lon: float
    popularity: int = 0  # distinct users who visited
    visits: int = 0  # total visit records
    avg_duration: float = 0.0  # mean seconds per visit

    def __post_init__(self) -> None:
        if not -90.0 <= self.lat <= 90.0:
            raise DataFormatError(f"POI {self.id}: latitude {self.lat} outside [-90, 90]")
        if not -180.0 <= self.lon <= 180.0:
            raise DataFormatError(f"POI {self.id}: longitude {self.lon} outside [-180, 180]")
        if self.visits < 0 or self.popularity < 0 or self.avg_duration < 0:
            raise DataFormatError(f"POI {self.id}: negative derived statistic")
        if self.popularity > self.visits:
            raise DataFormatError(
                f"POI {self.id}: popularity {self.popularity} exceeds visits {self.visits}"
            )


@dataclass(frozen=True)
class TravelMode:
    """A travel mode and its assumed speed."""

    name: str
    speed_kmh: float

    def __post_init__(self) -> None:
        if self.speed_kmh <= 0:
            raise InvalidQueryError(f"mode {self.name!r}: speed must be positive")


def travel_mode(name: str, speeds: Mapping[str, float] | None = None) -> TravelMode:
    """Build a :class:`TravelMode` from a name, using default or supplied speeds."""
    table = DEFAULT_MODE_SPEEDS_KMH if speeds is None else speeds
    if name not in table:
        raise InvalidQueryError(
            f"unknown travel mode {name!r}; expected one of {sorted(table)}"
        )
    return TravelMode(name, float(table[name]))


@dataclass(frozen=True)
class Query:
    """A trip request: start POI, number of POIs to visit, and travel mode."""

    start: int
    length: int
    mode: TravelMode

    def __post_init__(self) -> None:
        if self.length < 2:
            raise InvalidQueryError(f"trip length must be at least 2, got {self.length}")


@dataclass(frozen=True)
class Visit:
    """One raw visit record of a trajectory."""

    user_id: str
    traj_id: str
    poi_id: int
    arrival: int
    departure: int

    def __post_init__(self) -> None:
        if self.departure < self.arrival:
            raise DataFormatError(
                f"visit of POI {self.poi_id} in trajectory {self.traj_id!r}: "
                f"departure {self.departure} before arrival {self.arrival}"
            )

    @property
    def duration(self) -> int:
        return self.departure - self.arrival


@dataclass(frozen=True)
class Trajectory:
    """An ordered, repeat-free sequence of visits sharing one trajectory id."""

    traj_id: str
    visits: tuple[Visit, ...]

    @property
    def poi_ids(self) -> tuple[int, ...]:
        return tuple(v.poi_id for v in self.visits)

    def __len__(self) -> int:
        return len(self.visits)


@dataclass(frozen=True)
class Dataset:
    """Immutable bundle of POIs (with derived statistics) and trajectories."""

    pois: Mapping[int, POI]
    trajectories: tuple[Trajectory, ...]

    @property
    def poi_ids(self) -> tuple[int, ...]:
        return tuple(sorted(self.pois))


def _read_rows(path: str | Path, header: Sequence[str]) -> list[list[str]]:
    path = Path(path)
    if not path.exists():
        raise DataFormatError(f"file not found: {path}")
    with path.open(newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    if not rows:
        raise DataFormatError(f"{path}: empty file, expected header {','.join(header)}")
    if [c.strip() for c in rows[0]] != list(header):
        raise DataFormatError(
            f"{path}: bad header {rows[0]!r}, expected {','.join(header)}"
        )
    return rows[1:]


def load_pois(path: str | Path) -> dict[int, POI]:
    """Load the POI CSV; derived statistics are zero until trajectories load."""
    pois: dict[int, POI] = {}
    for lineno, row in enumerate(_read_rows(path, POI_HEADER), start=2):
        if not row or all(not c.strip() for c in row):
            continue
        if len(row) != 5:
            raise DataFormatError(f"{path} row {lineno}: expected 5 fields, got {len(row)}")
        try:
            poi_id = int(row[0])
            lat = float(row[3])
            lon = float(row[4])
        except ValueError as exc:
            raise DataFormatError(f"{path} row {lineno}: {exc}") from exc
        if poi_id in pois:
            raise DataFormatError(f"{path} row {lineno}: duplicate POI id {poi_id}")
        pois[poi_id] = POI(id=poi_id, name=row[1], category=row[2], lat=lat, lon=lon)
    return pois


def _parse_visit_rows(
    rows: Iterable[list[str]], pois: Mapping[int, POI], source: str
) -> list[Visit]:
    visits = []
    for lineno, row in enumerate(rows, start=2):
        if not row or all(not c.strip() for c in row):
            continue
        if len(row) != 5:
            raise DataFormatError(f"{source} row {lineno}: expected 5 fields, got {len(row)}")
        try:
            poi_id = int(row[2])
            arrival = int(row[3])
            departure = int(row[4])
        except ValueError as exc:
            raise DataFormatError(f"{source} row {lineno}: malformed value: {exc}") from exc
        if poi_id not in pois:
            raise UnknownPoiError(f"{source} row {lineno}: unknown POI id {poi_id}")
        try:
            visits.append(Visit(row[0], row[1], poi_id, arrival, departure))
        except DataFormatError as exc:
            raise DataFormatError(f"{source} row {lineno}: {exc}") from exc
    return visits


def clean_visit_sequence(visits: Sequence[Visit]) -> list[list[Visit]]:
    """Split one raw visit sequence into repeat-free parts.

    Consecutive records of the same POI merge into a single visit spanning
    the first arrival to the last departure. A later, non-consecutive repeat
    of an already-visited POI starts a new part, so every returned part is
    free of repeated POI ids.
    """
    merged: list[Visit] = []
    for v in visits:
        if merged and merged[-1].poi_id == v.poi_id:
            # arrival-sorted input keeps departure >= the merged arrival
            merged[-1] = replace(merged[-1], departure=v.departure)
        else:
            merged.append(v)

    parts: list[list[Visit]] = []
    current: list[Visit] = []
    seen: set[int] = set()
    for v in merged:
        if v.poi_id in seen:
            parts.append(current)
            current = []
            seen = set()
        current.append(v)
        seen.add(v.poi_id)
    if current:
        parts.append(current)
    return parts


def _derive_statistics(pois: Mapping[int, POI], trajectories: Sequence[Trajectory]) -> dict[int, POI]:
    counts: dict[int, int] = {pid: 0 for pid in pois}
    users: dict[int, set[str]] = {pid: set() for pid in pois}
    total_duration: dict[int, int] = {pid: 0 for pid in pois}
    for traj in trajectories:
        for v in traj.visits:
            counts[v.poi_id] += 1
            users[v.poi_id].add(v.user_id)
            total_duration[v.poi_id] += v.duration
    derived = {}
    for pid, poi in pois.items():
        n = counts[pid]
        derived[pid] = replace(
            poi,
            visits=n,
            popularity=len(users[pid]),
            avg_duration=(total_duration[pid] / n) if n else 0.0,
        )
    return derived


def load_trajectories(path: str | Path, pois: Mapping[int, POI]) -> Dataset:
    """Load the trajectory CSV and assemble the full dataset.

    Visits are grouped by trajectory id, sorted by arrival, and cleaned with
    :func:`clean_visit_sequence`. Derived POI statistics are computed from
    the cleaned visit records.
    """
    rows = _read_rows(path, TRAJECTORY_HEADER)
    visits = _parse_visit_rows(rows, pois, str(path))

    groups: dict[str, list[Visit]] = {}
    for v in visits:
        groups.setdefault(v.traj_id, []).append(v)

    trajectories: list[Trajectory] = []
    for traj_id, group in groups.items():
        group.sort(key=lambda v: v.arrival)
        for i, part in enumerate(clean_visit_sequence(group)):
            part_id = traj_id if i == 0 else f"{traj_id}#{i + 1}"
            trajectories.append(Trajectory(part_id, tuple(part)))

    return Dataset(pois=_derive_statistics(pois, trajectories), trajectories=tuple(trajectories))


def load_dataset(pois_path: str | Path, trajs_path: str | Path) -> Dataset:
    """Convenience wrapper: load both CSVs in order."""
    return load_trajectories(trajs_path, load_pois(pois_path))


def save_pois(pois: Mapping[int, POI], path: str | Path) -> None:
    """Write the POI CSV (static fields only), ordered by id."""
    with Path(path).open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(POI_HEADER)
        for pid in sorted(pois):
            poi = pois[pid]
            writer.writerow([poi.id, poi.name, poi.category, repr(poi.lat), repr(poi.lon)])


def save_trajectories(dataset: Dataset, path: str | Path) -> None:
    """Write the trajectory CSV with contiguous, arrival-sorted rows."""
    with Path(path).open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(TRAJECTORY_HEADER)
        for traj in dataset.trajectories:
            for v in traj.visits:
                writer.writerow([v.user_id, v.traj_id, v.poi_id, v.arrival, v.departure])
