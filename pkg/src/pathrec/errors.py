"""Exception hierarchy shared across the package.

All user-facing failures derive from :class:`PathrecError` so the CLI can
map them to exit code 1; anything else is treated as an internal error.
"""


class PathrecError(Exception):
    """Base class for expected, user-facing failures."""


class DataFormatError(PathrecError):
    """A CSV file or one of its rows violates the documented format."""


class UnknownPoiError(PathrecError):
    """A POI id was referenced that does not exist in the dataset/model."""


class InvalidQueryError(PathrecError):
    """A query violates its invariants (start, length, mode, k)."""


class InvalidRouteError(PathrecError):
    """A route fails validation against its query (start/length/repeats)."""


class TrainingError(PathrecError):
    """Training cannot proceed (e.g. no ranking pairs, no transitions)."""


class InferenceError(PathrecError):
    """Route enumeration hit a structural guard (candidate blowup etc.)."""


class ConfigError(PathrecError):
    """The key = value config file is missing or malformed."""
