"""Exception hierarchy shared across the toolkit.

Every error raised on an expected failure path derives from MahaNLPError so
callers (and the CLI) can distinguish bad input from broken resources.
"""


class MahaNLPError(Exception):
    """Base class for all toolkit errors."""


class InputError(MahaNLPError, ValueError):
    """The caller supplied invalid input (empty text, bad count, missing mask)."""


class CatalogError(MahaNLPError, LookupError):
    """An unknown dataset, split, or feature was requested."""


class ResourceError(MahaNLPError):
    """A packaged resource file is missing or malformed."""

    def __init__(self, message: str, path: str | None = None):
        super().__init__(message)
        self.path = path


class IntegrityError(MahaNLPError):
    """Cached or downloaded bytes do not match the expected checksum."""

    def __init__(self, message: str, path: str | None = None,
                 expected: str | None = None, actual: str | None = None):
        super().__init__(message)
        self.path = path
        self.expected = expected
        self.actual = actual


class FetchError(MahaNLPError):
    """A remote fetch failed and no usable cache exists."""

    def __init__(self, message: str, url: str | None = None):
        super().__init__(message)
        self.url = url


class ModelLoadError(MahaNLPError):
    """A hub model could not be downloaded or instantiated."""

    def __init__(self, message: str, model_id: str | None = None):
        super().__init__(message)
        self.model_id = model_id


class CapabilityError(MahaNLPError):
    """A requested hardware or backend capability is unavailable.

    Raised instead of silently degrading (e.g. GPU requested on a CPU-only
    host).
    """
