"""Exception taxonomy shared by the whole package."""


class InputError(ValueError):
    """Malformed or out-of-domain input (dimension mismatch, bad literal, ...)."""


class ScaleLimitError(InputError):
    """The requested computation exceeds a documented scale cap."""


class InvalidSetError(InputError):
    """A set value fails its validation contract (e.g. closure != carrier)."""
