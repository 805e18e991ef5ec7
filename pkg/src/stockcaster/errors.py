"""Exception types shared across the package."""


class StockcasterError(Exception):
    """Base class for all package-specific failures."""


class TransportError(StockcasterError):
    """Network-level failure while talking to the data endpoint. Retryable."""

    retryable = True


class TickerNotFoundError(StockcasterError):
    """The endpoint has no data for the requested ticker."""


class PayloadError(StockcasterError):
    """The endpoint answered, but the JSON payload is missing or malformed."""

    def __init__(self, field: str, detail: str = ""):
        self.field = field
        msg = f"malformed payload: field {field!r}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class SchemaError(StockcasterError):
    """A CSV file does not match the expected schema."""


class ConfigError(StockcasterError):
    """Invalid configuration value or combination."""


class CheckpointError(StockcasterError):
    """Checkpoint file is corrupt, truncated, or incompatible."""


class TrainingAbort(StockcasterError):
    """Training hit a non-finite loss or gradient."""

    def __init__(self, msg: str, epoch: int | None = None, batch: int | None = None):
        self.epoch = epoch
        self.batch = batch
        if epoch is not None:
            msg += f" (epoch {epoch}" + (f", batch {batch})" if batch is not None else ")")
        super().__init__(msg)
