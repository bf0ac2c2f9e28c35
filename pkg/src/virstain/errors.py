"""Exception types shared across the toolkit."""


class VirstainError(Exception):
    """Base class for all toolkit errors."""


class PgmParseError(VirstainError):
    """Malformed PGM byte stream; message names the offending byte offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class DimensionError(VirstainError):
    """Image/patch/tile geometry that cannot be satisfied."""


class GenerationError(VirstainError):
    """Scene spec that cannot be realized inside its raster."""


class EmptyDatasetError(VirstainError):
    """Dataset request that yields no admissible samples."""


class ConfigError(VirstainError):
    """Invalid network or run configuration."""


class ShapeMismatchError(VirstainError):
    """Tensor/channel shape disagreement between model and data."""


class NonFiniteError(VirstainError):
    """NaN or Inf encountered in a value that must stay finite."""

    def __init__(self, message: str, path: str = ""):
        super().__init__(f"{message}: {path}" if path else message)
        self.path = path


class UndefinedCorrelationError(VirstainError):
    """Pearson correlation requested on a constant series (zero variance)."""


class DegenerateImageError(VirstainError):
    """Ground truth with no Otsu foreground in signal-normalized mode."""


class AlignmentError(VirstainError):
    """Prediction/ground-truth directories whose file names do not align."""

    def __init__(self, message: str, orphans=()):
        super().__init__(message)
        self.orphans = list(orphans)


class TrainingAborted(VirstainError):
    """Non-finite loss during training; carries the last good state."""

    def __init__(self, message: str, last_good=None, history=None):
        super().__init__(message)
        self.last_good = last_good
        self.history = history if history is not None else []
