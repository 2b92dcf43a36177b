"""Exception hierarchy for the mcls package."""


class MclsError(Exception):
    """Base class for all package errors."""


class DataError(MclsError):
    """Malformed dataset, schema, or split request."""


class TrainingError(MclsError):
    """A classifier could not be fitted (missing class, divergence, ...)."""


class PredictionError(MclsError):
    """An instance cannot be scored (schema mismatch, zero-norm vector)."""


class CombinationError(MclsError):
    """Invalid input to an output-combination rule."""


class ExperimentError(MclsError):
    """Experiment harness failure (degenerate fold, bad factor grid)."""


class AnovaError(MclsError):
    """Unbalanced design or degenerate factor passed to the ANOVA."""


class ConfigError(MclsError):
    """Invalid experiment configuration or CLI input."""


class SerializationError(MclsError):
    """Model document cannot be written or read back."""
