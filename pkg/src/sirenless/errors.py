"""Exception types raised by the analysis engine."""


class SirenlessError(Exception):
    """Base class for all engine errors."""


class IngestError(SirenlessError):
    """Raw text could not be decoded or normalized."""


class IoError(SirenlessError):
    """A required file is missing or unreadable."""


class ParseError(SirenlessError):
    """A data file is malformed. Carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class MetricError(SirenlessError):
    """A metric is undefined for the given inputs."""


class TrainError(SirenlessError):
    """The training corpus cannot produce a model."""


class ModelError(SirenlessError):
    """A model is incompatible with the current feature extraction."""


class EvalError(SirenlessError):
    """Evaluation was requested on an unusable corpus."""


class TopicError(SirenlessError):
    """Topic modelling was requested on unusable input."""


class AnalyzeError(SirenlessError):
    """The pipeline cannot analyze the given input."""


class StoreError(SirenlessError):
    """The analysis store is unreadable or corrupt."""
