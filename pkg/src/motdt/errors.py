"""Exception types raised by the engine.

Every error the package raises deliberately derives from EngineError, so
callers (CLI, service) can distinguish engine conditions from plain bugs.
"""


class EngineError(Exception):
    """Base class for all engine-level errors."""


class ValidationError(EngineError):
    """Bad input supplied by the caller (CLI exit code 2)."""


class InvalidParams(ValidationError):
    """Parameters outside the supported family or option range."""


class DenominatorVanishes(EngineError):
    """A denominator collapsed to zero under the u=v=s specialization."""


class PoleAtOne(EngineError):
    """The reduced weight fraction has a pole at s=1."""


class NonIntegerValue(EngineError):
    """An Euler realization produced a non-integer rational."""


class OrderMismatch(EngineError):
    """Two truncated series with different truncation orders were combined."""


class NonzeroConstantTerm(EngineError):
    """Sym requires a series with zero constant term."""


class ConstantTermNotOne(EngineError):
    """plog requires a series with constant term 1."""


class SupportViolation(EngineError):
    """A series had support outside the expected set of dimension vectors."""


class UnsupportedDisconnectedCover(EngineError):
    """A cyclic cover is disconnected in a configuration the engine rejects."""


class InvalidGraph(EngineError):
    """A resolution graph violated the structural preconditions."""


class NormalCrossingFailure(EngineError):
    """The blowup tower produced a chart that is not normal crossing."""


class GraphMismatch(EngineError):
    """The assembled resolution graph disagreed with the closed-form check."""


class NonGenericParameter(ValidationError):
    """The stability parameter is on a wall (or produces a phase tie)."""


class WrongSimpleOrdering(ValidationError):
    """The stability parameter orders the two simples the wrong way round."""


class MismatchWithEngine(EngineError):
    """A closed-form display disagreed with the value the engine computed."""
