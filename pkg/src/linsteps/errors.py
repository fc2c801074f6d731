"""Exception hierarchy for the engine.

Every error carries a stable ``code`` (the class name) that is used verbatim
in CLI messages and JSON error bodies.
"""

from __future__ import annotations


class EngineError(Exception):
    """Base class for all engine errors."""

    code = "EngineError"


class ZeroDenominator(EngineError):
    code = "ZeroDenominator"


class DivisionByZero(EngineError):
    code = "DivisionByZero"


class ParseError(EngineError):
    code = "ParseError"


class DimensionMismatch(EngineError):
    code = "DimensionMismatch"


class NotSquare(EngineError):
    code = "NotSquare"


class NotThreeByThree(EngineError):
    code = "NotThreeByThree"


class NotTwoByTwo(EngineError):
    code = "NotTwoByTwo"


class NotPowerOfTwo(EngineError):
    code = "NotPowerOfTwo"


class SingularMatrix(EngineError):
    code = "SingularMatrix"


class EmptyTrace(EngineError):
    code = "EmptyTrace"


class TaskMismatch(EngineError):
    code = "TaskMismatch"


class InputMismatch(EngineError):
    code = "InputMismatch"


class MethodInapplicable(EngineError):
    code = "MethodInapplicable"


class DimensionCapExceeded(EngineError):
    code = "DimensionCapExceeded"


class ConfigInvalid(EngineError):
    code = "ConfigInvalid"


class UnknownMethod(EngineError):
    code = "UnknownMethod"
