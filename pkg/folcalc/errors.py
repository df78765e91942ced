# folcalc/errors.py
"""
Jerarquía de excepciones del toolkit.

Cada clase lleva el código de salida que el CLI reporta y un `code` estable
que aparece en el JSON. Las funciones de librería levantan; solo el CLI
convierte excepciones en reportes.
"""
from typing import Optional


class FolcalcError(Exception):
    """Error base del toolkit."""

    exit_code = 2
    code = "error"

    def __init__(self, message: str, *, details: Optional[dict] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def to_dict(self) -> dict:
        return {"code": self.code, "message": self.message, **self.details}


# ---- Entradas inválidas (exit 2) ----

class InputError(FolcalcError):
    code = "invalid_input"


class ParseError(InputError):
    """Error de sintaxis con posición (línea y columna 1-based)."""

    code = "parse_error"

    def __init__(self, message: str, line: int = 1, column: int = 1, source: str = ""):
        super().__init__(
            f"{message} (línea {line}, columna {column})",
            details={"line": line, "column": column},
        )
        self.line = line
        self.column = column
        self.source = source


class DocumentError(InputError):
    code = "document_error"


class ConfigError(InputError):
    code = "config_error"


# ---- Precondiciones (exit 2) ----

class PreconditionError(FolcalcError, ValueError):
    code = "precondition"


class ZeroFormError(PreconditionError):
    code = "zero_form"


class NotSingularError(PreconditionError):
    code = "not_singular"


class NonExactPointError(PreconditionError):
    code = "non_exact_point"


class NonInvariantAxisError(PreconditionError):
    code = "axis_not_invariant"


class IncompleteTreeError(PreconditionError):
    code = "incomplete_tree"


class SaddleNodePresentError(PreconditionError):
    code = "saddle_node_present"


class AlgebraError(FolcalcError):
    code = "algebra_error"


class DivisionByZeroError(AlgebraError, ZeroDivisionError):
    code = "division_by_zero"


# ---- Chequeos que fallan (exit 1) ----

class CheckFailedError(FolcalcError):
    exit_code = 1
    code = "check_failed"


class ReductionError(CheckFailedError):
    code = "reduction_failed"


class IntegrationError(CheckFailedError):
    code = "integration_failed"


# ---- Cotas de recursos (exit 3) ----

class ResourceBoundError(FolcalcError):
    exit_code = 3
    code = "resource_exceeded"


class DepthExhaustedError(ResourceBoundError):
    code = "depth_exhausted"


class AnsatzExhaustedError(ResourceBoundError):
    code = "ansatz_exhausted"
