# folcalc/reports.py
import logging
from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, computed_field

from folcalc.errors import FolcalcError

logger = logging.getLogger(__name__)

SCHEMA_VERSION = "1.0"


class Status(str, Enum):
    OK = "ok"
    CHECK_FAILED = "check_failed"
    INVALID_INPUT = "invalid_input"
    RESOURCE_EXCEEDED = "resource_exceeded"


EXIT_CODES = {
    Status.OK: 0,
    Status.CHECK_FAILED: 1,
    Status.INVALID_INPUT: 2,
    Status.RESOURCE_EXCEEDED: 3,
}

_STATUS_BY_EXIT = {code: status for status, code in EXIT_CODES.items()}


class Report(BaseModel):
    """
    Reporte de un comando. El código de salida depende solo de `status`.
    """
    schema_version: str = SCHEMA_VERSION
    command: str
    inputs_echo: Dict[str, Any] = Field(default_factory=dict)
    result: Dict[str, Any] = Field(default_factory=dict)
    warnings: List[str] = Field(default_factory=list)
    timing_ms: float = 0.0
    status: Status = Status.OK
    error: Optional[Dict[str, Any]] = None

    @computed_field
    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]

    @classmethod
    def from_error(cls, command: str, error: FolcalcError, **fields) -> "Report":
        """Reporte de un error de la librería, con el estado de su exit_code."""
        status = _STATUS_BY_EXIT.get(error.exit_code, Status.INVALID_INPUT)
        return cls(command=command, status=status, error=error.to_dict(), **fields)

    def to_json(self) -> str:
        return self.model_dump_json(indent=2)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.model_validate_json(text)

    def to_text(self) -> str:
        """Versión legible para la terminal."""
        lines = [f"{self.command}: {self.status.value}"]
        if self.error:
            lines.append(f"  error: {self.error.get('message', self.error)}")
        for key, value in self.result.items():
            lines.extend(_text_lines(key, value, 1))
        for warning in self.warnings:
            lines.append(f"  aviso: {warning}")
        return "\n".join(lines)


def _text_lines(key: str, value: Any, level: int) -> List[str]:
    pad = "  " * level
    if isinstance(value, dict):
        out = [f"{pad}{key}:"]
        for k, v in value.items():
            out.extend(_text_lines(str(k), v, level + 1))
        return out
    if isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
        out = [f"{pad}{key}:"]
        for idx, item in enumerate(value):
            out.extend(_text_lines(f"[{idx}]", item, level + 1))
        return out
    return [f"{pad}{key}: {value}"]
