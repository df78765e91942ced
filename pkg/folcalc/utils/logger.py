# folcalc/utils/logger.py
import contextvars
import logging
import os
from contextlib import contextmanager
from typing import Iterator, List, Optional

# Configuración básica del logger
logging.basicConfig(
    level=os.getenv("FOLCALC_LOG_LEVEL", "WARNING").upper(),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    datefmt='%Y-%m-%d %H:%M:%S'
)

# Obtener un logger para el módulo actual
logger = logging.getLogger(__name__)

# Colector activo en el contexto actual (un hilo de trabajo = un contexto)
_current_collector: contextvars.ContextVar = contextvars.ContextVar(
    "folcalc_warning_collector", default=None
)


class WarningCollectorHandler(logging.Handler):
    """
    Handler que copia los warnings de los loggers `folcalc.*` al colector
    activo en el contexto. Sin colector activo es un no-op.
    """

    def __init__(self):
        super().__init__(level=logging.WARNING)

    def emit(self, record: logging.LogRecord) -> None:
        collector = _current_collector.get()
        if collector is None:
            return
        try:
            message = record.getMessage()
        except Exception:
            return
        if message not in collector:
            collector.append(message)


_collector_handler = WarningCollectorHandler()
logging.getLogger("folcalc").addHandler(_collector_handler)


@contextmanager
def capture_warnings(initial: Optional[List[str]] = None) -> Iterator[List[str]]:
    """
    Captura los warnings emitidos dentro del bloque.

    Args:
        initial: Warnings ya conocidos que encabezan la lista.

    Returns:
        La lista (mutable) que se va llenando mientras dura el bloque.
    """
    collected: List[str] = list(initial or [])
    token = _current_collector.set(collected)
    try:
        yield collected
    finally:
        _current_collector.reset(token)


def set_level(level: str) -> None:
    """Ajusta el nivel del logger raíz del paquete."""
    logging.getLogger("folcalc").setLevel(level.upper())


# Ejemplo de uso:
# from folcalc.utils.logger import capture_warnings
# with capture_warnings() as warnings:
#     foliation = Foliation.from_form(omega)
