# test/conftest.py
import logging

import pytest
from hypothesis import HealthCheck, settings

from folcalc.config import Config

# fresh_config es autouse y de alcance function; cada ejemplo comparte el estado del test
settings.register_profile("folcalc", suppress_health_check=[HealthCheck.function_scoped_fixture])
settings.load_profile("folcalc")


@pytest.fixture(autouse=True)
def fresh_config(monkeypatch):
    """Cada test arranca con la configuración por defecto (sin archivo ni FOLCALC_*)."""
    for key in ("FOLCALC_CONFIG", "FOLCALC_MAX_DEPTH", "FOLCALC_DEG_BOUND", "FOLCALC_WORKERS"):
        monkeypatch.delenv(key, raising=False)
    Config._instance = None
    Config.initialize()
    yield
    Config._instance = None
    logging.getLogger("folcalc").setLevel(logging.NOTSET)


@pytest.fixture
def write_doc(tmp_path):
    """Escribe un documento INI y devuelve su ruta."""
    def _write(text: str, name: str = "doc.ini") -> str:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)
    return _write
