# folcalc/config.py
import json
import logging
import os
from typing import Any, Dict, Optional

import yaml
from dotenv import load_dotenv
from jsonschema import ValidationError, validate

from folcalc.errors import ConfigError

# Configurar logger
logger = logging.getLogger(__name__)

# Cargar .env por defecto
load_dotenv()


# Esquema de los archivos de configuración. Las claves son las mismas que
# las variables de entorno sin el prefijo FOLCALC_.
CONFIG_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "properties": {
        "MAX_DEPTH": {"type": "integer", "minimum": 1},
        "DEG_BOUND": {"type": "integer", "minimum": 0},
        "DENOM_BOUND": {"type": "integer", "minimum": 1},
        "RESONANCE_TOL": {"type": "number", "exclusiveMinimum": 0},
        "HOLONOMY_METHOD": {"enum": ["DOP853", "RK45", "RK4"]},
        "HOLONOMY_RTOL": {"type": "number", "exclusiveMinimum": 0},
        "HOLONOMY_STEPS": {"type": "integer", "minimum": 64},
        "HOLONOMY_SEEDS": {
            "type": "array",
            "items": {"type": "number", "exclusiveMinimum": 0},
            "minItems": 1,
        },
        "WORKERS": {"type": "integer", "minimum": 1},
        "LOG_LEVEL": {"enum": ["DEBUG", "INFO", "WARNING", "ERROR"]},
    },
    "additionalProperties": False,
}


class Config:
    """
    Clase singleton para manejar toda la configuración del toolkit.
    """
    _instance = None
    _initialized = False
    _config: Dict[str, Any] = {}
    _config_path: Optional[str] = None

    def __new__(cls):
        """Implementación del patrón singleton"""
        if cls._instance is None:
            cls._instance = super(Config, cls).__new__(cls)
        return cls._instance

    @classmethod
    def initialize(cls, config_path: Optional[str] = None) -> None:
        """
        Inicializa la configuración con los valores por defecto y
        la configuración del archivo si se proporciona.

        Args:
            config_path: Ruta al archivo de configuración (YAML o JSON)

        Raises:
            ConfigError: Si el archivo no existe, no se puede leer o no
                cumple el esquema.
        """
        instance = cls()
        config_path = config_path or os.getenv("FOLCALC_CONFIG") or None

        # Si ya está inicializado con la misma ruta, no hacer nada
        if instance._initialized and instance._config_path == config_path:
            logger.debug(f"Configuración ya inicializada con {config_path}. No se recargará.")
            return

        if instance._initialized and instance._config_path != config_path:
            logger.info(f"Recargando configuración: {instance._config_path} -> {config_path}")

        config = cls._get_default_config()

        if config_path:
            config.update(cls._load_file(config_path))

        instance._config = config
        instance._config_path = config_path
        instance._initialized = True
        logger.debug(f"Configuración final: {instance._config}")

    @staticmethod
    def _load_file(config_path: str) -> Dict[str, Any]:
        """Lee y valida un archivo YAML o JSON."""
        if not os.path.exists(config_path):
            raise ConfigError(f"Archivo de configuración no encontrado: {config_path}")

        ext = os.path.splitext(config_path)[1].lower()
        try:
            with open(config_path, 'r', encoding='utf-8') as f:
                if ext in ('.yaml', '.yml'):
                    file_config = yaml.safe_load(f) or {}
                elif ext == '.json':
                    file_config = json.load(f)
                else:
                    raise ConfigError(f"Formato de configuración no soportado: {ext}")
        except (OSError, yaml.YAMLError, json.JSONDecodeError) as e:
            raise ConfigError(f"Error al cargar configuración desde {config_path}: {e}")

        try:
            validate(instance=file_config, schema=CONFIG_SCHEMA)
        except ValidationError as e:
            raise ConfigError(f"Configuración inválida en {config_path}: {e.message}")

        logger.info(f"Configuración cargada desde {config_path}")
        return file_config

    @staticmethod
    def _get_default_config() -> Dict[str, Any]:
        """
        Retorna la configuración por defecto basada en variables de entorno.

        Returns:
            Dict: Configuración por defecto
        """
        try:
            return {
                # Resolución de Seidenberg
                "MAX_DEPTH": int(os.getenv("FOLCALC_MAX_DEPTH", "32")),

                # Ansatz de φ en la reducción de Riccati
                "DEG_BOUND": int(os.getenv("FOLCALC_DEG_BOUND", "8")),

                # Test de raíz de la unidad
                "DENOM_BOUND": int(os.getenv("FOLCALC_DENOM_BOUND", "64")),
                "RESONANCE_TOL": float(os.getenv("FOLCALC_RESONANCE_TOL", "1e-6")),

                # Integrador de holonomía: DOP853 | RK45 (adaptativos, scipy) o RK4 (paso fijo)
                "HOLONOMY_METHOD": os.getenv("FOLCALC_HOLONOMY_METHOD", "DOP853"),
                "HOLONOMY_RTOL": float(os.getenv("FOLCALC_HOLONOMY_RTOL", "1e-12")),
                "HOLONOMY_STEPS": int(os.getenv("FOLCALC_HOLONOMY_STEPS", "256")),
                "HOLONOMY_SEEDS": [1e-3, 2e-3],

                # Trabajadores para procesar varios archivos o semillas
                "WORKERS": int(os.getenv("FOLCALC_WORKERS", "4")),

                "LOG_LEVEL": os.getenv("FOLCALC_LOG_LEVEL", "WARNING").upper(),
            }
        except ValueError as e:
            raise ConfigError(f"Variable de entorno FOLCALC_* inválida: {e}")

    @classmethod
    def get(cls, key: str, default: Any = None) -> Any:
        """
        Obtiene un valor específico de la configuración.

        Args:
            key: Clave a buscar
            default: Valor por defecto si la clave no existe

        Returns:
            Any: Valor asociado a la clave
        """
        instance = cls()
        if not instance._initialized:
            instance.initialize()
        return instance._config.get(key, default)

    @classmethod
    def get_config(cls) -> Dict[str, Any]:
        """
        Obtiene la configuración completa.

        Returns:
            Dict: Configuración actual
        """
        instance = cls()
        if not instance._initialized:
            instance.initialize()
        return instance._config

    @classmethod
    def get_config_path(cls) -> Optional[str]:
        """
        Obtiene la ruta del archivo de configuración.

        Returns:
            str: Ruta de configuración o None
        """
        instance = cls()
        return instance._config_path

    @classmethod
    def reload(cls, config_path: Optional[str] = None) -> None:
        """
        Vuelve a leer las variables de entorno y el archivo de configuración.

        Args:
            config_path: Ruta al archivo; sin ruta se usa FOLCALC_CONFIG
        """
        instance = cls()
        instance._initialized = False
        instance.initialize(config_path)


def load_config(config_path: Optional[str] = None) -> Dict[str, Any]:
    """
    Inicializa el singleton y devuelve la configuración resultante.

    Args:
        config_path: Ruta al archivo de configuración

    Returns:
        Dict: Configuración actual
    """
    Config.initialize(config_path)
    return Config.get_config()
