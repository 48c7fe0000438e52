"""
Logger configuration - Console only (stderr)
Todos los logs van a stderr; stdout queda libre para el JSON de la CLI.
Las corridas largas de `verify`/`sweep` se redirigen con `> run.log 2>&1`.
"""
import logging
import os
import sys


DEFAULT_LOGGER_NAME = "lvc-tester"


def _level_from_env(default: int) -> int:
    raw = os.environ.get("LVC_LOG_LEVEL")
    if not raw:
        return default
    level = logging.getLevelName(raw.strip().upper())
    return level if isinstance(level, int) else default


def setup_logger(
    name: str = DEFAULT_LOGGER_NAME,
    level: int = logging.INFO
) -> logging.Logger:
    """
    Configura un logger que escribe solo a stderr (consola).

    Args:
        name: Nombre del logger
        level: Nivel de logging (default: INFO, o LVC_LOG_LEVEL si está definida)

    Returns:
        Logger configurado
    """
    level = _level_from_env(level)
    logger = logging.getLogger(name)
    logger.setLevel(level)

    # Evitar duplicación de handlers si ya está configurado
    if logger.handlers:
        return logger

    formatter = logging.Formatter(
        fmt='%(asctime)s | %(levelname)-8s | %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(level)
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    return logger


def get_logger(name: str = DEFAULT_LOGGER_NAME) -> logging.Logger:
    """
    Obtiene el logger existente o crea uno nuevo si no existe.

    Args:
        name: Nombre del logger (default: lvc-tester)

    Returns:
        Logger instance
    """
    logger = logging.getLogger(name)

    if not logger.handlers:
        logger = setup_logger(name)

    return logger


def set_log_level(level_name: str, name: str = DEFAULT_LOGGER_NAME) -> None:
    """Cambia el nivel del logger y de sus handlers (usado por --log-level)."""
    level = logging.getLevelName(level_name.strip().upper())
    if not isinstance(level, int):
        raise ValueError(f"Nivel de log inválido: {level_name}")
    logger = get_logger(name)
    logger.setLevel(level)
    for handler in logger.handlers:
        handler.setLevel(level)


# Inicialización global del logger por defecto
_default_logger = None

def init_default_logger():
    """Inicializa el logger por defecto al importar el módulo"""
    global _default_logger
    if _default_logger is None:
        _default_logger = setup_logger()
    return _default_logger


# Auto-inicializar al importar
init_default_logger()
