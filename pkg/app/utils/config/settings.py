# app/utils/config/settings.py

import os
from typing import Dict, Optional

from dotenv import load_dotenv

from app.utils.constants import DEFAULT_ORACLE_CALL_BUDGET, DEFAULT_SEED, DEFAULT_THREADS

# Carga .env si existe (no sobrescribe variables ya exportadas)
load_dotenv(override=False)

ENV_DEFAULT_SEED = "LVC_DEFAULT_SEED"
ENV_THREADS = "LVC_THREADS"
ENV_ORACLE_CALL_BUDGET = "LVC_ORACLE_CALL_BUDGET"


def _int_from_env(var: str, default: int, minimum: int) -> int:
    raw = os.environ.get(var)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw.strip())
    except ValueError:
        raise RuntimeError(f"❌ La variable {var} no es válida: {raw!r}")
    if value < minimum:
        raise RuntimeError(f"❌ La variable {var} debe ser ≥ {minimum}: {value}")
    return value


def get_default_seed() -> int:
    return _int_from_env(ENV_DEFAULT_SEED, DEFAULT_SEED, 0)


def get_threads() -> int:
    return _int_from_env(ENV_THREADS, DEFAULT_THREADS, 1)


def get_oracle_call_budget() -> int:
    return _int_from_env(ENV_ORACLE_CALL_BUDGET, DEFAULT_ORACLE_CALL_BUDGET, 1)


def load_config_file(path: str) -> Dict[str, str]:
    """
    Lee un archivo plano key=value. Líneas vacías y comentarios (#) se ignoran;
    un # después del valor también inicia comentario.

    Raises:
        ValueError: si una línea no tiene la forma key=value
    """
    values: Dict[str, str] = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: se esperaba key=value, se obtuvo {raw.strip()!r}")
            key, value = line.split("=", 1)
            values[key.strip()] = value.strip()
    return values


def merge_cli_overrides(file_values: Dict[str, str], cli_values: Dict[str, Optional[object]]) -> Dict[str, object]:
    """Los flags de la CLI tienen prioridad sobre el archivo; None significa 'no indicado'."""
    merged: Dict[str, object] = dict(file_values)
    for key, value in cli_values.items():
        if value is not None:
            merged[key] = value
    return merged
