"""
Fixtures compartidos de pytest.

Las pruebas se ejecutan desde la raíz del repo con `pytest`.
"""
import os
import sys

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from app.core import FiniteDistribution, abstract_domain, real_line_domain  # noqa: E402
from app.utils.config.settings import ENV_DEFAULT_SEED, ENV_ORACLE_CALL_BUDGET, ENV_THREADS  # noqa: E402

# clean_env es autouse y de alcance función; sin efecto entre ejemplos de hypothesis
settings.register_profile("lvc", suppress_health_check=[HealthCheck.function_scoped_fixture])
settings.load_profile("lvc")


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    """Ninguna prueba hereda LVC_* del entorno del desarrollador."""
    for var in (ENV_DEFAULT_SEED, ENV_THREADS, ENV_ORACLE_CALL_BUDGET, "LVC_LOG_LEVEL"):
        monkeypatch.delenv(var, raising=False)


@pytest.fixture
def line4():
    return real_line_domain([1, 2, 3, 4])


@pytest.fixture
def uniform_line4(line4):
    return FiniteDistribution.uniform(line4)


@pytest.fixture
def range5():
    return abstract_domain(5)
