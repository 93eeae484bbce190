"""
Pytest configuration and shared fixtures.

Este módulo contém fixtures reutilizáveis para todos os testes.
"""

import pytest
from fastapi.testclient import TestClient

from app.main import app
from app.models.array import ArrayGeometry, BiasPlan
from app.models.device import DeviceParams
from app.models.energy import CalibrationTargets, EnergyParams, TimingParams
from app.models.sensing import SensingConfig
from app.models.simulation import SimConfig
from app.services.energy import calibrate, calibrate_timing


@pytest.fixture
def client() -> TestClient:
    """Cliente de teste para a API FastAPI."""
    return TestClient(app)


@pytest.fixture
def default_config() -> SimConfig:
    """Configuração padrão (1024×1024, 32 bits, corrente, energia calibrada)."""
    return SimConfig()


@pytest.fixture
def device() -> DeviceParams:
    """Parâmetros padrão do dispositivo."""
    return DeviceParams()


@pytest.fixture
def bias() -> BiasPlan:
    """Plano de polarização padrão (V_GREAD1 = 0.83 V, V_GREAD2 = 1.0 V)."""
    return BiasPlan()


@pytest.fixture
def sensing() -> SensingConfig:
    """Sensoriamento por corrente com margem de 1 µA."""
    return SensingConfig()


@pytest.fixture
def degenerate_bias(bias: BiasPlan) -> BiasPlan:
    """V_GREAD1 = V_GREAD2: ativação simétrica disfarçada de ADRA."""
    return bias.model_copy(update={"v_gread1": bias.v_gread2})


@pytest.fixture(scope="session")
def energy_params() -> EnergyParams:
    """Coeficientes calibrados com os alvos padrão (Δ/V_READ = 0.05)."""
    return calibrate(CalibrationTargets(), swing_ratio=0.05)


@pytest.fixture(scope="session")
def timing() -> TimingParams:
    """Temporização com o tempo de cômputo calibrado."""
    return calibrate_timing(CalibrationTargets())


@pytest.fixture
def reference_geometry() -> ArrayGeometry:
    """Array 1024×1024 com palavras de 32 bits."""
    return ArrayGeometry()


@pytest.fixture
def small_geometry() -> ArrayGeometry:
    """Array 4×8 com palavras de 4 bits."""
    return ArrayGeometry(rows=4, cols=8, word_width=4)
