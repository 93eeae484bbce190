"""
Dependências injetáveis para os endpoints.

Centraliza a criação de dependências utilizadas
pelos endpoints via FastAPI Depends.
"""

from typing import Annotated

from fastapi import Depends

from app.core.config import Settings, get_settings, load_config
from app.models.simulation import SimConfig


def get_settings_dep() -> Settings:
    """
    Dependência para obter configurações.

    Returns:
        Instância de Settings.
    """
    return get_settings()


def get_sim_config_dep(settings: Annotated[Settings, Depends(get_settings_dep)]) -> SimConfig:
    """
    Dependência para obter a configuração de simulação.

    Lê `Settings.CONFIG_PATH` a cada requisição; sem arquivo, usa os padrões.

    Raises:
        ConfigurationError: Arquivo configurado ausente ou inválido.
    """
    return load_config(settings.CONFIG_PATH)


SettingsDep = Annotated[Settings, Depends(get_settings_dep)]
SimConfigDep = Annotated[SimConfig, Depends(get_sim_config_dep)]
