"""
Configurações da aplicação e carregamento da configuração de simulação.

- Settings: configurações de processo (ambiente / .env)
- load_config / dump_config: arquivo TOML da simulação (SimConfig)
"""

import logging
import tomllib
from functools import lru_cache
from pathlib import Path
from typing import Literal

import tomli_w
from pydantic import ValidationError
from pydantic_settings import BaseSettings, SettingsConfigDict

from app.core.errors import ConfigurationError
from app.models.simulation import SimConfig

logger = logging.getLogger(__name__)


class Settings(BaseSettings):
    """
    Configurações da aplicação.

    Todas as configurações podem ser sobrescritas via variáveis
    de ambiente.

    Example:
        ```bash
        export CONFIG_PATH=configs/scheme1.toml
        export LOG_LEVEL=DEBUG
        ```
    """

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # === API ===
    APP_NAME: str = "ADRA CiM Simulator"
    APP_VERSION: str = "1.0.0"
    DEBUG: bool = False
    HOST: str = "0.0.0.0"
    PORT: int = 8000

    # === Logging ===
    LOG_LEVEL: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = "WARNING"

    # === Simulação ===
    CONFIG_PATH: Path | None = None
    """
    Arquivo TOML usado pela API HTTP e como padrão da CLI.

    Quando ausente, a configuração padrão é usada.
    """

    OUTPUT_DIR: Path | None = None
    """Sobrescreve `output_path` da configuração de simulação."""

    # === CORS ===
    CORS_ORIGINS: list[str] = ["*"]


@lru_cache
def get_settings() -> Settings:
    """
    Obtém instância singleton das configurações.

    Utiliza cache para evitar múltiplas leituras do .env.

    Returns:
        Instância de Settings.
    """
    return Settings()


def _field_path(loc: tuple[int | str, ...]) -> str:
    return ".".join(str(part) for part in loc) or "<root>"


def parse_config(text: str, source: str = "<string>") -> SimConfig:
    """
    Valida o texto TOML de uma configuração de simulação.

    Args:
        text: Conteúdo TOML.
        source: Nome da origem, usado nas mensagens.

    Returns:
        SimConfig com defaults preenchidos.

    Raises:
        ConfigurationError: Erro de sintaxe (com linha/coluna) ou
            invariante violado (com o caminho do campo).
    """
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise ConfigurationError(
            f"{source}: erro de sintaxe TOML: {exc}",
            details={
                "line": getattr(exc, "lineno", None),
                "column": getattr(exc, "colno", None),
            },
        )

    try:
        config = SimConfig.model_validate(data)
    except ValidationError as exc:
        first = exc.errors()[0]
        field = _field_path(first["loc"])
        raise ConfigurationError(
            f"{source}: {field}: {first['msg']}",
            setting=field,
            details={"errors": len(exc.errors())},
        )

    logger.debug("Configuração carregada de %s", source)
    return config


def load_config(path: Path | str | None = None) -> SimConfig:
    """
    Carrega a configuração de simulação de um arquivo TOML.

    Args:
        path: Caminho do arquivo. `None` retorna a configuração padrão.

    Returns:
        SimConfig validado.

    Raises:
        ConfigurationError: Arquivo ausente, malformado ou inválido.
    """
    if path is None:
        return SimConfig()

    config_path = Path(path)
    try:
        text = config_path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigurationError(
            f"Não foi possível ler {config_path}: {exc.strerror}",
            setting="config",
        )
    return parse_config(text, source=str(config_path))


def dump_config(config: SimConfig) -> str:
    """
    Serializa a configuração em TOML normalizado.

    `parse_config(dump_config(c)) == c` para todo SimConfig válido.
    """
    data = config.model_dump(mode="json", exclude_none=True)
    return tomli_w.dumps(data)
