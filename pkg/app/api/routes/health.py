"""
Endpoint de health check.

Além do status, publica a versão do modelo e as constantes de hardware
documentadas (portas acrescentadas e área).
"""

from datetime import UTC, datetime
from typing import Annotated

from fastapi import APIRouter, status
from pydantic import BaseModel, Field

from app.core.config import get_settings
from app.core.constants import (
    ADRA_GATE_COUNTS,
    AREA_OVERHEAD_FULL_PARALLELISM,
    AREA_OVERHEAD_SHARED_PERIPHERALS,
    SHARED_PERIPHERAL_MUX,
    SIMULATOR_MODEL_VERSION,
)

router = APIRouter(tags=["Health"])


class GateCountsResponse(BaseModel):
    """Portas acrescentadas pelo módulo ADRA sobre o somador anterior."""

    muxes_2to1: int
    not_gates: int
    nor_gates: int
    dual_output_extra_transistors: int


class AreaOverheadResponse(BaseModel):
    """Sobrecarga de área estimada por lado do array (fração)."""

    full_parallelism: dict[int, float]
    shared_peripherals: dict[int, float]
    shared_peripheral_mux: int


class HealthResponse(BaseModel):
    """
    Resposta do health check.

    Indica o status da aplicação e informações básicas
    para monitoramento.
    """

    status: Annotated[
        str,
        Field(
            description="Status da aplicação. 'healthy' indica funcionamento normal.",
            examples=["healthy"],
        ),
    ]

    version: Annotated[
        str,
        Field(description="Versão da aplicação.", examples=["1.0.0"]),
    ]

    model_version: Annotated[
        str,
        Field(description="Versão do modelo de dispositivo, energia e latência.", examples=["1.0.0"]),
    ]

    timestamp: Annotated[datetime, Field(description="Timestamp UTC da verificação.")]

    config_path: Annotated[
        str | None,
        Field(description="Arquivo de configuração em uso; nulo para os padrões."),
    ] = None

    gate_counts: GateCountsResponse
    area_overhead: AreaOverheadResponse


@router.get(
    "/health",
    response_model=HealthResponse,
    status_code=status.HTTP_200_OK,
    summary="Verificação de saúde da API",
    description="""
Verifica se a aplicação está funcionando corretamente.

Retorna a versão do modelo e as constantes de hardware documentadas:
portas acrescentadas pelo módulo de cômputo e sobrecarga de área com
paralelismo total e com periféricos compartilhados (mux de coluna 4:1).

**Nota**: Os valores de área são estimativas de layout publicadas, não
resultados do simulador.
""",
)
async def health_check() -> HealthResponse:
    """
    Retorna status de saúde da aplicação.

    Returns:
        HealthResponse com status e metadados.
    """
    settings = get_settings()

    return HealthResponse(
        status="healthy",
        version=settings.APP_VERSION,
        model_version=SIMULATOR_MODEL_VERSION,
        timestamp=datetime.now(UTC),
        config_path=str(settings.CONFIG_PATH) if settings.CONFIG_PATH else None,
        gate_counts=GateCountsResponse(
            muxes_2to1=ADRA_GATE_COUNTS.muxes_2to1,
            not_gates=ADRA_GATE_COUNTS.not_gates,
            nor_gates=ADRA_GATE_COUNTS.nor_gates,
            dual_output_extra_transistors=ADRA_GATE_COUNTS.dual_output_extra_transistors,
        ),
        area_overhead=AreaOverheadResponse(
            full_parallelism=AREA_OVERHEAD_FULL_PARALLELISM,
            shared_peripherals=AREA_OVERHEAD_SHARED_PERIPHERALS,
            shared_peripheral_mux=SHARED_PERIPHERAL_MUX,
        ),
    )
