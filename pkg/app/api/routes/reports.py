"""
Relatórios analíticos de energia e latência: varredura e cruzamentos.
"""

from typing import Annotated

from fastapi import APIRouter, Query, status

from app.api.deps import SimConfigDep
from app.core.constants import DEFAULT_SWEEP_SIZES
from app.models.common import SensingScheme
from app.models.energy import CrossoverReport, ScenarioReport
from app.services.commands import cmd_crossover, cmd_sweep

router = APIRouter(tags=["Relatórios"])


@router.get(
    "/sweeps",
    response_model=list[ScenarioReport],
    status_code=status.HTTP_200_OK,
    summary="Varredura de tamanho de array × esquema de sensoriamento",
    description="""
Um `ScenarioReport` por combinação (tamanho, esquema), na ordem
esquema → tamanho. Arrays quadrados N×N.

Falha de invariante (tendência não monótona ou identidade EDP) retorna
500 com código `INVARIANT_FAILURE`.
""",
)
def list_sweeps(
    config: SimConfigDep,
    sizes: Annotated[list[int] | None, Query(description="Lados N do array.")] = None,
    schemes: Annotated[list[SensingScheme] | None, Query(description="Esquemas.")] = None,
) -> list[ScenarioReport]:
    return cmd_sweep(config, sizes or list(DEFAULT_SWEEP_SIZES), schemes)


@router.get(
    "/crossovers",
    response_model=CrossoverReport,
    status_code=status.HTTP_200_OK,
    summary="Cruzamentos f* e P* entre os esquemas 1 e 2",
    description="""
Frequência f* de operações CiM e paralelismo P* em que os esquemas de
tensão 1 e 2 gastam a mesma energia, com as curvas amostradas (20 pontos
de cada lado).

Ausência de cruzamento é reportada como `status = "no_crossover"`.
""",
)
def get_crossovers(config: SimConfigDep) -> CrossoverReport:
    return cmd_crossover(config)
