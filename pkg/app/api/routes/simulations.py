from fastapi import APIRouter, status
from pydantic import BaseModel, Field

from app.api.deps import SimConfigDep
from app.models.simulation import (
    SimulationRequest,
    SimulationResult,
    VerifyReport,
    VerifyRequest,
)
from app.services.commands import cmd_simulate, cmd_verify

router = APIRouter(tags=["Simulações"])


class ErrorResponse(BaseModel):
    detail: str = Field(description="Mensagem de erro")
    code: str = Field(description="Código do erro")


@router.post(
    "/simulations",
    response_model=SimulationResult,
    status_code=status.HTTP_200_OK,
    summary="Executa uma operação add/sub/cmp em uma única ativação",
    description="""
Escreve A e B nas linhas do layout configurado, ativa as duas linhas com
tensões de porta assimétricas, sensoria a tripla (OR, AND, B) por coluna,
recupera A e alimenta o módulo de cômputo.

## Resposta

- `trace`: tripla sensoriada e A recuperado por coluna
- `result_bits`: n+1 bits do resultado, MSB primeiro, em complemento de dois
- `activations`: ativações de linha de palavra (sempre 1 por operação)
- `report`: energia e latência do esquema escolhido contra o baseline
  near-memory (duas leituras + cômputo periférico)
- `warnings`: alertas não-bloqueantes de margem

## Exemplo de Uso

```bash
curl -X POST "http://localhost:8000/simulations" \\
  -H "Content-Type: application/json" \\
  -d '{"operation": "sub", "a": 5, "b": 3, "word_width": 4}'
```
""",
    responses={
        422: {"model": ErrorResponse, "description": "Operando ou configuração inválidos"},
    },
)
def create_simulation(payload: SimulationRequest, config: SimConfigDep) -> SimulationResult:
    """Executa a operação pedida com a configuração do servidor."""
    return cmd_simulate(
        config,
        payload.operation,
        payload.a,
        payload.b,
        word_width=payload.word_width,
        scheme=payload.scheme,
    )


@router.post(
    "/verifications",
    response_model=VerifyReport,
    status_code=status.HTTP_200_OK,
    summary="Verificação exaustiva contra oráculos inteiros",
    description="""
Para toda largura w ≤ `max_width` e todo par (A, B) com sinal, confere
soma, subtração e comparação contra a aritmética inteira.

Via HTTP a largura é limitada a 8 (3·Σ4^w casos); larguras maiores
ficam na CLI.
""",
    responses={
        422: {"model": ErrorResponse, "description": "Margem insuficiente ou configuração inválida"},
    },
)
def create_verification(payload: VerifyRequest, config: SimConfigDep) -> VerifyReport:
    """Executa a verificação sem escrever CSV."""
    return cmd_verify(config, payload.max_width)
