"""
Tipos do estágio de sensoriamento (escada de referências e saídas).
"""

from dataclasses import dataclass, replace
from typing import Annotated

from pydantic import BaseModel, ConfigDict, Field

from app.core.constants import (
    DEFAULT_CBL,
    DEFAULT_CURRENT_MARGIN,
    DEFAULT_DELTA,
    REACHABLE_TRIPLES,
)
from app.models.common import SensingScheme

_REACHABLE = frozenset(REACHABLE_TRIPLES.values())


class SensingConfig(BaseModel):
    """
    Seção `[sensing]` da configuração.

    `current_margin` é a margem de corrente exigida entre níveis
    adjacentes; `delta` é a margem de tensão Δ dos esquemas 1 e 2.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    scheme: Annotated[
        SensingScheme,
        Field(description="Esquema de sensoriamento.", examples=["current", "scheme1"]),
    ] = SensingScheme.CURRENT
    current_margin: Annotated[
        float, Field(gt=0, description="Margem de corrente entre níveis (A).")
    ] = DEFAULT_CURRENT_MARGIN
    delta: Annotated[float, Field(gt=0, description="Margem de tensão Δ (V).")] = DEFAULT_DELTA
    cbl: Annotated[float, Field(gt=0, description="Capacitância da bitline (F).")] = DEFAULT_CBL


@dataclass(frozen=True, slots=True)
class ReferenceLadder:
    """
    Correntes de referência dos três amplificadores (OR, B, AND).

    Cada referência fica no ponto médio do par de níveis adjacentes:
    I(0,0) < i_ref_or < I(1,0) < i_ref_b < I(0,1) < i_ref_and < I(1,1).
    """

    i_ref_or: float
    i_ref_b: float
    i_ref_and: float


@dataclass(frozen=True, slots=True)
class SenseOutcome:
    """
    Tripla digital (OR, AND, B) de uma coluna e o bit A recuperado.

    `a_bit` fica `None` até `recover_a` ser aplicado.
    """

    or_bit: int
    and_bit: int
    b_bit: int
    a_bit: int | None = None

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.or_bit, self.and_bit, self.b_bit)

    @property
    def is_reachable(self) -> bool:
        return self.triple in _REACHABLE

    def with_a(self, a_bit: int) -> "SenseOutcome":
        return replace(self, a_bit=a_bit)


@dataclass(frozen=True, slots=True)
class VoltageSenseParams:
    """Margem Δ, capacitância e esquema do sensoriamento por tensão."""

    delta: float
    cbl: float
    scheme: SensingScheme = SensingScheme.SCHEME2
