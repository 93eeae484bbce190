"""
Configuração da simulação e modelos de resultado dos comandos.

Este módulo contém:
- SimConfig: configuração completa carregada do arquivo TOML
- VerifyReport: resultado da verificação exaustiva contra oráculos inteiros
- SimulationResult: resultado de uma operação add/sub/cmp ponta a ponta
- SimulationWarning: alerta não-bloqueante do validador de margens
"""

from pathlib import Path
from typing import Annotated, Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.core.constants import DEFAULT_CIM_FREQUENCY_HZ
from app.models.array import ArrayGeometry, BiasPlan, OperandLayout
from app.models.common import Comparison, OperationKind, SensingScheme, WarningLevel
from app.models.device import DeviceParams
from app.models.energy import CalibrationTargets, EnergyParams, ScenarioReport, TimingParams
from app.models.sensing import SensingConfig

CALIBRATE = "calibrate"


class SimConfig(BaseModel):
    """
    Configuração completa do simulador.

    ## Seções

    - `[device]`, `[bias]`, `[geometry]`, `[sensing]`, `[operands]`
    - `[energy]` e `[timing]`: tabela explícita ou a string `"calibrate"`
    - `[calibration]`: alvos usados quando `"calibrate"` é pedido
    - topo: `parallelism`, `cim_frequency_hz`, `output_path`

    Arquivo vazio produz a configuração padrão (1024×1024, palavras de
    32 bits, sensoriamento por corrente).

    **Nota**: Chaves desconhecidas são rejeitadas (`extra="forbid"`).
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    device: DeviceParams = Field(default_factory=DeviceParams)
    bias: BiasPlan = Field(default_factory=BiasPlan)
    geometry: ArrayGeometry = Field(default_factory=ArrayGeometry)
    sensing: SensingConfig = Field(default_factory=SensingConfig)
    operands: OperandLayout = Field(default_factory=OperandLayout)
    energy: EnergyParams | Literal["calibrate"] = CALIBRATE
    timing: TimingParams | Literal["calibrate"] = CALIBRATE
    calibration: CalibrationTargets = Field(default_factory=CalibrationTargets)

    parallelism: Annotated[
        float,
        Field(gt=0, le=1, description="Fração P de palavras computadas simultaneamente."),
    ] = 1.0
    cim_frequency_hz: Annotated[
        float,
        Field(gt=0, description="Frequência de operações CiM (esquema 1, fuga de hold)."),
    ] = DEFAULT_CIM_FREQUENCY_HZ
    output_path: Annotated[
        Path,
        Field(description="Diretório de saída dos arquivos CSV."),
    ] = Path("out")

    @model_validator(mode="after")
    def validate_cross_sections(self) -> "SimConfig":
        """Valida invariantes que envolvem mais de uma seção."""
        if 6 * self.sensing.delta >= self.bias.v_read:
            raise ValueError("6·delta < v_read violado")
        if max(self.operands.row_a, self.operands.row_b) >= self.geometry.rows:
            raise ValueError("linhas de operandos fora do array")
        if self.operands.word_index >= self.geometry.effective_words_per_row:
            raise ValueError("word_index fora do array")
        return self


class SimulationWarning(BaseModel):
    """
    Warning gerado pela validação de margens.

    Warnings são alertas não-bloqueantes: a execução continua,
    mas o usuário deve revisar a configuração apontada.
    """

    code: Annotated[str, Field(description="Código do warning.", examples=["VOLTAGE_SPACING_LOW"])]
    level: Annotated[WarningLevel, Field(description="Nível de severidade.")]
    message: Annotated[str, Field(description="Mensagem descritiva.")]
    field: Annotated[str | None, Field(description="Campo relacionado.")] = None
    value: Annotated[str | None, Field(description="Valor que gerou o warning.")] = None


class Mismatch(BaseModel):
    """Divergência entre o pipeline e o oráculo inteiro."""

    width: int
    a: int
    b: int
    operation: OperationKind
    expected: str
    actual: str


class VerifyReport(BaseModel):
    """
    Resultado da verificação contra oráculos inteiros.

    Um relatório aprovado não tem divergências e a menor distância entre
    níveis é maior ou igual à margem configurada.
    """

    widths: list[int]
    total_cases: int
    mismatches: list[Mismatch] = Field(default_factory=list)
    min_gap_ua: float
    min_gap_delta: float
    margin_ua: float
    sampled_widths: list[int] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches and self.min_gap_ua >= self.margin_ua


class BitTrace(BaseModel):
    """Tripla sensoriada e operandos recuperados de uma coluna."""

    column: int
    or_bit: int
    and_bit: int
    b_bit: int
    a_bit: int


class SimulationRequest(BaseModel):
    """Payload de `POST /simulations`."""

    model_config = ConfigDict(
        extra="forbid",
        json_schema_extra={"example": {"operation": "sub", "a": 5, "b": 3, "word_width": 4}},
    )

    operation: Annotated[OperationKind, Field(description="Operação: add, sub ou cmp.")]
    a: Annotated[int, Field(description="Operando A (linha V_GREAD1, minuendo).")]
    b: Annotated[int, Field(description="Operando B (linha V_GREAD2).")]
    word_width: Annotated[
        int | None,
        Field(ge=1, le=64, description="Largura da palavra (padrão: a da configuração)."),
    ] = None
    scheme: Annotated[
        SensingScheme | None,
        Field(description="Esquema de sensoriamento (padrão: o da configuração)."),
    ] = None


class SimulationResult(BaseModel):
    """Resultado de uma operação executada ponta a ponta no array."""

    operation: OperationKind
    a: int
    b: int
    word_width: int
    scheme: SensingScheme
    trace: list[BitTrace]
    recovered_a: int
    recovered_b: int
    result_bits: Annotated[str, Field(description="n+1 bits do resultado, MSB primeiro.")]
    result_value: int
    carry_out: int
    zero_flag: int
    sign_bit: int
    comparison: Comparison | None = None
    and_gates: int
    activations: int
    column_accesses: int
    report: ScenarioReport
    warnings: list[SimulationWarning] = Field(default_factory=list)


class VerifyRequest(BaseModel):
    """Payload de `POST /verifications`."""

    model_config = ConfigDict(extra="forbid")

    max_width: Annotated[int, Field(ge=1, le=8, description="Maior largura verificada.")] = 4
