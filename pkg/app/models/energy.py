"""
Modelos do modelo analítico de energia e latência.

Energias estão em unidades normalizadas (e_rbl_per_row = 1 após a
calibração) e são atribuídas por coluna selecionada. Tempos em ns.
"""

from typing import Annotated

from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator

from app.core.constants import (
    DEFAULT_LEAKAGE_CELL_SHARE,
    DEFAULT_RBL_FULL_SWING_FACTOR,
    DEFAULT_SENSE_SHARE,
    DEFAULT_T_DELTA_PER_ROW,
    DEFAULT_T_PRECHARGE_PER_ROW,
    DEFAULT_T_SENSE,
    DEFAULT_T_SETTLE_PER_ROW,
    DEFAULT_T_WL_PER_COL,
    DEFAULT_WORDLINE_SHARE,
    MAX_CONSTRAINT_RESIDUAL,
    TARGET_CIM_RBL_FRACTION,
    TARGET_CIM_TO_READ_ENERGY,
    TARGET_CROSSOVER_FREQUENCY_HZ,
    TARGET_CROSSOVER_PARALLELISM,
    TARGET_ENERGY_DECREASE,
    TARGET_READ_RBL_FRACTION,
    TARGET_SPEEDUP,
)
from app.models.common import CrossoverStatus, SensingScheme

NonNegative = Annotated[float, Field(ge=0)]
Fraction = Annotated[float, Field(gt=0, lt=1)]


class EnergyParams(BaseModel):
    """
    Coeficientes de energia por componente.

    ## Componentes

    - `e_rbl_per_row`: termo capacitivo da RBL por linha
    - `e_wl_per_col`: wordline por coluna asserida
    - `e_sense_per_sa`: um amplificador de sensoriamento
    - `e_current_flow`: condução DC de uma célula durante a leitura por corrente
    - `e_compute_base` / `e_compute_adra_extra`: módulo de cômputo
    - `p_leak_per_col` / `p_leak_per_cell`: fuga de hold do esquema 1 (W)
    - `e_pseudo_cim_per_col`: recarga de colunas meio-selecionadas (esquema 1)
    - `rbl_full_swing_factor`: carga da RBL a partir de 0 V (esquema 2)
    - `swing_ratio`: Δ/V_READ do termo de recarga do esquema 1

    **Nota**: `e_rbl_per_row = 0` indica parâmetros não calibrados.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    e_rbl_per_row: NonNegative = 0.0
    e_wl_per_col: NonNegative = 0.0
    e_sense_per_sa: NonNegative = 0.0
    e_current_flow: NonNegative = 0.0
    e_compute_base: NonNegative = 0.0
    e_compute_adra_extra: NonNegative = 0.0
    p_leak_per_col: NonNegative = 0.0
    p_leak_per_cell: NonNegative = 0.0
    e_pseudo_cim_per_col: NonNegative = 0.0
    rbl_full_swing_factor: Annotated[float, Field(gt=0)] = DEFAULT_RBL_FULL_SWING_FACTOR
    swing_ratio: Fraction = 0.05

    @model_validator(mode="after")
    def validate_peripheral_share(self) -> "EnergyParams":
        """O acréscimo ADRA no periférico não pode ser componente dominante."""
        if self.e_compute_adra_extra > 0.1 * self.e_rbl_per_row * 1024:
            raise ValueError("e_compute_adra_extra << e_rbl_per_row · 1024 violado")
        return self

    @property
    def is_calibrated(self) -> bool:
        return self.e_rbl_per_row > 0

    def leakage_power(self, rows: int) -> float:
        """Potência de fuga de hold de uma coluna com `rows` células."""
        return self.p_leak_per_col + self.p_leak_per_cell * rows


class TimingParams(BaseModel):
    """
    Coeficientes de latência (ns) por coluna/linha e tempos fixos.

    Ciclo = t_wl_per_col·cols + t_sense + descarga + pré-carga (esquema 2).
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    t_wl_per_col: NonNegative = DEFAULT_T_WL_PER_COL
    t_settle_per_row: NonNegative = DEFAULT_T_SETTLE_PER_ROW
    t_delta_per_row: NonNegative = DEFAULT_T_DELTA_PER_ROW
    t_precharge_per_row: NonNegative = DEFAULT_T_PRECHARGE_PER_ROW
    t_sense: NonNegative = DEFAULT_T_SENSE
    t_compute: NonNegative = 0.0


class CalibrationTargets(BaseModel):
    """
    Razões publicadas e decisões de calibração (seção `[calibration]`).

    As três primeiras razões fixam a decomposição de energia de leitura e
    CiM na geometria de referência com sensoriamento por corrente.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    read_rbl_fraction: Fraction = TARGET_READ_RBL_FRACTION
    cim_rbl_fraction: Fraction = TARGET_CIM_RBL_FRACTION
    cim_to_read_energy: Annotated[float, Field(gt=1)] = TARGET_CIM_TO_READ_ENERGY
    energy_decrease: Fraction = TARGET_ENERGY_DECREASE
    speedup: Annotated[float, Field(gt=1, lt=2)] = TARGET_SPEEDUP
    crossover_frequency_hz: Annotated[float, Field(gt=0)] = TARGET_CROSSOVER_FREQUENCY_HZ
    crossover_parallelism: Fraction = TARGET_CROSSOVER_PARALLELISM
    reference_size: Annotated[int, Field(ge=2)] = 1024
    wordline_share: Fraction = DEFAULT_WORDLINE_SHARE
    sense_share: Fraction = DEFAULT_SENSE_SHARE
    rbl_full_swing_factor: Annotated[float, Field(gt=0)] = DEFAULT_RBL_FULL_SWING_FACTOR
    leakage_cell_share: Annotated[float, Field(ge=0, le=1)] = DEFAULT_LEAKAGE_CELL_SHARE
    max_residual: Fraction = MAX_CONSTRAINT_RESIDUAL


class EnergyBreakdown(BaseModel):
    """Energia por componente de uma operação; `total` é a soma exata."""

    model_config = ConfigDict(frozen=True)

    rbl: float
    current_flow_sensing: float
    wordline: float
    peripheral: float
    leakage: float = 0.0

    @computed_field  # type: ignore[prop-decorator]
    @property
    def total(self) -> float:
        return (
            self.rbl
            + self.current_flow_sensing
            + self.wordline
            + self.peripheral
            + self.leakage
        )

    @property
    def rbl_fraction(self) -> float:
        return self.rbl / self.total


class ScenarioReport(BaseModel):
    """
    Comparação ADRA CiM vs. baseline near-memory (duas leituras + cômputo).

    Percentuais em pontos percentuais. EDP = energia × atraso, logo
    `edp_decrease = 100·(1 − (1 − energy_decrease/100) / speedup)`.
    """

    model_config = ConfigDict(frozen=True)

    scheme: SensingScheme
    rows: int
    cols: int
    word_width: int
    parallelism: float
    speedup: float
    energy_decrease: float
    edp_decrease: float
    latency_read_s: float
    latency_cim_s: float
    latency_baseline_s: float
    breakdown_read: EnergyBreakdown
    breakdown_cim: EnergyBreakdown
    breakdown_baseline: EnergyBreakdown

    @property
    def edp_identity_residual(self) -> float:
        expected = 100.0 * (1.0 - (1.0 - self.energy_decrease / 100.0) / self.speedup)
        return abs(expected - self.edp_decrease) / 100.0


class CrossoverPoint(BaseModel):
    """Amostra da curva de energia por operação dos esquemas 1 e 2."""

    model_config = ConfigDict(frozen=True)

    sweep: str
    x: float
    scheme1: float
    scheme2: float
    winner: str


class CrossoverResult(BaseModel):
    """Ponto de cruzamento de uma varredura e a curva amostrada."""

    status: CrossoverStatus
    value: float | None = None
    points: list[CrossoverPoint] = Field(default_factory=list)


class CrossoverReport(BaseModel):
    """Cruzamentos em frequência (f*) e em paralelismo (P*)."""

    rows: int
    cols: int
    evaluated_parallelism: float
    frequency: CrossoverResult
    parallelism: CrossoverResult
