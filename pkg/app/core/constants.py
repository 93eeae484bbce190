"""
Constantes de polarização, calibração e metadados do simulador.

Este módulo centraliza os valores de referência publicados para o
array 1T-FeFET avaliado (tensões de leitura/escrita, frações de energia,
speedups e crossovers) e os metadados de hardware do módulo de cômputo.

⚠️ IMPORTANTE: As energias do modelo são normalizadas (e_rbl_per_row = 1).
Apenas as razões entre componentes têm significado físico.
"""

from dataclasses import dataclass
from typing import Final

# === POLARIZAÇÃO (V) ===

DEFAULT_V_READ: Final[float] = 1.0
DEFAULT_V_GREAD1: Final[float] = 0.83
DEFAULT_V_GREAD2: Final[float] = 1.0
DEFAULT_V_SET: Final[float] = 3.7
DEFAULT_V_RESET: Final[float] = -5.0

# === DISPOSITIVO (SI) ===

DEFAULT_VT_LRS: Final[float] = 0.0
DEFAULT_VT_HRS: Final[float] = 1.2
DEFAULT_TRANSCONDUCTANCE_K: Final[float] = 10e-6
DEFAULT_LEAKAGE_FLOOR: Final[float] = 0.05e-6

# === SENSORIAMENTO ===

DEFAULT_CURRENT_MARGIN: Final[float] = 1e-6
DEFAULT_DELTA: Final[float] = 0.05
DEFAULT_CBL: Final[float] = 1e-12

READ_DISCHARGE_MULTIPLE: Final[int] = 2
CIM_DISCHARGE_MULTIPLE: Final[int] = 6

# (or, and, b) alcançáveis pelos quatro níveis ADRA, indexados por (A, B)
REACHABLE_TRIPLES: Final[dict[tuple[int, int], tuple[int, int, int]]] = {
    (0, 0): (0, 0, 0),
    (1, 0): (1, 0, 0),
    (0, 1): (1, 0, 1),
    (1, 1): (1, 1, 1),
}

# === GEOMETRIA ===

DEFAULT_ROWS: Final[int] = 1024
DEFAULT_COLS: Final[int] = 1024
DEFAULT_WORD_WIDTH: Final[int] = 32
DEFAULT_SWEEP_SIZES: Final[tuple[int, ...]] = (256, 512, 1024)

# === ALVOS DE CALIBRAÇÃO (sensoriamento por corrente, 1024x1024, 32 bits) ===

TARGET_READ_RBL_FRACTION: Final[float] = 0.91
TARGET_CIM_RBL_FRACTION: Final[float] = 0.74
TARGET_CIM_TO_READ_ENERGY: Final[float] = 1.24
TARGET_ENERGY_DECREASE: Final[float] = 0.4118
TARGET_SPEEDUP: Final[float] = 1.94
TARGET_CROSSOVER_FREQUENCY_HZ: Final[float] = 7.53e6
TARGET_CROSSOVER_PARALLELISM: Final[float] = 0.42

# Decisões declaradas (sobrescrevíveis em [calibration])
DEFAULT_WORDLINE_SHARE: Final[float] = 0.6
DEFAULT_SENSE_SHARE: Final[float] = 0.25
DEFAULT_RBL_FULL_SWING_FACTOR: Final[float] = 1.8
DEFAULT_LEAKAGE_CELL_SHARE: Final[float] = 0.7
DEFAULT_CIM_FREQUENCY_HZ: Final[float] = 25e6
MAX_CONSTRAINT_RESIDUAL: Final[float] = 0.01

# === TEMPORIZAÇÃO (ns, coeficientes por linha/coluna) ===

DEFAULT_T_WL_PER_COL: Final[float] = 0.45 / 1024
DEFAULT_T_SETTLE_PER_ROW: Final[float] = 0.53 / 1024
DEFAULT_T_DELTA_PER_ROW: Final[float] = 0.0135 / 1024
DEFAULT_T_PRECHARGE_PER_ROW: Final[float] = 6.5 / 1024
DEFAULT_T_SENSE: Final[float] = 0.02

# === VERIFICAÇÃO ===

MAX_EXHAUSTIVE_WIDTH: Final[int] = 12
MAX_SAMPLED_WIDTH: Final[int] = 16
MAX_API_VERIFY_WIDTH: Final[int] = 8

# === CÓDIGOS DE SAÍDA DA CLI ===

EXIT_OK: Final[int] = 0
EXIT_CONFIG_ERROR: Final[int] = 3
EXIT_VERIFY_MISMATCH: Final[int] = 4
EXIT_INVARIANT_FAILURE: Final[int] = 5

# === CSV ===

SCENARIO_CSV_COLUMNS: Final[tuple[str, ...]] = (
    "scheme",
    "rows",
    "cols",
    "word_width",
    "P",
    "speedup",
    "energy_decrease_pct",
    "edp_decrease_pct",
    "rbl_J",
    "wl_J",
    "sense_J",
    "periph_J",
    "leak_J",
)

CROSSOVER_CSV_COLUMNS: Final[tuple[str, ...]] = (
    "sweep",
    "x",
    "scheme1_J",
    "scheme2_J",
    "winner",
)

CROSSOVER_POINTS_PER_SIDE: Final[int] = 20


# === METADADOS DO MÓDULO DE CÔMPUTO ===


@dataclass(frozen=True)
class GateCounts:
    """Acréscimos de hardware do módulo ADRA sobre o somador anterior."""

    muxes_2to1: int = 2
    not_gates: int = 1
    nor_gates: int = 1
    dual_output_extra_transistors: int = 4

    @staticmethod
    def and_tree_gates(width: int) -> int:
        """Portas AND de 2 entradas no detector de igualdade de n bits."""
        return max(width - 1, 0)


ADRA_GATE_COUNTS: Final[GateCounts] = GateCounts()

# Estimativas de layout publicadas; documentadas, nunca calculadas.
AREA_OVERHEAD_FULL_PARALLELISM: Final[dict[int, float]] = {1024: 0.029, 256: 0.104}
AREA_OVERHEAD_SHARED_PERIPHERALS: Final[dict[int, float]] = {1024: 0.0034, 256: 0.0316}
SHARED_PERIPHERAL_MUX: Final[int] = 4

SIMULATOR_MODEL_VERSION: Final[str] = "1.0.0"
