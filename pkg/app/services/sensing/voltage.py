"""
Sensoriamento por tensão (esquemas 1 e 2).

A RBL descarrega ΔV = I·t/C_BL durante a janela de sensoriamento.
Os limiares ficam em Δ, 3Δ e 5Δ de descarga, de modo que os quatro
níveis ADRA ocupam uma excursão de 6Δ.
"""

import logging

from app.core.constants import CIM_DISCHARGE_MULTIPLE, REACHABLE_TRIPLES
from app.core.errors import InsufficientMarginError, InvalidParamsError
from app.models.sensing import SenseOutcome, VoltageSenseParams
from app.services.array import ADRA_LEVEL_ORDER

logger = logging.getLogger(__name__)

# Limiares (OR, B, AND) em múltiplos de Δ
THRESHOLD_MULTIPLES: tuple[int, int, int] = (1, 3, 5)


def validate_voltage_params(params: VoltageSenseParams, v_read: float) -> None:
    if params.delta <= 0:
        raise InvalidParamsError("delta > 0 violado", field="sensing.delta")
    if params.cbl <= 0:
        raise InvalidParamsError("cbl > 0 violado", field="sensing.cbl")
    if CIM_DISCHARGE_MULTIPLE * params.delta >= v_read:
        raise InvalidParamsError("6·delta < v_read violado", field="sensing.delta")


def discharge(i_sl: float, params: VoltageSenseParams, t_sense: float, v_read: float) -> float:
    """Descarga da RBL (V), limitada a V_READ."""
    return min(i_sl * t_sense / params.cbl, v_read)


def sense_voltage(
    i_sl: float,
    params: VoltageSenseParams,
    t_sense: float,
    v_read: float,
) -> SenseOutcome:
    """
    Converte a descarga da RBL na tripla (OR, AND, B).

    Raises:
        InvalidParamsError: Parâmetros de tensão inválidos.
    """
    validate_voltage_params(params, v_read)
    dv = discharge(i_sl, params, t_sense, v_read)
    t_or, t_b, t_and = (m * params.delta for m in THRESHOLD_MULTIPLES)
    return SenseOutcome(or_bit=int(dv > t_or), and_bit=int(dv > t_and), b_bit=int(dv > t_b))


def full_swing_sense_time(
    levels: dict[tuple[int, int], float],
    params: VoltageSenseParams,
) -> float:
    """Janela (s) em que o nível (1,1) descarrega exatamente 6Δ."""
    return CIM_DISCHARGE_MULTIPLE * params.delta * params.cbl / levels[(1, 1)]


def check_voltage_window(
    levels: dict[tuple[int, int], float],
    params: VoltageSenseParams,
    t_sense: float,
    v_read: float,
) -> list[float]:
    """
    Verifica que as quatro descargas caem nas quatro faixas de limiar.

    Cada nível deve produzir a tripla do seu vetor e níveis adjacentes
    devem distar pelo menos Δ.

    Returns:
        Descargas em unidades de Δ, na ordem (0,0), (1,0), (0,1), (1,1).

    Raises:
        InsufficientMarginError: Nível fora da sua faixa ou espaçamento < Δ.
    """
    validate_voltage_params(params, v_read)
    in_delta = [
        discharge(levels[vector], params, t_sense, v_read) / params.delta
        for vector in ADRA_LEVEL_ORDER
    ]

    for vector, level in zip(ADRA_LEVEL_ORDER, in_delta, strict=True):
        outcome = sense_voltage(levels[vector], params, t_sense, v_read)
        if outcome.triple != REACHABLE_TRIPLES[vector]:
            raise InsufficientMarginError(
                f"Descarga de I{vector} = {level:.3f}Δ fora da sua faixa",
                pair=(f"I{vector}", "limiar"),
                details={"discharge_delta": level},
            )

    for i in range(len(in_delta) - 1):
        gap = in_delta[i + 1] - in_delta[i]
        if gap < 1.0:
            low, high = ADRA_LEVEL_ORDER[i], ADRA_LEVEL_ORDER[i + 1]
            raise InsufficientMarginError(
                f"Descargas de I{low} e I{high} separadas por {gap:.3f}Δ (< Δ)",
                pair=(f"I{low}", f"I{high}"),
                details={"gap_delta": gap},
            )

    logger.debug("Janela de tensão: %s Δ", ", ".join(f"{d:.3f}" for d in in_delta))
    return in_delta


class VoltageSenseAmplifier:
    """
    Amplificadores de tensão com limiares em Δ, 3Δ e 5Δ.

    A janela de sensoriamento é escolhida para descarga completa de 6Δ
    no nível mais alto, salvo quando `t_sense` é informado.
    """

    def __init__(
        self,
        params: VoltageSenseParams,
        levels: dict[tuple[int, int], float],
        v_read: float,
        t_sense: float | None = None,
    ) -> None:
        self.params = params
        self.scheme = params.scheme
        self.v_read = v_read
        self.t_sense = t_sense if t_sense is not None else full_swing_sense_time(levels, params)
        self.discharges_delta = check_voltage_window(levels, params, self.t_sense, v_read)

    def sense(self, i_sl: float) -> SenseOutcome:
        return sense_voltage(i_sl, self.params, self.t_sense, self.v_read)
