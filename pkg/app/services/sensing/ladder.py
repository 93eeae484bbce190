"""
Escada de referências, recuperação de A e descarga exigida por modo.
"""

from app.core.constants import (
    CIM_DISCHARGE_MULTIPLE,
    READ_DISCHARGE_MULTIPLE,
    REACHABLE_TRIPLES,
)
from app.core.errors import InsufficientMarginError, InvalidParamsError, UnreachableTripleError
from app.models.array import BiasPlan
from app.models.common import ActivationMode
from app.models.device import DeviceParams
from app.models.sensing import ReferenceLadder
from app.services.array import ADRA_LEVEL_ORDER, current_levels

_REACHABLE = frozenset(REACHABLE_TRIPLES.values())


def _label(vector: tuple[int, int]) -> str:
    return f"I({vector[0]},{vector[1]})"


def ladder_from_levels(
    levels: dict[tuple[int, int], float],
    margin: float,
) -> ReferenceLadder:
    """
    Referências nos pontos médios dos níveis adjacentes.

    Args:
        levels: Corrente por vetor (A, B).
        margin: Margem de corrente (A); cada par adjacente deve distar > 2·margin.

    Raises:
        InsufficientMarginError: Nomeia o primeiro par de níveis que viola a margem.
    """
    ordered = [levels[vector] for vector in ADRA_LEVEL_ORDER]
    for i in range(len(ordered) - 1):
        low, high = ordered[i], ordered[i + 1]
        if high - low <= 2 * margin:
            pair = (_label(ADRA_LEVEL_ORDER[i]), _label(ADRA_LEVEL_ORDER[i + 1]))
            raise InsufficientMarginError(
                f"Níveis {pair[0]} e {pair[1]} separados por "
                f"{(high - low) * 1e6:.3f} µA, exigido > {2 * margin * 1e6:.3f} µA",
                pair=pair,
                details={"gap_a": high - low, "margin_a": margin},
            )

    midpoints = [(low + high) / 2 for low, high in zip(ordered, ordered[1:], strict=False)]
    return ReferenceLadder(i_ref_or=midpoints[0], i_ref_b=midpoints[1], i_ref_and=midpoints[2])


def build_ladder(
    device: DeviceParams,
    bias: BiasPlan,
    margin: float,
    mode: ActivationMode = ActivationMode.ADRA_CIM,
) -> ReferenceLadder:
    """
    Constrói a escada de referências para os quatro níveis de corrente.

    No modo simétrico (0,1) e (1,0) colapsam em um único nível e a
    construção é rejeitada.

    Raises:
        InsufficientMarginError: Níveis não separáveis com a margem pedida.
    """
    return ladder_from_levels(current_levels(device, bias, mode), margin)


def recover_a(or_bit: int, and_bit: int, b_bit: int) -> int:
    """
    Recupera o bit A pela porta OAI: A = NOT(NOT(AND) · (B + NOT(OR))).

    Raises:
        UnreachableTripleError: Tripla que nenhum vetor produz.
    """
    if (or_bit, and_bit, b_bit) not in _REACHABLE:
        raise UnreachableTripleError(or_bit, and_bit, b_bit)
    return 1 - ((1 - and_bit) & (b_bit | (1 - or_bit)))


def required_discharge(mode: ActivationMode) -> int:
    """
    Descarga da RBL exigida, em múltiplos de Δ.

    Leitura padrão separa 2 níveis (2Δ); ADRA separa 4 níveis (6Δ).

    Raises:
        InvalidParamsError: Modo simétrico fora do escopo avaliado.
    """
    if mode is ActivationMode.STANDARD_READ:
        return READ_DISCHARGE_MULTIPLE
    if mode is ActivationMode.ADRA_CIM:
        return CIM_DISCHARGE_MULTIPLE
    raise InvalidParamsError(
        f"Descarga não definida para o modo {mode.value}", field="mode"
    )
