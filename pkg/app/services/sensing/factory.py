"""
Factory para criação de amplificadores de sensoriamento.

Centraliza a escolha entre sensoriamento por corrente e por tensão
com base no esquema configurado.
"""

from app.models.array import BiasPlan
from app.models.common import SensingScheme
from app.models.device import DeviceParams
from app.models.sensing import SensingConfig, VoltageSenseParams
from app.services.array import current_levels
from app.services.sensing.base import SenseAmplifierProtocol
from app.services.sensing.current import CurrentSenseAmplifier
from app.services.sensing.ladder import build_ladder
from app.services.sensing.voltage import VoltageSenseAmplifier


def get_sense_amplifier(
    device: DeviceParams,
    bias: BiasPlan,
    sensing: SensingConfig,
    scheme: SensingScheme | None = None,
) -> SenseAmplifierProtocol:
    """
    Obtém o amplificador do esquema pedido.

    A escada de corrente é sempre construída: ela valida a separação
    dos quatro níveis ADRA, pré-condição de qualquer esquema.

    Args:
        device: Parâmetros do dispositivo.
        bias: Plano de polarização.
        sensing: Seção `[sensing]` da configuração.
        scheme: Esquema desejado (padrão: `sensing.scheme`).

    Returns:
        Instância de SenseAmplifierProtocol.

    Raises:
        InsufficientMarginError: Níveis não separáveis.
    """
    effective = scheme or sensing.scheme
    ladder = build_ladder(device, bias, sensing.current_margin)

    if effective is SensingScheme.CURRENT:
        return CurrentSenseAmplifier(ladder)

    params = VoltageSenseParams(delta=sensing.delta, cbl=sensing.cbl, scheme=effective)
    return VoltageSenseAmplifier(params, current_levels(device, bias), bias.v_read)
