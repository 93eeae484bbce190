"""
Modelo de corrente do bitcell 1T-FeFET.

Lei quadrática de saturação com limiar dependente da polarização:
I = leakage_floor + k · max(0, V_G − V_T(estado))².
"""

from app.core.errors import InvalidParamsError
from app.models.array import BiasPlan
from app.models.common import BitState
from app.models.device import DeviceParams


def validate_device(params: DeviceParams) -> None:
    """
    Revalida os invariantes de `DeviceParams`.

    Necessário para instâncias criadas com `model_construct`/`model_copy`,
    que não passam pelo validador pydantic.

    Raises:
        InvalidParamsError: Invariante violado.
    """
    if not params.vt_hrs > params.vt_lrs:
        raise InvalidParamsError("vt_hrs > vt_lrs violado", field="device.vt_hrs")
    if params.transconductance_k <= 0:
        raise InvalidParamsError(
            "transconductance_k > 0 violado", field="device.transconductance_k"
        )
    if params.leakage_floor < 0:
        raise InvalidParamsError("leakage_floor >= 0 violado", field="device.leakage_floor")


def threshold(state: BitState, params: DeviceParams) -> float:
    return params.vt_lrs if state is BitState.LRS else params.vt_hrs


def cell_current(state: BitState, vg: float, params: DeviceParams) -> float:
    """
    Corrente de dreno da célula (contribuição para a sense line).

    Args:
        state: Polarização armazenada.
        vg: Tensão de gate (V), não negativa.
        params: Parâmetros do dispositivo.

    Returns:
        Corrente em ampères. Não decrescente em `vg`, e
        `cell_current(LRS, vg) >= cell_current(HRS, vg)`.

    Raises:
        InvalidParamsError: `vg < 0` ou parâmetros inválidos.
    """
    if vg < 0:
        raise InvalidParamsError(f"vg deve ser >= 0 (recebido {vg})", field="vg")
    validate_device(params)
    overdrive = max(0.0, vg - threshold(state, params))
    return params.leakage_floor + params.transconductance_k * overdrive**2


def discharge_rate(state: BitState, vg: float, cbl: float, params: DeviceParams) -> float:
    """
    Taxa de descarga da bitline (V/s) = corrente da célula / C_BL.

    Raises:
        InvalidParamsError: `cbl <= 0`.
    """
    if cbl <= 0:
        raise InvalidParamsError(f"cbl deve ser > 0 (recebido {cbl})", field="cbl")
    return cell_current(state, vg, params) / cbl


def check_separability(params: DeviceParams, bias: BiasPlan) -> None:
    """
    Pré-condição de separabilidade ADRA.

    O ganho de corrente de LRS entre V_GREAD1 e V_GREAD2 deve superar o
    de HRS; caso contrário (1,0) e (0,1) não se distinguem.

    Raises:
        InvalidParamsError: Assimetria ausente.
    """
    gain_lrs = cell_current(BitState.LRS, bias.v_gread2, params) - cell_current(
        BitState.LRS, bias.v_gread1, params
    )
    gain_hrs = cell_current(BitState.HRS, bias.v_gread2, params) - cell_current(
        BitState.HRS, bias.v_gread1, params
    )
    if not gain_lrs > gain_hrs:
        raise InvalidParamsError(
            "Parâmetros não separáveis em ADRA: ganho LRS <= ganho HRS",
            field="bias.v_gread1",
            details={"gain_lrs": gain_lrs, "gain_hrs": gain_hrs},
        )
