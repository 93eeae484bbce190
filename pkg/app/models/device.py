"""
Parâmetros do modelo de dispositivo 1T-FeFET.

O modelo é uma lei quadrática de saturação com dois limiares fixos:
a polarização negativa (HRS) desloca o V_T para cima.
"""

from typing import Annotated

from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.core.constants import (
    DEFAULT_LEAKAGE_FLOOR,
    DEFAULT_TRANSCONDUCTANCE_K,
    DEFAULT_VT_HRS,
    DEFAULT_VT_LRS,
)


class DeviceParams(BaseModel):
    """
    Limiares e transcondutância do mapeamento (estado, V_G) → corrente.

    ## Invariantes

    - `vt_hrs > vt_lrs`
    - `transconductance_k > 0`
    - `leakage_floor >= 0`

    A condição de separabilidade ADRA depende da polarização e é
    verificada em `app.services.device.check_separability`.
    """

    model_config = ConfigDict(
        extra="forbid",
        frozen=True,
        json_schema_extra={
            "example": {
                "vt_lrs": 0.0,
                "vt_hrs": 1.2,
                "transconductance_k": 10e-6,
                "leakage_floor": 0.05e-6,
            }
        },
    )

    vt_lrs: Annotated[
        float,
        Field(description="Tensão de limiar no estado LRS (V).", examples=[0.0]),
    ] = DEFAULT_VT_LRS

    vt_hrs: Annotated[
        float,
        Field(description="Tensão de limiar no estado HRS (V).", examples=[1.2]),
    ] = DEFAULT_VT_HRS

    transconductance_k: Annotated[
        float,
        Field(gt=0, description="Fator de transcondutância (A/V²).", examples=[10e-6]),
    ] = DEFAULT_TRANSCONDUCTANCE_K

    leakage_floor: Annotated[
        float,
        Field(ge=0, description="Corrente mínima de fuga por célula (A).", examples=[0.05e-6]),
    ] = DEFAULT_LEAKAGE_FLOOR

    @model_validator(mode="after")
    def validate_thresholds(self) -> "DeviceParams":
        """Polarização negativa deve elevar o limiar."""
        if not self.vt_hrs > self.vt_lrs:
            raise ValueError("vt_hrs > vt_lrs violado")
        return self
