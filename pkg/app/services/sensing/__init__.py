from app.services.sensing.base import SenseAmplifierProtocol
from app.services.sensing.current import CurrentSenseAmplifier, sense_current
from app.services.sensing.factory import get_sense_amplifier
from app.services.sensing.ladder import (
    build_ladder,
    ladder_from_levels,
    recover_a,
    required_discharge,
)
from app.services.sensing.voltage import (
    VoltageSenseAmplifier,
    check_voltage_window,
    full_swing_sense_time,
    sense_voltage,
)

__all__ = [
    "CurrentSenseAmplifier",
    "SenseAmplifierProtocol",
    "VoltageSenseAmplifier",
    "build_ladder",
    "check_voltage_window",
    "full_swing_sense_time",
    "get_sense_amplifier",
    "ladder_from_levels",
    "recover_a",
    "required_discharge",
    "sense_current",
    "sense_voltage",
]
