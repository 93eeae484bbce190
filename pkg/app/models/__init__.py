"""Modelos Pydantic e tipos de valor do simulador."""

from app.models.array import ArrayGeometry, BiasPlan, OperandLayout
from app.models.common import (
    AccessKind,
    ActivationMode,
    BitState,
    Comparison,
    CrossoverStatus,
    OperationKind,
    SensingScheme,
    WarningLevel,
)
from app.models.compute import (
    CompareResult,
    DualOutput,
    ModuleInputs,
    ModuleOutput,
    WordOpResult,
)
from app.models.device import DeviceParams
from app.models.energy import (
    CalibrationTargets,
    CrossoverPoint,
    CrossoverReport,
    CrossoverResult,
    EnergyBreakdown,
    EnergyParams,
    ScenarioReport,
    TimingParams,
)
from app.models.sensing import (
    ReferenceLadder,
    SenseOutcome,
    SensingConfig,
    VoltageSenseParams,
)
from app.models.simulation import (
    BitTrace,
    Mismatch,
    SimConfig,
    SimulationRequest,
    SimulationResult,
    SimulationWarning,
    VerifyReport,
    VerifyRequest,
)

__all__ = [
    # Enums
    "AccessKind",
    "ActivationMode",
    "BitState",
    "Comparison",
    "CrossoverStatus",
    "OperationKind",
    "SensingScheme",
    "WarningLevel",
    # Dispositivo e array
    "DeviceParams",
    "BiasPlan",
    "ArrayGeometry",
    "OperandLayout",
    # Sensoriamento
    "SensingConfig",
    "ReferenceLadder",
    "SenseOutcome",
    "VoltageSenseParams",
    # Cômputo
    "ModuleInputs",
    "ModuleOutput",
    "DualOutput",
    "WordOpResult",
    "CompareResult",
    # Energia
    "EnergyParams",
    "TimingParams",
    "CalibrationTargets",
    "EnergyBreakdown",
    "ScenarioReport",
    "CrossoverPoint",
    "CrossoverResult",
    "CrossoverReport",
    # Simulação
    "SimConfig",
    "SimulationRequest",
    "SimulationResult",
    "SimulationWarning",
    "BitTrace",
    "Mismatch",
    "VerifyReport",
    "VerifyRequest",
]
