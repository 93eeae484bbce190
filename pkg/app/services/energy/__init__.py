from app.services.energy.calibration import (
    calibrate,
    calibrate_timing,
    constraint_residuals,
    resolve_energy,
    resolve_timing,
)
from app.services.energy.crossover import (
    crossover_frequency,
    crossover_parallelism,
    crossover_report,
)
from app.services.energy.model import (
    edp_report,
    energy_baseline,
    energy_cim_adra,
    energy_read,
    latency,
    sweep,
    trend_violations,
)

__all__ = [
    "calibrate",
    "calibrate_timing",
    "constraint_residuals",
    "crossover_frequency",
    "crossover_parallelism",
    "crossover_report",
    "edp_report",
    "energy_baseline",
    "energy_cim_adra",
    "energy_read",
    "latency",
    "resolve_energy",
    "resolve_timing",
    "sweep",
    "trend_violations",
]
