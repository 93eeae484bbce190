"""
Calibração em forma fechada dos coeficientes de energia e latência.

Escala normalizada: e_rbl_per_row = 1. Na geometria de referência
(sensoriamento por corrente) a calibração fixa:

- RBL / energia de leitura = read_rbl_fraction (exato)
- energia CiM / energia de leitura = cim_to_read_energy (exato)
- 1 − CiM / baseline = energy_decrease (exato)
- RBL / energia CiM = cim_rbl_fraction (resíduo reportado, < max_residual)

A liberdade restante segue as decisões em `CalibrationTargets`
(partição wordline/sensoriamento, fator de excursão, fuga por célula).
"""

import logging

from app.core.constants import CIM_DISCHARGE_MULTIPLE
from app.core.errors import CalibrationError
from app.models.array import ArrayGeometry
from app.models.common import SensingScheme
from app.models.energy import CalibrationTargets, EnergyParams, TimingParams
from app.models.simulation import SimConfig
from app.services.energy.model import cycle_time, energy_baseline, energy_cim_adra, energy_read

logger = logging.getLogger(__name__)


def reference_geometry(targets: CalibrationTargets) -> ArrayGeometry:
    size = targets.reference_size
    return ArrayGeometry(rows=size, cols=size, word_width=min(32, size))


def calibrate(targets: CalibrationTargets, swing_ratio: float) -> EnergyParams:
    """
    Resolve os coeficientes de energia a partir das razões-alvo.

    Args:
        targets: Razões publicadas e decisões de calibração.
        swing_ratio: Δ/V_READ do sensoriamento por tensão.

    Returns:
        EnergyParams calibrado.

    Raises:
        CalibrationError: Alvos inconsistentes com a estrutura do modelo.
    """
    rows = cols = targets.reference_size
    e_rbl = 1.0
    rbl = rows * e_rbl

    read_total = rbl / targets.read_rbl_fraction
    non_rbl = read_total - rbl
    e_wl = targets.wordline_share * non_rbl / cols
    conduction_and_sense = (1 - targets.wordline_share) * non_rbl
    e_sa = targets.sense_share * conduction_and_sense
    e_cf = conduction_and_sense - e_sa

    cim_total = targets.cim_to_read_energy * read_total
    baseline_total = cim_total / (1 - targets.energy_decrease)
    e_compute_base = baseline_total - 2 * read_total
    if e_compute_base <= 0:
        raise CalibrationError(
            "Redução de energia exige cômputo near-memory negativo",
            target="energy_decrease",
            details={"e_compute_base": e_compute_base},
        )

    e_extra = cim_total - (rbl + 2 * cols * e_wl + 2 * e_cf + 3 * e_sa + e_compute_base)
    if e_extra < 0:
        raise CalibrationError(
            "Energia CiM alvo menor que a soma dos componentes fixos",
            target="cim_to_read_energy",
            details={"e_compute_adra_extra": e_extra},
        )

    g = targets.rbl_full_swing_factor
    delta_e = g * rbl * (1 - CIM_DISCHARGE_MULTIPLE * swing_ratio)
    if delta_e <= 0:
        raise CalibrationError(
            "Esquema 1 não economiza carga por operação (6·Δ/V_READ >= 1)",
            target="swing_ratio",
        )

    leak = targets.crossover_frequency_hz * delta_e
    pstar = targets.crossover_parallelism

    params = EnergyParams(
        e_rbl_per_row=e_rbl,
        e_wl_per_col=e_wl,
        e_sense_per_sa=e_sa,
        e_current_flow=e_cf,
        e_compute_base=e_compute_base,
        e_compute_adra_extra=e_extra,
        p_leak_per_col=(1 - targets.leakage_cell_share) * leak,
        p_leak_per_cell=targets.leakage_cell_share * leak / rows,
        e_pseudo_cim_per_col=pstar * delta_e / (1 - pstar),
        rbl_full_swing_factor=g,
        swing_ratio=swing_ratio,
    )

    residuals = constraint_residuals(params, targets)
    worst = max(residuals, key=lambda name: residuals[name])
    if residuals[worst] >= targets.max_residual:
        raise CalibrationError(
            f"Resíduo de {worst} = {residuals[worst]:.4f} excede {targets.max_residual}",
            target=worst,
            details=residuals,
        )

    logger.info(
        "Calibração concluída: resíduo máximo %.4f (%s)", residuals[worst], worst
    )
    return params


def constraint_residuals(params: EnergyParams, targets: CalibrationTargets) -> dict[str, float]:
    """
    Resíduo relativo de cada razão-alvo, avaliado pelo próprio modelo.

    Returns:
        Mapa nome do alvo → |obtido − alvo| / alvo.
    """
    geometry = reference_geometry(targets)
    scheme = SensingScheme.CURRENT
    read = energy_read(geometry, params, scheme)
    cim = energy_cim_adra(geometry, params, scheme)
    baseline = energy_baseline(geometry, params, scheme)

    obtained = {
        "read_rbl_fraction": read.rbl_fraction,
        "cim_rbl_fraction": cim.rbl_fraction,
        "cim_to_read_energy": cim.total / read.total,
        "energy_decrease": 1 - cim.total / baseline.total,
    }
    return {
        name: abs(value - getattr(targets, name)) / getattr(targets, name)
        for name, value in obtained.items()
    }


def calibrate_timing(
    targets: CalibrationTargets,
    base: TimingParams | None = None,
) -> TimingParams:
    """
    Resolve o tempo de cômputo que atinge o speedup-alvo por corrente.

    Com ciclo c na geometria de referência, speedup S = (2c + t)/(c + t),
    logo t = (2 − S)·c / (S − 1).
    """
    timing = base or TimingParams()
    cycle = cycle_time(reference_geometry(targets), SensingScheme.CURRENT, timing, 2)
    if cycle <= 0:
        raise CalibrationError("Ciclo de leitura nulo", target="speedup")
    t_compute = (2 - targets.speedup) * cycle / (targets.speedup - 1)
    return timing.model_copy(update={"t_compute": t_compute})


def resolve_energy(config: SimConfig) -> EnergyParams:
    """Parâmetros explícitos da configuração ou calibrados a partir de `[calibration]`."""
    if isinstance(config.energy, EnergyParams):
        return config.energy
    return calibrate(config.calibration, swing_ratio=config.sensing.delta / config.bias.v_read)


def resolve_timing(config: SimConfig) -> TimingParams:
    if isinstance(config.timing, TimingParams):
        return config.timing
    return calibrate_timing(config.calibration)
