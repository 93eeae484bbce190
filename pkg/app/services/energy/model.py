"""
Modelo analítico de energia e latência por operação.

Linear na geometria: termos por linha (RBL, descarga) e por coluna
(wordline). Energias por coluna selecionada, em unidades normalizadas.

## Regras por esquema

| Termo | Corrente | Esquema 1 | Esquema 2 |
|-------|----------|-----------|-----------|
| RBL leitura | R·e_rbl | 2·s·g·R·e_rbl | g·R·e_rbl |
| RBL CiM | R·e_rbl | 6·s·g·R·e_rbl + pseudo-CiM | g·R·e_rbl |
| Corrente DC | 1 (leitura) / 2 (CiM) células | 0 | 0 |
| Fuga de hold | 0 | P_leak / (f·P) | 0 |

s = Δ/V_READ, g = fator de excursão completa da RBL.
"""

import logging
from collections.abc import Iterable

from app.core.constants import CIM_DISCHARGE_MULTIPLE, READ_DISCHARGE_MULTIPLE
from app.core.errors import CalibrationError, InvalidParamsError
from app.models.array import ArrayGeometry
from app.models.common import AccessKind, SensingScheme
from app.models.energy import EnergyBreakdown, EnergyParams, ScenarioReport, TimingParams
from app.services.array import selected_words

logger = logging.getLogger(__name__)

NS = 1e-9


def _require_calibrated(params: EnergyParams) -> None:
    if not params.is_calibrated:
        raise CalibrationError(
            "Parâmetros de energia não calibrados (e_rbl_per_row = 0)",
            target="energy",
        )


def _require_parallelism(parallelism: float) -> None:
    if not 0 < parallelism <= 1:
        raise InvalidParamsError("P deve estar em (0, 1]", field="parallelism")


def _rbl_read(geometry: ArrayGeometry, params: EnergyParams, scheme: SensingScheme) -> float:
    full = geometry.rows * params.e_rbl_per_row
    if scheme is SensingScheme.SCHEME1:
        return READ_DISCHARGE_MULTIPLE * params.swing_ratio * params.rbl_full_swing_factor * full
    if scheme is SensingScheme.SCHEME2:
        return params.rbl_full_swing_factor * full
    return full


def hold_leakage(
    geometry: ArrayGeometry,
    params: EnergyParams,
    scheme: SensingScheme,
    parallelism: float,
    cim_frequency_hz: float,
) -> float:
    """Energia de fuga do esquema 1 por operação, atribuída às colunas selecionadas."""
    if scheme is not SensingScheme.SCHEME1:
        return 0.0
    if cim_frequency_hz <= 0:
        raise InvalidParamsError("cim_frequency_hz > 0 violado", field="cim_frequency_hz")
    return params.leakage_power(geometry.rows) / (cim_frequency_hz * parallelism)


def energy_read(
    geometry: ArrayGeometry,
    params: EnergyParams,
    scheme: SensingScheme,
    parallelism: float = 1.0,
    cim_frequency_hz: float = 25e6,
) -> EnergyBreakdown:
    """
    Energia de uma leitura padrão.

    Raises:
        CalibrationError: Parâmetros não calibrados.
    """
    _require_calibrated(params)
    _require_parallelism(parallelism)
    return EnergyBreakdown(
        rbl=_rbl_read(geometry, params, scheme),
        current_flow_sensing=params.e_current_flow if scheme is SensingScheme.CURRENT else 0.0,
        wordline=geometry.cols * params.e_wl_per_col,
        peripheral=params.e_sense_per_sa,
        leakage=hold_leakage(geometry, params, scheme, parallelism, cim_frequency_hz),
    )


def energy_cim_adra(
    geometry: ArrayGeometry,
    params: EnergyParams,
    scheme: SensingScheme,
    parallelism: float = 1.0,
    cim_frequency_hz: float = 25e6,
) -> EnergyBreakdown:
    """
    Energia de uma operação ADRA CiM (duas wordlines, três SAs e cômputo).

    No esquema 1 a RBL descarrega 6Δ em vez de 2Δ e as (1 − P) colunas
    meio-selecionadas somam a recarga pseudo-CiM.

    Raises:
        CalibrationError: Parâmetros não calibrados.
        InvalidParamsError: P fora de (0, 1].
    """
    _require_calibrated(params)
    _require_parallelism(parallelism)

    rbl = _rbl_read(geometry, params, scheme)
    if scheme is SensingScheme.SCHEME1:
        rbl *= CIM_DISCHARGE_MULTIPLE / READ_DISCHARGE_MULTIPLE
        rbl += (1 - parallelism) / parallelism * params.e_pseudo_cim_per_col

    return EnergyBreakdown(
        rbl=rbl,
        current_flow_sensing=(
            2 * params.e_current_flow if scheme is SensingScheme.CURRENT else 0.0
        ),
        wordline=2 * geometry.cols * params.e_wl_per_col,
        peripheral=(
            3 * params.e_sense_per_sa + params.e_compute_base + params.e_compute_adra_extra
        ),
        leakage=hold_leakage(geometry, params, scheme, parallelism, cim_frequency_hz),
    )


def energy_baseline(
    geometry: ArrayGeometry,
    params: EnergyParams,
    scheme: SensingScheme,
    parallelism: float = 1.0,
    cim_frequency_hz: float = 25e6,
) -> EnergyBreakdown:
    """
    Energia do baseline near-memory: duas leituras e cômputo periférico.

    Componentes iguais a 2× a leitura, exceto o periférico.
    """
    read = energy_read(geometry, params, scheme, parallelism, cim_frequency_hz)
    return EnergyBreakdown(
        rbl=2 * read.rbl,
        current_flow_sensing=2 * read.current_flow_sensing,
        wordline=2 * read.wordline,
        peripheral=2 * params.e_sense_per_sa + params.e_compute_base,
        leakage=read.leakage,
    )


def cycle_time(
    geometry: ArrayGeometry,
    scheme: SensingScheme,
    timing: TimingParams,
    discharge_multiple: int,
) -> float:
    """Um ciclo de acesso ao array (ns)."""
    t = timing.t_wl_per_col * geometry.cols + timing.t_sense
    if scheme is SensingScheme.CURRENT:
        t += timing.t_settle_per_row * geometry.rows
    else:
        t += discharge_multiple * timing.t_delta_per_row * geometry.rows
    if scheme is SensingScheme.SCHEME2:
        t += timing.t_precharge_per_row * geometry.rows
    return t


def latency(
    kind: AccessKind,
    geometry: ArrayGeometry,
    scheme: SensingScheme,
    timing: TimingParams,
) -> float:
    """
    Latência de um acesso em segundos.

    - leitura: um ciclo com descarga de 2Δ
    - CiM: um ciclo com descarga de 6Δ (ou a mesma janela de corrente) + cômputo
    - baseline: duas leituras + cômputo
    """
    read = cycle_time(geometry, scheme, timing, READ_DISCHARGE_MULTIPLE)
    if kind is AccessKind.READ:
        return read * NS
    if kind is AccessKind.CIM:
        cim = cycle_time(geometry, scheme, timing, CIM_DISCHARGE_MULTIPLE)
        return (cim + timing.t_compute) * NS
    return (2 * read + timing.t_compute) * NS


def edp_report(
    geometry: ArrayGeometry,
    scheme: SensingScheme,
    params: EnergyParams,
    timing: TimingParams,
    parallelism: float = 1.0,
    cim_frequency_hz: float = 25e6,
) -> ScenarioReport:
    """
    Compara ADRA CiM com o baseline em energia, atraso e EDP.

    Raises:
        CalibrationError: Parâmetros não calibrados.
        InvalidParamsError: P não seleciona um número inteiro de palavras.
    """
    selected_words(geometry, parallelism)
    read = energy_read(geometry, params, scheme, parallelism, cim_frequency_hz)
    cim = energy_cim_adra(geometry, params, scheme, parallelism, cim_frequency_hz)
    baseline = energy_baseline(geometry, params, scheme, parallelism, cim_frequency_hz)

    t_read = latency(AccessKind.READ, geometry, scheme, timing)
    t_cim = latency(AccessKind.CIM, geometry, scheme, timing)
    t_baseline = latency(AccessKind.BASELINE, geometry, scheme, timing)

    energy_ratio = cim.total / baseline.total
    delay_ratio = t_cim / t_baseline

    report = ScenarioReport(
        scheme=scheme,
        rows=geometry.rows,
        cols=geometry.cols,
        word_width=geometry.word_width,
        parallelism=parallelism,
        speedup=1.0 / delay_ratio,
        energy_decrease=100.0 * (1.0 - energy_ratio),
        edp_decrease=100.0 * (1.0 - energy_ratio * delay_ratio),
        latency_read_s=t_read,
        latency_cim_s=t_cim,
        latency_baseline_s=t_baseline,
        breakdown_read=read,
        breakdown_cim=cim,
        breakdown_baseline=baseline,
    )
    logger.debug(
        "%s %dx%d: speedup=%.4f energia=%.2f%% edp=%.2f%%",
        scheme.value,
        geometry.rows,
        geometry.cols,
        report.speedup,
        report.energy_decrease,
        report.edp_decrease,
    )
    return report


def sweep(
    sizes: Iterable[int],
    scheme: SensingScheme,
    base_geometry: ArrayGeometry,
    params: EnergyParams,
    timing: TimingParams,
    parallelism: float = 1.0,
    cim_frequency_hz: float = 25e6,
) -> list[ScenarioReport]:
    """`edp_report` sobre arrays quadrados, em ordem crescente de tamanho."""
    return [
        edp_report(
            base_geometry.resized(size), scheme, params, timing, parallelism, cim_frequency_hz
        )
        for size in sorted(sizes)
    ]


def trend_violations(reports: list[ScenarioReport], tolerance: float = 1e-12) -> list[str]:
    """
    Invariantes de uma varredura de um esquema.

    Speedup e redução de energia não decrescem com o tamanho (corrente e
    esquema 2) e a identidade do EDP vale em todo relatório.
    """
    violations = [
        f"{r.scheme.value} {r.rows}x{r.cols}: identidade EDP (resíduo {r.edp_identity_residual:.3e})"
        for r in reports
        if r.edp_identity_residual > tolerance
    ]

    ordered = sorted(reports, key=lambda r: r.rows)
    for previous, current in zip(ordered, ordered[1:], strict=False):
        if current.scheme is SensingScheme.SCHEME1:
            continue
        if current.speedup < previous.speedup:
            violations.append(
                f"{current.scheme.value}: speedup decresce de {previous.rows} para {current.rows}"
            )
        if current.energy_decrease < previous.energy_decrease:
            violations.append(
                f"{current.scheme.value}: redução de energia decresce de "
                f"{previous.rows} para {current.rows}"
            )
    return violations
