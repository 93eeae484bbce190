"""
Pontos de cruzamento entre os esquemas de tensão 1 e 2.

- Frequência: o esquema 1 paga fuga de hold P_leak/f por operação; o
  esquema 2 paga a carga completa da RBL. Abaixo de f* o esquema 2 vence.
- Paralelismo: o esquema 1 recarrega as colunas meio-selecionadas. Abaixo
  de P* o esquema 2 vence. A fuga não entra nesta varredura.
"""

import numpy as np

from app.core.constants import CROSSOVER_POINTS_PER_SIDE
from app.core.errors import NoCrossoverError
from app.models.array import ArrayGeometry
from app.models.common import CrossoverStatus, SensingScheme
from app.models.energy import CrossoverPoint, CrossoverReport, CrossoverResult, EnergyParams
from app.services.array import selected_words
from app.services.energy.model import energy_cim_adra


def _dynamic_energy(
    geometry: ArrayGeometry, params: EnergyParams, scheme: SensingScheme, parallelism: float
) -> float:
    cim = energy_cim_adra(geometry, params, scheme, parallelism)
    return cim.total - cim.leakage


def scheme_energy_gap(
    geometry: ArrayGeometry, params: EnergyParams, parallelism: float = 1.0
) -> float:
    """E_s2 − E_s1 por operação, sem a fuga de hold."""
    return _dynamic_energy(geometry, params, SensingScheme.SCHEME2, parallelism) - _dynamic_energy(
        geometry, params, SensingScheme.SCHEME1, parallelism
    )


def crossover_frequency(
    params: EnergyParams, geometry: ArrayGeometry, parallelism: float = 1.0
) -> float:
    """
    Frequência f* onde E_s1 + P_leak/(f·P) = E_s2.

    Raises:
        NoCrossoverError: Sem fuga, ou esquema 2 não é mais caro por operação.
    """
    leak = params.leakage_power(geometry.rows) / parallelism
    gap = scheme_energy_gap(geometry, params, parallelism)
    if leak <= 0:
        raise NoCrossoverError("Fuga nula: esquema 1 vence em qualquer frequência", "frequency")
    if gap <= 0:
        raise NoCrossoverError("E_s2 <= E_s1: esquema 2 vence em qualquer frequência", "frequency")
    return leak / gap


def crossover_parallelism(params: EnergyParams, geometry: ArrayGeometry) -> float:
    """
    Paralelismo P* onde as energias dinâmicas dos esquemas 1 e 2 se igualam.

    Raises:
        NoCrossoverError: Sem recarga pseudo-CiM ou esquema 2 não é mais caro em P = 1.
    """
    gap = scheme_energy_gap(geometry, params, 1.0)
    pseudo = params.e_pseudo_cim_per_col
    if gap <= 0:
        raise NoCrossoverError("E_s2 <= E_s1 em P = 1: esquema 2 vence sempre", "parallelism")
    if pseudo <= 0:
        raise NoCrossoverError("Sem recarga pseudo-CiM: esquema 1 vence sempre", "parallelism")
    return pseudo / (gap + pseudo)


def _winner(scheme1: float, scheme2: float) -> str:
    if np.isclose(scheme1, scheme2, rtol=1e-12, atol=0.0):
        return "tie"
    return "scheme2" if scheme2 < scheme1 else "scheme1"


def frequency_curve(
    params: EnergyParams,
    geometry: ArrayGeometry,
    center_hz: float,
    parallelism: float = 1.0,
) -> list[CrossoverPoint]:
    """
    Energia por operação dos dois esquemas em função da frequência.

    Amostragem logarítmica: uma década de cada lado de `center_hz`.
    """
    n = CROSSOVER_POINTS_PER_SIDE
    exponents = np.concatenate([np.arange(-n, 0), np.arange(1, n + 1)]) / n
    frequencies = center_hz * np.power(10.0, exponents)

    dynamic1 = _dynamic_energy(geometry, params, SensingScheme.SCHEME1, parallelism)
    scheme2 = _dynamic_energy(geometry, params, SensingScheme.SCHEME2, parallelism)
    leak = params.leakage_power(geometry.rows) / parallelism

    points = []
    for f in frequencies:
        scheme1 = dynamic1 + leak / float(f)
        points.append(
            CrossoverPoint(
                sweep="frequency",
                x=float(f),
                scheme1=scheme1,
                scheme2=scheme2,
                winner=_winner(scheme1, scheme2),
            )
        )
    return points


def parallelism_curve(
    params: EnergyParams,
    geometry: ArrayGeometry,
    center: float,
) -> list[CrossoverPoint]:
    """Energia dinâmica por operação em função de P, 20 pontos de cada lado em (0, 1]."""
    n = CROSSOVER_POINTS_PER_SIDE
    steps = np.arange(1, n + 1)
    below = center * steps / (n + 1)
    above = center + (1.0 - center) * steps / n
    values = np.concatenate([below, above]) if center < 1.0 else below

    points = []
    for p in values:
        scheme1 = _dynamic_energy(geometry, params, SensingScheme.SCHEME1, float(p))
        scheme2 = _dynamic_energy(geometry, params, SensingScheme.SCHEME2, float(p))
        points.append(
            CrossoverPoint(
                sweep="parallelism",
                x=float(p),
                scheme1=scheme1,
                scheme2=scheme2,
                winner=_winner(scheme1, scheme2),
            )
        )
    return points


def crossover_report(
    params: EnergyParams,
    geometry: ArrayGeometry,
    parallelism: float = 1.0,
    fallback_frequency_hz: float = 25e6,
) -> CrossoverReport:
    """
    f*, P* e as curvas amostradas.

    Ausência de cruzamento é um status, não um erro: a curva é então
    amostrada em torno de `fallback_frequency_hz` e de P = 0.5.

    Raises:
        InvalidParamsError: P não seleciona um número inteiro de palavras.
    """
    selected_words(geometry, parallelism)

    try:
        f_star: float | None = crossover_frequency(params, geometry, parallelism)
        f_status = CrossoverStatus.FOUND
    except NoCrossoverError:
        f_star, f_status = None, CrossoverStatus.NO_CROSSOVER

    try:
        p_star: float | None = crossover_parallelism(params, geometry)
        p_status = CrossoverStatus.FOUND
    except NoCrossoverError:
        p_star, p_status = None, CrossoverStatus.NO_CROSSOVER

    return CrossoverReport(
        rows=geometry.rows,
        cols=geometry.cols,
        evaluated_parallelism=parallelism,
        frequency=CrossoverResult(
            status=f_status,
            value=f_star,
            points=frequency_curve(
                params, geometry, f_star or fallback_frequency_hz, parallelism
            ),
        ),
        parallelism=CrossoverResult(
            status=p_status,
            value=p_star,
            points=parallelism_curve(params, geometry, p_star if p_star is not None else 0.5),
        ),
    )
