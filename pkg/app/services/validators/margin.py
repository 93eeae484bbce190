"""
Validador de margens de operação.

Gera warnings não-bloqueantes para configurações próximas dos limites
de sensoriamento, de escrita e de eficiência energética.
"""

import numpy as np

from app.core.errors import AdraError
from app.models.common import SensingScheme, WarningLevel
from app.models.energy import EnergyParams
from app.models.sensing import VoltageSenseParams
from app.models.simulation import SimConfig, SimulationWarning
from app.services.array import current_levels, level_gaps
from app.services.energy.crossover import crossover_frequency
from app.services.sensing.voltage import check_voltage_window, full_swing_sense_time

# Fração de V_SET acima da qual V_GREAD2 é considerada próxima da escrita
GREAD_NEAR_SET_RATIO = 0.8
# Folga mínima sobre 2·margem antes de alertar
MARGIN_HEADROOM = 1.5


class MarginValidator:
    """
    Validador de margens para configurações de simulação.

    Todas as validações são determinísticas e nunca levantam exceção:
    falhas viram warnings de nível HIGH.
    """

    def __init__(self) -> None:
        """Inicializa o validador."""
        self._warnings: list[SimulationWarning] = []

    def validate(
        self,
        config: SimConfig,
        energy: EnergyParams | None = None,
        scheme: SensingScheme | None = None,
    ) -> list[SimulationWarning]:
        """
        Executa todas as validações.

        Args:
            config: Configuração a validar.
            energy: Parâmetros de energia resolvidos (habilita o alerta de cruzamento).
            scheme: Esquema efetivamente simulado (padrão: o da configuração).

        Returns:
            Lista de warnings gerados.
        """
        self._warnings = []
        scheme = scheme or config.sensing.scheme

        self._validate_current_margin(config)
        self._validate_voltage_spacing(config, scheme)
        self._validate_gread_near_set(config)
        self._validate_parallelism(config)
        if energy is not None:
            self._validate_scheme1_frequency(config, energy, scheme)

        return self._warnings

    def _add_warning(
        self,
        code: str,
        level: WarningLevel,
        message: str,
        field: str | None = None,
        value: str | None = None,
    ) -> None:
        """Adiciona um warning à lista."""
        self._warnings.append(
            SimulationWarning(code=code, level=level, message=message, field=field, value=value)
        )

    def _validate_current_margin(self, config: SimConfig) -> None:
        """Menor distância entre níveis ADRA contra a margem de corrente."""
        gaps = level_gaps(current_levels(config.device, config.bias))
        smallest = min(gaps)
        required = 2 * config.sensing.current_margin

        if smallest <= required:
            self._add_warning(
                code="CURRENT_MARGIN_INSUFFICIENT",
                level=WarningLevel.HIGH,
                message=(
                    f"Menor distância entre níveis ({smallest * 1e6:.3f} µA) não supera "
                    f"2× a margem ({required * 1e6:.3f} µA)"
                ),
                field="sensing.current_margin",
                value=f"{smallest * 1e6:.3f}",
            )
        elif smallest < MARGIN_HEADROOM * required:
            self._add_warning(
                code="CURRENT_MARGIN_LOW",
                level=WarningLevel.MEDIUM,
                message=f"Distância mínima entre níveis estreita: {smallest * 1e6:.3f} µA",
                field="bias.v_gread1",
                value=f"{smallest * 1e6:.3f}",
            )

    def _validate_voltage_spacing(self, config: SimConfig, scheme: SensingScheme) -> None:
        """Espaçamento das descargas em unidades de Δ (esquemas de tensão)."""
        if not scheme.is_voltage:
            return

        params = VoltageSenseParams(
            delta=config.sensing.delta,
            cbl=config.sensing.cbl,
            scheme=scheme,
        )
        levels = current_levels(config.device, config.bias)
        try:
            check_voltage_window(
                levels, params, full_swing_sense_time(levels, params), config.bias.v_read
            )
        except AdraError as exc:
            self._add_warning(
                code="VOLTAGE_SPACING_LOW",
                level=WarningLevel.HIGH,
                message=exc.message,
                field="sensing.delta",
                value=f"{config.sensing.delta:g}",
            )

    def _validate_gread_near_set(self, config: SimConfig) -> None:
        ratio = config.bias.v_gread2 / config.bias.v_set
        if ratio > GREAD_NEAR_SET_RATIO:
            self._add_warning(
                code="GREAD_NEAR_SET",
                level=WarningLevel.MEDIUM,
                message=(
                    f"V_GREAD2 = {config.bias.v_gread2:g} V a {ratio:.0%} de V_SET: "
                    "risco de perturbar a polarização"
                ),
                field="bias.v_gread2",
                value=f"{config.bias.v_gread2:g}",
            )

    def _validate_parallelism(self, config: SimConfig) -> None:
        words = config.parallelism * config.geometry.effective_words_per_row
        if not np.isclose(words, round(words), rtol=0, atol=1e-9) or round(words) < 1:
            self._add_warning(
                code="PARALLELISM_NOT_WHOLE_WORDS",
                level=WarningLevel.HIGH,
                message=f"P · palavras por linha = {words:g} não é inteiro",
                field="parallelism",
                value=f"{config.parallelism:g}",
            )

    def _validate_scheme1_frequency(
        self, config: SimConfig, energy: EnergyParams, scheme: SensingScheme
    ) -> None:
        """Esquema 1 abaixo de f* gasta mais que o esquema 2."""
        if scheme is not SensingScheme.SCHEME1:
            return
        try:
            f_star = crossover_frequency(energy, config.geometry, config.parallelism)
        except AdraError:
            return
        if config.cim_frequency_hz < f_star:
            self._add_warning(
                code="SCHEME1_BELOW_CROSSOVER",
                level=WarningLevel.LOW,
                message=(
                    f"Frequência CiM {config.cim_frequency_hz:.3g} Hz abaixo de "
                    f"f* = {f_star:.3g} Hz: o esquema 2 seria mais eficiente"
                ),
                field="cim_frequency_hz",
                value=f"{config.cim_frequency_hz:g}",
            )
