"""
Testes para o validador de margens.

Verifica a geração de warnings para configurações próximas dos limites.
"""

import pytest

from app.models.array import BiasPlan
from app.models.common import SensingScheme, WarningLevel
from app.models.energy import EnergyParams
from app.models.sensing import SensingConfig
from app.models.simulation import SimConfig, SimulationWarning
from app.services.validators import MarginValidator


def _codes(warnings: list[SimulationWarning]) -> list[str]:
    return [w.code for w in warnings]


class TestMarginValidatorCurrent:
    """Testes das margens de corrente."""

    @pytest.fixture
    def validator(self) -> MarginValidator:
        """Instância do validador."""
        return MarginValidator()

    def test_defaults_no_warning(
        self, validator: MarginValidator, default_config: SimConfig
    ) -> None:
        """Configuração padrão: 3.111 µA > 1.5 × 2 µA."""
        assert validator.validate(default_config) == []

    def test_narrow_margin_warning(self, validator: MarginValidator) -> None:
        """3.111 µA fica abaixo de 1.5 × 2.4 µA."""
        config = SimConfig(sensing=SensingConfig(current_margin=1.2e-6))

        warnings = validator.validate(config)

        assert _codes(warnings) == ["CURRENT_MARGIN_LOW"]
        assert warnings[0].level == WarningLevel.MEDIUM
        assert warnings[0].value == "3.111"

    def test_insufficient_margin_warning(self, validator: MarginValidator) -> None:
        config = SimConfig(sensing=SensingConfig(current_margin=2e-6))

        warnings = validator.validate(config)

        assert _codes(warnings) == ["CURRENT_MARGIN_INSUFFICIENT"]
        assert warnings[0].level == WarningLevel.HIGH
        assert warnings[0].field == "sensing.current_margin"

    def test_validator_resets_between_calls(self, validator: MarginValidator) -> None:
        validator.validate(SimConfig(sensing=SensingConfig(current_margin=2e-6)))
        assert validator.validate(SimConfig()) == []


class TestMarginValidatorVoltage:
    """Testes do espaçamento de descargas nos esquemas de tensão."""

    @pytest.mark.parametrize("scheme", [SensingScheme.SCHEME1, SensingScheme.SCHEME2])
    def test_default_spacing_ok(self, scheme: SensingScheme) -> None:
        config = SimConfig(sensing=SensingConfig(scheme=scheme))
        assert "VOLTAGE_SPACING_LOW" not in _codes(MarginValidator().validate(config))

    def test_degenerate_bias_spacing_warning(self, degenerate_bias: BiasPlan) -> None:
        """Sem assimetria, I(1,0) = I(0,1) e as descargas colidem."""
        config = SimConfig(sensing=SensingConfig(scheme=SensingScheme.SCHEME2)).model_copy(
            update={"bias": degenerate_bias}
        )

        codes = _codes(MarginValidator().validate(config))

        assert "VOLTAGE_SPACING_LOW" in codes
        assert "CURRENT_MARGIN_INSUFFICIENT" in codes


class TestMarginValidatorConfiguration:
    """Testes de polarização, paralelismo e frequência."""

    def test_gread_near_set(self) -> None:
        config = SimConfig(bias=BiasPlan(v_set=1.2))

        warnings = MarginValidator().validate(config)

        assert _codes(warnings) == ["GREAD_NEAR_SET"]
        assert warnings[0].field == "bias.v_gread2"

    def test_parallelism_not_whole_words(self) -> None:
        """0.3 × 32 palavras = 9.6."""
        warnings = MarginValidator().validate(SimConfig(parallelism=0.3))

        assert _codes(warnings) == ["PARALLELISM_NOT_WHOLE_WORDS"]
        assert warnings[0].value == "0.3"

    def test_half_parallelism_ok(self) -> None:
        assert MarginValidator().validate(SimConfig(parallelism=0.5)) == []

    def test_scheme1_below_crossover(self, energy_params: EnergyParams) -> None:
        config = SimConfig(
            sensing=SensingConfig(scheme=SensingScheme.SCHEME1), cim_frequency_hz=1e6
        )

        warnings = MarginValidator().validate(config, energy_params)

        assert _codes(warnings) == ["SCHEME1_BELOW_CROSSOVER"]
        assert warnings[0].level == WarningLevel.LOW

    def test_scheme1_above_crossover(self, energy_params: EnergyParams) -> None:
        config = SimConfig(sensing=SensingConfig(scheme=SensingScheme.SCHEME1))
        assert MarginValidator().validate(config, energy_params) == []

    def test_frequency_check_needs_energy(self) -> None:
        config = SimConfig(
            sensing=SensingConfig(scheme=SensingScheme.SCHEME1), cim_frequency_hz=1e6
        )
        assert MarginValidator().validate(config) == []

    def test_scheme_override_checked(
        self, default_config: SimConfig, energy_params: EnergyParams
    ) -> None:
        """O esquema efetivamente simulado vence o da configuração."""
        config = default_config.model_copy(update={"cim_frequency_hz": 1e6})

        assert MarginValidator().validate(config, energy_params) == []
        warnings = MarginValidator().validate(config, energy_params, SensingScheme.SCHEME1)
        assert _codes(warnings) == ["SCHEME1_BELOW_CROSSOVER"]
