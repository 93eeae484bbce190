"""
Testes para os amplificadores de sensoriamento e a recuperação de A.
"""

import numpy as np
import pytest

from app.core.constants import REACHABLE_TRIPLES
from app.core.errors import InsufficientMarginError, InvalidParamsError, UnreachableTripleError
from app.models.array import BiasPlan
from app.models.common import ActivationMode, SensingScheme
from app.models.device import DeviceParams
from app.models.sensing import SenseOutcome, SensingConfig, VoltageSenseParams
from app.services.array import ADRA_LEVEL_ORDER, current_levels
from app.services.sensing import (
    CurrentSenseAmplifier,
    SenseAmplifierProtocol,
    VoltageSenseAmplifier,
    build_ladder,
    check_voltage_window,
    full_swing_sense_time,
    get_sense_amplifier,
    ladder_from_levels,
    recover_a,
    required_discharge,
    sense_current,
    sense_voltage,
)

UNREACHABLE = [
    (or_bit, and_bit, b_bit)
    for or_bit in (0, 1)
    for and_bit in (0, 1)
    for b_bit in (0, 1)
    if (or_bit, and_bit, b_bit) not in REACHABLE_TRIPLES.values()
]


class TestReferenceLadder:
    """Testes de build_ladder e ladder_from_levels."""

    def test_default_ladder_midpoints(self, device: DeviceParams, bias: BiasPlan) -> None:
        ladder = build_ladder(device, bias, margin=1e-6)

        assert ladder.i_ref_or * 1e6 == pytest.approx(3.5445)
        assert ladder.i_ref_b * 1e6 == pytest.approx(8.5445)
        assert ladder.i_ref_and * 1e6 == pytest.approx(13.5445)

    def test_ladder_interleaves_levels(self, device: DeviceParams, bias: BiasPlan) -> None:
        levels = current_levels(device, bias)
        ladder = build_ladder(device, bias, margin=1e-6)

        assert levels[(0, 0)] < ladder.i_ref_or < levels[(1, 0)]
        assert levels[(1, 0)] < ladder.i_ref_b < levels[(0, 1)]
        assert levels[(0, 1)] < ladder.i_ref_and < levels[(1, 1)]

    def test_symmetric_mode_rejected(self, device: DeviceParams, bias: BiasPlan) -> None:
        with pytest.raises(InsufficientMarginError) as exc_info:
            build_ladder(device, bias, margin=1e-6, mode=ActivationMode.SYMMETRIC_CIM)
        assert exc_info.value.pair == ("I(1,0)", "I(0,1)")

    def test_margin_larger_than_gap_rejected(self, device: DeviceParams, bias: BiasPlan) -> None:
        """Menor distância é 3.111 µA; margem de 2 µA exige > 4 µA."""
        with pytest.raises(InsufficientMarginError) as exc_info:
            build_ladder(device, bias, margin=2e-6)
        assert exc_info.value.code == "INSUFFICIENT_MARGIN"
        assert exc_info.value.pair == ("I(1,0)", "I(0,1)")

    def test_ladder_from_explicit_levels(self) -> None:
        levels = {(0, 0): 0.0, (1, 0): 10e-6, (0, 1): 20e-6, (1, 1): 30e-6}
        ladder = ladder_from_levels(levels, margin=1e-6)
        assert (ladder.i_ref_or, ladder.i_ref_b, ladder.i_ref_and) == pytest.approx(
            (5e-6, 15e-6, 25e-6)
        )


class TestRecoverA:
    """Testes de recover_a (porta OAI)."""

    @pytest.mark.parametrize(("vector", "triple"), list(REACHABLE_TRIPLES.items()))
    def test_recovers_a_for_every_vector(
        self, vector: tuple[int, int], triple: tuple[int, int, int]
    ) -> None:
        assert recover_a(*triple) == vector[0]

    @pytest.mark.parametrize("triple", UNREACHABLE)
    def test_unreachable_triples_rejected(self, triple: tuple[int, int, int]) -> None:
        with pytest.raises(UnreachableTripleError) as exc_info:
            recover_a(*triple)
        assert exc_info.value.code == "UNREACHABLE_TRIPLE"

    def test_four_unreachable_triples(self) -> None:
        assert len(UNREACHABLE) == 4


class TestCurrentSensing:
    """Testes do sensoriamento por corrente."""

    @pytest.mark.parametrize("vector", ADRA_LEVEL_ORDER)
    def test_two_bit_read_per_vector(
        self, device: DeviceParams, bias: BiasPlan, vector: tuple[int, int]
    ) -> None:
        levels = current_levels(device, bias)
        ladder = build_ladder(device, bias, margin=1e-6)

        outcome = sense_current(levels[vector], ladder)

        assert outcome.triple == REACHABLE_TRIPLES[vector]
        assert recover_a(*outcome.triple) == vector[0]
        assert outcome.b_bit == vector[1]

    def test_amplifier_satisfies_protocol(self, device: DeviceParams, bias: BiasPlan) -> None:
        amplifier = CurrentSenseAmplifier(build_ladder(device, bias, margin=1e-6))
        assert isinstance(amplifier, SenseAmplifierProtocol)
        assert amplifier.scheme is SensingScheme.CURRENT


class TestVoltageSensing:
    """Testes do sensoriamento por tensão (esquemas 1 e 2)."""

    @pytest.fixture
    def params(self) -> VoltageSenseParams:
        return VoltageSenseParams(delta=0.05, cbl=1e-12)

    def test_full_swing_on_highest_level(
        self, device: DeviceParams, bias: BiasPlan, params: VoltageSenseParams
    ) -> None:
        levels = current_levels(device, bias)
        t_sense = full_swing_sense_time(levels, params)
        assert levels[(1, 1)] * t_sense / params.cbl == pytest.approx(6 * params.delta)

    def test_discharges_in_delta_units(
        self, device: DeviceParams, bias: BiasPlan, params: VoltageSenseParams
    ) -> None:
        levels = current_levels(device, bias)
        discharges = check_voltage_window(
            levels, params, full_swing_sense_time(levels, params), bias.v_read
        )
        assert discharges == pytest.approx([0.0353, 2.468, 3.567, 6.0], abs=1e-3)

    @pytest.mark.parametrize("vector", ADRA_LEVEL_ORDER)
    def test_two_bit_read_per_vector(
        self,
        device: DeviceParams,
        bias: BiasPlan,
        params: VoltageSenseParams,
        vector: tuple[int, int],
    ) -> None:
        levels = current_levels(device, bias)
        t_sense = full_swing_sense_time(levels, params)

        outcome = sense_voltage(levels[vector], params, t_sense, bias.v_read)

        assert outcome.triple == REACHABLE_TRIPLES[vector]
        assert recover_a(*outcome.triple) == vector[0]

    def test_discharge_clamped_at_v_read(
        self, params: VoltageSenseParams
    ) -> None:
        outcome = sense_voltage(1.0, params, t_sense=1.0, v_read=1.0)
        assert outcome.triple == (1, 1, 1)

    def test_delta_too_large_for_v_read(self) -> None:
        params = VoltageSenseParams(delta=0.2, cbl=1e-12)
        with pytest.raises(InvalidParamsError, match="6·delta"):
            sense_voltage(1e-6, params, t_sense=1e-9, v_read=1.0)

    def test_short_window_rejected(
        self, device: DeviceParams, bias: BiasPlan, params: VoltageSenseParams
    ) -> None:
        """Janela curta demais: (1,0) não alcança o limiar Δ."""
        levels = current_levels(device, bias)
        t_sense = full_swing_sense_time(levels, params) / 4
        with pytest.raises(InsufficientMarginError):
            VoltageSenseAmplifier(params, levels, bias.v_read, t_sense=t_sense)

    def test_amplifier_reports_scheme(
        self, device: DeviceParams, bias: BiasPlan
    ) -> None:
        params = VoltageSenseParams(delta=0.05, cbl=1e-12, scheme=SensingScheme.SCHEME1)
        amplifier = VoltageSenseAmplifier(params, current_levels(device, bias), bias.v_read)
        assert amplifier.scheme is SensingScheme.SCHEME1
        assert min(
            high - low
            for low, high in zip(
                amplifier.discharges_delta, amplifier.discharges_delta[1:], strict=False
            )
        ) == pytest.approx(1.099, abs=1e-3)


class TestThresholdNesting:
    """AND ⇒ B ⇒ OR para qualquer corrente, não só nos quatro níveis."""

    CURRENTS = np.linspace(0.0, 20e-6, 401)

    @staticmethod
    def _assert_nested(outcome: SenseOutcome) -> None:
        assert not outcome.and_bit or outcome.b_bit
        assert not outcome.b_bit or outcome.or_bit

    def test_current_thresholds_nested(self, device: DeviceParams, bias: BiasPlan) -> None:
        ladder = build_ladder(device, bias, margin=1e-6)
        for i_sl in self.CURRENTS:
            self._assert_nested(sense_current(float(i_sl), ladder))

    @pytest.mark.parametrize("scheme", [SensingScheme.SCHEME1, SensingScheme.SCHEME2])
    def test_voltage_thresholds_nested(
        self, device: DeviceParams, bias: BiasPlan, scheme: SensingScheme
    ) -> None:
        params = VoltageSenseParams(delta=0.05, cbl=1e-12, scheme=scheme)
        t_sense = full_swing_sense_time(current_levels(device, bias), params)
        for i_sl in self.CURRENTS:
            self._assert_nested(sense_voltage(float(i_sl), params, t_sense, bias.v_read))

    def test_sweep_covers_all_reachable_triples(
        self, device: DeviceParams, bias: BiasPlan
    ) -> None:
        ladder = build_ladder(device, bias, margin=1e-6)
        triples = {sense_current(float(i_sl), ladder).triple for i_sl in self.CURRENTS}
        assert triples == set(REACHABLE_TRIPLES.values())


class TestRequiredDischarge:
    """Testes de required_discharge."""

    def test_standard_read_two_delta(self) -> None:
        assert required_discharge(ActivationMode.STANDARD_READ) == 2

    def test_adra_six_delta(self) -> None:
        assert required_discharge(ActivationMode.ADRA_CIM) == 6

    def test_symmetric_undefined(self) -> None:
        with pytest.raises(InvalidParamsError):
            required_discharge(ActivationMode.SYMMETRIC_CIM)


class TestSenseAmplifierFactory:
    """Testes de get_sense_amplifier."""

    def test_current_by_default(
        self, device: DeviceParams, bias: BiasPlan, sensing: SensingConfig
    ) -> None:
        amplifier = get_sense_amplifier(device, bias, sensing)
        assert isinstance(amplifier, CurrentSenseAmplifier)

    @pytest.mark.parametrize("scheme", [SensingScheme.SCHEME1, SensingScheme.SCHEME2])
    def test_voltage_schemes(
        self,
        device: DeviceParams,
        bias: BiasPlan,
        sensing: SensingConfig,
        scheme: SensingScheme,
    ) -> None:
        amplifier = get_sense_amplifier(device, bias, sensing, scheme)
        assert isinstance(amplifier, VoltageSenseAmplifier)
        assert amplifier.scheme is scheme

    def test_degenerate_bias_rejected_for_voltage_too(
        self, device: DeviceParams, degenerate_bias: BiasPlan, sensing: SensingConfig
    ) -> None:
        with pytest.raises(InsufficientMarginError):
            get_sense_amplifier(device, degenerate_bias, sensing, SensingScheme.SCHEME2)

    def test_outcome_with_a(self) -> None:
        outcome = SenseOutcome(1, 0, 0).with_a(1)
        assert outcome.a_bit == 1
        assert outcome.is_reachable
