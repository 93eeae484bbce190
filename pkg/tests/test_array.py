"""
Testes para o array 1T-FeFET e as correntes de sense line.
"""

import pytest
from pydantic import ValidationError

from app.core.errors import InvalidParamsError, OperandError
from app.models.array import ArrayGeometry, BiasPlan, OperandLayout
from app.models.common import ActivationMode, BitState
from app.models.device import DeviceParams
from app.services.array import (
    ADRA_LEVEL_ORDER,
    MemoryArray,
    current_levels,
    distinct_levels,
    level_gaps,
    selected_words,
)


class TestGeometry:
    """Testes de ArrayGeometry, BiasPlan e OperandLayout."""

    def test_default_geometry(self) -> None:
        geometry = ArrayGeometry()
        assert (geometry.rows, geometry.cols, geometry.word_width) == (1024, 1024, 32)
        assert geometry.effective_words_per_row == 32

    def test_word_wider_than_row_rejected(self) -> None:
        with pytest.raises(ValidationError, match="word_width <= cols"):
            ArrayGeometry(rows=4, cols=8, word_width=16)

    def test_explicit_words_per_row_must_fit(self) -> None:
        with pytest.raises(ValidationError):
            ArrayGeometry(rows=4, cols=8, word_width=4, words_per_row=3)

    def test_resized_keeps_word_width(self) -> None:
        resized = ArrayGeometry().resized(256)
        assert (resized.rows, resized.cols, resized.word_width) == (256, 256, 32)

    def test_gread_asymmetry_required(self) -> None:
        with pytest.raises(ValidationError, match="v_gread2 > v_gread1"):
            BiasPlan(v_gread1=1.2, v_gread2=1.0)

    def test_gread2_below_set(self) -> None:
        with pytest.raises(ValidationError, match="v_gread2 < v_set"):
            BiasPlan(v_gread2=4.0)

    def test_operand_rows_distinct(self) -> None:
        with pytest.raises(ValidationError):
            OperandLayout(row_a=3, row_b=3)


class TestMemoryArray:
    """Testes de escrita, leitura e endereçamento."""

    def test_new_array_is_all_hrs(self, small_geometry: ArrayGeometry) -> None:
        array = MemoryArray(small_geometry)
        assert array.state(0, 0) is BitState.HRS
        assert array.read_row(3) == [0] * 8

    def test_write_then_read_word(self, small_geometry: ArrayGeometry) -> None:
        array = MemoryArray(small_geometry)
        array.write_word(2, 1, [1, 0, 1, 1])

        assert array.read_word(2, 1) == [1, 0, 1, 1]
        assert array.read_word(2, 0) == [0, 0, 0, 0]
        assert array.state(2, 4) is BitState.LRS

    def test_write_does_not_touch_other_rows(self, small_geometry: ArrayGeometry) -> None:
        array = MemoryArray(small_geometry)
        array.write_word(0, 0, [1, 1, 1, 1])
        assert array.read_row(1) == [0] * 8

    def test_wrong_word_length_rejected(self, small_geometry: ArrayGeometry) -> None:
        with pytest.raises(OperandError):
            MemoryArray(small_geometry).write_word(0, 0, [1, 0])

    @pytest.mark.parametrize(("row", "word_index"), [(4, 0), (-1, 0), (0, 2)])
    def test_out_of_range_address_rejected(
        self, small_geometry: ArrayGeometry, row: int, word_index: int
    ) -> None:
        with pytest.raises(OperandError):
            MemoryArray(small_geometry).write_word(row, word_index, [0, 0, 0, 0])

    def test_text_grid_round_trip(self) -> None:
        text = "0110\n1001\n"
        array = MemoryArray.from_text(text, word_width=2)
        assert array.to_text() == text
        assert array.words_per_row == 2

    def test_ragged_text_grid_rejected(self) -> None:
        with pytest.raises(InvalidParamsError):
            MemoryArray.from_text("01\n011\n", word_width=1)

    def test_scratch_array_shape(self) -> None:
        array = MemoryArray.scratch(5)
        assert (array.rows, array.cols, array.word_width) == (2, 5, 5)


class TestColumnCurrent:
    """Testes de column_current e da contabilidade de acessos."""

    def test_adra_superposition(
        self, small_geometry: ArrayGeometry, device: DeviceParams, bias: BiasPlan
    ) -> None:
        """Colunas com (A, B) = (0,0), (1,0), (0,1), (1,1)."""
        array = MemoryArray(small_geometry)
        array.write_word(0, 0, [0, 1, 0, 1]).write_word(1, 0, [0, 0, 1, 1])

        currents = array.column_current(
            device, bias, 0, 1, ActivationMode.ADRA_CIM, columns=range(0, 4)
        )

        assert currents * 1e6 == pytest.approx([0.10, 6.989, 10.10, 16.989])

    def test_single_activation_counted(
        self, small_geometry: ArrayGeometry, device: DeviceParams, bias: BiasPlan
    ) -> None:
        array = MemoryArray(small_geometry)
        array.column_current(device, bias, 0, 1, ActivationMode.ADRA_CIM, columns=range(4, 8))

        assert array.activations == 1
        assert array.column_accesses == 4

    def test_standard_read_single_row(
        self, small_geometry: ArrayGeometry, device: DeviceParams, bias: BiasPlan
    ) -> None:
        array = MemoryArray(small_geometry)
        array.write_word(0, 0, [1, 0, 0, 0])
        currents = array.column_current(device, bias, 0, None, ActivationMode.STANDARD_READ)

        assert len(currents) == 8
        assert currents[0] * 1e6 == pytest.approx(10.05)
        assert currents[1] * 1e6 == pytest.approx(0.05)

    def test_standard_read_rejects_second_row(
        self, small_geometry: ArrayGeometry, device: DeviceParams, bias: BiasPlan
    ) -> None:
        with pytest.raises(InvalidParamsError):
            MemoryArray(small_geometry).column_current(
                device, bias, 0, 1, ActivationMode.STANDARD_READ
            )

    def test_cim_requires_distinct_rows(
        self, small_geometry: ArrayGeometry, device: DeviceParams, bias: BiasPlan
    ) -> None:
        with pytest.raises(InvalidParamsError):
            MemoryArray(small_geometry).column_current(device, bias, 2, 2, ActivationMode.ADRA_CIM)

    def test_cim_requires_second_row(
        self, small_geometry: ArrayGeometry, device: DeviceParams, bias: BiasPlan
    ) -> None:
        with pytest.raises(InvalidParamsError):
            MemoryArray(small_geometry).column_current(
                device, bias, 0, None, ActivationMode.SYMMETRIC_CIM
            )


class TestCurrentLevels:
    """Testes do mapeamento um-para-um dos níveis ADRA."""

    def test_adra_levels_strictly_ordered(self, device: DeviceParams, bias: BiasPlan) -> None:
        levels = current_levels(device, bias)
        ordered = [levels[vector] for vector in ADRA_LEVEL_ORDER]
        assert ordered == sorted(ordered)
        assert len(set(ordered)) == 4

    def test_adra_gaps_exceed_one_microamp(self, device: DeviceParams, bias: BiasPlan) -> None:
        gaps = level_gaps(current_levels(device, bias))
        assert all(gap > 1e-6 for gap in gaps)
        assert min(gaps) * 1e6 == pytest.approx(3.111)

    def test_symmetric_mode_has_three_levels(self, device: DeviceParams, bias: BiasPlan) -> None:
        levels = current_levels(device, bias, ActivationMode.SYMMETRIC_CIM)
        assert levels[(0, 1)] == levels[(1, 0)]
        assert len(distinct_levels(levels)) == 3

    def test_degenerate_adra_collapses(
        self, device: DeviceParams, degenerate_bias: BiasPlan
    ) -> None:
        levels = current_levels(device, degenerate_bias)
        assert len(distinct_levels(levels)) == 3

    def test_levels_do_not_count_as_array_accesses(
        self, small_geometry: ArrayGeometry, device: DeviceParams, bias: BiasPlan
    ) -> None:
        array = MemoryArray(small_geometry)
        current_levels(device, bias)
        assert array.activations == 0


class TestSelectedColumns:
    """Testes de selected_columns (paralelismo P)."""

    def test_full_parallelism(self, small_geometry: ArrayGeometry) -> None:
        assert MemoryArray(small_geometry).selected_columns(1.0) == range(8)

    def test_half_parallelism(self, small_geometry: ArrayGeometry) -> None:
        assert MemoryArray(small_geometry).selected_columns(0.5) == range(4)

    @pytest.mark.parametrize("parallelism", [0.0, 0.3, 1.5])
    def test_invalid_parallelism_rejected(
        self, small_geometry: ArrayGeometry, parallelism: float
    ) -> None:
        with pytest.raises(InvalidParamsError):
            MemoryArray(small_geometry).selected_columns(parallelism)

    @pytest.mark.parametrize(("parallelism", "words"), [(1.0, 32), (0.5, 16), (1 / 32, 1)])
    def test_selected_words_reference_geometry(
        self, reference_geometry: ArrayGeometry, parallelism: float, words: int
    ) -> None:
        assert selected_words(reference_geometry, parallelism) == words

    def test_fractional_words_rejected(self, reference_geometry: ArrayGeometry) -> None:
        """0.3 × 32 palavras = 9.6."""
        with pytest.raises(InvalidParamsError) as exc_info:
            selected_words(reference_geometry, 0.3)
        assert exc_info.value.field == "parallelism"
