"""
Estado do array 1T-FeFET e correntes das sense lines.

As células são um array numpy `bool` (True = LRS). As correntes por
coluna são avaliadas vetorialmente: cada linha contribui com a
corrente do seu estado na tensão de gate da sua wordline.
"""

import logging
from collections.abc import Sequence

import numpy as np
import numpy.typing as npt

from app.core.errors import InvalidParamsError, OperandError
from app.models.array import ArrayGeometry, BiasPlan
from app.models.common import ActivationMode, BitState
from app.models.device import DeviceParams
from app.services.device import cell_current

logger = logging.getLogger(__name__)

# Vetores (A, B) na ordem crescente de corrente ADRA
ADRA_LEVEL_ORDER: tuple[tuple[int, int], ...] = ((0, 0), (1, 0), (0, 1), (1, 1))


class MemoryArray:
    """
    Grade `rows × cols` de bitcells com organização em palavras.

    Palavras ocupam colunas contíguas a partir de
    `word_index · word_width`, LSB primeiro.

    Attributes:
        activations: Ativações de wordline (leitura ou CiM) realizadas.
        column_accesses: Eventos de sensoriamento por coluna.
    """

    def __init__(self, geometry: ArrayGeometry) -> None:
        self.geometry = geometry
        self.cells: npt.NDArray[np.bool_] = np.zeros(
            (geometry.rows, geometry.cols), dtype=np.bool_
        )
        self.activations = 0
        self.column_accesses = 0

    @classmethod
    def scratch(cls, word_width: int) -> "MemoryArray":
        """Array mínimo de duas linhas e uma palavra, usado pela verificação."""
        return cls(ArrayGeometry(rows=2, cols=word_width, word_width=word_width))

    @property
    def rows(self) -> int:
        return self.geometry.rows

    @property
    def cols(self) -> int:
        return self.geometry.cols

    @property
    def word_width(self) -> int:
        return self.geometry.word_width

    @property
    def words_per_row(self) -> int:
        return self.geometry.effective_words_per_row

    def state(self, row: int, col: int) -> BitState:
        return BitState.from_bit(int(self.cells[row, col]))

    def word_columns(self, word_index: int) -> range:
        if not 0 <= word_index < self.words_per_row:
            raise OperandError(
                f"word_index {word_index} fora de [0, {self.words_per_row})",
                operand="word_index",
            )
        start = word_index * self.word_width
        return range(start, start + self.word_width)

    def _check_row(self, row: int, name: str = "row") -> None:
        if not 0 <= row < self.rows:
            raise OperandError(f"{name} {row} fora de [0, {self.rows})", operand=name)

    def write_word(self, row: int, word_index: int, bits: Sequence[int]) -> "MemoryArray":
        """
        Atribui diretamente os bits de uma palavra (LSB primeiro).

        Demais células permanecem inalteradas.

        Raises:
            OperandError: Endereço fora do array ou vetor de tamanho errado.
        """
        self._check_row(row)
        columns = self.word_columns(word_index)
        if len(bits) != self.word_width:
            raise OperandError(
                f"Palavra com {len(bits)} bits, esperado {self.word_width}",
                operand="bits",
            )
        self.cells[row, columns.start : columns.stop] = np.asarray(bits, dtype=np.bool_)
        return self

    def read_word(self, row: int, word_index: int) -> list[int]:
        self._check_row(row)
        columns = self.word_columns(word_index)
        return [int(bit) for bit in self.cells[row, columns.start : columns.stop]]

    def read_row(self, row: int) -> list[int]:
        self._check_row(row)
        return [int(bit) for bit in self.cells[row]]

    def column_current(
        self,
        device: DeviceParams,
        bias: BiasPlan,
        row_a: int,
        row_b: int | None,
        mode: ActivationMode,
        columns: range | None = None,
    ) -> npt.NDArray[np.float64]:
        """
        Corrente por coluna na sense line para uma ativação.

        Args:
            device: Parâmetros do dispositivo.
            bias: Plano de polarização.
            row_a: Linha lida (ou linha A, em V_GREAD1 no modo ADRA).
            row_b: Segunda linha; obrigatória exceto em leitura padrão.
            mode: Modo de ativação.
            columns: Colunas sensoriadas (padrão: todas).

        Returns:
            Array de correntes (A), uma por coluna sensoriada.

        Raises:
            OperandError: Linha fora do array.
            InvalidParamsError: Modo incompatível com os operandos ou linhas iguais.
        """
        self._check_row(row_a, "row_a")
        if mode is ActivationMode.STANDARD_READ:
            if row_b is not None:
                raise InvalidParamsError("Leitura padrão ativa apenas uma linha", field="row_b")
        else:
            if row_b is None:
                raise InvalidParamsError(f"Modo {mode.value} exige row_b", field="row_b")
            self._check_row(row_b, "row_b")
            if row_a == row_b:
                raise InvalidParamsError("row_a e row_b devem ser distintas", field="row_b")

        span = columns if columns is not None else range(self.cols)
        window = slice(span.start, span.stop)

        vg_a = bias.v_gread1 if mode is ActivationMode.ADRA_CIM else bias.v_gread2
        currents = self._row_current(self.cells[row_a, window], vg_a, device)
        if row_b is not None:
            currents = currents + self._row_current(
                self.cells[row_b, window], bias.v_gread2, device
            )

        self.activations += 1
        self.column_accesses += len(span)
        logger.debug(
            "Ativação %s linhas (%s, %s), %d colunas", mode.value, row_a, row_b, len(span)
        )
        return currents

    @staticmethod
    def _row_current(
        bits: npt.NDArray[np.bool_], vg: float, device: DeviceParams
    ) -> npt.NDArray[np.float64]:
        i_lrs = cell_current(BitState.LRS, vg, device)
        i_hrs = cell_current(BitState.HRS, vg, device)
        return np.where(bits, i_lrs, i_hrs)

    def selected_columns(self, parallelism: float) -> range:
        """
        Colunas das primeiras `P · words_per_row` palavras.

        As colunas restantes são meio-selecionadas na contabilidade de energia.

        Raises:
            InvalidParamsError: P fora de (0, 1] ou número não inteiro de palavras.
        """
        return range(selected_words(self.geometry, parallelism) * self.word_width)

    def to_text(self) -> str:
        """Grade 0/1, uma linha por wordline."""
        return "\n".join("".join("1" if bit else "0" for bit in row) for row in self.cells) + "\n"

    @classmethod
    def from_text(cls, text: str, word_width: int, mux_factor: int = 1) -> "MemoryArray":
        """
        Constrói um array a partir de uma grade 0/1.

        Raises:
            InvalidParamsError: Linhas de tamanhos diferentes ou caracteres inválidos.
        """
        lines = [line.strip() for line in text.splitlines() if line.strip()]
        if not lines or len({len(line) for line in lines}) != 1:
            raise InvalidParamsError("Grade vazia ou com linhas de tamanhos diferentes")
        if any(set(line) - {"0", "1"} for line in lines):
            raise InvalidParamsError("Grade deve conter apenas 0 e 1")

        array = cls(
            ArrayGeometry(
                rows=len(lines),
                cols=len(lines[0]),
                word_width=word_width,
                mux_factor=mux_factor,
            )
        )
        array.cells = np.array([[ch == "1" for ch in line] for line in lines], dtype=np.bool_)
        return array


def current_levels(
    device: DeviceParams,
    bias: BiasPlan,
    mode: ActivationMode = ActivationMode.ADRA_CIM,
) -> dict[tuple[int, int], float]:
    """
    Corrente de sense line para cada vetor (A, B) em um modo CiM.

    Usa um array de 2×1 por vetor, de modo que a superposição é a mesma
    do caminho do array completo.
    """
    levels: dict[tuple[int, int], float] = {}
    for a_bit, b_bit in ADRA_LEVEL_ORDER:
        scratch = MemoryArray(ArrayGeometry(rows=2, cols=1, word_width=1))
        scratch.write_word(0, 0, [a_bit]).write_word(1, 0, [b_bit])
        levels[(a_bit, b_bit)] = float(scratch.column_current(device, bias, 0, 1, mode)[0])
    return levels


def distinct_levels(levels: dict[tuple[int, int], float]) -> list[float]:
    """Níveis distintos em ordem crescente (3 no modo simétrico, 4 em ADRA)."""
    return sorted(set(levels.values()))


def level_gaps(levels: dict[tuple[int, int], float]) -> list[float]:
    """Distâncias entre níveis consecutivos na ordem ADRA (0,0)<(1,0)<(0,1)<(1,1)."""
    ordered = [levels[vector] for vector in ADRA_LEVEL_ORDER]
    return [high - low for low, high in zip(ordered, ordered[1:], strict=False)]


def selected_words(geometry: ArrayGeometry, parallelism: float) -> int:
    """
    Palavras computadas simultaneamente: `P · words_per_row`, inteiro e >= 1.

    Raises:
        InvalidParamsError: P fora de (0, 1] ou número não inteiro de palavras.
    """
    if not 0 < parallelism <= 1:
        raise InvalidParamsError("P deve estar em (0, 1]", field="parallelism")
    words = parallelism * geometry.effective_words_per_row
    whole = round(words)
    if whole < 1 or not np.isclose(words, whole, rtol=0, atol=1e-9):
        raise InvalidParamsError(
            f"P · words_per_row = {words:g} não é um número inteiro de palavras",
            field="parallelism",
        )
    return whole
