"""
Modelos de polarização, geometria e layout de operandos do array.
"""

from typing import Annotated

from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.core.constants import (
    DEFAULT_COLS,
    DEFAULT_ROWS,
    DEFAULT_V_GREAD1,
    DEFAULT_V_GREAD2,
    DEFAULT_V_READ,
    DEFAULT_V_RESET,
    DEFAULT_V_SET,
    DEFAULT_WORD_WIDTH,
)


class BiasPlan(BaseModel):
    """
    Tensões de leitura, CiM e escrita aplicadas às wordlines.

    A assimetria `v_gread2 > v_gread1 > 0` é o que torna distintas
    as correntes dos vetores (0,1) e (1,0).
    """

    model_config = ConfigDict(
        extra="forbid",
        frozen=True,
        json_schema_extra={
            "example": {
                "v_read": 1.0,
                "v_gread1": 0.83,
                "v_gread2": 1.0,
                "v_set": 3.7,
                "v_reset": -5.0,
            }
        },
    )

    v_read: Annotated[float, Field(gt=0, description="Tensão de pré-carga da RBL (V).")] = (
        DEFAULT_V_READ
    )
    v_gread1: Annotated[
        float, Field(gt=0, description="Tensão de gate da linha A em ADRA (V).")
    ] = DEFAULT_V_GREAD1
    v_gread2: Annotated[
        float, Field(gt=0, description="Tensão de gate da linha B e da leitura padrão (V).")
    ] = DEFAULT_V_GREAD2
    v_set: Annotated[float, Field(description="Tensão de escrita +P (V).")] = DEFAULT_V_SET
    v_reset: Annotated[float, Field(description="Tensão de escrita −P (V).")] = DEFAULT_V_RESET

    @model_validator(mode="after")
    def validate_asymmetry(self) -> "BiasPlan":
        """Valida a ativação assimétrica e o limite de escrita."""
        if not self.v_gread2 > self.v_gread1:
            raise ValueError("v_gread2 > v_gread1 violado")
        if not self.v_gread2 < self.v_set:
            raise ValueError("v_gread2 < v_set violado")
        return self


class ArrayGeometry(BaseModel):
    """
    Dimensões do array e organização de palavras por linha.

    Palavras ocupam colunas contíguas, LSB primeiro. Quando
    `words_per_row` é omitido, vale `cols // word_width`.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    rows: Annotated[int, Field(ge=2, description="Número de linhas (wordlines).")] = DEFAULT_ROWS
    cols: Annotated[int, Field(ge=1, description="Número de colunas (bitlines).")] = DEFAULT_COLS
    word_width: Annotated[int, Field(ge=1, description="Largura da palavra em bits.")] = (
        DEFAULT_WORD_WIDTH
    )
    words_per_row: Annotated[
        int | None, Field(ge=1, description="Palavras por linha (padrão: cols // word_width).")
    ] = None
    mux_factor: Annotated[int, Field(ge=1, description="Fator do mux de colunas.")] = 1

    @model_validator(mode="after")
    def validate_layout(self) -> "ArrayGeometry":
        """Valida que as palavras cabem na linha e que o mux divide as colunas."""
        if self.word_width > self.cols:
            raise ValueError("word_width <= cols violado")
        if self.word_width * self.effective_words_per_row > self.cols:
            raise ValueError("word_width · words_per_row <= cols violado")
        if self.cols % self.mux_factor != 0:
            raise ValueError("mux_factor deve dividir cols")
        return self

    @property
    def effective_words_per_row(self) -> int:
        if self.words_per_row is not None:
            return self.words_per_row
        return self.cols // self.word_width

    def resized(self, size: int) -> "ArrayGeometry":
        """Retorna a geometria quadrada `size × size` com a mesma palavra."""
        return ArrayGeometry(
            rows=size,
            cols=size,
            word_width=self.word_width,
            mux_factor=self.mux_factor,
        )


class OperandLayout(BaseModel):
    """
    Posição dos operandos no array.

    A linha A recebe V_GREAD1 e é o minuendo; a linha B recebe V_GREAD2.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    row_a: Annotated[int, Field(ge=0, description="Linha do operando A (V_GREAD1).")] = 0
    row_b: Annotated[int, Field(ge=0, description="Linha do operando B (V_GREAD2).")] = 1
    word_index: Annotated[int, Field(ge=0, description="Índice da palavra na linha.")] = 0

    @model_validator(mode="after")
    def validate_rows(self) -> "OperandLayout":
        if self.row_a == self.row_b:
            raise ValueError("row_a != row_b violado")
        return self
