"""
Tipos de entrada e saída do módulo de cômputo periférico.

São dataclasses imutáveis: estão no caminho quente da verificação
exaustiva e não precisam de validação pydantic.
"""

from dataclasses import dataclass

from app.models.common import Comparison


@dataclass(frozen=True, slots=True)
class ModuleInputs:
    """Entradas de um módulo: tripla sensoriada, carry de entrada e SELECT."""

    or_bit: int
    and_bit: int
    b_bit: int
    c_in: int = 0
    select: int = 0


@dataclass(frozen=True, slots=True)
class ModuleOutput:
    sum: int
    carry: int


@dataclass(frozen=True, slots=True)
class DualOutput:
    """Saídas simultâneas da variante XOR + AOI21."""

    add: ModuleOutput
    sub: ModuleOutput


@dataclass(frozen=True, slots=True)
class WordOpResult:
    """
    Resultado de n+1 módulos em cascata (complemento de dois, LSB primeiro).

    Attributes:
        sum_bits: n+1 bits de soma, LSB primeiro.
        carry_out: Carry do módulo n+1.
        zero_flag: 1 se todos os bits de soma são 0.
        sign_bit: Bit mais significativo (n+1) da soma.
    """

    sum_bits: tuple[int, ...]
    carry_out: int
    zero_flag: int
    sign_bit: int

    @property
    def width(self) -> int:
        return len(self.sum_bits)

    def to_int(self) -> int:
        """Valor com sinal em complemento de dois de n+1 bits."""
        value = sum(bit << i for i, bit in enumerate(self.sum_bits))
        if self.sign_bit:
            value -= 1 << self.width
        return value

    def bit_string(self) -> str:
        """Bits de soma, MSB primeiro."""
        return "".join(str(bit) for bit in reversed(self.sum_bits))


@dataclass(frozen=True, slots=True)
class CompareResult:
    """Comparação e a quantidade de portas AND usadas no detector de igualdade."""

    comparison: Comparison
    difference: WordOpResult
    and_gates: int
