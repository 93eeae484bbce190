"""
Utilitários de bits em complemento de dois.

Funções puras usadas pelo pipeline, pela verificação e pelos relatórios.
"""

from collections.abc import Iterator


class BitCodec:
    """
    Conversões entre inteiros com sinal e vetores de bits LSB primeiro.

    Todos os métodos são estáticos e determinísticos.
    """

    @staticmethod
    def signed_range(width: int) -> tuple[int, int]:
        """Intervalo fechado representável em `width` bits com sinal."""
        return -(1 << (width - 1)), (1 << (width - 1)) - 1

    @staticmethod
    def fits(value: int, width: int) -> bool:
        low, high = BitCodec.signed_range(width)
        return low <= value <= high

    @staticmethod
    def to_bits(value: int, width: int) -> list[int]:
        """
        Padrão de complemento de dois de `value`, LSB primeiro.

        Example:
            >>> BitCodec.to_bits(-2, 4)
            [0, 1, 1, 1]
        """
        pattern = value & ((1 << width) - 1)
        return [(pattern >> i) & 1 for i in range(width)]

    @staticmethod
    def from_bits(bits: list[int] | tuple[int, ...], signed: bool = True) -> int:
        value = sum(bit << i for i, bit in enumerate(bits))
        if signed and bits and bits[-1]:
            value -= 1 << len(bits)
        return value

    @staticmethod
    def to_string(bits: list[int] | tuple[int, ...]) -> str:
        """Bits em texto, MSB primeiro."""
        return "".join(str(bit) for bit in reversed(bits))

    @staticmethod
    def all_pairs(width: int) -> Iterator[tuple[int, int]]:
        """Todos os pares (A, B) com sinal de `width` bits, em ordem fixa."""
        low, high = BitCodec.signed_range(width)
        for a in range(low, high + 1):
            for b in range(low, high + 1):
                yield a, b

    @staticmethod
    def sampled_pairs(width: int, count: int) -> Iterator[tuple[int, int]]:
        """
        `count` pares em passo fixo sobre o espaço 4^width.

        Determinístico: o mesmo (width, count) gera sempre os mesmos pares.
        """
        total = 1 << (2 * width)
        count = min(count, total)
        stride = total // count
        low, _ = BitCodec.signed_range(width)
        mask = (1 << width) - 1
        for k in range(count):
            index = k * stride
            yield low + (index >> width), low + (index & mask)
