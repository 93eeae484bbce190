"""
Pipeline ponta a ponta: escrita → ativação ADRA → sensoriamento →
recuperação de A → módulo de cômputo.
"""

import logging
from dataclasses import dataclass

from app.models.array import BiasPlan, OperandLayout
from app.models.common import ActivationMode, Comparison, OperationKind, SensingScheme
from app.models.compute import CompareResult, WordOpResult
from app.models.device import DeviceParams
from app.models.sensing import SenseOutcome, SensingConfig
from app.services.array import MemoryArray
from app.services.compute_unit import compare, word_op
from app.services.device import check_separability
from app.services.sensing import SenseAmplifierProtocol, get_sense_amplifier, recover_a
from app.utils.bits import BitCodec

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class TwoBitRead:
    """Duas palavras e suas operações bit a bit lidas em uma única ativação."""

    a_bits: tuple[int, ...]
    b_bits: tuple[int, ...]
    or_bits: tuple[int, ...]
    and_bits: tuple[int, ...]


@dataclass(frozen=True, slots=True)
class ActivationResult:
    """Saída de uma ativação: triplas por coluna e os três resultados de palavra."""

    outcomes: tuple[SenseOutcome, ...]
    add: WordOpResult
    sub: WordOpResult
    cmp: CompareResult

    @property
    def recovered_a(self) -> int:
        return BitCodec.from_bits([o.a_bit or 0 for o in self.outcomes])

    @property
    def recovered_b(self) -> int:
        return BitCodec.from_bits([o.b_bit for o in self.outcomes])

    def result_for(self, operation: OperationKind) -> WordOpResult:
        if operation is OperationKind.ADD:
            return self.add
        return self.sub if operation is OperationKind.SUB else self.cmp.difference

    @property
    def comparison(self) -> Comparison:
        return self.cmp.comparison


class AdraPipeline:
    """
    Executa operações de palavra sobre um array com uma única ativação.

    A linha A (V_GREAD1) é o minuendo; a linha B recebe V_GREAD2.
    """

    def __init__(
        self,
        array: MemoryArray,
        device: DeviceParams,
        bias: BiasPlan,
        sensing: SensingConfig,
        layout: OperandLayout | None = None,
        scheme: SensingScheme | None = None,
    ) -> None:
        """
        Inicializa o pipeline e valida as margens de sensoriamento.

        Raises:
            InsufficientMarginError: Níveis não separáveis.
            InvalidParamsError: Polarização sem assimetria ADRA.
        """
        self.array = array
        self.device = device
        self.bias = bias
        self.layout = layout or OperandLayout()
        self.amplifier: SenseAmplifierProtocol = get_sense_amplifier(
            device, bias, sensing, scheme
        )
        check_separability(device, bias)

    @property
    def word_width(self) -> int:
        return self.array.word_width

    def load_operands(self, a: int, b: int) -> None:
        """Escreve A e B nas linhas do layout (complemento de dois)."""
        width = self.word_width
        self.array.write_word(self.layout.row_a, self.layout.word_index, BitCodec.to_bits(a, width))
        self.array.write_word(self.layout.row_b, self.layout.word_index, BitCodec.to_bits(b, width))

    def sense_word(self) -> tuple[SenseOutcome, ...]:
        """Uma ativação ADRA sobre a palavra do layout, com A recuperado por coluna."""
        currents = self.array.column_current(
            self.device,
            self.bias,
            self.layout.row_a,
            self.layout.row_b,
            ActivationMode.ADRA_CIM,
            columns=self.array.word_columns(self.layout.word_index),
        )
        outcomes = []
        for i_sl in currents:
            outcome = self.amplifier.sense(float(i_sl))
            outcomes.append(outcome.with_a(recover_a(*outcome.triple)))
        return tuple(outcomes)

    def activate(self) -> ActivationResult:
        """Sensoria a palavra uma vez e alimenta soma, subtração e comparação."""
        outcomes = self.sense_word()
        return ActivationResult(
            outcomes=outcomes,
            add=word_op(outcomes, select=0),
            sub=word_op(outcomes, select=1),
            cmp=compare(outcomes),
        )

    def run(self, a: int, b: int) -> ActivationResult:
        self.load_operands(a, b)
        result = self.activate()
        logger.debug("A=%d B=%d w=%d: sub=%d", a, b, self.word_width, result.sub.to_int())
        return result

    def two_bit_read(self) -> TwoBitRead:
        """Lê A, B, A OR B e A AND B com uma única ativação."""
        outcomes = self.sense_word()
        return TwoBitRead(
            a_bits=tuple(o.a_bit or 0 for o in outcomes),
            b_bits=tuple(o.b_bit for o in outcomes),
            or_bits=tuple(o.or_bit for o in outcomes),
            and_bits=tuple(o.and_bit for o in outcomes),
        )
