"""
Módulo de cômputo periférico: soma/subtração por coluna e comparação.

Cada módulo recebe a tripla sensoriada (OR, AND, B), o carry de entrada
e SELECT (0 = soma, 1 = subtração). O modelo é funcional: um somador
completo sobre (A, B ou NOT B, c_in), expresso com os sinais disponíveis
na saída dos amplificadores.
"""

from collections.abc import Sequence

from app.core.errors import OperandError
from app.models.common import Comparison
from app.models.compute import (
    CompareResult,
    DualOutput,
    ModuleInputs,
    ModuleOutput,
    WordOpResult,
)
from app.models.sensing import SenseOutcome
from app.services.sensing.ladder import recover_a


def _propagate_generate(
    or_bit: int, and_bit: int, b_bit: int, select: int
) -> tuple[int, int]:
    if select == 0:
        # A XOR B e A·B
        return or_bit & (1 - and_bit), and_bit
    # XNOR(A, B) e A·NOT B
    return and_bit | (1 - or_bit), or_bit & (1 - b_bit)


def compute_module(inputs: ModuleInputs) -> ModuleOutput:
    """
    Um estágio do somador/subtrator.

    sum = A XOR B' XOR c_in, carry = A·B' + c_in·(A XOR B'), com
    B' = B (soma) ou NOT B (subtração).

    Raises:
        UnreachableTripleError: Tripla que nenhum vetor (A, B) produz.
    """
    recover_a(inputs.or_bit, inputs.and_bit, inputs.b_bit)
    propagate, generate = _propagate_generate(
        inputs.or_bit, inputs.and_bit, inputs.b_bit, inputs.select
    )
    return ModuleOutput(
        sum=propagate ^ inputs.c_in,
        carry=generate | (inputs.c_in & propagate),
    )


def compute_module_dual(
    or_bit: int, and_bit: int, b_bit: int, c_in: int = 0
) -> DualOutput:
    """
    Variante XOR + AOI21: soma e subtração no mesmo ciclo.

    Cada caminho mantém sua própria cadeia de carry no nível de palavra.
    """
    return DualOutput(
        add=compute_module(ModuleInputs(or_bit, and_bit, b_bit, c_in, select=0)),
        sub=compute_module(ModuleInputs(or_bit, and_bit, b_bit, c_in, select=1)),
    )


def prior_art_adder(or_bit: int, and_bit: int, c_in: int = 0) -> ModuleOutput:
    """Somador da arte anterior, alimentado apenas por OR e AND."""
    propagate = or_bit & (1 - and_bit)
    return ModuleOutput(sum=propagate ^ c_in, carry=and_bit | (c_in & propagate))


def word_op(triples: Sequence[SenseOutcome], select: int) -> WordOpResult:
    """
    Cadeia ripple de n+1 módulos sobre uma palavra (LSB primeiro).

    O carry inicial é SELECT. O módulo n+1 recebe a mesma tripla do
    módulo n (extensão de sinal) e o carry do módulo n.

    Returns:
        WordOpResult com A + B (SELECT=0) ou A − B (SELECT=1) em n+1 bits.

    Raises:
        OperandError: Palavra vazia.
        UnreachableTripleError: Alguma tripla inalcançável.
    """
    if not triples:
        raise OperandError("Palavra vazia", operand="triples")

    stages = [*triples, triples[-1]]
    carry = select
    sum_bits: list[int] = []
    for outcome in stages:
        output = compute_module(
            ModuleInputs(outcome.or_bit, outcome.and_bit, outcome.b_bit, carry, select)
        )
        sum_bits.append(output.sum)
        carry = output.carry

    return WordOpResult(
        sum_bits=tuple(sum_bits),
        carry_out=carry,
        zero_flag=int(not any(sum_bits)),
        sign_bit=sum_bits[-1],
    )


def and_tree(bits: Sequence[int]) -> tuple[int, int]:
    """
    Árvore balanceada de portas AND de 2 entradas.

    Returns:
        (saída, número de portas usadas), com n−1 portas para n entradas.
    """
    if not bits:
        raise OperandError("Árvore AND sem entradas", operand="bits")

    level = list(bits)
    gates = 0
    while len(level) > 1:
        paired = [level[i] & level[i + 1] for i in range(0, len(level) - 1, 2)]
        gates += len(paired)
        if len(level) % 2:
            paired.append(level[-1])
        level = paired
    return level[0], gates


def compare(triples: Sequence[SenseOutcome]) -> CompareResult:
    """
    Comparação com sinal de A e B a partir de A − B.

    Igualdade pela árvore AND sobre os n bits baixos complementados da
    diferença; senão o bit de sinal decide entre menor e maior.
    """
    difference = word_op(triples, select=1)
    width = len(triples)
    equal, gates = and_tree([1 - bit for bit in difference.sum_bits[:width]])

    if equal:
        comparison = Comparison.EQUAL
    elif difference.sign_bit:
        comparison = Comparison.LESS
    else:
        comparison = Comparison.GREATER

    return CompareResult(comparison=comparison, difference=difference, and_gates=gates)
