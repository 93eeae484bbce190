"""
Enums e tipos compartilhados do simulador.

Este módulo define enumerações utilizadas em múltiplos modelos e
serviços, garantindo consistência entre CLI, API e relatórios CSV.
"""

from enum import Enum


class BitState(str, Enum):
    """
    Estado de polarização armazenado em uma célula 1T-FeFET.

    O mapeamento é fixo e total:

    - **LRS** (+P): limiar baixo, representa o bit lógico '1'
    - **HRS** (−P): limiar alto, representa o bit lógico '0'
    """

    LRS = "lrs"

    HRS = "hrs"

    @property
    def bit(self) -> int:
        """Valor lógico armazenado (1 para LRS, 0 para HRS)."""
        return 1 if self is BitState.LRS else 0

    @classmethod
    def from_bit(cls, bit: int) -> "BitState":
        """Converte um bit lógico no estado de polarização."""
        return cls.LRS if bit else cls.HRS


class ActivationMode(str, Enum):
    """
    Modo de ativação das wordlines em um acesso ao array.

    - **standard_read**: uma linha em V_GREAD2
    - **symmetric_cim**: duas linhas em V_GREAD2 (arte anterior, mapeamento muitos-para-um)
    - **adra_cim**: linha A em V_GREAD1 e linha B em V_GREAD2 (mapeamento um-para-um)
    """

    STANDARD_READ = "standard_read"

    SYMMETRIC_CIM = "symmetric_cim"

    ADRA_CIM = "adra_cim"


class SensingScheme(str, Enum):
    """
    Esquema de sensoriamento avaliado pelo modelo de energia/latência.

    ## Esquemas

    - **current**: sensoriamento por corrente com escada de três referências
    - **scheme1**: tensão, RBL mantida pré-carregada (custo de fuga)
    - **scheme2**: tensão, RBL descarregada e carregada a cada operação
    """

    CURRENT = "current"

    SCHEME1 = "scheme1"
    """Bitline pré-carregada durante o hold; paga fuga e pseudo-CiM."""

    SCHEME2 = "scheme2"
    """Somente as RBLs selecionadas são carregadas a cada operação."""

    @property
    def is_voltage(self) -> bool:
        return self is not SensingScheme.CURRENT


class OperationKind(str, Enum):
    """Operação de palavra executada pelo módulo de cômputo."""

    ADD = "add"

    SUB = "sub"

    CMP = "cmp"

    @property
    def select(self) -> int:
        """Sinal SELECT do módulo: 0 para soma, 1 para subtração e comparação."""
        return 0 if self is OperationKind.ADD else 1


class Comparison(str, Enum):
    """Resultado de uma comparação com sinal entre A e B."""

    LESS = "less"

    EQUAL = "equal"

    GREATER = "greater"


class CrossoverStatus(str, Enum):
    """
    Status de uma busca de ponto de cruzamento entre os esquemas 1 e 2.

    **Nota**: `no_crossover` é um status distinto, não uma falha.
    """

    FOUND = "found"

    NO_CROSSOVER = "no_crossover"


class WarningLevel(str, Enum):
    """
    Nível de severidade dos warnings gerados na validação de margens.

    Warnings são alertas não-bloqueantes que indicam configurações
    próximas dos limites de operação do array.

    **Nota**: Warnings nunca bloqueiam a execução de um comando.
    """

    INFO = "info"

    LOW = "low"

    MEDIUM = "medium"

    HIGH = "high"


class AccessKind(str, Enum):
    """Acesso avaliado pelo modelo de latência."""

    READ = "read"

    CIM = "cim"
    """Uma ativação ADRA seguida do módulo de cômputo."""

    BASELINE = "baseline"
    """Duas leituras seguidas de cômputo near-memory."""
