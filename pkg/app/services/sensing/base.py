"""
Protocolo comum dos amplificadores de sensoriamento.

Define a interface que os caminhos de corrente e de tensão implementam,
permitindo substituição transparente entre esquemas.
"""

from typing import Protocol, runtime_checkable

from app.models.common import SensingScheme
from app.models.sensing import SenseOutcome


@runtime_checkable
class SenseAmplifierProtocol(Protocol):
    """
    Protocolo de um conjunto de três amplificadores (OR, B, AND).

    Qualquer classe com `scheme` e `sense` compatíveis é aceita.

    Example:
        ```python
        amplifier: SenseAmplifierProtocol = CurrentSenseAmplifier(ladder)
        outcome = amplifier.sense(6.99e-6)  # (or=1, and=0, b=0)
        ```
    """

    scheme: SensingScheme

    def sense(self, i_sl: float) -> SenseOutcome:
        """
        Converte a corrente de uma sense line na tripla (OR, AND, B).

        Args:
            i_sl: Corrente da coluna (A).

        Returns:
            SenseOutcome com `a_bit` ainda não recuperado.
        """
        ...
