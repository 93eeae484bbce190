"""
Sensoriamento por corrente com três comparadores ideais.
"""

from app.models.common import SensingScheme
from app.models.sensing import ReferenceLadder, SenseOutcome


def sense_current(i_sl: float, ladder: ReferenceLadder) -> SenseOutcome:
    """Compara a corrente com as três referências da escada."""
    return SenseOutcome(
        or_bit=int(i_sl > ladder.i_ref_or),
        and_bit=int(i_sl > ladder.i_ref_and),
        b_bit=int(i_sl > ladder.i_ref_b),
    )


class CurrentSenseAmplifier:
    """Amplificadores de corrente referenciados pela escada."""

    scheme = SensingScheme.CURRENT

    def __init__(self, ladder: ReferenceLadder) -> None:
        self.ladder = ladder

    def sense(self, i_sl: float) -> SenseOutcome:
        return sense_current(i_sl, self.ladder)
