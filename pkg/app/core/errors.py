"""
Exceções customizadas do simulador.

Define a hierarquia de erros da aplicação. Cada exceção carrega um
código estável para identificação programática (CLI e API).
"""

from typing import Any


class AdraError(Exception):
    """
    Exceção base para erros do simulador.

    Todas as exceções customizadas devem herdar desta classe.
    """

    def __init__(
        self,
        message: str,
        code: str = "INTERNAL_ERROR",
        details: dict[str, Any] | None = None,
    ) -> None:
        """
        Inicializa a exceção.

        Args:
            message: Mensagem de erro legível.
            code: Código do erro para identificação programática.
            details: Detalhes adicionais (opcional).
        """
        super().__init__(message)
        self.message = message
        self.code = code
        self.details = details or {}


class ConfigurationError(AdraError):
    """Erro de configuração (parse, chave desconhecida ou invariante violado)."""

    def __init__(
        self,
        message: str,
        setting: str | None = None,
        details: dict[str, Any] | None = None,
    ) -> None:
        super().__init__(
            message=message,
            code="CONFIGURATION_ERROR",
            details={"setting": setting, **(details or {})},
        )
        self.setting = setting


class InvalidParamsError(AdraError):
    """Parâmetros de dispositivo ou geometria fora do domínio válido."""

    def __init__(
        self,
        message: str,
        field: str | None = None,
        details: dict[str, Any] | None = None,
    ) -> None:
        super().__init__(
            message=message,
            code="INVALID_PARAMS",
            details={"field": field, **(details or {})},
        )
        self.field = field


class OperandError(AdraError):
    """Endereço, largura de palavra ou operando inválido."""

    def __init__(
        self,
        message: str,
        operand: str | None = None,
        details: dict[str, Any] | None = None,
    ) -> None:
        super().__init__(
            message=message,
            code="OPERAND_ERROR",
            details={"operand": operand, **(details or {})},
        )
        self.operand = operand


class InsufficientMarginError(AdraError):
    """Níveis de corrente/tensão não separáveis com a margem configurada."""

    def __init__(
        self,
        message: str,
        pair: tuple[str, str] | None = None,
        details: dict[str, Any] | None = None,
    ) -> None:
        super().__init__(
            message=message,
            code="INSUFFICIENT_MARGIN",
            details={"pair": pair, **(details or {})},
        )
        self.pair = pair


class UnreachableTripleError(AdraError):
    """Tripla (OR, AND, B) que nenhum vetor de entrada produz."""

    def __init__(self, or_bit: int, and_bit: int, b_bit: int) -> None:
        super().__init__(
            message=(
                f"Tripla inalcançável: or={or_bit}, and={and_bit}, b={b_bit}"
            ),
            code="UNREACHABLE_TRIPLE",
            details={"or": or_bit, "and": and_bit, "b": b_bit},
        )


class CalibrationError(AdraError):
    """Alvos de calibração inconsistentes ou parâmetros não calibrados."""

    def __init__(
        self,
        message: str,
        target: str | None = None,
        details: dict[str, Any] | None = None,
    ) -> None:
        super().__init__(
            message=message,
            code="CALIBRATION_ERROR",
            details={"target": target, **(details or {})},
        )
        self.target = target


class NoCrossoverError(AdraError):
    """Não existe ponto de cruzamento entre os esquemas 1 e 2."""

    def __init__(self, message: str, sweep: str) -> None:
        super().__init__(
            message=message,
            code="NO_CROSSOVER",
            details={"sweep": sweep},
        )
        self.sweep = sweep


class PipelineError(AdraError):
    """Falha do pipeline para um caso (A, B, largura) específico."""

    def __init__(self, cause: AdraError, width: int, a: int, b: int) -> None:
        super().__init__(
            message=f"{cause.message} (A={a}, B={b}, w={width})",
            code=cause.code,
            details={**cause.details, "width": width, "a": a, "b": b},
        )
        self.cause = cause


class InvariantError(AdraError):
    """Invariante de relatório violado (tendência de varredura ou identidade EDP)."""

    def __init__(self, message: str, violations: list[str]) -> None:
        super().__init__(
            message=message,
            code="INVARIANT_FAILURE",
            details={"violations": violations},
        )
        self.violations = violations
