import logging

from fastapi import FastAPI, Request, status
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import ValidationError

from app.core.errors import (
    AdraError,
    ConfigurationError,
    InsufficientMarginError,
    InvalidParamsError,
    OperandError,
    PipelineError,
)

logger = logging.getLogger(__name__)

# Erros causados pela entrada ou pela configuração fornecida
CLIENT_ERRORS: tuple[type[AdraError], ...] = (
    ConfigurationError,
    InvalidParamsError,
    OperandError,
    InsufficientMarginError,
)


def _validation_errors(exc: RequestValidationError | ValidationError) -> list[dict[str, object]]:
    return [
        {
            "loc": list(error.get("loc", [])),
            "msg": error.get("msg", "Erro de validação"),
            "type": error.get("type", "validation_error"),
        }
        for error in exc.errors()
    ]


def error_status(exc: AdraError) -> int:
    """Status HTTP de um erro do simulador; PipelineError herda o da causa."""
    cause = exc.cause if isinstance(exc, PipelineError) else exc
    if isinstance(cause, CLIENT_ERRORS):
        return status.HTTP_422_UNPROCESSABLE_ENTITY
    return status.HTTP_500_INTERNAL_SERVER_ERROR


def register_error_handlers(app: FastAPI) -> None:
    """
    Registra handlers de erro na aplicação FastAPI.

    Args:
        app: Instância da aplicação FastAPI.
    """

    @app.exception_handler(RequestValidationError)
    async def validation_exception_handler(
        request: Request,
        exc: RequestValidationError,
    ) -> JSONResponse:
        """Erros de validação do payload: 422 com os campos inválidos."""
        return JSONResponse(
            status_code=status.HTTP_422_UNPROCESSABLE_ENTITY,
            content={"detail": _validation_errors(exc)},
        )

    @app.exception_handler(ValidationError)
    async def pydantic_validation_handler(
        request: Request,
        exc: ValidationError,
    ) -> JSONResponse:
        """Erros de validação do Pydantic fora do contexto do FastAPI."""
        return JSONResponse(
            status_code=status.HTTP_422_UNPROCESSABLE_ENTITY,
            content={"detail": _validation_errors(exc)},
        )

    @app.exception_handler(AdraError)
    async def adra_error_handler(
        request: Request,
        exc: AdraError,
    ) -> JSONResponse:
        """
        Handler para exceções do simulador.

        Configuração, operandos e margens viram 422; o restante, 500.
        """
        return JSONResponse(
            status_code=error_status(exc),
            content={
                "detail": exc.message,
                "code": exc.code,
            },
        )

    @app.exception_handler(Exception)
    async def generic_exception_handler(
        request: Request,
        exc: Exception,
    ) -> JSONResponse:
        """Exceções não tratadas: erro genérico sem expor detalhes internos."""
        logger.error("Exceção não tratada em %s", request.url.path, exc_info=exc)

        return JSONResponse(
            status_code=status.HTTP_500_INTERNAL_SERVER_ERROR,
            content={
                "detail": "Erro interno do servidor",
                "code": "INTERNAL_ERROR",
            },
        )
