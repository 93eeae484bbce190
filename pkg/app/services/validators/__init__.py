"""Non-blocking validators for simulation configurations."""

from app.services.validators.margin import MarginValidator

__all__ = ["MarginValidator"]
