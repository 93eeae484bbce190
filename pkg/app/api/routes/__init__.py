"""API route modules."""

from app.api.routes.health import router as health_router
from app.api.routes.reports import router as reports_router
from app.api.routes.simulations import router as simulations_router

__all__ = ["health_router", "reports_router", "simulations_router"]
