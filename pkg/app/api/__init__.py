"""API layer with routes and dependencies."""
