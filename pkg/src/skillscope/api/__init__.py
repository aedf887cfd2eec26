"""JSON HTTP service."""

from .app import DEFAULT_N, MAX_N, create_app

__all__ = ["DEFAULT_N", "MAX_N", "create_app"]
