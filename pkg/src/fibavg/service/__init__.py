"""FastAPI surface over the core library."""

from .app import app

__all__ = ["app"]
