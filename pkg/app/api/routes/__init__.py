"""Expose API routers."""

from . import identities, verifications

__all__ = ["identities", "verifications"]
