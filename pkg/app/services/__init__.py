"""Service package exports."""

from . import job_store

__all__ = ["job_store"]

