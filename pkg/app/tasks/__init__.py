"""Task package for Celery workers."""
