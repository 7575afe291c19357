"""Celery application configuration."""

from celery import Celery

from app.core.config import settings

celery_app = Celery("harmonic_identities")

broker_url = settings.celery_broker_url or settings.redis_url
result_backend = settings.celery_result_backend or settings.redis_url

celery_app.conf.update(
    broker_url=broker_url,
    result_backend=result_backend,
    task_default_queue="verification",
    task_soft_time_limit=300,
    task_time_limit=360,
    worker_max_tasks_per_child=20,
    task_track_started=True,
    task_always_eager=settings.debug,
)

celery_app.autodiscover_tasks(["app.tasks"], related_name="verification_tasks")
