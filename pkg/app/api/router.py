"""API router aggregator."""

from fastapi import APIRouter

from app.api.routes import identities, verifications

api_router = APIRouter()
api_router.include_router(identities.router)
api_router.include_router(verifications.router)
