"""FastAPI application entrypoint."""

from fastapi import FastAPI, Request, status
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from app.api import router as api_router
from app.core.config import settings
from app.core.errors import IdentityEngineError
from app.core.logging import configure_logging, get_logger
from app.services.identities import registry

configure_logging()
logger = get_logger(__name__)

app = FastAPI(
    title=settings.app_name,
    version="0.1.0",
    docs_url="/docs",
    redoc_url="/redoc",
    openapi_url="/openapi.json",
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=settings.cors_allowed_origins,
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

app.include_router(api_router.api_router, prefix=settings.api_v1_prefix)

logger.info("registry_loaded", identities=len(registry))


@app.exception_handler(IdentityEngineError)
async def engine_error_handler(request: Request, exc: IdentityEngineError) -> JSONResponse:
    # Routes translate the errors they expect; anything else surfacing here is a bad request.
    logger.warning("engine_error", path=request.url.path, error=str(exc))
    return JSONResponse(status_code=status.HTTP_422_UNPROCESSABLE_ENTITY, content={"detail": str(exc)})


@app.get("/healthz", tags=["health"])
def health_check() -> dict:
    """Liveness probe; also reports how many identities are registered."""

    logger.debug("health_check_invoked")
    return {"status": "ok", "environment": settings.environment, "identities": len(registry)}
