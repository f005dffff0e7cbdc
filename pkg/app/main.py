import logging

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from app.config import get_settings
from app.errors import ArgumentError, CertificationError, ConfigurationError, ResourceLimitError
from app.routes import character_routes, epsilon_routes, fock_routes, root_routes
from app.utils import configure_logging

settings = get_settings()
configure_logging(settings.log_level)
logger = logging.getLogger(__name__)

app = FastAPI(
    title=settings.app_name,
    description="""
# Logarithmic W-algebra Toolkit

Exact computations for the logarithmic W-algebras W(p)_Q of simply-laced type
(A_l, D_l, E6, E7, E8) at level p >= 2.

## Parameters

- **type**: Lie type and rank, e.g. `A2`, `D4`, `E6`
- **p**: level, an integer >= 2
- **lambda**: `0` for the vacuum, or `hat=<index|0>,s=<c1,...,cl>` with `0 <= c_i <= p-1`

## Numbers

All rationals are returned as exact strings (`"-1/8"`). Conformal weights and q-exponents
are rationals; z-exponents are integer vectors in fundamental-weight coordinates.

## Limits

Enumerations are capped by `LOGW_MAX_BASIS`, `LOGW_MAX_WEYL` and `LOGW_MAX_LAMBDA`.
A request that would exceed a cap answers **413**.
    """,
    version=settings.app_version,
    openapi_tags=[
        {
            "name": "Root Data",
            "description": "Root systems, parameter sets and the cohomology dimension formula"
        },
        {
            "name": "Epsilon",
            "description": "Epsilon chains along reduced words and the alcove condition"
        },
        {
            "name": "Characters",
            "description": "Euler-characteristic and theta-function sides of the character identity"
        },
        {
            "name": "Fock",
            "description": "Graded Fock bases and screening kernels"
        }
    ]
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


@app.exception_handler(ArgumentError)
@app.exception_handler(ConfigurationError)
async def argument_exception_handler(request: Request, exc: Exception):
    return JSONResponse(status_code=400, content={"detail": str(exc)})


@app.exception_handler(ResourceLimitError)
async def resource_exception_handler(request: Request, exc: ResourceLimitError):
    logger.warning("resource cap hit on %s: %s", request.url.path, exc)
    return JSONResponse(status_code=413, content={"detail": str(exc)})


@app.exception_handler(CertificationError)
async def certification_exception_handler(request: Request, exc: CertificationError):
    logger.error("certification failed on %s: %s", request.url.path, exc)
    return JSONResponse(status_code=500, content={"detail": "Certification failed", "error": str(exc)})


@app.exception_handler(Exception)
async def global_exception_handler(request: Request, exc: Exception):
    return JSONResponse(
        status_code=500,
        content={"detail": "Internal server error", "error": str(exc)}
    )


app.include_router(root_routes.router)
app.include_router(epsilon_routes.router)
app.include_router(character_routes.router)
app.include_router(fock_routes.router)


@app.get("/")
async def root():
    return {
        "message": settings.app_name,
        "version": settings.app_version,
        "docs": "/docs"
    }


@app.get("/health")
async def health_check():
    return {"status": "healthy"}
