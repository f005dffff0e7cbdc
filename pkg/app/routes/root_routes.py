from fastapi import APIRouter, Depends, Query

from app import reports
from app.dependencies import get_root_system
from app.root_data import RootSystemData
from app.schemas import DimsReport, LambdaListReport, RootInfo

router = APIRouter(prefix="/roots", tags=["Root Data"])


@router.get(
    "/dims",
    response_model=DimsReport,
    summary="Cohomology dimension from a single pairing",
    description="""dim H^n(P_i x_B C_mu) computed from m = (mu, alpha_i) alone: m + 1 in degree 0 when m >= 0, -m - 1 in degree 1 when m < 0, and 0 otherwise.""",
    responses={
        200: {"description": "Dimension returned"},
        422: {"description": "Missing pairing"}
    }
)
async def cohomology_dimension(
    m: int = Query(..., description="(mu, alpha_i)"),
    n: int = Query(0, description="Cohomological degree")
):
    return reports.dims_report(m, n)


@router.get(
    "/{lie_type}",
    response_model=RootInfo,
    summary="Root data of a simply-laced type",
    description="""Cartan matrix, positive roots in fundamental-weight coordinates, highest root, rho, Coxeter number, dim g, |W|, minuscule indices, a reduced word of the longest element, and the block partition used by the epsilon tables.""",
    responses={
        200: {"description": "Root data returned"},
        400: {"description": "Unsupported type or rank"}
    }
)
def root_system_info(rs: RootSystemData = Depends(get_root_system)):
    return reports.root_info(rs)


@router.get(
    "/{lie_type}/lambdas",
    response_model=LambdaListReport,
    summary="List the parameter set",
    description="""Every lambda = (hat, s) for the given level, flagged with alcove membership and whether it sits on the alcove wall (theta, s) = p - 2. The set has |P/Q| * p^rank elements and is capped by LOGW_MAX_LAMBDA.""",
    responses={
        200: {"description": "Parameter list returned"},
        400: {"description": "Unsupported type or rank"},
        413: {"description": "Parameter set exceeds the configured cap"}
    }
)
def list_lambdas(
    rs: RootSystemData = Depends(get_root_system),
    p: int = Query(2, ge=2, description="Level p >= 2")
):
    return LambdaListReport(type=rs.name, p=p, entries=reports.lambda_entries(rs, p))
