from typing import Optional

from fastapi import APIRouter, Depends, Query

from app import reports
from app.dependencies import get_lambda, get_root_system, require_bound
from app.errors import ArgumentError
from app.fock_engine import graded_basis, kernel_graded_dims
from app.lambda_calc import LambdaParam
from app.relations import relation_suite
from app.root_data import RootSystemData
from app.schemas import BasisReport, KernelReport, RelationReport

router = APIRouter(prefix="/fock", tags=["Fock"])


@router.get(
    "/{lie_type}/basis",
    response_model=BasisReport,
    summary="Graded Fock basis up to a conformal weight",
    responses={
        200: {"description": "Basis returned"},
        400: {"description": "Invalid parameter or negative deltamax"},
        413: {"description": "Basis exceeds LOGW_MAX_BASIS"}
    }
)
def basis(
    rs: RootSystemData = Depends(get_root_system),
    lam: LambdaParam = Depends(get_lambda),
    deltamax=Depends(require_bound("deltamax", "2"))
):
    return reports.basis_report(rs, lam, deltamax, graded_basis(rs, lam, deltamax))


@router.get(
    "/{lie_type}/kernel",
    response_model=KernelReport,
    summary="Graded dimensions of the screening kernel",
    description="""Dimensions, per conformal weight, of the joint kernel of the narrow screenings F_j, j in J, on the lattice VOA module of lambda. Requires s_j = 0 for every j in J. With `refine=true` each entry is split further by h-weight.""",
    responses={
        200: {"description": "Kernel dimensions returned"},
        400: {"description": "Invalid parameter, bad index, or s_j != 0 for some j in J"},
        413: {"description": "Basis exceeds LOGW_MAX_BASIS"}
    }
)
def kernel(
    rs: RootSystemData = Depends(get_root_system),
    lam: LambdaParam = Depends(get_lambda),
    deltamax=Depends(require_bound("deltamax", "2")),
    J: Optional[str] = Query(None, description="Comma-separated screening indices (default: all)"),
    refine: bool = Query(False, description="Refine by h-weight")
):
    try:
        indices = range(1, rs.rank + 1) if J is None else [int(c) for c in J.split(",") if c.strip()]
    except ValueError:
        raise ArgumentError(f"Invalid index list {J!r}")
    report = kernel_graded_dims(rs, lam, indices, deltamax, refine_by_weight=refine)
    return reports.kernel_report(rs, report, refine)


@router.get(
    "/{lie_type}/relations",
    response_model=RelationReport,
    summary="Exact operator relations on the graded basis",
    description="""Runs the relation suite (weight preservation, [h, f], Serre, integrability, sign commutation, Virasoro, f-power vanishing and injectivity, and the kernel exact sequence where it applies) on every basis vector up to deltamax.""",
    responses={
        200: {"description": "Relation report returned"},
        400: {"description": "Invalid parameter or negative deltamax"},
        413: {"description": "Basis exceeds LOGW_MAX_BASIS"}
    }
)
def relations(
    rs: RootSystemData = Depends(get_root_system),
    lam: LambdaParam = Depends(get_lambda),
    deltamax=Depends(require_bound("deltamax", "2"))
):
    return reports.relation_report(relation_suite(rs, lam.p, deltamax, lam))
