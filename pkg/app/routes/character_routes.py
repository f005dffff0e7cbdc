from fastapi import APIRouter, Depends, Query

from app import reports
from app.characters import compare_sides, euler_character, rhs_character
from app.dependencies import get_lambda, get_root_system, require_bound
from app.lambda_calc import LambdaParam
from app.root_data import RootSystemData
from app.schemas import CharacterSide, CompareReport, SeriesReport

router = APIRouter(prefix="/characters", tags=["Characters"])


@router.get(
    "/{lie_type}/series",
    response_model=SeriesReport,
    summary="One side of the character identity",
    description="""Truncated q,z-series of either side: `euler` is the Weyl-alternating sum of Fock characters divided by the Weyl denominator, `rhs` the sum of theta-traces times Weyl characters. Exponents of q are L_0 - c/24; the series is exact below the reported order.""",
    responses={
        200: {"description": "Series returned"},
        400: {"description": "Invalid parameter, negative qmax, or rhs outside the alcove without unsafe"},
        413: {"description": "Weyl group exceeds the configured cap"}
    }
)
def series(
    side: CharacterSide = Query(CharacterSide.EULER, description="Which side to compute"),
    rs: RootSystemData = Depends(get_root_system),
    lam: LambdaParam = Depends(get_lambda),
    qmax=Depends(require_bound("qmax", "4")),
    unsafe: bool = Query(False, description="Allow the rhs outside the alcove (marked conjectural)")
):
    if side == CharacterSide.EULER:
        result = euler_character(rs, lam, qmax)
    else:
        result = rhs_character(rs, lam, qmax, unsafe=unsafe)
    return reports.series_report(rs, result)


@router.get(
    "/{lie_type}/compare",
    response_model=CompareReport,
    summary="Compare both sides of the character identity",
    description="""Computes both sides to the same order and lists every (q, z) coefficient where they differ. An empty diff list means the identity holds up to qmax.""",
    responses={
        200: {"description": "Comparison returned"},
        400: {"description": "Invalid parameter, negative qmax, or outside the alcove without unsafe"},
        413: {"description": "Weyl group exceeds the configured cap"}
    }
)
def compare(
    rs: RootSystemData = Depends(get_root_system),
    lam: LambdaParam = Depends(get_lambda),
    qmax=Depends(require_bound("qmax", "4")),
    unsafe: bool = Query(False, description="Allow the rhs outside the alcove (marked conjectural)")
):
    """
    Compare the Euler-characteristic side with the theta-function side.

    Returns:
        CompareReport: order, match flag and the differing coefficients
    """
    rhs = rhs_character(rs, lam, qmax, unsafe=unsafe)
    result = compare_sides(euler_character(rs, lam, qmax), rhs)
    return reports.compare_report(rs, lam, result, rhs.conjectural)
