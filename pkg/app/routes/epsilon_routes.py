from typing import List, Optional

from fastapi import APIRouter, Depends, Query

from app import reports
from app.dependencies import get_lambda, get_root_system
from app.errors import ArgumentError
from app.lambda_calc import LambdaParam, condequiv_scan, epsilon_chain, novel_scan
from app.root_data import RootSystemData
from app.schemas import CondCheck, CondScanReport, EpsilonChainReport, EpsilonValue, StepTableReport

router = APIRouter(prefix="/epsilon", tags=["Epsilon"])


def _word(text: Optional[str]) -> Optional[List[int]]:
    if text is None:
        return None
    try:
        return [int(c) for c in text.split(",") if c.strip()]
    except ValueError:
        raise ArgumentError(f"Invalid word {text!r}: expected comma-separated simple reflection indices")


@router.get(
    "/{lie_type}/chain",
    response_model=EpsilonChainReport,
    summary="Epsilon chain along a reduced word",
    description="""Step-by-step values eps(sigma_i) along a reduced word in acting order (default: the fixed reduced word of w0), the running cumulative epsilon, the visited parameters, and whether the chain condition (every step pairs to zero with the previous cumulative value) holds.""",
    responses={
        200: {"description": "Chain returned"},
        400: {"description": "Invalid parameter or word not reduced"}
    }
)
def chain(
    rs: RootSystemData = Depends(get_root_system),
    lam: LambdaParam = Depends(get_lambda),
    word: Optional[str] = Query(None, description="Comma-separated reduced word, e.g. 1,2,1")
):
    return reports.chain_report(rs, epsilon_chain(rs, lam, _word(word)))


@router.get(
    "/{lie_type}/of",
    response_model=EpsilonValue,
    summary="eps_lambda(w) for one Weyl element",
    description="""Cocycle value of a reduced word, computed both through the chain and directly from the dot action, so the two can be compared.""",
    responses={
        200: {"description": "Value returned"},
        400: {"description": "Invalid parameter or word not reduced"}
    }
)
def epsilon_value(
    rs: RootSystemData = Depends(get_root_system),
    lam: LambdaParam = Depends(get_lambda),
    word: str = Query(..., description="Comma-separated reduced word")
):
    return reports.epsilon_value(rs, lam, _word(word))


@router.get(
    "/{lie_type}/steps",
    response_model=StepTableReport,
    summary="Generated epsilon steps against the reference table",
    description="""Epsilon steps along w0 grouped into blocks, compared with the closed-form block table for the type (wall-adjusted on the alcove wall).""",
    responses={
        200: {"description": "Comparison returned"},
        400: {"description": "Invalid parameter"}
    }
)
def step_table(
    rs: RootSystemData = Depends(get_root_system),
    lam: LambdaParam = Depends(get_lambda)
):
    return reports.step_table_report(rs, lam)


@router.get(
    "/{lie_type}/check",
    response_model=CondCheck,
    summary="Chain condition and alcove flags for one parameter",
    responses={
        200: {"description": "Flags returned"},
        400: {"description": "Invalid parameter"}
    }
)
def check(
    rs: RootSystemData = Depends(get_root_system),
    lam: LambdaParam = Depends(get_lambda)
):
    return reports.cond_check(rs, lam)


@router.get(
    "/{lie_type}/scan",
    response_model=CondScanReport,
    summary="Exhaustive scan of the chain condition",
    description="""Checks over the whole parameter set that the chain condition holds exactly on the alcove and that the cumulative epsilon equals the sum of steps there. Optionally lists parameters outside the alcove that satisfy the weaker novel condition.""",
    responses={
        200: {"description": "Scan returned"},
        400: {"description": "Unsupported type or rank"},
        413: {"description": "Parameter set exceeds the configured cap"}
    }
)
def scan(
    rs: RootSystemData = Depends(get_root_system),
    p: int = Query(2, ge=2, description="Level p >= 2"),
    novel: bool = Query(False, description="Also list novel parameters outside the alcove")
):
    return reports.cond_scan_report(condequiv_scan(rs, p), novel_scan(rs, p) if novel else None)
