from fastapi import Depends, Path, Query

from app.errors import ArgumentError
from app.lambda_calc import LambdaParam, make_lambda
from app.root_data import RootSystemData, parse_type
from app.schemas import LambdaSpec
from app.utils import parse_fraction


async def get_root_system(
    lie_type: str = Path(..., description="Simply-laced type and rank, e.g. A2, D4, E6", examples=["A2"])
) -> RootSystemData:
    return parse_type(lie_type)


async def get_lambda(
    rs: RootSystemData = Depends(get_root_system),
    p: int = Query(2, ge=2, description="Level p >= 2"),
    lambda_: str = Query("0", alias="lambda", description="'0' or 'hat=<index|0>,s=<c1,...,cl>'"),
) -> LambdaParam:
    """
    Resolve the (type, p, lambda) triple shared by most endpoints.

    Raises:
        ArgumentError: Malformed lambda text; answered with 400 by the app handler
    """
    try:
        spec = LambdaSpec.parse(lambda_)
    except ValueError as exc:
        raise ArgumentError(str(exc))
    return make_lambda(rs, p, spec.hat, spec.s)


def require_bound(name: str, default: str):
    """
    Dependency factory for the exact rational bounds qmax / deltamax.

    Args:
        name: Query parameter name
        default: Default bound as text

    Returns:
        Callable dependency that returns the bound as a Fraction
    """
    async def bound_parser(value: str = Query(default, alias=name, description=f"Exact rational bound {name}")):
        try:
            bound = parse_fraction(value)
        except ValueError as exc:
            raise ArgumentError(f"Invalid {name}: {exc}")
        if bound < 0:
            raise ArgumentError(f"{name} must be non-negative, got {value}")
        return bound

    return bound_parser
