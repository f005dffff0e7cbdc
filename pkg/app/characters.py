"""Conformal data and the two sides of the character identity.

A lattice point x = sqrt(p) * nu has conformal weight

    Delta(x) = (x, x) / (2p) - (1 - 1/p) (x, rho).

Both character sides share one energy E(v) = (p/2) |v - (s + rho)/p|^2 for
v = alpha + hat + rho; E - l/24 equals Delta - c/24 for the corresponding
lattice vector, so a series truncated at Delta <= qmax has order qmax - c/24.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from app.errors import ArgumentError
from app.lambda_calc import LambdaParam, check_alcove
from app.qz_series import (
    QSeries,
    QZSeries,
    alternating_sum,
    eta_inverse_power,
    laurent_divide_exact,
    specialize_z,
    weyl_character,
    weyl_denominator,
)
from app.root_data import (
    RootSystemData,
    Weight,
    apply_weyl,
    dominant_representative,
    enumerate_weyl,
    hat_weights,
    in_root_lattice,
    lattice_ball,
    norm_sq,
    pairing,
    reflect,
)
from app.utils import vec_add

logger = logging.getLogger(__name__)

__all__ = [
    "CharSide",
    "CompareResult",
    "central_charge",
    "compare_sides",
    "conformal_weight",
    "delta",
    "euler_character",
    "graded_dimensions",
    "is_weyl_symmetric",
    "rhs_character",
    "specialize_z",
    "theta_trace",
]


def central_charge(rs: RootSystemData, p: int) -> Fraction:
    return rs.rank + rs.coxeter * rs.dim_g * (2 - p - Fraction(1, p))


def conformal_weight(rs: RootSystemData, p: int, x: Sequence[int]) -> Fraction:
    return norm_sq(rs, x) / (2 * p) - (1 - Fraction(1, p)) * pairing(rs, x, rs.rho)


def delta(rs: RootSystemData, p: int, beta: Sequence[int], lam: LambdaParam) -> Fraction:
    """Delta of the lattice vector -sqrt(p) beta + s/sqrt(p)"""
    x = tuple(-p * b + s for b, s in zip(beta, lam.s))
    return conformal_weight(rs, p, x)


def _series_order(rs: RootSystemData, p: int, qmax) -> Fraction:
    qmax = Fraction(qmax)
    if qmax < 0:
        raise ArgumentError(f"qmax must be non-negative, got {qmax}")
    return qmax - central_charge(rs, p) / 24


def _energy(rs: RootSystemData, lam: LambdaParam, v: Sequence) -> Fraction:
    center = tuple(Fraction(s + 1, lam.p) for s in lam.s)
    diff = tuple(a - c for a, c in zip(v, center))
    return Fraction(lam.p, 2) * norm_sq(rs, diff)


def _energy_bound(rs: RootSystemData, lam: LambdaParam, qmax) -> Fraction:
    return _series_order(rs, lam.p, qmax) + Fraction(rs.rank, 24)


def _alpha_ball(rs: RootSystemData, lam: LambdaParam, bound: Fraction) -> List[Weight]:
    """alpha in Q with E(alpha + hat + rho) <= bound, by increasing |alpha|^2"""
    hat = hat_weights(rs)[lam.hat]
    center = tuple(Fraction(s + 1, lam.p) - h - 1 for s, h in zip(lam.s, hat))
    return lattice_ball(rs, center, 2 * bound / lam.p)


@dataclass
class CharSide:
    which: str
    lam: LambdaParam
    qmax: Fraction
    series: QZSeries
    alphas: List[Weight] = field(default_factory=list)
    conjectural: bool = False


@dataclass
class CompareResult:
    order: Optional[Fraction]
    diffs: List[Tuple[Fraction, Weight, Fraction, Fraction]] = field(default_factory=list)

    @property
    def matches(self) -> bool:
        return not self.diffs


def theta_trace(rs: RootSystemData, lam: LambdaParam, alpha: Sequence[int], qmax) -> QSeries:
    """Alternating theta sum over W at alpha + hat, divided by eta^rank, through Delta <= qmax"""
    alpha = tuple(alpha)
    if not in_root_lattice(rs, alpha):
        raise ArgumentError(f"alpha must lie in the root lattice, got {alpha}")
    top = vec_add(alpha, hat_weights(rs)[lam.hat])
    if any(c < 0 for c in top):
        raise ArgumentError(f"alpha + hat must be dominant, got {top}")
    bound = _energy_bound(rs, lam, qmax)
    u = vec_add(top, rs.rho)
    terms: Dict[Fraction, int] = {}
    for w in enumerate_weyl(rs):
        e = _energy(rs, lam, apply_weyl(rs, w, u))
        if e <= bound:
            terms[e] = terms.get(e, 0) + w.sign
    theta = QSeries(terms, bound)
    return theta * eta_inverse_power(rs.rank, _series_order(rs, lam.p, qmax))


def rhs_character(rs: RootSystemData, lam: LambdaParam, qmax, unsafe: bool = False) -> CharSide:
    """Sum of Weyl characters times theta traces over alpha in Q with alpha + hat dominant"""
    conjectural = not check_alcove(rs, lam)
    if conjectural:
        if not unsafe:
            raise ArgumentError(f"{lam.label} is outside the alcove for {rs.name}, p={lam.p}")
        logger.warning("rhs character for %s %s outside the alcove: result is conjectural", rs.name, lam.label)
    order = _series_order(rs, lam.p, qmax)
    bound = _energy_bound(rs, lam, qmax)
    hat = hat_weights(rs)[lam.hat]
    total = QZSeries({}, order)
    used = []
    for alpha in _alpha_ball(rs, lam, bound):
        top = vec_add(alpha, hat)
        if any(c < 0 for c in top):
            continue
        used.append(alpha)
        total = total + weyl_character(rs, top) * theta_trace(rs, lam, alpha, qmax)
    logger.info("rhs character %s %s: %d dominant terms", rs.name, lam.label, len(used))
    return CharSide("rhs", lam, Fraction(qmax), total, used, conjectural)


def euler_character(rs: RootSystemData, lam: LambdaParam, qmax) -> CharSide:
    """Fixed-point sum over alpha in Q and W, divided exactly by the Weyl denominator"""
    order = _series_order(rs, lam.p, qmax)
    bound = _energy_bound(rs, lam, qmax)
    hat = hat_weights(rs)[lam.hat]
    alphas = _alpha_ball(rs, lam, bound)
    alt_cache: Dict[Weight, Dict[Weight, int]] = {}
    triples = []
    for alpha in alphas:
        v = vec_add(vec_add(alpha, hat), rs.rho)
        e = _energy(rs, lam, v)
        dominant, sign = dominant_representative(rs, v)
        if 0 in dominant:
            continue
        if dominant not in alt_cache:
            alt_cache[dominant] = alternating_sum(rs, dominant)
        triples.extend((z, e, sign * c) for z, c in alt_cache[dominant].items())
    numerator = QZSeries.from_triples(triples, bound)
    quotient = laurent_divide_exact(rs, numerator, weyl_denominator(rs))
    series = quotient * eta_inverse_power(rs.rank, order)
    logger.info("euler character %s %s: %d lattice points", rs.name, lam.label, len(alphas))
    return CharSide("euler", lam, Fraction(qmax), series, alphas)


def compare_sides(a: CharSide, b: CharSide) -> CompareResult:
    if a.lam != b.lam or a.series.order != b.series.order:
        raise ArgumentError("Character sides must share lambda and truncation order")
    keys = {(e, z) for e, z, _ in a.series.items()} | {(e, z) for e, z, _ in b.series.items()}
    result = CompareResult(order=a.series.order)
    for e, z in sorted(keys):
        lhs, rhs = a.series.coefficient(z, e), b.series.coefficient(z, e)
        if lhs != rhs:
            result.diffs.append((e, z, lhs, rhs))
    return result


def graded_dimensions(rs: RootSystemData, p: int, series: QZSeries) -> Dict[Fraction, Fraction]:
    """Delta -> coefficient of the z = 1 specialization"""
    shift = central_charge(rs, p) / 24
    return {e + shift: c for e, c in sorted(specialize_z(series).terms.items())}


def is_weyl_symmetric(rs: RootSystemData, series: QZSeries) -> bool:
    for e, z, c in series.items():
        for i in range(1, rs.rank + 1):
            if series.coefficient(reflect(rs, i, z), e) != c:
                return False
    return True
