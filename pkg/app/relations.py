"""Exact operator-relation checks on the graded Fock basis."""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, List, Optional, Tuple

from app.characters import central_charge
from app.errors import CertificationError, UnsupportedSectorError
from app.fock_engine import (
    FockBasisVector,
    FockElement,
    basis_block_matrix,
    f_power,
    graded_basis,
    graded_blocks,
    h_action,
    kernel_graded_dims,
    narrow_F,
    screening_f,
    virasoro_mode,
)
from app.lambda_calc import LambdaParam, star_action, vacuum
from app.linalg import nullity
from app.quad import QuadScalar
from app.root_data import RootSystemData
from app.utils import vec_add

logger = logging.getLogger(__name__)

MAX_COUNTEREXAMPLES = 5


@dataclass
class RelationCheck:
    name: str
    checked: int = 0
    counterexamples: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    @property
    def skipped(self) -> bool:
        """No case of the relation applies to this parameter"""
        return not self.checked

    def record(self, ok: bool, detail: Callable[[], str]) -> None:
        self.checked += 1
        if not ok and len(self.counterexamples) < MAX_COUNTEREXAMPLES:
            self.counterexamples.append(detail())


@dataclass
class RelationReport:
    type_name: str
    p: int
    delta_max: Fraction
    checks: List[RelationCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def skipped(self) -> List[str]:
        return [c.name for c in self.checks if c.skipped]


def _describe(vec: FockBasisVector) -> str:
    return f"x={vec.point} modes={list(vec.creations)}"


def _weight_preservation(rs, lam, basis) -> RelationCheck:
    check = RelationCheck("weight preservation")
    p = lam.p
    for vec in basis:
        v = FockElement.basis(p, vec)
        weight = vec.conformal_weight(rs, p)
        for i in range(1, rs.rank + 1):
            ops = [("f", screening_f)] + ([("F", narrow_F)] if lam.s[i - 1] == 0 else [])
            for label, op in ops:
                try:
                    image = op(rs, i, v)
                    ok = all(t.conformal_weight(rs, p) == weight for t in image.terms)
                except CertificationError:
                    ok = False
                check.record(ok, lambda: f"{label}_{i} on {_describe(vec)}")
            image = h_action(rs, i, lam, rs.zero, v)
            check.record(set(image.terms) <= {vec}, lambda: f"h_{i} on {_describe(vec)}")
    return check


def _h_f_commutation(rs, lam, basis) -> RelationCheck:
    check = RelationCheck("[h_i, f_j] = -c_ij f_j")
    p = lam.p
    for vec in basis:
        v = FockElement.basis(p, vec)
        for j in range(1, rs.rank + 1):
            fv = screening_f(rs, j, v)
            for i in range(1, rs.rank + 1):
                lhs = h_action(rs, i, lam, rs.zero, fv) - screening_f(rs, j, h_action(rs, i, lam, rs.zero, v))
                rhs = fv.scale(QuadScalar(-rs.cartan[i - 1][j - 1], 0, p))
                check.record(lhs == rhs, lambda: f"i={i} j={j} on {_describe(vec)}")
    return check


def _serre(rs, p) -> RelationCheck:
    check = RelationCheck("Serre vectors f_i^(1-c_ij)|sqrt(p) alpha_j> = 0")
    for i in range(1, rs.rank + 1):
        for j in range(1, rs.rank + 1):
            if i == j:
                continue
            top = FockElement.top(p, tuple(p * a for a in rs.simple_root(j)))
            power = 1 - rs.cartan[i - 1][j - 1]
            check.record(f_power(rs, i, power, top).is_zero(), lambda: f"i={i} j={j}")
    return check


def vanishing_power(rs: RootSystemData, p: int, vec: FockBasisVector, i: int) -> int:
    """Least N with Delta(x + N p alpha_i) above the weight of vec"""
    weight = vec.conformal_weight(rs, p)
    step = tuple(p * a for a in rs.simple_root(i))
    n, point = 1, vec_add(vec.point, step)
    while FockBasisVector(point).conformal_weight(rs, p) <= weight:
        n += 1
        point = vec_add(point, step)
    return n


def _integrability(rs, p, basis) -> RelationCheck:
    check = RelationCheck("integrability f_i^N x = 0")
    for vec in basis:
        v = FockElement.basis(p, vec)
        for i in range(1, rs.rank + 1):
            n = vanishing_power(rs, p, vec, i)
            check.record(f_power(rs, i, n, v).is_zero(), lambda: f"i={i} N={n} on {_describe(vec)}")
    return check


def _sign_commutation(rs, lam, basis) -> RelationCheck:
    check = RelationCheck("F_i f_j = (-1)^c_ij f_j F_i")
    p = lam.p
    narrow = [i for i in range(1, rs.rank + 1) if lam.s[i - 1] == 0]
    for vec in basis:
        v = FockElement.basis(p, vec)
        for i in narrow:
            Fv = narrow_F(rs, i, v)
            for j in range(1, rs.rank + 1):
                sign = -1 if rs.cartan[i - 1][j - 1] % 2 else 1
                lhs = narrow_F(rs, i, screening_f(rs, j, v))
                rhs = screening_f(rs, j, Fv).scale(QuadScalar(sign, 0, p))
                check.record(lhs == rhs, lambda: f"i={i} j={j} on {_describe(vec)}")
    return check


def _virasoro(rs, p, basis) -> List[RelationCheck]:
    l0 = RelationCheck("L_0 = conformal weight")
    for vec in basis:
        v = FockElement.basis(p, vec)
        expected = v.scale(QuadScalar(vec.conformal_weight(rs, p), 0, p))
        l0.record(virasoro_mode(rs, 0, v) == expected, lambda: _describe(vec))
    central = RelationCheck("L_2 L_-2 |0> = c/2 |0>")
    vac = FockElement.top(p, rs.zero)
    lhs = virasoro_mode(rs, 2, virasoro_mode(rs, -2, vac))
    c = central_charge(rs, p)
    central.record(lhs == vac.scale(QuadScalar(c / 2, 0, p)), lambda: f"expected c={c}")
    return [l0, central]


def _sector_tops(basis) -> List[FockBasisVector]:
    return [vec for vec in basis if not vec.creations]


def _f_power_nodes(rs, lam) -> List[int]:
    """Nodes j with s_j <= p - 2, where the f-power relations hold"""
    return [j for j in range(1, rs.rank + 1) if lam.s[j - 1] <= lam.p - 2]


def _f_power_vanishing(rs, lam, basis) -> RelationCheck:
    check = RelationCheck("f_j^(beta_j+1)|x> = 0")
    p = lam.p
    for vec in _sector_tops(basis):
        beta = vec.beta(p)
        for j in _f_power_nodes(rs, lam):
            if beta[j - 1] < 0:
                continue
            image = f_power(rs, j, beta[j - 1] + 1, FockElement.basis(p, vec))
            check.record(image.is_zero(), lambda: f"j={j} on {_describe(vec)}")
    return check


def _f_power_injective(rs, lam, basis) -> RelationCheck:
    check = RelationCheck("f_j^beta_j injective on sectors")
    p = lam.p
    for (_, x), block in sorted(graded_blocks(rs, p, basis).items()):
        beta = block[0].beta(p)
        for j in _f_power_nodes(rs, lam):
            if beta[j - 1] < 0:
                continue
            power = beta[j - 1]
            matrix = basis_block_matrix(p, block, [lambda v, j=j, power=power: f_power(rs, j, power, v)])
            check.record(nullity(matrix, len(block)) == 0, lambda: f"j={j} sector {x} ({len(block)} vectors)")
    return check


def exact_sequence_dims(
    rs: RootSystemData, lam: LambdaParam, j: int, delta_max
) -> List[Tuple[Fraction, int, int, int]]:
    """(Delta, ambient(lambda), kernel(lambda), kernel(sigma_j * lambda)) for the narrow screening F_j"""
    partner = star_action(rs, lam, j)[0]
    if lam.s[j - 1] or partner.s[j - 1]:
        raise UnsupportedSectorError(f"Both {lam.label} and {partner.label} need s_{j} = 0")
    ours = kernel_graded_dims(rs, lam, (j,), delta_max)
    theirs = kernel_graded_dims(rs, partner, (j,), delta_max).kernel_dims()
    rows = []
    for entry in ours.entries:
        rows.append((entry.delta, entry.ambient, entry.kernel, theirs.get(entry.delta, 0)))
    return rows


def _exact_sequence(rs, lam, delta_max) -> RelationCheck:
    check = RelationCheck("ambient(lambda) = ker(lambda) + ker(sigma_j * lambda)")
    for j in range(1, rs.rank + 1):
        partner = star_action(rs, lam, j)[0]
        if lam.s[j - 1] or partner.s[j - 1]:
            continue
        for d, ambient, ker, ker_partner in exact_sequence_dims(rs, lam, j, delta_max):
            check.record(
                ambient == ker + ker_partner,
                lambda: f"j={j} Delta={d}: {ambient} != {ker} + {ker_partner}",
            )
    return check


def relation_suite(
    rs: RootSystemData, p: int, delta_max=3, lam: Optional[LambdaParam] = None, cap: Optional[int] = None
) -> RelationReport:
    lam = vacuum(rs, p) if lam is None else lam
    delta_max = Fraction(delta_max)
    basis = graded_basis(rs, lam, delta_max, cap)
    report = RelationReport(type_name=rs.name, p=p, delta_max=delta_max)
    report.checks.append(_weight_preservation(rs, lam, basis))
    report.checks.append(_h_f_commutation(rs, lam, basis))
    report.checks.append(_serre(rs, p))
    report.checks.append(_integrability(rs, p, basis))
    report.checks.append(_sign_commutation(rs, lam, basis))
    report.checks.extend(_virasoro(rs, p, basis))
    report.checks.append(_f_power_vanishing(rs, lam, basis))
    report.checks.append(_f_power_injective(rs, lam, basis))
    report.checks.append(_exact_sequence(rs, lam, delta_max))
    for check in report.checks:
        if check.skipped:
            logger.info("%s: no applicable case for %s, skipped", check.name, lam.label)
            continue
        level = logging.INFO if check.passed else logging.WARNING
        logger.log(level, "%s: %d checked, %d counterexamples", check.name, check.checked, len(check.counterexamples))
    return report

