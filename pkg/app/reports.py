"""Builders turning pipeline results into the pydantic report models shared by the CLI and the API."""
import logging
from typing import List, Optional, Sequence

from app import schemas
from app.characters import CharSide, CompareResult, graded_dimensions
from app.fock_engine import FockBasisVector, GradedKernelReport
from app.lambda_calc import (
    CondScan,
    EpsilonChain,
    LambdaParam,
    check_alcove,
    check_novel,
    cohomology_dim,
    enumerate_lambdas,
    epsilon_chain,
    epsilon_direct,
    epsilon_of,
    make_lambda,
    on_wall,
    recursion_holds,
    table2_generate,
)
from app.relations import RelationReport
from app.root_data import RootSystemData, weyl_from_word, weyl_order
from app.tables import expected_steps
from app.utils import format_fraction

logger = logging.getLogger(__name__)


def to_param(rs: RootSystemData, p: int, spec: schemas.LambdaSpec) -> LambdaParam:
    return make_lambda(rs, p, spec.hat, spec.s)


def root_info(rs: RootSystemData) -> schemas.RootInfo:
    return schemas.RootInfo(
        type=rs.name,
        rank=rs.rank,
        cartan=[list(row) for row in rs.cartan],
        positive_roots=[list(a) for a in rs.positive_roots],
        theta=list(rs.theta),
        rho=list(rs.rho),
        coxeter=rs.coxeter,
        dim_g=rs.dim_g,
        weyl_order=weyl_order(rs),
        minuscule=list(rs.minuscule),
        w0_word=list(rs.w0_word),
        blocks=[list(b) for b in rs.blocks],
    )


def lambda_entries(rs: RootSystemData, p: int) -> List[schemas.LambdaEntry]:
    return [
        schemas.LambdaEntry(
            label=lam.label, hat=lam.hat, s=list(lam.s),
            in_alcove=check_alcove(rs, lam), on_wall=on_wall(rs, lam),
        )
        for lam in enumerate_lambdas(rs, p)
    ]


def chain_report(rs: RootSystemData, chain: EpsilonChain) -> schemas.EpsilonChainReport:
    steps = [
        schemas.EpsilonStep(
            position=n, reflection=i, step=list(step), cumulative=list(prefix), state=state.label,
        )
        for n, (i, step, prefix, state) in enumerate(zip(chain.word, chain.steps, chain.prefixes, chain.states))
    ]
    return schemas.EpsilonChainReport(
        type=rs.name,
        lambda_=chain.lam.label,
        word=list(chain.word),
        steps=steps,
        condition_holds=chain.condition_holds,
        first_violation=chain.first_violation,
        cumulative=list(chain.cumulative),
        step_sum=list(chain.step_sum),
    )


def epsilon_value(rs: RootSystemData, lam: LambdaParam, word: Sequence[int]) -> schemas.EpsilonValue:
    """Both evaluations of eps_lambda(w), and the one-letter recursion peeling off the first letter of w"""
    word = tuple(word)
    epsilon = epsilon_of(rs, lam, word)
    recursion = recursion_holds(rs, lam, weyl_from_word(rs, word[1:]), word[0]) if word else True
    if not recursion:
        logger.warning("recursion fails for %s %s at word %s", rs.name, lam.label, word)
    return schemas.EpsilonValue(
        type=rs.name,
        lambda_=lam.label,
        word=list(word),
        epsilon=list(epsilon),
        direct=list(epsilon_direct(rs, lam, weyl_from_word(rs, word))),
        recursion=recursion,
    )


def step_table_report(rs: RootSystemData, lam: LambdaParam) -> schemas.StepTableReport:
    blocks = table2_generate(rs, lam)
    wall = on_wall(rs, lam)
    expected = expected_steps(rs, wall)
    return schemas.StepTableReport(
        type=rs.name,
        lambda_=lam.label,
        wall=wall,
        blocks=[[list(e) for e in block] for block in blocks],
        expected=[[list(e) for e in block] for block in expected],
        matches=[tuple(b) for b in blocks] == [tuple(b) for b in expected],
    )


def cond_check(rs: RootSystemData, lam: LambdaParam) -> schemas.CondCheck:
    return schemas.CondCheck(
        type=rs.name,
        lambda_=lam.label,
        condition_holds=epsilon_chain(rs, lam).condition_holds,
        in_alcove=check_alcove(rs, lam),
        novel=check_novel(rs, lam, range(1, rs.rank + 1)),
    )


def cond_scan_report(scan: CondScan, novel: Optional[List[LambdaParam]] = None) -> schemas.CondScanReport:
    return schemas.CondScanReport(
        type=scan.type_name,
        p=scan.p,
        total=scan.total,
        alcove=scan.alcove,
        mismatches=[lam.label for lam in scan.mismatches],
        sum_failures=[lam.label for lam in scan.sum_failures],
        non_alcove_passing=[lam.label for lam in scan.non_alcove_passing],
        novel_outside_alcove=[lam.label for lam in novel or []],
    )


def series_report(rs: RootSystemData, side: CharSide) -> schemas.SeriesReport:
    return schemas.SeriesReport(
        type=rs.name,
        lambda_=side.lam.label,
        side=side.which,
        order=format_fraction(side.series.order),
        conjectural=side.conjectural,
        terms=[
            schemas.SeriesTerm(q=format_fraction(e), z=list(z), coefficient=format_fraction(c))
            for e, z, c in side.series.items()
        ],
        graded_dimensions={
            format_fraction(d): format_fraction(c) for d, c in graded_dimensions(rs, side.lam.p, side.series).items()
        },
    )


def compare_report(rs: RootSystemData, lam: LambdaParam, result: CompareResult, conjectural: bool) -> schemas.CompareReport:
    return schemas.CompareReport(
        type=rs.name,
        lambda_=lam.label,
        order=format_fraction(result.order),
        matches=result.matches,
        conjectural=conjectural,
        diffs=[
            schemas.DiffEntry(q=format_fraction(e), z=list(z), lhs=format_fraction(a), rhs=format_fraction(b))
            for e, z, a, b in result.diffs
        ],
    )


def basis_report(rs: RootSystemData, lam: LambdaParam, delta_max, basis: List[FockBasisVector]) -> schemas.BasisReport:
    return schemas.BasisReport(
        type=rs.name,
        lambda_=lam.label,
        delta_max=format_fraction(delta_max),
        size=len(basis),
        vectors=[
            schemas.BasisVectorModel(
                point=list(v.point),
                creations=[list(c) for c in v.creations],
                delta=format_fraction(v.conformal_weight(rs, lam.p)),
            )
            for v in basis
        ],
    )


def kernel_report(rs: RootSystemData, report: GradedKernelReport, refine: bool) -> schemas.KernelReport:
    return schemas.KernelReport(
        type=rs.name,
        lambda_=report.lam.label,
        J=list(report.J),
        entries=[
            schemas.KernelEntryModel(
                delta=format_fraction(e.delta),
                ambient=e.ambient,
                kernel=e.kernel,
                weights={",".join(map(str, w)): n for w, n in sorted(e.weights.items())} if refine else None,
            )
            for e in report.entries
        ],
    )


def relation_report(report: RelationReport) -> schemas.RelationReport:
    return schemas.RelationReport(
        type=report.type_name,
        p=report.p,
        delta_max=format_fraction(report.delta_max),
        passed=report.passed,
        checks=[
            schemas.RelationCheckModel(
                name=c.name,
                checked=c.checked,
                passed=c.passed,
                skipped=c.skipped,
                counterexamples=list(c.counterexamples),
            )
            for c in report.checks
        ],
    )


def dims_report(pairing: int, degree: int) -> schemas.DimsReport:
    mu = (pairing,)
    return schemas.DimsReport(pairing=pairing, degree=degree, dimension=cohomology_dim(mu, 1, degree))

