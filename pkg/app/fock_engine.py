"""Graded Fock spaces of the lattice vertex algebra V_{sqrt(p)Q + lambda} and the operators on them.

A sector is stored by its scaled lattice point x = sqrt(p) * nu, an integer
weight.  For a parameter lambda = (p, hat, s) the sectors are

    x = -p * beta + s,    beta in hat + Q,

and a basis vector is a sector together with a sorted multiset of creation
modes (j, n), meaning the product of (alpha_j)_{(-n)} applied to |nu>.  Its
conformal weight is Delta(x) + sum of n.

Vertex operators are taken with trivial cocycle.  The zero mode of the
lattice vector mu = y / sqrt(p) on f(x_{j,n}) |nu> is

    sum_b S_{b-1-m} * [u^b] f(x_{j,n} - c_j u^n)   in the sector x + y,

where m = (x, y)/p, c_j = y_j / sqrt(p) and S_a are the elementary Schur
polynomials of exp(sum_k mu(-k) w^k / k).
"""
import logging
import math
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from app.characters import conformal_weight
from app.config import get_settings
from app.errors import ArgumentError, CertificationError, ResourceLimitError, UnsupportedSectorError
from app.lambda_calc import LambdaParam
from app.linalg import nullity
from app.qz_series import colored_partitions
from app.quad import QuadScalar
from app.root_data import RootSystemData, Weight, hat_weights, lattice_ball, norm_sq, pairing, root_coords
from app.utils import vec_add

logger = logging.getLogger(__name__)

Creation = Tuple[int, int]
Monomial = Tuple[Creation, ...]
Poly = Dict[Monomial, QuadScalar]


@dataclass(frozen=True, order=True)
class FockBasisVector:
    point: Weight
    creations: Monomial = ()

    @property
    def depth(self) -> int:
        return sum(n for _, n in self.creations)

    def beta(self, p: int) -> Weight:
        return tuple(-(c // p) for c in self.point)

    def s(self, p: int) -> Weight:
        return tuple(c % p for c in self.point)

    def conformal_weight(self, rs: RootSystemData, p: int) -> Fraction:
        return conformal_weight(rs, p, self.point) + self.depth


class FockElement:
    """Finite linear combination of basis vectors with QuadScalar coefficients"""

    __slots__ = ("p", "terms")

    def __init__(self, p: int, terms: Optional[Dict[FockBasisVector, QuadScalar]] = None):
        self.p = p
        self.terms: Dict[FockBasisVector, QuadScalar] = {}
        for vec, c in (terms or {}).items():
            c = c if isinstance(c, QuadScalar) else QuadScalar(c, 0, p)
            if not c.is_zero():
                self.terms[vec] = c

    @classmethod
    def basis(cls, p: int, vec: FockBasisVector) -> "FockElement":
        return cls(p, {vec: QuadScalar(1, 0, p)})

    @classmethod
    def top(cls, p: int, point: Sequence[int]) -> "FockElement":
        return cls.basis(p, FockBasisVector(tuple(point)))

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "FockElement") -> "FockElement":
        terms = dict(self.terms)
        for vec, c in other.terms.items():
            terms[vec] = terms[vec] + c if vec in terms else c
        return FockElement(self.p, terms)

    def __neg__(self) -> "FockElement":
        return FockElement(self.p, {vec: -c for vec, c in self.terms.items()})

    def __sub__(self, other: "FockElement") -> "FockElement":
        return self + (-other)

    def scale(self, c) -> "FockElement":
        return FockElement(self.p, {vec: v * c for vec, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, FockElement) and self.p == other.p and self.terms == other.terms

    def __repr__(self) -> str:
        return f"FockElement({len(self.terms)} terms, p={self.p})"


def _poly_mul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            mono = tuple(sorted(ma + mb))
            value = ca * cb
            out[mono] = out[mono] + value if mono in out else value
    return {m: c for m, c in out.items() if not c.is_zero()}


def _poly_add_into(target: Poly, source: Poly, factor: QuadScalar) -> None:
    for mono, c in source.items():
        value = c * factor
        target[mono] = target[mono] + value if mono in target else value


def _shift_expand(creations: Monomial, c: Dict[int, QuadScalar], p: int) -> Dict[int, Poly]:
    """[u^b] of prod over creations of (x_{j,n} - c_j u^n), as b -> polynomial"""
    result: Dict[int, Poly] = {0: {(): QuadScalar(1, 0, p)}}
    counts: Dict[Creation, int] = defaultdict(int)
    for creation in creations:
        counts[creation] += 1
    for (j, n), e in sorted(counts.items()):
        shift = c.get(j)
        factor: Dict[int, Poly] = {}
        for k in range(e + 1 if shift is not None else 1):
            coeff = QuadScalar(math.comb(e, k), 0, p)
            for _ in range(k):
                coeff = coeff * (-shift)
            factor[n * k] = {((j, n),) * (e - k): coeff}
        nxt: Dict[int, Poly] = {}
        for b1, p1 in result.items():
            for b2, p2 in factor.items():
                bucket = nxt.setdefault(b1 + b2, {})
                _poly_add_into(bucket, _poly_mul(p1, p2), QuadScalar(1, 0, p))
        result = {b: {m: v for m, v in poly.items() if not v.is_zero()} for b, poly in nxt.items()}
    return result


class _SchurCache:
    """Elementary Schur polynomials of exp(sum_k mu(-k) w^k / k) for mu = y / sqrt(p)"""

    def __init__(self, rs: RootSystemData, p: int, y: Sequence[int]):
        self.p = p
        self.coeffs = [(i + 1, QuadScalar(0, r / p, p)) for i, r in enumerate(root_coords(rs, y)) if r]
        self.values: List[Poly] = [{(): QuadScalar(1, 0, p)}]

    def mode(self, k: int) -> Poly:
        return {((i, k),): c for i, c in self.coeffs}

    def __getitem__(self, a: int) -> Poly:
        while len(self.values) <= a:
            n = len(self.values)
            total: Poly = {}
            for k in range(1, n + 1):
                _poly_add_into(total, _poly_mul(self.mode(k), self.values[n - k]), QuadScalar(Fraction(1, n), 0, self.p))
            self.values.append({m: c for m, c in total.items() if not c.is_zero()})
        return self.values[a]


def zero_mode(rs: RootSystemData, y: Sequence[int], x: FockElement) -> FockElement:
    """Zero mode of the lattice vector y / sqrt(p) (trivial cocycle)"""
    p = x.p
    y = tuple(y)
    shifts = {j + 1: QuadScalar(0, Fraction(v, p), p) for j, v in enumerate(y) if v}
    schur = _SchurCache(rs, p, y)
    out: Dict[FockBasisVector, QuadScalar] = {}
    for vec, coeff in x.terms.items():
        pair = pairing(rs, vec.point, y) / p
        if pair.denominator != 1:
            raise ArgumentError(f"Zero mode of {y} is not defined on the sector {vec.point}: pairing {pair}")
        m = int(pair)
        target = vec_add(vec.point, y)
        weight = vec.conformal_weight(rs, p)
        for b, poly in _shift_expand(vec.creations, shifts, p).items():
            a = b - 1 - m
            if a < 0 or not poly:
                continue
            for mono, value in _poly_mul(schur[a], poly).items():
                image = FockBasisVector(target, mono)
                if image.conformal_weight(rs, p) != weight:
                    raise CertificationError(f"Zero mode of {y} moved {vec} off conformal weight {weight}")
                value = value * coeff
                out[image] = out[image] + value if image in out else value
    return FockElement(p, out)


def screening_f(rs: RootSystemData, i: int, x: FockElement) -> FockElement:
    """f_i, the zero mode of sqrt(p) alpha_i"""
    return zero_mode(rs, tuple(x.p * a for a in rs.simple_root(i)), x)


def narrow_F(rs: RootSystemData, i: int, x: FockElement) -> FockElement:
    """F_{i,0}, the zero mode of -alpha_i / sqrt(p); defined on sectors with s_i = 0"""
    for vec in x.terms:
        if vec.point[i - 1] % x.p:
            raise UnsupportedSectorError(
                f"Narrow screening F_{i} needs s_{i} = 0, sector {vec.point} has s_{i} = {vec.point[i - 1] % x.p}"
            )
    return zero_mode(rs, tuple(-a for a in rs.simple_root(i)), x)


def f_power(rs: RootSystemData, i: int, k: int, x: FockElement) -> FockElement:
    for _ in range(k):
        if x.is_zero():
            break
        x = screening_f(rs, i, x)
    return x


def heisenberg_act(rs: RootSystemData, i: int, n: int, x: FockElement) -> FockElement:
    """(alpha_i)_{(n)} with [a_(m), b_(k)] = m delta_{m+k,0} (a, b)"""
    p = x.p
    out: Dict[FockBasisVector, QuadScalar] = {}

    def add(vec: FockBasisVector, value: QuadScalar) -> None:
        out[vec] = out[vec] + value if vec in out else value

    for vec, coeff in x.terms.items():
        if n < 0:
            add(FockBasisVector(vec.point, tuple(sorted(vec.creations + ((i, -n),)))), coeff)
        elif n == 0:
            add(vec, coeff * QuadScalar(0, Fraction(vec.point[i - 1], p), p))
        else:
            for pos, (j, mode) in enumerate(vec.creations):
                if mode != n or not rs.cartan[i - 1][j - 1]:
                    continue
                rest = vec.creations[:pos] + vec.creations[pos + 1:]
                add(FockBasisVector(vec.point, rest), coeff * (n * rs.cartan[i - 1][j - 1]))
    return FockElement(p, out)


def h_action(rs: RootSystemData, i: int, lam: LambdaParam, mu: Sequence[int], x: FockElement) -> FockElement:
    """h_{i,lambda}(mu): multiplies the sector -sqrt(p) beta + lambda-bar by (alpha_i, beta + mu)"""
    out = {}
    for vec, coeff in x.terms.items():
        if vec.s(x.p) != lam.s:
            raise ArgumentError(f"Sector {vec.point} does not belong to {lam.label}")
        out[vec] = coeff * (vec.beta(x.p)[i - 1] + mu[i - 1])
    return FockElement(x.p, out)


def _mode_combination(rs: RootSystemData, coords: Sequence[Fraction], n: int, x: FockElement) -> FockElement:
    total = FockElement(x.p)
    for i, c in enumerate(coords, start=1):
        if c:
            total = total + heisenberg_act(rs, i, n, x).scale(QuadScalar(c, 0, x.p))
    return total


def virasoro_mode(rs: RootSystemData, n: int, x: FockElement) -> FockElement:
    """L_n of omega = 1/2 sum c^{ij} alpha_i(-1) alpha_j(-1)|0> + Q0 rho(-2)|0>, Q0 = sqrt(p) - 1/sqrt(p)"""
    p = x.p
    if x.is_zero():
        return x
    top = max(vec.depth for vec in x.terms)
    half = QuadScalar(Fraction(1, 2), 0, p)
    total = FockElement(p)
    for m in range(n - top, top + 1):
        k = n - m
        for i in range(1, rs.rank + 1):
            for j in range(1, rs.rank + 1):
                cij = rs.cartan_inv[i - 1][j - 1]
                if not cij:
                    continue
                if k >= m:
                    term = heisenberg_act(rs, i, m, heisenberg_act(rs, j, k, x))
                else:
                    term = heisenberg_act(rs, j, k, heisenberg_act(rs, i, m, x))
                total = total + term.scale(half * cij)
    q0 = QuadScalar(0, 1 - Fraction(1, p), p)
    rho_mode = _mode_combination(rs, root_coords(rs, rs.rho), n, x)
    return total - rho_mode.scale(q0 * (n + 1))


def _creation_monomials(rank_: int, depth: int, bound: Tuple[int, int] = None) -> Iterator[Monomial]:
    if depth == 0:
        yield ()
        return
    top_mode = depth if bound is None else min(depth, bound[0])
    for n in range(top_mode, 0, -1):
        for j in range(rank_, 0, -1):
            if bound is not None and (n, j) > bound:
                continue
            for rest in _creation_monomials(rank_, depth - n, (n, j)):
                yield ((j, n),) + rest


def creation_monomials(rank_: int, depth: int) -> List[Monomial]:
    """Sorted multisets of (direction, mode) with total mode equal to depth"""
    return sorted(tuple(sorted(m)) for m in _creation_monomials(rank_, depth))


def sector_points(rs: RootSystemData, lam: LambdaParam, delta_max) -> List[Tuple[Fraction, Weight]]:
    """(Delta, x) for the sectors of V_{sqrt(p)Q + lambda} with Delta(x) <= delta_max"""
    p = lam.p
    delta_max = Fraction(delta_max)
    hat = hat_weights(rs)[lam.hat]
    offset = (p - 1) ** 2 * norm_sq(rs, rs.rho) / (2 * p)
    center = tuple(Fraction(s - (p - 1), p) - h for s, h in zip(lam.s, hat))
    sectors = []
    for alpha in lattice_ball(rs, center, 2 * (delta_max + offset) / p):
        x = tuple(-p * (a + h) + s for a, h, s in zip(alpha, hat, lam.s))
        d = conformal_weight(rs, p, x)
        if d <= delta_max:
            sectors.append((d, x))
    return sorted(sectors)


def graded_basis(
    rs: RootSystemData, lam: LambdaParam, delta_max, cap: Optional[int] = None
) -> List[FockBasisVector]:
    """Basis vectors of conformal weight <= delta_max, ordered by (weight, sector, creations)"""
    delta_max = Fraction(delta_max)
    if delta_max < 0:
        raise ArgumentError(f"delta_max must be non-negative, got {delta_max}")
    cap = get_settings().max_basis if cap is None else cap
    sectors = sector_points(rs, lam, delta_max)
    plan = []
    total = 0
    for d, x in sectors:
        depth_max = math.floor(delta_max - d)
        counts = colored_partitions(rs.rank, depth_max)
        total += sum(counts)
        if total > cap:
            raise ResourceLimitError(
                f"Fock basis for {rs.name} {lam.label} up to Delta={delta_max} exceeds the cap {cap}"
            )
        plan.append((x, depth_max))
    basis = [
        FockBasisVector(x, mono)
        for x, depth_max in plan
        for depth in range(depth_max + 1)
        for mono in creation_monomials(rs.rank, depth)
    ]
    basis.sort(key=lambda v: (v.conformal_weight(rs, lam.p), v.point, v.creations))
    logger.info("graded basis %s %s up to Delta=%s: %d vectors in %d sectors", rs.name, lam.label, delta_max, len(basis), len(sectors))
    return basis


def graded_blocks(rs: RootSystemData, p: int, basis: Iterable[FockBasisVector]) -> Dict[Tuple[Fraction, Weight], List[FockBasisVector]]:
    blocks: Dict[Tuple[Fraction, Weight], List[FockBasisVector]] = {}
    for vec in basis:
        blocks.setdefault((vec.conformal_weight(rs, p), vec.point), []).append(vec)
    return blocks


def basis_block_matrix(
    p: int, block: Sequence[FockBasisVector], operators: Sequence[Callable[[FockElement], FockElement]]
) -> List[List[QuadScalar]]:
    """Stacked matrix of the operators on a block: one column per block vector"""
    images = [[op(FockElement.basis(p, vec)) for vec in block] for op in operators]
    rows: List[List[QuadScalar]] = []
    for per_op in images:
        targets = sorted({t for image in per_op for t in image.terms})
        for t in targets:
            rows.append([image.terms.get(t, QuadScalar(0, 0, p)) for image in per_op])
    return rows


@dataclass
class KernelEntry:
    delta: Fraction
    ambient: int = 0
    kernel: int = 0
    weights: Dict[Weight, int] = field(default_factory=dict)


@dataclass
class GradedKernelReport:
    lam: LambdaParam
    J: Tuple[int, ...]
    entries: List[KernelEntry] = field(default_factory=list)

    def kernel_dims(self) -> Dict[Fraction, int]:
        return {e.delta: e.kernel for e in self.entries}

    def ambient_dims(self) -> Dict[Fraction, int]:
        return {e.delta: e.ambient for e in self.entries}


SectorScale = Callable[[int, Weight], Fraction]


def kernel_graded_dims(
    rs: RootSystemData,
    lam: LambdaParam,
    J: Iterable[int],
    delta_max,
    refine_by_weight: bool = False,
    sector_scale: Optional[SectorScale] = None,
    cap: Optional[int] = None,
) -> GradedKernelReport:
    """Graded dimensions of the intersection of ker F_{i,lambda} for i in J, block by sector"""
    J = tuple(sorted(set(J)))
    for i in J:
        if not 1 <= i <= rs.rank:
            raise ArgumentError(f"Index {i} is not a node of {rs.name}")
        if lam.s[i - 1] != 0:
            raise UnsupportedSectorError(f"F_{i} needs s_{i} = 0, {lam.label} has s_{i} = {lam.s[i - 1]}")
    p = lam.p
    basis = graded_basis(rs, lam, delta_max, cap)
    entries: Dict[Fraction, KernelEntry] = {}

    def operator(i: int, x: Weight) -> Callable[[FockElement], FockElement]:
        factor = sector_scale(i, x) if sector_scale else 1
        return lambda v: narrow_F(rs, i, v).scale(QuadScalar(factor, 0, p))

    for (d, x), block in sorted(graded_blocks(rs, p, basis).items()):
        entry = entries.setdefault(d, KernelEntry(delta=d))
        entry.ambient += len(block)
        if J:
            matrix = basis_block_matrix(p, block, [operator(i, x) for i in J])
            kernel = nullity(matrix, len(block))
        else:
            kernel = len(block)
        entry.kernel += kernel
        if refine_by_weight and kernel:
            beta = block[0].beta(p)
            entry.weights[beta] = entry.weights.get(beta, 0) + kernel
        logger.debug("block Delta=%s x=%s: ambient %d kernel %d", d, x, len(block), kernel)
    report = GradedKernelReport(lam=lam, J=J, entries=[entries[d] for d in sorted(entries)])
    logger.info("kernel %s %s J=%s: %d graded pieces", rs.name, lam.label, J, len(report.entries))
    return report
