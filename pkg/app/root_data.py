"""Exact root data and Weyl groups for the simply-laced types A, D and E.

Weights are integer tuples in fundamental-weight coordinates: entry i of a
weight mu is (alpha_i, mu).  Reflection indices and fundamental-weight
indices are 1-based, matching the usual Dynkin numbering.  Type E uses the
chain 1-2-3-5-6(-7-8) with node 4 attached to node 3, so nodes 1..5 of E_6
form D_5 in Bourbaki numbering.
"""
import itertools
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from app.config import get_settings
from app.errors import ArgumentError, ConfigurationError, ResourceLimitError

logger = logging.getLogger(__name__)

Weight = Tuple[int, ...]
Matrix = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class RootSystemData:
    kind: str
    rank: int
    cartan: Matrix
    cartan_inv: Tuple[Tuple[Fraction, ...], ...]
    positive_roots: Tuple[Weight, ...]
    theta: Weight
    rho: Weight
    coxeter: int
    dim_g: int
    minuscule: Tuple[int, ...]
    blocks: Tuple[Tuple[int, ...], ...]
    w0_word: Tuple[int, ...] = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "w0_word", tuple(i for block in self.blocks for i in block))

    @property
    def name(self) -> str:
        return f"{self.kind}{self.rank}"

    def simple_root(self, i: int) -> Weight:
        return self.cartan[i - 1]

    def fundamental_weight(self, i: int) -> Weight:
        return tuple(1 if k == i - 1 else 0 for k in range(self.rank))

    @property
    def zero(self) -> Weight:
        return (0,) * self.rank

    @property
    def application_order(self) -> Tuple[int, ...]:
        """Reflections of w0_word in the order they act: last letter first"""
        return tuple(reversed(self.w0_word))


def _edges(kind: str, rank: int) -> List[Tuple[int, int]]:
    if kind == "A":
        return [(i, i + 1) for i in range(1, rank)]
    if kind == "D":
        return [(i, i + 1) for i in range(1, rank - 1)] + [(rank - 2, rank)]
    chain = [n for n in (1, 2, 3, 5, 6, 7, 8) if n <= rank]
    return list(zip(chain, chain[1:])) + [(3, 4)]


def _w0_blocks(kind: str, rank: int) -> Tuple[Tuple[int, ...], ...]:
    l = rank
    if kind == "A":
        return tuple(tuple(range(l + 1 - i, l + 1)) for i in range(1, l + 1))
    if kind == "D":
        blocks = [(l,), (l - 1,)]
        for i in range(3, l + 1):
            head = tuple(range(l + 1 - i, l - 1))
            blocks.append(head + (l, l - 1) + tuple(reversed(head)))
        return tuple(blocks)
    blocks = list(_w0_blocks("D", 5))
    s6 = (6, 5, 3, 4, 2, 1, 3, 2, 5, 3, 4, 6, 5, 3, 2, 1)
    s7 = (7, 6, 5, 3, 4, 2, 1, 3, 2, 5, 3, 4, 6, 5, 3, 2, 1, 7, 6, 5, 3, 4, 2, 3, 5, 6, 7)
    blocks.append(s6)
    if rank >= 7:
        blocks.append(s7)
    if rank == 8:
        blocks.append((8,) + s7 + (8,) + s7 + (8,))
    return tuple(blocks)


def _invert(matrix: Sequence[Sequence[int]]) -> Tuple[Tuple[Fraction, ...], ...]:
    n = len(matrix)
    aug = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        lead = aug[col][col]
        aug[col] = [v / lead for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def _root_coords_int(cartan_inv, mu: Sequence[int]) -> Tuple[Fraction, ...]:
    return tuple(sum((c * m for c, m in zip(row, mu)), Fraction(0)) for row in cartan_inv)


def _validate_type(kind: str, rank: int) -> None:
    ok = (
        (kind == "A" and rank >= 1)
        or (kind == "D" and rank >= 3)
        or (kind == "E" and rank in (6, 7, 8))
    )
    if not ok:
        raise ConfigurationError(f"Unsupported root system: {kind}{rank}")


@lru_cache(maxsize=None)
def build_root_system(kind: str, rank: int) -> RootSystemData:
    kind = kind.upper()
    _validate_type(kind, rank)
    cartan = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for a, b in _edges(kind, rank):
        cartan[a - 1][b - 1] = cartan[b - 1][a - 1] = -1
    cartan_t = tuple(tuple(row) for row in cartan)
    cartan_inv = _invert(cartan_t)

    # close the simple roots under reflections, working in root coordinates
    simple = [tuple(int(i == j) for j in range(rank)) for i in range(rank)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for j in range(rank):
                pair = sum(beta[k] * cartan_t[k][j] for k in range(rank))
                image = tuple(b - pair * int(k == j) for k, b in enumerate(beta))
                if image not in seen:
                    seen.add(image)
                    nxt.append(image)
        frontier = nxt
    positive_rc = sorted((r for r in seen if all(c >= 0 for c in r)), key=lambda r: (sum(r), r))
    to_omega = lambda r: tuple(sum(r[k] * cartan_t[k][j] for k in range(rank)) for j in range(rank))
    positive = tuple(to_omega(r) for r in positive_rc)
    theta_rc = positive_rc[-1]
    minuscule = tuple(i + 1 for i, c in enumerate(theta_rc) if c == 1)

    rs = RootSystemData(
        kind=kind,
        rank=rank,
        cartan=cartan_t,
        cartan_inv=cartan_inv,
        positive_roots=positive,
        theta=to_omega(theta_rc),
        rho=(1,) * rank,
        coxeter=sum(theta_rc) + 1,
        dim_g=rank + 2 * len(positive),
        minuscule=minuscule,
        blocks=_w0_blocks(kind, rank),
    )
    logger.debug("built %s: %d positive roots, h=%d", rs.name, len(positive), rs.coxeter)
    return rs


def parse_type(text: str) -> RootSystemData:
    """Build a root system from a label such as 'A2' or 'e6'"""
    text = text.strip()
    if len(text) < 2 or not text[1:].isdigit():
        raise ConfigurationError(f"Invalid root system label: {text!r}")
    return build_root_system(text[0].upper(), int(text[1:]))


def _check_length(rs: RootSystemData, *vectors: Sequence) -> None:
    for v in vectors:
        if len(v) != rs.rank:
            raise ArgumentError(f"Expected a vector of length {rs.rank}, got {len(v)}")


def pairing(rs: RootSystemData, mu: Sequence, nu: Sequence) -> Fraction:
    _check_length(rs, mu, nu)
    total = Fraction(0)
    for i, m in enumerate(mu):
        if m:
            row = rs.cartan_inv[i]
            total += m * sum((row[j] * n for j, n in enumerate(nu) if n), Fraction(0))
    return total


def norm_sq(rs: RootSystemData, mu: Sequence) -> Fraction:
    return pairing(rs, mu, mu)


def root_coords(rs: RootSystemData, mu: Sequence) -> Tuple[Fraction, ...]:
    _check_length(rs, mu)
    return _root_coords_int(rs.cartan_inv, mu)


def from_root_coords(rs: RootSystemData, coords: Sequence[int]) -> Weight:
    return tuple(sum(coords[k] * rs.cartan[k][j] for k in range(rs.rank)) for j in range(rs.rank))


def in_root_lattice(rs: RootSystemData, mu: Sequence[int]) -> bool:
    return all(c.denominator == 1 for c in root_coords(rs, mu))


def is_dominant(mu: Sequence) -> bool:
    return all(c >= 0 for c in mu)


def is_positive_root_vector(rs: RootSystemData, mu: Sequence[int]) -> bool:
    """Sign test for a root: its root coordinates are all >= 0"""
    return all(c >= 0 for c in root_coords(rs, mu))


def reflect(rs: RootSystemData, i: int, mu: Sequence) -> tuple:
    """sigma_i(mu) = mu - (mu, alpha_i) alpha_i"""
    m = mu[i - 1]
    if not m:
        return tuple(mu)
    return tuple(v - m * a for v, a in zip(mu, rs.cartan[i - 1]))


@lru_cache(maxsize=None)
def hat_weights(rs: RootSystemData) -> Dict[int, Weight]:
    """Representatives of P/Q: 0 for the trivial class, i for each minuscule omega_i"""
    reps = {0: rs.zero}
    for i in rs.minuscule:
        reps[i] = rs.fundamental_weight(i)
    return reps


def class_representative(rs: RootSystemData, mu: Sequence[int]) -> int:
    """Index in {0} U minuscule of the representative of [mu] in P/Q"""
    frac = tuple(c - math.floor(c) for c in root_coords(rs, mu))
    for hat, weight in hat_weights(rs).items():
        rep = tuple(c - math.floor(c) for c in root_coords(rs, weight))
        if rep == frac:
            return hat
    raise ArgumentError(f"No minuscule representative for the class of {tuple(mu)} in {rs.name}")


@dataclass(frozen=True, eq=False)
class WeylElement:
    word: Tuple[int, ...]
    matrix: Matrix
    length: int

    @property
    def sign(self) -> int:
        return -1 if self.length % 2 else 1

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)


def _identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def _reflection_matrix(rs: RootSystemData, i: int) -> Matrix:
    n = rs.rank
    return tuple(
        tuple(int(k == j) - (rs.cartan[i - 1][k] if j == i - 1 else 0) for j in range(n))
        for k in range(n)
    )


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def _apply_matrix(matrix: Matrix, mu: Sequence) -> tuple:
    return tuple(sum(m * v for m, v in zip(row, mu)) for row in matrix)


def inversion_count(rs: RootSystemData, matrix: Matrix) -> int:
    """Number of positive roots sent to negative roots"""
    return sum(
        1 for beta in rs.positive_roots if not is_positive_root_vector(rs, _apply_matrix(matrix, beta))
    )


def weyl_from_word(rs: RootSystemData, word: Sequence[int]) -> WeylElement:
    """Element sigma_{w_1} ... sigma_{w_n}; acting on a weight the last letter applies first"""
    matrix = _identity(rs.rank)
    for i in word:
        if not 1 <= i <= rs.rank:
            raise ArgumentError(f"Reflection index {i} out of range for {rs.name}")
        matrix = _matmul(matrix, _reflection_matrix(rs, i))
    return WeylElement(word=tuple(word), matrix=matrix, length=inversion_count(rs, matrix))


def is_reduced(rs: RootSystemData, word: Sequence[int]) -> bool:
    return weyl_from_word(rs, word).length == len(word)


def apply_weyl(rs: RootSystemData, w: WeylElement, mu: Sequence) -> tuple:
    _check_length(rs, mu)
    if len(w.matrix) != rs.rank:
        raise ArgumentError("Weyl element and weight have different ranks")
    return _apply_matrix(w.matrix, mu)


def weyl_order(rs: RootSystemData) -> int:
    l = rs.rank
    if rs.kind == "A":
        return math.factorial(l + 1)
    if rs.kind == "D":
        return 2 ** (l - 1) * math.factorial(l)
    return {6: 51840, 7: 2903040, 8: 696729600}[l]


@lru_cache(maxsize=16)
def _enumerate(rs: RootSystemData) -> Tuple[WeylElement, ...]:
    ident = _identity(rs.rank)
    reflections = [_reflection_matrix(rs, i) for i in range(1, rs.rank + 1)]
    elements = {ident: WeylElement(word=(), matrix=ident, length=0)}
    frontier = [elements[ident]]
    length = 0
    while frontier:
        length += 1
        nxt = []
        for elem in frontier:
            for i, refl in enumerate(reflections, start=1):
                matrix = _matmul(refl, elem.matrix)
                if matrix not in elements:
                    new = WeylElement(word=(i,) + elem.word, matrix=matrix, length=length)
                    elements[matrix] = new
                    nxt.append(new)
        frontier = nxt
    return tuple(sorted(elements.values(), key=lambda e: (e.length, e.word)))


def enumerate_weyl(rs: RootSystemData, cap: Optional[int] = None) -> Tuple[WeylElement, ...]:
    """All elements of W once each, ordered by (length, word)"""
    cap = get_settings().max_weyl if cap is None else cap
    order = weyl_order(rs)
    if order > cap:
        raise ResourceLimitError(f"|W({rs.name})| = {order} exceeds the cap {cap}")
    elements = _enumerate(rs)
    logger.info("enumerated W(%s): %d elements", rs.name, len(elements))
    return elements


def weyl_dimension(rs: RootSystemData, beta: Sequence[int]) -> int:
    _check_length(rs, beta)
    if not is_dominant(beta):
        raise ArgumentError(f"Weyl dimension needs a dominant weight, got {tuple(beta)}")
    shifted = tuple(b + 1 for b in beta)
    value = Fraction(1)
    for alpha in rs.positive_roots:
        value *= pairing(rs, shifted, alpha) / pairing(rs, rs.rho, alpha)
    return int(value)


def dominant_representative(rs: RootSystemData, mu: Sequence[int]) -> Tuple[Weight, int]:
    """Return (dominant weight in the W-orbit of mu, sign of the sorting element)"""
    current = tuple(mu)
    sign = 1
    while True:
        i = next((k for k, c in enumerate(current) if c < 0), None)
        if i is None:
            return current, sign
        current = reflect(rs, i + 1, current)
        sign = -sign


def lattice_ball(rs: RootSystemData, center: Sequence, radius_sq: Fraction) -> List[Weight]:
    """Root-lattice points alpha with |alpha - center|^2 <= radius_sq, ordered by (|alpha|^2, coords)

    The box comes from |(v, omega_i)| <= |v| |omega_i| in root coordinates.
    """
    radius_sq = Fraction(radius_sq)
    if radius_sq < 0:
        return []
    center = tuple(Fraction(c) for c in center)
    center_rc = root_coords(rs, center)
    ranges = []
    for i, c in enumerate(center_rc):
        bound = radius_sq * rs.cartan_inv[i][i]
        reach = math.isqrt(bound.numerator // bound.denominator) + 1
        ranges.append(range(math.floor(c - reach), math.ceil(c + reach) + 1))
    points = []
    for coords in itertools.product(*ranges):
        alpha = from_root_coords(rs, coords)
        diff = tuple(a - c for a, c in zip(alpha, center))
        if norm_sq(rs, diff) <= radius_sq:
            points.append(alpha)
    points.sort(key=lambda a: (norm_sq(rs, a), a))
    return points


def orbit(rs: RootSystemData, mu: Sequence[int]) -> List[Weight]:
    """W-orbit of a weight by breadth-first reflection"""
    start = tuple(mu)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(1, rs.rank + 1):
                image = reflect(rs, i, v)
                if image not in seen:
                    seen.add(image)
                    nxt.append(image)
        frontier = nxt
    return sorted(seen)
