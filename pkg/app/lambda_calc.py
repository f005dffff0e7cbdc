"""The parameter set Lambda, the shifted Weyl action on it and the epsilon calculus.

A parameter lambda is stored as (p, hat, s): hat is 0 or the index of a
minuscule fundamental weight, s is the box vector with 0 <= s_i <= p-1.  All
arithmetic is on integers: for sigma in W,

    sigma(s + rho) - rho = p * eps + s'

with s' back in the box, so eps = eps_lambda(sigma) and sigma * lambda has
box vector s' and hat the representative of [hat - eps] in P/Q.
"""
import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from app.config import get_settings
from app.errors import ArgumentError, ResourceLimitError
from app.root_data import (
    RootSystemData,
    Weight,
    WeylElement,
    apply_weyl,
    class_representative,
    hat_weights,
    is_reduced,
    pairing,
    reflect,
    root_coords,
    weyl_from_word,
)
from app.utils import floor_divmod, vec_add, vec_sub

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class LambdaParam:
    p: int
    hat: int
    s: Weight

    @property
    def label(self) -> str:
        return f"hat={self.hat},s={','.join(str(c) for c in self.s)}"


def make_lambda(rs: RootSystemData, p: int, hat: int = 0, s: Optional[Sequence[int]] = None) -> LambdaParam:
    if p < 2:
        raise ArgumentError(f"p must be at least 2, got {p}")
    s = tuple(s) if s is not None else rs.zero
    if len(s) != rs.rank:
        raise ArgumentError(f"s must have {rs.rank} entries, got {len(s)}")
    if any(not 0 <= c <= p - 1 for c in s):
        raise ArgumentError(f"s entries must lie in [0, {p - 1}], got {s}")
    if hat not in hat_weights(rs):
        raise ArgumentError(f"hat must be 0 or a minuscule index {list(rs.minuscule)}, got {hat}")
    return LambdaParam(p=p, hat=hat, s=s)


def vacuum(rs: RootSystemData, p: int) -> LambdaParam:
    return make_lambda(rs, p)


def _shifted(rs: RootSystemData, lam: LambdaParam) -> Weight:
    return vec_add(lam.s, rs.rho)


def _reduce(rs: RootSystemData, lam: LambdaParam, mu: Sequence[int]) -> Tuple[LambdaParam, Weight]:
    eps, s_new = floor_divmod(vec_sub(mu, rs.rho), lam.p)
    hat = class_representative(rs, vec_sub(hat_weights(rs)[lam.hat], eps))
    return LambdaParam(p=lam.p, hat=hat, s=s_new), eps


def star_action(rs: RootSystemData, lam: LambdaParam, i: int) -> Tuple[LambdaParam, Weight]:
    """(sigma_i * lambda, eps_lambda(sigma_i))"""
    return _reduce(rs, lam, reflect(rs, i, _shifted(rs, lam)))


def star_element(rs: RootSystemData, lam: LambdaParam, w: WeylElement) -> Tuple[LambdaParam, Weight]:
    """(w * lambda, eps_lambda(w)) straight from the definition"""
    return _reduce(rs, lam, apply_weyl(rs, w, _shifted(rs, lam)))


def epsilon_direct(rs: RootSystemData, lam: LambdaParam, w: WeylElement) -> Weight:
    return star_element(rs, lam, w)[1]


def dot_action_word(rs: RootSystemData, lam: LambdaParam, word: Sequence[int]) -> LambdaParam:
    """Apply sigma_{w_1} ... sigma_{w_n} to lambda letter by letter (last letter first)"""
    for i in reversed(tuple(word)):
        lam = star_action(rs, lam, i)[0]
    return lam


def epsilon_of(rs: RootSystemData, lam: LambdaParam, w) -> Weight:
    """eps_lambda(w) for w given by a reduced word (a WeylElement or a word tuple)

    Walks the word through eps(sigma_i tau) = sigma_i eps(tau) + eps_{tau*lambda}(sigma_i).
    """
    word = w.word if isinstance(w, WeylElement) else tuple(w)
    if not is_reduced(rs, word):
        raise ArgumentError(f"Word {word} is not reduced in {rs.name}")
    eps = rs.zero
    current = lam
    for i in reversed(word):
        current, step = star_action(rs, current, i)
        eps = vec_add(reflect(rs, i, eps), step)
    return eps


@dataclass
class EpsilonChain:
    lam: LambdaParam
    word: Tuple[int, ...]
    steps: List[Weight] = field(default_factory=list)
    prefixes: List[Weight] = field(default_factory=list)
    states: List[LambdaParam] = field(default_factory=list)
    condition_holds: bool = True
    first_violation: Optional[int] = None

    @property
    def cumulative(self) -> Weight:
        return self.prefixes[-1] if self.prefixes else tuple(0 for _ in self.lam.s)

    @property
    def step_sum(self) -> Weight:
        total = tuple(0 for _ in self.lam.s)
        for step in self.steps:
            total = vec_add(total, step)
        return total


def epsilon_chain(rs: RootSystemData, lam: LambdaParam, word: Optional[Sequence[int]] = None) -> EpsilonChain:
    """Steps eps_{sigma_{i_{j-1}}...sigma_{i_1} * lambda}(sigma_{i_j}) along a word in acting order

    The default word is the fixed reduced expression of w0 in acting order.
    """
    word = rs.application_order if word is None else tuple(word)
    if not is_reduced(rs, word):
        raise ArgumentError(f"Word {word} is not a prefix of a reduced word in {rs.name}")
    chain = EpsilonChain(lam=lam, word=word)
    eps = rs.zero
    current = lam
    for n, i in enumerate(word):
        if n > 0 and eps[i - 1] != 0 and chain.condition_holds:
            chain.condition_holds = False
            chain.first_violation = n
        current, step = star_action(rs, current, i)
        eps = vec_add(reflect(rs, i, eps), step)
        chain.steps.append(step)
        chain.prefixes.append(eps)
        chain.states.append(current)
    return chain


def theta_pairing(rs: RootSystemData, s: Sequence[int]) -> int:
    return int(pairing(rs, s, rs.theta))


def check_alcove(rs: RootSystemData, lam: LambdaParam) -> bool:
    return theta_pairing(rs, lam.s) + rs.coxeter - 1 <= lam.p


def on_wall(rs: RootSystemData, lam: LambdaParam) -> bool:
    return theta_pairing(rs, lam.s) + rs.coxeter - 1 == lam.p


def check_novel(rs: RootSystemData, lam: LambdaParam, J: Iterable[int]) -> bool:
    J = tuple(J)
    for j in J:
        eps = star_action(rs, lam, j)[1]
        if eps == tuple(-a for a in rs.simple_root(j)):
            continue
        if any(eps[i - 1] != -int(i == j) for i in J):
            return False
    return True


def lambda_count(rs: RootSystemData, p: int) -> int:
    return (len(rs.minuscule) + 1) * p ** rs.rank


def enumerate_lambdas(rs: RootSystemData, p: int, cap: Optional[int] = None) -> Iterator[LambdaParam]:
    """All of Lambda, hat major and s lexicographic"""
    cap = get_settings().max_lambda if cap is None else cap
    total = lambda_count(rs, p)
    if total > cap:
        raise ResourceLimitError(f"|Lambda| = {total} for {rs.name}, p={p} exceeds the cap {cap}")
    for hat in sorted(hat_weights(rs)):
        for s in itertools.product(range(p), repeat=rs.rank):
            yield LambdaParam(p=p, hat=hat, s=s)


def alcove_lambdas(rs: RootSystemData, p: int, hats: Optional[Iterable[int]] = None) -> Iterator[LambdaParam]:
    """The alcove part of Lambda, generated from the bound (s, theta) <= p - h + 1"""
    budget = p - rs.coxeter + 1
    if budget < 0:
        return
    theta = [int(c) for c in root_coords(rs, rs.theta)]
    hats = sorted(hat_weights(rs)) if hats is None else list(hats)

    def boxes(k: int, left: int) -> Iterator[Tuple[int, ...]]:
        if k == rs.rank:
            yield ()
            return
        for c in range(0, min(p - 1, left // theta[k]) + 1):
            for rest in boxes(k + 1, left - c * theta[k]):
                yield (c,) + rest

    for hat in hats:
        for s in boxes(0, budget):
            yield LambdaParam(p=p, hat=hat, s=s)


@dataclass
class CondScan:
    type_name: str
    p: int
    total: int = 0
    alcove: int = 0
    mismatches: List[LambdaParam] = field(default_factory=list)
    sum_failures: List[LambdaParam] = field(default_factory=list)
    non_alcove_passing: List[LambdaParam] = field(default_factory=list)


def condequiv_scan(rs: RootSystemData, p: int, cap: Optional[int] = None) -> CondScan:
    """Compare condition (1) along the fixed w0 word with the alcove condition over all of Lambda"""
    report = CondScan(type_name=rs.name, p=p)
    cache: Dict[Weight, EpsilonChain] = {}
    for lam in enumerate_lambdas(rs, p, cap):
        report.total += 1
        chain = cache.get(lam.s)
        if chain is None:
            chain = cache[lam.s] = epsilon_chain(rs, lam)
        alcove = check_alcove(rs, lam)
        if chain.condition_holds != alcove:
            report.mismatches.append(lam)
        if alcove:
            report.alcove += 1
            if chain.step_sum != chain.cumulative:
                report.sum_failures.append(lam)
        elif chain.condition_holds:
            report.non_alcove_passing.append(lam)
    logger.info(
        "condition scan %s p=%d: %d parameters, %d in the alcove, %d mismatches",
        rs.name, p, report.total, report.alcove, len(report.mismatches),
    )
    return report


def novel_scan(rs: RootSystemData, p: int, cap: Optional[int] = None) -> List[LambdaParam]:
    """Parameters satisfying the novel condition for J = Pi while outside the alcove"""
    everything = tuple(range(1, rs.rank + 1))
    found = [
        lam for lam in enumerate_lambdas(rs, p, cap)
        if not check_alcove(rs, lam) and check_novel(rs, lam, everything)
    ]
    logger.info("novel scan %s p=%d: %d parameters outside the alcove", rs.name, p, len(found))
    return found


def block_sizes(rs: RootSystemData) -> List[int]:
    return [len(b) for b in reversed(rs.blocks)]


def table2_generate(rs: RootSystemData, lam: LambdaParam) -> List[Tuple[Weight, ...]]:
    """Epsilon steps along the fixed w0 word, grouped by block (block of s_l first)"""
    if not check_alcove(rs, lam):
        raise ArgumentError(f"{lam.label} is outside the alcove for {rs.name}, p={lam.p}")
    steps = epsilon_chain(rs, lam).steps
    blocks, start = [], 0
    for size in block_sizes(rs):
        blocks.append(tuple(steps[start:start + size]))
        start += size
    return blocks


def recursion_holds(rs: RootSystemData, lam: LambdaParam, sigma: WeylElement, i: int) -> bool:
    """eps(sigma) = sigma_i(eps(sigma_i sigma) + eps_{sigma_i sigma * lambda}(sigma_i) + rho) - rho - delta alpha_i"""
    tau = weyl_from_word(rs, (i,) + sigma.word)
    lhs = epsilon_direct(rs, lam, sigma)
    tau_lam, eps_tau = star_element(rs, lam, tau)
    step = star_action(rs, tau_lam, i)[1]
    sigma_lam = star_element(rs, lam, sigma)[0]
    inner = vec_add(vec_add(eps_tau, step), rs.rho)
    rhs = vec_sub(reflect(rs, i, inner), rs.rho)
    if sigma_lam.s[i - 1] == lam.p - 1:
        rhs = vec_sub(rhs, rs.simple_root(i))
    return lhs == rhs


def cohomology_dim(mu: Sequence[int], i: int, n: int) -> int:
    """dim H^n(P_i x_B C_mu) from the pairing m = (mu, alpha_i)"""
    if n < 0:
        raise ArgumentError(f"Cohomological degree must be non-negative, got {n}")
    m = mu[i - 1]
    if n == 0 and m >= 0:
        return m + 1
    if n == 1 and m < 0:
        return -m - 1
    return 0
