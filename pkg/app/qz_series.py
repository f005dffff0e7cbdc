"""Exact truncated series in q (rational exponents) and z (weight-indexed Laurent monomials)."""
import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from app.errors import ArgumentError, CertificationError
from app.root_data import RootSystemData, Weight, apply_weyl, enumerate_weyl, root_coords
from app.utils import format_fraction, format_vector, vec_add, vec_sub

logger = logging.getLogger(__name__)

Order = Optional[Fraction]  # None means exact (no truncation)


def _min_order(*orders: Order) -> Order:
    finite = [o for o in orders if o is not None]
    return min(finite) if finite else None


def _shift(order: Order, by: Optional[Fraction]) -> Order:
    if order is None or by is None:
        return None
    return order + by


class QSeries:
    """Map from rational q-exponent to rational coefficient, with exponents above order absent"""

    __slots__ = ("terms", "order")

    def __init__(self, terms: Optional[Mapping] = None, order: Union[Order, int] = None):
        self.order = None if order is None else Fraction(order)
        clean: Dict[Fraction, Fraction] = {}
        for e, c in (terms or {}).items():
            e, c = Fraction(e), Fraction(c)
            if self.order is not None and e > self.order:
                continue
            total = clean.get(e, 0) + c
            if total:
                clean[e] = total
            else:
                clean.pop(e, None)
        self.terms = clean

    @property
    def valuation(self) -> Optional[Fraction]:
        """Smallest stored exponent, or the order for an empty truncated series"""
        return min(self.terms) if self.terms else self.order

    def coefficient(self, exponent) -> Fraction:
        return self.terms.get(Fraction(exponent), Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "QSeries") -> "QSeries":
        order = _min_order(self.order, other.order)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return QSeries(terms, order)

    def __neg__(self) -> "QSeries":
        return QSeries({e: -c for e, c in self.terms.items()}, self.order)

    def __sub__(self, other: "QSeries") -> "QSeries":
        return self + (-other)

    def __mul__(self, other) -> "QSeries":
        if not isinstance(other, QSeries):
            return QSeries({e: c * other for e, c in self.terms.items()}, self.order)
        order = _min_order(_shift(self.order, other.valuation), _shift(other.order, self.valuation))
        terms: Dict[Fraction, Fraction] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = ea + eb
                if order is None or e <= order:
                    terms[e] = terms.get(e, 0) + ca * cb
        return QSeries(terms, order)

    __rmul__ = __mul__

    def shift(self, exponent) -> "QSeries":
        exponent = Fraction(exponent)
        return QSeries({e + exponent: c for e, c in self.terms.items()}, _shift(self.order, exponent))

    def truncate(self, order) -> "QSeries":
        return QSeries(self.terms, _min_order(self.order, Fraction(order)))

    def __eq__(self, other) -> bool:
        return isinstance(other, QSeries) and self.order == other.order and self.terms == other.terms

    def __repr__(self) -> str:
        body = " + ".join(f"{format_fraction(c)}*q^{format_fraction(e)}" for e, c in sorted(self.terms.items()))
        return f"QSeries({body or '0'}, order={self.order})"


class QZSeries:
    """Map from z-exponent (a weight) to QSeries, all sharing one truncation order"""

    __slots__ = ("terms", "order")

    def __init__(self, terms: Optional[Mapping[Weight, QSeries]] = None, order: Union[Order, int] = None):
        self.order = None if order is None else Fraction(order)
        clean: Dict[Weight, QSeries] = {}
        for z, series in (terms or {}).items():
            series = QSeries(series.terms, self.order)
            if not series.is_zero():
                clean[tuple(z)] = series
        self.terms = clean

    @classmethod
    def from_triples(cls, triples, order: Order = None) -> "QZSeries":
        """Build from (z, q, coefficient) triples, accumulating repeats"""
        raw: Dict[Weight, Dict[Fraction, Fraction]] = {}
        for z, q, c in triples:
            bucket = raw.setdefault(tuple(z), {})
            q = Fraction(q)
            bucket[q] = bucket.get(q, 0) + Fraction(c)
        return cls({z: QSeries(t) for z, t in raw.items()}, order)

    @classmethod
    def laurent(cls, coefficients: Mapping[Weight, int]) -> "QZSeries":
        """q-free exact Laurent polynomial in z"""
        return cls.from_triples(((z, 0, c) for z, c in coefficients.items()))

    @property
    def valuation(self) -> Optional[Fraction]:
        vals = [s.valuation for s in self.terms.values()]
        return min(vals) if vals else self.order

    def q_exponents(self) -> List[Fraction]:
        return sorted({e for s in self.terms.values() for e in s.terms})

    def coefficient(self, z: Sequence[int], q) -> Fraction:
        series = self.terms.get(tuple(z))
        return series.coefficient(q) if series else Fraction(0)

    def items(self) -> Iterator[Tuple[Fraction, Weight, Fraction]]:
        """(q-exponent, z, coefficient) sorted by q then z"""
        triples = [(e, z, c) for z, s in self.terms.items() for e, c in s.terms.items()]
        return iter(sorted(triples))

    def at_q(self, exponent) -> Dict[Weight, Fraction]:
        exponent = Fraction(exponent)
        return {z: s.terms[exponent] for z, s in self.terms.items() if exponent in s.terms}

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "QZSeries") -> "QZSeries":
        order = _min_order(self.order, other.order)
        terms = dict(self.terms)
        for z, s in other.terms.items():
            terms[z] = terms[z] + s if z in terms else s
        return QZSeries(terms, order)

    def __neg__(self) -> "QZSeries":
        return QZSeries({z: -s for z, s in self.terms.items()}, self.order)

    def __sub__(self, other: "QZSeries") -> "QZSeries":
        return self + (-other)

    def __mul__(self, other) -> "QZSeries":
        if isinstance(other, QSeries):
            order = _min_order(_shift(self.order, other.valuation), _shift(other.order, self.valuation))
            return QZSeries({z: s * other for z, s in self.terms.items()}, order)
        if not isinstance(other, QZSeries):
            return QZSeries({z: s * other for z, s in self.terms.items()}, self.order)
        order = _min_order(_shift(self.order, other.valuation), _shift(other.order, self.valuation))
        raw: Dict[Weight, Dict[Fraction, Fraction]] = {}
        for za, sa in self.terms.items():
            for zb, sb in other.terms.items():
                bucket = raw.setdefault(vec_add(za, zb), {})
                for ea, ca in sa.terms.items():
                    for eb, cb in sb.terms.items():
                        e = ea + eb
                        if order is None or e <= order:
                            bucket[e] = bucket.get(e, 0) + ca * cb
        return QZSeries({z: QSeries(t) for z, t in raw.items()}, order)

    __rmul__ = __mul__

    def shift(self, exponent) -> "QZSeries":
        exponent = Fraction(exponent)
        return QZSeries({z: s.shift(exponent) for z, s in self.terms.items()}, _shift(self.order, exponent))

    def truncate(self, order) -> "QZSeries":
        return QZSeries(self.terms, _min_order(self.order, Fraction(order)))

    def __eq__(self, other) -> bool:
        return isinstance(other, QZSeries) and self.order == other.order and self.terms == other.terms

    def __repr__(self) -> str:
        return f"QZSeries({len(self.terms)} monomials, order={self.order})"


def qz_add(a: QZSeries, b: QZSeries) -> QZSeries:
    if a.order != b.order:
        raise ArgumentError(f"Truncation orders differ: {a.order} vs {b.order}")
    return a + b


def qz_mul(a: QZSeries, b: QZSeries) -> QZSeries:
    if a.order != b.order:
        raise ArgumentError(f"Truncation orders differ: {a.order} vs {b.order}")
    return a * b


def specialize_z(series: QZSeries) -> QSeries:
    """The z -> 1 specialization"""
    total: Dict[Fraction, Fraction] = {}
    for s in series.terms.values():
        for e, c in s.terms.items():
            total[e] = total.get(e, 0) + c
    return QSeries(total, series.order)


def dump_text(series: QZSeries) -> str:
    """One line per term: q^{a/b} z^(c1,...,cl) : r/s"""
    return "\n".join(
        f"q^{{{format_fraction(e)}}} z^{format_vector(z)} : {format_fraction(c)}" for e, z, c in series.items()
    )


def colored_partitions(colors: int, n_max: int) -> List[int]:
    """Number of colors-colored partitions of 0..n_max"""
    counts = [1] + [0] * max(n_max, 0)
    for part in range(1, n_max + 1):
        for _ in range(colors):
            for k in range(part, n_max + 1):
                counts[k] += counts[k - part]
    return counts[: n_max + 1]


def eta_inverse_power(rank: int, order) -> QSeries:
    """eta(q)^(-rank) = q^(-rank/24) * prod (1 - q^n)^(-rank), exponents up to order"""
    order = Fraction(order)
    base = Fraction(-rank, 24)
    if rank == 0:
        return QSeries({0: 1}, order)
    top = order - base
    n_max = top.numerator // top.denominator
    if n_max < 0:
        return QSeries({}, order)
    counts = colored_partitions(rank, n_max)
    return QSeries({base + k: c for k, c in enumerate(counts)}, order)


def _key(rs: RootSystemData, cache: Dict[Weight, tuple], z: Weight) -> tuple:
    key = cache.get(z)
    if key is None:
        rc = root_coords(rs, z)
        key = cache[z] = (sum(rc), rc)
    return key


def _divide_polynomial(rs, numerator: Dict[Weight, Fraction], denom: Dict[Weight, Fraction]) -> Dict[Weight, Fraction]:
    cache: Dict[Weight, tuple] = {}
    d_lead = max(denom, key=lambda z: _key(rs, cache, z))
    d_min = min(denom, key=lambda z: _key(rs, cache, z))
    c_lead = denom[d_lead]
    n_min = min(numerator, key=lambda z: _key(rs, cache, z))
    bound = _key(rs, cache, n_min)[0] - _key(rs, cache, d_min)[0]
    d_lead_height = _key(rs, cache, d_lead)[0]
    remainder = dict(numerator)
    quotient: Dict[Weight, Fraction] = {}
    while remainder:
        m = max(remainder, key=lambda z: _key(rs, cache, z))
        if _key(rs, cache, m)[0] - d_lead_height < bound:
            raise CertificationError(f"Laurent division leaves a remainder with leading monomial {m}")
        c = remainder[m] / c_lead
        shift = vec_sub(m, d_lead)
        quotient[shift] = quotient.get(shift, 0) + c
        for z, d in denom.items():
            target = vec_add(shift, z)
            value = remainder.get(target, 0) - c * d
            if value:
                remainder[target] = value
            else:
                remainder.pop(target, None)
    return quotient


def laurent_divide_exact(rs: RootSystemData, num: QZSeries, denom: QZSeries) -> QZSeries:
    """Divide every q-coefficient of num by the q-free Laurent polynomial denom exactly"""
    d_poly = denom.at_q(0)
    if not d_poly or any(e != 0 for e in denom.q_exponents()):
        raise ArgumentError("Denominator must be a non-zero q-free Laurent polynomial")
    triples = []
    for e in num.q_exponents():
        quotient = _divide_polynomial(rs, num.at_q(e), d_poly)
        triples.extend((z, e, c) for z, c in quotient.items())
    return QZSeries.from_triples(triples, num.order)


@lru_cache(maxsize=None)
def weyl_denominator(rs: RootSystemData) -> QZSeries:
    """prod over negative roots beta of (1 - z^beta)"""
    poly: Dict[Weight, Fraction] = {rs.zero: Fraction(1)}
    for alpha in rs.positive_roots:
        neg = tuple(-a for a in alpha)
        nxt: Dict[Weight, Fraction] = {}
        for z, c in poly.items():
            nxt[z] = nxt.get(z, 0) + c
            shifted = vec_add(z, neg)
            nxt[shifted] = nxt.get(shifted, 0) - c
        poly = {z: c for z, c in nxt.items() if c}
    return QZSeries.laurent(poly)


def alternating_sum(rs: RootSystemData, v: Sequence[int]) -> Dict[Weight, int]:
    """sum over W of sign(w) z^(w(v) - rho)"""
    out: Dict[Weight, int] = {}
    for w in enumerate_weyl(rs):
        z = vec_sub(apply_weyl(rs, w, v), rs.rho)
        out[z] = out.get(z, 0) + w.sign
    return {z: c for z, c in out.items() if c}


@lru_cache(maxsize=4096)
def weyl_character(rs: RootSystemData, beta: Tuple[int, ...]) -> QZSeries:
    beta = tuple(beta)
    if any(b < 0 for b in beta):
        raise ArgumentError(f"Weyl character needs a dominant weight, got {beta}")
    numerator = QZSeries.laurent(alternating_sum(rs, vec_add(beta, rs.rho)))
    return laurent_divide_exact(rs, numerator, weyl_denominator(rs))
