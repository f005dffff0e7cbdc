from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from app.characters import euler_character, rhs_character
from app.errors import ArgumentError, CertificationError
from app.lambda_calc import vacuum
from app.qz_series import (
    QSeries,
    QZSeries,
    alternating_sum,
    colored_partitions,
    dump_text,
    eta_inverse_power,
    laurent_divide_exact,
    qz_add,
    qz_mul,
    specialize_z,
    weyl_character,
    weyl_denominator,
)
from app.root_data import parse_type, weyl_dimension


def test_qseries_truncation():
    """Test that exponents above the order are dropped"""
    s = QSeries({0: 1, 1: 2, 3: 5}, order=2)
    assert s.terms == {0: 1, 1: 2}
    assert s.coefficient(3) == 0
    assert s.valuation == 0
    assert QSeries({}, order=Fraction(1, 2)).valuation == Fraction(1, 2)


def test_qseries_arithmetic():
    a = QSeries({0: 1, 1: 1}, order=2)
    b = QSeries({0: 1, 1: -1}, order=2)
    assert (a * b).terms == {0: 1, 2: -1}
    assert (a * b).order == 2
    assert (a + b).terms == {0: 2}
    assert (a - a).is_zero()
    assert (a * 3).terms == {0: 3, 1: 3}
    assert a.shift(Fraction(1, 2)).terms == {Fraction(1, 2): 1, Fraction(3, 2): 1}
    assert a.shift(Fraction(1, 2)).order == Fraction(5, 2)


def test_qseries_product_order_uses_valuation():
    a = QSeries({1: 1}, order=3)
    b = QSeries({2: 1}, order=4)
    assert (a * b).order == 5
    assert (a * b).terms == {3: 1}


def test_qz_series_basics():
    s = QZSeries.from_triples([((1,), 0, 1), ((-1,), 0, 1), ((1,), 1, 2), ((1,), 1, -2)], order=3)
    assert s.coefficient((1,), 0) == 1
    assert s.coefficient((1,), 1) == 0
    assert s.q_exponents() == [0]
    assert s.at_q(0) == {(1,): 1, (-1,): 1}
    assert list(s.items()) == [(0, (-1,), 1), (0, (1,), 1)]
    assert specialize_z(s).terms == {0: 2}


def test_qz_add_requires_equal_orders():
    a = QZSeries.from_triples([((0,), 0, 1)], order=1)
    b = QZSeries.from_triples([((0,), 0, 1)], order=2)
    with pytest.raises(ArgumentError):
        qz_add(a, b)
    with pytest.raises(ArgumentError):
        qz_mul(a, b)
    assert qz_add(a, a).coefficient((0,), 0) == 2


def test_qz_product():
    a = QZSeries.from_triples([((1,), 0, 1), ((-1,), 0, 1)], order=2)
    square = qz_mul(a, a)
    assert square.at_q(0) == {(2,): 1, (0,): 2, (-2,): 1}


def test_dump_text():
    s = QZSeries.from_triples([((1, 0), Fraction(1, 2), 3), ((0, 0), Fraction(-1, 12), Fraction(-1, 2))])
    assert dump_text(s) == "q^{-1/12} z^(0,0) : -1/2\nq^{1/2} z^(1,0) : 3"


def test_colored_partitions():
    assert colored_partitions(1, 5) == [1, 1, 2, 3, 5, 7]
    assert colored_partitions(2, 3) == [1, 2, 5, 10]
    assert colored_partitions(3, 0) == [1]


def test_eta_inverse_power():
    """Test eta^-1 = q^(-1/24) (1 + q + 2q^2 + ...)"""
    eta = eta_inverse_power(1, 2)
    assert eta.terms == {Fraction(-1, 24): 1, Fraction(23, 24): 1, Fraction(47, 24): 2}
    assert eta.order == 2
    assert eta_inverse_power(2, Fraction(-1)).is_zero()


def test_weyl_denominator_a1(a1):
    assert weyl_denominator(a1).at_q(0) == {(0,): 1, (-2,): -1}


def test_alternating_sum_a1(a1):
    assert alternating_sum(a1, (2,)) == {(1,): 1, (-3,): -1}


def test_weyl_character(a1, a2):
    assert weyl_character(a1, (1,)).at_q(0) == {(1,): 1, (-1,): 1}
    assert weyl_character(a2, (1, 0)).at_q(0) == {(1, 0): 1, (-1, 1): 1, (0, -1): 1}
    adjoint = weyl_character(a2, (1, 1)).at_q(0)
    assert adjoint[(0, 0)] == 2
    assert sum(adjoint.values()) == 8
    with pytest.raises(ArgumentError):
        weyl_character(a2, (-1, 0))


def test_laurent_division_rejects_remainder(a1):
    """Test that a non-divisible numerator is reported instead of silently truncated"""
    num = QZSeries.laurent({(1,): 1})
    with pytest.raises(CertificationError):
        laurent_divide_exact(a1, num, weyl_denominator(a1))
    with pytest.raises(ArgumentError):
        laurent_divide_exact(a1, num, QZSeries.from_triples([((0,), 1, 1)]))


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 3), st.integers(0, 3))
def test_weyl_character_dimension(b1, b2):
    """Test chi_beta(1) = dim V_beta on A2"""
    rs = parse_type("A2")
    chi = weyl_character(rs, (b1, b2))
    assert specialize_z(chi).terms == {0: weyl_dimension(rs, (b1, b2))}


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 3), st.integers(0, 3))
def test_weyl_character_times_denominator(b1, b2):
    rs = parse_type("A2")
    beta = (b1, b2)
    product = weyl_character(rs, beta) * weyl_denominator(rs)
    expected = QZSeries.laurent(alternating_sum(rs, (b1 + 1, b2 + 1)))
    assert product == expected


GOLDEN = Path(__file__).parent / "golden" / "qz"


def test_dump_text_weyl_character_golden(a2):
    assert dump_text(weyl_character(a2, (1, 1))) + "\n" == (GOLDEN / "A2_adjoint.txt").read_text()


def test_dump_text_vacuum_golden(a1):
    """Test both sides of the A1, p = 2 vacuum character up to Delta = 3 against the stored dump"""
    golden = (GOLDEN / "A1_p2_vacuum.txt").read_text()
    lam = vacuum(a1, 2)
    assert dump_text(rhs_character(a1, lam, 3).series) + "\n" == golden
    assert dump_text(euler_character(a1, lam, 3).series) + "\n" == golden


def _colored_partition_counts(colors, n_max):
    """n a(n) = colors * sum_k sigma(k) a(n - k), the logarithmic derivative of prod (1 - q^n)^-colors"""
    sigma = [0] + [sum(d for d in range(1, k + 1) if k % d == 0) for k in range(1, n_max + 1)]
    counts = [Fraction(1)]
    for n in range(1, n_max + 1):
        counts.append(colors * sum(sigma[k] * counts[n - k] for k in range(1, n + 1)) / n)
    return counts


@pytest.mark.parametrize("rank", [1, 2, 3, 4, 6, 8])
def test_eta_inverse_power_through_q20(rank):
    base = Fraction(-rank, 24)
    eta = eta_inverse_power(rank, base + 20)
    assert eta.terms == {base + n: c for n, c in enumerate(_colored_partition_counts(rank, 20))}


@settings(max_examples=10, deadline=None)
@given(st.sampled_from(["A1", "A3", "D4"]), st.lists(st.integers(0, 2), min_size=4, max_size=4))
def test_weyl_character_dimension_other_types(label, entries):
    rs = parse_type(label)
    beta = tuple(entries[: rs.rank])
    if rs.kind == "D":
        beta = tuple(min(b, 1) for b in beta)
    assert specialize_z(weyl_character(rs, beta)).terms == {0: weyl_dimension(rs, beta)}
