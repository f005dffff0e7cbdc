from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from app.errors import ArgumentError, ConfigurationError, ResourceLimitError
from app.root_data import (
    apply_weyl,
    class_representative,
    dominant_representative,
    enumerate_weyl,
    in_root_lattice,
    is_reduced,
    lattice_ball,
    norm_sq,
    orbit,
    pairing,
    parse_type,
    reflect,
    weyl_dimension,
    weyl_from_word,
    weyl_order,
)


def test_a1_data(a1):
    """Test the rank-one root data"""
    assert a1.cartan == ((2,),)
    assert a1.positive_roots == ((2,),)
    assert a1.theta == (2,)
    assert a1.rho == (1,)
    assert a1.coxeter == 2
    assert a1.dim_g == 3
    assert a1.minuscule == (1,)


def test_a2_data(a2):
    """Test positive roots and theta of A2 in fundamental-weight coordinates"""
    assert set(a2.positive_roots) == {(2, -1), (-1, 2), (1, 1)}
    assert a2.theta == (1, 1)
    assert a2.coxeter == 3
    assert a2.minuscule == (1, 2)
    assert weyl_order(a2) == 6


@pytest.mark.parametrize(
    "label, coxeter, dim_g, minuscule",
    [
        ("A3", 4, 15, (1, 2, 3)),
        ("D4", 6, 28, (1, 3, 4)),
        ("D5", 8, 45, (1, 4, 5)),
        ("E6", 12, 78, (1, 6)),
        ("E7", 18, 133, (7,)),
        ("E8", 30, 248, ()),
    ],
)
def test_type_invariants(label, coxeter, dim_g, minuscule):
    """Test Coxeter number, dimension and minuscule nodes across types"""
    rs = parse_type(label)
    assert rs.coxeter == coxeter
    assert rs.dim_g == dim_g
    assert rs.minuscule == minuscule
    assert len(rs.positive_roots) * 2 == rs.coxeter * rs.rank


@pytest.mark.parametrize("label", ["B2", "D2", "E5", "E9", "A0", "x", "A"])
def test_unsupported_types(label):
    """Test that non simply-laced or malformed labels are rejected"""
    with pytest.raises(ConfigurationError):
        parse_type(label)


def test_pairing(a1, a2):
    """Test the form on weights"""
    assert pairing(a1, (1,), (1,)) == Fraction(1, 2)
    assert norm_sq(a1, (2,)) == 2
    assert norm_sq(a2, (1, 0)) == Fraction(2, 3)
    assert pairing(a2, (2, -1), (-1, 2)) == -1
    with pytest.raises(ArgumentError):
        pairing(a2, (1,), (1, 0))


def test_reflect(a1, a2):
    assert reflect(a1, 1, (1,)) == (-1,)
    assert reflect(a2, 1, (1, 0)) == (-1, 1)
    assert reflect(a2, 2, (1, 0)) == (1, 0)


@pytest.mark.parametrize("label", ["A1", "A2", "A3", "D4", "D5", "E6"])
def test_w0_word_is_longest(label):
    """Test that the fixed word of w0 is reduced, of maximal length and sends rho to -rho"""
    rs = parse_type(label)
    w0 = weyl_from_word(rs, rs.w0_word)
    assert is_reduced(rs, rs.w0_word)
    assert w0.length == len(rs.positive_roots)
    assert apply_weyl(rs, w0, rs.rho) == tuple(-r for r in rs.rho)


def test_is_reduced(a2):
    assert is_reduced(a2, (1, 2))
    assert not is_reduced(a2, (1, 1))
    with pytest.raises(ArgumentError):
        weyl_from_word(a2, (3,))


def test_enumerate_weyl(a2):
    """Test that W(A2) is enumerated once per element with balanced signs"""
    elements = enumerate_weyl(a2)
    assert len(elements) == 6
    assert len({w.matrix for w in elements}) == 6
    assert sum(w.sign for w in elements) == 0
    assert elements[0].length == 0
    assert max(w.length for w in elements) == 3


def test_enumerate_weyl_cap(a2):
    with pytest.raises(ResourceLimitError):
        enumerate_weyl(a2, cap=5)


def test_weyl_dimension(a1, a2):
    assert weyl_dimension(a1, (4,)) == 5
    assert weyl_dimension(a2, (1, 0)) == 3
    assert weyl_dimension(a2, (1, 1)) == 8
    assert weyl_dimension(parse_type("E8"), (0,) * 7 + (1,)) == 248
    with pytest.raises(ArgumentError):
        weyl_dimension(a2, (-1, 0))


def test_dominant_representative(a1, a2):
    assert dominant_representative(a1, (-3,)) == ((3,), -1)
    assert dominant_representative(a2, (-1, 0)) == ((0, 1), 1)
    assert dominant_representative(a2, (2, 1)) == ((2, 1), 1)


def test_lattice_ball(a1):
    """Test root-lattice points within a radius, ordered by norm"""
    assert lattice_ball(a1, (0,), 2) == [(0,), (-2,), (2,)]
    assert lattice_ball(a1, (0,), Fraction(1, 2)) == [(0,)]
    assert lattice_ball(a1, (0,), -1) == []


def test_orbit(a2):
    assert orbit(a2, (1, 0)) == sorted([(1, 0), (-1, 1), (0, -1)])
    assert len(orbit(a2, (1, 1))) == 6


def test_class_representative(a2):
    assert class_representative(a2, (1, 0)) == 1
    assert class_representative(a2, (0, 1)) == 2
    assert class_representative(a2, (2, -1)) == 0
    assert class_representative(a2, (-1, 0)) == 2
    assert in_root_lattice(a2, (2, -1))
    assert not in_root_lattice(a2, (1, 0))


small = st.integers(min_value=-4, max_value=4)


@settings(max_examples=50, deadline=None)
@given(st.tuples(small, small, small, small), st.tuples(small, small, small, small), st.integers(1, 4))
def test_form_is_weyl_invariant(mu, nu, i):
    """Test (sigma_i mu, sigma_i nu) = (mu, nu) on D4"""
    rs = parse_type("D4")
    assert pairing(rs, reflect(rs, i, mu), reflect(rs, i, nu)) == pairing(rs, mu, nu)
    assert reflect(rs, i, reflect(rs, i, mu)) == mu


@settings(max_examples=50, deadline=None)
@given(st.tuples(small, small))
def test_dominant_representative_in_orbit(mu):
    rs = parse_type("A2")
    dominant, sign = dominant_representative(rs, mu)
    assert all(c >= 0 for c in dominant)
    assert dominant in orbit(rs, mu)
    assert sign in (1, -1)
