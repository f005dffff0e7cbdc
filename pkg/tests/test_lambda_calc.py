import pytest
from hypothesis import given, settings, strategies as st

from app.errors import ArgumentError, ResourceLimitError
from app.lambda_calc import (
    LambdaParam,
    alcove_lambdas,
    block_sizes,
    check_alcove,
    check_novel,
    cohomology_dim,
    condequiv_scan,
    dot_action_word,
    enumerate_lambdas,
    epsilon_chain,
    epsilon_direct,
    epsilon_of,
    lambda_count,
    make_lambda,
    novel_scan,
    on_wall,
    recursion_holds,
    star_action,
    star_element,
    table2_generate,
    vacuum,
)
from app.root_data import enumerate_weyl, parse_type, weyl_from_word


def test_make_lambda_validation(a2):
    """Test the box and hat constraints on parameters"""
    assert make_lambda(a2, 3, 1, (0, 2)).label == "hat=1,s=0,2"
    assert vacuum(a2, 2) == LambdaParam(p=2, hat=0, s=(0, 0))
    with pytest.raises(ArgumentError):
        make_lambda(a2, 1)
    with pytest.raises(ArgumentError):
        make_lambda(a2, 2, 0, (0, 2))
    with pytest.raises(ArgumentError):
        make_lambda(a2, 2, 0, (0,))
    with pytest.raises(ArgumentError):
        make_lambda(a2, 2, 3)
    with pytest.raises(ArgumentError):
        make_lambda(parse_type("D4"), 2, 2)


def test_enumerate_lambdas(a2, caps):
    assert lambda_count(a2, 2) == 12
    assert len(set(enumerate_lambdas(a2, 2))) == 12
    with pytest.raises(ResourceLimitError):
        list(enumerate_lambdas(a2, 2, cap=5))
    caps.max_lambda = 11
    with pytest.raises(ResourceLimitError):
        list(enumerate_lambdas(a2, 2))


def test_star_action_vacuum(a1):
    """Test sigma_1 * 0 = (hat 1, s = 0) with eps = -omega_1 for A1, p = 2"""
    lam, eps = star_action(a1, vacuum(a1, 2), 1)
    assert lam == LambdaParam(p=2, hat=1, s=(0,))
    assert eps == (-1,)


def test_star_action_a2(a2):
    lam, eps = star_action(a2, vacuum(a2, 3), 2)
    assert eps == (0, -1)
    assert lam.s == (1, 1)
    lam, eps = star_action(a2, lam, 1)
    assert eps == (-1, 1)
    assert lam.s == (0, 0)


@pytest.mark.parametrize(
    "label, p, s",
    [("A1", 2, (0,)), ("A1", 3, (0,)), ("A2", 2, (0, 0)), ("A2", 3, (0, 0)), ("A2", 3, (1, 0)), ("A2", 4, (1, 0)), ("A3", 4, (0, 0, 0)), ("D4", 6, (0,) * 4)],
)
def test_epsilon_of_w0_in_alcove(label, p, s):
    """Test eps_lambda(w0) = -rho on the alcove"""
    rs = parse_type(label)
    lam = make_lambda(rs, p, 0, s)
    assert check_alcove(rs, lam)
    assert epsilon_of(rs, lam, rs.w0_word) == tuple(-r for r in rs.rho)


@pytest.mark.parametrize("label, p", [("A3", 4), ("A3", 5), ("A4", 5), ("A4", 6), ("D4", 5), ("D4", 6), ("E6", 11), ("E6", 12)])
def test_epsilon_of_w0_on_alcove_lambdas(label, p):
    rs = parse_type(label)
    lambdas = list(alcove_lambdas(rs, p))
    assert lambdas
    for lam in lambdas:
        assert epsilon_of(rs, lam, rs.w0_word) == tuple(-r for r in rs.rho), lam.label


@pytest.mark.parametrize("p", [2, 3, 4])
def test_cocycle_matches_direct(a2, p):
    """Test the chained epsilon against the definition for every element of W(A2)"""
    for lam in enumerate_lambdas(a2, p):
        for w in enumerate_weyl(a2):
            assert epsilon_of(a2, lam, w) == epsilon_direct(a2, lam, w)
            assert dot_action_word(a2, lam, w.word) == star_element(a2, lam, w)[0]


def test_epsilon_of_rejects_non_reduced(a2):
    with pytest.raises(ArgumentError):
        epsilon_of(a2, vacuum(a2, 2), (1, 1))


def test_epsilon_chain_a2(a2):
    """Test the step-by-step chain along w0 for A2, p = 3"""
    chain = epsilon_chain(a2, vacuum(a2, 3))
    assert chain.word == (2, 1, 2)
    assert chain.steps == [(0, -1), (-1, 1), (0, -1)]
    assert chain.prefixes == [(0, -1), (-1, 0), (-1, -1)]
    assert chain.condition_holds
    assert chain.first_violation is None
    assert chain.cumulative == chain.step_sum == (-1, -1)
    assert [lam.s for lam in chain.states] == [(1, 1), (0, 0), (1, 1)]


def test_epsilon_chain_violation(a2):
    chain = epsilon_chain(a2, make_lambda(a2, 2, 0, (1, 1)))
    assert not chain.condition_holds
    assert chain.first_violation is not None


def test_epsilon_chain_word(a2):
    chain = epsilon_chain(a2, vacuum(a2, 3), (1,))
    assert chain.steps == [(-1, 0)]
    with pytest.raises(ArgumentError):
        epsilon_chain(a2, vacuum(a2, 3), (1, 1))


def test_alcove_and_wall(a1, a2):
    assert check_alcove(a1, make_lambda(a1, 2, 0, (0,)))
    assert not on_wall(a1, make_lambda(a1, 2, 0, (0,)))
    assert on_wall(a1, make_lambda(a1, 2, 0, (1,)))
    assert on_wall(a2, vacuum(a2, 2))
    assert not check_alcove(a2, make_lambda(a2, 2, 0, (1, 1)))
    assert not check_alcove(parse_type("D4"), vacuum(parse_type("D4"), 4))


@pytest.mark.parametrize("label, p", [("A1", 2), ("A1", 5), ("A2", 2), ("A2", 5), ("A3", 4), ("D4", 6)])
def test_alcove_lambdas_agree_with_filter(label, p):
    rs = parse_type(label)
    generated = sorted(alcove_lambdas(rs, p))
    filtered = sorted(lam for lam in enumerate_lambdas(rs, p) if check_alcove(rs, lam))
    assert generated == filtered


@pytest.mark.parametrize(
    "label, p",
    [("A1", 2), ("A1", 3), ("A2", 2), ("A2", 3), ("A2", 4), ("A3", 2), ("A3", 3), ("A3", 4), ("A3", 5), ("D4", 2), ("D4", 3), ("D4", 4), ("D4", 5)],
)
def test_condition_equivalent_to_alcove(label, p):
    """Test that the chain condition along w0 holds exactly on the alcove"""
    rs = parse_type(label)
    scan = condequiv_scan(rs, p)
    assert scan.total == lambda_count(rs, p)
    assert scan.mismatches == []
    assert scan.sum_failures == []
    assert scan.alcove == len(list(alcove_lambdas(rs, p)))


def test_novel_condition(a2):
    """Test s = (1, 1), p = 2: outside the alcove but eps(sigma_j) = -alpha_j for every j"""
    lam = make_lambda(a2, 2, 0, (1, 1))
    assert star_action(a2, lam, 1)[1] == (-2, 1)
    assert check_novel(a2, lam, (1, 2))
    labels = [found.label for found in novel_scan(a2, 2)]
    assert "hat=0,s=1,1" in labels
    assert all(not check_alcove(a2, found) for found in novel_scan(a2, 2))


def test_table2_generate(a2):
    assert block_sizes(a2) == [2, 1]
    assert table2_generate(a2, vacuum(a2, 3)) == [((0, -1), (-1, 1)), ((0, -1),)]
    with pytest.raises(ArgumentError):
        table2_generate(a2, make_lambda(a2, 2, 0, (1, 1)))


@pytest.mark.parametrize(
    "pairing, degree, dim",
    [(0, 0, 1), (2, 0, 3), (0, 1, 0), (-1, 0, 0), (-1, 1, 0), (-3, 1, 2), (-3, 0, 0), (4, 2, 0)],
)
def test_cohomology_dim(pairing, degree, dim):
    assert cohomology_dim((pairing,), 1, degree) == dim


def test_cohomology_dim_negative_degree():
    with pytest.raises(ArgumentError):
        cohomology_dim((0,), 1, -1)


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 6), st.integers(0, 5), st.integers(0, 5), st.sampled_from([0, 1, 2]), st.sampled_from([1, 2]))
def test_star_action_is_involution(p, s1, s2, hat, i):
    """Test sigma_i * (sigma_i * lambda) = lambda"""
    rs = parse_type("A2")
    lam = make_lambda(rs, p, hat, (s1 % p, s2 % p))
    once = star_action(rs, lam, i)[0]
    assert star_action(rs, once, i)[0] == lam


def test_epsilon_of_w0_on_a1_wall(a1):
    """On the A1 wall with s != 0 the single step is -alpha_1 rather than -rho"""
    lam = make_lambda(a1, 2, 0, (1,))
    assert on_wall(a1, lam)
    assert epsilon_of(a1, lam, a1.w0_word) == (-2,)


@pytest.mark.parametrize("label, p", [("A2", 2), ("A2", 3), ("A3", 2)])
def test_recursion_over_parameter_set(label, p):
    """Test the one-letter recursion for every lambda and every sigma, i with l(sigma_i sigma) = l(sigma) + 1"""
    rs = parse_type(label)
    elements = list(enumerate_weyl(rs))
    pairs = [
        (sigma, i)
        for sigma in elements
        for i in range(1, rs.rank + 1)
        if weyl_from_word(rs, (i,) + sigma.word).length == sigma.length + 1
    ]
    assert len(pairs) == len(elements) * rs.rank // 2
    for lam in enumerate_lambdas(rs, p):
        for sigma, i in pairs:
            assert recursion_holds(rs, lam, sigma, i), (lam.label, sigma.word, i)


@pytest.mark.parametrize("label, p", [("A1", 2), ("A1", 3), ("A2", 2), ("A2", 3), ("A2", 4), ("A3", 3)])
def test_duality_of_single_steps(label, p):
    """Test eps_lambda(sigma_i) + eps_{sigma_i * lambda}(sigma_i) = -alpha_i, or -2 alpha_i when s_i = p - 1"""
    rs = parse_type(label)
    for lam in enumerate_lambdas(rs, p):
        for i in range(1, rs.rank + 1):
            partner, first = star_action(rs, lam, i)
            second = star_action(rs, partner, i)[1]
            factor = 2 if lam.s[i - 1] == p - 1 else 1
            assert tuple(a + b for a, b in zip(first, second)) == tuple(-factor * a for a in rs.simple_root(i))


@pytest.mark.parametrize("label, p", [("A2", 2), ("A2", 3), ("A2", 4), ("A3", 2), ("A3", 3)])
def test_sign_dichotomy(label, p):
    """Test (eps_lambda(sigma), alpha_i) >= 0 when sigma_i lengthens sigma and <= -1 when it shortens it"""
    rs = parse_type(label)
    pairs = [
        (sigma, i, weyl_from_word(rs, (i,) + sigma.word).length > sigma.length)
        for sigma in enumerate_weyl(rs)
        for i in range(1, rs.rank + 1)
    ]
    for lam in enumerate_lambdas(rs, p):
        for sigma, i, longer in pairs:
            value = epsilon_direct(rs, lam, sigma)[i - 1]
            assert value >= 0 if longer else value <= -1, (lam.label, sigma.word, i)


def _sections(m):
    return max(m + 1, 0)


@pytest.mark.parametrize("m", range(-10, 11))
def test_cohomology_dim_against_serre_duality(m):
    """H^0 counts sections of O(m) on P^1 and H^1 is dual to H^0 of O(-m-2)"""
    for i, mu in ((1, (m, 0)), (2, (3, m))):
        assert cohomology_dim(mu, i, 0) == _sections(m)
        assert cohomology_dim(mu, i, 1) == _sections(-m - 2)
        assert cohomology_dim(mu, i, 2) == 0
