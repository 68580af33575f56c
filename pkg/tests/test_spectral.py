import math

import numpy as np
import pytest
import scipy.sparse as sp
from hypothesis import given, settings, strategies as st

from graphentropy import (ConvergenceError, DisconnectedGraphError, Graph,
                          complete_bipartite_graph, complete_graph, cycle_graph,
                          dynamical_entropy, generate_er, max_entropy_chain, path_graph,
                          schwarz_constant, schwarz_estimate, spectral_radius, star_graph,
                          topological_entropy)
from graphentropy.spectral import (MarkovChain, random_chain, rayleigh_lower_bound,
                                   stationary_distribution)

P3 = path_graph(3)


def dense_lambda(g):
    return float(np.linalg.eigvalsh(g.adjacency_matrix(sparse=False))[-1])


@pytest.mark.parametrize("n", [3, 4, 7, 20])
def test_cycle_lambda_is_two(n):
    r = spectral_radius(cycle_graph(n))
    assert r.lam == pytest.approx(2.0, abs=1e-12)
    assert topological_entropy(cycle_graph(n)) == pytest.approx(1.0, abs=1e-12)


def test_k23():
    assert spectral_radius(complete_bipartite_graph(2, 3)).lam == pytest.approx(math.sqrt(6), abs=1e-12)


def test_p3_perron():
    r = spectral_radius(P3)
    assert r.lam == pytest.approx(math.sqrt(2), abs=1e-13)
    np.testing.assert_allclose(r.perron, [0.292893, 0.414214, 0.292893], atol=1e-6)
    assert r.perron.sum() == pytest.approx(1.0)
    assert topological_entropy(P3) == pytest.approx(0.5, abs=1e-13)


def test_karate_entropy(karate):
    assert topological_entropy(karate) == pytest.approx(math.log2(2 * 3.3628), abs=1e-4)


def test_disconnected_rejected():
    with pytest.raises(DisconnectedGraphError):
        spectral_radius(Graph.from_edges(4, [(0, 1), (2, 3)]))


def test_nonconvergence_reports_residual():
    with pytest.raises(ConvergenceError) as info:
        spectral_radius(generate_er(30, 0.2, 1), max_iter=2)
    assert info.value.residual > 0


@given(st.integers(0, 10**6), st.integers(4, 40), st.floats(0.1, 0.7))
@settings(max_examples=40, deadline=None)
def test_power_iteration_matches_dense(seed, n, p):
    try:
        g = generate_er(n, p, seed, max_retries=20)
    except RuntimeError:
        return
    r = spectral_radius(g)
    assert r.lam == pytest.approx(dense_lambda(g), abs=1e-10)
    assert np.all(r.perron > 0)
    a = g.adjacency_matrix()
    assert np.max(np.abs(a @ r.perron - r.lam * r.perron)) <= 1e-10 * np.max(r.perron) * r.lam
    d = g.degrees
    assert d.min() - 1e-12 <= r.lam <= d.max() + 1e-12
    assert r.lam >= d.mean() - 1e-12


def test_schwarz_constants():
    g = generate_er(12, 0.4, 2)
    assert schwarz_constant(g, 0) == g.n
    assert schwarz_constant(g, 1) == 2 * g.m
    assert schwarz_constant(P3, 3) == 8
    assert schwarz_constant(P3, 4) == 12
    a = g.adjacency_matrix(sparse=False).astype(np.int64)
    assert schwarz_constant(g, 5) == int(np.ones(g.n) @ np.linalg.matrix_power(a, 5) @ np.ones(g.n))


def test_schwarz_constant_is_exact_for_large_k():
    # 2-regular: N_k = n 2^k, far beyond float precision at k = 200
    assert schwarz_constant(cycle_graph(5), 200) == 5 * 2**200


def test_schwarz_estimates():
    assert schwarz_estimate(P3, 1) == pytest.approx(4.0)
    assert schwarz_estimate(P3, 4) == pytest.approx(12 ** 0.25, abs=1e-12)
    assert schwarz_estimate(cycle_graph(5), 1) == pytest.approx(10.0)
    assert schwarz_estimate(cycle_graph(5), 20) == pytest.approx((5 * 2**20) ** (1 / 20), rel=1e-12)
    with pytest.raises(ValueError):
        schwarz_estimate(P3, 0)


def test_max_entropy_chain_complete():
    c = max_entropy_chain(complete_graph(5))
    p = c.transition.toarray()
    np.testing.assert_allclose(p, (np.ones((5, 5)) - np.eye(5)) / 4, atol=1e-14)
    np.testing.assert_allclose(c.stationary, np.full(5, 0.2), atol=1e-14)
    assert dynamical_entropy(c) == pytest.approx(2.0, abs=1e-12)


def test_max_entropy_chain_p3():
    c = max_entropy_chain(P3)
    p = c.transition.toarray()
    np.testing.assert_allclose(p, [[0, 1, 0], [0.5, 0, 0.5], [0, 1, 0]], atol=1e-14)
    np.testing.assert_allclose(c.stationary, [0.25, 0.5, 0.25], atol=1e-14)
    assert dynamical_entropy(c) == pytest.approx(0.5, abs=1e-13)


def test_max_entropy_chain_karate(karate):
    c = max_entropy_chain(karate)
    rows = np.asarray(c.transition.sum(axis=1)).ravel()
    assert np.max(np.abs(rows - 1)) <= 1e-12
    assert c.stationarity_error() <= 1e-10
    assert c.is_supported_on(karate)
    np.testing.assert_allclose(stationary_distribution(c.transition), c.stationary, atol=1e-12)
    assert abs(dynamical_entropy(c) - math.log2(spectral_radius(karate).lam)) <= 1e-9


def test_deterministic_cycle_chain_has_zero_entropy():
    p = sp.csr_matrix(np.roll(np.eye(4), 1, axis=1))
    c = MarkovChain(p, np.full(4, 0.25))
    assert dynamical_entropy(c) == 0.0
    assert c.stationarity_error() == 0.0


def test_markov_chain_rejects_non_stochastic():
    with pytest.raises(ValueError):
        MarkovChain(sp.csr_matrix(np.eye(2) * 0.5), np.full(2, 0.5))


@pytest.mark.parametrize("seed", range(3))
def test_random_chains_stay_below_topological_entropy(seed):
    g = generate_er(25, 0.25, seed)
    rng = np.random.default_rng(seed)
    bound = topological_entropy(g)
    for _ in range(20):
        c = random_chain(g, rng)
        assert c.is_supported_on(g)
        assert dynamical_entropy(c) <= bound + 1e-9


def test_rayleigh_lower_bound():
    for g in (cycle_graph(7), complete_graph(6)):
        for a in (-1.0, 0.3, 2.0):
            assert rayleigh_lower_bound(g, a) == pytest.approx(spectral_radius(g).lam, abs=1e-12)
    assert rayleigh_lower_bound(complete_bipartite_graph(2, 3), 0.5) == pytest.approx(math.sqrt(6), abs=1e-12)
    g = generate_er(20, 0.3, 4)
    assert rayleigh_lower_bound(g, 0) == pytest.approx(g.degrees.mean(), abs=1e-12)
    for a in np.linspace(-2, 3, 11):
        assert rayleigh_lower_bound(g, a) <= spectral_radius(g).lam + 1e-12


def test_star_lambda():
    assert spectral_radius(star_graph(9)).lam == pytest.approx(3.0, abs=1e-12)
