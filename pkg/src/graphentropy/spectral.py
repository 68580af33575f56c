"""Spectral radius, Perron vector, topological entropy and the max-entropy walk."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from .graph import DisconnectedGraphError, Graph, is_connected

RESIDUAL_TOL = 1e-13
MAX_ITER = 10**6


class ConvergenceError(RuntimeError):
    def __init__(self, message, residual):
        super().__init__(message)
        self.residual = residual


@dataclass(frozen=True, eq=False)
class SpectralResult:
    """Dominant eigenpair of a connected graph's adjacency matrix.

    ``perron`` is positive and sums to one. ``residual`` is the relative
    residual ``|A f - lam f|_inf / (lam |f|_inf)`` of the returned pair.
    """

    lam: float
    perron: np.ndarray
    iterations: int
    residual: float

    @property
    def entropy_bits(self) -> float:
        return math.log2(self.lam)


def spectral_radius(g: Graph, tol: float = RESIDUAL_TOL, max_iter: int = MAX_ITER) -> SpectralResult:
    """Power iteration on ``A + I`` started from the all-ones vector.

    The identity shift makes ``A + I`` primitive on any connected graph, so
    bipartite graphs converge too. Iteration stops once the relative
    infinity-norm residual of the shifted operator drops to ``tol``.
    """
    if not is_connected(g):
        raise DisconnectedGraphError("spectral radius needs a connected graph")
    n = g.n
    if n == 1:
        return SpectralResult(0.0, np.ones(1), 0, 0.0)
    a = g.adjacency_matrix()
    x = np.full(n, 1.0 / n)
    residual = math.inf
    for it in range(1, max_iter + 1):
        y = a @ x + x
        mu = float(x @ y) / float(x @ x)
        residual = float(np.max(np.abs(y - mu * x))) / (mu * float(np.max(x)))
        x = y / y.sum()
        if residual <= tol:
            break
    else:
        raise ConvergenceError(f"power iteration did not converge in {max_iter} steps "
                               f"(residual {residual:.3e})", residual)
    ax = a @ x
    lam = float(x @ ax) / float(x @ x)
    res = float(np.max(np.abs(ax - lam * x))) / (lam * float(np.max(x)))
    if np.any(x <= 0):
        raise ConvergenceError("Perron vector has non-positive entries", res)
    return SpectralResult(lam, x, it, res)


def topological_entropy(g: Graph) -> float:
    """Topological entropy ``log2 lambda(G)`` in bits."""
    return math.log2(spectral_radius(g).lam)


def schwarz_constant(g: Graph, k: int) -> int:
    """Number of walks of length ``k``, exactly: ``<1, A^k 1>``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    x = [1] * g.n
    for _ in range(k):
        x = [sum(x[u] for u in nbrs) for nbrs in g.adj]
    return sum(x)


def schwarz_estimate(g: Graph, k: int) -> float:
    """``N_k ** (1/k)``, which tends to the spectral radius."""
    if k < 1:
        raise ValueError("k must be positive")
    nk = schwarz_constant(g, k)
    return math.exp(math.log(nk) / k) if nk else 0.0


@dataclass(frozen=True, eq=False)
class MarkovChain:
    """Row-stochastic matrix (CSR) with its stationary distribution."""

    transition: sp.csr_matrix
    stationary: np.ndarray

    def __post_init__(self):
        rows = np.asarray(self.transition.sum(axis=1)).ravel()
        if np.any(self.transition.data < 0) or np.max(np.abs(rows - 1)) > 1e-9:
            raise ValueError("transition matrix is not row-stochastic")

    def stationarity_error(self) -> float:
        pi = self.stationary
        return float(np.max(np.abs(self.transition.T @ pi - pi)))

    def is_supported_on(self, g: Graph) -> bool:
        coo = self.transition.tocoo()
        mask = coo.data != 0
        return all(g.has_edge(int(i), int(j)) for i, j in zip(coo.row[mask], coo.col[mask]))


def max_entropy_chain(g: Graph, spectrum: SpectralResult | None = None) -> MarkovChain:
    """The walk ``p_ij = a_ij f_j / (lambda f_i)`` built from the Perron pair.

    It is reversible with respect to ``f_i^2``, which gives the stationary
    distribution in closed form.
    """
    s = spectrum or spectral_radius(g)
    f = s.perron
    a = g.adjacency_matrix()
    p = sp.diags(1.0 / (s.lam * f)) @ a @ sp.diags(f)
    pi = f**2 / np.sum(f**2)
    return MarkovChain(sp.csr_matrix(p), pi)


def dynamical_entropy(chain: MarkovChain) -> float:
    """Entropy rate ``-sum_i pi_i sum_j p_ij log2 p_ij`` (0 log 0 = 0)."""
    p = chain.transition.tocoo()
    mask = p.data > 0
    rows, vals = p.row[mask], p.data[mask]
    return float(-np.sum(chain.stationary[rows] * vals * np.log2(vals)))


def stationary_distribution(transition) -> np.ndarray:
    """Solve ``pi P = pi, sum(pi) = 1`` as a dense linear system."""
    p = transition.toarray() if sp.issparse(transition) else np.asarray(transition, float)
    n = p.shape[0]
    m = p.T - np.eye(n)
    m[-1, :] = 1.0
    rhs = np.zeros(n)
    rhs[-1] = 1.0
    return np.linalg.solve(m, rhs)


def random_chain(g: Graph, rng: np.random.Generator) -> MarkovChain:
    """A random irreducible chain on ``g``: positive weights on every edge."""
    a = g.adjacency_matrix().tocsr()
    w = a.copy()
    w.data = rng.random(len(w.data)) + 1e-3
    w = sp.diags(1.0 / np.asarray(w.sum(axis=1)).ravel()) @ w
    w = sp.csr_matrix(w)
    return MarkovChain(w, stationary_distribution(w))


def rayleigh_lower_bound(g: Graph, alpha: float) -> float:
    """``2 * Rbar_alpha``, a lower bound on the spectral radius for every alpha."""
    from .randic import normalized_randic

    return 2.0 * normalized_randic(g, alpha)
