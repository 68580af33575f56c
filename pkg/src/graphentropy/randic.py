"""General Randic index, the normalized Randic function and related entropies.

All logarithms are base 2. Sums are grouped by distinct degree products and
accumulated with :func:`math.fsum`, so regular graphs give exactly constant
normalized values and integer exponents give exact integer indices.
"""
from __future__ import annotations

import csv
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import TextIO

import numpy as np

from .graph import Graph

GRID_STEP = 0.01
DEFAULT_LO, DEFAULT_HI = -2.0, 4.0
LIMIT_BAND = 1e-8
CSV_HEADER = ("alpha", "R", "Rbar", "logRbar", "HE", "HV", "renyi", "tsallis")


class AlphaStarBoundaryError(ValueError):
    """The maximum of the normalized Randic function sits on the search boundary."""


def _powers(values: np.ndarray, log2v: np.ndarray, alpha: float) -> np.ndarray:
    # integer exponents stay exact; everything else goes through exp2/log2
    if float(alpha).is_integer() and abs(alpha) <= 64:
        return values.astype(float) ** int(alpha)
    return np.exp2(alpha * log2v)


class _Profile:
    """Distinct degree products on edges and squared degrees on vertices."""

    def __init__(self, g: Graph):
        if g.m == 0 or g.degrees.min() < 1:
            raise ValueError("Randic quantities need a graph without isolated vertices")
        d = g.degrees
        e = g.edge_array
        prod = d[e[:, 0]] * d[e[:, 1]]
        self.edge_products = prod
        self.e_vals, self.e_counts = np.unique(prod, return_counts=True)
        self.v_vals, self.v_counts = np.unique(d * d, return_counts=True)
        self.e_log = np.log2(self.e_vals.astype(float))
        self.v_log = np.log2(self.v_vals.astype(float))
        self.m, self.n = g.m, g.n

    def edge_weights(self, alpha):
        return _powers(self.e_vals, self.e_log, alpha)

    def vertex_weights(self, alpha):
        return _powers(self.v_vals, self.v_log, alpha)

    def sums(self, alpha) -> tuple[float, float]:
        we, wv = self.edge_weights(alpha), self.vertex_weights(alpha)
        return (math.fsum((self.e_counts * we).tolist()),
                math.fsum((self.v_counts * wv).tolist()))

    def entropies(self, alpha) -> tuple[float, float]:
        return (_grouped_entropy(self.edge_weights(alpha), self.e_counts),
                _grouped_entropy(self.vertex_weights(alpha), self.v_counts))


def _grouped_entropy(weights, counts) -> float:
    total = math.fsum((counts * weights).tolist())
    p = weights / total
    mask = p > 0
    return -math.fsum((counts[mask] * p[mask] * np.log2(p[mask])).tolist())


@lru_cache(maxsize=64)
def _profile(g: Graph) -> _Profile:
    return _Profile(g)


def randic_index(g: Graph, alpha: float) -> float:
    """``R_alpha = sum over edges uv of (d_u d_v)**alpha``."""
    return _profile(g).sums(alpha)[0]


def normalized_randic(g: Graph, alpha: float) -> float:
    """``R_alpha / sum_v d_v**(2 alpha)``; at most half the spectral radius."""
    r, s = _profile(g).sums(alpha)
    return r / s


def log_normalized_randic(g: Graph, alpha: float) -> float:
    r, s = _profile(g).sums(alpha)
    return math.log2(r) - math.log2(s)


@dataclass(frozen=True, eq=False)
class EdgeMeasure:
    edges: np.ndarray
    probs: np.ndarray
    alpha: float


@dataclass(frozen=True, eq=False)
class VertexMeasure:
    probs: np.ndarray
    alpha: float


def edge_measure(g: Graph, alpha: float) -> EdgeMeasure:
    """Edge probabilities proportional to ``(d_u d_v)**alpha``."""
    prof = _profile(g)
    w = _powers(prof.edge_products, np.log2(prof.edge_products.astype(float)), alpha)
    return EdgeMeasure(g.edge_array, w / math.fsum(w.tolist()), alpha)


def vertex_measure(g: Graph, alpha: float) -> VertexMeasure:
    """Vertex probabilities proportional to ``(d_v**2)**alpha``."""
    sq = g.degrees * g.degrees
    w = _powers(sq, np.log2(sq.astype(float)), alpha)
    return VertexMeasure(w / math.fsum(w.tolist()), alpha)


def edge_vertex_entropies(g: Graph, alpha: float) -> tuple[float, float]:
    """Shannon entropies (bits) of the edge and vertex measures at ``alpha``."""
    return _profile(g).entropies(alpha)


def renyi_edge_entropy(g: Graph, alpha: float) -> float:
    """Renyi entropy (bits) of the degree-product edge measure ``p ~ d_u d_v``.

    Within ``1e-8`` of ``alpha = 1`` the Shannon limit is returned.
    """
    prof = _profile(g)
    r1 = prof.sums(1)[0]
    if abs(alpha - 1) < LIMIT_BAND:
        return _grouped_entropy(prof.edge_weights(1), prof.e_counts)
    ra = prof.sums(alpha)[0]
    return (math.log2(ra) - alpha * math.log2(r1)) / (1 - alpha)


def tsallis_edge_entropy(g: Graph, q: float) -> float:
    """Tsallis q-entropy of the edge measure ``p ~ d_u d_v``.

    Near ``q = 1`` this returns the Shannon entropy in nats, which is the
    actual limit of the Tsallis formula (it is ``ln 2`` times the bit value).
    """
    prof = _profile(g)
    r1 = prof.sums(1)[0]
    if abs(q - 1) < LIMIT_BAND:
        return _grouped_entropy(prof.edge_weights(1), prof.e_counts) * math.log(2)
    rq = prof.sums(q)[0]
    return (1.0 - rq / r1**q) / (q - 1)


def log_randic_derivative(g: Graph, alpha: float) -> float:
    """d/d(alpha) of ``log2 Rbar_alpha`` via ``(log2 Rbar + H_V - H_E) / alpha``."""
    if alpha == 0:
        raise ValueError("the closed-form derivative is undefined at alpha = 0")
    he, hv = edge_vertex_entropies(g, alpha)
    return (log_normalized_randic(g, alpha) + hv - he) / alpha


# ------------------------------------------------------------- alpha star

INV_PHI = (math.sqrt(5) - 1) / 2


def golden_section_max(f, a: float, b: float, tol: float = 1e-8, max_iter: int = 200):
    """Maximize a unimodal ``f`` on ``[a, b]``; returns ``(x, f(x))``."""
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(max_iter):
        if abs(b - a) <= tol:
            break
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = f(d)
    return (c, fc) if fc >= fd else (d, fd)


def alpha_grid(lo: float, hi: float, step: float) -> np.ndarray:
    if step <= 0 or hi <= lo:
        raise ValueError("need lo < hi and step > 0")
    k = int(math.floor((hi - lo) / step + 1e-9))
    # rounding keeps 0.0 (and other multiples of the step) exact
    return np.round(lo + step * np.arange(k + 1), 12)


@dataclass(frozen=True)
class AlphaStar:
    alpha: float
    rbar: float
    flat: bool = False
    local_maxima: tuple = ()


def find_alpha_star(g: Graph, lo: float = DEFAULT_LO, hi: float = DEFAULT_HI,
                    tol: float = 1e-8, step: float = GRID_STEP) -> AlphaStar:
    """Locate the maximizer of ``Rbar_alpha`` on ``[lo, hi]``.

    A grid scan picks the best grid point, then golden-section search refines
    inside the two neighbouring grid cells. A constant profile (regular
    graphs) is flagged ``flat`` and reported at ``lo``.
    """
    grid = alpha_grid(lo, hi, step)
    vals = np.array([log_normalized_randic(g, a) for a in grid])
    if vals.max() - vals.min() <= 1e-12 * max(1.0, abs(vals.max())):
        return AlphaStar(float(grid[0]), normalized_randic(g, grid[0]), flat=True)
    i = int(np.argmax(vals))
    if i == 0 or i == len(grid) - 1:
        raise AlphaStarBoundaryError(
            f"maximum of Rbar at alpha={grid[i]} lies on [{lo}, {hi}]; widen the interval")
    interior = np.flatnonzero((vals[1:-1] > vals[:-2]) & (vals[1:-1] >= vals[2:])) + 1
    a, _ = golden_section_max(lambda x: log_normalized_randic(g, x),
                              float(grid[i - 1]), float(grid[i + 1]), tol)
    return AlphaStar(float(a), normalized_randic(g, a),
                     local_maxima=tuple(float(grid[j]) for j in interior))


@dataclass(eq=False)
class AlphaProfile:
    """Tabulated alpha sweep; columns follow ``CSV_HEADER``."""

    grid: np.ndarray
    columns: dict = field(default_factory=dict)
    alpha_star: AlphaStar | None = None
    log2_half_lambda: float | None = None

    def __getitem__(self, name) -> np.ndarray:
        return self.grid if name == "alpha" else self.columns[name]

    @property
    def gap(self) -> np.ndarray:
        """``log2 Rbar - (H_E - H_V)`` per grid point (alpha times the slope)."""
        return self["logRbar"] - (self["HE"] - self["HV"])

    def crossings(self, atol: float = 1e-12) -> list[float]:
        """Grid locations where ``log2 Rbar`` meets ``H_E - H_V``.

        Exact zeros count once; a sign change between neighbours is reported
        at the linear-interpolation point.
        """
        gap = self.gap
        sign = np.where(np.abs(gap) <= atol, 0, np.sign(gap))
        out = []
        for i, s in enumerate(sign):
            if s == 0:
                if i == 0 or sign[i - 1] != 0:
                    out.append(float(self.grid[i]))
            elif i > 0 and sign[i - 1] == -s:
                a0, a1, g0, g1 = self.grid[i - 1], self.grid[i], gap[i - 1], gap[i]
                out.append(float(a0 - g0 * (a1 - a0) / (g1 - g0)))
        return out

    def write_csv(self, stream: TextIO) -> None:
        w = csv.writer(stream, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for i, a in enumerate(self.grid):
            w.writerow([_g12(a)] + [_g12(self.columns[c][i]) for c in CSV_HEADER[1:]])


def _g12(x) -> str:
    return f"{float(x):.12g}"


def _row(g: Graph, a: float) -> tuple:
    r, s = _profile(g).sums(a)
    he, hv = edge_vertex_entropies(g, a)
    return (r, r / s, math.log2(r) - math.log2(s), he, hv,
            renyi_edge_entropy(g, a), tsallis_edge_entropy(g, a))


def alpha_sweep(g: Graph, lo: float = DEFAULT_LO, hi: float = DEFAULT_HI,
                step: float = GRID_STEP, threads: int = 1) -> AlphaProfile:
    """Evaluate every Randic/entropy column on the alpha grid.

    Grid points are independent; with ``threads > 1`` they are evaluated in
    a thread pool and reassembled in grid order.
    """
    from .spectral import spectral_radius

    grid = alpha_grid(lo, hi, step)
    _profile(g)
    if threads > 1:
        with ThreadPoolExecutor(threads) as ex:
            rows = list(ex.map(lambda a: _row(g, float(a)), grid))
    else:
        rows = [_row(g, float(a)) for a in grid]
    cols = {name: np.array([r[k] for r in rows]) for k, name in enumerate(CSV_HEADER[1:])}
    try:
        star = find_alpha_star(g, lo, hi, step=step)
    except AlphaStarBoundaryError:
        star = None
    lam = spectral_radius(g).lam
    return AlphaProfile(grid, cols, star, math.log2(lam / 2))
