"""Degree-preserving edge switches, Randic hill climbing and assortativity.

A switch ``(x, y, a, b)`` removes edges ``xy`` and ``ab`` and adds ``xa`` and
``yb``. Every vertex keeps its degree, so only the pairing of degrees along
edges changes.
"""
from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from typing import TextIO

import numpy as np

from .graph import DisconnectedGraphError, Graph, is_connected
from .randic import _powers, randic_index

DEFAULT_BUDGET = 10**4
TRACE_HEADER = ("step", "dx", "dy", "da", "db", "deltaR", "R")


class InvalidSwitchError(ValueError):
    pass


class SwitchRejected(ValueError):
    """The switch would disconnect the graph."""


@dataclass(frozen=True)
class Switch:
    x: int
    y: int
    a: int
    b: int

    def validate(self, g: Graph) -> None:
        x, y, a, b = self.x, self.y, self.a, self.b
        if len({x, y, a, b}) != 4:
            raise InvalidSwitchError(f"{self}: vertices must be distinct")
        if not g.has_edge(x, y):
            raise InvalidSwitchError(f"{self}: xy is not an edge")
        if not g.has_edge(a, b):
            raise InvalidSwitchError(f"{self}: ab is not an edge")
        if g.has_edge(x, a):
            raise InvalidSwitchError(f"{self}: xa is already an edge")
        if g.has_edge(y, b):
            raise InvalidSwitchError(f"{self}: yb is already an edge")

    def canonical(self) -> tuple[int, int, int, int]:
        """Smallest of the four tuples describing the same move."""
        x, y, a, b = self.x, self.y, self.a, self.b
        return min((x, y, a, b), (a, b, x, y), (y, x, b, a), (b, a, y, x))


def _deg_power(g: Graph, v: int, alpha: float) -> float:
    d = np.array([g.degrees[v]])
    return float(_powers(d, np.log2(d.astype(float)), alpha)[0])


def delta_randic(g: Graph, s: Switch, alpha: float) -> float:
    """Change of ``R_alpha`` under ``s``: ``(d_b^a - d_x^a)(d_y^a - d_a^a)``."""
    s.validate(g)
    px, py, pa, pb = (_deg_power(g, v, alpha) for v in (s.x, s.y, s.a, s.b))
    return (pb - px) * (py - pa)


def apply_switch(g: Graph, s: Switch, require_connected: bool = True) -> Graph:
    s.validate(g)
    h = g.with_edges(remove=[(s.x, s.y), (s.a, s.b)], add=[(s.x, s.a), (s.y, s.b)])
    if require_connected and not is_connected(h):
        raise SwitchRejected(f"{s} disconnects the graph")
    return h


def candidate_switches(g: Graph, alpha: float):
    """All valid switches with their ``delta R``, as arrays.

    Returns ``(tuples, deltas)`` where ``tuples`` is ``(k, 4)`` in canonical
    form. Each unordered pair of edges gives up to two distinct moves.
    """
    e = g.edge_array
    m = len(e)
    if m < 2:
        return np.empty((0, 4), dtype=np.int64), np.empty(0)
    deg = g.degrees
    pw = _powers(deg, np.log2(deg.astype(float)), alpha)
    adj = np.zeros((g.n, g.n), dtype=bool)
    adj[e[:, 0], e[:, 1]] = adj[e[:, 1], e[:, 0]] = True
    i, j = np.triu_indices(m, k=1)
    out_t, out_d = [], []
    for flip in (False, True):
        x, y = e[i, 0], e[i, 1]
        a, b = (e[j, 1], e[j, 0]) if flip else (e[j, 0], e[j, 1])
        ok = (x != a) & (x != b) & (y != a) & (y != b) & ~adj[x, a] & ~adj[y, b]
        x, y, a, b = x[ok], y[ok], a[ok], b[ok]
        out_d.append((pw[b] - pw[x]) * (pw[y] - pw[a]))
        out_t.append(_canonical_rows(np.stack([x, y, a, b], axis=1), g.n))
    return np.concatenate(out_t), np.concatenate(out_d)


def _canonical_rows(t: np.ndarray, n: int) -> np.ndarray:
    forms = np.stack([t, t[:, [2, 3, 0, 1]], t[:, [1, 0, 3, 2]], t[:, [3, 2, 1, 0]]], axis=1)
    # base-n encoding orders the tuples lexicographically
    key = ((forms[..., 0] * n + forms[..., 1]) * n + forms[..., 2]) * n + forms[..., 3]
    return forms[np.arange(len(t)), np.argmin(key, axis=1)]


@dataclass
class TraceStep:
    step: int
    switch: Switch
    degrees: tuple[int, int, int, int]
    delta: float
    R: float


@dataclass
class ClimbResult:
    graph: Graph
    trace: list[TraceStep] = field(default_factory=list)
    initial_R: float = 0.0
    budget_exhausted: bool = False

    def write_trace(self, stream: TextIO) -> None:
        w = csv.writer(stream, lineterminator="\n")
        w.writerow(TRACE_HEADER)
        for t in self.trace:
            w.writerow([t.step, *t.degrees, f"{t.delta:.12g}", f"{t.R:.12g}"])


def maximize_randic(g: Graph, alpha: float, budget: int = DEFAULT_BUDGET,
                    seed: int | None = None) -> ClimbResult:
    """Steepest-ascent hill climb on ``R_alpha`` over connected switches.

    Each round scans every valid switch, and applies the one with the
    largest strictly positive gain that keeps the graph connected (ties go
    to the lexicographically smallest canonical switch tuple). Stops at a
    local optimum or after ``budget`` rounds. ``seed`` is accepted for
    randomized restarts but the climb itself is deterministic.
    """
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    if not is_connected(g):
        raise DisconnectedGraphError("hill climb needs a connected graph")
    r = randic_index(g, alpha)
    result = ClimbResult(g, initial_R=r)
    deg = g.degrees
    for step in range(1, budget + 1):
        tuples, deltas = candidate_switches(g, alpha)
        pos = deltas > 0
        if not pos.any():
            break
        tuples, deltas = tuples[pos], deltas[pos]
        order = np.lexsort((tuples[:, 3], tuples[:, 2], tuples[:, 1], tuples[:, 0], -deltas))
        for k in order:
            s = Switch(*(int(v) for v in tuples[k]))
            try:
                h = apply_switch(g, s, require_connected=True)
            except SwitchRejected:
                continue
            g = h
            r = r + float(deltas[k])
            result.trace.append(TraceStep(step, s, tuple(int(deg[v]) for v in tuples[k]),
                                          float(deltas[k]), r))
            break
        else:
            break
    else:
        result.budget_exhausted = bool((candidate_switches(g, alpha)[1] > 0).any())
    result.graph = g
    return result


def assortativity_r(g: Graph) -> float:
    """Newman's degree assortativity: Pearson correlation of the degrees at
    the two ends of an edge, each edge counted in both directions."""
    if g.m < 2:
        raise ValueError("assortativity needs at least two edges")
    e = g.edge_array
    d = g.degrees.astype(float)
    x = np.concatenate([d[e[:, 0]], d[e[:, 1]]])
    y = np.concatenate([d[e[:, 1]], d[e[:, 0]]])
    var = np.mean(x * x) - np.mean(x) ** 2
    if var <= 0 or math.isclose(var, 0.0, abs_tol=1e-14 * np.mean(x * x)):
        raise ValueError("assortativity is undefined when all edge endpoints share one degree")
    return float((np.mean(x * y) - np.mean(x) * np.mean(y)) / var)
