"""Simple undirected graphs, degree sequences, file loaders and random graphs.

A :class:`Graph` stores sorted neighbor tuples for vertices ``0..n-1``.
Everything else in the package takes a ``Graph`` and never mutates it.
"""
from __future__ import annotations

import io
import logging
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Sequence, TextIO

import numpy as np
import scipy.sparse as sp

log = logging.getLogger(__name__)

#: retries allowed when an Erdos-Renyi draw comes out disconnected
ER_MAX_RETRIES = 100


class GraphFormatError(ValueError):
    """Raised when a graph file cannot be parsed."""


class DisconnectedGraphError(ValueError):
    """Raised by operations that need a connected graph."""


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple undirected graph.

    Parameters
    ----------
    adj : tuple of tuples
        ``adj[v]`` is the sorted tuple of neighbors of ``v``.
    labels : tuple, optional
        Original vertex labels (``labels[v]`` is the label of ``v``).
    meta : dict
        Free-form provenance (loader warnings, generator seed, ...).
    """

    adj: tuple[tuple[int, ...], ...]
    labels: tuple | None = None
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        total = 0
        for v, nbrs in enumerate(self.adj):
            for u in nbrs:
                if u == v:
                    raise ValueError(f"self-loop at vertex {v}")
                if v not in self.adj[u]:
                    raise ValueError(f"adjacency not symmetric for {v}-{u}")
            if len(set(nbrs)) != len(nbrs):
                raise ValueError(f"parallel edge at vertex {v}")
            total += len(nbrs)
        assert total % 2 == 0

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], **kwargs) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if v in nbrs[u]:
                raise ValueError(f"duplicate edge {u}-{v}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(tuple(tuple(sorted(s)) for s in nbrs), **kwargs)

    @property
    def n(self) -> int:
        return len(self.adj)

    @cached_property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    @cached_property
    def degrees(self) -> np.ndarray:
        """Degree of every vertex, as an int64 array indexed by vertex."""
        return np.array([len(a) for a in self.adj], dtype=np.int64)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as ``(u, v)`` with ``u < v``, in sorted order."""
        for u, nbrs in enumerate(self.adj):
            for v in nbrs:
                if u < v:
                    yield u, v

    @cached_property
    def edge_array(self) -> np.ndarray:
        arr = np.array(list(self.edges()), dtype=np.int64)
        return arr.reshape(-1, 2)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj_sets[u]

    @cached_property
    def _adj_sets(self) -> tuple[frozenset, ...]:
        return tuple(frozenset(a) for a in self.adj)

    def adjacency_matrix(self, sparse: bool = True):
        """Adjacency matrix as CSR (default) or a dense float array."""
        e = self.edge_array
        rows = np.concatenate([e[:, 0], e[:, 1]])
        cols = np.concatenate([e[:, 1], e[:, 0]])
        a = sp.csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(self.n, self.n))
        a.sort_indices()
        return a if sparse else a.toarray()

    def with_edges(self, remove=(), add=()) -> "Graph":
        """Return a copy with some edges removed and others added."""
        nbrs = [set(a) for a in self.adj]
        for u, v in remove:
            nbrs[u].remove(v)
            nbrs[v].remove(u)
        for u, v in add:
            if v in nbrs[u] or u == v:
                raise ValueError(f"cannot add edge {u}-{v}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return Graph(tuple(tuple(sorted(s)) for s in nbrs), labels=self.labels)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.adj == other.adj

    def __hash__(self):
        return hash(self.adj)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class DegreeStats:
    d_min: int
    d_avg: Fraction
    d_max: int

    def formatted_avg(self, decimals: int = 3) -> str:
        return f"{float(self.d_avg):.{decimals}f}"


# ---------------------------------------------------------------- loading

def _as_lines(text) -> Iterable[str]:
    if isinstance(text, str):
        return io.StringIO(text)
    return text


def load_edge_list(text: str | TextIO) -> Graph:
    """Parse whitespace-separated ``u v`` integer pairs.

    Lines starting with ``%`` or ``#`` are comments. Vertex labels are
    renumbered ``0..n-1`` in order of first appearance; the original labels
    are kept in ``Graph.labels``. Self-loops and repeated edges are dropped and
    counted in ``meta["dropped"]``.
    """
    index: dict[int, int] = {}
    edges: set[tuple[int, int]] = set()
    dropped = 0
    for lineno, line in enumerate(_as_lines(text), start=1):
        s = line.strip()
        if not s or s[0] in "%#":
            continue
        parts = s.split()
        if len(parts) < 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {s!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer vertex id in {s!r}") from None
        u = index.setdefault(a, len(index))
        v = index.setdefault(b, len(index))
        if u == v or (min(u, v), max(u, v)) in edges:
            dropped += 1
            continue
        edges.add((min(u, v), max(u, v)))
    if not edges:
        raise GraphFormatError("empty edge set")
    if dropped:
        log.warning("dropped %d self-loops/duplicate edges", dropped)
    labels = tuple(index)
    return Graph.from_edges(len(index), sorted(edges), labels=labels,
                            meta={"dropped": dropped, "format": "edgelist"})


def load_matrix_market(text: str | TextIO) -> Graph:
    """Parse a ``%%MatrixMarket matrix coordinate pattern symmetric`` file.

    Entries are 1-based; vertex ``i`` of the file becomes vertex ``i-1``.
    Value columns, if present, are ignored.
    """
    lines = iter(enumerate(_as_lines(text), start=1))
    try:
        _, header = next(lines)
    except StopIteration:
        raise GraphFormatError("empty Matrix Market file") from None
    tokens = header.strip().lower().split()
    if len(tokens) != 5 or tokens[0] != "%%matrixmarket" or tokens[1] != "matrix":
        raise GraphFormatError(f"line 1: not a Matrix Market header: {header.strip()!r}")
    fmt, fld, sym = tokens[2:]
    if fmt != "coordinate" or fld not in ("pattern", "integer", "real") or sym != "symmetric":
        raise GraphFormatError(f"unsupported Matrix Market kind: {fmt} {fld} {sym}")

    size = None
    edges: set[tuple[int, int]] = set()
    dropped = 0
    for lineno, line in lines:
        s = line.strip()
        if not s or s[0] == "%":
            continue
        parts = s.split()
        try:
            nums = [int(p) for p in parts[:3 if size is None else 2]]
        except ValueError:
            raise GraphFormatError(f"line {lineno}: malformed entry {s!r}") from None
        if size is None:
            if len(nums) != 3 or nums[0] != nums[1]:
                raise GraphFormatError(f"line {lineno}: bad size line {s!r}")
            size = nums[0]
            continue
        if len(nums) != 2:
            raise GraphFormatError(f"line {lineno}: malformed entry {s!r}")
        i, j = nums
        if not (1 <= i <= size and 1 <= j <= size):
            raise GraphFormatError(f"line {lineno}: index out of range in {s!r}")
        u, v = min(i, j) - 1, max(i, j) - 1
        if u == v or (u, v) in edges:
            dropped += 1
            continue
        edges.add((u, v))
    if size is None or not edges:
        raise GraphFormatError("empty edge set")
    if dropped:
        log.warning("dropped %d self-loops/duplicate edges", dropped)
    return Graph.from_edges(size, sorted(edges), labels=tuple(range(1, size + 1)),
                            meta={"dropped": dropped, "format": "mtx"})


def read_graph(path) -> Graph:
    """Load a file, choosing the Matrix Market parser when the header says so."""
    with open(path) as fh:
        text = fh.read()
    if text.lstrip().lower().startswith("%%matrixmarket"):
        return load_matrix_market(text)
    return load_edge_list(text)


def write_edge_list(g: Graph, stream: TextIO) -> None:
    """Write sorted ``u v`` lines with ``u < v`` (internal vertex ids)."""
    for u, v in g.edges():
        stream.write(f"{u} {v}\n")


def edge_list_text(g: Graph) -> str:
    buf = io.StringIO()
    write_edge_list(g, buf)
    return buf.getvalue()


# ------------------------------------------------------- degree sequences

def degree_sequence(g: Graph) -> tuple[int, ...]:
    return tuple(sorted((int(d) for d in g.degrees), reverse=True))


def degree_stats(g: Graph) -> DegreeStats:
    d = g.degrees
    return DegreeStats(int(d.min()), Fraction(2 * g.m, g.n), int(d.max()))


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return len(bfs_layers(g, 0)[0]) == g.n


def bfs_layers(g: Graph, root: int) -> tuple[list[int], dict[int, int]]:
    """Plain BFS from ``root``: (visit order, distance map)."""
    dist = {root: 0}
    order = [root]
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for u in g.adj[v]:
            if u not in dist:
                dist[u] = dist[v] + 1
                order.append(u)
                queue.append(u)
    return order, dist


def is_graphical(pi: Sequence[int]) -> bool:
    """Havel-Hakimi test on a sequence of non-negative integers."""
    seq = sorted((int(d) for d in pi), reverse=True)
    if any(d < 0 for d in seq) or sum(seq) % 2:
        return False
    while seq and seq[0] > 0:
        d = seq.pop(0)
        if d > len(seq):
            return False
        for i in range(d):
            seq[i] -= 1
            if seq[i] < 0:
                return False
        seq.sort(reverse=True)
    return True


def is_tree_sequence(pi: Sequence[int]) -> bool:
    return len(pi) >= 2 and all(d >= 1 for d in pi) and sum(pi) == 2 * (len(pi) - 1)


def is_connected_realizable(pi: Sequence[int]) -> bool:
    """True iff some connected simple graph has degree sequence ``pi``."""
    n = len(pi)
    if n == 1:
        return pi[0] == 0
    return is_graphical(pi) and min(pi) >= 1 and sum(pi) >= 2 * (n - 1)


def check_sequence(pi: Sequence[int]) -> tuple[int, ...]:
    """Return ``pi`` as a non-increasing tuple, rejecting unsorted input."""
    seq = tuple(int(d) for d in pi)
    if any(a < b for a, b in zip(seq, seq[1:])):
        raise ValueError(f"degree sequence must be non-increasing: {seq}")
    return seq


# -------------------------------------------------------------- generators

def generate_er(n: int, p: float, seed: int, max_retries: int = ER_MAX_RETRIES) -> Graph:
    """Connected Erdos-Renyi G(n, p) sample.

    Uses numpy's counter-based Philox bit generator keyed by ``seed``: one
    uniform draw per vertex pair ``i < j`` in lexicographic order. A
    disconnected draw is retried with ``seed + 1``, ``seed + 2``, ...; the
    seed actually used is stored in ``meta["seed"]``.
    """
    if not 0 <= p <= 1:
        raise ValueError("p must lie in [0, 1]")
    if n < 1:
        raise ValueError("n must be positive")
    iu, ju = np.triu_indices(n, k=1)
    for attempt in range(max_retries + 1):
        s = seed + attempt
        rng = np.random.Generator(np.random.Philox(s))
        keep = rng.random(len(iu)) < p
        g = Graph.from_edges(n, zip(iu[keep], ju[keep]),
                             meta={"generator": "er-philox", "n": n, "p": p,
                                   "seed": s, "requested_seed": seed})
        if is_connected(g):
            return g
    raise RuntimeError(f"no connected G({n}, {p}) within {max_retries} retries "
                       f"from seed {seed}; try a larger p")


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(k: int) -> Graph:
    """``K_{1,k}`` with center 0."""
    return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite_graph(s: int, t: int) -> Graph:
    return Graph.from_edges(s + t, [(i, s + j) for i in range(s) for j in range(t)])
