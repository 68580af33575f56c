"""Brute-force ground truth for small cases: labeled trees via Pruefer codes,
all realizations of a degree sequence, closed-form spectra, isomorphism."""
from __future__ import annotations

import heapq
import itertools
import math
from typing import Iterator, Sequence

from .graph import Graph, is_connected, is_tree_sequence

MAX_TREE_N = 12
MAX_GRAPH_N = 7


class OracleGuardError(ValueError):
    """Enumeration refused: the instance is too large for brute force."""


def _distinct_permutations(items: Sequence[int]) -> Iterator[tuple[int, ...]]:
    a = sorted(items)
    n = len(a)
    while True:
        yield tuple(a)
        i = n - 2
        while i >= 0 and a[i] >= a[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while a[j] <= a[i]:
            j -= 1
        a[i], a[j] = a[j], a[i]
        a[i + 1:] = reversed(a[i + 1:])


def pruefer_decode(code: Sequence[int], n: int) -> Graph:
    degree = [1] * n
    for v in code:
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in code:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph.from_edges(n, edges)


def tree_count(pi: Sequence[int]) -> int:
    """Labeled trees where vertex ``i`` has degree ``pi[i]``."""
    n = len(pi)
    return math.factorial(n - 2) // math.prod(math.factorial(d - 1) for d in pi)


def enumerate_trees(pi: Sequence[int]) -> Iterator[Graph]:
    """Every labeled tree in which vertex ``i`` has degree ``pi[i]``.

    Label ``i`` appears ``pi[i] - 1`` times in the Pruefer code, so this walks
    the distinct permutations of that multiset.
    """
    if not is_tree_sequence(pi):
        raise ValueError(f"not a tree degree sequence: {tuple(pi)}")
    n = len(pi)
    if n > MAX_TREE_N:
        raise OracleGuardError(f"tree enumeration limited to n <= {MAX_TREE_N}")
    if n == 2:
        yield Graph.from_edges(2, [(0, 1)])
        return
    code = [v for v, d in enumerate(pi) for _ in range(d - 1)]
    for perm in _distinct_permutations(code):
        yield pruefer_decode(perm, n)


def enumerate_realizations(pi: Sequence[int], connected: bool = True,
                           max_n: int = MAX_GRAPH_N) -> Iterator[Graph]:
    """Every labeled simple graph where vertex ``i`` has degree ``pi[i]``.

    Vertices are completed in index order; vertex ``u`` picks its remaining
    neighbors among higher-indexed vertices that still have free stubs.
    """
    n = len(pi)
    if n > max_n:
        raise OracleGuardError(f"graph enumeration limited to n <= {max_n}")
    residual = [int(d) for d in pi]
    edges: list[tuple[int, int]] = []

    def rec(u):
        if u == n:
            g = Graph.from_edges(n, edges)
            if not connected or is_connected(g):
                yield g
            return
        free = [v for v in range(u + 1, n) if residual[v] > 0]
        need = residual[u]
        if need > len(free):
            return
        for combo in itertools.combinations(free, need):
            for v in combo:
                residual[v] -= 1
                edges.append((u, v))
            yield from rec(u + 1)
            for v in combo:
                residual[v] += 1
                edges.pop()

    if sum(residual) % 2 == 0:
        yield from rec(0)


def enumerate_connected_graphs(pi: Sequence[int]) -> Iterator[Graph]:
    return enumerate_realizations(pi, connected=True)


def closed_form_lambda(family: str, *params: int) -> float:
    """Spectral radius of standard families.

    ``path(n)``, ``cycle(n)``, ``star(k)`` (that is ``K_{1,k}``),
    ``complete(n)`` and ``complete_bipartite(s, t)``.
    """
    if family == "path":
        (n,) = params
        return 2 * math.cos(math.pi / (n + 1))
    if family == "cycle":
        return 2.0
    if family == "star":
        (k,) = params
        return math.sqrt(k)
    if family == "complete":
        (n,) = params
        return float(n - 1)
    if family == "complete_bipartite":
        s, t = params
        return math.sqrt(s * t)
    raise ValueError(f"unknown family {family!r}")


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Backtracking isomorphism test with degree and adjacency pruning."""
    if g.n != h.n or g.m != h.m or sorted(g.degrees) != sorted(h.degrees):
        return False
    n = g.n
    # map g's vertices in BFS-ish order so most constraints are checked early
    order = sorted(range(n), key=lambda v: -g.degrees[v])
    seen, queue = set(), []
    for s in order:
        if s in seen:
            continue
        seen.add(s)
        queue.append(s)
        k = len(queue) - 1
        while k < len(queue):
            for u in g.adj[queue[k]]:
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
            k += 1
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def rec(k):
        if k == n:
            return True
        v = queue[k]
        for w in range(n):
            if w in used or h.degrees[w] != g.degrees[v]:
                continue
            if all(h.has_edge(w, mapping[u]) == g.has_edge(v, u) for u in mapping):
                mapping[v] = w
                used.add(w)
                if rec(k + 1):
                    return True
                del mapping[v]
                used.discard(w)
        return False

    return rec(0)


def tree_sequences(n: int) -> list[tuple[int, ...]]:
    """All non-increasing tree degree sequences on ``n`` vertices."""
    if n == 2:
        return [(1, 1)]
    out = []
    for seq in itertools.combinations_with_replacement(range(n - 1, 0, -1), n):
        if sum(seq) == 2 * (n - 1):
            out.append(seq)
    return out
