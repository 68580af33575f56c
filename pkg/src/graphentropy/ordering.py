"""Breadth-first orderings with decreasing degrees (BFD orderings).

An ordering lists the vertices starting from a maximum-degree root, then its
neighbors, then the new neighbors of the second vertex, and so on (plain BFS),
with two extra requirements: children of an earlier vertex come before
children of a later one, and degrees never increase along the list.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graph import (Graph, check_sequence, is_connected_realizable, is_graphical,
                    is_tree_sequence)

DEFAULT_BUDGET = 10**6


class InvalidSequenceError(ValueError):
    """A degree sequence does not meet a construction's preconditions."""


class SearchBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class BfdOrdering:
    """``order[k]`` is the vertex of rank ``k``; ``layer``/``parent`` are per vertex."""

    order: tuple[int, ...]
    layer: tuple[int, ...]
    parent: tuple[int, ...]

    @property
    def rank(self) -> tuple[int, ...]:
        r = [0] * len(self.order)
        for k, v in enumerate(self.order):
            r[v] = k
        return tuple(r)

    def to_json(self) -> str:
        return json.dumps({"order": list(self.order), "layer": list(self.layer),
                           "parent": list(self.parent)})

    @classmethod
    def from_json(cls, text: str) -> "BfdOrdering":
        d = json.loads(text)
        return cls(tuple(d["order"]), tuple(d["layer"]), tuple(d["parent"]))


def layers_and_parents(g: Graph, order: Sequence[int]) -> tuple[tuple, tuple]:
    """BFS distances from ``order[0]`` and, for each vertex, its parent: the
    lowest-ranked neighbor one layer up (``-1`` for the root)."""
    n = g.n
    rank = [0] * n
    for k, v in enumerate(order):
        rank[v] = k
    layer = [-1] * n
    layer[order[0]] = 0
    frontier = [order[0]]
    while frontier:
        nxt = []
        for v in frontier:
            for u in g.adj[v]:
                if layer[u] < 0:
                    layer[u] = layer[v] + 1
                    nxt.append(u)
        frontier = nxt
    parent = [-1] * n
    for v in range(n):
        if layer[v] > 0:
            parent[v] = min((u for u in g.adj[v] if layer[u] == layer[v] - 1),
                            key=rank.__getitem__)
    return tuple(layer), tuple(parent)


def _ordering_from(g: Graph, order) -> BfdOrdering:
    layer, parent = layers_and_parents(g, order)
    return BfdOrdering(tuple(order), layer, parent)


def bfd_verify(g: Graph, ordering: BfdOrdering) -> bool:
    """Check every BFD-ordering condition of ``ordering`` against ``g``."""
    order = ordering.order
    n = g.n
    if sorted(order) != list(range(n)) or len(ordering.layer) != n or len(ordering.parent) != n:
        return False
    deg = g.degrees
    if deg[order[0]] != deg.max():
        return False
    layer, parent = layers_and_parents(g, order)
    if min(layer) < 0 or layer != tuple(ordering.layer) or parent != tuple(ordering.parent):
        return False
    rank = ordering.rank
    for prev, cur in zip(order, order[1:]):
        if deg[cur] > deg[prev] or layer[cur] < layer[prev]:
            return False
        # children of earlier vertices come first (root has no parent)
        if prev != order[0] and rank[parent[cur]] < rank[parent[prev]]:
            return False
    return True


def bfd_order_search(g: Graph, budget: int = DEFAULT_BUDGET) -> BfdOrdering | None:
    """Find a BFD ordering of ``g`` or return ``None`` if none exists.

    Simulates the BFS while backtracking over the root (any maximum-degree
    vertex) and over the order of equal-degree children. ``budget`` caps the
    number of search nodes; exceeding it raises :class:`SearchBudgetExceeded`.
    """
    n = g.n
    deg = [int(d) for d in g.degrees]
    nodes = 0

    def extend(order, placed, head):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise SearchBudgetExceeded(f"BFD order search exceeded {budget} nodes")
        while head < len(order):
            kids = [u for u in g.adj[order[head]] if u not in placed]
            head += 1
            if not kids:
                continue
            kids.sort(key=lambda u: -deg[u])
            if deg[kids[0]] > deg[order[-1]]:
                return None
            groups = [list(grp) for _, grp in itertools.groupby(kids, key=deg.__getitem__)]
            if all(len(grp) == 1 for grp in groups):
                order = order + kids
                placed = placed | set(kids)
                continue
            for perm in itertools.product(*(itertools.permutations(grp) for grp in groups)):
                seq = [u for grp in perm for u in grp]
                found = extend(order + seq, placed | set(seq), head)
                if found is not None:
                    return found
            return None
        return order if len(order) == n else None

    dmax = max(deg)
    for root in (v for v in range(n) if deg[v] == dmax):
        found = extend([root], {root}, 0)
        if found is not None:
            return _ordering_from(g, found)
    return None


def _erdos_gallai(seq) -> bool:
    """Erdos-Gallai test for non-negative integers given in any order."""
    d = np.sort(np.asarray(seq, dtype=np.int64))[::-1]
    n = d.size
    if n == 0:
        return True
    if d[-1] < 0 or d.sum() % 2:
        return False
    k = np.arange(1, n + 1)
    prefix = np.cumsum(d)
    suffix = np.concatenate([[d.sum()], d.sum() - prefix])
    big = n - np.searchsorted(d[::-1], k, side="left")  # entries >= k
    cut = np.maximum(big, k)
    rhs = k * (k - 1) + k * np.maximum(big - k, 0) + suffix[cut]
    return bool(np.all(prefix <= rhs))


def _completable(residual, start, reached, n) -> bool:
    """Can vertices ``start..n-1`` with these residual degrees still be wired
    so that every unreached vertex (index >= ``reached``) gets connected?"""
    rest = residual[start:]
    if not any(rest):
        return reached >= n
    if start >= reached:
        return False
    unreached = n - reached
    if unreached:
        if not any(residual[j] for j in range(start, reached)):
            return False
        if sum(rest) < 2 * unreached:
            return False
    return _erdos_gallai([r for r in rest if r])


def bfd_realize(pi: Sequence[int]) -> tuple[Graph, BfdOrdering]:
    """Connected realization of ``pi`` that carries a BFD ordering.

    Vertex ``i`` gets degree ``pi[i]``. Vertices are processed in index order
    and each lays off its remaining stubs Havel-Hakimi style: to the vertices
    of largest residual degree, preferring among equal residuals a vertex the
    search has not reached yet, then the lowest index. Newly reached vertices
    are always the next unused indices, so ``0, 1, ..., n-1`` is a BFD
    ordering of the result.

    When that choice would leave the rest impossible to wire up connectedly,
    the vertex instead reaches more (or fewer) new vertices; a dead end
    backtracks to the previous vertex.
    """
    seq = check_sequence(pi)
    n = len(seq)
    if n == 1 and seq[0] == 0:
        return Graph(((),)), BfdOrdering((0,), (0,), (-1,))
    if not is_graphical(seq):
        raise InvalidSequenceError(f"not graphical: {seq}")
    if not is_connected_realizable(seq):
        raise InvalidSequenceError(f"no connected realization: {seq}")

    residual = list(seq)
    nbrs: list[set[int]] = [set() for _ in range(n)]
    reached = 1
    # stack entries: (vertex, residual before, reached before, pending choices)
    stack = []
    i = 0
    while i < n:
        if residual[i] == 0:
            i += 1
            continue
        options = iter(_layoff_options(i, residual, reached, n))
        stack.append((i, residual[i], reached, options))
        while True:
            v, r_v, reached_v, options = stack[-1]
            picked = None
            for chosen, k in options:
                trial = residual.copy()
                for j in chosen:
                    trial[j] -= 1
                trial[v] = 0
                if _completable(trial, v + 1, reached_v + k, n):
                    picked = chosen, k
                    break
            if picked is not None:
                break
            # dead end: undo the previous vertex and try its next option
            stack.pop()
            if not stack:
                raise InvalidSequenceError(f"BFD construction failed for {seq}")
            pv, pr, preached, _ = stack[-1]
            for j in sorted(nbrs[pv]):
                if j > pv:
                    nbrs[pv].discard(j)
                    nbrs[j].discard(pv)
                    residual[j] += 1
            residual[pv] = pr
            reached = preached
        chosen, k = picked
        for j in chosen:
            nbrs[v].add(j)
            nbrs[j].add(v)
            residual[j] -= 1
        residual[v] = 0
        reached = reached_v + k
        i = v + 1
    g = Graph(tuple(tuple(sorted(s)) for s in nbrs))
    ordering = _ordering_from(g, range(n))
    assert bfd_verify(g, ordering), seq
    return g, ordering


def _layoff_options(i, residual, reached, n):
    """Candidate neighbor sets for vertex ``i``, Havel-Hakimi choice first.

    Each option joins the ``r - k`` already-reached vertices of largest
    residual with the next ``k`` unreached indices.
    """
    r = residual[i]
    old = sorted((j for j in range(i + 1, reached) if residual[j] > 0),
                 key=lambda j: (-residual[j], j))
    new = list(range(reached, n))
    pool = sorted(old + new, key=lambda j: (-residual[j], j < reached, j))
    k0 = sum(1 for j in pool[:r] if j >= reached)
    hi = min(r, len(new))
    for k in [k0, *range(k0 + 1, hi + 1), *range(k0 - 1, -1, -1)]:
        if r - k <= len(old):
            yield old[: r - k] + new[:k], k


def bfd_tree(pi: Sequence[int]) -> tuple[Graph, BfdOrdering]:
    """The BFD tree of a tree degree sequence.

    Vertex ``i`` has degree ``pi[i]``; the root takes ``pi[0]`` children and
    every later vertex ``pi[i] - 1``, assigned level by level in index order.
    """
    seq = check_sequence(pi)
    if not is_tree_sequence(seq):
        raise InvalidSequenceError(f"not a tree degree sequence: {seq}")
    n = len(seq)
    edges = []
    nxt = 1
    for i, d in enumerate(seq):
        kids = d if i == 0 else d - 1
        edges.extend((i, j) for j in range(nxt, nxt + kids))
        nxt += kids
    g = Graph.from_edges(n, edges)
    ordering = _ordering_from(g, range(n))
    assert bfd_verify(g, ordering), seq
    return g, ordering


def majorizes(pi: Sequence[int], pi_prime: Sequence[int]) -> bool:
    """``pi <| pi_prime``: distinct, and every prefix sum of ``pi`` is at most
    the matching prefix sum of ``pi_prime``."""
    a, b = check_sequence(pi), check_sequence(pi_prime)
    if len(a) != len(b):
        raise ValueError("sequences must have equal length")
    if a == b:
        return False
    return all(x <= y for x, y in zip(itertools.accumulate(a), itertools.accumulate(b)))


def forcibly_connected_bondy(pi: Sequence[int]) -> bool:
    """Bondy's sufficient condition, evaluated literally with 0-based indices:
    ``d_i >= n - i`` for every ``i >= d_0 + 2``.

    Taken at face value this also accepts sequences such as ``(1, 1, 1, 1)``
    whose realization ``2K_2`` is disconnected, so treat ``True`` as the
    printed test passing, not as a proof of forced connectivity.
    """
    seq = check_sequence(pi)
    n = len(seq)
    return all(seq[i] >= n - i for i in range(seq[0] + 2, n))
