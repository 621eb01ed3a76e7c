"""Observed invariants of built graphs and the closed-form predictions they are checked against."""

from __future__ import annotations

import math
from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from .topology import (
    NetworkParams,
    NodeCoord,
    Topology,
    Variant,
    cube_bit_indices,
)

__all__ = [
    "INFINITE",
    "BisectionCapError",
    "Coverage",
    "CutCheck",
    "DegreePrediction",
    "DegreeReport",
    "NumTable",
    "bfs_distances",
    "bisection_upper_bound",
    "component_labels",
    "connected_components",
    "coverage_check",
    "degree_distribution",
    "diameter",
    "diameter_bound",
    "distance",
    "eccentricities",
    "eccentricity",
    "exact_bisection",
    "num_table",
    "predicted_connected",
    "predicted_degree",
    "shortest_path",
    "verify_cut",
]

INFINITE = math.inf

DEFAULT_BISECT_CAP = 24


class BisectionCapError(ValueError):
    pass


# -- edge-rule tables ---------------------------------------------------------


@dataclass(frozen=True)
class NumTable:
    """``counts[t]`` is the number of ring positions whose edge rule hits bit ``t``."""

    params: NetworkParams
    counts: tuple[int, ...]

    def __getitem__(self, t: int) -> int:
        return self.counts[t]

    def __len__(self) -> int:
        return len(self.counts)

    @property
    def minimum(self) -> int:
        return min(self.counts)

    def as_dict(self) -> dict[str, int]:
        return {str(t): c for t, c in enumerate(self.counts)}


def num_table(params: NetworkParams) -> NumTable:
    # b ranges over ring positions [0, r-1]
    counts = [0] * params.m
    for b in range(params.r):
        for t in cube_bit_indices(params, b):
            counts[t] += 1
    return NumTable(params, tuple(counts))


@dataclass(frozen=True)
class Coverage:
    covered: bool
    missing: frozenset[int]

    def __bool__(self) -> bool:
        return self.covered


def coverage_check(params: NetworkParams) -> Coverage:
    hit: set[int] = set()
    for b in range(params.r):
        hit |= cube_bit_indices(params, b)
    missing = frozenset(range(params.m)) - hit
    return Coverage(not missing, missing)


def predicted_connected(params: NetworkParams) -> bool:
    k, r, j = params.k, params.r, params.j
    if params.variant is Variant.RCR_II:
        return (r - 1) * k >= j
    if r <= 2:
        return (r - 1) * k >= j
    return (r - 1) * k >= j + 1


def bisection_upper_bound(params: NetworkParams) -> int:
    """Width of the cheapest cut that splits on a single cube bit.

    Zero whenever some bit is never flipped, since the graph then falls
    apart along that bit.
    """
    # N / (2r) == 2^(m-1)
    return num_table(params).minimum << (params.m - 1)


def diameter_bound(params: NetworkParams) -> float:
    if not coverage_check(params):
        return INFINITE
    k, r, j = params.k, params.r, params.j
    if r <= 3:
        return k + j + r - 1 + r // 2
    return k + j + r - 2 + r // 2


# -- degrees ------------------------------------------------------------------


@dataclass(frozen=True)
class DegreePrediction:
    lo: int
    hi: int
    uniform: bool

    def describe(self) -> str:
        if self.uniform:
            return f"uniform {self.lo}"
        return f"range [{self.lo}, {self.hi}]"

    def as_dict(self) -> dict:
        if self.uniform:
            return {"uniform": self.lo}
        return {"range": [self.lo, self.hi]}


def predicted_degree(params: NetworkParams) -> DegreePrediction:
    k, r, j = params.k, params.r, params.j
    if params.variant is Variant.RCR_II:
        d = min(k + r - 1, k + 2)
        return DegreePrediction(d, d, True)
    if r <= 2:
        return DegreePrediction(k + r - 1, k + r - 1, True)
    if k <= j + 1 or j == 0:
        return DegreePrediction(k + 2, k + 2, True)
    return DegreePrediction(-(-k // 2) + 2, k + 2, False)


@dataclass(frozen=True)
class DegreeReport:
    histogram: dict[int, int]
    predicted: DegreePrediction

    @property
    def is_uniform(self) -> bool:
        return len(self.histogram) == 1

    def conforms(self) -> bool:
        """Observed degrees agree with the prediction, including (non-)uniformity."""
        degrees = set(self.histogram)
        p = self.predicted
        if not all(p.lo <= d <= p.hi for d in degrees):
            return False
        return self.is_uniform == p.uniform


def degree_distribution(g: Topology) -> DegreeReport:
    hist = Counter(len(nbrs) for nbrs in g.adjacency)
    return DegreeReport(dict(sorted(hist.items())), predicted_degree(g.params))


# -- traversal ----------------------------------------------------------------


def bfs_distances(g: Topology, source: int) -> list[int]:
    dist = [-1] * g.n_nodes
    dist[source] = 0
    queue = deque([source])
    adj = g.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for v in adj[u]:
            if dist[v] < 0:
                dist[v] = du
                queue.append(v)
    return dist


def component_labels(g: Topology) -> list[int]:
    labels = [-1] * g.n_nodes
    adj = g.adjacency
    label = 0
    for s in range(g.n_nodes):
        if labels[s] >= 0:
            continue
        labels[s] = label
        stack = [s]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if labels[v] < 0:
                    labels[v] = label
                    stack.append(v)
        label += 1
    return labels


def connected_components(g: Topology) -> list[int]:
    """Component sizes, ascending."""
    return sorted(Counter(component_labels(g)).values())


def _node_id(g: Topology, node) -> int:
    if isinstance(node, NodeCoord):
        return g.node(node)
    if not 0 <= node < g.n_nodes:
        raise ValueError(f"node id {node} outside graph of {g.n_nodes} nodes")
    return node


def shortest_path(g: Topology, source, target) -> Optional[list[int]]:
    """One shortest path as a list of node ids, or ``None`` if unreachable.

    Ties are broken towards the smaller neighbour id, so the path is deterministic.
    """
    s, t = _node_id(g, source), _node_id(g, target)
    parent = [-1] * g.n_nodes
    parent[s] = s
    queue = deque([s])
    adj = g.adjacency
    while queue and parent[t] < 0:
        u = queue.popleft()
        for v in adj[u]:
            if parent[v] < 0:
                parent[v] = u
                queue.append(v)
    if parent[t] < 0:
        return None
    path = [t]
    while path[-1] != s:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def distance(g: Topology, source, target) -> float:
    """Hop count between two nodes (ids or coordinates); ``INFINITE`` if unreachable."""
    path = shortest_path(g, source, target)
    return INFINITE if path is None else len(path) - 1


def eccentricity(g: Topology, source: int) -> float:
    dist = bfs_distances(g, source)
    if min(dist) < 0:
        return INFINITE
    return max(dist)


def eccentricities(g: Topology, block_bytes: int = 1 << 26) -> list[float]:
    """Eccentricity of every node, running all BFS searches at once.

    Each node carries a bitset of the sources that have reached it; one
    round ORs in the neighbours' bitsets.  Source ``s`` has eccentricity
    ``d`` when its bit first appears at every node in round ``d``.  Sources
    are processed in blocks so the gathered neighbour array stays under
    ``block_bytes``.
    """
    n = g.n_nodes
    width = max(len(nbrs) for nbrs in g.adjacency) if n else 0
    # pad short rows with the node itself; OR-ing its own bits is a no-op
    nbr = np.empty((n, max(width, 1)), dtype=np.intp)
    for u, nbrs in enumerate(g.adjacency):
        nbr[u, : len(nbrs)] = nbrs
        nbr[u, len(nbrs) :] = u

    words_total = (n + 63) // 64
    words_per_block = max(1, min(words_total, block_bytes // (8 * n * nbr.shape[1] + 1)))
    ecc = np.full(n, np.inf)
    for w0 in range(0, words_total, words_per_block):
        w1 = min(words_total, w0 + words_per_block)
        src_lo, src_hi = w0 * 64, min(n, w1 * 64)
        reach = np.zeros((n, w1 - w0), dtype=np.uint64)
        srcs = np.arange(src_lo, src_hi)
        np.bitwise_or.at(
            reach,
            (srcs, (srcs - src_lo) // 64),
            np.left_shift(np.uint64(1), ((srcs - src_lo) % 64).astype(np.uint64)),
        )
        done = np.zeros(src_hi - src_lo, dtype=bool)
        step = 0
        while True:
            full = _bits_to_bool(np.bitwise_and.reduce(reach, axis=0), src_hi - src_lo)
            fresh = full & ~done
            ecc[src_lo:src_hi][fresh] = step
            done |= full
            if done.all():
                break
            grown = reach | np.bitwise_or.reduce(reach[nbr], axis=1)
            if np.array_equal(grown, reach):
                break
            reach = grown
            step += 1
    return [float(e) if math.isinf(e) else int(e) for e in ecc]


def _bits_to_bool(words: np.ndarray, count: int) -> np.ndarray:
    as_bytes = words.astype("<u8").view(np.uint8)
    return np.unpackbits(as_bytes, bitorder="little")[:count].astype(bool)


def diameter(g: Topology) -> float:
    if g.n_nodes == 0:
        return 0
    return max(eccentricities(g))


# -- bisection ----------------------------------------------------------------


def exact_bisection(g: Topology, node_cap: int = DEFAULT_BISECT_CAP) -> int:
    """Minimum number of edges crossing a balanced two-way split, by exhaustive search.

    Branch and bound over side assignments in BFS order, node 0 pinned to
    the first side; a branch dies once its crossing count reaches the best
    complete split seen so far.
    """
    n = g.n_nodes
    if n > node_cap:
        raise BisectionCapError(
            f"{n} nodes exceeds the exact-bisection cap of {node_cap}; use verify_cut instead"
        )
    if n % 2:
        raise BisectionCapError(f"cannot bisect a graph with an odd node count ({n})")
    if n == 0:
        return 0

    order: list[int] = []
    seen = [False] * n
    for root in range(n):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            u = queue.popleft()
            order.append(u)
            for v in g.adjacency[u]:
                if not seen[v]:
                    seen[v] = True
                    queue.append(v)
    rank = {u: i for i, u in enumerate(order)}
    earlier = [[rank[v] for v in g.adjacency[u] if rank[v] < i] for i, u in enumerate(order)]

    half = n // 2
    side = [0] * n
    # seed with the split into lower and upper halves of the BFS order
    best = sum(1 for i in range(n) for w in earlier[i] if (i < half) != (w < half))
    counts = [0, 0]

    def search(i: int, cost: int) -> None:
        nonlocal best
        if i == n:
            best = cost
            return
        for s in (0, 1):
            if counts[s] == half:
                continue
            add = 0
            for w in earlier[i]:
                if side[w] != s:
                    add += 1
            if cost + add >= best:
                continue
            side[i] = s
            counts[s] += 1
            search(i + 1, cost + add)
            counts[s] -= 1

    side[0] = 0
    counts[0] = 1
    search(1, 0)
    return best


@dataclass(frozen=True)
class CutCheck:
    bisects: bool
    sides: Optional[tuple[int, int]]
    components: tuple[int, ...]


def _normalize_edge(g: Topology, edge) -> tuple[int, int]:
    u, v = (_node_id(g, x) for x in edge)
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge of {g.params.label()}")
    return (u, v) if u < v else (v, u)


def verify_cut(g: Topology, edges: Iterable) -> CutCheck:
    """Remove ``edges`` and report whether the remaining components can be
    grouped into two sides of exactly ``N/2`` nodes each.

    Edges may be given as id pairs or coordinate pairs.
    """
    removed = {_normalize_edge(g, e) for e in edges}
    n = g.n_nodes
    labels = [-1] * n
    sizes: list[int] = []
    for s in range(n):
        if labels[s] >= 0:
            continue
        labels[s] = len(sizes)
        stack, size = [s], 0
        while stack:
            u = stack.pop()
            size += 1
            for v in g.adjacency[u]:
                if labels[v] < 0 and (min(u, v), max(u, v)) not in removed:
                    labels[v] = len(sizes)
                    stack.append(v)
        sizes.append(size)
    components = tuple(sorted(sizes))
    if n % 2:
        return CutCheck(False, None, components)
    # subset sum over component sizes: can some union hold exactly N/2 nodes?
    reachable = 1
    for size in sizes:
        reachable |= reachable << size
    if (reachable >> (n // 2)) & 1:
        return CutCheck(True, (n // 2, n // 2), components)
    return CutCheck(False, None, components)
