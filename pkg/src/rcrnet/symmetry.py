"""Automorphisms of RCR graphs: the RCR-II relabeling and an exhaustive vertex-transitivity test."""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Optional

from .analysis import bfs_distances
from .topology import NetworkParams, NodeCoord, Topology, Variant, coord_to_id

__all__ = [
    "DEFAULT_SYMMETRY_CAP",
    "NodeMapping",
    "SymmetryVerdict",
    "compose",
    "find_automorphism",
    "is_automorphism",
    "is_vertex_transitive",
    "ring_shift",
    "theorem9_applicable",
    "theorem9_transform",
]

DEFAULT_SYMMETRY_CAP = 64


@dataclass(frozen=True)
class NodeMapping:
    """A permutation of node ids: node ``u`` goes to ``perm[u]``."""

    params: NetworkParams
    perm: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.params.n_nodes
        if len(self.perm) != n or sorted(self.perm) != list(range(n)):
            raise ValueError("mapping is not a permutation of the node set")

    def __call__(self, u: int) -> int:
        return self.perm[u]

    def table(self) -> str:
        """Two-column ``from to`` listing."""
        return "".join(f"{u} {v}\n" for u, v in enumerate(self.perm))


def compose(outer: NodeMapping, inner: NodeMapping) -> NodeMapping:
    """``outer ∘ inner``: apply ``inner`` first."""
    if outer.params != inner.params:
        raise ValueError("cannot compose mappings of different networks")
    return NodeMapping(inner.params, tuple(outer.perm[v] for v in inner.perm))


def theorem9_applicable(params: NetworkParams) -> bool:
    return params.variant is Variant.RCR_II and (params.r * params.j) % params.m == 0


def theorem9_transform(params: NetworkParams, origin: NodeCoord) -> NodeMapping:
    """Relabeling of RCR-II that sends ``<0...0;0>`` to ``origin``.

    With ``origin = <alpha; beta>`` a node ``<a; b>`` goes to ``<a'; b'>`` where
    ``b' = (b + beta) mod r`` and ``a'_s = a_t xor alpha_s`` for
    ``s = (t - beta*k) mod (k + j)``.
    """
    if params.variant is not Variant.RCR_II:
        raise ValueError("the relabeling is defined for RCR-II networks only")
    coord_to_id(params, origin)
    k, r, m = params.k, params.r, params.m
    alpha = origin.cube_value
    beta = origin.ring_pos
    # bit t of the cube value moves to position (t - beta*k) mod m
    target = [(t - beta * k) % m for t in range(m)]
    perm = []
    for c in range(1 << m):
        moved = 0
        for t in range(m):
            if (c >> t) & 1:
                moved |= 1 << target[t]
        c_new = moved ^ alpha
        for b in range(r):
            perm.append(c_new * r + (b + beta) % r)
    return NodeMapping(params, tuple(perm))


def ring_shift(params: NetworkParams, shift: int = 1) -> NodeMapping:
    """Rotate every ring by ``shift`` positions, cube coordinates untouched."""
    r = params.r
    perm = [(u // r) * r + (u % r + shift) % r for u in range(params.n_nodes)]
    return NodeMapping(params, tuple(perm))


def _is_ring(g: Topology, u: int, v: int) -> bool:
    return u // g.params.r == v // g.params.r


def is_automorphism(g: Topology, mapping: NodeMapping, preserve_kinds: bool = True) -> bool:
    if len(mapping.perm) != g.n_nodes:
        raise ValueError(
            f"mapping covers {len(mapping.perm)} nodes, graph has {g.n_nodes}"
        )
    p = mapping.perm
    for u, v, _ in g.edges():
        pu, pv = p[u], p[v]
        if not g.has_edge(pu, pv):
            return False
        if preserve_kinds and _is_ring(g, u, v) != _is_ring(g, pu, pv):
            return False
    return True


def _signatures(g: Topology, preserve_kinds: bool) -> list[tuple]:
    """Isomorphism-invariant label per node: degree split plus the BFS layer sizes."""
    sigs = []
    for u in range(g.n_nodes):
        nbrs = g.adjacency[u]
        if preserve_kinds:
            ring = sum(1 for v in nbrs if _is_ring(g, u, v))
            local = (ring, len(nbrs) - ring)
        else:
            local = (len(nbrs),)
        layers = Counter(bfs_distances(g, u))
        sigs.append((local, tuple(sorted(layers.items()))))
    return sigs


def find_automorphism(
    g: Topology,
    source: int,
    target: int,
    preserve_kinds: bool = True,
    _sigs: Optional[list[tuple]] = None,
) -> Optional[NodeMapping]:
    """Backtracking search for an automorphism carrying ``source`` to ``target``.

    Nodes are placed in BFS order from ``source`` so each one after the first
    has an already-placed parent; its image must then be an unused neighbour
    of the parent's image with the same signature.  Candidates are tried in
    node-id order.
    """
    n = g.n_nodes
    sigs = _sigs if _sigs is not None else _signatures(g, preserve_kinds)
    if sigs[source] != sigs[target]:
        return None
    adj = g.adjacency
    adj_sets = [frozenset(a) for a in adj]

    order: list[int] = []
    parent: list[int] = [-1] * n
    seen = [False] * n
    for root in [source] + list(range(n)):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            u = queue.popleft()
            order.append(u)
            for v in adj[u]:
                if not seen[v]:
                    seen[v] = True
                    parent[v] = u
                    queue.append(v)

    image = [-1] * n
    used = [False] * n

    def consistent(u: int, c: int) -> bool:
        mapped = 0
        for w in adj[u]:
            iw = image[w]
            if iw < 0:
                continue
            mapped += 1
            if iw not in adj_sets[c]:
                return False
            if preserve_kinds and _is_ring(g, u, w) != _is_ring(g, c, iw):
                return False
        # c must not touch any placed image beyond those of u's placed neighbours
        return mapped == sum(1 for x in adj[c] if used[x])

    def extend(i: int) -> bool:
        if i == n:
            return True
        u = order[i]
        p = parent[u]
        pool = adj[image[p]] if p >= 0 else range(n)
        for c in pool:
            if used[c] or sigs[c] != sigs[u] or not consistent(u, c):
                continue
            image[u] = c
            used[c] = True
            if extend(i + 1):
                return True
            image[u] = -1
            used[c] = False
        return False

    image[source] = target
    used[target] = True
    if not extend(1):
        return None
    return NodeMapping(g.params, tuple(image))


@dataclass(frozen=True)
class SymmetryVerdict:
    """``vertex_transitive`` is ``None`` when the graph is above the size cap."""

    vertex_transitive: Optional[bool]
    theorem9_applicable: bool
    witness: Optional[tuple[int, int]] = None
    method: str = ""
    automorphisms: tuple[NodeMapping, ...] = field(default=(), repr=False)

    def as_dict(self) -> dict:
        doc: dict = {"checked": self.vertex_transitive is not None}
        if self.vertex_transitive is None:
            doc["vertex_transitive"] = "not determined (size cap)"
        else:
            doc["vertex_transitive"] = self.vertex_transitive
        doc["theorem9_applicable"] = self.theorem9_applicable
        if self.witness is not None:
            doc["witness"] = list(self.witness)
        if self.method:
            doc["method"] = self.method
        return doc


def is_vertex_transitive(
    g: Topology, node_cap: int = DEFAULT_SYMMETRY_CAP, preserve_kinds: bool = True
) -> SymmetryVerdict:
    """Decide whether every node can be carried to node 0 by an automorphism.

    A positive verdict keeps, for each node ``v``, one automorphism sending
    node 0 to ``v``.  A negative verdict names a pair ``(0, v)`` no
    automorphism connects.
    """
    params = g.params
    applicable = theorem9_applicable(params)
    n = g.n_nodes
    if n > node_cap:
        return SymmetryVerdict(None, applicable, method="skipped: size")

    if applicable and preserve_kinds:
        maps = []
        for v in range(n):
            m = theorem9_transform(params, g.coord(v))
            if not is_automorphism(g, m):
                break
            maps.append(m)
        else:
            return SymmetryVerdict(True, True, method="relabeling", automorphisms=tuple(maps))

    sigs = _signatures(g, preserve_kinds)
    for v in range(n):
        if sigs[v] != sigs[0]:
            return SymmetryVerdict(False, applicable, witness=(0, v), method="invariant")

    maps = [NodeMapping(params, tuple(range(n)))]
    for v in range(1, n):
        m = find_automorphism(g, 0, v, preserve_kinds, _sigs=sigs)
        if m is None:
            return SymmetryVerdict(False, applicable, witness=(0, v), method="search")
        maps.append(m)
    return SymmetryVerdict(True, applicable, method="search", automorphisms=tuple(maps))
