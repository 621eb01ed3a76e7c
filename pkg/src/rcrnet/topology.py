"""Recursive-cube-of-rings graphs: parameters, coordinates and the builder.

A node is written ``<a_{m-1} ... a_0; b>`` where the ``m = k + j`` cube bits
name a ring and ``b`` is the position inside that ring.  Node ids are laid
out ring by ring::

    id = cube_value * r + b

so all ``r`` nodes of one ring are contiguous.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Iterator

__all__ = [
    "MAX_NODES",
    "CoordError",
    "EdgeKind",
    "NetworkParams",
    "NodeCoord",
    "ParameterError",
    "SizeError",
    "Topology",
    "Variant",
    "build",
    "coord_to_id",
    "cube_bit_indices",
    "f_rcr",
    "format_coord",
    "g_rcr2",
    "id_to_coord",
    "parse_coord",
    "to_dot",
    "to_edge_list",
    "to_json",
]

MAX_NODES = 1 << 22


class ParameterError(ValueError):
    pass


class SizeError(ValueError):
    pass


class CoordError(ValueError):
    pass


class Variant(str, enum.Enum):
    RCR = "rcr"
    RCR_II = "rcr2"

    def __str__(self) -> str:
        return self.value


class EdgeKind(str, enum.Enum):
    RING = "ring"
    CUBE = "cube"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class NetworkParams:
    k: int
    r: int
    j: int
    variant: Variant = Variant.RCR

    def __post_init__(self) -> None:
        for name in ("k", "r", "j"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise ParameterError(f"{name} must be an integer, got {value!r}")
        if self.k < 1:
            raise ParameterError("k must be >= 1")
        if self.r < 1:
            raise ParameterError("r must be >= 1")
        if self.j < 0:
            raise ParameterError("j must be >= 0")
        object.__setattr__(self, "variant", Variant(self.variant))

    @property
    def m(self) -> int:
        """Width of the cube coordinate, ``k + j``."""
        return self.k + self.j

    @property
    def n_nodes(self) -> int:
        return self.r << self.m

    def label(self) -> str:
        name = "RCR" if self.variant is Variant.RCR else "RCR-II"
        return f"{name}({self.k},{self.r},{self.j})"

    def as_dict(self) -> dict:
        return {"variant": self.variant.value, "k": self.k, "r": self.r, "j": self.j}


@dataclass(frozen=True)
class NodeCoord:
    """Cube bits stored most-significant first, i.e. ``(a_{m-1}, ..., a_0)``."""

    cube_bits: tuple[int, ...]
    ring_pos: int

    @classmethod
    def from_value(cls, cube_value: int, ring_pos: int, m: int) -> NodeCoord:
        bits = tuple((cube_value >> i) & 1 for i in range(m - 1, -1, -1))
        return cls(bits, ring_pos)

    @property
    def cube_value(self) -> int:
        value = 0
        for bit in self.cube_bits:
            value = (value << 1) | bit
        return value

    def bit(self, i: int) -> int:
        """Return ``a_i``."""
        return self.cube_bits[len(self.cube_bits) - 1 - i]


def f_rcr(a: int, m: int) -> int:
    """Original RCR edge rule: ``m - a`` if ``a <= m`` else ``a mod m``."""
    if a <= m:
        return m - a
    return a % m


def g_rcr2(a: int, m: int) -> int:
    """Class-II edge rule: plain ``a mod m``."""
    return a % m


def cube_bit_indices(params: NetworkParams, b: int) -> frozenset[int]:
    """Bit positions at which a node with ring position ``b`` has a cube edge."""
    if not 0 <= b < params.r:
        raise ParameterError(f"ring position {b} outside [0, {params.r - 1}]")
    m, j, k = params.m, params.j, params.k
    if params.variant is Variant.RCR:
        return frozenset(f_rcr(b * j + x, m) for x in range(1, k + 1))
    return frozenset(g_rcr2(b * j + x, m) for x in range(k))


def _check_coord(params: NetworkParams, coord: NodeCoord) -> None:
    if len(coord.cube_bits) != params.m:
        raise CoordError(
            f"coordinate has {len(coord.cube_bits)} cube bits, expected {params.m}"
        )
    if any(bit not in (0, 1) for bit in coord.cube_bits):
        raise CoordError("cube bits must be 0 or 1")
    if not 0 <= coord.ring_pos < params.r:
        raise CoordError(f"ring position {coord.ring_pos} outside [0, {params.r - 1}]")


def coord_to_id(params: NetworkParams, coord: NodeCoord) -> int:
    _check_coord(params, coord)
    return coord.cube_value * params.r + coord.ring_pos


def id_to_coord(params: NetworkParams, node: int) -> NodeCoord:
    if not 0 <= node < params.n_nodes:
        raise CoordError(f"node id {node} outside [0, {params.n_nodes - 1}]")
    cube_value, b = divmod(node, params.r)
    return NodeCoord.from_value(cube_value, b, params.m)


def parse_coord(text: str, params: NetworkParams) -> NodeCoord:
    """Parse ``"<bits;b>"`` (angle brackets optional), bits most-significant first."""
    body = text.strip()
    if body.startswith("<") and body.endswith(">"):
        body = body[1:-1]
    bits_text, sep, ring_text = body.partition(";")
    if not sep:
        raise CoordError(f"missing ';' in coordinate {text!r}")
    bits_text = bits_text.strip().replace(",", "")
    ring_text = ring_text.strip()
    if len(bits_text) != params.m:
        raise CoordError(
            f"coordinate {text!r} has {len(bits_text)} cube bits, expected {params.m}"
        )
    if any(ch not in "01" for ch in bits_text):
        raise CoordError(f"non-binary cube digit in {text!r}")
    if not ring_text.isdigit():
        raise CoordError(f"ring position in {text!r} is not a decimal integer")
    coord = NodeCoord(tuple(int(ch) for ch in bits_text), int(ring_text))
    _check_coord(params, coord)
    return coord


def format_coord(coord: NodeCoord) -> str:
    return "".join(map(str, coord.cube_bits)) + ";" + str(coord.ring_pos)


class Topology:
    """Immutable undirected simple graph of an RCR or RCR-II network.

    ``adjacency[u]`` is the sorted tuple of neighbours of ``u``.  Edge kinds
    follow from the id layout: two adjacent nodes on the same ring are joined
    by a ring edge, anything else is a cube edge.
    """

    __slots__ = ("params", "adjacency", "_n_ring", "_n_cube")

    def __init__(self, params: NetworkParams, adjacency: tuple[tuple[int, ...], ...]):
        object.__setattr__(self, "params", params)
        object.__setattr__(self, "adjacency", adjacency)
        r = params.r
        ring = cube = 0
        for u, nbrs in enumerate(adjacency):
            for v in nbrs:
                if u < v:
                    if u // r == v // r:
                        ring += 1
                    else:
                        cube += 1
        object.__setattr__(self, "_n_ring", ring)
        object.__setattr__(self, "_n_cube", cube)

    def __setattr__(self, name, value):
        raise AttributeError("Topology is immutable")

    def __repr__(self) -> str:
        return f"Topology({self.params.label()}, nodes={self.n_nodes}, edges={self.n_edges})"

    @property
    def n_nodes(self) -> int:
        return len(self.adjacency)

    @property
    def n_ring_edges(self) -> int:
        return self._n_ring

    @property
    def n_cube_edges(self) -> int:
        return self._n_cube

    @property
    def n_edges(self) -> int:
        return self._n_ring + self._n_cube

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self.adjacency[u]
        # adjacency lists are short (<= k + 2), linear scan is fine
        return v in nbrs

    def edge_kind(self, u: int, v: int) -> EdgeKind:
        if not self.has_edge(u, v):
            raise KeyError(f"no edge between {u} and {v}")
        return EdgeKind.RING if u // self.params.r == v // self.params.r else EdgeKind.CUBE

    def edges(self) -> Iterator[tuple[int, int, EdgeKind]]:
        """Yield ``(u, v, kind)`` with ``u < v``, sorted by ``(u, v)``."""
        r = self.params.r
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield u, v, EdgeKind.RING if u // r == v // r else EdgeKind.CUBE

    def coord(self, u: int) -> NodeCoord:
        return id_to_coord(self.params, u)

    def node(self, coord: NodeCoord) -> int:
        return coord_to_id(self.params, coord)


def build(params: NetworkParams, max_nodes: int = MAX_NODES) -> Topology:
    n = params.n_nodes
    if n > max_nodes:
        raise SizeError(f"{params.label()} has {n} nodes, above the cap of {max_nodes}")
    r = params.r
    flips = [sorted(1 << t for t in cube_bit_indices(params, b)) for b in range(r)]
    adjacency = []
    for c in range(1 << params.m):
        base = c * r
        for b in range(r):
            nbrs = {(c ^ mask) * r + b for mask in flips[b]}
            if r > 1:
                nbrs.add(base + (b + 1) % r)
                nbrs.add(base + (b - 1) % r)
            adjacency.append(tuple(sorted(nbrs)))
    return Topology(params, tuple(adjacency))


def to_edge_list(g: Topology) -> str:
    return "".join(f"{u} {v} {kind.value}\n" for u, v, kind in g.edges())


def to_dot(g: Topology) -> str:
    p = g.params
    lines = [f'graph "{p.label()}" {{']
    for u in range(g.n_nodes):
        lines.append(f'  {u} [label="<{format_coord(g.coord(u))}>"];')
    for u, v, kind in g.edges():
        style = "solid" if kind is EdgeKind.RING else "dashed"
        lines.append(f'  {u} -- {v} [kind="{kind.value}", style={style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(g: Topology) -> str:
    doc = {
        "params": g.params.as_dict(),
        "nodes": g.n_nodes,
        "edges": {"ring": g.n_ring_edges, "cube": g.n_cube_edges},
        "coords": [format_coord(g.coord(u)) for u in range(g.n_nodes)],
        "edge_list": [[u, v, kind.value] for u, v, kind in g.edges()],
    }
    return json.dumps(doc, indent=2) + "\n"
