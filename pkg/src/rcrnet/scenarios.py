"""Worked examples with known answers, replayed against the implementation.

Each scenario returns a list of :class:`Check` records; ``run_all`` gathers
them in a fixed order.  The expected values are goldens: a mismatch means
the builder or an analysis routine regressed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from . import analysis as an
from .symmetry import is_automorphism, is_vertex_transitive, theorem9_applicable, theorem9_transform
from .topology import (
    EdgeKind,
    NetworkParams,
    Variant,
    build,
    cube_bit_indices,
    f_rcr,
    parse_coord,
)

__all__ = ["Check", "SCENARIOS", "run_all", "run_scenario"]

RCR, RCR2 = Variant.RCR, Variant.RCR_II

# Diameter bound k+j+1+floor(r/2) from earlier work, evaluated at RCR(2,5,7).
PRIOR_DIAMETER_BOUND_2_5_7 = 12

# Ring edges whose removal splits RCR(1,10,1) into b in [1,5] and b in {6..9,0}.
EXAMPLE4_RING_CUT = [
    (f"{c};{b}", f"{c};{b + 1}") for c in ("00", "01", "10", "11") for b in (0, 5)
]

# Shortest walk <0^9;0> -> <1^9;2> in RCR(2,5,7): (kind, next node).
EXAMPLE6_WALK = [
    ("cube", "100000000;0"),
    ("cube", "110000000;0"),
    ("ring", "110000000;4"),
    ("cube", "110000100;4"),
    ("cube", "110001100;4"),
    ("ring", "110001100;3"),
    ("cube", "110011100;3"),
    ("cube", "110111100;3"),
    ("ring", "110111100;2"),
    ("cube", "111111100;2"),
    ("ring", "111111100;1"),
    ("cube", "111111110;1"),
    ("cube", "111111111;1"),
    ("ring", "111111111;2"),
]


@dataclass(frozen=True)
class Check:
    scenario: str
    name: str
    expected: Any
    observed: Any

    @property
    def ok(self) -> bool:
        return self.expected == self.observed


def _indices(params: NetworkParams) -> list[set[int]]:
    return [set(cube_bit_indices(params, b)) for b in range(params.r)]


def example1() -> list[Check]:
    p = NetworkParams(3, 3, 1)
    deg = an.degree_distribution(build(p))
    return [
        Check("Example1", "f(5,4)", 1, f_rcr(5, 4)),
        Check("Example1", "f(4,4)", 0, f_rcr(4, 4)),
        Check("Example1", "cube bits per b", [{3, 2, 1}, {2, 1, 0}, {1, 0}], _indices(p)),
        Check("Example1", "degree histogram", {4: 16, 5: 32}, deg.histogram),
        Check("Example1", "degrees within predicted range", True, deg.conforms()),
    ]


def example2() -> list[Check]:
    g = build(NetworkParams(2, 3, 2))
    verdict = is_vertex_transitive(g)
    return [
        Check("Example2", "degree histogram", {4: 48}, an.degree_distribution(g).histogram),
        Check("Example2", "vertex-transitive", False, verdict.vertex_transitive),
        Check("Example2", "witness reported", True, verdict.witness is not None),
    ]


def example3() -> list[Check]:
    p = NetworkParams(2, 2, 3)
    g = build(p)
    cov = an.coverage_check(p)
    # the two halves a_2 = 0 / a_2 = 1 share no edge
    crossing = sum(1 for u, v, _ in g.edges() if ((u // p.r) ^ (v // p.r)) & 0b100)
    return [
        Check("Example3", "cube bits per b", [{4, 3}, {0, 1}], _indices(p)),
        Check("Example3", "components", [32, 32], an.connected_components(g)),
        Check("Example3", "missing bits", {2}, set(cov.missing)),
        Check("Example3", "predicted connected", False, an.predicted_connected(p)),
        Check("Example3", "bisection bound", 0, an.bisection_upper_bound(p)),
        Check("Example3", "edges across a_2 split", 0, crossing),
        Check("Example3", "empty cut bisects", True, an.verify_cut(g, []).bisects),
        Check(
            "Example3",
            "distance <00000;0> -> <00100;0>",
            an.INFINITE,
            an.distance(g, parse_coord("00000;0", p), parse_coord("00100;0", p)),
        ),
    ]


def example4() -> list[Check]:
    p = NetworkParams(1, 10, 1)
    g = build(p)
    cut = [(parse_coord(a, p), parse_coord(b, p)) for a, b in EXAMPLE4_RING_CUT]
    kinds = {g.edge_kind(g.node(a), g.node(b)) for a, b in cut}
    check = an.verify_cut(g, cut)
    return [
        Check("Example4", "Num per bit", (5, 5), an.num_table(p).counts),
        Check("Example4", "cube-cut bound", 10, an.bisection_upper_bound(p)),
        Check("Example4", "cut size", 8, len(set(cut))),
        Check("Example4", "cut edge kinds", {EdgeKind.RING}, kinds),
        Check("Example4", "ring cut bisects", True, check.bisects),
        Check("Example4", "sides", (20, 20), check.sides),
    ]


def example5() -> list[Check]:
    p = NetworkParams(1, 2, 1)
    g = build(p)
    return [
        Check("Example5", "min Num", 1, an.num_table(p).minimum),
        Check("Example5", "bisection bound", 2, an.bisection_upper_bound(p)),
        Check("Example5", "exact bisection", 2, an.exact_bisection(g)),
    ]


def example6() -> list[Check]:
    p = NetworkParams(2, 5, 7)
    g = build(p)
    src = parse_coord("000000000;0", p)
    dst = parse_coord("111111111;2", p)
    walk_ok = True
    prev = g.node(src)
    for kind, text in EXAMPLE6_WALK:
        nxt = g.node(parse_coord(text, p))
        if not g.has_edge(prev, nxt) or g.edge_kind(prev, nxt).value != kind:
            walk_ok = False
            break
        prev = nxt
    walk_ok = walk_ok and prev == g.node(dst)
    diam = an.diameter(g)
    return [
        Check("Example6", "distance", 14, an.distance(g, src, dst)),
        Check("Example6", "14-hop walk is valid", True, walk_ok),
        Check("Example6", "diameter", 14, diam),
        Check("Example6", "diameter bound", 14, an.diameter_bound(p)),
        Check("Example6", "exceeds earlier bound", True, diam > PRIOR_DIAMETER_BOUND_2_5_7),
    ]


def example7() -> list[Check]:
    p = NetworkParams(3, 3, 1, RCR2)
    return [
        Check("Example7", "cube bits per b", [{0, 1, 2}, {1, 2, 3}, {2, 3, 0}], _indices(p)),
        Check("Example7", "degree histogram", {5: 48}, an.degree_distribution(build(p)).histogram),
    ]


def example8() -> list[Check]:
    p2 = NetworkParams(2, 3, 1, RCR2)
    g2 = build(p2)
    transforms_ok = all(
        is_automorphism(g2, theorem9_transform(p2, g2.coord(v))) for v in range(g2.n_nodes)
    )
    return [
        Check("Example8", "RCR(2,3,1) vertex-transitive", False,
              is_vertex_transitive(build(NetworkParams(2, 3, 1))).vertex_transitive),
        Check("Example8", "RCR-II(2,3,1) relabeling condition", True, theorem9_applicable(p2)),
        Check("Example8", "all 24 relabelings are automorphisms", True, transforms_ok),
        Check("Example8", "RCR-II(2,3,1) vertex-transitive", True,
              is_vertex_transitive(g2).vertex_transitive),
    ]


def table1() -> list[Check]:
    p = NetworkParams(2, 5, 7)
    return [
        Check("Table1", "cube bits per b", [{8, 7}, {1, 0}, {6, 7}, {4, 5}, {2, 3}], _indices(p)),
        # bit 7 is listed under both b=0 and b=2
        Check("Table1", "Num per bit", (1, 1, 1, 1, 1, 1, 1, 2, 1), an.num_table(p).counts),
    ]


SCENARIOS: dict[str, Callable[[], list[Check]]] = {
    "Example1": example1,
    "Example2": example2,
    "Example3": example3,
    "Example4": example4,
    "Example5": example5,
    "Example6": example6,
    "Example7": example7,
    "Example8": example8,
    "Table1": table1,
}


def run_scenario(name: str) -> list[Check]:
    return SCENARIOS[name]()


def run_all() -> list[Check]:
    checks: list[Check] = []
    for fn in SCENARIOS.values():
        checks.extend(fn())
    return checks
