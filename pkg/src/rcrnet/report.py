"""Full analysis of one network: observed values next to predictions, with cross-checks."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Optional, Union

from . import analysis as an
from .symmetry import DEFAULT_SYMMETRY_CAP, SymmetryVerdict, is_vertex_transitive, theorem9_applicable
from .topology import MAX_NODES, NetworkParams, Variant, build

__all__ = ["AnalysisMismatch", "AnalysisReport", "analyze", "jsonable"]

DEFAULT_DIAMETER_CAP = 1 << 16

SKIPPED = "skipped: size"


class AnalysisMismatch(AssertionError):
    pass


def jsonable(value):
    if isinstance(value, float) and math.isinf(value):
        return "infinite"
    return value


@dataclass(frozen=True)
class AnalysisReport:
    params: NetworkParams
    nodes: int
    ring_edges: int
    cube_edges: int
    degree: an.DegreeReport
    components: tuple[int, ...]
    predicted_connected: bool
    coverage: an.Coverage
    num_table: an.NumTable
    bisection_upper_bound: int
    exact_bisection: Union[int, str, None]
    diameter: Union[int, float, str]
    diameter_bound: Union[int, float]
    symmetry: Optional[SymmetryVerdict]

    @property
    def observed_connected(self) -> bool:
        return len(self.components) == 1

    def violations(self) -> list[str]:
        """Every disagreement between a prediction and the corresponding observation."""
        out = []
        p = self.params
        pred, cov, obs = self.predicted_connected, self.coverage.covered, self.observed_connected
        if not pred == cov == obs:
            out.append(f"connectivity: predicted={pred} coverage={cov} observed={obs}")
        if not self.degree.conforms():
            out.append(
                f"degree: observed {sorted(self.degree.histogram)} vs {self.degree.predicted.describe()}"
            )
        if p.variant is Variant.RCR:
            if not self.degree.is_uniform and not obs:
                out.append("degree: non-uniform degree on an unconnected network")
            if (p.r - 1) * p.k < p.j and obs:
                out.append("connectivity: (r-1)k < j yet connected")
        if sum(self.num_table.counts) << (p.m - 1) != self.cube_edges:
            out.append("num table: counts do not account for the cube edges")
        if not isinstance(self.diameter, str):
            if math.isinf(self.diameter) != math.isinf(self.diameter_bound):
                out.append(f"diameter: observed {self.diameter} vs bound {self.diameter_bound}")
            elif self.diameter > self.diameter_bound:
                out.append(f"diameter: observed {self.diameter} exceeds bound {self.diameter_bound}")
        if isinstance(self.exact_bisection, int) and self.exact_bisection > self.bisection_upper_bound:
            out.append(
                f"bisection: exact {self.exact_bisection} exceeds bound {self.bisection_upper_bound}"
            )
        sym = self.symmetry
        if sym is not None and sym.vertex_transitive is not None:
            if sym.theorem9_applicable and not sym.vertex_transitive:
                out.append("symmetry: relabeling condition holds but graph is not vertex-transitive")
            if sym.vertex_transitive and not self.degree.is_uniform:
                out.append("symmetry: vertex-transitive with non-uniform degree")
        return out

    def to_dict(self) -> dict:
        bisection: dict = {"upper_bound": self.bisection_upper_bound}
        if self.exact_bisection is not None:
            bisection["exact"] = self.exact_bisection
        if self.symmetry is None:
            symmetry = {"checked": False, "theorem9_applicable": theorem9_applicable(self.params)}
        else:
            symmetry = self.symmetry.as_dict()
        return {
            "params": self.params.as_dict(),
            "nodes": self.nodes,
            "edges": {"ring": self.ring_edges, "cube": self.cube_edges},
            "degree_histogram": {str(d): c for d, c in self.degree.histogram.items()},
            "predicted_degree": self.degree.predicted.as_dict(),
            "components": list(self.components),
            "connected": {
                "predicted": self.predicted_connected,
                "observed": self.observed_connected,
                "coverage_missing": sorted(self.coverage.missing),
            },
            "num_table": list(self.num_table.counts),
            "bisection": bisection,
            "diameter": {
                "observed": jsonable(self.diameter),
                "bound": jsonable(self.diameter_bound),
            },
            "symmetry": symmetry,
            "violations": self.violations(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def analyze(
    params: NetworkParams,
    *,
    exact_bisection: bool = False,
    symmetry: bool = False,
    node_cap: int = MAX_NODES,
    bisect_cap: int = an.DEFAULT_BISECT_CAP,
    symmetry_cap: int = DEFAULT_SYMMETRY_CAP,
    diameter_cap: int = DEFAULT_DIAMETER_CAP,
    strict: bool = False,
) -> AnalysisReport:
    """Build ``params`` and collect every observation and prediction.

    Oversized optional analyses are recorded as ``"skipped: size"``.  With
    ``strict`` any violation raises :class:`AnalysisMismatch`.
    """
    g = build(params, max_nodes=node_cap)
    n = g.n_nodes

    exact: Union[int, str, None] = None
    if exact_bisection:
        exact = an.exact_bisection(g, bisect_cap) if n <= bisect_cap else SKIPPED

    diam: Union[int, float, str]
    diam = an.diameter(g) if n <= diameter_cap else SKIPPED

    verdict = is_vertex_transitive(g, symmetry_cap) if symmetry else None

    report = AnalysisReport(
        params=params,
        nodes=n,
        ring_edges=g.n_ring_edges,
        cube_edges=g.n_cube_edges,
        degree=an.degree_distribution(g),
        components=tuple(an.connected_components(g)),
        predicted_connected=an.predicted_connected(params),
        coverage=an.coverage_check(params),
        num_table=an.num_table(params),
        bisection_upper_bound=an.bisection_upper_bound(params),
        exact_bisection=exact,
        diameter=diam,
        diameter_bound=an.diameter_bound(params),
        symmetry=verdict,
    )
    if strict:
        problems = report.violations()
        if problems:
            raise AnalysisMismatch(f"{params.label()}: " + "; ".join(problems))
    return report
