"""Parameter-grid sweeps that cross-check every prediction against the built graphs."""

from __future__ import annotations

import csv
import io
import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .analysis import DEFAULT_BISECT_CAP
from .report import AnalysisReport, analyze, jsonable
from .symmetry import DEFAULT_SYMMETRY_CAP
from .topology import NetworkParams, Variant

__all__ = ["SweepRow", "SweepSpec", "SweepResult", "parse_range", "run_sweep"]

COLUMNS = (
    "variant", "k", "r", "j", "N", "degrees", "predicted_degree",
    "conn_pred", "conn_obs", "min_num", "bisect_bound", "bisect_exact",
    "diameter", "diameter_bound", "vertex_transitive", "status",
)


def parse_range(text: str) -> range:
    """``"3"`` or ``"1..5"`` (inclusive)."""
    lo, sep, hi = text.partition("..")
    start = int(lo)
    stop = int(hi) if sep else start
    if stop < start:
        raise ValueError(f"empty range {text!r}")
    return range(start, stop + 1)


@dataclass(frozen=True)
class SweepSpec:
    variants: tuple[Variant, ...] = (Variant.RCR,)
    k: range = range(1, 6)
    r: range = range(1, 7)
    j: range = range(0, 7)
    node_cap: int = 4096
    exact_bisection: bool = False
    bisect_cap: int = DEFAULT_BISECT_CAP
    symmetry: bool = False
    symmetry_cap: int = DEFAULT_SYMMETRY_CAP

    def __post_init__(self) -> None:
        for name in ("k", "r", "j"):
            if len(getattr(self, name)) == 0:
                raise ValueError(f"range for {name} is empty")
        if not self.variants:
            raise ValueError("no variants selected")

    def points(self) -> list[NetworkParams]:
        return [
            NetworkParams(k, r, j, v)
            for v, k, r, j in itertools.product(self.variants, self.k, self.r, self.j)
        ]


@dataclass(frozen=True)
class SweepRow:
    params: NetworkParams
    report: Optional[AnalysisReport]
    violations: tuple[str, ...] = ()

    @property
    def skipped(self) -> bool:
        return self.report is None

    def cells(self) -> dict:
        p = self.params
        row = {"variant": p.variant.value, "k": p.k, "r": p.r, "j": p.j, "N": p.n_nodes}
        rep = self.report
        if rep is None:
            row.update({c: "-" for c in COLUMNS[5:-1]})
            row["status"] = "skipped: size"
            return row
        sym = rep.symmetry
        if sym is None:
            vt = "-"
        elif sym.vertex_transitive is None:
            vt = "skipped"
        else:
            vt = "yes" if sym.vertex_transitive else "no"
        exact = rep.exact_bisection
        row.update(
            degrees=" ".join(f"{d}:{c}" for d, c in rep.degree.histogram.items()),
            predicted_degree=rep.degree.predicted.describe(),
            conn_pred=int(rep.predicted_connected),
            conn_obs=int(rep.observed_connected),
            min_num=rep.num_table.minimum,
            bisect_bound=rep.bisection_upper_bound,
            bisect_exact="-" if exact is None else ("skipped" if isinstance(exact, str) else exact),
            diameter=jsonable(rep.diameter),
            diameter_bound=jsonable(rep.diameter_bound),
            vertex_transitive=vt,
            status="ok" if not self.violations else "VIOLATION: " + "; ".join(self.violations),
        )
        return row


@dataclass
class SweepResult:
    rows: list[SweepRow] = field(default_factory=list)

    @property
    def violations(self) -> int:
        return sum(len(row.violations) for row in self.rows)

    @property
    def skipped(self) -> int:
        return sum(1 for row in self.rows if row.skipped)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=COLUMNS, lineterminator="\n")
        writer.writeheader()
        for row in self.rows:
            writer.writerow(row.cells())
        return buf.getvalue()

    def to_table(self) -> str:
        cells = [row.cells() for row in self.rows]
        widths = {c: max([len(c)] + [len(str(r[c])) for r in cells]) for c in COLUMNS}
        lines = ["  ".join(c.ljust(widths[c]) for c in COLUMNS).rstrip()]
        for r in cells:
            lines.append("  ".join(str(r[c]).ljust(widths[c]) for c in COLUMNS).rstrip())
        return "\n".join(lines) + "\n"

    def summary(self) -> str:
        checked = len(self.rows) - self.skipped
        return f"points: {len(self.rows)}  checked: {checked}  skipped: {self.skipped}  violations: {self.violations}\n"


def _run_point(args: tuple[NetworkParams, SweepSpec]) -> SweepRow:
    params, spec = args
    if params.n_nodes > spec.node_cap:
        return SweepRow(params, None)
    report = analyze(
        params,
        exact_bisection=spec.exact_bisection,
        symmetry=spec.symmetry,
        node_cap=spec.node_cap,
        bisect_cap=spec.bisect_cap,
        symmetry_cap=spec.symmetry_cap,
    )
    return SweepRow(params, report, tuple(report.violations()))


def run_sweep(spec: SweepSpec, jobs: int = 1) -> SweepResult:
    """Analyze every grid point; rows come back in grid order whatever ``jobs`` is."""
    work = [(p, spec) for p in spec.points()]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_run_point, work, chunksize=4))
    else:
        rows = [_run_point(w) for w in work]
    return SweepResult(rows)

