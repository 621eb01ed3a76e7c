import itertools

import pytest

from rcrnet.topology import NetworkParams, Variant

_acceptance_results: list[tuple[str, str, str]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): exit criterion of the build")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("acceptance")
    if marker is None or call.when != "call":
        return
    number, title = marker.args
    outcome = "PASS" if call.excinfo is None else "FAIL"
    _acceptance_results.append((number, title, outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, outcome in sorted(_acceptance_results, key=lambda r: int(r[0])):
        terminalreporter.write_line(f"[{outcome}] criterion {number}: {title}")


def grid(variants=tuple(Variant), k=range(1, 6), r=range(1, 7), j=range(0, 7), max_nodes=4096):
    """Every parameter point of the standard grid up to ``max_nodes`` nodes."""
    for v, kk, rr, jj in itertools.product(variants, k, r, j):
        p = NetworkParams(kk, rr, jj, v)
        if p.n_nodes <= max_nodes:
            yield p


@pytest.fixture
def small_grid():
    return list(grid(max_nodes=256))
