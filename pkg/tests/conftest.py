import random

import pytest
from hypothesis import settings, strategies as st

from dompoly.config import DEFAULT_SEED
from dompoly.graph import Graph

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph.from_edges(n, chosen)


@pytest.fixture
def rng():
    return random.Random(DEFAULT_SEED)


# -- acceptance summary: one line per criterion, taken from the real test outcome --

_ACCEPTANCE = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    if report.when == "call" or report.failed:
        _ACCEPTANCE[report.nodeid] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, outcome in sorted(_ACCEPTANCE.items()):
        name = nodeid.split("::test_criterion_", 1)[1]
        num, _, title = name.partition("_")
        terminalreporter.write_line(f"criterion {int(num):2d}: {outcome}  {title.replace('_', ' ')}")
