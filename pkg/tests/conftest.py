from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

from monopart.core import Instance

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")


@pytest.fixture
def fixtures_dir():
    return FIXTURES


@st.composite
def instances(draw, max_n=12, max_m=5, max_value=100):
    n = draw(st.integers(1, max_n))
    m = draw(st.integers(2, max_m))
    values = draw(st.lists(st.integers(1, max_value), min_size=n, max_size=n))
    return Instance(tuple(values), m)


@st.composite
def perturbed(draw, max_n=12, max_m=5, max_value=100, max_eps=20):
    """An instance plus a (0-based index, epsilon) increase."""
    inst = draw(instances(max_n, max_m, max_value))
    return inst, draw(st.integers(0, inst.n - 1)), draw(st.integers(1, max_eps))


_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion reported in the summary")


def pytest_runtest_logreport(report):
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        label = dict(report.user_properties).get("criterion")
        if label:
            _criteria[label] = report.outcome


def pytest_runtest_setup(item):
    marker = item.get_closest_marker("criterion")
    if marker:
        item.user_properties.append(("criterion", marker.args[0]))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_criteria, key=lambda s: int(s.split()[0][2:])):
        verdict = "PASS" if _criteria[label] == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {label}")
