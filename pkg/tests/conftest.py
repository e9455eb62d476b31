import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from splitkit.fixtures import fixture_names, load_fixture
from splitkit.moves import random_moves

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large]
)
settings.load_profile("default")

# fixtures small enough to perturb freely
SMALL = ("unknot-kink", "hopf", "trefoil", "whitehead-l5a1", "unlink-r2", "chain-3")


@pytest.fixture(scope="session")
def fx():
    return {name: load_fixture(name) for name in fixture_names()}


@st.composite
def perturbed(draw, names=SMALL, max_moves=6, max_crossings=9):
    """A fixture pushed through a few random Reidemeister moves."""
    name = draw(st.sampled_from(names))
    seed = draw(st.integers(0, 2**32 - 1))
    count = draw(st.integers(0, max_moves))
    d = load_fixture(name)
    e, path = random_moves(d, count, random.Random(seed), max_crossings)
    return name, d, e, path


# ---------------------------------------------------------------------------
# one summary line per acceptance criterion

_CRITERIA: dict[int, list] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    num = int(report.nodeid.split("test_criterion_")[1].split("_")[0])
    detail = dict(report.user_properties).get("detail", "")
    if hasattr(report, "wasxfail"):
        outcome = "XFAIL"
    else:
        outcome = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP"}[report.outcome]
    name = report.nodeid.split("::")[-1]
    _CRITERIA.setdefault(num, []).append((name, outcome, detail))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_CRITERIA):
        parts = _CRITERIA[num]
        main = [p for p in parts if p[1] != "XFAIL"]
        verdict = "PASS" if main and all(p[1] == "PASS" for p in main) else "FAIL"
        notes = "; ".join(f"{d}" + ("" if o in ("PASS",) else f" [{o}]") for _, o, d in parts)
        terminalreporter.write_line(f"criterion {num}: {verdict} - {notes}")
