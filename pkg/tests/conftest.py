from __future__ import annotations

import numpy as np
import pytest

from chaincodes import CodeMatrix, make_ring, optimal_two_weight_code, y_matrix

ACCEPTANCE: dict[int, tuple[str, str]] = {}


@pytest.fixture(scope="session")
def z4():
    return make_ring("zpm", 2, m=2)


@pytest.fixture(scope="session")
def z8():
    return make_ring("zpm", 2, m=3)


@pytest.fixture(scope="session")
def z9():
    return make_ring("zpm", 3, m=2)


@pytest.fixture(scope="session")
def f2u():
    return make_ring("fqum", 2, 1, 2)


def golden_generators() -> dict[str, CodeMatrix]:
    """The four Plotkin-optimal two-weight codes plus Y_1 and Y_2 over Z_4."""
    z4 = make_ring("zpm", 2, m=2)
    z8 = make_ring("zpm", 2, m=3)
    z9 = make_ring("zpm", 3, m=2)
    f2u = make_ring("fqum", 2, 1, 2)
    return {
        "y2_z8": y_matrix(z8, 2),
        "y2_f2u": CodeMatrix(f2u, np.array([[1, 1, 1, 1, 0, 2], [0, 1, 2, 3, 1, 1]])),
        "opt_z8_301": optimal_two_weight_code(z8, (3, 0, 1), 2),
        "opt_z9_21": optimal_two_weight_code(z9, (2, 1), 2),
        "y1_z4": y_matrix(z4, 1),
        "y2_z4": y_matrix(z4, 2),
    }


@pytest.fixture(scope="session")
def golden():
    return golden_generators()


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): one of the numbered acceptance criteria")


def pytest_runtest_logreport(report):
    marker = getattr(report, "acceptance", None)
    if marker is None:
        return
    number, title = marker
    if report.when == "call" or report.outcome != "passed":
        previous = ACCEPTANCE.get(number, (title, "PASS"))[1]
        status = "PASS" if report.outcome == "passed" and previous == "PASS" else "FAIL"
        ACCEPTANCE[number] = (title, status)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("acceptance")
    if marker is not None:
        outcome.get_result().acceptance = tuple(marker.args)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        title, status = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:2d} {status}: {title}")
