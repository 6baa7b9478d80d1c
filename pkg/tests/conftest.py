import numpy as np
import pytest

from rieszmean.noise import NoiseSpec, inject_spn

# One line per acceptance criterion, printed at the end of the run.
_ACCEPTANCE = {}
# Measured values worth reading even when a criterion passes.
_MEASURED = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, title = marker.args
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        prev = _ACCEPTANCE.get(number, (title, "PASS"))[1]
        status = "PASS" if report.outcome == "passed" and prev == "PASS" else "FAIL"
        if report.outcome == "skipped":
            status = "SKIP"
        _ACCEPTANCE[number] = (title, status)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        title, status = _ACCEPTANCE[number]
        terminalreporter.write_line(f"[{status}] {number:2d}. {title}")
    for line in _MEASURED:
        terminalreporter.write_line(f"    measured: {line}")


@pytest.fixture
def measured():
    """Call with a string to report a measured value in the run summary."""
    return _MEASURED.append


@pytest.fixture
def rng():
    return np.random.default_rng(20240521)


def random_noisy(rng, shape, density):
    clean = rng.integers(1, 255, size=shape).astype(np.uint8)
    seed = int(rng.integers(0, 2**32))
    noisy, _ = inject_spn(clean, NoiseSpec(density, 0.5, seed))
    return clean, noisy


EXAMPLE_1 = np.array([[0, 85, 76], [35, 255, 255], [0, 150, 73]], dtype=np.uint8)

EXAMPLE_1_PADDED = np.array(
    [
        [255, 35, 35, 255, 255, 255, 255],
        [85, 0, 0, 85, 76, 76, 85],
        [85, 0, 0, 85, 76, 76, 85],
        [255, 35, 35, 255, 255, 255, 255],
        [150, 0, 0, 150, 73, 73, 150],
        [150, 0, 0, 150, 73, 73, 150],
        [255, 35, 35, 255, 255, 255, 255],
    ],
    dtype=np.uint8,
)
