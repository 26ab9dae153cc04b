import pytest

from entgeom import kernels

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(params=sorted(kernels.BACKENDS))
def backend(request):
    """Run a test once per available kernel backend."""
    previous = kernels.BACKEND
    kernels.use_backend(request.param)
    yield request.param
    kernels.use_backend(previous)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section(f"acceptance criteria (kernel backend: {kernels.BACKEND})")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
