import pytest

from pxk import builders

ACCEPTANCE: dict[int, tuple[str, bool]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance")
    for n in sorted(ACCEPTANCE, key=str):
        title, ok = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {title}")


@pytest.fixture(scope="session")
def torus():
    return builders.torus_T()


@pytest.fixture(scope="session")
def anti_torus():
    return builders.anti_torus_A()


@pytest.fixture(scope="session")
def tetra():
    return builders.simplex_boundary(3)
