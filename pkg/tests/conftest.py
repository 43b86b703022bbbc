import pytest

from hopfgalois.reports import run_degree

ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture(scope="session")
def degree_runs():
    """Full enumeration output for degrees 2..11, computed once."""
    cache = {}

    def get(g):
        if g not in cache:
            cache[g] = run_degree(g)
        return cache[g]

    return get


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, text = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {text}")
