import pytest

from quasialg import standard_algebras as std


@pytest.fixture(scope="session")
def C():
    return std.complexes()


@pytest.fixture(scope="session")
def H():
    return std.quaternions()


@pytest.fixture(scope="session")
def O():
    return std.octonions()


@pytest.fixture(scope="session")
def cl3():
    return std.clifford(3, "negative")


ACCEPTANCE_LINES: dict[int, str] = {}


@pytest.fixture
def criterion():
    """Record one acceptance line and assert it."""

    def record(number: int, ok: bool, detail: str = "") -> None:
        ACCEPTANCE_LINES[number] = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
        assert ok, detail

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])
