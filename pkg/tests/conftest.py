import pytest

from hopfg.uqsl2 import build

_ACCEPTANCE: dict = {}


@pytest.fixture(scope="session")
def H3():
    return build(3, 4)


@pytest.fixture(scope="session")
def H3_shifted():
    return build(3, 4, shift=2)


@pytest.fixture
def record():
    """record(n, ok, detail) prints and stores one acceptance line."""
    def _record(n: int, ok: bool, detail: str) -> None:
        line = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
        _ACCEPTANCE[n] = line
        print(line)
    return _record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_ACCEPTANCE):
        terminalreporter.write_line(_ACCEPTANCE[n])
