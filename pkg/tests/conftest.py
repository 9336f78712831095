import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "ncdiv", max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("ncdiv")

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def xyz():
    from ncdiv.poly import ring

    R = ring("x, y, z")
    return (R,) + tuple(R.gens())


@pytest.fixture
def xy():
    from ncdiv.poly import ring

    R = ring("x, y")
    return (R,) + tuple(R.gens())
