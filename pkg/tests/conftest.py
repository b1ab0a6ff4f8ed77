import pytest
from hypothesis import HealthCheck, settings

from nclr.tableaux import SkewTableau

settings.register_profile("default", max_examples=200, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

# the running example: lam/mu = (7,6,4,3,2)/(6,4,4), content (4,3,1)
RUNNING_LAMBDA = (7, 6, 4, 3, 2)
RUNNING_MU = (6, 4, 4)
RUNNING_NU = (4, 3, 1)

# the three LR tableaux, rows bottom-up, skew part only
RUNNING_LR = (
    SkewTableau(RUNNING_MU, ((1,), (1, 1), (), (1, 2, 2), (2, 3))),
    SkewTableau(RUNNING_MU, ((1,), (1, 2), (), (1, 1, 2), (2, 3))),
    SkewTableau(RUNNING_MU, ((1,), (1, 2), (), (1, 1, 3), (2, 2))),
)

# their images under s_1 s_2, in the same order
RUNNING_IMAGES = (
    SkewTableau(RUNNING_MU, ((2,), (1, 2), (), (2, 2, 3), (3, 3))),
    SkewTableau(RUNNING_MU, ((2,), (1, 3), (), (2, 2, 2), (3, 3))),
    SkewTableau(RUNNING_MU, ((1,), (2, 2), (), (2, 2, 3), (3, 3))),
)

# a skew tableau of shape (7,6,3,1)/(4,2) and its standardization
STAN_SOURCE = SkewTableau((4, 2), ((1, 2, 4), (1, 2, 3, 3), (1, 2, 2), (2,)))
STAN_TARGET = SkewTableau((4, 2), ((3, 8, 11), (2, 7, 9, 10), (1, 5, 6), (4,)))

_acceptance_lines: list[str] = []


@pytest.fixture
def acceptance_report():
    return _acceptance_lines


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
