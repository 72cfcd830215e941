import os

import pytest
from hypothesis import HealthCheck, assume, settings
from hypothesis import strategies as st

from origamikit.origami import Origami
from origamikit.perm import Permutation, is_transitive

settings.register_profile(
    "default", max_examples=120, deadline=None, suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much]
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def origamis(draw, max_d: int = 7):
    d = draw(st.integers(1, max_d))
    h = Permutation(draw(st.permutations(range(d))))
    v = Permutation(draw(st.permutations(range(d))))
    assume(is_transitive([h, v]))
    return Origami(h, v)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)


@pytest.fixture
def S():
    from origamikit.origami import origami_S

    return origami_S()
