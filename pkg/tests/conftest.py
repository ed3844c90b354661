import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from gaussalg.exactcore import Monomial

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

# filled in by test_acceptance.py, printed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@st.composite
def monomials(draw, d, degree):
    """A monomial of the given degree in d variables."""
    cuts = sorted(draw(st.lists(st.integers(0, degree), min_size=d - 1, max_size=d - 1)))
    bounds = [0] + cuts + [degree]
    return Monomial(tuple(bounds[i + 1] - bounds[i] for i in range(d)))


@st.composite
def monomial_sets(draw, max_d=4, max_degree=3, min_size=1, max_size=8):
    d = draw(st.integers(1, max_d))
    r = draw(st.integers(1, max_degree))
    ms = draw(st.lists(monomials(d, r), min_size=min_size, max_size=max_size))
    return d, r, ms


def int_matrices(rows, cols, lo=-4, hi=4):
    return st.lists(st.lists(st.integers(lo, hi), min_size=cols, max_size=cols), min_size=rows, max_size=rows)


@pytest.fixture
def tmp_file(tmp_path):
    def make(text, name="input.txt"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return make
