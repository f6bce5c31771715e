import pytest
from hypothesis import strategies as st

from pcgdavn.families import generate
from pcgdavn.state import PcgState, Component


@pytest.fixture
def ghz3():
    return generate("ghz3")


@pytest.fixture
def phi4():
    return generate("phi4")


@pytest.fixture
def phi5():
    return generate("phi5")


@st.composite
def pcg_states(draw, min_n=2, max_n=6, strict=True):
    """Random valid PCG states: an antichain of nonempty supports, optionally
    plus the empty support (never beside a singleton), with random signs."""
    n = draw(st.integers(min_n, max_n))
    full = (1 << n) - 1
    top = full - 1 if strict else full
    masks = draw(st.lists(st.integers(1, top), min_size=0, max_size=8, unique=True))
    kept = []
    for m in masks:
        if all(m & k != m and m & k != k for k in kept):
            kept.append(m)
    if draw(st.booleans()) or not kept:
        kept = [m for m in kept if m & (m - 1)] + [0]
    comps = []
    for m in kept:
        support = tuple(q for q in range(1, n + 1) if m >> (q - 1) & 1)
        comps.append(Component(support, draw(st.sampled_from((1, -1)))))
    return PcgState(n, tuple(sorted(comps)))


ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
