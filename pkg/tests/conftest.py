from __future__ import annotations

import random
from functools import lru_cache

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from csl4.coincidence import Family
from csl4.golden import GoldenInt
from csl4.oracle import count_classes
from csl4.quaternions import HurwitzQuat, Icosian, icosian_units

settings.register_profile(
    "fixed",
    derandomize=True,
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("fixed")

small = st.integers(-6, 6)
golden_ints = st.builds(GoldenInt, small, small)
nonzero_golden = golden_ints.filter(bool)


@st.composite
def hurwitz(draw, lo: int = -6, hi: int = 6) -> HurwitzQuat:
    half = draw(st.booleans())
    d = [2 * draw(st.integers(lo, hi)) + int(half) for _ in range(4)]
    return HurwitzQuat(*d)


@st.composite
def icosians(draw, terms: int = 3) -> Icosian:
    """Short Z[tau]-combinations of units: a cheap way to land inside I."""
    units = icosian_units()
    acc = Icosian._raw((0,) * 8)
    for _ in range(draw(st.integers(1, terms))):
        u = units[draw(st.integers(0, len(units) - 1))]
        acc = acc + u.scale(GoldenInt(draw(st.integers(-2, 2)), draw(st.integers(-2, 2))))
    return acc


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)


@lru_cache(maxsize=None)
def enum_report(family: Family, n: int):
    """Enumeration reports are shared between the oracle and acceptance suites."""
    return count_classes(family, n, budget=64)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = []
    for key in ("passed", "failed"):
        for rep in terminalreporter.stats.get(key, []):
            for name, value in getattr(rep, "user_properties", []):
                if name == "acceptance":
                    lines.append(value)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
