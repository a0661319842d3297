from __future__ import annotations

import sys
from pathlib import Path

from hypothesis import HealthCheck, settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from oracles import random_forest, random_graph  # noqa: E402

import random

settings.register_profile(
    "suite", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("suite")

FIXTURES = Path(__file__).parent / "fixtures"


@st.composite
def graphs(draw, max_vertices: int = 8, p: float = 0.35):
    """Random simple graphs, sized for exhaustive cross-checks."""
    n = draw(st.integers(min_value=0, max_value=max_vertices))
    seed = draw(st.integers(min_value=0, max_value=2**32 - 1))
    return random_graph(random.Random(seed), n, p)


@st.composite
def forests(draw, max_vertices: int = 10):
    n = draw(st.integers(min_value=0, max_value=max_vertices))
    seed = draw(st.integers(min_value=0, max_value=2**32 - 1))
    return random_forest(random.Random(seed), n)
