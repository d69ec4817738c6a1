from __future__ import annotations

import random
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import strategies as st

from partial_cramer.matrix import ColumnVector, Matrix
from partial_cramer.scalars import ScalarKind

DATA_DIR = Path(__file__).resolve().parent.parent / "data"

SEED = 20200101


@pytest.fixture
def rng():
    return random.Random(SEED)


def fractions(bound: int = 9):
    return st.builds(Fraction, st.integers(-bound, bound), st.integers(1, bound))


@st.composite
def square_matrices(draw, min_n: int = 1, max_n: int = 5, entries=None):
    n = draw(st.integers(min_n, max_n))
    vals = draw(st.lists(fractions() if entries is None else entries, min_size=n * n, max_size=n * n))
    return Matrix(n, n, tuple(vals), ScalarKind.RATIONAL)


def vector_for(draw, n: int, entries=None) -> ColumnVector:
    vals = draw(st.lists(fractions() if entries is None else entries, min_size=n, max_size=n))
    return ColumnVector(n, tuple(vals), ScalarKind.RATIONAL)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[number])
