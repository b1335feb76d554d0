import random

import pytest
from hypothesis import strategies as st

from fpindex import normalize

A = "abaceabacd"
B = "abcadabacbe"


def rank_str(ranks, alphabet):
    return "".join(alphabet.unrank(r) if r < alphabet.size else "#" for r in ranks)


def random_simple(rng, n, sigma):
    out = [rng.randrange(sigma)]
    while len(out) < n:
        c = rng.randrange(sigma)
        if c != out[-1] or sigma == 1:
            out.append(c)
    return out


@st.composite
def simple_sequences(draw, max_n=40, max_sigma=6):
    sigma = draw(st.integers(2, max_sigma))
    raw = draw(st.lists(st.integers(0, sigma - 1), min_size=1, max_size=max_n))
    return raw


@pytest.fixture
def seq_a():
    return normalize(A)


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
