import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from cumulant_kit.partitions import Partition, enumerate_noncrossing_partitions, enumerate_set_partitions

ACCEPTANCE_LINES: list[str] = []


def pb(*blocks):
    return Partition.from_blocks(blocks)


def random_rationals(rng: random.Random, n: int, lo: int = -9, hi: int = 9) -> list[Fraction]:
    return [Fraction(rng.randint(lo, hi), rng.randint(1, 6)) for _ in range(n)]


def set_partitions(max_n: int, min_n: int = 0):
    return st.integers(min_n, max_n).flatmap(lambda n: st.sampled_from(enumerate_set_partitions(n)))


def nc_partitions(max_n: int, min_n: int = 0):
    return st.integers(min_n, max_n).flatmap(lambda n: st.sampled_from(enumerate_noncrossing_partitions(n)))


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
