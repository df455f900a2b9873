from __future__ import annotations

import pytest

from permring import Permutation, all_subgroups
from permring.report import parse_group_spec

BATTERY = ("S3", "S4", "D4", "A4", "C2xC2")

# filled by tests/test_acceptance.py, printed once at the end of the run
ACCEPTANCE_LINES: list[str] = []


def group(text: str):
    return parse_group_spec(text).group


def perm(cycles, degree: int) -> Permutation:
    """0-based cycle shorthand for tests: ``perm([(0, 1)], 4)``."""
    return Permutation.from_cycles(cycles, degree)


def battery_pairs():
    for name in BATTERY:
        G = group(name)
        for H in all_subgroups(G):
            yield name, G, H


@pytest.fixture(scope="session")
def S4():
    return group("S4")


@pytest.fixture(scope="session")
def S3():
    return group("S3")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
