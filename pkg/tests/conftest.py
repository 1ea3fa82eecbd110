from __future__ import annotations

import math

import numpy as np
import pytest

from evencox import fixtures
from evencox.coxeter import INF, CoxeterGroup


@pytest.fixture(scope="session")
def groups() -> dict[str, CoxeterGroup]:
    return {name: fixtures.load(name) for name in fixtures.NAMES}


def tits_matrices(W: CoxeterGroup) -> list[np.ndarray]:
    """Reflections of the geometric representation; faithful, so it is a word-problem oracle."""
    n = W.rank
    B = np.empty((n, n))
    for i in range(n):
        for j in range(n):
            m = W.m(i, j)
            B[i, j] = 1.0 if i == j else (-1.0 if m == INF else -math.cos(math.pi / m))
    mats = []
    for s in range(n):
        M = np.eye(n)
        M[s, :] -= 2 * B[s, :]
        mats.append(M)
    return mats


def evaluate(mats: list[np.ndarray], word) -> np.ndarray:
    out = np.eye(len(mats))
    for s in word:
        out = out @ mats[s]
    return out


def matrix_key(M: np.ndarray) -> tuple:
    return tuple(np.round(M, 6).ravel() + 0.0)


ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
