import itertools

import numpy as np
import pytest

from fengrao import GF, IndexedBasis, build_algebra
from fengrao import fqla

# Worked examples: a hyperbolic-style code over F_5 on {1,2,3}^2 and a
# six-point code over F_4 (a = 2, a + 1 = 3 in the canonical encoding).
F5_POINTS = [[1, 2, 3], [1, 2, 3]]
F4_POLY = [1, 1, 1]
F4_POINTS = [[0, 1, 2], [1, 2]]

# Dual-basis polynomials, exponent (x, y) -> coefficient.
F5_H_POLYS = [
    {(2, 2): 1, (1, 2): 1, (2, 1): 1, (1, 1): 1},
    {(2, 2): 1, (1, 2): 3, (2, 1): 1, (0, 2): 1, (1, 1): 3, (0, 1): 1},
    {(2, 2): 1, (1, 2): 1, (2, 1): 3, (1, 1): 3, (2, 0): 1, (1, 0): 1},
    {(1, 2): 1, (0, 2): 1, (1, 1): 1, (0, 1): 1},
    {(2, 2): 1, (1, 2): 3, (2, 1): 3, (0, 2): 1, (1, 1): 4, (2, 0): 1, (0, 1): 3, (1, 0): 3, (0, 0): 1},
    {(2, 1): 1, (1, 1): 1, (2, 0): 1, (1, 0): 1},
    {(1, 2): 1, (0, 2): 1, (1, 1): 3, (0, 1): 3, (1, 0): 1, (0, 0): 1},
    {(2, 1): 1, (1, 1): 3, (2, 0): 1, (0, 1): 1, (1, 0): 3, (0, 0): 1},
    {(1, 1): 1, (0, 1): 1, (1, 0): 1, (0, 0): 1},
]
F4_H_POLYS = [
    {(1, 0): 2, (0, 0): 1},
    {(2, 0): 2, (0, 0): 3},
    {(1, 1): 2, (0, 1): 1, (1, 0): 1, (0, 0): 3},
    {(2, 0): 1, (1, 0): 3, (0, 0): 2},
    {(2, 1): 2, (2, 0): 1, (0, 1): 3, (0, 0): 2},
    {(2, 1): 1, (1, 1): 3, (2, 0): 3, (0, 1): 2, (1, 0): 2, (0, 0): 1},
]

F5_MESSAGE = [4, 3, 2, 1]
F5_CODEWORD = [0, 3, 1, 4, 3, 2, 3, 3, 3]
F5_I = (1, 2, 3, 5)


@pytest.fixture(scope="session")
def f5_algebra():
    return build_algebra(GF(5), 2, "graded-lex", F5_POINTS)


@pytest.fixture(scope="session")
def f4_algebra():
    return build_algebra(GF(2, 2, F4_POLY), 2, "graded-lex", F4_POINTS)


def random_full_rank(F, n, rng):
    while True:
        M = F.random(rng, (n, n))
        if fqla.rank(F, M) == n:
            return M


def random_basis(F, n, rng):
    return IndexedBasis(F, random_full_rank(F, n, rng))


def all_codewords(F, rows):
    """Every F-linear combination of ``rows`` (small codes only)."""
    rows = np.asarray(rows, dtype=np.int64)
    k = rows.shape[0]
    coeffs = np.array(list(itertools.product(range(F.q), repeat=k)), dtype=np.int64)
    return F.matmul(coeffs, rows)


def brute_min_distance(F, rows):
    words = all_codewords(F, rows)
    weights = np.count_nonzero(words, axis=1)
    return int(weights[weights > 0].min())


SMALL_FIELDS = [(2, 1, None), (3, 1, None), (2, 2, [1, 1, 1]), (5, 1, None)]


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
