import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from zastava.rootdata import root_system  # noqa: E402


@pytest.fixture(scope="session")
def systems():
    return {name: root_system(name) for name in ("A1", "A2", "A3", "B2", "C2", "G2")}


def matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]) if b else 0)]
            for i in range(len(a))]


def random_unimodular(n, rng, steps=None):
    """A random unimodular matrix and its inverse, from elementary operations."""
    P = [[int(i == j) for j in range(n)] for i in range(n)]
    Pinv = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps if steps is not None else 3 * n):
        if n < 2:
            break
        i, j = rng.sample(range(n), 2)
        c = rng.randint(-2, 2)
        # P <- E P with E = I + c e_ij ; Pinv <- Pinv E^-1
        P[i] = [x + c * y for x, y in zip(P[i], P[j])]
        for row in Pinv:
            row[j] -= c * row[i]
    if n and rng.random() < 0.5:
        P[0] = [-x for x in P[0]]
        for row in Pinv:
            row[0] = -row[0]
    return P, Pinv


def random_complex(rng, max_len=4, max_rank=5):
    """Random complex in degrees 0..L-1 with known homology.

    Returns ``(json_dict, expected)`` where ``expected[i] = (free_rank, torsion)``.
    """
    length = rng.randint(1, max_len)
    ranks = [0] * length
    pieces = []  # (degree, multiplier or None for a free summand)
    for _ in range(rng.randint(0, 2 * length + 2)):
        i = rng.randrange(length)
        if i + 1 < length and rng.random() < 0.6:
            if ranks[i] < max_rank and ranks[i + 1] < max_rank:
                a = rng.choice([1, 1, 2, 3, 4, 5, 6, 7, 9, 10, 12, 0])
                pieces.append((i, a))
                ranks[i] += 1
                ranks[i + 1] += 1
        elif ranks[i] < max_rank:
            pieces.append((i, None))
            ranks[i] += 1
    # block-diagonal differentials in a standard basis
    slots = [0] * length
    diffs = [[[0] * ranks[i] for _ in range(ranks[i + 1])] for i in range(length - 1)]
    expected = {i: [0, []] for i in range(length)}
    for deg, a in pieces:
        if a is None:
            expected[deg][0] += 1
            slots[deg] += 1
            continue
        src, dst = slots[deg], slots[deg + 1]
        diffs[deg][dst][src] = a
        slots[deg] += 1
        slots[deg + 1] += 1
        if a == 0:
            expected[deg][0] += 1
            expected[deg + 1][0] += 1
        elif a > 1:
            expected[deg + 1][1].append(a)
    # conjugate: d'^i = P_{i+1} d^i P_i^{-1}
    bases = [random_unimodular(r, rng) for r in ranks]
    new = []
    for i in range(length - 1):
        if ranks[i] == 0 or ranks[i + 1] == 0:
            new.append([])
            continue
        m = matmul(matmul(bases[i + 1][0], diffs[i]), bases[i][1])
        new.append([x for row in m for x in row])
    data = {"degrees": [0, length - 1], "ranks": ranks, "differentials": new}
    exp = {i: (free, tuple(sorted(tors))) for i, (free, tors) in expected.items()}
    return data, exp


@pytest.fixture
def rng():
    return random.Random(20261016)
