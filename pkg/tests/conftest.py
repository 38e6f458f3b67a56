import itertools
import math

import numpy as np
import pytest

from spinorsign.characters import from_kronecker, principal
from spinorsign.quadform import TernaryForm
from spinorsign.spinor import default_class_set

Q1_GRAM = ((2, 0, 0), (0, 96, 0), (0, 0, 288))
Q2_GRAM = ((8, 0, 4), (0, 96, 48), (4, 48, 98))

_acceptance_lines = []

# (t, k, psi) triples whose psi_{t,N} is real
PSI_POOL = [
    (1, 1, principal(1)),
    (1, 1, from_kronecker(12)),
    (2, 1, from_kronecker(-4)),
    (3, 2, from_kronecker(5)),
    (5, 1, from_kronecker(-3)),
    (6, 3, from_kronecker(8)),
    (7, 2, principal(7)),
    (1, 2, from_kronecker(-7)),
]


@pytest.fixture(scope="session")
def Q1():
    return TernaryForm(Q1_GRAM, "Q1")


@pytest.fixture(scope="session")
def Q2():
    return TernaryForm(Q2_GRAM, "Q2")


@pytest.fixture(scope="session")
def sum_of_squares():
    return TernaryForm(((2, 0, 0), (0, 2, 0), (0, 0, 2)), "x2+y2+z2")


@pytest.fixture(scope="session")
def form_pool(Q1, Q2, sum_of_squares):
    return [
        Q1,
        Q2,
        sum_of_squares,
        TernaryForm.from_coefficients(1, 1, 2, name="x2+y2+2z2"),
        TernaryForm.from_coefficients(1, 2, 3, yz=2, name="x2+2y2+3z2+2yz"),
        TernaryForm.from_coefficients(2, 2, 3, xy=1, xz=1, yz=1, name="mixed"),
    ]


@pytest.fixture(scope="session")
def spinor_set():
    return default_class_set()


def box_theta(G, n_max):
    """Oracle: r(n) for n <= n_max by exhaustive search of a bounding box."""
    G = np.asarray(G, dtype=np.int64)
    lam = float(np.linalg.eigvalsh(G / 2.0).min())
    b = math.isqrt(int(n_max / lam)) + 2
    r = np.arange(-b, b + 1)
    X, Y, Z = np.meshgrid(r, r, r, indexing="ij")
    V = np.stack([X.ravel(), Y.ravel(), Z.ravel()])
    q = np.einsum("ik,ij,jk->k", V, G, V) // 2
    return np.bincount(q[q <= n_max], minlength=n_max + 1)


def brute_automorphism_order(G):
    """Oracle: count integer matrices U with U^T G U = G over coordinate boxes."""
    G = np.asarray(G, dtype=np.int64)
    Ginv = np.linalg.inv(G)
    cols = []
    for i in range(3):
        bounds = [int(math.floor(math.sqrt(G[i, i] * Ginv[j, j]) + 1e-9)) for j in range(3)]
        box = itertools.product(*(range(-b, b + 1) for b in bounds))
        cols.append([v for v in box if np.array(v) @ G @ np.array(v) == G[i, i]])
    count = 0
    for c0, c1, c2 in itertools.product(*cols):
        U = np.array([c0, c1, c2]).T
        if (U.T @ G @ U == G).all():
            count += 1
    return count


def record_acceptance(label, ok, detail=""):
    _acceptance_lines.append(f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  [{detail}]" if detail else ""))


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
