import json
from fractions import Fraction

import numpy as np
import pytest

from conftest import box_theta, brute_automorphism_order
from spinorsign.quadform import (
    TernaryForm,
    automorphism_order,
    automorphisms,
    evaluate,
    level_and_determinant,
    load_form,
    primitive_representation_count,
    representation_count,
    theta_coefficients,
)


def test_evaluate(Q1, Q2, sum_of_squares):
    assert evaluate(Q1, (1, 0, 0)) == 1
    assert evaluate(Q2, (0, 0, 1)) == 49
    assert evaluate(Q2, (1, 1, 1)) == 4 + 48 + 49 + 4 + 48
    for Q in (Q1, Q2, sum_of_squares):
        assert evaluate(Q, (0, 0, 0)) == 0


def test_from_coefficients_matches_gram(Q2):
    assert TernaryForm.from_coefficients(4, 48, 49, yz=48, xz=4).gram == Q2.gram


@pytest.mark.parametrize(
    "gram",
    [
        ((2, 0, 0), (0, 2, 0), (0, 0, 1)),  # odd diagonal
        ((2, 1, 0), (0, 2, 0), (0, 0, 2)),  # not symmetric
        ((2, 0, 0), (0, -2, 0), (0, 0, 2)),  # indefinite
        ((2, 2, 0), (2, 2, 0), (0, 0, 2)),  # degenerate
    ],
)
def test_invalid_grams(gram):
    with pytest.raises(ValueError):
        TernaryForm(gram)


def test_representation_count_examples(Q1, Q2):
    assert representation_count(Q1, 0) == 1
    assert representation_count(Q1, 1) == 2
    assert representation_count(Q2, 1) == 0
    assert representation_count(Q2, 25) == 0


def test_enumeration_matches_box_search(form_pool):
    for Q in form_pool:
        oracle = box_theta(Q.gram, 200)
        got = [representation_count(Q, n) for n in range(201)]
        assert got == oracle.tolist(), Q.name


def test_theta_examples(Q1, Q2):
    assert theta_coefficients(Q1, 0) == [1]
    assert theta_coefficients(Q1, 2) == [1, 2, 0]
    assert theta_coefficients(Q2, 4) == [1, 0, 0, 0, 2]


def test_theta_sweep_matches_pointwise(form_pool):
    for Q in form_pool:
        theta = theta_coefficients(Q, 200)
        assert theta == [representation_count(Q, n) for n in range(201)], Q.name


def test_theta_sweep_larger_range(Q2):
    theta = theta_coefficients(Q2, 5000)
    for n in (4, 49, 97, 1200, 2401, 4999, 5000):
        assert theta[n] == representation_count(Q2, n)


def test_positivity_and_parity(form_pool):
    for Q in form_pool:
        theta = theta_coefficients(Q, 500)
        assert theta[0] == 1
        assert all(r % 2 == 0 for r in theta[1:])


def test_primitive_examples(Q1, Q2):
    assert primitive_representation_count(Q1, 1) == 2
    assert primitive_representation_count(Q1, 4) == 0
    assert primitive_representation_count(Q2, 4) == 2
    with pytest.raises(ValueError):
        primitive_representation_count(Q1, 0)


def test_primitive_sieve_identity_small(form_pool):
    for Q in form_pool[3:]:
        theta = theta_coefficients(Q, 150)
        for n in range(1, 151):
            total = sum(primitive_representation_count(Q, n // (d * d)) for d in range(1, 13) if n % (d * d) == 0)
            assert total == theta[n]


@pytest.mark.parametrize("name, expected", [("Q1", 8), ("Q2", 8), ("sum_of_squares", 48)])
def test_automorphism_orders(name, expected, request):
    Q = request.getfixturevalue(name)
    assert brute_automorphism_order(Q.gram) == expected
    assert automorphism_order(Q) == expected


def test_automorphism_orders_on_pool(form_pool):
    for Q in form_pool[3:]:
        assert automorphism_order(Q) == brute_automorphism_order(Q.gram)


def test_automorphisms_form_a_group(form_pool):
    for Q in form_pool:
        G = Q.G
        auts = automorphisms(Q)
        keys = {U.tobytes() for U in auts}
        for U in auts:
            assert (U.T @ G @ U == G).all()
            inv = np.rint(np.linalg.inv(U)).astype(np.int64)
            assert inv.tobytes() in keys
        for U in auts[:12]:
            for V in auts:
                assert (U @ V).tobytes() in keys


def test_level_and_determinant(Q1, Q2, sum_of_squares):
    assert level_and_determinant(Q1) == (576, 6912)
    assert level_and_determinant(Q2) == (576, 6912)
    assert level_and_determinant(sum_of_squares) == (4, 1)
    assert 576 == 2**6 * 3**2 and 6912 == 2**8 * 3**3


def test_determinant_may_be_fractional():
    Q = TernaryForm.from_coefficients(1, 1, 1, xy=1)
    assert level_and_determinant(Q)[1] == Fraction(3, 4)


def test_level_is_minimal(form_pool):
    for Q in form_pool:
        N, _ = level_and_determinant(Q)
        inv = np.linalg.inv(Q.G.astype(float))
        for M in range(1, N + 1):
            A = M * inv
            ok = np.allclose(A, np.rint(A)) and all(round(A[i, i]) % 2 == 0 for i in range(3))
            assert ok == (M % N == 0)


def test_load_form(tmp_path, Q2):
    p = tmp_path / "q2.json"
    p.write_text(json.dumps({"name": "Q2", "gram": [[8, 0, 4], [0, 96, 48], [4, 48, 98]]}))
    assert load_form(p) == Q2
    p.write_text(json.dumps({"name": "bad"}))
    with pytest.raises(ValueError, match="gram"):
        load_form(p)
