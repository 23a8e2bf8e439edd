import math

import numpy as np
import pytest

from pentacomplex import (H1, H2, H3, H4, ONE, ZERO, NonInvertible,
                          NotCirculant, PentaComplex, add, basis_product,
                          from_matrix, inverse, multiply, to_matrix)
from pentacomplex.canonical import E_PLUS

# the ten products of the cyclic basis table, transcribed independently
BASIS_TABLE = {(1, 1): 2, (2, 2): 4, (3, 3): 1, (4, 4): 3, (1, 2): 3,
               (1, 3): 4, (1, 4): 0, (2, 3): 0, (2, 4): 1, (3, 4): 2}


def rand(rng, lo=-10.0, hi=10.0):
    return PentaComplex(*rng.uniform(lo, hi, 5))


def test_basis_table_via_multiply():
    for (j, k), expect in BASIS_TABLE.items():
        got = multiply(PentaComplex.basis(j), PentaComplex.basis(k))
        assert got == PentaComplex.basis(expect), (j, k)


def test_basis_product_total_on_domain():
    for j in range(5):
        assert basis_product(0, j) == j  # h0 is the identity
        for k in range(5):
            assert basis_product(j, k) == (j + k) % 5


def test_basis_product_rejects_bad_indices():
    with pytest.raises(ValueError):
        basis_product(5, 0)
    with pytest.raises(ValueError):
        basis_product(0, -1)


def test_add_identities():
    rng = np.random.default_rng(0)
    u = rand(rng)
    assert add(u, ZERO) == u
    assert add(u, -u) == ZERO
    assert add(PentaComplex(1, 0, 0, 0, 0), PentaComplex(0, 1, 0, 0, 0)) == \
        PentaComplex(1, 1, 0, 0, 0)


def test_multiply_examples():
    assert multiply(H1, H4) == ONE
    rng = np.random.default_rng(1)
    u = rand(rng)
    assert multiply(u, ONE) == u
    # (h1+h2)(h3+h4) expanded term by term with the basis table:
    # h1h3 + h1h4 + h2h3 + h2h4 = h4 + 1 + 1 + h1
    got = multiply(H1 + H2, H3 + H4)
    assert got == PentaComplex(2, 1, 0, 0, 1)


def test_commutativity_is_bit_exact():
    rng = np.random.default_rng(2)
    for _ in range(300):
        u = rand(rng)
        v = rand(rng)
        assert multiply(u, v).components == multiply(v, u).components


def test_associativity_and_distributivity():
    rng = np.random.default_rng(3)
    for _ in range(300):
        u, v, w = rand(rng), rand(rng), rand(rng)
        tol = 1e-12 * (1.0 + abs(u) * abs(v) * abs(w))
        lhs = multiply(multiply(u, v), w)
        rhs = multiply(u, multiply(v, w))
        assert max(abs(a - b) for a, b in zip(lhs, rhs)) <= tol
        lhs = multiply(u, v + w)
        rhs = multiply(u, v) + multiply(u, w)
        assert max(abs(a - b) for a, b in zip(lhs, rhs)) <= tol


def test_to_matrix_layout():
    assert np.array_equal(to_matrix(ONE), np.eye(5))
    m = to_matrix(H1)
    assert m[0].tolist() == [0, 1, 0, 0, 0]
    # each row is the previous one cyclically shifted right
    u = PentaComplex(10, 11, 12, 13, 14)
    m = to_matrix(u)
    assert m[1].tolist() == [14, 10, 11, 12, 13]
    assert m[4].tolist() == [11, 12, 13, 14, 10]


def test_matrix_homomorphism_against_dense_product():
    rng = np.random.default_rng(4)
    for _ in range(300):
        u, v = rand(rng), rand(rng)
        dense = to_matrix(u) @ to_matrix(v)
        got = to_matrix(multiply(u, v))
        assert np.linalg.norm(got - dense) <= 1e-12 * max(1.0, np.linalg.norm(dense))


def test_from_matrix_roundtrip_and_validation():
    assert from_matrix(np.eye(5)) == ONE
    assert from_matrix(to_matrix(H3)) == H3
    rng = np.random.default_rng(5)
    u = rand(rng)
    assert from_matrix(to_matrix(u)) == u
    bad = to_matrix(u)
    bad[2, 3] += 1e-6
    with pytest.raises(NotCirculant):
        from_matrix(bad)
    with pytest.raises(ValueError):
        from_matrix(np.eye(4))


def test_inverse_examples():
    assert max(abs(a - b) for a, b in zip(inverse(ONE), ONE)) <= 1e-15
    assert max(abs(a - b) for a, b in zip(inverse(H1), H4)) <= 1e-15
    with pytest.raises(NonInvertible):
        inverse(E_PLUS)  # both plane radii vanish
    with pytest.raises(NonInvertible):
        inverse(ZERO)


def test_inverse_random_roundtrip():
    rng = np.random.default_rng(6)
    done = 0
    while done < 300:
        u = rand(rng)
        try:
            vinv = inverse(u)
        except NonInvertible:
            continue
        prod = multiply(u, vinv)
        assert max(abs(a - b) for a, b in zip(prod, ONE)) <= 1e-10
        done += 1


def test_construction_rejects_non_finite():
    with pytest.raises(ValueError):
        PentaComplex(math.nan, 0, 0, 0, 0)
    with pytest.raises(ValueError):
        PentaComplex(0, math.inf, 0, 0, 0)
    with pytest.raises(ValueError):
        PentaComplex.from_components([1, 2, 3])


def test_immutability():
    u = PentaComplex(1, 2, 3, 4, 5)
    with pytest.raises(AttributeError):
        u.x0 = 7.0


def test_operators_and_serialization():
    u = PentaComplex(1, 2, 3, 4, 5)
    assert (-u).components == (-1, -2, -3, -4, -5)
    assert (u - u) == ZERO
    assert (2.0 * u).components == (2, 4, 6, 8, 10)
    assert (u / 2.0).components == (0.5, 1, 1.5, 2, 2.5)
    assert abs(PentaComplex(3, 4, 0, 0, 0)) == 5.0
    assert PentaComplex.from_list(u.to_list()) == u
    assert u[3] == 4.0 and list(u) == [1, 2, 3, 4, 5]
    assert str(ONE) == "1 + 0 h1 + 0 h2 + 0 h3 + 0 h4"
    # ring division is multiplication by the inverse
    q = u / H1
    assert max(abs(a - b) for a, b in zip(multiply(q, H1), u)) <= 1e-12
