import math

import numpy as np
import pytest

from pentacomplex import (H1, ONE, ZERO, Degenerate, InvalidPairing,
                          LinearFactor, NonInvertibleLeading, PentaComplex,
                          PentaPolynomial, QuadraticFactor, assemble_roots,
                          component_roots, count_factorizations, decompose,
                          expand_factors, factor, multiply, to_canonical)
from pentacomplex.canonical import CONSTANTS, E1, E2, E_PLUS

SQRT5 = math.sqrt(5.0)


def rand(rng, lo=-2.0, hi=2.0):
    return PentaComplex(*rng.uniform(lo, hi, 5))


def dev(u, v):
    return max(abs(a - b) for a, b in zip(u, v))


def scalar(x):
    return PentaComplex.scalar(x)


def u2_minus_1():
    return PentaPolynomial((ZERO, scalar(-1.0)))


def test_polynomial_basics():
    p = u2_minus_1()
    assert p.degree == 2
    assert dev(p.evaluate(scalar(3.0)), scalar(8.0)) <= 1e-14
    with pytest.raises(ValueError):
        PentaPolynomial(())


def test_from_leading_normalizes():
    # 2u^2 - 2 normalised by its leading coefficient
    p = PentaPolynomial.from_leading(scalar(2.0), (ZERO, scalar(-2.0)))
    assert dev(p.coeffs[1], scalar(-1.0)) <= 1e-15
    with pytest.raises(NonInvertibleLeading):
        PentaPolynomial.from_leading(E_PLUS, (ZERO,))


def test_decompose_u2_minus_1():
    cp = decompose(u2_minus_1())
    assert cp.pplus == (1.0, 0.0, -1.0)
    assert cp.p1[0] == 1 and abs(cp.p1[1]) == 0 and abs(cp.p1[2] + 1) <= 1e-15
    assert abs(cp.p2[2] + 1) <= 1e-15


def test_decompose_degree_one_is_canonical_components():
    rng = np.random.default_rng(70)
    c = rand(rng)
    cp = decompose(PentaPolynomial((c,)))
    cf = to_canonical(c)
    assert abs(cp.pplus[1] - cf.vplus) <= 1e-13
    assert abs(cp.p1[1] - complex(cf.v1, cf.tv1)) <= 1e-13
    assert abs(cp.p2[1] - complex(cf.v2, cf.tv2)) <= 1e-13


def test_component_evaluation_agrees_with_ring_horner():
    rng = np.random.default_rng(71)
    for _ in range(20):
        poly = PentaPolynomial(tuple(rand(rng) for _ in range(4)))
        cp = decompose(poly)
        for _ in range(5):
            u = rand(rng, -1.5, 1.5)
            a = poly.evaluate(u)
            b = cp.evaluate(u)
            assert dev(a, b) <= 1e-12 * max(1.0, abs(a))


def test_component_roots_u2_minus_1():
    rs = component_roots(decompose(u2_minus_1()))
    for roots in (rs.vplus_roots, rs.plane1_roots, rs.plane2_roots):
        assert abs(roots[0] + 1) <= 1e-12 and abs(roots[1] - 1) <= 1e-12


def test_component_roots_linear_in_h1():
    # P(u) = u - h1: each component root is the canonical component of h1
    poly = PentaPolynomial((-1.0 * H1,))
    rs = component_roots(decompose(poly))
    p, q = CONSTANTS.p, CONSTANTS.q
    assert abs(rs.vplus_roots[0] - 1) <= 1e-13
    assert abs(rs.plane1_roots[0] - complex(p, q)) <= 1e-13
    assert abs(rs.plane2_roots[0] - complex(2 * p * p - 1, 2 * p * q)) <= 1e-13


def test_component_roots_cubic_with_known_roots():
    # (u-1)(u-2)(u-3) = u^3 - 6u^2 + 11u - 6 with scalar coefficients
    poly = PentaPolynomial.from_scalar_roots([1.0, 2.0, 3.0])
    assert dev(poly.coeffs[0], scalar(-6.0)) <= 1e-12
    rs = component_roots(decompose(poly))
    for roots in (rs.vplus_roots, rs.plane1_roots, rs.plane2_roots):
        got = sorted(r.real for r in roots)
        assert max(abs(g - w) for g, w in zip(got, (1.0, 2.0, 3.0))) <= 1e-8
        assert max(abs(r.imag) for r in roots) <= 1e-8


def test_assemble_roots_of_u2_minus_1():
    rs = component_roots(decompose(u2_minus_1()))
    # all-plus pairing gives the scalar roots +-1
    roots = assemble_roots(rs, [(1, 1, 1), (0, 0, 0)])
    assert dev(roots[0], ONE) <= 1e-12
    assert dev(roots[1], -1.0 * ONE) <= 1e-12
    # mixed pairing: e+ + e1 - e2 carries the golden-ratio coefficients
    roots = assemble_roots(rs, [(1, 1, 0), (0, 0, 1)])
    want = PentaComplex(0.2, (SQRT5 + 1) / 5, -(SQRT5 - 1) / 5,
                        -(SQRT5 - 1) / 5, (SQRT5 + 1) / 5)
    assert dev(roots[0], want) <= 1e-12


def test_assemble_roots_validates_pairing():
    rs = component_roots(decompose(u2_minus_1()))
    with pytest.raises(InvalidPairing):
        assemble_roots(rs, [(0, 0, 0), (0, 1, 1)])  # line index reused
    with pytest.raises(InvalidPairing):
        assemble_roots(rs, [(0, 0, 0)])  # wrong length
    # complex line roots cannot make a real linear factor
    plus_one = PentaPolynomial((ZERO, scalar(1.0)))  # u^2 + 1
    rs = component_roots(decompose(plus_one))
    with pytest.raises(InvalidPairing):
        assemble_roots(rs, [(0, 0, 0), (1, 1, 1)])


def test_factor_u2_minus_1_default_pairing():
    factors = factor(u2_minus_1())
    assert all(isinstance(f, LinearFactor) for f in factors)
    roots = sorted(f.root.x0 for f in factors)
    assert dev(factors[0].root, -1.0 * ONE) <= 1e-10 or \
        dev(factors[0].root, ONE) <= 1e-10
    got = sorted((round(f.root.x0, 6) for f in factors))
    assert got == [-1.0, 1.0]
    rebuilt = expand_factors(factors)
    for a, b in zip(u2_minus_1().coeffs, rebuilt.coeffs):
        assert dev(a, b) <= 1e-10


def test_factor_u2_plus_1_is_one_quadratic():
    poly = PentaPolynomial((ZERO, scalar(1.0)))
    factors = factor(poly)
    assert len(factors) == 1 and isinstance(factors[0], QuadraticFactor)
    assert dev(factors[0].b, ZERO) <= 1e-10
    assert dev(factors[0].c, ONE) <= 1e-10
    rebuilt = expand_factors(factors)
    for a, b in zip(poly.coeffs, rebuilt.coeffs):
        assert dev(a, b) <= 1e-10


def test_factor_random_polynomials_reconstruct():
    rng = np.random.default_rng(72)
    for degree in range(1, 7):
        for _ in range(3):
            poly = PentaPolynomial(tuple(rand(rng) for _ in range(degree)))
            factors = factor(poly)
            rebuilt = expand_factors(factors)
            scale = 1.0 + max(abs(a) for a in poly.coeffs)
            for a, b in zip(poly.coeffs, rebuilt.coeffs):
                assert dev(a, b) <= 1e-8 * scale
            norm = 1.0 + math.sqrt(sum(abs(a) ** 2 for a in poly.coeffs))
            for f in factors:
                if isinstance(f, LinearFactor):
                    assert abs(poly.evaluate(f.root)) <= 1e-8 * norm


def test_conjugate_pairing_of_line_roots():
    rng = np.random.default_rng(73)
    for _ in range(20):
        # real scalar coefficients force conjugate-symmetric line roots
        poly = PentaPolynomial(tuple(scalar(x) for x in rng.uniform(-2, 2, 5)))
        rs = component_roots(decompose(poly))
        pending = [r for r in rs.vplus_roots if abs(r.imag) > 1e-10]
        while pending:
            r = pending.pop()
            partner = min(pending, key=lambda s: abs(s - r.conjugate()))
            assert abs(partner - r.conjugate()) <= 1e-10
            pending.remove(partner)


def test_count_factorizations():
    assert count_factorizations(u2_minus_1()) == 4
    assert count_factorizations(PentaPolynomial((scalar(-2.0),))) == 1
    cubic = PentaPolynomial.from_scalar_roots([1.0, 2.0, 3.0])
    assert count_factorizations(cubic) == 36
    with pytest.raises(Degenerate):
        count_factorizations(PentaPolynomial.from_scalar_roots([1.0, 1.0]))
    with pytest.raises(Degenerate):
        count_factorizations(PentaPolynomial((ZERO, scalar(1.0))))  # u^2 + 1


def test_sign_pattern_square_identity():
    for s0 in (1, -1):
        for s1 in (1, -1):
            for s2 in (1, -1):
                r = s0 * E_PLUS + s1 * E1 + s2 * E2
                assert dev(multiply(r, r), ONE) <= 1e-15


def test_polynomial_serialization():
    p = u2_minus_1()
    assert PentaPolynomial.from_dict(p.to_dict()) == p
