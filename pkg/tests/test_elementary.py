import math

import numpy as np
import pytest

from pentacomplex import (H1, ONE, ZERO, CanonicalForm, FormDomain, LogDomain,
                          NonInvertible, Overflow, PentaComplex, PowDomain,
                          cos, cosh, exp, exp_basis, exponential_form,
                          from_canonical, inverse, log,
                          modulus_amplitude_relation, multiply, pow_real, sin,
                          sinh, to_canonical, to_matrix, trigonometric_form)
from pentacomplex.canonical import E_PLUS
from pentacomplex.selftest import _matrix_exp


def rand(rng, lo=-3.0, hi=3.0):
    return PentaComplex(*rng.uniform(lo, hi, 5))


def dev(u, v):
    return max(abs(a - b) for a, b in zip(u, v))


def log_domain_sample(rng, n):
    out = []
    while len(out) < n:
        u = rand(rng)
        c = to_canonical(u)
        if (c.vplus > 0.05 and math.hypot(c.v1, c.tv1) > 0.05
                and math.hypot(c.v2, c.tv2) > 0.05):
            out.append(u)
    return out


def test_exp_zero_and_basis_direction():
    assert dev(exp(ZERO), ONE) <= 1e-15
    for y in (0.6, -1.1):
        assert dev(exp(y * H1), exp_basis(1, y)) <= 1e-13


def test_exp_against_truncated_ring_series():
    rng = np.random.default_rng(40)
    for _ in range(100):
        u = rand(rng, -0.8, 0.8)
        series = ONE
        term = ONE
        for n in range(1, 41):
            term = multiply(term, u) * (1.0 / n)
            series = series + term
        assert dev(exp(u), series) <= 1e-11 * max(1.0, abs(series))


def test_exp_is_a_homomorphism():
    rng = np.random.default_rng(41)
    for _ in range(200):
        u, v = rand(rng, -1.5, 1.5), rand(rng, -1.5, 1.5)
        lhs = exp(u + v)
        rhs = multiply(exp(u), exp(v))
        assert dev(lhs, rhs) <= 1e-11 * max(1.0, abs(lhs))


def test_exp_matches_matrix_exponential():
    rng = np.random.default_rng(42)
    for _ in range(100):
        u = rand(rng, -2.0, 2.0)
        got = to_matrix(exp(u))
        want = _matrix_exp(to_matrix(u))
        assert np.abs(got - want).max() <= 1e-9 * max(1.0, np.abs(want).max())


def test_exp_overflow():
    with pytest.raises(Overflow):
        exp(PentaComplex.scalar(1000.0))


def test_log_unit_and_roundtrips():
    assert dev(log(ONE), ZERO) <= 1e-15
    rng = np.random.default_rng(43)
    for u in log_domain_sample(rng, 300):
        assert dev(exp(log(u)), u) <= 1e-10 * max(1.0, abs(u))
    for _ in range(300):
        c = CanonicalForm(rng.uniform(-2, 2), rng.uniform(-2, 2),
                          rng.uniform(0.05, 2 * math.pi - 0.05),
                          rng.uniform(-2, 2),
                          rng.uniform(0.05, 2 * math.pi - 0.05))
        u = from_canonical(c)
        assert dev(log(exp(u)), u) <= 1e-10 * max(1.0, abs(u))


def test_log_domain_errors():
    with pytest.raises(LogDomain):
        log(E_PLUS)  # plane radii vanish
    with pytest.raises(LogDomain):
        log(PentaComplex.scalar(-1.0))  # vplus < 0
    with pytest.raises(LogDomain):
        log(ZERO)


def test_pow_integer():
    rng = np.random.default_rng(44)
    for _ in range(200):
        u = rand(rng)
        assert dev(pow_real(u, 2), multiply(u, u)) <= 1e-12 * max(1.0, abs(u) ** 2)
    assert dev(pow_real(H1, 5), ONE) <= 1e-14
    u = rand(rng)
    assert dev(pow_real(u, 0), ONE) <= 1e-15
    # negative integer powers are iterated inverses
    done = 0
    while done < 50:
        u = rand(rng)
        try:
            got = pow_real(u, -1)
        except NonInvertible:
            continue
        assert dev(got, inverse(u)) <= 1e-10 * max(1.0, abs(got))
        done += 1
    with pytest.raises(NonInvertible):
        pow_real(E_PLUS, -2)


def test_pow_non_integer():
    rng = np.random.default_rng(45)
    done = 0
    while done < 100:
        u = rand(rng, 0.1, 2.0)
        c = to_canonical(u)
        if c.vplus <= 0.05:
            continue
        half = pow_real(u, 0.5)
        assert dev(multiply(half, half), u) <= 1e-10 * max(1.0, abs(u))
        done += 1
    with pytest.raises(PowDomain):
        pow_real(PentaComplex.scalar(-1.0), 0.5)
    with pytest.raises(PowDomain):
        pow_real(E_PLUS, 1.5)


def test_trig_zero_values():
    assert dev(cos(ZERO), ONE) <= 1e-15
    assert dev(sin(ZERO), ZERO) <= 1e-15
    assert dev(cosh(ZERO), ONE) <= 1e-15
    assert dev(sinh(ZERO), ZERO) <= 1e-15


def test_pythagorean_identities():
    rng = np.random.default_rng(46)
    for _ in range(200):
        u = rand(rng, -1.0, 1.0)
        lhs = multiply(sin(u), sin(u)) + multiply(cos(u), cos(u))
        assert dev(lhs, ONE) <= 1e-11
        lhs = multiply(cosh(u), cosh(u)) - multiply(sinh(u), sinh(u))
        assert dev(lhs, ONE) <= 1e-11


def test_exponential_form_of_unit():
    ef = exponential_form(ONE)
    assert abs(ef.amplitude - 1.0) <= 1e-15
    assert abs(ef.log_tan_theta) <= 1e-15  # tan(thetaplus) = sqrt(2) for u = 1
    assert abs(ef.log_tan_psi) <= 1e-15
    assert ef.phi1 == 0.0 and ef.phi2 == 0.0
    assert dev(ef.exponent(), ZERO) <= 1e-15
    assert dev(ef.reconstruct(), ONE) <= 1e-14


def test_exponential_form_reconstructs():
    rng = np.random.default_rng(47)
    for u in log_domain_sample(rng, 200):
        ef = exponential_form(u)
        assert dev(ef.reconstruct(), u) <= 1e-10 * max(1.0, abs(u))


def test_exponential_form_domain():
    with pytest.raises(FormDomain):
        exponential_form(PentaComplex.scalar(-1.0))
    with pytest.raises(FormDomain):
        exponential_form(E_PLUS)


def test_trigonometric_form_reconstructs():
    assert dev(trigonometric_form(ONE), ONE) <= 1e-14
    rng = np.random.default_rng(48)
    done = 0
    while done < 200:
        u = rand(rng)
        c = to_canonical(u)
        if (math.hypot(c.v1, c.tv1) < 0.05 or math.hypot(c.v2, c.tv2) < 0.05
                or abs(c.vplus) < 0.05):
            continue
        assert dev(trigonometric_form(u), u) <= 1e-10 * max(1.0, abs(u))
        done += 1
    with pytest.raises(FormDomain):
        trigonometric_form(E_PLUS)


def test_trigonometric_form_accepts_negative_line_part():
    # thetaplus in (pi/2, pi) is inside the trigonometric-form domain
    u = from_canonical(CanonicalForm(-1.5, 1.0, 0.5, -0.7, 0.3))
    assert dev(trigonometric_form(u), u) <= 1e-12


def test_modulus_amplitude_relation():
    rng = np.random.default_rng(49)
    for u in log_domain_sample(rng, 200):
        d, rhs = modulus_amplitude_relation(u)
        assert abs(d - rhs) <= 1e-10 * max(1.0, d)
