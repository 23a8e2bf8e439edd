import math

import numpy as np
import pytest

from pentacomplex import (ONE, ZERO, NonInvertibleOnPath, OnBoundary, Path,
                          PentaComplex, PoleOnPath, exp, integrate, multiply,
                          plane_circle, project, project_point,
                          residue_formula, sin, winding)
from pentacomplex.canonical import E1, E1_TILDE, E2, E2_TILDE, E_PLUS
from pentacomplex.contour import PlaneProjection

TWO_PI = 2 * math.pi


def dev(u, v):
    return max(abs(a - b) for a, b in zip(u, v))


def scalar(x):
    return PentaComplex.scalar(x)


def test_path_validation():
    with pytest.raises(ValueError):
        Path((ONE,), closed=False)
    with pytest.raises(ValueError):
        Path((ONE, ONE), closed=False)
    with pytest.raises(ValueError):
        # closed wrap would create a zero-length segment
        Path((ONE, 2.0 * ONE, ONE), closed=True)
    p = Path((ZERO, ONE), closed=False)
    assert len(p.segments()) == 1
    p = Path((ZERO, ONE, ONE + E1), closed=True)
    assert len(p.segments()) == 3


def test_path_serialization_roundtrip():
    p = Path((ZERO, ONE, 2.0 * ONE + E1), closed=True)
    assert Path.from_dict(p.to_dict()) == p


def test_project_constant_and_circle():
    u0 = PentaComplex(0.5, -0.2, 0.1, 0.3, -0.4)
    loop = plane_circle(u0, 1, 1.0, 0.5, 0.5, vertices=64)
    proj1 = project(loop, 1)
    proj2 = project(loop, 2)
    cx, cy = project_point(u0, 1)
    # plane-1 shadow: circle of radius sqrt(2/5) around the projected centre
    radii = [math.hypot(x - cx, y - cy) for x, y in proj1.points]
    want = math.sqrt(2 / 5)
    assert max(abs(r - want) for r in radii) <= 1e-12
    # plane-2 shadow: a single repeated point
    xs = {round(x, 12) for x, _ in proj2.points}
    ys = {round(y, 12) for _, y in proj2.points}
    assert len(xs) == 1 and len(ys) == 1


def test_projection_is_linear():
    rng = np.random.default_rng(60)
    for _ in range(20):
        u = PentaComplex(*rng.uniform(-2, 2, 5))
        x1, y1 = project_point(u, 1)
        x2, y2 = project_point(3.0 * u, 1)
        assert abs(x2 - 3 * x1) <= 1e-13 and abs(y2 - 3 * y1) <= 1e-13


def square_projection(closed=True):
    pts = ((1.0, 1.0), (-1.0, 1.0), (-1.0, -1.0), (1.0, -1.0))
    return PlaneProjection(points=pts, plane=1, closed=closed)


def test_winding_square():
    assert winding((0.0, 0.0), square_projection()) == 1
    assert winding((3.0, 0.0), square_projection()) == 0
    assert winding((0.0, 0.0), square_projection()) == 1
    with pytest.raises(ValueError):
        winding((0.0, 0.0), square_projection(closed=False))
    with pytest.raises(OnBoundary):
        winding((1.0, 0.0), square_projection())


def test_winding_double_loop():
    pts = []
    for i in range(128):
        t = 2 * TWO_PI * i / 128  # two full turns
        pts.append((math.cos(t), math.sin(t)))
    poly = PlaneProjection(points=tuple(pts), plane=1, closed=True)
    assert winding((0.0, 0.0), poly) == 2
    reversed_poly = PlaneProjection(points=tuple(reversed(pts)), plane=1, closed=True)
    assert winding((0.0, 0.0), reversed_poly) == -2


def test_integrate_constant():
    loop = plane_circle(ZERO, 1, 1.0, 0.5, 0.5, vertices=64)
    val = integrate(lambda u: ONE, loop, 8)
    assert abs(val) <= 1e-12
    open_path = Path((ZERO, ONE, ONE + E1 + E2_TILDE), closed=False)
    val = integrate(lambda u: ONE, open_path, 16)
    want = (ONE + E1 + E2_TILDE) - ZERO
    assert dev(val, want) <= 1e-14


def test_integrate_polynomial_closed_loop_vanishes():
    loop = plane_circle(PentaComplex(0.2, 0.1, -0.3, 0.4, 0.0), 2, 1.0, 0.6, 0.6,
                        vertices=256)
    val = integrate(lambda u: u, loop, 16)
    assert abs(val) <= 1e-8
    val = integrate(lambda u: multiply(u, u), loop, 16)
    assert abs(val) <= 1e-7


def test_path_independence_for_entire_functions():
    a = ZERO
    b = ONE + 0.5 * E1_TILDE - 0.25 * E2
    mid1 = 0.3 * ONE + 0.8 * E1
    mid2 = 0.9 * ONE - 0.6 * E2_TILDE + 0.2 * E_PLUS
    path1 = Path((a, mid1, b), closed=False)
    path2 = Path((a, mid2, b), closed=False)
    for f in (exp, sin, lambda u: multiply(u, u)):
        v1 = integrate(f, path1, 4096)
        v2 = integrate(f, path2, 4096)
        assert dev(v1, v2) <= 1e-7


def test_residue_formula_plane1_constant():
    u0 = PentaComplex(0.3, -0.1, 0.2, 0.05, -0.15)
    loop = plane_circle(u0, 1, 1.0, 0.8, 0.7)
    lhs, rhs = residue_formula(lambda u: ONE, loop, u0, samples=4096)
    want = TWO_PI * E1_TILDE
    assert dev(rhs, want) <= 1e-12
    assert dev(lhs, rhs) <= 1e-6


def test_residue_formula_far_pole_vanishes():
    u0 = PentaComplex(0.3, -0.1, 0.2, 0.05, -0.15)
    loop = plane_circle(u0, 1, 1.0, 0.8, 0.7)
    far = u0 + scalar(5.0)
    lhs, rhs = residue_formula(lambda u: ONE, loop, far, samples=4096)
    assert abs(rhs) == 0.0
    assert abs(lhs) <= 1e-6


def test_residue_formula_plane2_exp():
    u0 = PentaComplex(0.1, 0.05, -0.2, 0.15, 0.0)
    loop = plane_circle(u0, 2, 1.0, 0.8, 0.7)
    lhs, rhs = residue_formula(exp, loop, u0, samples=4096)
    want = TWO_PI * multiply(exp(u0), E2_TILDE)
    assert dev(rhs, want) <= 1e-12
    assert dev(lhs, rhs) <= 1e-5


def test_residue_quadrature_converges_second_order():
    u0 = PentaComplex(0.3, -0.1, 0.2, 0.05, -0.15)
    loop = plane_circle(u0, 1, 1.0, 0.8, 0.7, vertices=64)
    errors = []
    for sps in (4, 8, 16, 32):
        lhs, rhs = residue_formula(exp, loop, u0, samples=sps * 64)
        errors.append(dev(lhs, rhs))
    for e0, e1 in zip(errors, errors[1:]):
        if e0 > 1e-9:
            assert e0 / e1 >= 3.0, errors


def test_residue_pole_on_path():
    u0 = PentaComplex(0.3, -0.1, 0.2, 0.05, -0.15)
    loop = plane_circle(u0, 1, 1.0, 0.8, 0.7)
    # a pole whose plane-1 projection lies exactly on the projected circle
    on_curve = u0 + 1.0 * E1
    with pytest.raises(PoleOnPath):
        residue_formula(lambda u: ONE, loop, on_curve, samples=256)


def test_residue_non_invertible_on_path():
    u0 = PentaComplex(0.3, -0.1, 0.2, 0.05, -0.15)
    # zero line offset leaves u - u0 with vplus = 0 along the whole loop
    loop = plane_circle(u0, 1, 1.0, line_offset=0.0, other_offset=0.7)
    with pytest.raises(NonInvertibleOnPath):
        residue_formula(lambda u: ONE, loop, u0, samples=256)


def test_residue_requires_closed_path():
    with pytest.raises(ValueError):
        residue_formula(lambda u: ONE, Path((ZERO, ONE), closed=False), ZERO)


def test_plane_circle_validation():
    with pytest.raises(ValueError):
        plane_circle(ZERO, 3, 1.0)
    with pytest.raises(ValueError):
        plane_circle(ZERO, 1, -1.0)
    with pytest.raises(ValueError):
        plane_circle(ZERO, 1, 1.0, vertices=2)
