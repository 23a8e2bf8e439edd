"""Canonical (idempotent) decomposition of the 5-complex ring.

The linear change of variables (vplus, v1, tv1, v2, tv2) splits the ring into
a real line and two independent complex planes: multiplication becomes a real
scaling times two plane rotations-with-scaling.  The transform constants are
the closed radicals p = (sqrt5 - 1)/4 and q = sqrt((5 + sqrt5)/8), which equal
cos(2*pi/5) and sin(2*pi/5); the radicals are used for construction and the
trigonometric identities are left to the tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebra import DIM, PentaComplex

SQRT5 = math.sqrt(5.0)

P = (SQRT5 - 1.0) / 4.0            # cos of the fifth-circle angle
Q = math.sqrt((5.0 + SQRT5) / 8.0)  # sin of the fifth-circle angle
P2 = 2.0 * P * P - 1.0             # cos of twice the angle
Q2 = 2.0 * P * Q                   # sin of twice the angle


@dataclass(frozen=True)
class TransformConstants:
    p: float
    q: float


CONSTANTS = TransformConstants(p=P, q=Q)


@dataclass(frozen=True)
class CanonicalForm:
    """Coordinates (vplus, v1, tv1, v2, tv2) of the line and the two planes.

    The remaining four formal coordinates are dependent (v3 = v2, tv3 = -tv2,
    v4 = v1, tv4 = -tv1) and are never stored.
    """

    vplus: float
    v1: float
    tv1: float
    v2: float
    tv2: float

    def to_dict(self) -> dict:
        return {"vplus": self.vplus, "v1": self.v1, "tv1": self.tv1,
                "v2": self.v2, "tv2": self.tv2}

    @classmethod
    def from_dict(cls, data: dict) -> "CanonicalForm":
        return cls(float(data["vplus"]), float(data["v1"]), float(data["tv1"]),
                   float(data["v2"]), float(data["tv2"]))


@dataclass(frozen=True)
class RotatedCoords:
    """Orthonormal coordinates (xiplus, xi1, eta1, xi2, eta2).

    Same directions as the canonical variables but with unit-length axes, so
    the Euclidean norm of u is preserved exactly.
    """

    xiplus: float
    xi1: float
    eta1: float
    xi2: float
    eta2: float


@dataclass(frozen=True)
class IrreducibleRep:
    """Block-diagonal form of the circulant matrix: 1x1 + 2x2 + 2x2."""

    vplus: float
    v1_block: np.ndarray
    v2_block: np.ndarray


def _to_canon_comps(c: tuple) -> tuple:
    """(x0..x4) -> (vplus, v1, tv1, v2, tv2) on raw tuples."""
    x0, x1, x2, x3, x4 = c
    s14 = x1 + x4
    d14 = x1 - x4
    s23 = x2 + x3
    d23 = x2 - x3
    return (
        x0 + s14 + s23,
        x0 + P * s14 + P2 * s23,
        Q * d14 + Q2 * d23,
        x0 + P2 * s14 + P * s23,
        Q2 * d14 - Q * d23,
    )


# canonical basis components: rows scale the (1, h1..h4) coefficients by 2/5
# (the line row carries an extra 1/2)
_E_PLUS = (0.2, 0.2, 0.2, 0.2, 0.2)
_E1 = (0.4, 0.4 * P, 0.4 * P2, 0.4 * P2, 0.4 * P)
_TE1 = (0.0, 0.4 * Q, 0.4 * Q2, -0.4 * Q2, -0.4 * Q)
_E2 = (0.4, 0.4 * P2, 0.4 * P, 0.4 * P, 0.4 * P2)
_TE2 = (0.0, 0.4 * Q2, -0.4 * Q, 0.4 * Q, -0.4 * Q2)


def _from_canon_comps(w: tuple) -> tuple:
    """(vplus, v1, tv1, v2, tv2) -> (x0..x4) on raw tuples."""
    vp, v1, tv1, v2, tv2 = w
    return tuple(
        _E_PLUS[i] * vp + _E1[i] * v1 + _TE1[i] * tv1 + _E2[i] * v2 + _TE2[i] * tv2
        for i in range(DIM)
    )


E_PLUS = PentaComplex(*_E_PLUS)
E1 = PentaComplex(*_E1)
E1_TILDE = PentaComplex(*_TE1)
E2 = PentaComplex(*_E2)
E2_TILDE = PentaComplex(*_TE2)


def canonical_basis() -> tuple[PentaComplex, PentaComplex, PentaComplex,
                               PentaComplex, PentaComplex]:
    """The idempotent basis (e+, e1, ~e1, e2, ~e2).

    e+ and the e_k are idempotent and mutually annihilating, the ~e_k square
    to -e_k within their plane, and e+ + e1 + e2 is the ring unit.
    """
    return E_PLUS, E1, E1_TILDE, E2, E2_TILDE


def to_canonical(u: PentaComplex) -> CanonicalForm:
    """Project u onto the real line and the two planes."""
    return CanonicalForm(*_to_canon_comps(u.components))


def from_canonical(c: CanonicalForm) -> PentaComplex:
    """Assemble e+*vplus + e1*v1 + ~e1*tv1 + e2*v2 + ~e2*tv2."""
    return PentaComplex(*_from_canon_comps((c.vplus, c.v1, c.tv1, c.v2, c.tv2)))


def canonical_multiply(c: CanonicalForm, d: CanonicalForm) -> CanonicalForm:
    """Componentwise product: real scaling plus complex product in each plane."""
    return CanonicalForm(
        c.vplus * d.vplus,
        c.v1 * d.v1 - c.tv1 * d.tv1,
        c.v1 * d.tv1 + c.tv1 * d.v1,
        c.v2 * d.v2 - c.tv2 * d.tv2,
        c.v2 * d.tv2 + c.tv2 * d.v2,
    )


_SQ25 = math.sqrt(2.0 / 5.0)
_ROT = np.array([
    [_SQ25 / math.sqrt(2.0)] * DIM,
    [_SQ25 * 1.0, _SQ25 * P, _SQ25 * P2, _SQ25 * P2, _SQ25 * P],
    [0.0, _SQ25 * Q, _SQ25 * Q2, -_SQ25 * Q2, -_SQ25 * Q],
    [_SQ25 * 1.0, _SQ25 * P2, _SQ25 * P, _SQ25 * P, _SQ25 * P2],
    [0.0, _SQ25 * Q2, -_SQ25 * Q, _SQ25 * Q, -_SQ25 * Q2],
])


def rotation_matrix() -> np.ndarray:
    """Orthonormal 5x5 change of basis onto the rotated axes (rows are the axes)."""
    return _ROT.copy()


def rotated_coords(u: PentaComplex) -> RotatedCoords:
    """Coordinates of u in the rotated orthonormal frame.

    Related to the canonical variables by vplus = sqrt(5)*xiplus and
    v_k = sqrt(5/2)*xi_k, tv_k = sqrt(5/2)*eta_k.
    """
    xi = _ROT @ np.asarray(u.components)
    return RotatedCoords(*xi)


def irreducible_rep(u: PentaComplex) -> IrreducibleRep:
    """Block-diagonal matrix form: scalar vplus plus one 2x2 block per plane.

    Equals T @ to_matrix(u) @ T^-1 with T the rotated-frame matrix; each plane
    block is [[v_k, tv_k], [-tv_k, v_k]].
    """
    vp, v1, tv1, v2, tv2 = _to_canon_comps(u.components)
    b1 = np.array([[v1, tv1], [-tv1, v1]])
    b2 = np.array([[v2, tv2], [-tv2, v2]])
    return IrreducibleRep(vplus=vp, v1_block=b1, v2_block=b2)
