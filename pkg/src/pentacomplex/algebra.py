"""Ring arithmetic for commutative 5-dimensional complex numbers.

An element is u = x0 + h1*x1 + h2*x2 + h3*x3 + h4*x4 with real components
and cyclic basis rule h_j * h_k = h_{(j+k) mod 5} (h0 = 1).  Multiplication
is the convolution of the component vectors modulo 5, so every element is
also a 5x5 circulant matrix acting on the components.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

import numpy as np

from .errors import NonInvertible, NotCirculant

DIM = 5

# from_matrix accepts matrices this far (absolute) from exactly circulant
TAU_CIRC = 1e-12
# inverse() declares a divisor of zero below this relative size
TAU_INV_REL = 1e-13


class PentaComplex:
    """Immutable 5-component hypercomplex number.

    Components are validated to be finite at construction; NaN/infinity never
    enter the ring.  All arithmetic returns new instances.
    """

    __slots__ = ("x0", "x1", "x2", "x3", "x4")

    def __init__(self, x0=0.0, x1=0.0, x2=0.0, x3=0.0, x4=0.0):
        for name, val in zip(self.__slots__, (x0, x1, x2, x3, x4)):
            val = float(val)
            if not math.isfinite(val):
                raise ValueError(f"component {name} is not finite: {val!r}")
            object.__setattr__(self, name, val)

    def __setattr__(self, name, value):
        raise AttributeError("PentaComplex is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_components(cls, comps: Iterable[float]) -> "PentaComplex":
        comps = tuple(comps)
        if len(comps) != DIM:
            raise ValueError(f"expected {DIM} components, got {len(comps)}")
        return cls(*comps)

    @classmethod
    def basis(cls, k: int) -> "PentaComplex":
        """Basis element h_k (h_0 is the ring unit)."""
        if not 0 <= k < DIM:
            raise ValueError(f"basis index must be 0..4, got {k}")
        comps = [0.0] * DIM
        comps[k] = 1.0
        return cls(*comps)

    @classmethod
    def scalar(cls, value: float) -> "PentaComplex":
        return cls(value, 0.0, 0.0, 0.0, 0.0)

    # -- accessors ---------------------------------------------------------

    @property
    def components(self) -> tuple[float, float, float, float, float]:
        return (self.x0, self.x1, self.x2, self.x3, self.x4)

    def __getitem__(self, k: int) -> float:
        return self.components[k]

    def __iter__(self):
        return iter(self.components)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, PentaComplex):
            return PentaComplex(self.x0 + other.x0, self.x1 + other.x1,
                                self.x2 + other.x2, self.x3 + other.x3,
                                self.x4 + other.x4)
        if isinstance(other, (int, float)):
            return PentaComplex(self.x0 + other, self.x1, self.x2, self.x3, self.x4)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, PentaComplex):
            return PentaComplex(self.x0 - other.x0, self.x1 - other.x1,
                                self.x2 - other.x2, self.x3 - other.x3,
                                self.x4 - other.x4)
        if isinstance(other, (int, float)):
            return PentaComplex(self.x0 - other, self.x1, self.x2, self.x3, self.x4)
        return NotImplemented

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        return PentaComplex(-self.x0, -self.x1, -self.x2, -self.x3, -self.x4)

    def __mul__(self, other):
        if isinstance(other, PentaComplex):
            return multiply(self, other)
        if isinstance(other, (int, float)):
            return PentaComplex(self.x0 * other, self.x1 * other, self.x2 * other,
                                self.x3 * other, self.x4 * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, float)):
            return self * (1.0 / other)
        if isinstance(other, PentaComplex):
            return multiply(self, inverse(other))
        return NotImplemented

    def __abs__(self) -> float:
        return math.sqrt(self.x0 * self.x0 + self.x1 * self.x1 + self.x2 * self.x2
                         + self.x3 * self.x3 + self.x4 * self.x4)

    def __eq__(self, other):
        if isinstance(other, PentaComplex):
            return self.components == other.components
        return NotImplemented

    def __hash__(self):
        return hash(self.components)

    # -- presentation ------------------------------------------------------

    def __repr__(self):
        return (f"PentaComplex({self.x0!r}, {self.x1!r}, {self.x2!r}, "
                f"{self.x3!r}, {self.x4!r})")

    def __str__(self):
        parts = [format(self.x0, ".17g")]
        for k, x in enumerate(self.components[1:], start=1):
            parts.append(f"{format(x, '.17g')} h{k}")
        return " + ".join(parts)

    # -- serialization -----------------------------------------------------

    def to_list(self) -> list[float]:
        return list(self.components)

    @classmethod
    def from_list(cls, data: Sequence[float]) -> "PentaComplex":
        return cls.from_components(data)


ZERO = PentaComplex()
ONE = PentaComplex(1.0)
H1 = PentaComplex.basis(1)
H2 = PentaComplex.basis(2)
H3 = PentaComplex.basis(3)
H4 = PentaComplex.basis(4)


def basis_product(j: int, k: int) -> int:
    """Index of h_j * h_k: the cyclic rule h_j h_k = h_{(j+k) mod 5}."""
    if not (0 <= j < DIM and 0 <= k < DIM):
        raise ValueError(f"basis indices must be 0..4, got ({j}, {k})")
    return (j + k) % DIM


def add(u: PentaComplex, v: PentaComplex) -> PentaComplex:
    """Componentwise sum."""
    return u + v


def multiply(u: PentaComplex, v: PentaComplex) -> PentaComplex:
    """Ring product: convolution of the component vectors modulo 5.

    Terms are grouped into swap-symmetric pairs so that multiply(u, v) and
    multiply(v, u) are bit-identical, not merely equal to rounding.
    """
    return PentaComplex(*_mul_comps(u.components, v.components))


def _mul_comps(a: tuple, b: tuple) -> tuple:
    """Convolution product on raw component tuples (hot-path helper)."""
    a0, a1, a2, a3, a4 = a
    b0, b1, b2, b3, b4 = b
    return (
        a0 * b0 + (a1 * b4 + a4 * b1) + (a2 * b3 + a3 * b2),
        (a0 * b1 + a1 * b0) + (a2 * b4 + a4 * b2) + a3 * b3,
        (a0 * b2 + a2 * b0) + a1 * b1 + (a3 * b4 + a4 * b3),
        (a0 * b3 + a3 * b0) + (a1 * b2 + a2 * b1) + a4 * b4,
        (a0 * b4 + a4 * b0) + (a1 * b3 + a3 * b1) + a2 * b2,
    )


def to_matrix(u: PentaComplex) -> np.ndarray:
    """Circulant 5x5 matrix of u: entry (r, c) is x_{(c-r) mod 5}.

    Matrix multiplication of two such matrices represents the ring product.
    """
    c = u.components
    return np.array([[c[(col - row) % DIM] for col in range(DIM)] for row in range(DIM)])


def from_matrix(m: np.ndarray, tol: float = TAU_CIRC) -> PentaComplex:
    """Read a circulant matrix back into its first row.

    Raises NotCirculant if any row deviates from the cyclically shifted first
    row by more than `tol` (absolute).
    """
    m = np.asarray(m, dtype=float)
    if m.shape != (DIM, DIM):
        raise ValueError(f"expected a 5x5 matrix, got shape {m.shape}")
    first = m[0]
    for row in range(1, DIM):
        expected = np.array([first[(col - row) % DIM] for col in range(DIM)])
        dev = np.abs(m[row] - expected).max()
        if dev > tol:
            raise NotCirculant(f"row {row} deviates from shifted first row by {dev:.3e}")
    return PentaComplex.from_components(first)


def inverse(u: PentaComplex, tol: float | None = None) -> PentaComplex:
    """Multiplicative inverse via the canonical decomposition.

    The inverse exists iff no canonical part is annihilated: the line
    component vplus and both plane radii must be nonzero.  Below `tol`
    (default 1e-13 * |u|) the element is declared a divisor of zero.
    """
    from . import canonical  # deferred: canonical imports PentaComplex from here

    if tol is None:
        tol = TAU_INV_REL * abs(u)
    vplus, v1, tv1, v2, tv2 = canonical._to_canon_comps(u.components)
    r1sq = v1 * v1 + tv1 * tv1
    r2sq = v2 * v2 + tv2 * tv2
    if abs(vplus) <= tol:
        raise NonInvertible(f"vplus = {vplus:.3e} vanishes; divisor of zero")
    if r1sq <= tol * tol:
        raise NonInvertible("plane-1 radius vanishes; divisor of zero")
    if r2sq <= tol * tol:
        raise NonInvertible("plane-2 radius vanishes; divisor of zero")
    w = (1.0 / vplus, v1 / r1sq, -tv1 / r1sq, v2 / r2sq, -tv2 / r2sq)
    return PentaComplex(*canonical._from_canon_comps(w))
