"""Polar 5-dimensional cosexponential functions g_{5k}.

g_{5k}(y) collects every fifth term of the exponential series starting at
power k, so the five functions interleave exp and sum to e^y.  Three
independent evaluation routes are provided: the defining series, a closed
form summing exponentials around the unit circle's five fifth-roots, and a
closed form in the radicals a = (sqrt5-1)/2, b = -(5+sqrt5)/2.  The module
also expands powers of h1+h4 and h1-h4 into integer coefficient families,
both by recurrence and by radical closed forms evaluated exactly.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import PentaComplex
from .errors import DomainTooLarge

SQRT5 = math.sqrt(5.0)

#: roots of a^2 + a - 1 = 0 and b^2 + 5b + 5 = 0 used by the radical forms
RADICAL_A = (SQRT5 - 1.0) / 2.0
RADICAL_B = -(5.0 + SQRT5) / 2.0

# |y| guard for the series route (keeps term magnitudes well inside range)
SERIES_MAX_ABS_Y = 50.0
# series terms below this relative size stop the summation early
SERIES_CUTOFF = 1e-18


@dataclass(frozen=True)
class RadicalConstants:
    a: float
    b: float


RADICALS = RadicalConstants(a=RADICAL_A, b=RADICAL_B)


@dataclass(frozen=True)
class CosexpVector:
    """Values (g50(y), ..., g54(y)) at a common argument."""

    y: float
    g: tuple[float, float, float, float, float]


def g5_series(k: int, y: float, nterms: int = 60) -> float:
    """Partial sum of y^(k+5p)/(k+5p)! over p < nterms.

    Terms are built incrementally (no explicit factorials); summation stops
    early once a term drops below 1e-18 of the running total.
    """
    if not 0 <= k <= 4:
        raise ValueError(f"index must be 0..4, got {k}")
    if nterms < 1:
        raise ValueError(f"nterms must be >= 1, got {nterms}")
    if abs(y) > SERIES_MAX_ABS_Y:
        raise DomainTooLarge(f"|y| = {abs(y)} exceeds the series guard {SERIES_MAX_ABS_Y}")
    term = 1.0
    for n in range(1, k + 1):
        term *= y / n
    total = 0.0
    n = k
    for _ in range(nterms):
        total += term
        for _ in range(5):
            n += 1
            term *= y / n
        if abs(term) < SERIES_CUTOFF * max(1.0, abs(total)):
            break
    return total


def g5_closed(k: int, y: float) -> float:
    """Closed form: mean over the five fifth-circle directions of
    exp(y*cos(2*pi*l/5)) * cos(y*sin(2*pi*l/5) - 2*pi*k*l/5)."""
    if not 0 <= k <= 4:
        raise ValueError(f"index must be 0..4, got {k}")
    total = 0.0
    for l in range(5):
        ang = 2.0 * math.pi * l / 5.0
        total += math.exp(y * math.cos(ang)) * math.cos(y * math.sin(ang) - ang * k)
    return total / 5.0


# the radical closed forms are naturally stated at doubled argument; the
# sin/cos frequencies are sqrt(-b) and sqrt(5+b)
_SB = math.sqrt(-RADICAL_B)
_S5B = math.sqrt(5.0 + RADICAL_B)


def _g5_radical_doubled(k: int, y: float) -> float:
    """Value of g_{5k}(2y) from the a,b-radical expressions."""
    a = RADICAL_A
    e2 = math.exp(2.0 * y) / 5.0
    ea = math.exp(a * y) / 5.0
    em = math.exp(-(1.0 + a) * y) / 5.0
    c1 = math.cos(_SB * y)
    s1 = math.sin(_SB * y)
    c2 = math.cos(_S5B * y)
    s2 = math.sin(_S5B * y)
    half_m = (-1.0 + SQRT5) / 2.0
    half_p = (1.0 + SQRT5) / 2.0
    big = (5.0 + SQRT5) / (2.0 * _SB)
    small = math.sqrt(5.0 / -RADICAL_B)
    if k == 0:
        return e2 + 2.0 * ea * c1 + 2.0 * em * c2
    if k == 1:
        return e2 + ea * (half_m * c1 + big * s1) + em * (-half_p * c2 + small * s2)
    if k == 2:
        return e2 + ea * (-half_p * c1 + small * s1) + em * (half_m * c2 - big * s2)
    if k == 3:
        return e2 + ea * (-half_p * c1 - small * s1) + em * (half_m * c2 + big * s2)
    if k == 4:
        return e2 + ea * (half_m * c1 - big * s1) + em * (-half_p * c2 - small * s2)
    raise ValueError(f"index must be 0..4, got {k}")


def g5_closed_radical(k: int, y: float) -> float:
    """Radical closed form of g_{5k}(y).

    The underlying expressions give the value at a doubled argument, so y/2
    is substituted internally; callers always pass the natural argument.
    """
    return _g5_radical_doubled(k, y / 2.0)


def cosexp_values(y: float) -> CosexpVector:
    """All five cosexponential values at y (closed-form route)."""
    return CosexpVector(y=y, g=tuple(g5_closed(k, y) for k in range(5)))


def exp_basis(k: int, y: float) -> PentaComplex:
    """exp(h_k * y) for k = 1..4.

    Component h_{(k*m) mod 5} carries g_{5m}(y): the four expansions are the
    same five functions under the cyclic index permutation of h_k powers.
    """
    if not 1 <= k <= 4:
        raise ValueError(f"basis index must be 1..4, got {k}")
    comps = [0.0] * 5
    for m in range(5):
        comps[(k * m) % 5] = g5_closed(m, y)
    return PentaComplex(*comps)


def exp_h1_plus_h4(y: float) -> PentaComplex:
    """exp((h1 + h4) * y) in closed form.

    Three real exponentials with rates 2, a and -(1+a) distribute over the
    constant, h1+h4 and h2+h3 directions.
    """
    a = RADICAL_A
    e2 = math.exp(2.0 * y) / 5.0
    ea = math.exp(a * y) / 5.0
    em = math.exp(-(1.0 + a) * y) / 5.0
    c0 = e2 + 2.0 * ea + 2.0 * em
    c14 = e2 + a * ea - (a + 1.0) * em
    c23 = e2 - (a + 1.0) * ea + a * em
    return PentaComplex(c0, c14, c23, c23, c14)


def exp_h1_minus_h4(y: float) -> PentaComplex:
    """exp((h1 - h4) * y) in closed form.

    Purely oscillatory: cosines at frequencies sqrt(-b) and sqrt(5+b) on the
    symmetric directions, sines on the antisymmetric ones.
    """
    b = RADICAL_B
    c1 = math.cos(_SB * y)
    s1 = math.sin(_SB * y)
    c2 = math.cos(_S5B * y)
    s2 = math.sin(_S5B * y)
    sym0 = 0.2 + 0.4 * c1 + 0.4 * c2
    sym14 = 0.2 - (b + 3.0) / 5.0 * c1 + (b + 2.0) / 5.0 * c2
    sym23 = 0.2 + (b + 2.0) / 5.0 * c1 - (b + 3.0) / 5.0 * c2
    anti14 = _SB / 5.0 * s1 + s2 / math.sqrt(-5.0 * b)
    anti23 = -(2.0 * b + 5.0) / (5.0 * _SB) * s1 + (b + 2.0) / math.sqrt(-5.0 * b) * s2
    return PentaComplex(sym0, sym14 + anti14, sym23 + anti23,
                        sym23 - anti23, sym14 - anti14)


def cosexp_power(perm: int, y: float, l: int) -> PentaComplex:
    """l-th ring power of exp(h_perm * y).

    Powers only rescale the argument: the result is exp(h_perm * l * y), with
    l = 0 giving the ring unit.
    """
    if not 1 <= perm <= 4:
        raise ValueError(f"permutation index must be 1..4, got {perm}")
    if l < 0:
        raise ValueError(f"power must be >= 0, got {l}")
    return exp_basis(perm, l * y)


# ---------------------------------------------------------------------------
# integer coefficient families for powers of h1 +/- h4

class PowerKind(enum.Enum):
    A_PLUS = "powers of h1+h4"
    D_MINUS = "odd powers of h1-h4"
    F_MINUS = "even powers of h1-h4"


@dataclass(frozen=True)
class PowerCoefficients:
    """Coefficient sequences for one family, by recurrence and closed form.

    `recurrence` maps sequence name to values at subscripts 1..m;
    `closed_form` has None below the subscript where the closed form applies
    (A, B from 3; C from 4; D..H from 1).  Closed forms are evaluated exactly
    in the field of rationals extended by sqrt(5), so matching entries are
    equal as integers, not merely close.
    """

    kind: PowerKind
    m: int
    recurrence: dict[str, tuple[int, ...]]
    closed_form: dict[str, tuple[int | None, ...]]


class _Q5:
    """Exact r + s*sqrt(5) with rational r, s."""

    __slots__ = ("r", "s")

    def __init__(self, r, s=0):
        self.r = Fraction(r)
        self.s = Fraction(s)

    def __add__(self, o):
        o = o if isinstance(o, _Q5) else _Q5(o)
        return _Q5(self.r + o.r, self.s + o.s)

    __radd__ = __add__

    def __sub__(self, o):
        o = o if isinstance(o, _Q5) else _Q5(o)
        return _Q5(self.r - o.r, self.s - o.s)

    def __rsub__(self, o):
        return _Q5(o) - self

    def __mul__(self, o):
        o = o if isinstance(o, _Q5) else _Q5(o)
        return _Q5(self.r * o.r + 5 * self.s * o.s, self.r * o.s + self.s * o.r)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = o if isinstance(o, _Q5) else _Q5(o)
        den = o.r * o.r - 5 * o.s * o.s
        return self * _Q5(o.r / den, -o.s / den)

    def __neg__(self):
        return _Q5(-self.r, -self.s)

    def __pow__(self, n: int):
        out = _Q5(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def as_int(self) -> int:
        if self.s != 0 or self.r.denominator != 1:
            raise ArithmeticError(f"not an integer: {self.r} + {self.s}*sqrt5")
        return int(self.r)


_A5 = _Q5(Fraction(-1, 2), Fraction(1, 2))       # (sqrt5 - 1)/2
_B5 = _Q5(Fraction(-5, 2), Fraction(-1, 2))      # -(5 + sqrt5)/2


def _closed_abc(m: int) -> tuple[int | None, int | None, int | None]:
    a = _A5
    sgn = _Q5((-1) ** (m - 3))
    A = B = C = None
    if m >= 3:
        A = (_Q5(2) ** m / 5 + (2 - 3 * a) / 5 * a ** (m - 3)
             + sgn * (5 + 3 * a) / 5 * (1 + a) ** (m - 3)).as_int()
        B = (_Q5(2) ** m / 5 + (a - 1) / 5 * a ** (m - 3)
             - sgn * (a + 2) / 5 * (1 + a) ** (m - 3)).as_int()
    if m >= 4:
        sgn4 = _Q5((-1) ** (m - 4))
        C = (_Q5(2) ** m / 5 + (4 - 6 * a) / 5 * a ** (m - 4)
             + sgn4 * (10 + 6 * a) / 5 * (1 + a) ** (m - 4)).as_int()
    return A, B, C


def _closed_de(m: int) -> tuple[int, int]:
    b = _B5
    sgn = _Q5((-1) ** (m - 2))
    D = ((b + 1) * b ** (m - 1) + sgn * (b + 4) * (5 + b) ** (m - 1)).as_int()
    E = (-(b + 1) / (b + 2) * b ** (m - 1) + sgn / (b + 2) * (5 + b) ** (m - 1)).as_int()
    return D, E


def _closed_fgh(m: int) -> tuple[int, int, int]:
    b = _B5
    sgn = _Q5((-1) ** (m - 1))
    F = (-_Q5(1) / (5 * (b + 2)) * b ** m + sgn * (b + 1) / (5 * (b + 2)) * (5 + b) ** m).as_int()
    G = ((4 * b + 5) / (5 * (b + 2)) * b ** (m - 1) + sgn / (5 * (b + 2)) * (5 + b) ** m).as_int()
    H = (-(6 * b + 10) / (5 * (b + 2)) * b ** (m - 1)
         + _Q5((-1) ** m) * _Q5(2) / 5 * (5 + b) ** m).as_int()
    return F, G, H


def power_coeffs(kind: PowerKind, m: int) -> PowerCoefficients:
    """Coefficient families up to subscript m, by recurrence and closed form.

    A_PLUS: (h1+h4)^m = A_m (h1+h4) + B_m (h2+h3) + C_m.
    D_MINUS: (h1-h4)^(2m+1) = D_m (h1-h4) + E_m (h2-h3).
    F_MINUS: (h1-h4)^(2m) = F_m (h1+h4) + G_m (h2+h3) + H_m.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if kind is PowerKind.A_PLUS:
        A, B, C = [1], [0], [0]
        for _ in range(1, m):
            A.append(B[-1] + C[-1])
            B.append(A[-2] + B[-1])
            C.append(2 * A[-2])
        closed = [_closed_abc(mm) for mm in range(1, m + 1)]
        return PowerCoefficients(
            kind=kind, m=m,
            recurrence={"A": tuple(A), "B": tuple(B), "C": tuple(C)},
            closed_form={"A": tuple(c[0] for c in closed),
                         "B": tuple(c[1] for c in closed),
                         "C": tuple(c[2] for c in closed)},
        )
    if kind is PowerKind.D_MINUS:
        D, E = [-3], [-1]
        for _ in range(1, m):
            D.append(-3 * D[-1] - E[-1])
            E.append(-D[-2] - 2 * E[-1])
        closed = [_closed_de(mm) for mm in range(1, m + 1)]
        return PowerCoefficients(
            kind=kind, m=m,
            recurrence={"D": tuple(D), "E": tuple(E)},
            closed_form={"D": tuple(c[0] for c in closed),
                         "E": tuple(c[1] for c in closed)},
        )
    if kind is PowerKind.F_MINUS:
        F, G, H = [0], [1], [-2]
        for _ in range(1, m):
            F.append(-F[-1] + G[-1])
            G.append(F[-2] - 2 * G[-1] + H[-1])
            H.append(2 * (G[-2] - H[-1]))
        closed = [_closed_fgh(mm) for mm in range(1, m + 1)]
        return PowerCoefficients(
            kind=kind, m=m,
            recurrence={"F": tuple(F), "G": tuple(G), "H": tuple(H)},
            closed_form={"F": tuple(c[0] for c in closed),
                         "G": tuple(c[1] for c in closed),
                         "H": tuple(c[2] for c in closed)},
        )
    raise ValueError(f"unknown kind {kind!r}")
