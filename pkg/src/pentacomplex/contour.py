"""Path integration of 5-complex functions and the pole/residue identity.

Paths are polylines in 5-space.  Integrals use the composite midpoint rule
over the ring product f(u) du, accumulated in vertex order so results are
schedule-independent.  A closed loop around a pole u0 picks up
2*pi*f(u0)*(~e1*n1 + ~e2*n2) where n_k is the winding number of the loop's
projection onto canonical plane k around the projected pole — the azimuthal
angles are the only cyclic coordinates, so only the ~e_k directions survive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .algebra import PentaComplex, _mul_comps, inverse
from .canonical import E1, E1_TILDE, E2, E2_TILDE, E_PLUS, rotated_coords
from .errors import (EvaluationFailed, NonInvertible, NonInvertibleOnPath,
                     OnBoundary, PoleOnPath)

TWO_PI = 2.0 * math.pi

# projected pole/point must stay this far from every projected edge
TAU_EDGE = 1e-9

Evaluator = Callable[[PentaComplex], PentaComplex]


@dataclass(frozen=True)
class Path:
    """Ordered polyline; a closed path implicitly joins the last vertex
    back to the first (do not repeat the first vertex)."""

    vertices: tuple[PentaComplex, ...]
    closed: bool = False

    def __post_init__(self):
        verts = tuple(self.vertices)
        object.__setattr__(self, "vertices", verts)
        if len(verts) < 2:
            raise ValueError(f"a path needs at least 2 vertices, got {len(verts)}")
        pairs = list(zip(verts, verts[1:]))
        if self.closed:
            pairs.append((verts[-1], verts[0]))
        for a, b in pairs:
            if a.components == b.components:
                raise ValueError("consecutive path vertices must be distinct")

    def segments(self) -> list[tuple[PentaComplex, PentaComplex]]:
        segs = list(zip(self.vertices, self.vertices[1:]))
        if self.closed:
            segs.append((self.vertices[-1], self.vertices[0]))
        return segs

    def to_dict(self) -> dict:
        return {"vertices": [v.to_list() for v in self.vertices], "closed": self.closed}

    @classmethod
    def from_dict(cls, data: dict) -> "Path":
        return cls(tuple(PentaComplex.from_list(v) for v in data["vertices"]),
                   bool(data.get("closed", False)))


@dataclass(frozen=True)
class PlaneProjection:
    """2D shadow of a path on one canonical plane (unit-length axes)."""

    points: tuple[tuple[float, float], ...]
    plane: int
    closed: bool = False


def project(path: Path, k: int) -> PlaneProjection:
    """Project every vertex onto canonical plane k (k = 1 or 2)."""
    if k not in (1, 2):
        raise ValueError(f"plane index must be 1 or 2, got {k}")
    pts = []
    for v in path.vertices:
        xi = rotated_coords(v)
        pts.append((xi.xi1, xi.eta1) if k == 1 else (xi.xi2, xi.eta2))
    return PlaneProjection(points=tuple(pts), plane=k, closed=path.closed)


def project_point(u: PentaComplex, k: int) -> tuple[float, float]:
    """Plane-k coordinates of a single element."""
    xi = rotated_coords(u)
    return (xi.xi1, xi.eta1) if k == 1 else (xi.xi2, xi.eta2)


def _point_segment_distance(p: tuple[float, float], a: tuple[float, float],
                            b: tuple[float, float]) -> float:
    ax, ay = a
    bx, by = b
    px, py = p
    dx = bx - ax
    dy = by - ay
    seg_sq = dx * dx + dy * dy
    if seg_sq == 0.0:
        return math.hypot(px - ax, py - ay)
    t = ((px - ax) * dx + (py - ay) * dy) / seg_sq
    t = min(1.0, max(0.0, t))
    return math.hypot(px - (ax + t * dx), py - (ay + t * dy))


def winding(point: tuple[float, float], polygon: PlaneProjection,
            tol: float = TAU_EDGE) -> int:
    """Signed winding number of the closed projected polygon around `point`.

    Computed as the summed subtended angles over 2*pi.  For a simple
    positively oriented loop this is 1 inside and 0 outside; self-crossing
    loops get the full signed count.  Raises OnBoundary if the point is
    within `tol` of an edge.
    """
    if not polygon.closed:
        raise ValueError("winding number needs a closed polygon")
    pts = polygon.points
    n = len(pts)
    px, py = point
    for i in range(n):
        if _point_segment_distance(point, pts[i], pts[(i + 1) % n]) <= tol:
            raise OnBoundary(f"point {point} is within {tol} of edge {i}")
    total = 0.0
    for i in range(n):
        ax, ay = pts[i]
        bx, by = pts[(i + 1) % n]
        ax -= px
        ay -= py
        bx -= px
        by -= py
        total += math.atan2(ax * by - ay * bx, ax * bx + ay * by)
    return round(total / TWO_PI)


def _call(f: Evaluator, u: PentaComplex) -> PentaComplex:
    try:
        return f(u)
    except Exception as exc:
        raise EvaluationFailed(f"evaluator raised at {u!r}: {exc}") from exc


def integrate(f: Evaluator, path: Path, samples_per_segment: int = 64) -> PentaComplex:
    """Midpoint-rule integral of f(u) du along the polyline.

    Each segment is subdivided uniformly; du is the exact subsegment vector
    and the sum is accumulated in vertex order.
    """
    if samples_per_segment < 1:
        raise ValueError(f"samples_per_segment must be >= 1, got {samples_per_segment}")
    acc = (0.0, 0.0, 0.0, 0.0, 0.0)
    inv_n = 1.0 / samples_per_segment
    for a, b in path.segments():
        ac = a.components
        bc = b.components
        du = tuple((bc[i] - ac[i]) * inv_n for i in range(5))
        for s in range(samples_per_segment):
            frac = (s + 0.5) * inv_n
            mid = PentaComplex(*(ac[i] + (bc[i] - ac[i]) * frac for i in range(5)))
            val = _call(f, mid)
            contrib = _mul_comps(val.components, du)
            acc = tuple(acc[i] + contrib[i] for i in range(5))
    return PentaComplex(*acc)


def residue_formula(f: Evaluator, path: Path, u0: PentaComplex,
                    samples: int = 4096,
                    tol_edge: float = TAU_EDGE) -> tuple[PentaComplex, PentaComplex]:
    """Both sides of the pole identity for a closed loop around u0.

    lhs is the quadrature of f(u) * (u - u0)^-1 du over the loop; rhs is
    2*pi*f(u0)*(~e1*n1 + ~e2*n2) with n_k the winding number of the loop's
    plane-k projection around the projected pole.  The loop must avoid the
    divisor-of-zero sets of u - u0 (vplus = 0 or either plane radius 0).
    """
    if not path.closed:
        raise ValueError("the pole identity needs a closed path")
    windings = []
    for k in (1, 2):
        try:
            windings.append(winding(project_point(u0, k), project(path, k), tol=tol_edge))
        except OnBoundary as exc:
            raise PoleOnPath(f"projected pole touches the plane-{k} projection") from exc
    n1, n2 = windings

    def integrand(u: PentaComplex) -> PentaComplex:
        try:
            inv = inverse(u - u0)
        except NonInvertible as exc:
            raise NonInvertibleOnPath(
                f"u - u0 is a divisor of zero at a sample point: {exc}") from exc
        return _call(f, u) * inv

    per_segment = max(1, round(samples / len(path.segments())))
    try:
        lhs = integrate(integrand, path, per_segment)
    except EvaluationFailed as exc:
        cause = exc.__cause__
        if isinstance(cause, NonInvertibleOnPath):
            raise cause
        raise
    rhs = TWO_PI * (_call(f, u0) * (n1 * E1_TILDE + n2 * E2_TILDE))
    return lhs, rhs


def plane_circle(center: PentaComplex, plane: int, radius: float,
                 line_offset: float | None = None,
                 other_offset: float | None = None,
                 vertices: int = 256) -> Path:
    """Closed polygonal loop winding once around `center` in one canonical
    plane.

    The loop is a regular `vertices`-gon of the given radius in plane `plane`
    centred on the projection of `center`.  Nonzero `line_offset` (along e+)
    and `other_offset` (along the other plane's idempotent) displace the loop
    off the divisor-of-zero sets relative to `center`, which the pole
    identity requires; both default to 0.75 * radius.
    """
    if plane not in (1, 2):
        raise ValueError(f"plane index must be 1 or 2, got {plane}")
    if radius <= 0:
        raise ValueError(f"radius must be positive, got {radius}")
    if vertices < 3:
        raise ValueError(f"need at least 3 vertices, got {vertices}")
    if line_offset is None:
        line_offset = 0.75 * radius
    if other_offset is None:
        other_offset = 0.75 * radius
    ek, tek = (E1, E1_TILDE) if plane == 1 else (E2, E2_TILDE)
    other = E2 if plane == 1 else E1
    base = center + line_offset * E_PLUS + other_offset * other
    verts = []
    for i in range(vertices):
        t = TWO_PI * i / vertices
        verts.append(base + radius * math.cos(t) * ek + radius * math.sin(t) * tek)
    return Path(tuple(verts), closed=True)
