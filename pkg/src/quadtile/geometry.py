"""Numeric spherical realization of a2bc quadrilateral tilings.

Rotation-matrix holonomy, the three trigonometric edge equations, closed-form
edge lengths for the two special families, lune-based quadrilateral
construction, and breadth-first embedding of a TilingMap on the unit sphere.
"""

from __future__ import annotations

import math
import warnings
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

import numpy as np
from scipy.optimize import brentq

from .tilingmap import EDGE_LABELS, TilingMap, extract_avc, verify

__all__ = [
    "GeometryError",
    "SingularityError",
    "DegeneracyError",
    "ClosureError",
    "DegeneracyWarning",
    "SphericalQuad",
    "Realization",
    "ConvexityReport",
    "Y",
    "Z",
    "holonomy_residual",
    "trig_residuals",
    "solve_edges",
    "closed_form_family",
    "closed_form_cube_subdivision",
    "degeneracy_loci",
    "lune_quad",
    "area",
    "realize",
    "convexity_bounds",
    "export_obj",
    "export_svg",
]

#: residual tolerance for algebraic identities (holonomy / trig equations)
TOL_ALGEBRAIC = 1e-9
#: tolerance for propagated realizations (accumulated rotation error)
TOL_REALIZE = 1e-6
#: closeness threshold for degeneracy warnings and exclusions
TOL_DEGENERATE = 1e-9


class GeometryError(ValueError):
    """Base class for geometric construction failures."""


class SingularityError(GeometryError):
    """A formula divides by a vanishing trigonometric factor."""


class DegeneracyError(GeometryError):
    """Parameters hit an excluded locus where two edges coincide."""


class ClosureError(GeometryError):
    """A realization failed to close up on the sphere."""

    def __init__(self, message: str, worst_vertex: int, gap: float):
        super().__init__(message)
        self.worst_vertex = worst_vertex
        self.gap = gap


class DegeneracyWarning(UserWarning):
    """Parameters are close to a degenerate (edge-coincidence) locus."""


@dataclass(frozen=True)
class SphericalQuad:
    """A spherical quadrilateral with edges AB = DA = a, BC = b, CD = c and
    interior angles alpha, beta, gamma, delta at corners A, B, C, D."""

    a: float
    b: float
    c: float
    alpha: float
    beta: float
    gamma: float
    delta: float

    def __post_init__(self) -> None:
        for name in ("a", "b", "c", "alpha", "beta", "gamma", "delta"):
            v = getattr(self, name)
            if not 0.0 < v < 2.0 * math.pi:
                raise GeometryError(
                    f"{name} = {v!r} outside (0, 2*pi)")

    @property
    def angles(self) -> tuple[float, float, float, float]:
        return (self.alpha, self.beta, self.gamma, self.delta)

    @property
    def edges(self) -> tuple[float, float, float, float]:
        """Edge lengths in boundary order AB, BC, CD, DA."""
        return (self.a, self.b, self.c, self.a)

    def reflex_count(self) -> int:
        return sum(1 for v in self.angles if v >= math.pi)

    def distinct_edges(self, tol: float = TOL_DEGENERATE) -> bool:
        return (abs(self.a - self.b) > tol and abs(self.a - self.c) > tol
                and abs(self.b - self.c) > tol)


def area(q: SphericalQuad) -> float:
    """Spherical excess alpha + beta + gamma + delta - 2*pi."""
    return sum(q.angles) - 2.0 * math.pi


# ---------------------------------------------------------------------------
# Holonomy and the trigonometric edge equations
# ---------------------------------------------------------------------------

def Y(x: float) -> np.ndarray:
    """Rotation by x about the y-axis (the printed Y-block)."""
    c, s = math.cos(x), math.sin(x)
    return np.array([[c, 0.0, s], [0.0, 1.0, 0.0], [-s, 0.0, c]])


def Z(x: float) -> np.ndarray:
    """Rotation by x about the z-axis (the printed Z-block)."""
    c, s = math.cos(x), math.sin(x)
    return np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])


def holonomy_residual(q: SphericalQuad) -> float:
    """Max-abs entry of the boundary-walk rotation product minus identity.

    The walk alternates edge translations Y(length) with corner turns
    Z(pi - angle); the product is the identity exactly when the quadrilateral
    closes up on the sphere.
    """
    M = (Y(q.b) @ Z(math.pi - q.beta)
         @ Y(q.a) @ Z(math.pi - q.alpha)
         @ Y(q.a) @ Z(math.pi - q.delta)
         @ Y(q.c) @ Z(math.pi - q.gamma))
    return float(np.abs(M - np.eye(3)).max())


def _trig_coefficients(
    alpha: float, beta: float, gamma: float, delta: float
) -> tuple[float, float, float]:
    """Coefficients (A, B, C) of the quadratic A cos^2 a + B cos a + C = 0."""
    A = (math.cos(alpha) - 1.0) * math.sin(beta) * math.sin(delta)
    B = math.sin(alpha) * (math.cos(beta) * math.sin(delta)
                           + math.cos(delta) * math.sin(beta))
    C = (math.sin(beta) * math.sin(delta) + math.cos(gamma)
         - math.cos(alpha) * math.cos(beta) * math.cos(delta))
    return A, B, C


def trig_residuals(q: SphericalQuad) -> tuple[float, float, float]:
    """Residuals of the three edge equations: the quadratic in cos a, the
    linear relation for cos b, and the linear relation for cos c."""
    al, be, ga, de = q.angles
    ca, cb, cc = math.cos(q.a), math.cos(q.b), math.cos(q.c)
    A, B, C = _trig_coefficients(al, be, ga, de)
    r_a = A * ca * ca + B * ca + C
    r_b = (cb * math.sin(be) * math.sin(ga)
           - ca * math.sin(al) * math.sin(de)
           - math.cos(be) * math.cos(ga) + math.cos(al) * math.cos(de))
    r_c = (math.cos(de) * math.sin(be) * (math.cos(al) - 1.0) * ca * ca
           + math.sin(al) * (math.cos(be) * math.cos(de)
                             - math.sin(be) * math.sin(de)) * ca
           + math.sin(ga) * cc
           + math.cos(al) * math.cos(be) * math.sin(de)
           + math.cos(de) * math.sin(be))
    return (r_a, r_b, r_c)


def solve_edges(
    alpha: float, beta: float, gamma: float, delta: float
) -> list[SphericalQuad]:
    """Edge lengths from angles: solve the quadratic for cos a (both roots),
    derive cos b and cos c from the linear relations, and keep candidates
    whose cosines lie in [-1, 1] and whose holonomy residual is < 1e-9."""
    for name, v in (("alpha", alpha), ("beta", beta),
                    ("gamma", gamma), ("delta", delta)):
        if not 0.0 < v < 2.0 * math.pi:
            raise GeometryError(f"{name} = {v!r} outside (0, 2*pi)")
    if (abs(beta - delta) < TOL_DEGENERATE
            and abs(gamma - math.pi) > TOL_DEGENERATE):
        raise DegeneracyError(
            "beta = delta with gamma != pi admits no valid tile")
    sin_b, sin_g = math.sin(beta), math.sin(gamma)
    if abs(sin_g) < 1e-12 or abs(sin_b * sin_g) < 1e-12:
        raise SingularityError(
            "sin(beta) sin(gamma) vanishes; edge relations are singular")

    A, B, C = _trig_coefficients(alpha, beta, gamma, delta)
    roots: list[float] = []
    if abs(A) < 1e-15:
        if abs(B) > 1e-15:
            roots.append(-C / B)
    else:
        disc = B * B - 4.0 * A * C
        if disc >= 0.0:
            sq = math.sqrt(disc)
            roots.extend(((-B + sq) / (2.0 * A), (-B - sq) / (2.0 * A)))

    out = []
    for ca in roots:
        if abs(ca) > 1.0 + 1e-12:
            continue
        ca = min(1.0, max(-1.0, ca))
        cb = ((ca * math.sin(alpha) * math.sin(delta)
               + math.cos(beta) * math.cos(gamma)
               - math.cos(alpha) * math.cos(delta)) / (sin_b * sin_g))
        cc = -((math.cos(delta) * sin_b * (math.cos(alpha) - 1.0) * ca * ca
                + math.sin(alpha) * (math.cos(beta) * math.cos(delta)
                                     - sin_b * math.sin(delta)) * ca
                + math.cos(alpha) * math.cos(beta) * math.sin(delta)
                + math.cos(delta) * sin_b) / sin_g)
        if abs(cb) > 1.0 + 1e-12 or abs(cc) > 1.0 + 1e-12:
            continue
        cb = min(1.0, max(-1.0, cb))
        cc = min(1.0, max(-1.0, cc))
        lengths = tuple(math.acos(v) for v in (ca, cb, cc))
        if any(not 0.0 < v < 2.0 * math.pi for v in lengths):
            continue
        q = SphericalQuad(*lengths, alpha, beta, gamma, delta)
        if holonomy_residual(q) < TOL_ALGEBRAIC:
            out.append(q)
    return out


# ---------------------------------------------------------------------------
# Closed forms
# ---------------------------------------------------------------------------

_SQRT5 = math.sqrt(5.0)


def closed_form_family(f: int) -> SphericalQuad:
    """The earth-map family quad at even f = 0 (mod 8): angles
    (pi - 8pi/f, pi/2 + 4pi/f, pi/2, 8pi/f) with closed-form cosines in
    cal_A = 4pi/f."""
    if f == 10:
        raise DegeneracyError(
            "f = 10 is the b = c degeneracy of the family equations")
    if f < 16 or f % 8:
        raise GeometryError(
            f"closed_form_family requires f divisible by 8, f >= 16, got {f}")
    cal_a = 4.0 * math.pi / f
    cos_a2 = math.cos(cal_a) ** 2
    cos_a = (4.0 * cos_a2 + _SQRT5 - 3.0) / (4.0 * cos_a2)
    cos_b = (-(_SQRT5 - 3.0) * cos_a2 + _SQRT5 - 2.0) / math.cos(cal_a)
    cos_c = (_SQRT5 - 1.0) / (4.0 * math.cos(cal_a))
    q = SphericalQuad(
        math.acos(cos_a), math.acos(cos_b), math.acos(cos_c),
        math.pi - 8.0 * math.pi / f,
        math.pi / 2.0 + 4.0 * math.pi / f,
        math.pi / 2.0,
        8.0 * math.pi / f,
    )
    assert holonomy_residual(q) < TOL_ALGEBRAIC
    return q


def closed_form_cube_subdivision(delta: float) -> SphericalQuad:
    """The cube-subdivision quad family: angles (2pi/3, pi - delta, pi/2,
    delta) for delta in (pi/4, 3pi/4), away from the three edge-coincidence
    exclusions."""
    lo, hi = math.pi / 4.0, 3.0 * math.pi / 4.0
    if not lo < delta < hi:
        raise GeometryError(
            f"delta = {delta!r} outside (pi/4, 3pi/4)")
    for excl, pair in ((0.5, "b = c"),
                       (CUBE_EXCLUSION_AB, "a = b"),
                       (CUBE_EXCLUSION_AC, "a = c")):
        if abs(delta / math.pi - excl) < TOL_DEGENERATE:
            raise DegeneracyError(
                f"delta = {excl}*pi is the {pair} degeneracy")
    s, c = math.sin(delta), math.cos(delta)
    root = math.sqrt(3.0 * s * s - 1.0)
    q = SphericalQuad(
        math.acos(root / (math.sqrt(3.0) * s)),
        math.acos((root + c) / (2.0 * s)),
        math.acos((root - c) / (2.0 * s)),
        2.0 * math.pi / 3.0,
        math.pi - delta,
        math.pi / 2.0,
        delta,
    )
    assert holonomy_residual(q) < TOL_ALGEBRAIC
    return q


#: delta/pi values where the cube-subdivision family degenerates
CUBE_EXCLUSION_AB = 0.4322221997677038
CUBE_EXCLUSION_AC = 0.5677778002322962


def _cube_quad_unchecked(delta: float) -> tuple[float, float, float]:
    s, c = math.sin(delta), math.cos(delta)
    root = math.sqrt(3.0 * s * s - 1.0)
    return (root / (math.sqrt(3.0) * s),
            (root + c) / (2.0 * s),
            (root - c) / (2.0 * s))


def _family_cosines(f: float) -> tuple[float, float, float]:
    cal_a = 4.0 * math.pi / f
    cos_a2 = math.cos(cal_a) ** 2
    return ((4.0 * cos_a2 + _SQRT5 - 3.0) / (4.0 * cos_a2),
            (-(_SQRT5 - 3.0) * cos_a2 + _SQRT5 - 2.0) / math.cos(cal_a),
            (_SQRT5 - 1.0) / (4.0 * math.cos(cal_a)))


def degeneracy_loci() -> dict[str, float]:
    """Roots of the edge-coincidence equations.

    ``family a=b`` / ``family a=c`` / ``family b=c`` are the f-values where
    the earth-map family's edges collide (spurious parameters); ``cube a=b``
    and ``cube a=c`` are the delta/pi exclusions of the cube-subdivision
    family.
    """
    def fam(i, j):
        return lambda f: _family_cosines(f)[i] - _family_cosines(f)[j]

    def cube(i, j):
        return lambda d: (_cube_quad_unchecked(d * math.pi)[i]
                          - _cube_quad_unchecked(d * math.pi)[j])

    return {
        "family a=b": brentq(fam(0, 1), 6.2, 7.5, xtol=1e-14),
        "family a=c": brentq(fam(0, 2), 13.0, 14.5, xtol=1e-14),
        "family b=c": brentq(fam(1, 2), 9.0, 11.0, xtol=1e-14),
        "cube a=b": brentq(cube(0, 1), 0.35, 0.49, xtol=1e-15),
        "cube a=c": brentq(cube(0, 2), 0.51, 0.65, xtol=1e-15),
    }


# ---------------------------------------------------------------------------
# Lune-based construction
# ---------------------------------------------------------------------------

def _triangle_from_sas(
    s1: float, s2: float, included: float
) -> tuple[float, float, float]:
    """Side opposite the included angle, and the angles adjacent to it (at
    the far end of s1 and s2 respectively), for a spherical triangle given
    side-angle-side."""
    if not 0.0 < included < math.pi:
        raise GeometryError(
            f"included angle {included!r} outside (0, pi)")
    cos_opp = (math.cos(s1) * math.cos(s2)
               + math.sin(s1) * math.sin(s2) * math.cos(included))
    opp = math.acos(min(1.0, max(-1.0, cos_opp)))
    if min(opp, math.pi - opp) < TOL_DEGENERATE:
        raise DegeneracyError("near-degenerate triangle in lune construction")

    def adjacent(sa: float, sb: float) -> float:
        cos_ang = ((math.cos(sb) - math.cos(sa) * math.cos(opp))
                   / (math.sin(sa) * math.sin(opp)))
        return math.acos(min(1.0, max(-1.0, cos_ang)))

    ang1 = adjacent(s1, s2)  # at the far endpoint of s1
    ang2 = adjacent(s2, s1)  # at the far endpoint of s2
    for ang in (ang1, ang2):
        if min(ang, math.pi - ang) < TOL_DEGENERATE:
            raise DegeneracyError(
                "near-degenerate triangle in lune construction")
    return opp, ang1, ang2


def _warn_coincidences(q: SphericalQuad) -> None:
    for x, y, pair in ((q.a, q.b, "a = b"), (q.a, q.c, "a = c"),
                       (q.b, q.c, "b = c")):
        if abs(x - y) < 1e-7:
            warnings.warn(f"degenerate parameters: {pair}",
                          DegeneracyWarning, stacklevel=3)


def lune_quad(
    a: float, alpha: float, theta: float, exterior: bool = False
) -> SphericalQuad:
    """A quadrilateral inscribed in a lune of angle alpha, with both a-edges
    of length a and diagonal AC of length pi - a, split at the apex into
    theta and the rest.

    Interior mode: the two triangles ABC (apex theta) and ACD (apex
    alpha - theta) are joined along AC; area = alpha.  Exterior mode
    (reflex beta): the quadrilateral is triangle ACD (apex alpha + theta)
    minus triangle ABC (apex theta); requires a < pi/2; area is again alpha.
    Near edge coincidences a DegeneracyWarning is issued.
    """
    if not 0.0 < alpha < math.pi:
        raise GeometryError(f"alpha = {alpha!r} outside (0, pi)")
    diag = math.pi - a
    if exterior:
        if not 0.0 < a < math.pi / 2.0:
            raise GeometryError(
                "exterior mode requires a in (0, pi/2): the cut-out "
                "triangle is not simple otherwise")
        if not 0.0 < theta < math.pi - alpha:
            raise GeometryError(
                f"theta = {theta!r} outside (0, pi - alpha)")
        b, angle_b, angle_c1 = _triangle_from_sas(a, diag, theta)
        c, angle_d, angle_c2 = _triangle_from_sas(a, diag, alpha + theta)
        gamma = angle_c2 - angle_c1
        if gamma <= TOL_DEGENERATE:
            raise GeometryError(
                "exterior construction is not simple: gamma <= 0")
        q = SphericalQuad(a, b, c, alpha, 2.0 * math.pi - angle_b,
                          gamma, angle_d)
    else:
        if not 0.0 < a < math.pi:
            raise GeometryError(f"a = {a!r} outside (0, pi)")
        if not 0.0 < theta < alpha:
            raise GeometryError(
                f"theta = {theta!r} outside (0, alpha)")
        b, angle_b, angle_c1 = _triangle_from_sas(a, diag, theta)
        c, angle_d, angle_c2 = _triangle_from_sas(a, diag, alpha - theta)
        q = SphericalQuad(a, b, c, alpha, angle_b,
                          angle_c1 + angle_c2, angle_d)
    _warn_coincidences(q)
    return q


# ---------------------------------------------------------------------------
# Convexity bounds
# ---------------------------------------------------------------------------

@dataclass
class ConvexityReport:
    checks: list[tuple[str, bool]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checks)

    @property
    def violations(self) -> list[str]:
        return [name for name, ok in self.checks if not ok]


def convexity_bounds(q: SphericalQuad, f: int) -> ConvexityReport:
    """Angle lower bounds and lune estimates for a convex tile: every angle
    exceeds 2pi/f, and gamma + delta < pi + beta, gamma + beta < pi + delta."""
    if any(v >= math.pi for v in q.angles):
        raise GeometryError("convexity bounds require all angles < pi")
    rep = ConvexityReport()
    lb = 2.0 * math.pi / f
    for name, v in zip(("alpha", "beta", "gamma", "delta"), q.angles):
        rep.checks.append((f"{name} > 2*pi/f", v > lb))
    rep.checks.append(
        ("gamma + delta < pi + beta",
         q.gamma + q.delta < math.pi + q.beta))
    rep.checks.append(
        ("gamma + beta < pi + delta",
         q.gamma + q.beta < math.pi + q.delta))
    return rep


# ---------------------------------------------------------------------------
# Realization on the unit sphere
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Realization:
    """Unit-sphere embedding of a TilingMap: coordinates per vertex, the
    vertex ids at each tile's corners, and closure diagnostics."""

    map: TilingMap
    quad: SphericalQuad
    coords: tuple[tuple[float, float, float], ...]
    tile_corners: tuple[tuple[int, int, int, int], ...]
    max_mismatch: float
    area_sum: float

    def corner_point(self, tile: int, corner: int) -> np.ndarray:
        return np.array(self.coords[self.tile_corners[tile][corner]])


def _boundary_polygon(q: SphericalQuad, mirror: bool) -> list[np.ndarray]:
    """Corner coordinates A, B, C, D of the canonical tile: A at the north
    pole, edge AB along the prime meridian, interior traversal flipped for
    the mirror image."""
    sign = -1.0 if mirror else 1.0
    p = np.array([0.0, 0.0, 1.0])
    t = np.array([1.0, 0.0, 0.0])
    pts = [p]
    for length, angle in zip(q.edges[:3],
                             (q.beta, q.gamma, q.delta)):
        p, t = (p * math.cos(length) + t * math.sin(length),
                -p * math.sin(length) + t * math.cos(length))
        pts.append(p)
        turn = sign * (math.pi - angle)
        t = t * math.cos(turn) + np.cross(p, t) * math.sin(turn)
    return pts


def _triad(u1: np.ndarray, u2: np.ndarray) -> np.ndarray:
    e1 = u1
    e2 = u2 - np.dot(u1, u2) * u1
    e2 = e2 / np.linalg.norm(e2)
    return np.column_stack([e1, e2, np.cross(e1, e2)])


def _corner_angle(prev: np.ndarray, at: np.ndarray, nxt: np.ndarray) -> float:
    tp = prev - np.dot(at, prev) * at
    tn = nxt - np.dot(at, nxt) * at
    cosang = np.dot(tp, tn) / (np.linalg.norm(tp) * np.linalg.norm(tn))
    return math.acos(min(1.0, max(-1.0, float(cosang))))


def realize(m: TilingMap, q: SphericalQuad) -> Realization:
    """Embed the map on the unit sphere by breadth-first frame propagation
    from tile 0 (corner A at the north pole, AB along the prime meridian).

    Every vertex of the map must satisfy its angle sum within 1e-9; all
    coordinates assigned to a vertex must agree within 1e-6, and the total
    spherical area of the tiles must be 4pi within 1e-6.
    """
    report = verify(m, extract_avc(m))
    if not report.passed:
        raise GeometryError(f"map fails verification: {report.failures}")
    for v in m.vertices:
        sig = v.signature
        total = sum(e * ang for e, ang in zip(sig.exponents, q.angles))
        if abs(total - 2.0 * math.pi) > TOL_ALGEBRAIC:
            raise GeometryError(
                f"vertex {sig} angle sum {total!r} != 2*pi: quad is "
                f"incompatible with this map's AVC")

    base = _boundary_polygon(q, mirror=False)
    mirr = _boundary_polygon(q, mirror=True)
    vmap = m.vertex_of_slot()

    def vertex_id(t: int, corner: int) -> int:
        pos = corner if m.orient[t] == 0 else (corner - 1) % 4
        return vmap[4 * t + pos]

    coords: dict[int, np.ndarray] = {}
    world: list[list[np.ndarray] | None] = [None] * m.f
    worst, worst_vertex = 0.0, 0

    def canonical(t: int) -> list[np.ndarray]:
        return mirr if m.orient[t] else base

    def place(t: int, corners: list[np.ndarray]) -> None:
        nonlocal worst, worst_vertex
        world[t] = corners
        for corner in range(4):
            v = vertex_id(t, corner)
            if v in coords:
                gap = float(np.linalg.norm(coords[v] - corners[corner]))
                if gap > worst:
                    worst, worst_vertex = gap, v
            else:
                coords[v] = corners[corner]

    place(0, list(canonical(0)))
    queue = deque([0])
    while queue:
        t = queue.popleft()
        for pos in range(4):
            other = m.glue[4 * t + pos]
            t2 = other // 4
            if world[t2] is not None:
                continue
            pos2 = other % 4
            quad_pts = canonical(t2)
            c1, c2 = pos2, (pos2 + 1) % 4
            w1 = coords[vertex_id(t2, c1)]
            w2 = coords[vertex_id(t2, c2)]
            R = _triad(w1, w2) @ _triad(quad_pts[c1], quad_pts[c2]).T
            place(t2, [R @ quad_pts[corner] for corner in range(4)])
            queue.append(t2)

    if worst > TOL_REALIZE:
        raise ClosureError(
            f"realization does not close: vertex {worst_vertex} gap "
            f"{worst:.3e} exceeds {TOL_REALIZE:.0e}", worst_vertex, worst)

    total_area = 0.0
    for corners in world:
        assert corners is not None
        angle_sum = sum(
            _corner_angle(corners[(i - 1) % 4], corners[i],
                          corners[(i + 1) % 4])
            for i in range(4))
        total_area += angle_sum - 2.0 * math.pi
    if abs(total_area - 4.0 * math.pi) > TOL_REALIZE:
        raise ClosureError(
            f"tile areas sum to {total_area!r}, not 4*pi", -1,
            abs(total_area - 4.0 * math.pi))

    nv = len(m.vertices)
    return Realization(
        map=m,
        quad=q,
        coords=tuple(tuple(float(x) for x in coords[v]) for v in range(nv)),
        tile_corners=tuple(
            tuple(vertex_id(t, corner) for corner in range(4))
            for t in range(m.f)),
        max_mismatch=worst,
        area_sum=total_area,
    )


# ---------------------------------------------------------------------------
# Export
# ---------------------------------------------------------------------------

def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _geodesic(p: np.ndarray, r: np.ndarray, samples: int) -> list[np.ndarray]:
    ang = math.acos(min(1.0, max(-1.0, float(np.dot(p, r)))))
    out = []
    for i in range(samples + 1):
        t = i / samples
        if ang < 1e-12:
            out.append(p)
            continue
        v = (math.sin((1 - t) * ang) * p + math.sin(t * ang) * r) / math.sin(ang)
        out.append(v / np.linalg.norm(v))
    return out


def export_obj(real: Realization, edge_samples: int = 0) -> str:
    """Wavefront OBJ text: one vertex per map vertex, one quad face per tile;
    with edge_samples > 0, geodesic edge polylines are appended as lines."""
    lines = ["# a2bc quadrilateral tiling realization",
             f"# f = {real.map.f}, vertices = {len(real.coords)}"]
    for p in real.coords:
        lines.append("v " + " ".join(_fmt(x) for x in p))
    for corners in real.tile_corners:
        lines.append("f " + " ".join(str(c + 1) for c in corners))
    if edge_samples > 0:
        idx = len(real.coords)
        for (s1, s2) in real.map.edges():
            t, pos = s1 // 4, s1 % 4
            p = real.corner_point(t, pos)
            r = real.corner_point(t, (pos + 1) % 4)
            pts = _geodesic(p, r, edge_samples)
            for v in pts:
                lines.append("v " + " ".join(_fmt(x) for x in v))
            lines.append("l " + " ".join(
                str(idx + i + 1) for i in range(len(pts))))
            idx += len(pts)
    return "\n".join(lines) + "\n"


#: default SVG stroke styling per edge label: plain a, double b, heavy c
SVG_STYLE = """
.edge-a { stroke: #000; stroke-width: 1; fill: none; }
.edge-b { stroke: #000; stroke-width: 3; fill: none; }
.edge-b-core { stroke: #fff; stroke-width: 1.2; fill: none; }
.edge-c { stroke: #000; stroke-width: 4; fill: none; }
"""


def export_svg(
    real: Realization, size: int = 640, edge_samples: int = 16,
    style: str = SVG_STYLE,
) -> str:
    """Stereographic projection from the south pole as an SVG drawing,
    with stroke classes per edge label (plain a, double b, heavy c)."""
    half = size / 2.0
    scale = size / 8.0

    def project(p: np.ndarray) -> tuple[float, float]:
        z = float(p[2])
        if z < -0.999999:
            z = -0.999999
        return (half + scale * float(p[0]) / (1.0 + z),
                half - scale * float(p[1]) / (1.0 + z))

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" '
        f'height="{size}" viewBox="0 0 {size} {size}">',
        f"<style>{style}</style>",
    ]
    m = real.map
    for (s1, s2) in sorted(m.edges()):
        label = EDGE_LABELS[s1 % 4]
        t, pos = s1 // 4, s1 % 4
        p = real.corner_point(t, pos)
        r = real.corner_point(t, (pos + 1) % 4)
        pts = [project(v) for v in _geodesic(p, r, edge_samples)]
        d = "M " + " L ".join(f"{_fmt(x)} {_fmt(y)}" for x, y in pts)
        parts.append(f'<path class="edge-{label}" d="{d}"/>')
        if label == "b":
            parts.append(f'<path class="edge-b-core" d="{d}"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
