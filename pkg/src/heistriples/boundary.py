"""Boundary of the complex hyperbolic plane and its projective invariants.

The boundary is the one-point compactification of the Heisenberg group.
A finite point (z, t) is represented in C^3 by the null vector
(-|z|^2 + it, sqrt(2) z, 1) of the signature-(2,1) Hermitian form
<u, w> = u1 conj(w3) + u2 conj(w2) + u3 conj(w1); the extra point lifts
to (1, 0, 0).  Everything here (the Cartan angular invariant, complex
cross-ratios, and the two real relations tying the three canonical
cross-ratios of a quadruple together) is computed through lifts, so the
point at infinity needs no limiting arguments.

For standard lifts |<p, q>| equals d(p, q)^2, which is what connects
these invariants back to the metric.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DegenerateConfiguration, GeometryError
from .heisenberg import (
    HeisPoint,
    Similarity,
    apply_similarity,
    circle_distance,
    involution_j,
    kc_distance,
)

# Finite points closer than this are treated as repeated: the Hermitian
# products underflow and their arguments turn into noise.
REPEATED_POINT_TOL = 1e-12

_SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class BoundaryPoint:
    """A boundary point: a finite Heisenberg point or the point at infinity."""

    point: HeisPoint | None

    @property
    def is_infinity(self) -> bool:
        return self.point is None

    @property
    def finite(self) -> HeisPoint:
        if self.point is None:
            raise GeometryError("the point at infinity has no Heisenberg coordinates")
        return self.point

    def to_dict(self) -> dict:
        if self.point is None:
            return {"infinity": True}
        return self.point.to_dict()

    @classmethod
    def from_dict(cls, data: dict) -> "BoundaryPoint":
        if data.get("infinity"):
            return INFINITY
        return cls(HeisPoint.from_dict(data))


INFINITY = BoundaryPoint(None)


def as_boundary(p) -> BoundaryPoint:
    """Coerce a HeisPoint (or BoundaryPoint) to a BoundaryPoint."""
    if isinstance(p, BoundaryPoint):
        return p
    if isinstance(p, HeisPoint):
        return BoundaryPoint(p)
    raise TypeError(f"expected HeisPoint or BoundaryPoint, got {type(p).__name__}")


@dataclass(frozen=True)
class Lift:
    """Homogeneous coordinates in C^3 for a boundary point."""

    v1: complex
    v2: complex
    v3: complex

    def __post_init__(self):
        v = tuple(complex(x) for x in (self.v1, self.v2, self.v3))
        if not all(math.isfinite(x.real) and math.isfinite(x.imag) for x in v):
            raise GeometryError("lift coordinates must be finite")
        if v == (0j, 0j, 0j):
            raise GeometryError("the zero vector is not a lift")
        for name, x in zip(("v1", "v2", "v3"), v):
            object.__setattr__(self, name, x)

    def scaled(self, factor: complex) -> "Lift":
        return Lift(self.v1 * factor, self.v2 * factor, self.v3 * factor)

    def null_residual(self) -> float:
        """|<v, v>| relative to the squared norm of the vector."""
        scale = (abs(self.v1) ** 2 + abs(self.v2) ** 2 + abs(self.v3) ** 2)
        return abs(hermitian(self, self)) / scale

    def to_dict(self) -> list:
        return [{"re": x.real, "im": x.imag} for x in (self.v1, self.v2, self.v3)]

    @classmethod
    def from_dict(cls, data: list) -> "Lift":
        return cls(*(complex(d["re"], d["im"]) for d in data))


def standard_lift(p) -> Lift:
    """Lift with third coordinate 1 (finite points) or (1,0,0) (infinity)."""
    bp = as_boundary(p)
    if bp.is_infinity:
        return Lift(1 + 0j, 0j, 0j)
    q = bp.finite
    zz = q.z.real * q.z.real + q.z.imag * q.z.imag
    return Lift(complex(-zz, q.t), _SQRT2 * q.z, 1 + 0j)


def hermitian(u: Lift, w: Lift) -> complex:
    """The signature-(2,1) form u1 conj(w3) + u2 conj(w2) + u3 conj(w1)."""
    return (u.v1 * w.v3.conjugate()
            + u.v2 * w.v2.conjugate()
            + u.v3 * w.v1.conjugate())


def boundary_point_from_lift(lift: Lift, tol: float = 1e-10) -> BoundaryPoint:
    """Recover the boundary point of a null vector.

    Rejects vectors that are not null to within `tol` of their norm
    scale.  A vector proportional to (1, 0, 0) maps to infinity.
    """
    scale = max(abs(lift.v1), abs(lift.v2), abs(lift.v3))
    if abs(lift.v2) <= tol * scale and abs(lift.v3) <= tol * scale:
        return INFINITY
    if abs(lift.v3) <= tol * scale:
        raise GeometryError("lift is not a null vector (vanishing third coordinate)")
    w1 = lift.v1 / lift.v3
    z = lift.v2 / lift.v3 / _SQRT2
    zz = z.real * z.real + z.imag * z.imag
    if abs(w1.real + zz) > tol * max(1.0, abs(w1), zz):
        raise GeometryError(
            f"lift is not a null vector (residual {w1.real + zz:.3e})")
    return BoundaryPoint(HeisPoint(z, w1.imag))


def _require_pairwise_distinct(points: tuple[BoundaryPoint, ...]) -> None:
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            a, b = points[i], points[j]
            if a.is_infinity and b.is_infinity:
                raise DegenerateConfiguration(
                    f"points {i + 1} and {j + 1} both sit at infinity")
            if a.is_infinity or b.is_infinity:
                continue
            if kc_distance(a.finite, b.finite) < REPEATED_POINT_TOL:
                raise DegenerateConfiguration(
                    f"points {i + 1} and {j + 1} coincide to within {REPEATED_POINT_TOL}")


def cartan_of_lifts(l1: Lift, l2: Lift, l3: Lift) -> float:
    """Angular invariant arg(-<l1,l2><l2,l3><l3,l1>), lift-scaling free."""
    product = -(hermitian(l1, l2) * hermitian(l2, l3) * hermitian(l3, l1))
    if product == 0:
        raise DegenerateConfiguration("Hermitian triple product vanishes")
    return cmath.phase(product)


def cartan_invariant(p1, p2, p3) -> float:
    """Cartan angular invariant of a boundary triple, in [-pi/2, pi/2].

    Zero exactly for triples on one R-circle, +-pi/2 exactly for triples
    on one C-circle; invariant under similarities, negated by the
    involution j and by odd permutations of the triple.
    """
    points = tuple(as_boundary(p) for p in (p1, p2, p3))
    _require_pairwise_distinct(points)
    return cartan_of_lifts(*(standard_lift(p) for p in points))


def cross_ratio_of_lifts(l1: Lift, l2: Lift, l3: Lift, l4: Lift) -> complex:
    num = hermitian(l3, l1) * hermitian(l4, l2)
    den = hermitian(l4, l1) * hermitian(l3, l2)
    if den == 0:
        raise DegenerateConfiguration("cross-ratio denominator vanishes")
    return num / den


def cross_ratio(p1, p2, p3, p4) -> complex:
    """Complex cross-ratio <p3,p1><p4,p2> / (<p4,p1><p3,p2>) of a quadruple.

    Independent of the lift choice and unchanged when one similarity is
    applied to all four points.  For finite points the square root of its
    modulus is the metric ratio d(p4,p2) d(p3,p1) / (d(p4,p1) d(p3,p2)).
    """
    points = tuple(as_boundary(p) for p in (p1, p2, p3, p4))
    _require_pairwise_distinct(points)
    return cross_ratio_of_lifts(*(standard_lift(p) for p in points))


@dataclass(frozen=True)
class CrossRatioTriple:
    """The three canonical cross-ratios of an ordered quadruple.

    They satisfy two real relations:

        |x3|^2 = |x2|^2 / |x1|^2                                     (1)
        2 |x1|^2 Re(x3) = |x1|^2 + |x2|^2 - 2 Re(x1) - 2 Re(x2) + 1  (2)
    """

    x1: complex
    x2: complex
    x3: complex

    def eq1_residual(self) -> float:
        return abs(self.x3) ** 2 - abs(self.x2) ** 2 / abs(self.x1) ** 2

    def eq1_scale(self) -> float:
        return abs(self.x3) ** 2 + abs(self.x2) ** 2 / abs(self.x1) ** 2 + 1.0

    def eq2_residual(self) -> float:
        lhs = 2.0 * abs(self.x1) ** 2 * self.x3.real
        rhs = (abs(self.x1) ** 2 + abs(self.x2) ** 2
               - 2.0 * self.x1.real - 2.0 * self.x2.real + 1.0)
        return lhs - rhs

    def eq2_scale(self) -> float:
        return (2.0 * abs(self.x1) ** 2 * abs(self.x3.real)
                + abs(self.x1) ** 2 + abs(self.x2) ** 2
                + 2.0 * abs(self.x1.real) + 2.0 * abs(self.x2.real) + 1.0)

    def args(self) -> tuple[float, float, float]:
        return (cmath.phase(self.x1), cmath.phase(self.x2), cmath.phase(self.x3))

    def validate(self, tol: float = 1e-10) -> None:
        if abs(self.eq1_residual()) > tol * self.eq1_scale():
            raise GeometryError(
                f"cross-ratio relation (1) violated: {self.eq1_residual():.3e}")
        if abs(self.eq2_residual()) > tol * self.eq2_scale():
            raise GeometryError(
                f"cross-ratio relation (2) violated: {self.eq2_residual():.3e}")

    def to_dict(self) -> dict:
        return {
            "x1": {"re": self.x1.real, "im": self.x1.imag},
            "x2": {"re": self.x2.real, "im": self.x2.imag},
            "x3": {"re": self.x3.real, "im": self.x3.imag},
            "eq1_residual": self.eq1_residual(),
            "eq2_residual": self.eq2_residual(),
        }


def cross_ratio_triple(p1, p2, p3, p4) -> CrossRatioTriple:
    """Cross-ratios of the quadruple under its three canonical orderings."""
    points = tuple(as_boundary(p) for p in (p1, p2, p3, p4))
    _require_pairwise_distinct(points)
    l1, l2, l3, l4 = (standard_lift(p) for p in points)
    return CrossRatioTriple(
        x1=cross_ratio_of_lifts(l1, l2, l3, l4),
        x2=cross_ratio_of_lifts(l1, l3, l2, l4),
        x3=cross_ratio_of_lifts(l2, l3, l1, l4),
    )


@dataclass(frozen=True)
class QuadrupleRelations:
    """Cartan invariants of a quadruple's four sub-triples vs. cross-ratio args.

    cartans = (A(p2,p3,p4), A(p1,p3,p4), A(p1,p2,p4), A(p1,p2,p3)) and
    args = (arg x1, arg x2, arg x3).  For quadruples not contained in one
    C-circle the residuals are the circle distances of the four identities

        arg x1 = A1 - A2,  arg x2 = -A2 - A4,  arg x3 = A4 - A1,
        A3 + A1 = A2 + A4.

    When every sub-triple sits on a C-circle the quadruple is flagged and
    no residuals are asserted.
    """

    cartans: tuple[float, float, float, float]
    args: tuple[float, float, float]
    residuals: tuple[float, float, float, float] | None
    all_on_c_circle: bool


def cartan_quadruple_relations(p1, p2, p3, p4,
                               c_circle_tol: float = 1e-8) -> QuadrupleRelations:
    points = tuple(as_boundary(p) for p in (p1, p2, p3, p4))
    _require_pairwise_distinct(points)
    lifts = [standard_lift(p) for p in points]
    a1 = cartan_of_lifts(lifts[1], lifts[2], lifts[3])
    a2 = cartan_of_lifts(lifts[0], lifts[2], lifts[3])
    a3 = cartan_of_lifts(lifts[0], lifts[1], lifts[3])
    a4 = cartan_of_lifts(lifts[0], lifts[1], lifts[2])
    args = cross_ratio_triple(*points).args()
    on_c = all(abs(abs(a) - math.pi / 2) <= c_circle_tol for a in (a1, a2, a3, a4))
    residuals = None
    if not on_c:
        residuals = (
            circle_distance(args[0], a1 - a2),
            circle_distance(args[1], -a2 - a4),
            circle_distance(args[2], a4 - a1),
            circle_distance(a3 + a1, a2 + a4),
        )
    return QuadrupleRelations((a1, a2, a3, a4), args, residuals, on_c)


def similarity_on_boundary(g: Similarity, p) -> BoundaryPoint:
    """Apply a similarity to a boundary point; infinity is fixed."""
    bp = as_boundary(p)
    if bp.is_infinity:
        return INFINITY
    return BoundaryPoint(apply_similarity(g, bp.finite))


def involution_on_boundary(p) -> BoundaryPoint:
    """The involution j on the boundary; infinity is fixed."""
    bp = as_boundary(p)
    if bp.is_infinity:
        return INFINITY
    return BoundaryPoint(involution_j(bp.finite))
