"""Equidistant triples and their angle parametrization.

A triple of Heisenberg points is equidistant when its three pairwise
gauge distances agree.  Attaching to a triple (p1, p2, p3) the quadruple
(p1, oo, p2, p3) and taking the arguments (a, b, c) of its three
canonical cross-ratios gives a complete similarity invariant: the moduli
are all 1 exactly for equidistant triples, the arguments then satisfy

    cos a + cos b + cos c = 3/2,

and every solution of that equation in the central cube
[-2pi/3, 2pi/3]^3 is hit by exactly one similarity class (two classes at
the C-circle locus (+-pi/3, +-pi/3, +-pi/3), where the map is 2-1 and
the class is reported via the triple classification instead).

The inverse construction builds a unit-side triple with p2 at the
origin.  Writing 2 eta = arg(1 - e^{ia} - e^{ib}), a1 = (a-b-c)/2 and
a4 = (a-b+c)/2, the lifts

    (-e^{-ia/2},   sqrt(2 cos a4) e^{-i eta},  e^{i(c-b)/2})   -> p1
    ( e^{i(b+c)/2}, sqrt(2 cos a1) e^{i eta}, -e^{ia/2})       -> p3

normalize to the two nonzero vertices.  The quantity
4 cos(a1) cos(a4) = |1 - e^{ia} - e^{ib}|^2 vanishes exactly on the four
exceptional angle triples B = (+-pi/3, -+pi/3, +-pi/3), where explicit
lifts are used for one representative and the remaining three are
reached through the involution j and the triple reversal.  All point
coordinates come from projectively normalizing lifts (third homogeneous
coordinate to 1), never from closed-form point displays.
"""

from __future__ import annotations

import cmath
import enum
import math
import random
from dataclasses import dataclass

from .boundary import (
    INFINITY,
    Lift,
    boundary_point_from_lift,
    cartan_invariant,
    cross_ratio_triple,
)
from .errors import DegenerateConfiguration, GeometryError, NotEquidistant, OffSurface
from .heisenberg import (
    ORIGIN,
    HeisPoint,
    apply_similarity,
    circle_distance,
    involution_j,
    kc_distance,
    random_similarity,
    wrap_angle,
)

CUBE_BOUND = 2.0 * math.pi / 3.0

_PI_3 = math.pi / 3.0
_SQRT3 = math.sqrt(3.0)

# The generic construction divides by quantities vanishing exactly on B.
B_DETECTION_TOL = 1e-9
B_ROUTING_TOL = 1e-6
DEGENERATE_GAUGE_SQ = 1e-18

#: Angle triples where the generic construction degenerates.
B_POINTS = (
    (_PI_3, -_PI_3, _PI_3),
    (_PI_3, -_PI_3, -_PI_3),
    (-_PI_3, _PI_3, _PI_3),
    (-_PI_3, _PI_3, -_PI_3),
)


def surface_residual(a: float, b: float, c: float) -> float:
    """cos(a) + cos(b) + cos(c) - 3/2."""
    return math.cos(a) + math.cos(b) + math.cos(c) - 1.5


class TripleClass(enum.Enum):
    GENERIC = "generic"
    C_CIRCLE = "ccircle"
    R_CIRCLE = "rcircle"


@dataclass(frozen=True)
class SurfacePoint:
    """A point (a, b, c) of the angle hypersurface."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        for name in ("a", "b", "c"):
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise GeometryError(f"angle {name} must be finite")
            object.__setattr__(self, name, v)

    @property
    def angles(self) -> tuple[float, float, float]:
        return (self.a, self.b, self.c)

    @property
    def residual(self) -> float:
        return surface_residual(self.a, self.b, self.c)

    def reduced(self) -> "SurfacePoint":
        """Translate by multiples of 2pi into the central cube's range."""
        return SurfacePoint(wrap_angle(self.a), wrap_angle(self.b), wrap_angle(self.c))

    def validate(self, tol: float = 1e-9) -> None:
        res = self.residual
        if abs(res) > tol:
            raise OffSurface(
                f"angles ({self.a}, {self.b}, {self.c}) miss the surface "
                f"equation by {res:.6g}", residual=res)
        # On the surface each cosine is >= -1/2, so wrapped angles stay in
        # the central cube up to tolerance smear.
        slack = max(1e-12, 2.0 * tol)
        for name, v in zip(("a", "b", "c"), self.angles):
            if abs(v) > CUBE_BOUND + slack:
                raise OffSurface(
                    f"angle {name}={v} lies outside the central cube", residual=res)

    def triple_class(self, tol: float = 1e-8) -> TripleClass:
        """Class of the similarity orbit this point parametrizes.

        The angle sum doubles the (negated) Cartan invariant of any
        representing triple, so the C-circle locus is the sum pi and the
        R-circle locus the sum 0, both mod 2pi.
        """
        total = self.a + self.b + self.c
        if circle_distance(total, 0.0) <= 2.0 * tol:
            return TripleClass.R_CIRCLE
        if circle_distance(total, math.pi) <= 2.0 * tol:
            return TripleClass.C_CIRCLE
        return TripleClass.GENERIC

    def to_dict(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "c": self.c,
            "residual": self.residual,
            "class": self.triple_class().value,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SurfacePoint":
        return cls(data["a"], data["b"], data["c"])


@dataclass(frozen=True)
class EquidistantTriple:
    """Three pairwise distinct Heisenberg points with equal mutual distances."""

    p1: HeisPoint
    p2: HeisPoint
    p3: HeisPoint

    @property
    def points(self) -> tuple[HeisPoint, HeisPoint, HeisPoint]:
        return (self.p1, self.p2, self.p3)

    def distances(self) -> tuple[float, float, float]:
        return (kc_distance(self.p1, self.p2),
                kc_distance(self.p2, self.p3),
                kc_distance(self.p3, self.p1))

    def spread(self) -> float:
        """Relative disagreement of the three distances."""
        d12, d23, d31 = self.distances()
        return max(abs(d12 - d23), abs(d23 - d31)) / d12

    def validate(self, tol: float = 1e-9) -> None:
        if not is_equidistant(self, tol):
            raise NotEquidistant(
                f"pairwise distances disagree by a relative {self.spread():.3e}",
                spread=self.spread())

    def transform(self, g) -> "EquidistantTriple":
        return EquidistantTriple(*(apply_similarity(g, p) for p in self.points))

    def to_dict(self) -> dict:
        return {"p1": self.p1.to_dict(), "p2": self.p2.to_dict(), "p3": self.p3.to_dict()}

    @classmethod
    def from_dict(cls, data: dict) -> "EquidistantTriple":
        return cls(*(HeisPoint.from_dict(data[k]) for k in ("p1", "p2", "p3")))


def _as_triple(triple) -> EquidistantTriple:
    if isinstance(triple, EquidistantTriple):
        return triple
    p1, p2, p3 = triple
    return EquidistantTriple(p1, p2, p3)


def is_equidistant(triple, tol: float = 1e-9) -> bool:
    """Whether the three pairwise distances agree to a relative `tol`."""
    t = _as_triple(triple)
    d12, d23, d31 = t.distances()
    if min(d12, d23, d31) < 1e-12:
        raise DegenerateConfiguration("triple contains repeated points")
    return abs(d12 - d23) <= tol * d12 and abs(d23 - d31) <= tol * d12


def abc_from_triple(triple, tol: float = 1e-9) -> SurfacePoint:
    """Angle invariant (a, b, c) of an equidistant triple.

    Arguments of the three cross-ratios of (p1, oo, p2, p3).  Constant on
    similarity orbits, and the result lands on the surface
    cos a + cos b + cos c = 3/2 inside the central cube.
    """
    t = _as_triple(triple)
    if not is_equidistant(t, tol):
        raise NotEquidistant(
            f"not equidistant: relative distance spread {t.spread():.3e} "
            f"exceeds {tol:.1e}", spread=t.spread())
    crt = cross_ratio_triple(t.p1, INFINITY, t.p2, t.p3)
    return SurfacePoint(*crt.args())


@dataclass(frozen=True)
class ConstructionAngles:
    """Derived angles feeding the inverse construction.

    Off the exceptional set, 4 cos(a1) cos(a4) = |1 - e^{ia} - e^{ib}|^2
    is strictly positive and eta is half the argument of that complex
    quantity on the principal branch.  The other eta branch differs by
    the half-turn rotation, so both choices give similar triples.
    """

    a1: float
    a4: float
    eta: float
    in_b_set: bool


def _nearest_b_point(s: SurfacePoint) -> tuple[tuple[float, float, float], float]:
    best = None
    best_dist = math.inf
    for b in B_POINTS:
        dist = max(circle_distance(x, y) for x, y in zip(s.angles, b))
        if dist < best_dist:
            best, best_dist = b, dist
    return best, best_dist


def construction_angles(s: SurfacePoint, tol: float = 1e-9) -> ConstructionAngles:
    s = s.reduced()
    s.validate(tol)
    _, b_dist = _nearest_b_point(s)
    eta = cmath.phase(1.0 - cmath.exp(1j * s.a) - cmath.exp(1j * s.b)) / 2.0
    return ConstructionAngles(
        a1=(s.a - s.b - s.c) / 2.0,
        a4=(s.a - s.b + s.c) / 2.0,
        eta=eta,
        in_b_set=b_dist <= B_DETECTION_TOL,
    )


def _finite_from_lift(lift: Lift) -> HeisPoint:
    return boundary_point_from_lift(lift).finite


# Explicit lifts for the exceptional representative (pi/3, -pi/3, pi/3);
# p2 stays at the origin.
_B_LIFT_P1 = Lift(complex(-_SQRT3 / 2.0, 0.5), 0j, complex(0.5, _SQRT3 / 2.0))
_B_LIFT_P3 = Lift(1 + 0j, complex(3.0 ** 0.25, 0.0), complex(-_SQRT3 / 2.0, -0.5))


def _b_case_triple(b_point: tuple[float, float, float]) -> EquidistantTriple:
    p1 = _finite_from_lift(_B_LIFT_P1)
    p3 = _finite_from_lift(_B_LIFT_P3)
    a, _, c = b_point
    # Reversing the triple maps (a, b, c) to (-b, -a, -c), which at the
    # exceptional points flips c alone; j negates all three angles.
    if a > 0 and c > 0:
        points = (p1, ORIGIN, p3)
    elif a > 0 and c < 0:
        points = (p3, ORIGIN, p1)
    elif a < 0 and c < 0:
        points = (involution_j(p1), ORIGIN, involution_j(p3))
    else:
        points = (involution_j(p3), ORIGIN, involution_j(p1))
    return EquidistantTriple(*points)


def triple_from_abc(s: SurfacePoint, tol: float = 1e-9) -> EquidistantTriple:
    """Unit-side equidistant triple realizing the given surface angles.

    The result has p2 at the origin and all pairwise distances 1, and
    abc_from_triple maps it back to `s`.  Angles are first reduced mod
    2pi into the central cube; inputs off the surface are rejected.
    """
    s = s.reduced()
    s.validate(tol)
    ang = construction_angles(s, tol)
    if ang.in_b_set:
        return _b_case_triple(_nearest_b_point(s)[0])
    gauge_sq = 4.0 * math.cos(ang.a1) * math.cos(ang.a4)
    if gauge_sq < DEGENERATE_GAUGE_SQ:
        nearest, dist = _nearest_b_point(s)
        if dist <= B_ROUTING_TOL:
            return _b_case_triple(nearest)
        raise DegenerateConfiguration(
            f"construction degenerates at ({s.a}, {s.b}, {s.c}): "
            f"4 cos(a1) cos(a4) = {gauge_sq:.3e}")
    cos_a1 = math.cos(ang.a1)
    cos_a4 = math.cos(ang.a4)
    if cos_a1 <= 0.0 or cos_a4 <= 0.0:
        raise DegenerateConfiguration(
            "angles lie outside the central component of the surface")
    lift1 = Lift(
        -cmath.exp(-0.5j * s.a),
        math.sqrt(2.0 * cos_a4) * cmath.exp(-1j * ang.eta),
        cmath.exp(0.5j * (s.c - s.b)),
    )
    lift3 = Lift(
        cmath.exp(0.5j * (s.b + s.c)),
        math.sqrt(2.0 * cos_a1) * cmath.exp(1j * ang.eta),
        -cmath.exp(0.5j * s.a),
    )
    return EquidistantTriple(_finite_from_lift(lift1), ORIGIN, _finite_from_lift(lift3))


def classify_triple(triple, tol: float = 1e-8,
                    equidistant_tol: float = 1e-9) -> TripleClass:
    """Sort an equidistant triple by the circle type it spans.

    The Cartan invariant of the triple decides: 0 means an R-circle,
    +-pi/2 a C-circle (equivalently, angles at (+-pi/3, +-pi/3, +-pi/3)),
    anything else is generic.
    """
    t = _as_triple(triple)
    t.validate(equidistant_tol)
    a = cartan_invariant(t.p1, t.p2, t.p3)
    if abs(a) <= tol:
        return TripleClass.R_CIRCLE
    if abs(abs(a) - math.pi / 2.0) <= tol:
        return TripleClass.C_CIRCLE
    return TripleClass.GENERIC


def random_surface_point(rng: random.Random) -> SurfacePoint:
    """Uniform (a, b) over the admissible square patch, random sign for c."""
    while True:
        a = rng.uniform(-CUBE_BOUND, CUBE_BOUND)
        b = rng.uniform(-CUBE_BOUND, CUBE_BOUND)
        v = 1.5 - math.cos(a) - math.cos(b)
        if v > 1.0:
            continue
        c = math.copysign(math.acos(v), rng.uniform(-1.0, 1.0))
        return SurfacePoint(a, b, c)


def random_equidistant_triple(seed: int | None = None,
                              with_similarity: bool = True,
                              rng: random.Random | None = None) -> EquidistantTriple:
    """Reproducible random equidistant triple.

    Draws a random surface point, runs the inverse construction and, by
    default, moves the normalized triple by a bounded random similarity.
    """
    if rng is None:
        rng = random.Random(seed)
    while True:
        try:
            triple = triple_from_abc(random_surface_point(rng))
        except GeometryError:
            continue
        if with_similarity:
            triple = triple.transform(random_similarity(rng))
        return triple
