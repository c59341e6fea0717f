"""The first Heisenberg group as a metric space.

Points are pairs (z, t) with z complex and t real, multiplied by the
2-step nilpotent law (z,t) * (w,s) = (z+w, t+s+2 Im(z conj(w))).  The
gauge (|z|^4 + t^2)^(1/4) of a point induces a left-invariant metric.
Left translations, rotations about the vertical axis and the involution
(z,t) -> (conj(z), -t) preserve that metric; the dilations
(z,t) -> (r z, r^2 t) scale it by r.  Translations, rotations and
dilations together form the similarity group, stored here in the
canonical factored form translation o rotation o dilation.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass

from .errors import GeometryError


def wrap_angle(theta: float) -> float:
    """Reduce an angle to the principal branch (-pi, pi]."""
    w = math.remainder(theta, math.tau)
    if w <= -math.pi:
        w += math.tau
    return w


def circle_distance(alpha: float, beta: float) -> float:
    """Distance between two angles on the circle, in [0, pi]."""
    return abs(wrap_angle(alpha - beta))


def _require_finite(*values: float) -> bool:
    return all(math.isfinite(v) for v in values)


@dataclass(frozen=True)
class HeisPoint:
    """A point (z, t) of the Heisenberg group, z complex and t real."""

    z: complex
    t: float

    def __post_init__(self):
        z = complex(self.z)
        t = float(self.t)
        if not _require_finite(z.real, z.imag, t):
            raise GeometryError(f"coordinates must be finite, got z={z!r}, t={t!r}")
        object.__setattr__(self, "z", z)
        object.__setattr__(self, "t", t)

    def to_dict(self) -> dict:
        return {"re": self.z.real, "im": self.z.imag, "t": self.t}

    @classmethod
    def from_dict(cls, data: dict) -> "HeisPoint":
        return cls(complex(data["re"], data["im"]), data["t"])


ORIGIN = HeisPoint(0j, 0.0)


def heis_mul(p: HeisPoint, q: HeisPoint) -> HeisPoint:
    """Group product p * q."""
    return HeisPoint(p.z + q.z, p.t + q.t + 2.0 * (p.z * q.z.conjugate()).imag)


def heis_inv(p: HeisPoint) -> HeisPoint:
    """Group inverse, (z,t) -> (-z,-t)."""
    return HeisPoint(-p.z, -p.t)


def koranyi_gauge(p: HeisPoint) -> float:
    """Gauge (|z|^4 + t^2)^(1/4) of a point."""
    zz = p.z.real * p.z.real + p.z.imag * p.z.imag
    return math.sqrt(math.hypot(zz, p.t))


def kc_distance(p: HeisPoint, q: HeisPoint) -> float:
    """Gauge metric d(p, q) = |p^{-1} * q|."""
    return koranyi_gauge(heis_mul(heis_inv(p), q))


def rotate(p: HeisPoint, phi: float) -> HeisPoint:
    """Rotation about the vertical axis, (z,t) -> (z e^{i phi}, t)."""
    return HeisPoint(p.z * cmath.exp(1j * phi), p.t)


def involution_j(p: HeisPoint) -> HeisPoint:
    """The metric-preserving involution (z,t) -> (conj(z), -t)."""
    return HeisPoint(p.z.conjugate(), -p.t)


def heis_inversion(p: HeisPoint) -> HeisPoint:
    """Inversion (z,t) -> (z/(-|z|^2+it), -t/|-|z|^2+it|^2).

    An involution away from the origin.  It swaps the metric ball around
    the origin with its complement: d(R(p), R(q)) = d(p,q)/(d(p,o) d(q,o)).
    """
    if p.z == 0 and p.t == 0:
        raise GeometryError("inversion is singular at the origin")
    zz = p.z.real * p.z.real + p.z.imag * p.z.imag
    den = complex(-zz, p.t)
    den_sq = den.real * den.real + den.imag * den.imag
    return HeisPoint(p.z / den, -p.t / den_sq)


@dataclass(frozen=True)
class Similarity:
    """Element of the similarity group, in the canonical factored form.

    Acts as p -> translation * (dilation e^{i rotation} z, dilation^2 t),
    i.e. dilation first, then rotation, then left translation.  The
    rotation is stored wrapped to (-pi, pi] and the dilation must be
    strictly positive, so equal group elements compare equal.
    """

    translation: HeisPoint = ORIGIN
    rotation: float = 0.0
    dilation: float = 1.0

    def __post_init__(self):
        rot = float(self.rotation)
        dil = float(self.dilation)
        if not _require_finite(rot, dil) or dil <= 0.0:
            raise GeometryError(f"dilation must be finite and positive, got {dil!r}")
        object.__setattr__(self, "rotation", wrap_angle(rot))
        object.__setattr__(self, "dilation", dil)

    @classmethod
    def identity(cls) -> "Similarity":
        return cls()

    def linear(self, p: HeisPoint) -> HeisPoint:
        """The rotation-dilation part alone, a group automorphism."""
        return HeisPoint(self.dilation * cmath.exp(1j * self.rotation) * p.z,
                         self.dilation * self.dilation * p.t)


IDENTITY = Similarity()


def apply_similarity(g: Similarity, p: HeisPoint) -> HeisPoint:
    return heis_mul(g.translation, g.linear(p))


def compose_similarities(g: Similarity, h: Similarity) -> Similarity:
    """The element acting as h followed by g, renormalized.

    Since the rotation-dilation part is an automorphism, pulling h's
    translation through g's linear part gives the canonical factorization
    of the composite.
    """
    return Similarity(
        translation=heis_mul(g.translation, g.linear(h.translation)),
        rotation=wrap_angle(g.rotation + h.rotation),
        dilation=g.dilation * h.dilation,
    )


def similarity_inverse(g: Similarity) -> Similarity:
    inv = Similarity(rotation=-g.rotation, dilation=1.0 / g.dilation)
    return Similarity(
        translation=inv.linear(heis_inv(g.translation)),
        rotation=inv.rotation,
        dilation=inv.dilation,
    )


def random_similarity(rng: random.Random,
                      translation_scale: float = 3.0,
                      dilation_range: tuple[float, float] = (0.1, 10.0),
                      isometry: bool = False) -> Similarity:
    """Draw a bounded random similarity from an explicit RNG.

    Translation coordinates are uniform in a box of the given scale
    (gauge stays below ~1.5 * scale), the rotation is uniform, and the
    dilation is log-uniform over `dilation_range` unless `isometry` is
    set, which pins it to 1.
    """
    z = complex(rng.uniform(-translation_scale, translation_scale),
                rng.uniform(-translation_scale, translation_scale))
    t = rng.uniform(-translation_scale ** 2, translation_scale ** 2)
    phi = rng.uniform(-math.pi, math.pi)
    if isometry:
        r = 1.0
    else:
        lo, hi = dilation_range
        r = math.exp(rng.uniform(math.log(lo), math.log(hi)))
    return Similarity(HeisPoint(z, t), phi, r)
