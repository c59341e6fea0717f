import cmath
import math
import random

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from heistriples import (
    DegenerateConfiguration,
    GeometryError,
    HeisPoint,
    INFINITY,
    Lift,
    BoundaryPoint,
    boundary_point_from_lift,
    cartan_invariant,
    cartan_of_lifts,
    cartan_quadruple_relations,
    circle_distance,
    cross_ratio,
    cross_ratio_of_lifts,
    cross_ratio_triple,
    hermitian,
    involution_j,
    involution_on_boundary,
    kc_distance,
    random_similarity,
    similarity_on_boundary,
    standard_lift,
)

from strategies import heis_points, point_tuples

nonzero_scalars = st.builds(
    complex,
    st.floats(min_value=-3, max_value=3, allow_nan=False),
    st.floats(min_value=-3, max_value=3, allow_nan=False),
).filter(lambda z: abs(z) > 0.1)


class TestLifts:
    def test_origin_and_infinity(self):
        assert standard_lift(HeisPoint(0j, 0)) == Lift(0j, 0j, 1 + 0j)
        assert standard_lift(INFINITY) == Lift(1 + 0j, 0j, 0j)

    def test_unit_horizontal_point(self):
        lift = standard_lift(HeisPoint(1 + 0j, 0))
        assert lift.v1 == -1 + 0j
        assert lift.v2 == pytest.approx(math.sqrt(2))
        assert lift.v3 == 1 + 0j

    @given(heis_points)
    def test_lifts_are_null(self, p):
        assert standard_lift(p).null_residual() < 1e-10

    @given(heis_points)
    def test_lift_round_trip(self, p):
        bp = boundary_point_from_lift(standard_lift(p))
        assert not bp.is_infinity
        assert abs(bp.finite.z - p.z) < 1e-12 * max(1.0, abs(p.z))
        assert abs(bp.finite.t - p.t) < 1e-12 * max(1.0, abs(p.t))

    @given(heis_points, nonzero_scalars)
    def test_scaled_lift_round_trip(self, p, scale):
        bp = boundary_point_from_lift(standard_lift(p).scaled(scale))
        assert abs(bp.finite.z - p.z) < 1e-9 * max(1.0, abs(p.z))

    def test_infinity_from_lift(self):
        assert boundary_point_from_lift(Lift(2 - 1j, 0j, 0j)).is_infinity

    def test_non_null_rejected(self):
        with pytest.raises(GeometryError):
            boundary_point_from_lift(Lift(0j, 1 + 0j, 0j))
        with pytest.raises(GeometryError):
            boundary_point_from_lift(Lift(1 + 0j, 1 + 0j, 1 + 0j))

    def test_zero_vector_rejected(self):
        with pytest.raises(GeometryError):
            Lift(0j, 0j, 0j)

    def test_serialization(self):
        lift = Lift(1 - 2j, 0.5j, 3 + 0j)
        assert Lift.from_dict(lift.to_dict()) == lift


class TestHermitianForm:
    def test_distinguished_pairings(self):
        o = standard_lift(HeisPoint(0j, 0))
        inf = standard_lift(INFINITY)
        assert hermitian(o, inf) == 1 + 0j

    @given(heis_points)
    def test_finite_against_infinity(self, p):
        assert hermitian(standard_lift(p), standard_lift(INFINITY)) == 1 + 0j

    @given(heis_points)
    def test_self_pairing_vanishes(self, p):
        lift = standard_lift(p)
        scale = abs(lift.v1) ** 2 + abs(lift.v2) ** 2 + 1.0
        assert abs(hermitian(lift, lift)) <= 1e-12 * scale

    @given(heis_points, heis_points)
    def test_conjugate_symmetry(self, p, q):
        u, w = standard_lift(p), standard_lift(q)
        h, hc = hermitian(u, w), hermitian(w, u).conjugate()
        assert abs(h - hc) <= 1e-14 * max(1.0, abs(h))

    @given(heis_points, heis_points)
    def test_modulus_is_squared_distance(self, p, q):
        assume(kc_distance(p, q) > 1e-3)
        h = hermitian(standard_lift(p), standard_lift(q))
        assert abs(h) == pytest.approx(kc_distance(p, q) ** 2, rel=1e-11)


class TestCartanInvariant:
    def test_vertical_axis_example(self):
        a = cartan_invariant(HeisPoint(0j, 0), HeisPoint(0j, 1), HeisPoint(0j, -1))
        assert a == pytest.approx(math.pi / 2, abs=1e-14)

    def test_real_axis_example(self):
        a = cartan_invariant(HeisPoint(0j, 0), HeisPoint(1 + 0j, 0), HeisPoint(-1 + 0j, 0))
        assert a == pytest.approx(0.0, abs=1e-14)

    @given(point_tuples(3))
    def test_range(self, pts):
        a = cartan_invariant(*pts)
        assert abs(a) <= math.pi / 2 + 1e-12

    @given(point_tuples(3))
    def test_permutations_agree_up_to_sign(self, pts):
        a = cartan_invariant(*pts)
        swapped = cartan_invariant(pts[1], pts[0], pts[2])
        cycled = cartan_invariant(pts[1], pts[2], pts[0])
        assert abs(abs(swapped) - abs(a)) < 1e-9
        assert abs(cycled - a) < 1e-9

    @given(point_tuples(3), nonzero_scalars, nonzero_scalars, nonzero_scalars)
    def test_lift_scaling_invariance(self, pts, s1, s2, s3):
        lifts = [standard_lift(p) for p in pts]
        a = cartan_of_lifts(*lifts)
        scaled = cartan_of_lifts(lifts[0].scaled(s1), lifts[1].scaled(s2),
                                 lifts[2].scaled(s3))
        assert circle_distance(a, scaled) < 1e-12 * max(1.0, abs(a))

    def test_similarity_invariance_with_dilation(self):
        rng = random.Random(41)
        for _ in range(200):
            pts = _random_distinct_points(rng, 3)
            g = random_similarity(rng)
            a = cartan_invariant(*pts)
            moved = [similarity_on_boundary(g, BoundaryPoint(p)) for p in pts]
            assert circle_distance(cartan_invariant(*moved), a) < 1e-10

    @given(point_tuples(3))
    def test_involution_negates(self, pts):
        a = cartan_invariant(*pts)
        aj = cartan_invariant(*(involution_j(p) for p in pts))
        assert abs(aj + a) < 1e-10

    def test_vertical_axis_triples_are_c_circle(self):
        rng = random.Random(3)
        for _ in range(50):
            ts = rng.sample(range(-100, 100), 3)
            pts = [HeisPoint(0j, t / 7.0) for t in ts]
            assert abs(abs(cartan_invariant(*pts)) - math.pi / 2) < 1e-10

    def test_real_axis_triples_are_r_circle(self):
        rng = random.Random(4)
        for _ in range(50):
            xs = rng.sample(range(-100, 100), 3)
            pts = [HeisPoint(complex(x / 9.0, 0.0), 0.0) for x in xs]
            assert abs(cartan_invariant(*pts)) < 1e-10

    def test_repeated_points_rejected(self):
        p = HeisPoint(1 + 1j, 2.0)
        with pytest.raises(DegenerateConfiguration):
            cartan_invariant(p, p, HeisPoint(0j, 0))
        with pytest.raises(DegenerateConfiguration):
            cartan_invariant(INFINITY, INFINITY, BoundaryPoint(p))


def _random_distinct_points(rng, n, min_distance=1e-2):
    while True:
        pts = [HeisPoint(complex(rng.uniform(-3, 3), rng.uniform(-3, 3)),
                         rng.uniform(-9, 9)) for _ in range(n)]
        if all(kc_distance(pts[i], pts[j]) > min_distance
               for i in range(n) for j in range(i + 1, n)):
            return pts


class TestCrossRatio:
    def test_vertical_axis_quadruple_is_real(self):
        q = (HeisPoint(0j, 1), INFINITY, HeisPoint(0j, 2), HeisPoint(0j, 3))
        x = cross_ratio(*q)
        assert x.imag == pytest.approx(0.0, abs=1e-14)
        assert x == pytest.approx(0.5)

    @given(point_tuples(4))
    def test_modulus_sqrt_is_distance_ratio(self, pts):
        p1, p2, p3, p4 = pts
        x = cross_ratio(p1, p2, p3, p4)
        ratio = (kc_distance(p4, p2) * kc_distance(p3, p1)
                 / (kc_distance(p4, p1) * kc_distance(p3, p2)))
        assert math.sqrt(abs(x)) == pytest.approx(ratio, rel=1e-10)

    def test_similarity_invariance(self):
        rng = random.Random(11)
        for _ in range(200):
            pts = [BoundaryPoint(p) for p in _random_distinct_points(rng, 3)]
            pts.insert(rng.randrange(4), INFINITY)
            g = random_similarity(rng)
            x = cross_ratio(*pts)
            moved = [similarity_on_boundary(g, p) for p in pts]
            assert abs(cross_ratio(*moved) - x) < 1e-10 * max(1.0, abs(x))

    @given(point_tuples(4), nonzero_scalars, nonzero_scalars)
    def test_lift_scaling_invariance(self, pts, s1, s2):
        lifts = [standard_lift(p) for p in pts]
        x = cross_ratio_of_lifts(*lifts)
        scaled = cross_ratio_of_lifts(lifts[0].scaled(s1), lifts[1].scaled(s2),
                                      lifts[2], lifts[3])
        assert abs(scaled - x) < 1e-12 * max(1.0, abs(x))

    def test_repeated_points_rejected(self):
        p = HeisPoint(1 + 0j, 0)
        q = HeisPoint(0j, 1)
        with pytest.raises(DegenerateConfiguration):
            cross_ratio(p, p, q, HeisPoint(2j, 0))


class TestCrossRatioTriple:
    @given(point_tuples(4))
    def test_variety_equations_finite(self, pts):
        cross_ratio_triple(*pts).validate(tol=1e-10)

    def test_variety_equations_with_infinity(self):
        rng = random.Random(23)
        for k in range(200):
            pts = [BoundaryPoint(p) for p in _random_distinct_points(rng, 3)]
            pts.insert(k % 4, INFINITY)
            cross_ratio_triple(*pts).validate(tol=1e-10)

    def test_c_circle_quadruple_lands_on_real_slice(self):
        crt = cross_ratio_triple(HeisPoint(0j, 1), INFINITY,
                                 HeisPoint(0j, 2), HeisPoint(0j, 3))
        assert crt.x1.imag == pytest.approx(0.0, abs=1e-13)
        assert crt.x2.imag == pytest.approx(0.0, abs=1e-13)
        assert (crt.x1 + crt.x2).real == pytest.approx(1.0, rel=1e-12)
        assert crt.x1 == pytest.approx(0.5) and crt.x2 == pytest.approx(0.5)
        assert crt.x3 == pytest.approx(-1.0)

    def test_serialization_carries_residuals(self):
        crt = cross_ratio_triple(HeisPoint(1 + 0j, 0), INFINITY,
                                 HeisPoint(0j, 1), HeisPoint(-1 + 1j, 2))
        data = crt.to_dict()
        assert set(data) == {"x1", "x2", "x3", "eq1_residual", "eq2_residual"}
        assert abs(data["eq1_residual"]) <= 1e-10 * crt.eq1_scale()


class TestQuadrupleRelations:
    @settings(max_examples=50)
    @given(point_tuples(4))
    def test_relations_hold(self, pts):
        report = cartan_quadruple_relations(*pts)
        assume(not report.all_on_c_circle)
        assert report.residuals is not None
        assert max(report.residuals) < 1e-9

    def test_relations_hold_with_infinity(self):
        rng = random.Random(57)
        for k in range(200):
            pts = [BoundaryPoint(p) for p in _random_distinct_points(rng, 3)]
            pts.insert(k % 4, INFINITY)
            report = cartan_quadruple_relations(*pts)
            assert not report.all_on_c_circle
            assert max(report.residuals) < 1e-9

    def test_all_c_circle_is_reported_not_asserted(self):
        report = cartan_quadruple_relations(
            HeisPoint(0j, 1), INFINITY, HeisPoint(0j, 2), HeisPoint(0j, 3))
        assert report.all_on_c_circle
        assert report.residuals is None
        for a in report.cartans:
            assert abs(abs(a) - math.pi / 2) < 1e-10


class TestBoundaryHelpers:
    def test_involution_fixes_infinity(self):
        assert involution_on_boundary(INFINITY).is_infinity

    def test_similarity_fixes_infinity(self):
        g = random_similarity(random.Random(1))
        assert similarity_on_boundary(g, INFINITY).is_infinity

    def test_boundary_point_serialization(self):
        p = BoundaryPoint(HeisPoint(1 - 1j, 4.0))
        assert BoundaryPoint.from_dict(p.to_dict()) == p
        assert BoundaryPoint.from_dict(INFINITY.to_dict()).is_infinity
