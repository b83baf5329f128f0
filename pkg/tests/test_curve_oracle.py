"""Elliptic-curve oracle: enumeration, group law, realization of the model."""

import random

import pytest

from z2covers.construction import construct_family, single_torsion_mutations
from z2covers.curve_oracle import (
    Assignment,
    CurveOverFp,
    CurvePoint,
    INFINITY,
    coefficient_bound,
    find_assignment,
    is_prime,
    realize,
)


def naive_point_count(p, a, b):
    """Independent recount by scanning all (x, y) pairs."""
    count = 1
    for x in range(p):
        for y in range(p):
            if (y * y - (x * x * x + a * x + b)) % p == 0:
                count += 1
    return count


class TestCurveBasics:
    def test_is_prime(self):
        assert [n for n in range(2, 30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]

    def test_singular_curve_rejected(self):
        with pytest.raises(ValueError):
            CurveOverFp(5, 0, 0)

    def test_composite_modulus_rejected(self):
        with pytest.raises(ValueError):
            CurveOverFp(9, 1, 1)

    @pytest.mark.parametrize("p", [5, 7])
    def test_point_count_matches_naive_scan(self, p):
        curve = CurveOverFp(p, -1, 0)
        assert curve.order() == naive_point_count(p, -1, 0)
        assert curve.order() == 8

    def test_full_two_torsion_when_the_cubic_splits(self):
        curve = CurveOverFp(7, -1, 0)
        assert curve.has_full_two_torsion()
        assert len(curve.two_torsion_points()) == 4

    @pytest.mark.parametrize("p,a,b", [(7, -1, 0), (11, -1, 0), (13, 2, 3), (19, -1, 0), (23, 1, 1)])
    def test_full_two_torsion_forces_order_divisible_by_four(self, p, a, b):
        curve = CurveOverFp(p, a, b)
        if curve.has_full_two_torsion():
            assert curve.order() % 4 == 0


class TestGroupLaw:
    def setup_method(self):
        self.curve = CurveOverFp(7, -1, 0)

    def test_infinity_is_neutral(self):
        for point in self.curve.points():
            assert self.curve.add(point, INFINITY) == point
            assert self.curve.add(INFINITY, point) == point

    def test_opposite_points_cancel(self):
        for point in self.curve.points():
            assert self.curve.add(point, self.curve.negate(point)) == INFINITY

    def test_doubling_a_two_torsion_point_gives_infinity(self):
        for point in self.curve.two_torsion_points():
            assert self.curve.double(point) == INFINITY

    def test_associativity_on_random_triples(self):
        curve = CurveOverFp(499, -1, 0)
        points = curve.points()
        rng = random.Random(7)
        for _ in range(60):
            p1, p2, p3 = (points[rng.randrange(len(points))] for _ in range(3))
            left = curve.add(curve.add(p1, p2), p3)
            right = curve.add(p1, curve.add(p2, p3))
            assert left == right

    def test_scale_matches_repeated_addition(self):
        point = next(pt for pt in self.curve.points() if not pt.is_infinity)
        running = INFINITY
        for k in range(10):
            assert self.curve.scale(k, point) == running
            running = self.curve.add(running, point)
        assert self.curve.scale(-3, point) == self.curve.negate(self.curve.scale(3, point))

    def test_group_order_annihilates_every_point(self):
        n = self.curve.order()
        for point in self.curve.points():
            assert self.curve.scale(n, point) == INFINITY


class TestGroupStructure:
    def test_invariant_factors_multiply_to_the_order(self):
        for p in (7, 11, 499):
            curve = CurveOverFp(p, -1, 0)
            n, (d1, d2) = curve.group_structure()
            assert d1 * d2 == n
            assert d2 % d1 == 0
            assert any(curve.point_order(pt) == d2 for pt in curve.points())
            for point in curve.points():
                assert curve.scale(d2, point) == INFINITY

    def test_point_order_matches_naive_orbit(self):
        curve = CurveOverFp(7, -1, 0)
        for point in curve.points():
            running, order = point, 1
            while running != INFINITY:
                running = curve.add(running, point)
                order += 1
            assert curve.point_order(point) == order

    def test_enumeration_bound(self):
        big = CurveOverFp(10_007, -1, 0)
        with pytest.raises(ValueError):
            big.points()


class TestRealization:
    def setup_method(self):
        self.bd = construct_family(3)
        self.curve = CurveOverFp(2003, -1, 0)
        self.assignment = find_assignment(self.bd, self.curve)

    def test_valid_data_realizes_cleanly(self):
        report = realize(self.bd, self.curve, self.assignment)
        assert report.ok
        assert report.relations_checked == 28
        assert report.injective
        assert report.torsion_faithful

    def test_every_mutation_is_rejected_on_the_curve(self):
        for _, _, mutant in single_torsion_mutations(self.bd):
            report = realize(mutant, self.curve, self.assignment)
            assert not report.ok
            assert report.relation_failures

    def test_torsion_image_of_wrong_order_is_an_error(self):
        small = CurveOverFp(7, -1, 0)
        order_four = next(
            pt for pt in small.points() if small.point_order(pt) == 4
        )
        order_two = next(
            pt for pt in small.points() if small.point_order(pt) == 2
        )
        bd = construct_family(2)
        assignment = Assignment((INFINITY,) * 5, (order_four, order_two))
        with pytest.raises(ValueError):
            realize(bd, small, assignment)

    def test_collapsing_everything_to_infinity_reports_collisions(self):
        spec = self.bd.group_spec
        assignment = Assignment(
            (INFINITY,) * spec.rank, (INFINITY,) * len(spec.torsion_orders)
        )
        report = realize(self.bd, self.curve, assignment)
        assert not report.ok
        assert not report.injective
        assert report.collisions
        assert not report.torsion_faithful

    def test_point_off_the_curve_is_an_error(self):
        bad = Assignment(
            (CurvePoint(1, 1),) * self.bd.group_spec.rank,
            self.assignment.torsion_points,
        )
        with pytest.raises(ValueError):
            realize(self.bd, self.curve, bad)

    def test_small_cyclic_factor_is_refused(self):
        small = CurveOverFp(11, -1, 0)
        with pytest.raises(ValueError):
            find_assignment(self.bd, small)

    def test_coefficient_bound_reflects_the_data(self):
        assert coefficient_bound(self.bd) == 2 * 3
