"""Invariant formulas, canonical system, canonical map degree."""

from dataclasses import replace

import pytest

from z2covers.abgroup import GroupSpec
from z2covers.characters import Character, CoverElement, nontrivial_characters
from z2covers.construction import construct_etale, construct_family
from z2covers.cover import BuildingData, EllipticFiber, verify_relations
from z2covers.invariants import (
    canonical_map_degree,
    canonical_system,
    compute_invariants,
    minimality_evidence,
)
from z2covers.picard import CurveClass, PointOnP1, SurfaceClass, elliptic_fiber_class


def chi(s):
    return Character.from_string(s)


def sigma(s):
    return CoverElement.from_string(s)


class TestComputeInvariants:
    @pytest.mark.parametrize("n,expected", [(3, (48, 6, 6, 1)), (5, (80, 10, 10, 1))])
    def test_family_values(self, n, expected):
        inv = compute_invariants(construct_family(n))
        assert (inv.k_squared, inv.p_g, inv.chi, inv.q) == expected

    def test_etale_degeneration_is_the_zero_point(self):
        inv = compute_invariants(construct_etale(3))
        assert (inv.k_squared, inv.p_g, inv.chi, inv.q) == (0, 0, 0, 1)
        # the Euler characteristic of an unramified cover is multiplicative
        assert inv.chi == 8 * 0

    def test_single_character_carries_all_sections(self):
        inv = compute_invariants(construct_family(4))
        for c in nontrivial_characters(3):
            assert inv.h0_by_character[c] == (8 if c == chi("100") else 0)

    def test_refuses_data_violating_the_relations(self):
        bd = construct_family(3)
        spec = bd.group_spec
        broken = dict(bd.L)
        broken[chi("110")] = bd.L[chi("110")] + SurfaceClass(
            0, CurveClass(0, spec.torsion_generator(0))
        )
        with pytest.raises(ValueError):
            compute_invariants(replace(bd, L=broken))

    def test_surface_identity_holds(self):
        for n in (2, 3, 6):
            inv = compute_invariants(construct_family(n))
            assert inv.q == inv.p_g - inv.chi + 1


def two_contributor_variant():
    """Family data enlarged so a second character contributes sections.

    Adding a pair of elliptic fibers over 110 and bumping every class with
    chi(110) = -1 by the fiber class keeps all relations intact; among the
    shifted characters only 010 gains sections.
    """
    bd = construct_family(3)
    extra = (PointOnP1("E7"), PointOnP1("E8"))
    d = dict(bd.D)
    d[sigma("110")] = d[sigma("110")] + (EllipticFiber(extra[0]), EllipticFiber(extra[1]))
    e = elliptic_fiber_class(bd.group_spec)
    l = dict(bd.L)
    for name in ("100", "010", "101", "011"):
        l[chi(name)] = l[chi(name)] + e
    return replace(bd, points_p1=bd.points_p1 + extra, D=d, L=l)


def single_contributor_with_ramification_correction():
    """Valid data whose lone contributing character fixes a branched element.

    Everything is pulled back from the rational curve: ten elliptic fibers
    split 4 + 4 + 2 over the group elements 100, 010, 001, and the class
    torsions follow the bit pattern, leaving 110 as the only character
    with sections.  Since 110 pairs to +1 with the branched element 001,
    the canonical system strictly contains the pullback system.
    """
    spec = GroupSpec(0, (2, 2))
    t1, t2 = spec.torsion_generator(0), spec.torsion_generator(1)
    fibers = tuple(PointOnP1(f"E{i}") for i in range(1, 11))
    branch = {
        sigma("100"): tuple(EllipticFiber(p) for p in fibers[0:4]),
        sigma("010"): tuple(EllipticFiber(p) for p in fibers[4:8]),
        sigma("001"): tuple(EllipticFiber(p) for p in fibers[8:10]),
    }
    L = {}
    for c in nontrivial_characters(3):
        a = 2 * c.bits[0] + 2 * c.bits[1] + c.bits[2]
        torsion = c.bits[0] * t1 + c.bits[1] * t1 + c.bits[2] * t2
        L[c] = SurfaceClass(a, CurveClass(0, torsion))
    return BuildingData(3, spec, {}, fibers, L, branch)


class TestCanonicalSystem:
    def test_family_has_one_generator_with_empty_correction(self):
        bd = construct_family(3)
        description = canonical_system(bd)
        assert description.contributing == (chi("100"),)
        (generator,) = description.generators
        assert generator.line_class.a == 1
        assert generator.line_class.c.degree == 3
        assert generator.ramification == ()

    def test_two_contributors_give_two_generators(self):
        bd = two_contributor_variant()
        assert verify_relations(bd).ok
        description = canonical_system(bd)
        assert [str(c) for c in description.contributing] == ["010", "100"]
        assert len(description.generators) == 2

    def test_empty_system_when_nothing_contributes(self):
        description = canonical_system(construct_etale(3))
        assert description.contributing == ()
        assert compute_invariants(construct_etale(3)).p_g == 0

    def test_p_g_equals_the_dimension_count_of_the_generators(self):
        from z2covers.picard import h0

        for bd in (construct_family(2), construct_family(5), two_contributor_variant()):
            inv = compute_invariants(bd)
            description = canonical_system(bd)
            assert inv.p_g == sum(h0(g.line_class) for g in description.generators)


class TestCanonicalMapDegree:
    def test_family_degree_eight(self):
        report = canonical_map_degree(construct_family(3))
        assert report.factors_through_cover
        assert report.degree == 8
        assert report.image_degree == 6
        assert report.base_point_free is True
        assert report.note is None

    def test_boundary_case_degree_sixteen(self):
        report = canonical_map_degree(construct_family(2))
        assert (report.degree, report.image_degree) == (16, 2)
        assert report.base_point_free is True

    def test_two_contributors_block_the_factorisation(self):
        report = canonical_map_degree(two_contributor_variant())
        assert report.factors_through_cover is False
        assert report.degree is None and report.image_degree is None

    def test_nonempty_ramification_correction_leaves_degree_undefined(self):
        bd = single_contributor_with_ramification_correction()
        assert verify_relations(bd).ok
        description = canonical_system(bd)
        assert [str(c) for c in description.contributing] == ["110"]
        (generator,) = description.generators
        assert generator.ramification != ()
        report = canonical_map_degree(bd)
        assert report.factors_through_cover is True
        assert report.degree is None
        assert "ramification" in report.note

    def test_small_genus_rejected(self):
        with pytest.raises(ValueError):
            canonical_map_degree(construct_etale(3))

    @pytest.mark.parametrize("n", [2, 3, 4, 7])
    def test_degree_times_image_degree_is_k_squared(self, n):
        inv = compute_invariants(construct_family(n))
        report = canonical_map_degree(construct_family(n))
        assert report.degree * report.image_degree == inv.k_squared


class TestHalvingChoiceInvariance:
    def test_every_torsion_offset_produces_identical_invariants(self):
        reference = compute_invariants(construct_family(3))
        for choice in [(1, 1, 1), (2, 0, 3), (3, 3, 3), (0, 1, 2)]:
            variant = construct_family(3, choice)
            assert verify_relations(variant).ok
            assert compute_invariants(variant) == reference


class TestMinimality:
    def test_family_adjoint_divisor_is_nef_and_big(self):
        evidence = minimality_evidence(construct_family(3))
        assert evidence.self_intersection == 24
        assert all(v >= 0 for _, v in evidence.intersections)
        assert evidence.nef_and_big

    def test_etale_case_is_not_big(self):
        evidence = minimality_evidence(construct_etale(3))
        assert evidence.self_intersection == 0
        assert not evidence.nef_and_big
