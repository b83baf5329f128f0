"""Building data for Z_2^n covers of the product surface, and its verification.

A cover is described by a divisor class L_chi for every nontrivial
character and an effective branch divisor D_sigma for every nontrivial
group element (possibly empty).  The data defines a cover exactly when
every L_chi is a nonzero class, the total branch divisor is reduced, and
for every pair of nontrivial characters

    L_chi + L_chi' == L_{chi.chi'} + sum of D_sigma over the sigma
                      with chi(sigma) = chi'(sigma) = -1,

where L of the trivial character is read as the zero class.  The pair
condition with chi = chi' specialises to 2 L_chi == sum over chi(sigma) = -1,
the "diagonal" relations.

Branch components here are always whole fibers of one of the two rulings.
That restriction keeps the smoothness criterion purely combinatorial:
fibers of the same ruling are disjoint once they are distinct, and fibers
of opposite rulings meet exactly once, transversally.  So the total branch
locus is a simple normal crossings divisor as soon as its components are
pairwise distinct and distinct point labels on the elliptic curve carry
distinct degree-zero classes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping, Sequence, Union

from .abgroup import GroupSpec
from .characters import Character, CoverElement, nontrivial_characters, nontrivial_elements, pair
from .picard import PointOnC, PointOnP1, SurfaceClass, rational_fiber_class, elliptic_fiber_class


@dataclass(frozen=True)
class EllipticFiber:
    """Branch component {t} x C over a point of the rational curve."""

    point: PointOnP1

    @property
    def label(self) -> str:
        return self.point.label

    @property
    def kind(self) -> str:
        return "E"


@dataclass(frozen=True)
class RationalFiber:
    """Branch component P1 x {p} over a point of the elliptic curve."""

    point: PointOnC

    @property
    def label(self) -> str:
        return self.point.label

    @property
    def kind(self) -> str:
        return "F"


BranchComponent = Union[EllipticFiber, RationalFiber]


def component_class(comp: BranchComponent, spec: GroupSpec) -> SurfaceClass:
    if isinstance(comp, EllipticFiber):
        return elliptic_fiber_class(spec)
    return rational_fiber_class(spec, comp.point.aj)


def branch_class(components: Sequence[BranchComponent], spec: GroupSpec) -> SurfaceClass:
    """Class of a sum of fiber components; the empty sum is the zero class."""
    total = SurfaceClass.zero(spec)
    for comp in components:
        total = total + component_class(comp, spec)
    return total


@dataclass(frozen=True)
class BuildingData:
    """Candidate building data for a Z_2^n cover.

    ``n`` is the number of Z_2 factors of the covering group.  ``points_c``
    and ``points_p1`` register every named point of the configuration,
    including points that appear only through the classes L_chi and not in
    any branch divisor.  Construction validates shape only (all nontrivial
    characters present, components referencing registered points, one group
    model throughout); whether the data actually defines a smooth cover is
    the verifiers' business, and they report rather than raise.
    """

    n: int
    group_spec: GroupSpec
    points_c: Mapping[str, PointOnC]
    points_p1: tuple[PointOnP1, ...]
    L: Mapping[Character, SurfaceClass]
    D: Mapping[CoverElement, tuple[BranchComponent, ...]]

    def __post_init__(self) -> None:
        chars = nontrivial_characters(self.n)
        sigmas = nontrivial_elements(self.n)

        points_c = dict(self.points_c)
        for label, point in points_c.items():
            if point.label != label:
                raise ValueError(f"point registered under {label!r} has label {point.label!r}")
            if point.aj.spec != self.group_spec:
                raise ValueError(f"point {label!r} lives in a different group model")
        points_p1 = tuple(self.points_p1)
        p1_labels = [p.label for p in points_p1]
        if len(set(p1_labels)) != len(p1_labels):
            raise ValueError("duplicate labels among rational-curve points")

        L = dict(self.L)
        if set(L) != set(chars):
            raise ValueError("need a class L_chi for exactly the nontrivial characters")
        for chi, cls in L.items():
            if cls.spec != self.group_spec:
                raise ValueError(f"L_{chi} lives in a different group model")

        D = {sigma: tuple(self.D.get(sigma, ())) for sigma in sigmas}
        if not set(self.D) <= set(sigmas):
            raise ValueError("branch divisors must be indexed by nontrivial group elements")
        for sigma, comps in D.items():
            for comp in comps:
                if isinstance(comp, RationalFiber):
                    registered = points_c.get(comp.label)
                    if registered is None or registered != comp.point:
                        raise ValueError(
                            f"component over unregistered elliptic-curve point {comp.label!r}"
                        )
                elif isinstance(comp, EllipticFiber):
                    if comp.label not in p1_labels:
                        raise ValueError(
                            f"component over unregistered rational-curve point {comp.label!r}"
                        )
                else:
                    raise ValueError(f"unknown branch component {comp!r}")

        object.__setattr__(self, "points_c", MappingProxyType(points_c))
        object.__setattr__(self, "points_p1", points_p1)
        object.__setattr__(self, "L", MappingProxyType(L))
        object.__setattr__(self, "D", MappingProxyType(D))

    @property
    def characters(self) -> tuple[Character, ...]:
        return nontrivial_characters(self.n)

    @property
    def elements(self) -> tuple[CoverElement, ...]:
        return nontrivial_elements(self.n)

    def branch(self, sigma: CoverElement) -> tuple[BranchComponent, ...]:
        return self.D.get(sigma, ())

    def branch_class_of(self, sigma: CoverElement) -> SurfaceClass:
        return branch_class(self.branch(sigma), self.group_spec)

    def total_branch_class(self) -> SurfaceClass:
        total = SurfaceClass.zero(self.group_spec)
        for sigma in self.elements:
            total = total + self.branch_class_of(sigma)
        return total


@dataclass(frozen=True)
class RelationFailure:
    chi: Character
    chi_prime: Character
    lhs: SurfaceClass
    rhs: SurfaceClass


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking the cover relations over all character pairs.

    ``failures`` lists every violated pair with both sides.
    ``trivial_characters`` flags characters whose class is zero, a distinct
    failure kind: such data never describes a connected cover of degree
    2^n, whatever the relations say.  ``ok`` requires both lists empty.
    """

    ok: bool
    pairs_checked: int
    failures: tuple[RelationFailure, ...]
    trivial_characters: tuple[Character, ...]


def verify_relations(bd: BuildingData) -> VerificationReport:
    """Check every unordered pair of nontrivial characters, diagonal included.

    Pairs are processed and reported in lexicographic order, so the report
    is deterministic.
    """
    chars = bd.characters
    trivial = tuple(chi for chi in chars if bd.L[chi].is_zero())
    branch_classes = {sigma: bd.branch_class_of(sigma) for sigma in bd.elements}
    failures = []
    pairs = 0
    for chi, chi_prime in itertools.combinations_with_replacement(chars, 2):
        pairs += 1
        lhs = bd.L[chi] + bd.L[chi_prime]
        product = chi * chi_prime
        rhs = SurfaceClass.zero(bd.group_spec) if product.is_trivial() else bd.L[product]
        for sigma in bd.elements:
            if pair(chi, sigma) == -1 and pair(chi_prime, sigma) == -1:
                rhs = rhs + branch_classes[sigma]
        if lhs != rhs:
            failures.append(RelationFailure(chi, chi_prime, lhs, rhs))
    ok = not failures and not trivial
    return VerificationReport(ok, pairs, tuple(failures), trivial)


@dataclass(frozen=True)
class SmoothnessReport:
    """Combinatorial smoothness evidence for the total branch locus.

    ``reduced``: all branch components pairwise distinct.
    ``injective_points``: distinct registered labels on the elliptic curve
    carry distinct degree-zero classes.
    ``snc``: both of the above; for fiber-type components this already
    makes the branch locus simple normal crossings.
    """

    reduced: bool
    snc: bool
    injective_points: bool


def verify_smoothness(bd: BuildingData) -> SmoothnessReport:
    seen: set[tuple[str, str]] = set()
    reduced = True
    for sigma in bd.elements:
        for comp in bd.branch(sigma):
            key = (comp.kind, comp.label)
            if key in seen:
                reduced = False
            seen.add(key)

    injective = True
    points = sorted(bd.points_c.values(), key=lambda p: p.label)
    for p, q in itertools.combinations(points, 2):
        if p.aj == q.aj:
            injective = False
    return SmoothnessReport(reduced, reduced and injective, injective)


class ConsistencyError(ValueError):
    """Raised when generator data cannot be completed to valid building data."""

    def __init__(self, message: str, failures=()):
        super().__init__(message)
        self.failures = tuple(failures)


def derive_from_generators(
    l100: SurfaceClass,
    l010: SurfaceClass,
    l001: SurfaceClass,
    branch: Mapping[CoverElement, Sequence[BranchComponent]],
    *,
    group_spec: GroupSpec,
    points_c: Mapping[str, PointOnC] = (),
    points_p1: Sequence[PointOnP1] = (),
) -> BuildingData:
    """Complete the three generator classes of a Z_2^3 cover to full data.

    The diagonal relation 2 L_chi == sum of D_sigma over chi(sigma) = -1
    must hold for each of the three generator characters; the four mixed
    classes are then forced:

        L_{chi.chi'} = L_chi + L_chi' - sum of D_sigma over the sigma
                       with chi(sigma) = chi'(sigma) = -1.

    The completed data is re-verified in full and a ConsistencyError is
    raised if any residual relation fails.
    """
    generators = {
        Character.from_string("100"): l100,
        Character.from_string("010"): l010,
        Character.from_string("001"): l001,
    }
    sigmas = nontrivial_elements(3)
    branch = {sigma: tuple(branch.get(sigma, ())) for sigma in sigmas}

    def branch_sum(chi: Character, chi_prime: Character) -> SurfaceClass:
        total = SurfaceClass.zero(group_spec)
        for sigma in sigmas:
            if pair(chi, sigma) == -1 and pair(chi_prime, sigma) == -1:
                total = total + branch_class(branch[sigma], group_spec)
        return total

    diagonal_failures = []
    for chi, cls in generators.items():
        lhs = cls + cls
        rhs = branch_sum(chi, chi)
        if lhs != rhs:
            diagonal_failures.append(RelationFailure(chi, chi, lhs, rhs))
    if diagonal_failures:
        raise ConsistencyError(
            "diagonal relation fails for a generator character", diagonal_failures
        )

    L = dict(generators)
    chi100, chi010, chi001 = generators
    for chi, chi_prime in [(chi100, chi010), (chi100, chi001), (chi010, chi001)]:
        L[chi * chi_prime] = L[chi] + L[chi_prime] - branch_sum(chi, chi_prime)
    chi011 = Character.from_string("011")
    L[chi100 * chi011] = L[chi100] + L[chi011] - branch_sum(chi100, chi011)

    bd = BuildingData(3, group_spec, dict(points_c), tuple(points_p1), L, branch)
    report = verify_relations(bd)
    if not report.ok:
        raise ConsistencyError(
            "completed data violates a residual relation",
            report.failures or report.trivial_characters,
        )
    return bd
