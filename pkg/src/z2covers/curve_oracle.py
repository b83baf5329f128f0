"""Concretization oracle: genuine elliptic curve points over a prime field.

The abstract group model asserts linear-equivalence identities among
finitely many points with bounded integer coefficients.  This module
re-checks every one of them with honest chord-tangent arithmetic on an
explicit curve y^2 = x^3 + ax + b over F_p, at desk scale: points are
found by exhaustive enumeration (no point counting tricks), the group
structure by brute-force order computation, which keeps the oracle
independent of the algebra it audits.

Free generators of the abstract model cannot map to infinite-order points
over a finite field.  The identities at hand are linear with small
coefficients, so it suffices to place the free generators inside a cyclic
factor large enough that none of the finitely many required nonvanishing
combinations can wrap around; :func:`find_assignment` searches for such a
placement and verifies every constraint directly on the curve before
accepting it.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from math import gcd

from .abgroup import GroupElement
from .characters import Character, pair
from .cover import BuildingData, RationalFiber

MAX_EXHAUSTIVE_PRIME = 10_000


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class CurvePoint:
    """Affine point (x, y) mod p, or the point at infinity (None, None)."""

    x: int | None
    y: int | None

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __repr__(self) -> str:
        return "O" if self.is_infinity else f"({self.x}, {self.y})"


INFINITY = CurvePoint(None, None)


class CurveOverFp:
    """y^2 = x^3 + ax + b over the field with p elements, p an odd prime."""

    def __init__(self, p: int, a: int, b: int):
        if p < 3 or not is_prime(p):
            raise ValueError("p must be an odd prime")
        self.p = p
        self.a = a % p
        self.b = b % p
        if (4 * self.a**3 + 27 * self.b**2) % p == 0:
            raise ValueError("singular curve: 4a^3 + 27b^2 = 0 mod p")
        self._points: tuple[CurvePoint, ...] | None = None
        self._structure: tuple[int, tuple[int, int]] | None = None

    def __repr__(self) -> str:
        return f"y^2 = x^3 + {self.a}x + {self.b} over F_{self.p}"

    def contains(self, point: CurvePoint) -> bool:
        if point.is_infinity:
            return True
        return (point.y**2 - (point.x**3 + self.a * point.x + self.b)) % self.p == 0

    def _inv(self, v: int) -> int:
        return pow(v, self.p - 2, self.p)

    def negate(self, point: CurvePoint) -> CurvePoint:
        if point.is_infinity:
            return point
        return CurvePoint(point.x, (-point.y) % self.p)

    def add(self, p1: CurvePoint, p2: CurvePoint) -> CurvePoint:
        if p1.is_infinity:
            return p2
        if p2.is_infinity:
            return p1
        p = self.p
        if p1.x == p2.x and (p1.y + p2.y) % p == 0:
            return INFINITY
        if p1 == p2:
            slope = (3 * p1.x * p1.x + self.a) * self._inv(2 * p1.y) % p
        else:
            slope = (p2.y - p1.y) * self._inv((p2.x - p1.x) % p) % p
        x3 = (slope * slope - p1.x - p2.x) % p
        y3 = (slope * (p1.x - x3) - p1.y) % p
        return CurvePoint(x3, y3)

    def double(self, point: CurvePoint) -> CurvePoint:
        return self.add(point, point)

    def scale(self, k: int, point: CurvePoint) -> CurvePoint:
        if k < 0:
            return self.scale(-k, self.negate(point))
        result = INFINITY
        addend = point
        while k:
            if k & 1:
                result = self.add(result, addend)
            addend = self.double(addend)
            k >>= 1
        return result

    def points(self) -> tuple[CurvePoint, ...]:
        """All points, by exhaustive enumeration over x."""
        if self._points is not None:
            return self._points
        p = self.p
        if p > MAX_EXHAUSTIVE_PRIME:
            raise ValueError(f"p = {p} too large for exhaustive enumeration")
        roots_of: dict[int, list[int]] = {}
        for y in range(p):
            roots_of.setdefault(y * y % p, []).append(y)
        found = [INFINITY]
        for x in range(p):
            rhs = (x * x * x + self.a * x + self.b) % p
            for y in roots_of.get(rhs, ()):
                found.append(CurvePoint(x, y))
        self._points = tuple(found)
        return self._points

    def order(self) -> int:
        return len(self.points())

    def point_order(self, point: CurvePoint) -> int:
        """Order of a point, reduced from the group order prime by prime."""
        n = self.order()
        order = n
        for q in _prime_factors(n):
            while order % q == 0 and self.scale(order // q, point).is_infinity:
                order //= q
        return order

    def group_structure(self) -> tuple[int, tuple[int, int]]:
        """(N, (d1, d2)) with the group isomorphic to Z/d1 x Z/d2, d1 | d2.

        d2 is the exponent, found as the lcm of all point orders.
        """
        if self._structure is not None:
            return self._structure
        n = self.order()
        exponent = 1
        for point in self.points():
            order = self.point_order(point)
            exponent = exponent * order // gcd(exponent, order)
            if exponent == n:
                break
        d1, d2 = n // exponent, exponent
        if d2 % d1:
            raise ValueError("point orders inconsistent with a rank-2 abelian group")
        self._structure = (n, (d1, d2))
        return self._structure

    def two_torsion_points(self) -> tuple[CurvePoint, ...]:
        """Solutions of 2P = O: infinity plus the points with y = 0."""
        return tuple(
            pt for pt in self.points() if pt.is_infinity or pt.y == 0
        )

    def has_full_two_torsion(self) -> bool:
        return len(self.two_torsion_points()) == 4


def _prime_factors(n: int) -> tuple[int, ...]:
    factors = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            factors.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        factors.append(n)
    return tuple(factors)


@dataclass(frozen=True)
class Assignment:
    """Images of the group model's generators on a concrete curve."""

    free_points: tuple[CurvePoint, ...]
    torsion_points: tuple[CurvePoint, ...]


@dataclass(frozen=True)
class RealizationReport:
    """Outcome of re-checking the abstract identities with curve arithmetic."""

    ok: bool
    relations_checked: int
    relation_failures: tuple[tuple[Character, Character], ...]
    injective: bool
    collisions: tuple[tuple[str, str], ...]
    torsion_faithful: bool


class _Realizer:
    """Memoized evaluation of abstract elements as curve points."""

    def __init__(self, curve: CurveOverFp, assignment: Assignment):
        self.curve = curve
        self.assignment = assignment
        self._cache: dict[tuple[tuple[int, ...], tuple[int, ...]], CurvePoint] = {}

    def __call__(self, element: GroupElement) -> CurvePoint:
        key = (element.free, element.tors)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        total = INFINITY
        for k, point in zip(element.free, self.assignment.free_points):
            if k:
                total = self.curve.add(total, self.curve.scale(k, point))
        for k, point in zip(element.tors, self.assignment.torsion_points):
            if k:
                total = self.curve.add(total, self.curve.scale(k, point))
        self._cache[key] = total
        return total


def coefficient_bound(bd: BuildingData) -> int:
    """Twice the largest free-coefficient mass in the data.

    Relation sides add at most two data classes, so twice the largest
    single-element bound covers every combination the oracle evaluates.
    """
    biggest = 0
    for point in bd.points_c.values():
        biggest = max(biggest, point.aj.l1_free())
    for cls in bd.L.values():
        biggest = max(biggest, cls.c.pic0.l1_free())
    return 2 * biggest


def realize(bd: BuildingData, curve: CurveOverFp, assignment: Assignment) -> RealizationReport:
    """Re-evaluate every identity of the building data on a concrete curve.

    Hard errors: assignment of the wrong shape, points off the curve, or a
    torsion generator image that is not annihilated by its order.  All
    mathematical findings (collisions between realized points, relation
    sides disagreeing) are reported, not raised.
    """
    spec = bd.group_spec
    if len(assignment.free_points) != spec.rank:
        raise ValueError(f"need {spec.rank} free-generator images")
    if len(assignment.torsion_points) != len(spec.torsion_orders):
        raise ValueError(f"need {len(spec.torsion_orders)} torsion-generator images")
    for point in (*assignment.free_points, *assignment.torsion_points):
        if not curve.contains(point):
            raise ValueError(f"{point!r} is not on {curve!r}")
    for m, point in zip(spec.torsion_orders, assignment.torsion_points):
        if not curve.scale(m, point).is_infinity:
            raise ValueError(
                f"torsion generator image {point!r} is not {m}-torsion on the curve"
            )

    phi = _Realizer(curve, assignment)

    torsion_faithful = True
    for t in spec.two_torsion():
        if not t.is_zero() and phi(t).is_infinity:
            torsion_faithful = False

    collisions = []
    labeled = sorted(bd.points_c.values(), key=lambda pt: pt.label)
    realized = {pt.label: phi(pt.aj) for pt in labeled}
    for p1, p2 in itertools.combinations(labeled, 2):
        if realized[p1.label] == realized[p2.label]:
            collisions.append((p1.label, p2.label))

    relation_failures = []
    checked = 0
    for chi, chi_prime in itertools.combinations_with_replacement(bd.characters, 2):
        checked += 1
        lhs_cls, rhs_cls = bd.L[chi], bd.L[chi_prime]
        lhs_point = curve.add(phi(lhs_cls.c.pic0), phi(rhs_cls.c.pic0))
        lhs_a = lhs_cls.a + rhs_cls.a
        lhs_degree = lhs_cls.c.degree + rhs_cls.c.degree

        product = chi * chi_prime
        if product.is_trivial():
            rhs_point, rhs_a, rhs_degree = INFINITY, 0, 0
        else:
            cls = bd.L[product]
            rhs_point, rhs_a, rhs_degree = phi(cls.c.pic0), cls.a, cls.c.degree
        for sigma in bd.elements:
            if pair(chi, sigma) == -1 and pair(chi_prime, sigma) == -1:
                for comp in bd.branch(sigma):
                    if isinstance(comp, RationalFiber):
                        rhs_point = curve.add(rhs_point, phi(comp.point.aj))
                        rhs_degree += 1
                    else:
                        rhs_a += 1
        if (lhs_a, lhs_degree, lhs_point) != (rhs_a, rhs_degree, rhs_point):
            relation_failures.append((chi, chi_prime))

    ok = torsion_faithful and not collisions and not relation_failures
    return RealizationReport(
        ok,
        checked,
        tuple(relation_failures),
        not collisions,
        tuple(collisions),
        torsion_faithful,
    )


def find_assignment(
    bd: BuildingData,
    curve: CurveOverFp,
    *,
    seed: int = 0,
    attempts: int = 400,
) -> Assignment:
    """Search for generator images that make the realization faithful.

    Torsion generators are mapped to points of exactly matching order with
    the whole torsion subgroup embedded faithfully.  Free generators are
    mapped to multiples of a point of maximal order; candidate multipliers
    are drawn from a seeded generator and accepted once every registered
    point realizes to a distinct curve point.  The curve's largest cyclic
    factor must leave the data's coefficient combinations room to stay
    nonzero, which :func:`coefficient_bound` quantifies.
    """
    spec = bd.group_spec
    n, (_, d2) = curve.group_structure()
    bound = coefficient_bound(bd)
    needed = 2 * bound * max(1, spec.rank)
    if d2 < needed:
        raise ValueError(
            f"largest cyclic factor {d2} is too small for this data "
            f"(needs at least {needed}); pick a larger prime"
        )

    by_order: dict[int, list[CurvePoint]] = {}
    for m in set(spec.torsion_orders):
        by_order[m] = [pt for pt in curve.points() if curve.point_order(pt) == m]
        if not by_order[m]:
            raise ValueError(f"curve has no point of order {m}")

    torsion_points = None
    for candidate in itertools.product(*(by_order[m] for m in spec.torsion_orders)):
        trial = Assignment((INFINITY,) * spec.rank, tuple(candidate))
        phi = _Realizer(curve, trial)
        if all(phi(t).is_infinity == t.is_zero() for t in spec.two_torsion()):
            torsion_points = tuple(candidate)
            break
    if torsion_points is None:
        raise ValueError("curve torsion cannot embed the model's torsion subgroup")

    generator = next(
        pt for pt in curve.points() if curve.point_order(pt) == d2
    )
    rng = random.Random(seed)
    ajs = [pt.aj for pt in bd.points_c.values()]
    for _ in range(attempts):
        multipliers = [rng.randrange(1, d2) for _ in range(spec.rank)]
        free_points = tuple(curve.scale(c, generator) for c in multipliers)
        assignment = Assignment(free_points, torsion_points)
        phi = _Realizer(curve, assignment)
        images = [phi(aj) for aj in ajs]
        if len(set(images)) == len(images):
            return assignment
    raise ValueError(f"no faithful assignment found in {attempts} attempts")
