"""Exact arithmetic in finitely generated abelian groups Z^r + Z/m_1 + ... + Z/m_k.

Degree-zero divisor classes on an elliptic curve enter the cover
constructions in this package only through finitely many points, their
integer combinations and their torsion.  A free-by-finite group therefore
models Pic^0 faithfully for every equivalence test we need, provided the
arithmetic is exact: free coordinates are unbounded Python integers and
torsion coordinates are kept reduced to the range [0, m_i).

Everything here is immutable and hashable; operations are pure functions,
so values can be shared freely between threads or tasks.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass


@dataclass(frozen=True)
class GroupSpec:
    """Shape of the group Z^rank + Z/m_1 + ... + Z/m_k."""

    rank: int
    torsion_orders: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "torsion_orders", tuple(self.torsion_orders))
        if self.rank < 0:
            raise ValueError("rank must be non-negative")
        if any(m < 2 for m in self.torsion_orders):
            raise ValueError("torsion orders must all be >= 2")

    def element(self, free=(), tors=()) -> "GroupElement":
        return GroupElement(self, tuple(free), tuple(tors))

    def zero(self) -> "GroupElement":
        return self.element((0,) * self.rank, (0,) * len(self.torsion_orders))

    def free_generator(self, i: int) -> "GroupElement":
        """Standard basis vector of the free part."""
        if not 0 <= i < self.rank:
            raise IndexError(f"free generator index {i} out of range")
        free = tuple(1 if j == i else 0 for j in range(self.rank))
        return self.element(free, (0,) * len(self.torsion_orders))

    def torsion_generator(self, j: int) -> "GroupElement":
        """Generator of the j-th cyclic torsion factor."""
        if not 0 <= j < len(self.torsion_orders):
            raise IndexError(f"torsion generator index {j} out of range")
        tors = tuple(1 if i == j else 0 for i in range(len(self.torsion_orders)))
        return self.element((0,) * self.rank, tors)

    def two_torsion(self) -> tuple["GroupElement", ...]:
        """All solutions of 2x = 0, in a deterministic order.

        The free part of any such x vanishes; each torsion coordinate is 0,
        or m_i/2 when m_i is even.
        """
        choices = [(0, m // 2) if m % 2 == 0 else (0,) for m in self.torsion_orders]
        free = (0,) * self.rank
        return tuple(
            self.element(free, combo) for combo in itertools.product(*choices)
        )

    def elements(self):
        """Iterate the whole group.  Only finite groups (rank 0) qualify."""
        if self.rank > 0:
            raise ValueError("cannot enumerate a group of positive rank")
        for combo in itertools.product(*(range(m) for m in self.torsion_orders)):
            yield self.element((), combo)


@dataclass(frozen=True)
class GroupElement:
    """An element, split into free and torsion coordinates.

    Torsion coordinates are reduced on construction, so equality is plain
    componentwise equality.
    """

    spec: GroupSpec
    free: tuple[int, ...]
    tors: tuple[int, ...]

    def __post_init__(self) -> None:
        free = tuple(self.free)
        tors = tuple(self.tors)
        if len(free) != self.spec.rank:
            raise ValueError(
                f"free part has length {len(free)}, expected {self.spec.rank}"
            )
        if len(tors) != len(self.spec.torsion_orders):
            raise ValueError(
                f"torsion part has length {len(tors)}, "
                f"expected {len(self.spec.torsion_orders)}"
            )
        tors = tuple(v % m for v, m in zip(tors, self.spec.torsion_orders))
        object.__setattr__(self, "free", free)
        object.__setattr__(self, "tors", tors)

    def _check_same_spec(self, other: "GroupElement") -> None:
        if self.spec != other.spec:
            raise ValueError("elements of different groups cannot be combined")

    def __add__(self, other: "GroupElement") -> "GroupElement":
        self._check_same_spec(other)
        free = tuple(a + b for a, b in zip(self.free, other.free))
        tors = tuple(a + b for a, b in zip(self.tors, other.tors))
        return self.spec.element(free, tors)

    def __neg__(self) -> "GroupElement":
        return self.spec.element(
            tuple(-a for a in self.free), tuple(-a for a in self.tors)
        )

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        return self + (-other)

    def __mul__(self, k: int) -> "GroupElement":
        if not isinstance(k, int):
            return NotImplemented
        return self.spec.element(
            tuple(k * a for a in self.free), tuple(k * a for a in self.tors)
        )

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.free) and all(a == 0 for a in self.tors)

    def l1_free(self) -> int:
        """Sum of absolute values of the free coordinates."""
        return sum(abs(a) for a in self.free)

    def __repr__(self) -> str:
        return f"({list(self.free)}; {list(self.tors)})"


def halvings(x: GroupElement) -> tuple[GroupElement, ...]:
    """The complete solution set of 2y = x, sorted by torsion coordinates.

    Empty when x is not divisible by 2.  When nonempty the solutions form a
    coset of the 2-torsion subgroup, so their number equals the number of
    2-torsion elements of the group.
    """
    if any(v % 2 for v in x.free):
        return ()
    half_free = tuple(v // 2 for v in x.free)
    per_coord: list[tuple[int, ...]] = []
    for v, m in zip(x.tors, x.spec.torsion_orders):
        if m % 2 == 1:
            per_coord.append(((v * pow(2, -1, m)) % m,))
        elif v % 2 == 0:
            per_coord.append((v // 2, v // 2 + m // 2))
        else:
            return ()
    found = [x.spec.element(half_free, combo) for combo in itertools.product(*per_coord)]
    return tuple(sorted(found, key=lambda e: e.tors))
