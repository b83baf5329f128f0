"""Sweep the family index and tabulate the invariants.

The canonical degree is 8 for every n >= 3, with an image of degree 2n in
projective space of dimension 2n - 1 (so never a surface of minimal
degree, which would have degree 2n - 2).  At the boundary n = 2 the image
collapses to a quadric and the degree doubles to 16.

Run:  python demos/03_invariant_sweep.py
"""

from z2covers import canonical_map_degree, compute_invariants, construct_family

print("   n    K^2   p_g   q   deg(Im)  degree  base point free")
for n in range(2, 11):
    invariants = compute_invariants(construct_family(n))
    canonical = canonical_map_degree(construct_family(n))
    print(
        f"{n:>4} {invariants.k_squared:>6} {invariants.p_g:>5} {invariants.q:>3}"
        f" {canonical.image_degree:>9} {canonical.degree:>7}"
        f"   {canonical.base_point_free}"
    )

print()
print("checks: degree * deg(Im) = K^2 and q = p_g - chi(O) + 1 on every row")
for n in range(2, 11):
    invariants = compute_invariants(construct_family(n))
    canonical = canonical_map_degree(construct_family(n))
    assert canonical.degree * canonical.image_degree == invariants.k_squared
    assert invariants.q == invariants.p_g - invariants.chi + 1
print("all rows consistent")
