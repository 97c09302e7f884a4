"""Arithmetic in the incidence algebra of a small poset.

Run with ``python3 demos/01_incidence_algebra.py``.
"""

from homlie import Field, IncidenceAlgebra, Poset, commutator, invert_unit, multiply

# A "V": two minimal elements below one maximal element.
v = Poset.from_cover_relations(["a", "b", "c"], [("a", "c"), ("b", "c")])
alg = IncidenceAlgebra(v, Field.rationals())

print("basis, diagonal first:", [alg.label_pair(ij) for ij in alg.basis])
print("pairs spanning Z(J):   ", [alg.label_pair(ij) for ij in alg.center_pairs])

# Matrix units multiply like e_xy * e_yz = e_xz and vanish otherwise.
print("e_a * e_ac   =", multiply(alg.e("a"), alg.e("a", "c")))
print("e_ac * e_a   =", multiply(alg.e("a", "c"), alg.e("a")))
print("[e_a, e_ac]  =", commutator(alg.e("a"), alg.e("a", "c")))

# Units are exactly the elements with nonzero diagonal; inverses are exact.
u = alg.delta().scale(2) + alg.e("a", "c") - alg.e("b", "c").scale(3)
inv = invert_unit(u)
print("u            =", u)
print("u^-1         =", inv)
print("u * u^-1 == 1:", multiply(u, inv) == alg.delta())

# The same computation over GF(3).
alg3 = IncidenceAlgebra(v, Field.parse("p=3"))
u3 = alg3.delta().scale(2) + alg3.e("a", "c")
print("over GF(3), u^-1 =", invert_unit(u3))
