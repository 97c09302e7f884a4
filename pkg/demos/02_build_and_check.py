"""Build regular Hom-Lie maps from parameters and check them exactly.

A parameter triple (beta, sigma, alpha) gives the map
    f -> beta * M_sigma(f) * beta^-1 + (sum_x alpha_x f(x,x)) * delta.
"""

import itertools

from homlie import (
    Field,
    HomLieParams,
    IncidenceAlgebra,
    Poset,
    build_regular_homlie,
    hom_jacobi_defect,
    is_hom_lie_structure,
    is_lie_automorphism,
)

c2 = IncidenceAlgebra(Poset.chain(2), Field.rationals())

# On the two-element chain the off-diagonal unit may be scaled freely.
phi = build_regular_homlie(HomLieParams.create(c2, sigma={(1, 2): 2}))
print("matrix of phi on C2 (columns are images of basis elements):")
for row in phi.rows():
    print("   ", " ".join(str(c) for c in row))

zero = c2.zero()
triples = list(itertools.product(range(c2.dim), repeat=3))
bad = [t for t in triples if hom_jacobi_defect(phi, *(c2.basis_element(i) for i in t)) != zero]
print(f"Hom-Jacobi defect vanishes on {len(triples) - len(bad)} of {len(triples)} basis triples")

# A richer example on the diamond 0 < a, b < 1, over GF(5).
diamond = Poset.from_cover_relations(["0", "a", "b", "1"], [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")])
alg = IncidenceAlgebra(diamond, Field.parse("p=5"))
params = HomLieParams.create(alg, beta={("0", "1"): 3}, alpha={"a": 2, "1": 4})
psi = build_regular_homlie(params)
print()
print("params on the diamond over GF(5):", params)
print("c vector:", [str(c) for c in params.c_vector()])
print("Lie automorphism:", is_lie_automorphism(psi))
print("Hom-Lie structure:", is_hom_lie_structure(psi))
