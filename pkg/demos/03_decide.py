"""Decide whether a Lie automorphism is a regular Hom-Lie structure.

The decision either recovers the unique parameters or names the first
obstruction found, with the basis location where it shows up.
"""

import random

from homlie import (
    Field,
    IncidenceAlgebra,
    LinearEndo,
    Poset,
    build_regular_homlie,
    decide_regular_homlie,
    hom_jacobi_defect,
    inner_auto,
    negative_transpose,
)
from homlie.sampling import random_params

c3 = IncidenceAlgebra(Poset.chain(3), Field.rationals())

print("identity:          ", decide_regular_homlie(LinearEndo.identity(c3)))

# Conjugating by delta + e_23 is a Lie automorphism, but e_23 is not in Z(J).
xi = inner_auto(c3.delta() + c3.e(2, 3))
print("conjugation by 1+e23:", decide_regular_homlie(xi))
print("   witness defect at (e3, e1, e12):", hom_jacobi_defect(xi, c3.e(3), c3.e(1), c3.e(1, 2)))

# Minus the transpose along the order reversal is a Lie automorphism of another kind.
flip = negative_transpose(c3, (2, 1, 0))
print("negative transpose: ", decide_regular_homlie(flip))

# A singular map is rejected before any shape analysis.
print("zero map:           ", decide_regular_homlie(LinearEndo.zero(c3)))

# Round trip: build from random parameters, decide, and compare.
rng = random.Random(0)
params = random_params(c3, rng)
decision = decide_regular_homlie(build_regular_homlie(params))
print()
print("random params:      ", params)
print("recovered:          ", decision)
print("same parameters:    ", decision.params == params)
