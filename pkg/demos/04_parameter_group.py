"""Regular Hom-Lie maps form a group; its law is visible on parameters."""

import random

from homlie import (
    Field,
    HomLieParams,
    IncidenceAlgebra,
    Poset,
    build_regular_homlie,
    compose,
    compose_params,
    invert_endo,
    invert_params,
)
from homlie.sampling import random_params

v = Poset.from_cover_relations(["a", "b", "c"], [("a", "c"), ("b", "c")])
alg = IncidenceAlgebra(v, Field.rationals())
rng = random.Random(11)

p = random_params(alg, rng)
q = random_params(alg, rng)
pq = compose_params(p, q)
print("p      =", p)
print("q      =", q)
print("p * q  =", pq)
print("build(p * q) == build(p) o build(q):", build_regular_homlie(pq) == compose(build_regular_homlie(p), build_regular_homlie(q)))

p_inv = invert_params(p)
print("p^-1   =", p_inv)
print("build(p^-1) == build(p)^-1:", build_regular_homlie(p_inv) == invert_endo(build_regular_homlie(p)))
print("p * p^-1 is trivial:", compose_params(p, p_inv) == HomLieParams.trivial(alg))
