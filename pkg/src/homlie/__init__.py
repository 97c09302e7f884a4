"""Regular Hom-Lie structures on incidence algebras of finite posets.

Exact arithmetic over Q and GF(p).  The main entry points:

>>> from homlie import Poset, Field, IncidenceAlgebra, HomLieParams
>>> from homlie import build_regular_homlie, decide_regular_homlie
>>> alg = IncidenceAlgebra(Poset.chain(3), Field.rationals())
>>> phi = build_regular_homlie(HomLieParams.create(alg, beta={(1, 3): 1}))
>>> print(decide_regular_homlie(phi))
OK beta=(1,3):1 sigma= alpha=0,0,0
"""

from .decide import (
    Decision,
    cross_validate,
    decide_regular_homlie,
    format_decision,
    parse_decision,
    structure_parameter_count,
)
from .endo import (
    LinearEndo,
    apply,
    compose,
    conjugate,
    hom_jacobi_defect,
    invert_endo,
    is_bijective,
    is_hom_lie_structure,
    is_lie_automorphism,
)
from .errors import HomLieError
from .incidence import (
    IncidenceAlgebra,
    IncidenceElement,
    commutator,
    dj_split,
    hadamard,
    invert_unit,
    is_multiplicative,
    multiply,
    radical_level,
)
from .poset import Poset, enumerate_connected_posets
from .scalars import Field, Scalar
from .structures import (
    HomLieParams,
    SigmaTable,
    build_regular_homlie,
    central_map,
    compose_params,
    free_sigma_support,
    inner_auto,
    invert_params,
    multiplicative_auto,
    negative_transpose,
)

__all__ = [
    "Decision",
    "Field",
    "HomLieError",
    "HomLieParams",
    "IncidenceAlgebra",
    "IncidenceElement",
    "LinearEndo",
    "Poset",
    "Scalar",
    "SigmaTable",
    "apply",
    "build_regular_homlie",
    "central_map",
    "commutator",
    "compose",
    "compose_params",
    "conjugate",
    "cross_validate",
    "decide_regular_homlie",
    "dj_split",
    "enumerate_connected_posets",
    "format_decision",
    "free_sigma_support",
    "hadamard",
    "hom_jacobi_defect",
    "inner_auto",
    "invert_endo",
    "invert_params",
    "invert_unit",
    "is_bijective",
    "is_hom_lie_structure",
    "is_lie_automorphism",
    "is_multiplicative",
    "multiplicative_auto",
    "multiply",
    "negative_transpose",
    "parse_decision",
    "radical_level",
    "structure_parameter_count",
]
