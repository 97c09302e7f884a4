import itertools
import random

import pytest

from homlie import (
    LinearEndo,
    Poset,
    apply,
    commutator,
    compose,
    conjugate,
    hom_jacobi_defect,
    inner_auto,
    invert_endo,
    is_bijective,
    is_hom_lie_structure,
    is_lie_automorphism,
)
from homlie.endo import (
    basic_formula_failures,
    hom_jacobi_failures,
    is_hom_lie_structure_slow,
    lie_automorphism_witness,
    rank,
)
from homlie.errors import ContextMismatch, NotInvertible
from homlie.sampling import random_element, random_lie_automorphism, random_params, random_unit
from homlie.structures import build_regular_homlie

from conftest import FIELDS, algebra, sweep_posets


def _random_matrix(alg, rng, density=0.5):
    f = alg.field
    return LinearEndo.from_rows(
        alg, [[f.random_raw(rng) if rng.random() < density else 0 for _ in range(alg.dim)] for _ in range(alg.dim)]
    )


# apply / compose / invert


def test_apply_basics(c3):
    f = random_element(c3, random.Random(0))
    assert apply(LinearEndo.identity(c3), f) == f
    assert apply(LinearEndo.scalar(c3, 5), f) == f.scale(5)
    swap = LinearEndo.from_images(c3, [c3.basis_element(1), c3.basis_element(0)] + [c3.basis_element(k) for k in range(2, 6)])
    assert apply(swap, c3.e(1)) == c3.e(2)
    with pytest.raises(ContextMismatch):
        apply(LinearEndo.identity(c3), algebra(Poset.chain(2)).delta())


def test_apply_is_linear():
    rng = random.Random(1)
    alg = algebra(sweep_posets(4)[5])
    m = _random_matrix(alg, rng)
    for _ in range(10):
        f, g = random_element(alg, rng), random_element(alg, rng)
        c = alg.field.random_raw(rng)
        assert m(f.scale(c) + g) == m(f).scale(c) + m(g)


@pytest.mark.parametrize("field", FIELDS, ids=str)
def test_invert_random_matrices(field):
    rng = random.Random(2)
    for p in sweep_posets(4):
        alg = algebra(p, field)
        m = _random_matrix(alg, rng, density=0.7)
        ident = LinearEndo.identity(alg)
        if is_bijective(m):
            inv = invert_endo(m)
            assert compose(m, inv) == ident == compose(inv, m)
        else:
            assert rank(m) < alg.dim
            with pytest.raises(NotInvertible):
                invert_endo(m)


def test_invert_scalar_and_zero(c3):
    assert invert_endo(LinearEndo.scalar(c3, 3)) == LinearEndo.scalar(c3, c3.field(1, 3))
    with pytest.raises(NotInvertible):
        invert_endo(LinearEndo.zero(c3))
    assert not is_bijective(LinearEndo.zero(c3))


def test_compose_matches_apply():
    rng = random.Random(3)
    alg = algebra(sweep_posets(4)[3], "p=3")
    a, b = _random_matrix(alg, rng), _random_matrix(alg, rng)
    f = random_element(alg, rng)
    assert compose(a, b)(f) == a(b(f))


# Lie automorphisms


def test_lie_automorphism_examples(c2):
    assert is_lie_automorphism(LinearEndo.identity(c2))
    lam = LinearEndo.scalar(c2, 3)
    e1, e12 = c2.e(1), c2.e(1, 2)
    assert lam(commutator(e1, e12)) != commutator(lam(e1), lam(e12))
    assert not is_lie_automorphism(lam)
    assert lie_automorphism_witness(LinearEndo.zero(c2)) == "singular"
    w = lie_automorphism_witness(lam)
    assert isinstance(w, tuple) and len(w) == 2


def test_inner_automorphisms_are_lie():
    rng = random.Random(4)
    for p in sweep_posets(4):
        for fld in FIELDS:
            alg = algebra(p, fld)
            assert is_lie_automorphism(inner_auto(random_unit(alg, rng)))


def test_lie_automorphism_check_matches_definition():
    rng = random.Random(5)
    for p in sweep_posets(3):
        alg = algebra(p, "p=3")
        for t in range(20):
            m = _random_matrix(alg, rng, density=0.3) if t % 2 else random_lie_automorphism(alg, rng)
            by_def = is_bijective(m) and all(
                m(commutator(alg.basis_element(i), alg.basis_element(j)))
                == commutator(m(alg.basis_element(i)), m(alg.basis_element(j)))
                for i, j in itertools.combinations_with_replacement(range(alg.dim), 2)
            )
            assert is_lie_automorphism(m) == by_def


def test_lie_automorphisms_compose():
    rng = random.Random(6)
    for p in sweep_posets(4):
        alg = algebra(p)
        a, b = random_lie_automorphism(alg, rng), random_lie_automorphism(alg, rng)
        assert is_lie_automorphism(compose(a, b))


# Hom-Jacobi


def test_defect_examples(c3):
    rng = random.Random(7)
    a, b, c = (random_element(c3, rng) for _ in range(3))
    assert hom_jacobi_defect(LinearEndo.identity(c3), a, b, c) == c3.zero()
    assert hom_jacobi_defect(LinearEndo.zero(c3), a, b, c) == c3.zero()
    xi = inner_auto(c3.delta() + c3.e(2, 3))
    assert hom_jacobi_defect(xi, c3.e(3), c3.e(1), c3.e(1, 2)) == c3.e(1, 3)


def test_hom_lie_examples(c2, c3):
    assert is_hom_lie_structure(LinearEndo.scalar(c2, 5))
    assert is_hom_lie_structure(inner_auto(c3.delta() + c3.e(1, 3)))
    assert not is_hom_lie_structure(inner_auto(c3.delta() + c3.e(2, 3)))
    assert not is_hom_lie_structure_slow(inner_auto(c3.delta() + c3.e(2, 3)))
    assert hom_jacobi_failures(inner_auto(c3.delta() + c3.e(2, 3)))


@pytest.mark.parametrize("field", FIELDS, ids=str)
def test_fast_checker_matches_triple_loop(field):
    """The vectorized d^3 tensor agrees with the plain loop over all basis triples."""
    rng = random.Random(8)
    for p in sweep_posets(4):
        alg = algebra(p, field)
        for _ in range(6):
            m = random_lie_automorphism(alg, rng)
            assert is_hom_lie_structure(m) == is_hom_lie_structure_slow(m)
            m = _random_matrix(alg, rng, density=0.2)
            assert is_hom_lie_structure(m) == is_hom_lie_structure_slow(m)
        lam = LinearEndo.scalar(alg, 2)
        assert is_hom_lie_structure(lam) and is_hom_lie_structure_slow(lam)


def test_failures_list_matches_defect():
    alg = algebra(Poset.chain(3))
    m = inner_auto(alg.delta() + alg.e(2, 3))
    bad = set(hom_jacobi_failures(m))
    for i, j, k in itertools.product(range(alg.dim), repeat=3):
        d = hom_jacobi_defect(m, alg.basis_element(i), alg.basis_element(j), alg.basis_element(k))
        assert bool(d) == ((i, j, k) in bad)


def test_basis_sufficiency():
    """A basis-level pass implies a vanishing defect on random full elements."""
    rng = random.Random(9)
    for p in sweep_posets(4)[:6]:
        alg = algebra(p)
        m = build_regular_homlie(random_params(alg, rng))
        assert is_hom_lie_structure(m)
        for _ in range(200 // 6 + 1):
            a, b, c = (random_element(alg, rng) for _ in range(3))
            assert hom_jacobi_defect(m, a, b, c) == alg.zero()


def test_basic_formulas_on_built_structures():
    rng = random.Random(10)
    for p in sweep_posets():
        alg = algebra(p)
        m = build_regular_homlie(random_params(alg, rng))
        assert basic_formula_failures(m) == []


# conjugation


def test_conjugate_examples(c3):
    rng = random.Random(11)
    m = random_lie_automorphism(c3, rng)
    psi = inner_auto(random_unit(c3, rng))
    ident = LinearEndo.identity(c3)
    assert conjugate(ident, m) == m
    assert conjugate(psi, ident) == ident
    xi = inner_auto(c3.delta() + c3.e(1, 3))
    for _ in range(10):
        gamma = random_unit(c3, rng)
        assert is_hom_lie_structure(conjugate(inner_auto(gamma), xi))
    with pytest.raises(NotInvertible):
        conjugate(LinearEndo.zero(c3), m)


def test_conjugation_closure():
    rng = random.Random(12)
    for p in sweep_posets(4):
        alg = algebra(p, "p=3")
        m = build_regular_homlie(random_params(alg, rng))
        psi = inner_auto(random_unit(alg, rng))
        assert is_hom_lie_structure(conjugate(psi, m))
