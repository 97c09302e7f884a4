import itertools
import random

import pytest

from homlie import (
    HomLieParams,
    LinearEndo,
    Poset,
    SigmaTable,
    build_regular_homlie,
    central_map,
    compose,
    compose_params,
    free_sigma_support,
    hom_jacobi_defect,
    inner_auto,
    invert_endo,
    invert_params,
    invert_unit,
    is_hom_lie_structure,
    is_lie_automorphism,
    is_multiplicative,
    multiplicative_auto,
    multiply,
    negative_transpose,
)
from homlie.endo import is_hom_lie_structure_slow
from homlie.errors import InvalidParams, NotAUnit, NotMultiplicative
from homlie.sampling import random_element, random_multiplicative, random_params, random_unit

from conftest import FIELDS, algebra, sweep_posets, v_poset


# M_sigma


def test_multiplicative_auto_examples(c2):
    assert multiplicative_auto(SigmaTable(c2)) == LinearEndo.identity(c2)
    m = multiplicative_auto(SigmaTable.from_labels(c2, {(1, 2): 2}))
    assert m.rows() == [[1, 0, 0], [0, 1, 0], [0, 0, 2]]


def test_multiplicative_auto_rejects_non_cocycles(c3):
    with pytest.raises(NotMultiplicative):
        multiplicative_auto(SigmaTable.from_labels(c3, {(1, 2): 2}))
    ok = SigmaTable.from_labels(c3, {(1, 2): 2, (2, 3): 3, (1, 3): 6})
    assert multiplicative_auto(ok)(c3.e(1, 3)) == c3.e(1, 3).scale(6)


@pytest.mark.parametrize("field", FIELDS, ids=str)
def test_multiplicative_autos_compose_by_hadamard(field):
    rng = random.Random(0)
    for p in sweep_posets(4):
        alg = algebra(p, field)
        s, t = random_multiplicative(alg, rng), random_multiplicative(alg, rng)
        assert compose(multiplicative_auto(s), multiplicative_auto(t)) == multiplicative_auto(s.hadamard(t))


# xi_b


def test_inner_auto_examples(c3):
    assert inner_auto(c3.delta()) == LinearEndo.identity(c3)
    xi = inner_auto(c3.delta() + c3.e(1, 3))
    assert xi(c3.e(3)) == c3.e(3) + c3.e(1, 3)
    assert xi(c3.e(1)) == c3.e(1) - c3.e(1, 3)
    assert xi(c3.e(2)) == c3.e(2)
    for x, y in [(1, 2), (2, 3), (1, 3)]:
        assert xi(c3.e(x, y)) == c3.e(x, y)
    with pytest.raises(NotAUnit):
        inner_auto(c3.e(1, 2))


def test_inner_auto_matches_conjugation_and_composes():
    rng = random.Random(1)
    for p in sweep_posets(4):
        alg = algebra(p)
        b, c = random_unit(alg, rng), random_unit(alg, rng)
        f = random_element(alg, rng)
        assert inner_auto(b)(f) == multiply(multiply(b, f), invert_unit(b))
        assert compose(inner_auto(b), inner_auto(c)) == inner_auto(multiply(b, c))


# nu


def test_central_map_examples(c2):
    assert central_map(c2, [0, 0]) == LinearEndo.zero(c2)
    nu = central_map(c2, {1: 1, 2: 0})
    assert nu(c2.e(1)) == c2.delta()
    assert nu(c2.e(2)) == c2.zero()
    assert nu(c2.e(1, 2)) == c2.zero()


def test_central_map_is_trace_like():
    rng = random.Random(2)
    for p in sweep_posets(4):
        alg = algebra(p)
        alpha = [alg.field.random_raw(rng) for _ in p.labels]
        f = random_element(alg, rng)
        t = sum(a * f[x, x].value for a, x in zip(alpha, p.labels))
        assert central_map(alg, alpha)(f) == alg.delta().scale(t)


# free sigma support


def test_free_sigma_support_examples():
    assert free_sigma_support(Poset.chain(3)) == []
    assert free_sigma_support(Poset.chain(2)) == [(1, 2)]
    assert free_sigma_support(v_poset()) == [("a", "c"), ("b", "c")]


def test_free_sigma_support_by_exhausting_cocycles():
    """Over GF(3), admissible tables are exactly the free-support tables."""
    for p in sweep_posets():
        alg = algebra(p, "p=3")
        center = alg.center_pairs
        admissible = []
        for vals in itertools.product((1, 2), repeat=len(center)):
            s = SigmaTable(alg, dict(zip(center, vals)))
            if is_multiplicative(s.element()):
                admissible.append(s)
        support = set().union(*(set(s.values) for s in admissible))
        assert support == set(alg.free_sigma_pairs)
        assert len(admissible) == 2 ** len(alg.free_sigma_pairs)
        assert all(s.is_admissible() for s in admissible)


# params


def test_params_validation(c3):
    with pytest.raises(InvalidParams):
        HomLieParams.create(c3, beta={(1, 2): 1})
    with pytest.raises(InvalidParams):
        HomLieParams.create(c3, sigma={(1, 3): 2})
    with pytest.raises(InvalidParams):
        HomLieParams.create(c3, alpha={1: -1})
    with pytest.raises(InvalidParams):
        SigmaTable.from_labels(c3, {(1, 2): 0})


def test_c_vector(c3):
    p = HomLieParams.create(c3, alpha={1: 2, 3: 5})
    assert [str(c) for c in p.c_vector()] == ["3", "0", "5"]
    total = sum(c.value for c in p.c_vector())
    assert total == 1 + sum(p.alpha)


def test_c_vector_matches_diagonal_of_built_map():
    """c_i is the (x_1, x_1) coefficient of the image of e_{x_i}."""
    rng = random.Random(3)
    for p in sweep_posets(4):
        alg = algebra(p)
        params = random_params(alg, rng)
        m = build_regular_homlie(params)
        first = p.labels[0]
        for x, c in zip(p.labels, params.c_vector()):
            assert m(alg.e(x))[first, first] == c


# build


def test_build_examples(c2, c3):
    assert build_regular_homlie(HomLieParams.trivial(c3)) == LinearEndo.identity(c3)
    phi = build_regular_homlie(HomLieParams.create(c3, beta={(1, 3): 1}))
    assert phi == inner_auto(c3.delta() + c3.e(1, 3))
    assert is_hom_lie_structure(phi) and is_lie_automorphism(phi)


def test_c2_sigma_two_over_all_27_triples(c2):
    phi = build_regular_homlie(HomLieParams.create(c2, sigma={(1, 2): 2}))
    assert phi(c2.e(1, 2)) == c2.e(1, 2).scale(2)
    assert phi(c2.e(1)) == c2.e(1) and phi(c2.e(2)) == c2.e(2)
    triples = list(itertools.product(range(3), repeat=3))
    assert len(triples) == 27
    for i, j, k in triples:
        b = c2.basis_element
        assert hom_jacobi_defect(phi, b(i), b(j), b(k)) == c2.zero()
    assert is_hom_lie_structure_slow(phi)


@pytest.mark.parametrize("field", FIELDS, ids=str)
def test_built_maps_are_regular(field):
    rng = random.Random(4)
    for p in sweep_posets():
        alg = algebra(p, field)
        for _ in range(3):
            params = random_params(alg, rng)
            phi = build_regular_homlie(params)
            assert is_hom_lie_structure(phi) and is_lie_automorphism(phi)
            for k, (i, j) in enumerate(alg.basis):
                if i != j:
                    assert phi.image(k) == alg.basis_element(k).scale(params.sigma.raw((i, j)))


@pytest.mark.parametrize("flag", ["p=2", "p=3"])
def test_build_is_injective(flag):
    """Exhaustive over every valid parameter triple on 2- and 3-element posets."""
    for p in sweep_posets(3):
        alg = algebra(p, flag)
        f = alg.field
        elems = list(range(f.modulus))
        units = list(range(1, f.modulus))
        seen = {}
        for beta in itertools.product(elems, repeat=len(alg.center_pairs)):
            for sig in itertools.product(units, repeat=len(alg.free_sigma_pairs)):
                for alpha in itertools.product(elems, repeat=len(p)):
                    if (1 + sum(alpha)) % f.modulus == 0:
                        continue
                    sigma = SigmaTable(alg, dict(zip(alg.free_sigma_pairs, sig)))
                    params = HomLieParams(alg, dict(zip(alg.center_pairs, beta)), sigma, alpha)
                    key = tuple(map(tuple, build_regular_homlie(params).rows()))
                    assert key not in seen
                    seen[key] = params
        assert len(seen) > 0


# group structure on parameters


def test_compose_params_examples(c2, c3):
    p = HomLieParams.create(c3, beta={(1, 3): 1}, alpha={2: 3})
    triv = HomLieParams.trivial(c3)
    assert compose_params(p, triv) == p == compose_params(triv, p)
    one = HomLieParams.create(c3, beta={(1, 3): 1})
    assert compose_params(one, one).beta_labels()[(1, 3)] == 2
    s2 = HomLieParams.create(c2, sigma={(1, 2): 2})
    s3 = HomLieParams.create(c2, sigma={(1, 2): 3})
    assert compose_params(s2, s3).sigma_labels()[(1, 2)] == 6


def test_invert_params_examples(c2, c3):
    assert invert_params(HomLieParams.trivial(c3)) == HomLieParams.trivial(c3)
    inv = invert_params(HomLieParams.create(c2, sigma={(1, 2): 2}))
    assert inv.sigma_labels()[(1, 2)] == c2.field(1, 2)


@pytest.mark.parametrize("field", FIELDS, ids=str)
def test_group_laws(field):
    rng = random.Random(5)
    for p in sweep_posets(4):
        alg = algebra(p, field)
        for _ in range(5):
            p1, p2, p3 = (random_params(alg, rng) for _ in range(3))
            b1, b2 = build_regular_homlie(p1), build_regular_homlie(p2)
            assert build_regular_homlie(compose_params(p1, p2)) == compose(b1, b2)
            assert build_regular_homlie(invert_params(p1)) == invert_endo(b1)
            assert compose_params(p1, invert_params(p1)) == HomLieParams.trivial(alg)
            assert compose_params(compose_params(p1, p2), p3) == compose_params(p1, compose_params(p2, p3))


# negative transposes


def test_negative_transpose(c3):
    t = negative_transpose(c3, (2, 1, 0))
    assert t(c3.e(1, 2)) == -c3.e(2, 3)
    assert t(c3.e(1)) == -c3.e(3)
    assert is_lie_automorphism(t)
    assert compose(t, t) == LinearEndo.identity(c3)
    assert not is_hom_lie_structure(t)
    with pytest.raises(ValueError):
        negative_transpose(c3, (0, 1, 2))


def test_negative_transpose_on_length_one_is_regular(c2):
    # on C2 minus the reversal is M_sigma (sigma = -1) plus the shift alpha = (-1, -1)
    t = negative_transpose(c2, (1, 0))
    assert t == build_regular_homlie(HomLieParams.create(c2, sigma={(1, 2): -1}, alpha={1: -1, 2: -1}))
