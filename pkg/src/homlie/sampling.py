"""Seeded random generators for elements, parameters and Lie automorphisms.

All generators take a ``random.Random`` instance so that sweeps are
reproducible.  Random Lie automorphisms are drawn from the constructible
family ``xi_b . M_s + nu`` (inner, multiplicative, central shift), optionally
followed by minus a transpose along an order-reversing bijection.  The family
contains both regular Hom-Lie structures and Lie automorphisms that are not.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .endo import LinearEndo, compose
from .incidence import IncidenceAlgebra, IncidenceElement, invert_unit
from .structures import (
    HomLieParams,
    SigmaTable,
    central_map,
    inner_auto,
    multiplicative_auto,
    negative_transpose,
)


def random_element(alg: IncidenceAlgebra, rng: random.Random, density: float = 1.0) -> IncidenceElement:
    f = alg.field
    coeffs = {}
    for ij in alg.basis:
        if rng.random() < density:
            v = f.random_raw(rng)
            if v != 0:
                coeffs[ij] = v
    return IncidenceElement(alg, coeffs)


def random_unit(alg: IncidenceAlgebra, rng: random.Random, unipotent: bool = False) -> IncidenceElement:
    """Random unit; ``unipotent`` forces the diagonal part to be delta."""
    f = alg.field
    coeffs = {}
    for ij in alg.basis:
        if ij[0] == ij[1]:
            coeffs[ij] = f.one_raw if unipotent else f.random_raw(rng, nonzero=True)
        else:
            v = f.random_raw(rng)
            if v != 0:
                coeffs[ij] = v
    return IncidenceElement(alg, coeffs)


def random_center(alg: IncidenceAlgebra, rng: random.Random) -> dict:
    """Random coefficients on the Z(J) basis (index-keyed, zeros dropped)."""
    f = alg.field
    out = {}
    for ij in alg.center_pairs:
        v = f.random_raw(rng)
        if v != 0:
            out[ij] = v
    return out


def random_admissible_sigma(alg: IncidenceAlgebra, rng: random.Random) -> SigmaTable:
    f = alg.field
    return SigmaTable(alg, {ij: f.random_raw(rng, nonzero=True) for ij in alg.free_sigma_pairs})


def random_multiplicative(alg: IncidenceAlgebra, rng: random.Random) -> SigmaTable:
    """Random multiplicative table: a coboundary g(y)/g(x) times free-support factors.

    Not every multiplicative element has this form, but the family is
    closed under the Hadamard product and covers both admissible and
    non-admissible tables.
    """
    f = alg.field
    n = len(alg.poset)
    g = [f.random_raw(rng, nonzero=True) for _ in range(n)]
    free = random_admissible_sigma(alg, rng)
    vals = {}
    for (i, j) in alg.basis:
        if i != j:
            vals[(i, j)] = f.reduce(g[j] * f.inv(g[i]) * free.raw((i, j)))
    return SigmaTable(alg, vals)


def random_alpha(alg: IncidenceAlgebra, rng: random.Random) -> tuple:
    """alpha values with 1 + sum(alpha) != 0."""
    f = alg.field
    while True:
        alpha = tuple(f.random_raw(rng) for _ in range(len(alg.poset)))
        if f.reduce(1 + sum(alpha)) != 0:
            return alpha


def random_params(alg: IncidenceAlgebra, rng: random.Random) -> HomLieParams:
    return HomLieParams(alg, random_center(alg, rng), random_admissible_sigma(alg, rng), random_alpha(alg, rng))


@dataclass
class Constructible:
    """A Lie automorphism ``(xi_b . M_s + nu_alpha) . T`` kept in factored form.

    ``T`` is the identity when ``anti`` is None, otherwise the negative
    transpose along the order-reversing bijection ``anti``.
    """

    b: IncidenceElement
    s: SigmaTable
    alpha: tuple
    anti: tuple | None = None

    def endo(self) -> LinearEndo:
        alg = self.b.algebra
        m = compose(inner_auto(self.b), multiplicative_auto(self.s)) + central_map(alg, self.alpha)
        if self.anti is not None:
            m = compose(m, negative_transpose(alg, self.anti))
        return m

    def inverse_endo(self) -> LinearEndo:
        """T^-1 . (M_s + nu)^-1 . xi_{b^-1}, with (M_s + nu)^-1 = M_{1/s} + nu_{-alpha/(1 + sum alpha)}."""
        alg = self.b.algebra
        f = alg.field
        k = f.inv(f.reduce(1 + sum(self.alpha)))
        alpha = [f.reduce(-a * k) for a in self.alpha]
        tau_inv = multiplicative_auto(self.s.inverse()) + central_map(alg, alpha)
        m = compose(tau_inv, inner_auto(invert_unit(self.b)))
        if self.anti is not None:
            back = [0] * len(self.anti)
            for i, ti in enumerate(self.anti):
                back[ti] = i
            m = compose(negative_transpose(alg, tuple(back)), m)
        return m


KINDS = ("valid", "bad_beta", "bad_sigma", "random", "anti")


def random_constructible(alg: IncidenceAlgebra, rng: random.Random, kind: str | None = None) -> Constructible:
    """Random constructible Lie automorphism.

    ``kind``:
      * ``"valid"``: b = c (delta + rho) with rho in Z(J), admissible s;
      * ``"bad_beta"``: like valid but rho is a full random strict element;
      * ``"bad_sigma"``: like valid but s is a random multiplicative table;
      * ``"random"``: random unit b and random multiplicative s;
      * ``"anti"``: ``"random"`` followed by a negative transpose (falls back
        to ``"random"`` when the poset is not self-dual).
    ``None`` picks one of these uniformly.
    """
    f = alg.field
    if kind is None:
        kind = rng.choice(KINDS)
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    anti = None
    if kind == "anti":
        antis = alg.poset.anti_automorphisms
        if antis:
            anti = rng.choice(antis)
        kind = "random"
    if kind == "random":
        b = random_unit(alg, rng)
        s = random_multiplicative(alg, rng)
    else:
        if kind == "bad_beta":
            b = random_unit(alg, rng, unipotent=True)
        else:
            b = alg.delta() + IncidenceElement(alg, random_center(alg, rng))
        c = f.random_raw(rng, nonzero=True)
        b = b.scale(c)
        s = random_multiplicative(alg, rng) if kind == "bad_sigma" else random_admissible_sigma(alg, rng)
    return Constructible(b, s, random_alpha(alg, rng), anti)


def random_lie_automorphism(alg: IncidenceAlgebra, rng: random.Random, kind: str | None = None) -> LinearEndo:
    return random_constructible(alg, rng, kind).endo()
