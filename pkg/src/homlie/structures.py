"""Building blocks of regular Hom-Lie structures and their parameters.

A regular Hom-Lie structure is assembled as ``xi_beta . M_sigma + nu`` where

* ``beta = delta + rho`` with ``rho`` in Z(J) (the span of ``e_xy`` with
  ``x`` minimal and ``y`` maximal),
* ``sigma`` is 1 everywhere except possibly on covers ``x < y`` with ``x``
  minimal and ``y`` maximal (:func:`free_sigma_support`),
* ``nu(e_x) = alpha_x * delta`` and ``nu`` kills the radical.

:class:`HomLieParams` holds ``(rho, sigma, alpha)`` in a canonical form, so
``==`` on parameters is equality of the structures they build.
"""

from __future__ import annotations

from .endo import LinearEndo, compose
from .errors import InvalidParams, NotMultiplicative
from .incidence import (
    IncidenceAlgebra,
    IncidenceElement,
    invert_unit,
    is_multiplicative,
)
from .poset import Poset
from .scalars import Field, Scalar


def free_sigma_support(p: Poset) -> list:
    """Covers x < y with x minimal and y maximal, in basis order.

    Every other off-diagonal value of an admissible sigma is forced to 1:
    a center pair (x, z) with x < y < z gets sigma(x, y) sigma(y, z) = 1 * 1.
    """
    alg = IncidenceAlgebra(p, Field.rationals())
    return [alg.label_pair(ij) for ij in alg.free_sigma_pairs]


class SigmaTable:
    """A map X^2_< -> K*, stored as its entries different from 1.

    Keys are index pairs.  ``element()`` extends the table by 1 on the
    diagonal.
    """

    __slots__ = ("algebra", "values")

    def __init__(self, algebra: IncidenceAlgebra, values: dict | None = None):
        one = algebra.field.one_raw
        vals = {}
        for ij, v in (values or {}).items():
            if ij[0] == ij[1] or ij not in algebra.basis_index:
                raise InvalidParams(f"sigma entry off X^2_<: {algebra.label_pair(ij)}")
            if v == 0:
                raise InvalidParams(f"sigma vanishes at {algebra.label_pair(ij)}")
            if v != one:
                vals[ij] = v
        self.algebra = algebra
        self.values = vals

    @classmethod
    def from_labels(cls, algebra: IncidenceAlgebra, values: dict) -> SigmaTable:
        idx = algebra.poset._idx
        return cls(
            algebra,
            {(idx(x), idx(y)): algebra.field.coerce_raw(v) for (x, y), v in values.items()},
        )

    @classmethod
    def admissible(cls, algebra: IncidenceAlgebra, values: dict | None = None) -> SigmaTable:
        """Admissible table from label-keyed values on the free support."""
        s = cls.from_labels(algebra, values or {})
        free = set(algebra.free_sigma_pairs)
        for ij in s.values:
            if ij not in free:
                raise InvalidParams(f"sigma must be 1 at {algebra.label_pair(ij)}")
        return s

    @classmethod
    def from_element(cls, s: IncidenceElement) -> SigmaTable:
        return cls(s.algebra, {ij: v for ij, v in s.coeffs.items() if ij[0] != ij[1]})

    def raw(self, ij):
        return self.values.get(ij, self.algebra.field.one_raw)

    def __getitem__(self, xy) -> Scalar:
        idx = self.algebra.poset._idx
        return Scalar(self.algebra.field, self.raw((idx(xy[0]), idx(xy[1]))))

    def element(self) -> IncidenceElement:
        one = self.algebra.field.one_raw
        return IncidenceElement(self.algebra, {ij: self.values.get(ij, one) for ij in self.algebra.basis})

    def is_admissible(self) -> bool:
        """sigma = 1 off Min x Max and sigma is a cocycle."""
        center = set(self.algebra.center_pairs)
        if any(ij not in center for ij in self.values):
            return False
        return is_multiplicative(self.element())

    def hadamard(self, other: SigmaTable) -> SigmaTable:
        self.algebra.check(other.algebra)
        red = self.algebra.field.reduce
        keys = set(self.values) | set(other.values)
        return SigmaTable(self.algebra, {k: red(self.raw(k) * other.raw(k)) for k in keys})

    def inverse(self) -> SigmaTable:
        f = self.algebra.field
        return SigmaTable(self.algebra, {k: f.reduce(f.inv(v)) for k, v in self.values.items()})

    def __eq__(self, other):
        if not isinstance(other, SigmaTable):
            return NotImplemented
        return self.algebra == other.algebra and self.values == other.values

    def __repr__(self):
        body = ", ".join(f"{self.algebra.label_pair(k)}: {v}" for k, v in sorted(self.values.items()))
        return f"SigmaTable({{{body}}})"


class HomLieParams:
    """(beta_J coefficients on Z(J), admissible sigma, alpha) with beta_D = delta.

    ``beta`` keys are index pairs from ``algebra.center_pairs`` (nonzero
    values only); ``alpha`` is a tuple indexed like the poset's elements.
    """

    __slots__ = ("algebra", "beta", "sigma", "alpha")

    def __init__(self, algebra: IncidenceAlgebra, beta: dict, sigma: SigmaTable, alpha):
        center = set(algebra.center_pairs)
        for ij in beta:
            if ij not in center:
                raise InvalidParams(f"beta coefficient outside Z(J) at {algebra.label_pair(ij)}")
        algebra.check(sigma.algebra)
        free = set(algebra.free_sigma_pairs)
        for ij in sigma.values:
            if ij not in free:
                raise InvalidParams(f"sigma must be 1 at {algebra.label_pair(ij)}")
        alpha = tuple(alpha)
        if len(alpha) != len(algebra.poset):
            raise InvalidParams("alpha needs one value per element")
        f = algebra.field
        if f.reduce(1 + sum(alpha)) == 0:
            raise InvalidParams("1 + sum(alpha) must be nonzero")
        self.algebra = algebra
        self.beta = {ij: v for ij, v in beta.items() if v != 0}
        self.sigma = sigma
        self.alpha = alpha

    @classmethod
    def create(cls, algebra: IncidenceAlgebra, beta=None, sigma=None, alpha=None) -> HomLieParams:
        """Label-keyed constructor; omitted parts are trivial."""
        f = algebra.field
        idx = algebra.poset._idx
        b = {(idx(x), idx(y)): f.coerce_raw(v) for (x, y), v in (beta or {}).items()}
        s = SigmaTable.admissible(algebra, sigma or {})
        a = [f.zero_raw] * len(algebra.poset)
        for x, v in (alpha or {}).items():
            a[idx(x)] = f.coerce_raw(v)
        return cls(algebra, b, s, a)

    @classmethod
    def trivial(cls, algebra: IncidenceAlgebra) -> HomLieParams:
        return cls.create(algebra)

    # label-keyed views

    def beta_labels(self) -> dict:
        """All Z(J) basis pairs -> Scalar (zeros included)."""
        f = self.algebra.field
        return {
            self.algebra.label_pair(ij): Scalar(f, self.beta.get(ij, f.zero_raw))
            for ij in self.algebra.center_pairs
        }

    def sigma_labels(self) -> dict:
        """Free sigma pairs -> Scalar."""
        return {
            self.algebra.label_pair(ij): Scalar(self.algebra.field, self.sigma.raw(ij))
            for ij in self.algebra.free_sigma_pairs
        }

    def alpha_labels(self) -> dict:
        f = self.algebra.field
        return {x: Scalar(f, a) for x, a in zip(self.algebra.poset.labels, self.alpha)}

    def beta_element(self) -> IncidenceElement:
        """beta = delta + rho."""
        return self.algebra.delta() + IncidenceElement(self.algebra, dict(self.beta))

    def c_vector(self) -> list:
        """The diagonal sequence c with c_i = alpha_{x_i} + [i = 1]."""
        f = self.algebra.field
        return [Scalar(f, f.reduce(a + (1 if i == 0 else 0))) for i, a in enumerate(self.alpha)]

    def is_trivial(self) -> bool:
        return not self.beta and not self.sigma.values and all(a == 0 for a in self.alpha)

    def __eq__(self, other):
        if not isinstance(other, HomLieParams):
            return NotImplemented
        return (
            self.algebra == other.algebra
            and self.beta == other.beta
            and self.sigma == other.sigma
            and self.alpha == other.alpha
        )

    def __repr__(self):
        b = {k: str(v) for k, v in self.beta_labels().items() if v}
        s = {k: str(v) for k, v in self.sigma_labels().items() if v != 1}
        a = [str(v) for v in self.alpha]
        return f"HomLieParams(beta={b}, sigma={s}, alpha={a})"


def multiplicative_auto(s) -> LinearEndo:
    """M_s: e_xy -> s(x, y) e_xy.  ``s`` is a SigmaTable or a multiplicative element."""
    if isinstance(s, SigmaTable):
        alg = s.algebra
        table = s.element()
        free = set(alg.free_sigma_pairs)
        # tables supported on the free support are cocycles by construction
        if not all(ij in free for ij in s.values) and not is_multiplicative(table):
            raise NotMultiplicative(repr(s))
    else:
        alg = s.algebra
        table = s
        if not is_multiplicative(table):
            raise NotMultiplicative(repr(s))
    z = alg.field.zero_raw
    d = alg.dim
    cols = []
    for j, ij in enumerate(alg.basis):
        col = [z] * d
        col[j] = table.coeffs[ij]
        cols.append(col)
    return LinearEndo(alg, cols)


def inner_auto(b: IncidenceElement) -> LinearEndo:
    """xi_b: f -> b f b^-1."""
    alg = b.algebra
    binv = invert_unit(b)
    red = alg.field.reduce
    bi = alg.basis_index
    z = alg.field.zero_raw
    # (b e_xy b^-1)(u, v) = b(u, x) b^-1(y, v)
    col_of = {}
    for (u, x), v in b.coeffs.items():
        col_of.setdefault(x, []).append((u, v))
    row_of = {}
    for (y, w), v in binv.coeffs.items():
        row_of.setdefault(y, []).append((w, v))
    cols = []
    for (x, y) in alg.basis:
        col = [z] * alg.dim
        for u, a in col_of.get(x, ()):
            for w, c in row_of.get(y, ()):
                col[bi[(u, w)]] = red(a * c)
        cols.append(col)
    return LinearEndo(alg, cols)


def negative_transpose(algebra: IncidenceAlgebra, t) -> LinearEndo:
    """e_xy -> -e_{t(y) t(x)} for an order-reversing bijection ``t`` (index tuple).

    Minus an algebra anti-automorphism, hence a Lie automorphism.
    """
    f = algebra.field
    if tuple(t) not in algebra.poset.anti_automorphisms:
        raise ValueError(f"{t} is not an anti-automorphism of the poset")
    bi = algebra.basis_index
    minus_one = f.reduce(-1)
    cols = []
    for (i, j) in algebra.basis:
        col = [f.zero_raw] * algebra.dim
        col[bi[(t[j], t[i])]] = minus_one
        cols.append(col)
    return LinearEndo(algebra, cols)


def central_map(algebra: IncidenceAlgebra, alpha) -> LinearEndo:
    """nu: e_x -> alpha_x delta, e_xy -> 0 for x < y.

    ``alpha`` is a label-keyed dict or a sequence in element order.
    """
    f = algebra.field
    n = len(algebra.poset)
    if isinstance(alpha, dict):
        vals = [f.zero_raw] * n
        for x, v in alpha.items():
            vals[algebra.poset._idx(x)] = f.coerce_raw(v)
    else:
        vals = [f.coerce_raw(v) for v in alpha]
        if len(vals) != n:
            raise ValueError("alpha needs one value per element")
    d = algebra.dim
    z = f.zero_raw
    cols = []
    for (i, j) in algebra.basis:
        col = [z] * d
        if i == j:
            for k in range(n):
                col[k] = vals[i]  # diagonal basis elements come first
        cols.append(col)
    return LinearEndo(algebra, cols)


def build_regular_homlie(params: HomLieParams) -> LinearEndo:
    """xi_beta . M_sigma + nu."""
    alg = params.algebra
    return compose(inner_auto(params.beta_element()), multiplicative_auto(params.sigma)) + central_map(
        alg, params.alpha
    )


def compose_params(p1: HomLieParams, p2: HomLieParams) -> HomLieParams:
    """Parameters of build(p1) . build(p2)."""
    alg = p1.algebra
    alg.check(p2.algebra)
    red = alg.field.reduce
    beta = {}
    for ij in alg.center_pairs:
        v = red(p1.beta.get(ij, 0) + p1.sigma.raw(ij) * p2.beta.get(ij, 0))
        if v != 0:
            beta[ij] = v
    sigma = p1.sigma.hadamard(p2.sigma)
    s1 = sum(p1.alpha)
    alpha = [red(a1 + a2 + a2 * s1) for a1, a2 in zip(p1.alpha, p2.alpha)]
    return HomLieParams(alg, beta, sigma, alpha)


def invert_params(p: HomLieParams) -> HomLieParams:
    """Parameters of build(p)^-1."""
    alg = p.algebra
    f = alg.field
    red = f.reduce
    beta = {ij: red(-v * f.inv(p.sigma.raw(ij))) for ij, v in p.beta.items()}
    k = f.inv(f.reduce(1 + sum(p.alpha)))
    alpha = [red(-a * k) for a in p.alpha]
    return HomLieParams(alg, beta, p.sigma.inverse(), alpha)
