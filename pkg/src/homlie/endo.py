"""Linear endomorphisms of I(X, K) as exact matrices over the canonical basis.

Column ``j`` of a :class:`LinearEndo` is the image of basis element ``j``.

The whole-basis checks (:func:`is_lie_automorphism`,
:func:`is_hom_lie_structure`) run on an integer copy of the matrix: over Q
the entries are multiplied by the lcm of their denominators, which scales
both sides of each identity by a known nonzero factor, and over GF(p) the
residues are used directly and the results are reduced mod p. The bracket
of two basis elements is a single signed basis element, so the Hom-Jacobi
defect over all d^3 basis triples costs O(d^4) instead of O(d^6).
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import cached_property

import numpy as np

from .errors import ContextMismatch, NotInvertible
from .incidence import IncidenceAlgebra, IncidenceElement, commutator

_INT64_SAFE = 1 << 62


class LinearEndo:
    """Immutable d x d matrix of raw field values, stored by columns."""

    def __init__(self, algebra: IncidenceAlgebra, columns):
        cols = [list(c) for c in columns]
        d = algebra.dim
        if len(cols) != d or any(len(c) != d for c in cols):
            raise ValueError(f"expected a {d} x {d} matrix")
        self.algebra = algebra
        self.columns = cols

    # constructors

    @classmethod
    def identity(cls, algebra: IncidenceAlgebra) -> LinearEndo:
        return cls.scalar(algebra, 1)

    @classmethod
    def scalar(cls, algebra: IncidenceAlgebra, lam) -> LinearEndo:
        f = algebra.field
        lam = f.coerce_raw(lam)
        z = f.zero_raw
        d = algebra.dim
        return cls(algebra, [[lam if i == j else z for i in range(d)] for j in range(d)])

    @classmethod
    def zero(cls, algebra: IncidenceAlgebra) -> LinearEndo:
        return cls.scalar(algebra, 0)

    @classmethod
    def from_images(cls, algebra: IncidenceAlgebra, images) -> LinearEndo:
        """From the images of the basis elements, in basis order."""
        cols = []
        for img in images:
            algebra.check(img.algebra)
            cols.append(img.to_vector())
        return cls(algebra, cols)

    @classmethod
    def from_function(cls, algebra: IncidenceAlgebra, fn) -> LinearEndo:
        return cls.from_images(algebra, [fn(algebra.basis_element(k)) for k in range(algebra.dim)])

    @classmethod
    def from_rows(cls, algebra: IncidenceAlgebra, rows) -> LinearEndo:
        f = algebra.field
        rows = [[f.coerce_raw(v) for v in r] for r in rows]
        d = algebra.dim
        if len(rows) != d or any(len(r) != d for r in rows):
            raise ValueError(f"expected a {d} x {d} matrix")
        return cls(algebra, [[rows[i][j] for i in range(d)] for j in range(d)])

    # accessors

    @property
    def field(self):
        return self.algebra.field

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def rows(self) -> list:
        d = self.dim
        return [[self.columns[j][i] for j in range(d)] for i in range(d)]

    def image(self, k: int) -> IncidenceElement:
        """Image of the k-th basis element."""
        return self.algebra.from_vector(self.columns[k])

    def image_of(self, x, y=None) -> IncidenceElement:
        idx = self.algebra.poset._idx
        ij = (idx(x), idx(x if y is None else y))
        return self.image(self.algebra.basis_index[ij])

    def __call__(self, f: IncidenceElement) -> IncidenceElement:
        return apply(self, f)

    def __matmul__(self, other):
        if isinstance(other, LinearEndo):
            return compose(self, other)
        return NotImplemented

    def __add__(self, other):
        if not isinstance(other, LinearEndo):
            return NotImplemented
        self.algebra.check(other.algebra)
        red = self.field.reduce
        return LinearEndo(
            self.algebra,
            [
                [red(a + b) if a and b else (b if not a else a) for a, b in zip(c1, c2)]
                for c1, c2 in zip(self.columns, other.columns)
            ],
        )

    def __eq__(self, other):
        if not isinstance(other, LinearEndo):
            return NotImplemented
        return self.algebra == other.algebra and self.columns == other.columns

    __hash__ = None

    def __repr__(self):
        return f"LinearEndo(dim={self.dim}, field={self.field})"

    # integer copy used by the vectorized checks

    @cached_property
    def lifted(self) -> tuple[np.ndarray, int]:
        """(integer matrix, scale): the matrix times ``scale`` (Q) or residues (GF(p))."""
        vals = [v for c in self.columns for v in c]
        if self.field.kind == "Q":
            scale = math.lcm(*(v.denominator for v in vals))
            ints = [v.numerator * (scale // v.denominator) for v in vals]
        else:
            scale = 1
            ints = [int(v) for v in vals]
        d = self.dim
        bound = max((abs(v) for v in ints), default=0)
        dtype = np.int64 if (bound + 1) ** 2 * 4 * (d + 1) ** 3 < _INT64_SAFE else object
        arr = np.array(ints, dtype=dtype).reshape(d, d).T  # rows x columns
        return np.ascontiguousarray(arr), scale


def _check_same(*objs):
    alg = objs[0].algebra
    for o in objs[1:]:
        if o.algebra is not alg and o.algebra != alg:
            raise ContextMismatch(f"{o.algebra!r} vs {alg!r}")


def apply(m: LinearEndo, f: IncidenceElement) -> IncidenceElement:
    """Matrix-vector action in the canonical basis."""
    _check_same(m, f)
    bi = m.algebra.basis_index
    acc = [0] * m.dim
    for ij, c in f.coeffs.items():
        col = m.columns[bi[ij]]
        for i, v in enumerate(col):
            if v != 0:
                acc[i] = acc[i] + c * v
    red = m.field.reduce
    return m.algebra.from_vector([red(v) for v in acc])


def compose(m1: LinearEndo, m2: LinearEndo) -> LinearEndo:
    """m1 after m2 (integer matrix product on the lifted copies)."""
    _check_same(m1, m2)
    a1, s1 = m1.lifted
    a2, s2 = m2.lifted
    if a1.dtype != object and a2.dtype != object:
        b1 = int(np.abs(a1).max(initial=0))
        b2 = int(np.abs(a2).max(initial=0))
        if b1 * b2 * m1.dim >= _INT64_SAFE:
            a1, a2 = a1.astype(object), a2.astype(object)
    prod = (a1 @ a2).T.tolist()
    f = m1.field
    if f.kind == "Q":
        den = s1 * s2
        zero = f.zero_raw
        cols = [[Fraction(v, den) if v else zero for v in col] for col in prod]
    else:
        p = f.modulus
        cols = [[v % p for v in col] for col in prod]
    return LinearEndo(m1.algebra, cols)


def _eliminate(m: LinearEndo, want_inverse: bool):
    """Gauss-Jordan on [A | I]; returns (rank, inverse-or-None)."""
    f = m.field
    red, inv = f.reduce, f.inv
    d = m.dim
    zero, one = f.zero_raw, f.one_raw
    a = m.rows()
    e = [[one if i == j else zero for j in range(d)] for i in range(d)] if want_inverse else None
    rank = 0
    for col in range(d):
        piv = next((r for r in range(rank, d) if a[r][col] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        if want_inverse:
            e[rank], e[piv] = e[piv], e[rank]
        p_inv = inv(a[rank][col])
        a[rank] = [red(v * p_inv) if v != 0 else zero for v in a[rank]]
        nz_a = [j for j, v in enumerate(a[rank]) if v != 0]
        if want_inverse:
            e[rank] = [red(v * p_inv) if v != 0 else zero for v in e[rank]]
            nz_e = [j for j, v in enumerate(e[rank]) if v != 0]
        for r in range(d):
            if r == rank:
                continue
            fac = a[r][col]
            if fac == 0:
                continue
            row, prow = a[r], a[rank]
            for j in nz_a:
                row[j] = red(row[j] - fac * prow[j])
            if want_inverse:
                row, prow = e[r], e[rank]
                for j in nz_e:
                    row[j] = red(row[j] - fac * prow[j])
        rank += 1
    return rank, e


def rank(m: LinearEndo) -> int:
    if m.field.kind == "Q":
        return _integer_rank([list(r) for r in m.lifted[0].tolist()])
    return _eliminate(m, False)[0]


def _integer_rank(a) -> int:
    """Fraction-free (Bareiss) rank of an integer matrix."""
    d = len(a)
    rank = 0
    prev = 1
    for col in range(d):
        piv = next((r for r in range(rank, d) if a[r][col] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][col]
        for r in range(rank + 1, d):
            arc = a[r][col]
            row = a[r]
            prow = a[rank]
            for j in range(col, d):
                row[j] = (p * row[j] - arc * prow[j]) // prev
        prev = p
        rank += 1
    return rank


def is_bijective(m: LinearEndo) -> bool:
    return rank(m) == m.dim


def invert_endo(m: LinearEndo) -> LinearEndo:
    r, e = _eliminate(m, True)
    if r < m.dim:
        raise NotInvertible(f"rank {r} < {m.dim}")
    d = m.dim
    return LinearEndo(m.algebra, [[e[i][j] for i in range(d)] for j in range(d)])


def conjugate(psi: LinearEndo, m: LinearEndo) -> LinearEndo:
    """psi . m . psi^-1"""
    return compose(psi, compose(m, invert_endo(psi)))


# bracket-preservation and Hom-Jacobi checks


def _is_zero(arr: np.ndarray, modulus) -> np.ndarray:
    if modulus:
        return arr % modulus == 0
    return arr == 0


def lie_automorphism_witness(m: LinearEndo):
    """None if m is a Lie automorphism; else ``"singular"`` or a failing basis index pair."""
    if not is_bijective(m):
        return "singular"
    alg = m.algebra
    phi, scale = m.lifted
    d = m.dim
    A = alg.ad_tensor.astype(phi.dtype)
    # ad(phi(b_i)) = sum_m phi[m, i] A[m]; rhs[i, :, j] = [phi b_i, phi b_j]
    ad_img = np.tensordot(phi.T, A, axes=(1, 0))
    rhs = ad_img @ phi
    lhs = np.zeros_like(rhs)
    a, b, mm, s = alg.bracket_arrays
    if len(a):
        lhs[a, :, b] = (s[:, None] * scale).astype(phi.dtype) * phi[:, mm].T
    bad = ~_is_zero(lhs - rhs, m.field.modulus)
    if not bad.any():
        return None
    i, _, j = np.argwhere(bad)[0]
    return int(i), int(j)


def is_lie_automorphism(m: LinearEndo) -> bool:
    return lie_automorphism_witness(m) is None


def defect_tensor(m: LinearEndo) -> np.ndarray:
    """Integer array D[i, j, k, :] of Hom-Jacobi defects on basis triples.

    Equal to the true defect times the lift scale (Q), or congruent to it
    mod p (GF(p)).
    """
    alg = m.algebra
    phi, _ = m.lifted
    d = m.dim
    P = alg.ad_tensor.astype(phi.dtype) @ phi  # P[m][:, k] = [b_m, phi(b_k)]
    T = np.zeros((d, d, d, d), dtype=phi.dtype)
    a, b, mm, s = alg.bracket_arrays
    if len(a):
        T[a, b] = s.astype(phi.dtype)[:, None, None] * P[mm].transpose(0, 2, 1)
    return T + np.einsum("jkil->ijkl", T) + np.einsum("kijl->ijkl", T)


def is_hom_lie_structure(m: LinearEndo) -> bool:
    """Hom-Jacobi identity on every one of the d^3 basis triples."""
    return bool(_is_zero(defect_tensor(m), m.field.modulus).all())


def hom_jacobi_failures(m: LinearEndo) -> list:
    """Basis index triples (i, j, k) with nonzero defect."""
    bad = ~_is_zero(defect_tensor(m), m.field.modulus).all(axis=3)
    return [tuple(int(t) for t in v) for v in np.argwhere(bad)]


def hom_jacobi_defect(m: LinearEndo, a, b, c) -> IncidenceElement:
    """[[a, b], m(c)] + [[b, c], m(a)] + [[c, a], m(b)], computed elementwise."""
    _check_same(m, a, b, c)
    return (
        commutator(commutator(a, b), apply(m, c))
        + commutator(commutator(b, c), apply(m, a))
        + commutator(commutator(c, a), apply(m, b))
    )


def is_hom_lie_structure_slow(m: LinearEndo) -> bool:
    """Reference check: evaluate the defect on every basis triple one at a time."""
    basis = [m.algebra.basis_element(k) for k in range(m.dim)]
    for a in basis:
        for b in basis:
            for c in basis:
                if hom_jacobi_defect(m, a, b, c):
                    return False
    return True


def basic_formula_failures(m: LinearEndo) -> list:
    """Triples x < y < z violating

    [m(e_xy), e_yz] = [e_xz, m(e_z)]  and  [e_xy, m(e_yz)] = [m(e_x), e_xz].
    """
    alg = m.algebra
    leq = alg.poset.leq
    n = len(alg.poset)
    bi = alg.basis_index
    one = alg.field.one_raw

    def e(i, j):
        return IncidenceElement(alg, {(i, j): one})

    def img(i, j):
        return m.image(bi[(i, j)])

    bad = []
    for x in range(n):
        for y in range(n):
            if x == y or not leq[x][y]:
                continue
            for z in range(n):
                if z == y or not leq[y][z]:
                    continue
                ok1 = commutator(img(x, y), e(y, z)) == commutator(e(x, z), img(z, z))
                ok2 = commutator(e(x, y), img(y, z)) == commutator(img(x, x), e(x, z))
                if not (ok1 and ok2):
                    bad.append(tuple(alg.poset.labels[t] for t in (x, y, z)))
    return bad
