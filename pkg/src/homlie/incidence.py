"""The incidence algebra I(X, K) of a finite poset over an exact field.

Elements are sparse: a dict from index pairs ``(i, j)`` with ``i <= j`` to
nonzero raw field values.  The basis is ordered by
``(l(x, y), position of x, position of y)``, so the diagonal comes first and
each power of the radical is a tail of the basis.
"""

from __future__ import annotations

from functools import cached_property

import numpy as np

from .errors import ContextMismatch, NotAUnit, ZeroElement
from .poset import Poset
from .scalars import Field, Scalar


class IncidenceAlgebra:
    """I(X, K): a poset paired with a field, plus cached basis data."""

    def __init__(self, poset: Poset, field: Field):
        self.poset = poset
        self.field = field
        lt = poset.length_table
        self.basis = sorted(lt, key=lambda ij: (lt[ij], ij[0], ij[1]))
        self.basis_index = {ij: k for k, ij in enumerate(self.basis)}
        self.dim = len(self.basis)

    def __eq__(self, other):
        return (
            isinstance(other, IncidenceAlgebra)
            and self.poset == other.poset
            and self.field == other.field
        )

    def __hash__(self):
        return hash((self.poset, self.field))

    def __repr__(self):
        return f"IncidenceAlgebra({self.poset!r}, {self.field})"

    def check(self, other: IncidenceAlgebra):
        if other is not self and other != self:
            raise ContextMismatch(f"{other!r} vs {self!r}")

    # element constructors

    def element(self, coeffs=None) -> IncidenceElement:
        """Element from ``{(x, y): value}`` keyed by labels."""
        out = {}
        idx = self.poset._idx
        for (x, y), v in (coeffs or {}).items():
            i, j = idx(x), idx(y)
            if not self.poset.leq[i][j]:
                raise ValueError(f"({x!r}, {y!r}) is not in the support X^2_<=")
            v = self.field.coerce_raw(v)
            if v != 0:
                out[(i, j)] = v
        return IncidenceElement(self, out)

    def e(self, x, y=None) -> IncidenceElement:
        """Basis element ``e_xy`` (or ``e_x`` when ``y`` is omitted)."""
        return self.element({(x, x if y is None else y): 1})

    def basis_element(self, k: int) -> IncidenceElement:
        return IncidenceElement(self, {self.basis[k]: self.field.one_raw})

    def zero(self) -> IncidenceElement:
        return IncidenceElement(self, {})

    def delta(self) -> IncidenceElement:
        one = self.field.one_raw
        return IncidenceElement(self, {(i, i): one for i in range(len(self.poset))})

    def from_vector(self, vec) -> IncidenceElement:
        return IncidenceElement(
            self, {self.basis[k]: v for k, v in enumerate(vec) if v != 0}
        )

    def label_pair(self, ij) -> tuple:
        lab = self.poset.labels
        return lab[ij[0]], lab[ij[1]]

    # radical data

    @cached_property
    def center_pairs(self) -> list:
        """Index pairs spanning Z(J): x < y with x minimal and y maximal."""
        mins, maxs = set(self.poset.min_indices), set(self.poset.max_indices)
        return [(i, j) for (i, j) in self.basis if i != j and i in mins and j in maxs]

    def radical_center_basis(self) -> list:
        return [self.label_pair(ij) for ij in self.center_pairs]

    @cached_property
    def free_sigma_pairs(self) -> list:
        """Center pairs that are covers: where an admissible sigma may be != 1."""
        lt = self.poset.length_table
        return [ij for ij in self.center_pairs if lt[ij] == 1]

    # structure constants: [b_i, b_j] is zero or a single signed basis element

    @cached_property
    def bracket_table(self) -> dict:
        """``{(i, j): (m, c)}`` for every basis pair with nonzero bracket."""
        out = {}
        bi = self.basis_index
        for a, (x, y) in enumerate(self.basis):
            for b, (u, v) in enumerate(self.basis):
                # [e_xy, e_uv] = [y=u] e_xv - [v=x] e_uy; both terms cancel when x=y=u=v
                if y == u and v != x:
                    out[(a, b)] = (bi[(x, v)], 1)
                elif v == x and y != u:
                    out[(a, b)] = (bi[(u, y)], -1)
        return out

    @cached_property
    def structure_tensor(self) -> np.ndarray:
        """Dense ``C[i, j, m]``, the coefficient of b_m in [b_i, b_j]."""
        d = self.dim
        c = np.zeros((d, d, d), dtype=np.int64)
        for (a, b), (m, s) in self.bracket_table.items():
            c[a, b, m] = s
        return c

    @cached_property
    def ad_tensor(self) -> np.ndarray:
        """``A[m]`` is the matrix of [b_m, .] in the basis."""
        return np.ascontiguousarray(self.structure_tensor.transpose(0, 2, 1))

    @cached_property
    def bracket_arrays(self) -> tuple:
        """Sparse form of the bracket table as index/coefficient arrays."""
        items = sorted(self.bracket_table.items())
        a = np.array([k[0] for k, _ in items], dtype=np.intp)
        b = np.array([k[1] for k, _ in items], dtype=np.intp)
        m = np.array([v[0] for _, v in items], dtype=np.intp)
        s = np.array([v[1] for _, v in items], dtype=np.int64)
        return a, b, m, s


class IncidenceElement:
    """Immutable sparse element of I(X, K) (no stored zeros)."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: IncidenceAlgebra, coeffs: dict):
        self.algebra = algebra
        self.coeffs = coeffs

    @property
    def field(self) -> Field:
        return self.algebra.field

    @property
    def poset(self) -> Poset:
        return self.algebra.poset

    def __getitem__(self, xy) -> Scalar:
        x, y = xy
        idx = self.poset._idx
        return Scalar(self.field, self.coeffs.get((idx(x), idx(y)), self.field.zero_raw))

    def items(self):
        """``((x, y), Scalar)`` pairs in basis order."""
        bi = self.algebra.basis_index
        for ij in sorted(self.coeffs, key=bi.__getitem__):
            yield self.algebra.label_pair(ij), Scalar(self.field, self.coeffs[ij])

    def to_vector(self) -> list:
        z = self.field.zero_raw
        return [self.coeffs.get(ij, z) for ij in self.algebra.basis]

    def __eq__(self, other):
        if not isinstance(other, IncidenceElement):
            return NotImplemented
        return self.algebra == other.algebra and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for (x, y), c in self.items():
            name = f"e_{x}" if x == y else f"e_{x},{y}"
            terms.append(name if c == 1 else f"{c}*{name}")
        return " + ".join(terms)

    # linear structure

    def _combine(self, other, sign):
        self.algebra.check(other.algebra)
        red = self.field.reduce
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            w = red(out.get(k, 0) + sign * v)
            if w == 0:
                out.pop(k, None)
            else:
                out[k] = w
        return IncidenceElement(self.algebra, out)

    def __add__(self, other):
        if not isinstance(other, IncidenceElement):
            return NotImplemented
        return self._combine(other, 1)

    def __sub__(self, other):
        if not isinstance(other, IncidenceElement):
            return NotImplemented
        return self._combine(other, -1)

    def __neg__(self):
        red = self.field.reduce
        return IncidenceElement(self.algebra, {k: red(-v) for k, v in self.coeffs.items()})

    def scale(self, c) -> IncidenceElement:
        c = self.field.coerce_raw(c)
        if c == 0:
            return self.algebra.zero()
        red = self.field.reduce
        return IncidenceElement(self.algebra, {k: red(c * v) for k, v in self.coeffs.items()})

    def __rmul__(self, c):
        if isinstance(c, (int, Scalar)) or hasattr(c, "denominator"):
            return self.scale(c)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, IncidenceElement):
            return multiply(self, other)
        if isinstance(other, (int, Scalar)) or hasattr(other, "denominator"):
            return self.scale(other)
        return NotImplemented


def multiply(f: IncidenceElement, g: IncidenceElement) -> IncidenceElement:
    """Convolution product: (fg)(x, y) = sum over x <= z <= y of f(x, z) g(z, y)."""
    f.algebra.check(g.algebra)
    rows = {}
    for (z, y), v in g.coeffs.items():
        rows.setdefault(z, []).append((y, v))
    acc = {}
    for (x, z), a in f.coeffs.items():
        for y, b in rows.get(z, ()):
            k = (x, y)
            acc[k] = acc.get(k, 0) + a * b
    red = f.field.reduce
    out = {}
    for k, v in acc.items():
        v = red(v)
        if v != 0:
            out[k] = v
    return IncidenceElement(f.algebra, out)


def commutator(f: IncidenceElement, g: IncidenceElement) -> IncidenceElement:
    return multiply(f, g) - multiply(g, f)


def hadamard(s: IncidenceElement, f: IncidenceElement) -> IncidenceElement:
    """Entrywise product on X^2_<=."""
    s.algebra.check(f.algebra)
    red = f.field.reduce
    out = {}
    for k, v in f.coeffs.items():
        w = s.coeffs.get(k)
        if w is not None:
            w = red(w * v)
            if w != 0:
                out[k] = w
    return IncidenceElement(f.algebra, out)


def dj_split(f: IncidenceElement) -> tuple[IncidenceElement, IncidenceElement]:
    """(diagonal part, radical part)."""
    diag = {k: v for k, v in f.coeffs.items() if k[0] == k[1]}
    rad = {k: v for k, v in f.coeffs.items() if k[0] != k[1]}
    return IncidenceElement(f.algebra, diag), IncidenceElement(f.algebra, rad)


def is_unit(f: IncidenceElement) -> bool:
    return all((i, i) in f.coeffs for i in range(len(f.poset)))


def invert_unit(f: IncidenceElement) -> IncidenceElement:
    """Inverse of a unit via f = f_D (delta + n) with n nilpotent.

    ``(delta + n)^-1`` is the finite alternating sum of powers of ``n`` up to
    ``n^l(X)``; ``n^(l(X)+1)`` lies in J^(l(X)+1) = 0.
    """
    alg = f.algebra
    field = alg.field
    n_pts = len(alg.poset)
    for i in range(n_pts):
        if (i, i) not in f.coeffs:
            raise NotAUnit(alg.poset.labels[i])
    dinv = {(i, i): field.inv(f.coeffs[(i, i)]) for i in range(n_pts)}
    red = field.reduce
    # n = f_D^-1 f_J
    nil = {}
    for (i, j), v in f.coeffs.items():
        if i != j:
            nil[(i, j)] = red(dinv[(i, i)] * v)
    nil = IncidenceElement(alg, nil)
    neg_nil = -nil
    total = alg.delta()
    term = alg.delta()
    for _ in range(alg.poset.length):
        term = multiply(term, neg_nil)
        if not term:
            break
        total = total + term
    return multiply(total, IncidenceElement(alg, dinv))


def radical_level(f: IncidenceElement) -> int:
    """Largest m with f in J^m (0 if f has diagonal support)."""
    if not f.coeffs:
        raise ZeroElement("radical level of zero is undefined")
    lt = f.poset.length_table
    return min(lt[k] for k in f.coeffs)


def is_multiplicative(s: IncidenceElement) -> bool:
    """Full nonzero support on X^2_<= and s(x, z) = s(x, y) s(y, z) for x <= y <= z."""
    alg = s.algebra
    lt = alg.poset.length_table
    c = s.coeffs
    if len(c) != len(lt):
        return False
    red = alg.field.reduce
    leq = alg.poset.leq
    n = len(alg.poset)
    for (x, y) in lt:
        for z in range(n):
            if leq[y][z] and c[(x, z)] != red(c[(x, y)] * c[(y, z)]):
                return False
    return True


def commutator_triple_failures(alg: IncidenceAlgebra) -> list:
    """Radical basis triples whose three pairwise commutators are all nonzero.

    For an incidence algebra at least one of [e_xy, e_zw], [e_zw, e_uv],
    [e_uv, e_xy] always vanishes, so the list should be empty.
    """
    strict = [ij for ij in alg.basis if ij[0] != ij[1]]
    one = alg.field.one_raw
    basis = {ij: IncidenceElement(alg, {ij: one}) for ij in strict}
    bad = []
    for p in strict:
        for q in strict:
            if not commutator(basis[p], basis[q]):
                continue
            for r in strict:
                if commutator(basis[q], basis[r]) and commutator(basis[r], basis[p]):
                    bad.append(tuple(alg.label_pair(t) for t in (p, q, r)))
    return bad


def center_annihilation_failures(alg: IncidenceAlgebra) -> list:
    """Pairs (z, j) with z in the Z(J) basis, j in the radical basis, and z j or j z nonzero."""
    one = alg.field.one_raw
    bad = []
    for c in alg.center_pairs:
        zc = IncidenceElement(alg, {c: one})
        for ij in alg.basis:
            if ij[0] == ij[1]:
                continue
            e = IncidenceElement(alg, {ij: one})
            if multiply(zc, e) or multiply(e, zc):
                bad.append((alg.label_pair(c), alg.label_pair(ij)))
    return bad
