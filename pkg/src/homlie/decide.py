"""Decide whether a linear endomorphism is a regular Hom-Lie structure.

:func:`decide_regular_homlie` never evaluates the Hom-Jacobi identity. It
reads the parameters off the matrix and checks their shape:

1. the map is a Lie automorphism (bijective and bracket preserving);
2. ``rho(u, v)``, read as the ``e_uv`` coefficient of the image of ``e_v``,
   vanishes outside Z(J);
3. every ``e_xy`` (x < y) maps to ``s * e_xy`` and the resulting sigma is
   admissible;
4. every ``e_x`` maps to ``e_x + rho e_x - e_x rho + alpha_x delta``;
5. the parameters rebuild the input exactly.

:func:`cross_validate` compares this verdict with the brute-force
Hom-Jacobi check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .endo import LinearEndo, is_hom_lie_structure, lie_automorphism_witness
from .errors import InvalidPoset, ParseError, PreconditionViolated
from .incidence import IncidenceAlgebra, IncidenceElement
from .poset import Poset
from .scalars import Field
from .structures import HomLieParams, SigmaTable, build_regular_homlie, free_sigma_support

REGULAR = "RegularHomLie"
NOT_LIE = "NotLieAutomorphism"
NOT_HOM_LIE = "NotHomLie"

REASONS = ("SigmaViolation", "BetaNotCentral", "DiagonalNotCentralShift", "OffDiagonalNotScalar")


@dataclass(frozen=True)
class Decision:
    """Verdict of :func:`decide_regular_homlie`.

    ``where`` is a label pair, a 1-tuple holding an element label, the string
    ``"singular"`` (non-bijective map), or a pair of label pairs (basis
    elements whose bracket is not preserved).
    """

    verdict: str
    params: HomLieParams | None = None
    reason: str | None = None
    where: object = None

    @property
    def ok(self) -> bool:
        return self.verdict == REGULAR

    def __str__(self):
        return format_decision(self)


def _reject(reason, where):
    return Decision(NOT_HOM_LIE, reason=reason, where=where)


def decide_regular_homlie(m: LinearEndo, *, check_lie: bool = True) -> Decision:
    """Recover the parameters of ``m`` or name the first structural defect.

    With ``check_lie=False`` step 1 is skipped and only the shape checks run;
    a singular map of the right shape then yields ``NotLieAutomorphism``.
    """
    alg = m.algebra
    f = alg.field
    red = f.reduce
    poset = alg.poset
    lab = poset.labels
    n = len(poset)
    bi = alg.basis_index
    cols = m.columns

    witness = lie_automorphism_witness(m) if check_lie else None
    if witness is not None:
        if witness != "singular":
            witness = tuple(alg.label_pair(alg.basis[k]) for k in witness)
        return Decision(NOT_LIE, where=witness)

    strict = [ij for ij in alg.basis if ij[0] != ij[1]]
    center = set(alg.center_pairs)

    # (2) rho from the images of the diagonal idempotents
    rho = {}
    for (u, v) in strict:
        r = cols[bi[(v, v)]][bi[(u, v)]]
        if r != 0:
            if (u, v) not in center:
                return _reject("BetaNotCentral", (lab[u], lab[v]))
            rho[(u, v)] = r

    # (3) e_xy -> sigma(x, y) e_xy
    sigma = {}
    for (x, y) in strict:
        k = bi[(x, y)]
        col = cols[k]
        s = col[k]
        if s == 0 or any(v != 0 for i, v in enumerate(col) if i != k):
            return _reject("OffDiagonalNotScalar", (lab[x], lab[y]))
        sigma[(x, y)] = s
    one = f.one_raw
    for (x, y) in strict:
        if sigma[(x, y)] != one and (x, y) not in center:
            return _reject("SigmaViolation", (lab[x], lab[y]))
    for (x, y) in strict:
        for z in range(n):
            if z != y and poset.leq[y][z] and sigma[(x, z)] != red(sigma[(x, y)] * sigma[(y, z)]):
                return _reject("SigmaViolation", (lab[x], lab[z]))

    # (4) e_x -> e_x + rho e_x - e_x rho + alpha_x delta
    alpha = []
    for x in range(n):
        # rho e_x keeps the (u, x) entries of rho, e_x rho the (x, v) entries
        terms = {(x, x): one}
        for (u, v), r in rho.items():
            if v == x:
                terms[(u, v)] = r
            elif u == x:
                terms[(u, v)] = red(-r)
        expected = IncidenceElement(alg, terms)
        resid = alg.from_vector(cols[bi[(x, x)]]) - expected
        w = 1 if x == 0 else 0
        a = resid.coeffs.get((w, w), f.zero_raw)
        shift = IncidenceElement(alg, {(i, i): a for i in range(n)} if a != 0 else {})
        if resid != shift:
            return _reject("DiagonalNotCentralShift", (lab[x],))
        alpha.append(a)

    if red(one + sum(alpha)) == 0:
        return Decision(NOT_LIE, where="singular")
    params = HomLieParams(
        alg, rho, SigmaTable(alg, {ij: s for ij, s in sigma.items()}), alpha
    )
    if build_regular_homlie(params) != m:
        raise RuntimeError("recovered parameters do not rebuild the input")
    return Decision(REGULAR, params=params)


def cross_validate(m: LinearEndo) -> bool:
    """Structural verdict agrees with the brute-force Hom-Jacobi check."""
    decision = decide_regular_homlie(m)
    if decision.verdict == NOT_LIE:
        raise PreconditionViolated(f"not a Lie automorphism: {decision.where}")
    return decision.ok == is_hom_lie_structure(m)


def structure_parameter_count(p: Poset) -> tuple[int, int, int]:
    """(dim Z(J), number of free sigma values, number of alpha values)."""
    if len(p) < 2 or not p.is_connected():
        raise InvalidPoset("need a connected poset with at least two elements")
    alg = IncidenceAlgebra(p, Field.rationals())
    return len(alg.center_pairs), len(free_sigma_support(p)), len(p)


# single-line serialization


def _pair(xy) -> str:
    return f"({xy[0]},{xy[1]})"


def format_decision(d: Decision) -> str:
    """``OK beta=... sigma=... alpha=...`` or ``REJECT <reason> at (...)``."""
    if d.ok:
        p = d.params
        beta = ";".join(f"{_pair(k)}:{v}" for k, v in p.beta_labels().items() if v)
        sigma = ";".join(f"{_pair(k)}:{v}" for k, v in p.sigma_labels().items() if v != 1)
        alpha = ",".join(str(a) for a in p.alpha)
        return f"OK beta={beta} sigma={sigma} alpha={alpha}"
    if d.verdict == NOT_LIE:
        if d.where == "singular":
            return "REJECT NotLieAutomorphism at (singular)"
        return f"REJECT NotLieAutomorphism at ({_pair(d.where[0])},{_pair(d.where[1])})"
    if len(d.where) == 1:
        return f"REJECT {d.reason} at ({d.where[0]})"
    return f"REJECT {d.reason} at {_pair(d.where)}"


def parse_decision(line: str, algebra: IncidenceAlgebra) -> Decision:
    """Inverse of :func:`format_decision` (labels are matched by ``str``)."""
    names = {str(x): x for x in algebra.poset.labels}
    f = algebra.field

    def label(tok):
        try:
            return names[tok]
        except KeyError:
            raise ParseError(f"unknown label {tok!r}") from None

    def pair(tok):
        tok = tok.strip()
        if not (tok.startswith("(") and tok.endswith(")")):
            raise ParseError(f"bad pair {tok!r}")
        parts = tok[1:-1].split(",")
        if len(parts) != 2:
            raise ParseError(f"bad pair {tok!r}")
        return label(parts[0]), label(parts[1])

    def entries(body):
        out = {}
        for item in filter(None, body.split(";")):
            key, _, val = item.rpartition(":")
            out[pair(key)] = f.parse_raw(val)
        return out

    line = line.strip()
    if line.startswith("OK "):
        fields = dict(tok.split("=", 1) for tok in line[3:].split(" "))
        try:
            beta, sigma, alpha = fields["beta"], fields["sigma"], fields["alpha"]
        except KeyError as exc:
            raise ParseError(f"missing field {exc}") from None
        avals = [f.parse_raw(a) for a in alpha.split(",")] if alpha else []
        params = HomLieParams.create(
            algebra,
            beta=entries(beta),
            sigma=entries(sigma),
            alpha=dict(zip(algebra.poset.labels, avals)),
        )
        return Decision(REGULAR, params=params)
    if line.startswith("REJECT "):
        reason, sep, where = line[7:].partition(" at ")
        if not sep:
            raise ParseError(f"bad rejection {line!r}")
        if reason == NOT_LIE:
            if where == "(singular)":
                return Decision(NOT_LIE, where="singular")
            inner = where[1:-1]
            cut = inner.index("),(") + 1
            return Decision(NOT_LIE, where=(pair(inner[:cut]), pair(inner[cut + 1:])))
        if reason not in REASONS:
            raise ParseError(f"unknown reason {reason!r}")
        if "," in where:
            return Decision(NOT_HOM_LIE, reason=reason, where=pair(where))
        return Decision(NOT_HOM_LIE, reason=reason, where=(label(where[1:-1]),))
    raise ParseError(f"not a decision line: {line!r}")
