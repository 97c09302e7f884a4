"""Plain-text file formats.

``.poset``
    First non-comment line: whitespace-separated labels.  Every further line
    is a cover declaration ``x < y``.  ``#`` starts a comment.
``.ielem``
    Lines ``x y coeff``; the line ``delta`` adds the identity.
``.endo``
    Header ``dim d`` followed by ``d`` rows of ``d`` scalars, in canonical
    basis order (column ``j`` is the image of basis element ``j``).
``.hlp``
    Sections ``[beta]`` (``x y coeff``, pairs in the Z(J) basis),
    ``[sigma]`` (``x y coeff``, pairs in the free sigma support) and
    ``[alpha]`` (``x coeff``).

Labels read from files are strings; scalar literals are ``a/b`` or
integers for Q and integers for GF(p).
"""

from __future__ import annotations

from .endo import LinearEndo
from .errors import HomLieError, InvalidParams, ParseError
from .incidence import IncidenceAlgebra, IncidenceElement
from .poset import Poset
from .structures import HomLieParams, SigmaTable


def _lines(text: str):
    """(line number, tokens) for every non-blank line, comments stripped."""
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line.split()


# posets


def parse_poset(text: str) -> Poset:
    labels = None
    covers = []
    for no, toks in _lines(text):
        if labels is None:
            labels = toks
            continue
        if len(toks) != 3 or toks[1] != "<":
            raise ParseError(f"line {no}: expected 'x < y', got {' '.join(toks)!r}")
        covers.append((toks[0], toks[2]))
    if labels is None:
        raise ParseError("empty poset file")
    return Poset.from_cover_relations(labels, covers)


def format_poset(p: Poset) -> str:
    out = [" ".join(str(x) for x in p.labels)]
    out += [f"{x} < {y}" for x, y in p.covers]
    return "\n".join(out) + "\n"


# incidence elements


def parse_ielem(text: str, alg: IncidenceAlgebra) -> IncidenceElement:
    names = _label_map(alg)
    f = alg.field
    acc = alg.zero()
    for no, toks in _lines(text):
        if toks == ["delta"]:
            acc = acc + alg.delta()
            continue
        if len(toks) != 3:
            raise ParseError(f"line {no}: expected 'x y coeff'")
        x, y = _label(names, toks[0], no), _label(names, toks[1], no)
        if not alg.poset.is_leq(x, y):
            raise ParseError(f"line {no}: {x} is not <= {y}")
        acc = acc + alg.element({(x, y): f.parse_raw(toks[2])})
    return acc


def format_ielem(f: IncidenceElement) -> str:
    return "".join(f"{x} {y} {c}\n" for (x, y), c in f.items())


# endomorphisms


def parse_endo(text: str, alg: IncidenceAlgebra) -> LinearEndo:
    lines = list(_lines(text))
    if not lines or lines[0][1][0] != "dim" or len(lines[0][1]) != 2:
        raise ParseError("missing 'dim d' header")
    try:
        d = int(lines[0][1][1])
    except ValueError:
        raise ParseError(f"bad dimension {lines[0][1][1]!r}") from None
    if d != alg.dim:
        raise ParseError(f"dim {d} does not match the poset's basis size {alg.dim}")
    rows = lines[1:]
    if len(rows) != d:
        raise ParseError(f"expected {d} rows, got {len(rows)}")
    vals = []
    for no, toks in rows:
        if len(toks) != d:
            raise ParseError(f"line {no}: expected {d} entries, got {len(toks)}")
        vals.append([alg.field.parse_raw(t) for t in toks])
    return LinearEndo.from_rows(alg, vals)


def format_endo(m: LinearEndo) -> str:
    out = [f"dim {m.dim}"]
    fmt = m.field.format_raw
    out += [" ".join(fmt(v) for v in row) for row in m.rows()]
    return "\n".join(out) + "\n"


# Hom-Lie parameters


def parse_params(text: str, alg: IncidenceAlgebra) -> HomLieParams:
    names = _label_map(alg)
    f = alg.field
    section = None
    beta, sigma, alpha = {}, {}, {}
    for no, toks in _lines(text):
        if len(toks) == 1 and toks[0].startswith("[") and toks[0].endswith("]"):
            section = toks[0][1:-1]
            if section not in ("beta", "sigma", "alpha"):
                raise ParseError(f"line {no}: unknown section {toks[0]}")
            continue
        if section is None:
            raise ParseError(f"line {no}: entry outside a section")
        if section == "alpha":
            if len(toks) != 2:
                raise ParseError(f"line {no}: expected 'x coeff'")
            alpha[_label(names, toks[0], no)] = f.parse_raw(toks[1])
            continue
        if len(toks) != 3:
            raise ParseError(f"line {no}: expected 'x y coeff'")
        key = (_label(names, toks[0], no), _label(names, toks[1], no))
        (beta if section == "beta" else sigma)[key] = f.parse_raw(toks[2])
    idx = alg.poset._idx
    center = {alg.label_pair(ij) for ij in alg.center_pairs}
    for key in beta:
        if key not in center:
            raise InvalidParams(f"beta pair {key} is not in the Z(J) basis")
    free = {alg.label_pair(ij) for ij in alg.free_sigma_pairs}
    for key in sigma:
        if key not in free:
            raise InvalidParams(f"sigma pair {key} is not in the free sigma support")
    try:
        return HomLieParams(
            alg,
            {(idx(x), idx(y)): v for (x, y), v in beta.items()},
            SigmaTable.from_labels(alg, sigma),
            [alpha.get(x, f.zero_raw) for x in alg.poset.labels],
        )
    except HomLieError as exc:
        raise InvalidParams(str(exc)) from None


def format_params(p: HomLieParams) -> str:
    out = ["[beta]"]
    out += [f"{x} {y} {v}" for (x, y), v in p.beta_labels().items() if v]
    out.append("[sigma]")
    out += [f"{x} {y} {v}" for (x, y), v in p.sigma_labels().items() if v != 1]
    out.append("[alpha]")
    out += [f"{x} {v}" for x, v in p.alpha_labels().items()]
    return "\n".join(out) + "\n"


def _label_map(alg: IncidenceAlgebra) -> dict:
    return {str(x): x for x in alg.poset.labels}


def _label(names, tok, no):
    try:
        return names[tok]
    except KeyError:
        raise ParseError(f"line {no}: unknown label {tok!r}") from None
