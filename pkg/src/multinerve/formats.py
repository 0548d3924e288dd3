"""Line-oriented text formats: poset.v1, complex.v1, family.v1, betti.v1.

All files are UTF-8 with LF endings and decimal integer ids.  Parsers
validate the declared format version and re-run the full build validation,
so a file that parses always yields a structurally sound object.  Parse
errors cite file, line, and what was expected.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .families import (Box, SetFamily, box_family, subcomplex_family)
from .homology import BettiVector
from .poset import (CellRecord, PosetError, SimplicialComplex,
                    SimplicialPoset, build_poset)

FORMAT_VERSIONS = ("poset.v1", "complex.v1", "family.v1", "betti.v1",
                   "leray.v1", "report.v1")


class ParseError(ValueError):
    def __init__(self, path: str, line: int, message: str):
        self.path = path
        self.line = line
        super().__init__(f"{path}:{line}: {message}")


def _lines(text: str):
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line:
            yield i, line


# -- poset.v1 ---------------------------------------------------------------


def write_poset(X: SimplicialPoset, labels: Sequence[str] | None = None) -> str:
    """poset.v1 serialization; cells are renumbered so that vertices appear
    in vertex_order and every face precedes its cofaces."""
    vrank = {v: k for k, v in enumerate(X.vertex_order)}
    order = sorted(X.cells(), key=lambda c: (X.dim_of(c),
                                             vrank.get(c, -1), c))
    new_id = {c: i for i, c in enumerate(order)}
    out = ["poset v1"]
    for c in order:
        fields = [str(new_id[c]), str(X.dim_of(c))]
        fields.extend(str(new_id[f]) for f in X.faces_of(c))
        line = " ".join(fields)
        if labels is not None and labels[c]:
            line += f" | {labels[c]}"
        out.append(line)
    return "\n".join(out) + "\n"


def parse_poset(text: str, path: str = "<string>") -> SimplicialPoset:
    it = _lines(text)
    try:
        lineno, header = next(it)
    except StopIteration:
        raise ParseError(path, 1, "empty file, expected 'poset v1' header")
    if header != "poset v1":
        raise ParseError(path, lineno, f"expected 'poset v1' header, got {header!r}")
    records: list[CellRecord] = []
    seen: dict[int, int] = {}
    for lineno, line in it:
        body = line.split("|")[0].strip()
        parts = body.split()
        if len(parts) < 2:
            raise ParseError(path, lineno, "expected '<id> <dim> <faces...>'")
        try:
            cid, dim = int(parts[0]), int(parts[1])
            faces = tuple(int(p) for p in parts[2:])
        except ValueError:
            raise ParseError(path, lineno, "ids and dimensions must be integers")
        if cid != len(records):
            raise ParseError(path, lineno, f"cell ids must be consecutive from 0, got {cid}")
        for f in faces:
            if f not in seen:
                raise ParseError(path, lineno, f"cell {cid} references undeclared cell {f}")
        seen[cid] = lineno
        records.append(CellRecord(dim, faces))
    try:
        return build_poset(records)
    except PosetError as e:
        raise ParseError(path, 0, str(e))


# -- complex.v1 -------------------------------------------------------------


def write_complex(K: SimplicialComplex) -> str:
    """complex.v1: one nonempty simplex per line, sorted; line order is the
    simplex id used by family.v1 member lists."""
    out = ["complex v1"]
    sims = sorted((s for s in K.simplices if s), key=lambda s: (len(s), sorted(s)))
    for s in sims:
        out.append(" ".join(str(v) for v in sorted(s)))
    return "\n".join(out) + "\n"


def complex_simplex_ids(K: SimplicialComplex) -> dict[frozenset, int]:
    sims = sorted((s for s in K.simplices if s), key=lambda s: (len(s), sorted(s)))
    return {s: i for i, s in enumerate(sims)}


def parse_complex(text: str, path: str = "<string>") -> SimplicialComplex:
    it = _lines(text)
    try:
        lineno, header = next(it)
    except StopIteration:
        raise ParseError(path, 1, "empty file, expected 'complex v1' header")
    if header != "complex v1":
        raise ParseError(path, lineno, f"expected 'complex v1' header, got {header!r}")
    sims = []
    for lineno, line in it:
        try:
            sims.append(frozenset(int(v) for v in line.split()))
        except ValueError:
            raise ParseError(path, lineno, "vertex ids must be integers")
    try:
        return SimplicialComplex(sims, closed=True)
    except PosetError as e:
        raise ParseError(path, 0, str(e))


# -- family.v1 --------------------------------------------------------------


def _fmt_fraction(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _parse_fraction(tok: str, path: str, lineno: int) -> Fraction:
    if "/" in tok:
        num, den = tok.split("/", 1)
    else:
        num, den = tok, "1"
    try:
        num_i, den_i = int(num), int(den)
    except ValueError:
        raise ParseError(path, lineno, f"expected rational p/q, got {tok!r}")
    if den_i <= 0:
        raise ParseError(path, lineno, f"rational {tok!r} has non-positive denominator")
    return Fraction(num_i, den_i)


def write_family(F: SetFamily) -> str:
    if F.backend == "subcomplex":
        out = [f"family v1 subcomplex {F.ambient.dim}"]
        if F.gamma_dim_assumed:
            out.append(f"gamma-dim {F.gamma_dim}")
        ids = complex_simplex_ids(F.ambient)
        out.append(write_complex(F.ambient).rstrip("\n"))
        out.append("end complex")
        for m in F.members:
            sids = sorted(ids[s] for s in m.simplices)
            out.append(("member " + " ".join(str(i) for i in sids)).rstrip())
        return "\n".join(out) + "\n"
    out = [f"family v1 box {F.ambient}"]
    if F.gamma_dim_assumed:
        out.append(f"gamma-dim {F.gamma_dim}")
    for m in F.members:
        out.append("member")
        for b in m.boxes:
            toks = []
            for lo, hi in b.intervals:
                toks.append(_fmt_fraction(lo))
                toks.append(_fmt_fraction(hi))
            out.append("box " + " ".join(toks))
    return "\n".join(out) + "\n"


def parse_family(text: str, path: str = "<string>",
                 gamma_dim_override: int | None = None) -> SetFamily:
    lines = list(_lines(text))
    if not lines:
        raise ParseError(path, 1, "empty file, expected 'family v1 ...' header")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 4 or parts[0] != "family" or parts[1] != "v1":
        raise ParseError(path, lineno, "expected 'family v1 <backend> <ambient>' header")
    backend = parts[2]
    if backend not in ("subcomplex", "box"):
        raise ParseError(path, lineno, f"unknown backend {parts[2]!r}")
    try:
        ambient = int(parts[3])
    except ValueError:
        raise ParseError(path, lineno, "ambient descriptor must be an integer")

    pos = 1
    gamma_dim = None
    if pos < len(lines) and lines[pos][1].startswith("gamma-dim"):
        lineno, line = lines[pos]
        toks = line.split()
        if len(toks) != 2:
            raise ParseError(path, lineno, "expected 'gamma-dim <int>'")
        try:
            gamma_dim = int(toks[1])
        except ValueError:
            raise ParseError(path, lineno, "gamma-dim must be an integer")
        pos += 1
    if gamma_dim_override is not None:
        gamma_dim = gamma_dim_override

    if backend == "box":
        members: list[list[Box]] = []
        for lineno, line in lines[pos:]:
            toks = line.split()
            if toks[0] == "member":
                if len(toks) != 1:
                    raise ParseError(path, lineno, "box members start with a bare 'member' line")
                members.append([])
            elif toks[0] == "box":
                if not members:
                    raise ParseError(path, lineno, "'box' line before any 'member'")
                vals = [_parse_fraction(t, path, lineno) for t in toks[1:]]
                if len(vals) != 2 * ambient or ambient == 0:
                    raise ParseError(path, lineno,
                                     f"expected {2 * ambient} rationals for a "
                                     f"{ambient}-dimensional box")
                intervals = tuple((vals[2 * i], vals[2 * i + 1]) for i in range(ambient))
                try:
                    members[-1].append(Box(intervals))
                except ValueError as e:
                    raise ParseError(path, lineno, str(e))
            else:
                raise ParseError(path, lineno, f"expected 'member' or 'box', got {toks[0]!r}")
        return box_family(ambient, members, gamma_dim)

    # subcomplex backend: embedded complex block, then member id lists
    if pos >= len(lines) or lines[pos][1] != "complex v1":
        raise ParseError(path, lines[pos][0] if pos < len(lines) else lineno,
                         "expected embedded 'complex v1' block")
    block = ["complex v1"]
    pos += 1
    while pos < len(lines) and lines[pos][1] != "end complex":
        block.append(lines[pos][1])
        pos += 1
    if pos >= len(lines):
        raise ParseError(path, lines[-1][0], "missing 'end complex'")
    T = parse_complex("\n".join(block), path)
    if T.dim != ambient:
        raise ParseError(path, lines[pos][0],
                         f"triangulation dimension {T.dim} != declared {ambient}")
    pos += 1
    by_id = {i: s for s, i in complex_simplex_ids(T).items()}
    member_lists = []
    for lineno, line in lines[pos:]:
        toks = line.split()
        if toks[0] != "member":
            raise ParseError(path, lineno, f"expected 'member', got {toks[0]!r}")
        sims = []
        for t in toks[1:]:
            try:
                sid = int(t)
            except ValueError:
                raise ParseError(path, lineno, "simplex ids must be integers")
            if sid not in by_id:
                raise ParseError(path, lineno, f"unknown simplex id {sid}")
            sims.append(by_id[sid])
        member_lists.append(sims)
    try:
        return subcomplex_family(T, member_lists, gamma_dim)
    except ValueError as e:
        raise ParseError(path, 0, str(e))


# -- betti.v1 ---------------------------------------------------------------


def write_betti(b: BettiVector) -> str:
    return "".join(f"{d} {v}\n" for d, v in b.items())


def parse_betti(text: str, path: str = "<string>") -> BettiVector:
    entries = {}
    for lineno, line in _lines(text):
        toks = line.split()
        if len(toks) != 2:
            raise ParseError(path, lineno, "expected '<dim> <value>'")
        try:
            entries[int(toks[0])] = int(toks[1])
        except ValueError:
            raise ParseError(path, lineno, "dimensions and values must be integers")
    return BettiVector.from_dict(entries)


# -- header dispatch --------------------------------------------------------


def load_text(text: str, path: str = "<string>"):
    """Parse by declared header: poset, complex, or family."""
    for _, line in _lines(text):
        first = line
        break
    else:
        raise ParseError(path, 1, "empty file")
    if first == "poset v1":
        return parse_poset(text, path)
    if first == "complex v1":
        return parse_complex(text, path)
    if first.startswith("family v1"):
        return parse_family(text, path)
    raise ParseError(path, 1, f"unrecognized header {first!r} "
                              "(expected poset/complex/family v1)")


def load_path(path) -> object:
    with open(path, "r", encoding="utf-8") as fh:
        return load_text(fh.read(), str(path))
