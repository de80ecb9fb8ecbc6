"""Text formats for monodromies, matrices, homomorphisms and presentations.

Every parser round-trips with the matching formatter, and errors carry the
offending line.
"""

from __future__ import annotations

import re

from .errors import ParseError
from .exactla import IntMatrix, LambdaMatrix
from .freegrp import FreeEndo, Word
from .grouphom import (CyclicTarget, FiniteHom, Perm, Presentation,
                       alternating, cyclic, perm_from_cycle_text,
                       perm_to_cycle_text, symmetric)
from .laurent import parse_laurent, to_text
from .seifert import SeifertMatrix

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z_0-9]*$")


def _nonblank_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_word(text: str, names: dict[str, int], line: int | None = None) -> Word:
    """A word as whitespace-separated letters ``name``, ``name^-1``, ``name^k``."""
    letters = []
    for tok in text.split():
        name, _, exp_text = tok.partition("^")
        if name not in names:
            raise ParseError(f"unknown generator {name!r}", line)
        if exp_text:
            try:
                exp = int(exp_text)
            except ValueError:
                raise ParseError(f"malformed exponent in {tok!r}", line) from None
            if exp == 0:
                raise ParseError(f"zero exponent in {tok!r}", line)
        else:
            exp = 1
        letters.append((names[name], exp))
    return Word(letters)


def format_word(w: Word, names: list[str]) -> str:
    if w.is_identity:
        return ""
    return " ".join(names[g] + (f"^{e}" if e != 1 else "") for g, e in w.blocks)


# -- monodromy files ---------------------------------------------------------


def parse_monodromy(text: str) -> tuple[FreeEndo, list[str]]:
    """Format: a ``generators: x y ...`` line, then one ``x -> image`` line
    per generator."""
    lines = list(_nonblank_lines(text))
    if not lines or not lines[0][1].startswith("generators:"):
        raise ParseError("monodromy file must start with a 'generators:' line",
                         lines[0][0] if lines else 1)
    lineno, header = lines[0]
    names = header[len("generators:"):].split()
    if not names or any(not _NAME_RE.match(n) for n in names):
        raise ParseError("malformed generator names", lineno)
    if len(set(names)) != len(names):
        raise ParseError("duplicate generator names", lineno)
    index = {n: i for i, n in enumerate(names)}
    images: dict[int, Word] = {}
    for lineno, line in lines[1:]:
        lhs, arrow, rhs = line.partition("->")
        if not arrow:
            raise ParseError("expected 'generator -> image' line", lineno)
        name = lhs.strip()
        if name not in index:
            raise ParseError(f"unknown generator {name!r}", lineno)
        if index[name] in images:
            raise ParseError(f"duplicate image for {name!r}", lineno)
        images[index[name]] = parse_word(rhs, index, lineno)
    missing = [n for n in names if index[n] not in images]
    if missing:
        raise ParseError(f"missing image for generator(s): {', '.join(missing)}")
    endo = FreeEndo(len(names), [images[i] for i in range(len(names))])
    return endo, names


def format_monodromy(endo: FreeEndo, names: list[str]) -> str:
    out = ["generators: " + " ".join(names)]
    for i, w in enumerate(endo.images):
        out.append(f"{names[i]} -> {format_word(w, names)}".rstrip())
    return "\n".join(out) + "\n"


# -- matrix files ------------------------------------------------------------


def parse_seifert(text: str) -> SeifertMatrix:
    """Format: first line the size, then that many rows of integers."""
    lines = list(_nonblank_lines(text))
    if not lines:
        raise ParseError("empty Seifert matrix file", 1)
    lineno, first = lines[0]
    try:
        size = int(first)
    except ValueError:
        raise ParseError("first line must be the matrix size", lineno) from None
    rows = []
    for lineno, line in lines[1:]:
        try:
            row = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError("malformed integer row", lineno) from None
        if len(row) != size:
            raise ParseError(f"expected {size} entries in row", lineno)
        rows.append(row)
    if len(rows) != size:
        raise ParseError(f"expected {size} rows, got {len(rows)}")
    if size == 0:
        return SeifertMatrix(IntMatrix(0, 0, ()))
    return SeifertMatrix(IntMatrix.from_rows(rows))


def format_seifert(s: SeifertMatrix) -> str:
    lines = [str(s.size)]
    for i in range(s.size):
        lines.append(" ".join(str(x) for x in s.matrix.row(i)))
    return "\n".join(lines) + "\n"


def _parse_shape_header(lines, what: str) -> tuple[int, int]:
    if not lines:
        raise ParseError(f"empty {what} file", 1)
    lineno, first = lines[0]
    parts = first.split()
    if len(parts) != 2:
        raise ParseError("first line must be 'rows cols'", lineno)
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError("first line must be 'rows cols'", lineno) from None


def parse_int_matrix(text: str) -> IntMatrix:
    """Format: ``rows cols`` header, then row-major whitespace-separated ints."""
    lines = list(_nonblank_lines(text))
    rows, cols = _parse_shape_header(lines, "matrix")
    entries = []
    for lineno, line in lines[1:]:
        for tok in line.split():
            try:
                entries.append(int(tok))
            except ValueError:
                raise ParseError(f"malformed integer {tok!r}", lineno) from None
    if len(entries) != rows * cols:
        raise ParseError(f"expected {rows * cols} entries, got {len(entries)}")
    return IntMatrix(rows, cols, entries)


def format_int_matrix(m: IntMatrix) -> str:
    lines = [f"{m.rows} {m.cols}"]
    for i in range(m.rows):
        lines.append(" ".join(str(x) for x in m.row(i)))
    return "\n".join(lines) + "\n"


def parse_lambda_matrix(text: str) -> LambdaMatrix:
    """Same shape header, entries as compact polynomial tokens like ``s^2-s+1``."""
    lines = list(_nonblank_lines(text))
    rows, cols = _parse_shape_header(lines, "matrix")
    entries = []
    for lineno, line in lines[1:]:
        for tok in line.split():
            entries.append(parse_laurent(tok, line=lineno))
    if len(entries) != rows * cols:
        raise ParseError(f"expected {rows * cols} entries, got {len(entries)}")
    return LambdaMatrix(rows, cols, entries)


def format_lambda_matrix(m: LambdaMatrix) -> str:
    lines = [f"{m.rows} {m.cols}"]
    for i in range(m.rows):
        lines.append(" ".join(
            to_text(m.at(i, j), compact=True) for j in range(m.cols)))
    return "\n".join(lines) + "\n"


# -- homomorphism and presentation files --------------------------------------


def _parse_target(text: str, lineno: int | None = None):
    text = text.strip()
    if text.startswith("Z/"):
        try:
            r = int(text[2:])
        except ValueError:
            raise ParseError(f"malformed cyclic target {text!r}", lineno) from None
        return cyclic(r)
    m = re.match(r"([AS])(\d+)$", text)
    if not m:
        raise ParseError(f"unknown target group {text!r}", lineno)
    degree = int(m.group(2))
    return alternating(degree) if m.group(1) == "A" else symmetric(degree)


def parse_hom(text: str, names: list[str] | None = None) -> tuple[FiniteHom, list[str]]:
    """Format: a ``target: A5`` line, then ``a = (1 3 2)`` (or ``a = 4`` for
    cyclic targets) per generator.

    When ``names`` is given, generators must match it; otherwise they are
    taken in file order.
    """
    lines = list(_nonblank_lines(text))
    if not lines or not lines[0][1].startswith("target:"):
        raise ParseError("homomorphism file must start with a 'target:' line",
                         lines[0][0] if lines else 1)
    lineno, header = lines[0]
    target = _parse_target(header[len("target:"):], lineno)
    seen: dict[str, object] = {}
    order: list[str] = []
    for lineno, line in lines[1:]:
        name, eq, rhs = line.partition("=")
        if not eq:
            raise ParseError("expected 'generator = value' line", lineno)
        name = name.strip()
        rhs = rhs.strip()
        if not _NAME_RE.match(name):
            raise ParseError(f"malformed generator name {name!r}", lineno)
        if name in seen:
            raise ParseError(f"duplicate value for {name!r}", lineno)
        if isinstance(target, CyclicTarget):
            try:
                value: object = int(rhs) % target.order
            except ValueError:
                raise ParseError(f"expected an integer for cyclic target, got {rhs!r}",
                                 lineno) from None
        else:
            value = perm_from_cycle_text(rhs, target.degree, lineno)
        seen[name] = value
        order.append(name)
    if names is None:
        names = order
    missing = [n for n in names if n not in seen]
    if missing:
        raise ParseError(f"missing value for generator(s): {', '.join(missing)}")
    extra = [n for n in order if n not in names]
    if extra:
        raise ParseError(f"unexpected generator(s): {', '.join(extra)}")
    hom = FiniteHom(len(names), target, [seen[n] for n in names])
    return hom, list(names)


def format_hom(hom: FiniteHom, names: list[str]) -> str:
    lines = [f"target: {hom.target.name()}"]
    for name, img in zip(names, hom.images):
        if isinstance(img, Perm):
            lines.append(f"{name} = {perm_to_cycle_text(img)}")
        else:
            lines.append(f"{name} = {img}")
    return "\n".join(lines) + "\n"


def parse_inline_alpha(text: str, names: list[str]) -> FiniteHom:
    """Inline cyclic homomorphism, e.g. ``Z/3:x=1,y=1``."""
    head, colon, body = text.partition(":")
    if not colon:
        raise ParseError(f"malformed inline homomorphism {text!r}")
    target = _parse_target(head)
    if not isinstance(target, CyclicTarget):
        raise ParseError("inline homomorphisms support cyclic targets only")
    values: dict[str, int] = {}
    for item in body.split(","):
        name, eq, rhs = item.partition("=")
        name = name.strip()
        if not eq or name not in names:
            raise ParseError(f"malformed assignment {item!r} in inline homomorphism")
        try:
            values[name] = int(rhs) % target.order
        except ValueError:
            raise ParseError(f"malformed value in {item!r}") from None
    missing = [n for n in names if n not in values]
    if missing:
        raise ParseError(f"missing value for generator(s): {', '.join(missing)}")
    return FiniteHom(len(names), target, [values[n] for n in names])


def parse_presentation(text: str) -> tuple[Presentation, list[str]]:
    """Format: a ``generators:`` line, then ``relator: <word>`` lines with
    relators written to evaluate to the identity."""
    lines = list(_nonblank_lines(text))
    if not lines or not lines[0][1].startswith("generators:"):
        raise ParseError("presentation file must start with a 'generators:' line",
                         lines[0][0] if lines else 1)
    lineno, header = lines[0]
    names = header[len("generators:"):].split()
    if not names or any(not _NAME_RE.match(n) for n in names):
        raise ParseError("malformed generator names", lineno)
    index = {n: i for i, n in enumerate(names)}
    relators = []
    for lineno, line in lines[1:]:
        key, colon, rhs = line.partition(":")
        if not colon or key.strip() != "relator":
            raise ParseError("expected 'relator: <word>' line", lineno)
        relators.append(parse_word(rhs, index, lineno))
    return Presentation(len(names), relators), names


def format_presentation(pres: Presentation, names: list[str]) -> str:
    lines = ["generators: " + " ".join(names)]
    for rel in pres.relators:
        lines.append(f"relator: {format_word(rel, names)}")
    return "\n".join(lines) + "\n"
