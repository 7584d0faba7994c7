"""Reading and writing ring-spec files.

A table file looks like::

    ring Z/4 size 4
    zero 0 one 1
    add:
    0 1 2 3
    ...
    mul:
    ...

Blank lines and ``#`` comments are ignored.  A file may instead hold a single
constructor line:

    cyclic 6
    gf 4
    matrix lower 2 gf 2
    product <file-or-constructor> ; <file-or-constructor> [; ...]
    quotient <file-or-constructor> ideal i1 i2 ...

``product`` arguments are separated by ``;`` when they contain spaces (plain
file paths may also be given space-separated).  ``quotient`` uses the two-sided
ideal generated by the listed indices.
"""
from __future__ import annotations

from pathlib import Path

from .errors import RingError, SpecParseError
from .ring import (
    DEFAULT_SIZE_CAP,
    FiniteRing,
    direct_product,
    make_cyclic_ring,
    make_finite_field,
    make_matrix_ring,
    quotient_ring,
    two_sided_ideal_generated,
)

CONSTRUCTORS = ("cyclic", "gf", "matrix", "product", "quotient")


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _ints(tokens: list[str], lineno: int, source: str) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        bad = next(t for t in tokens if not t.lstrip("-").isdigit())
        raise SpecParseError(f"expected an integer, got {bad!r}", lineno, source) from None


def parse_table_text(text: str, source: str = "<string>") -> FiniteRing:
    lines = [(i, _strip(raw)) for i, raw in enumerate(text.splitlines(), 1)]
    lines = [(i, s) for i, s in lines if s]
    if not lines:
        raise SpecParseError("empty ring spec", 1, source)
    it = iter(lines)

    def take(what: str) -> tuple[int, str]:
        try:
            return next(it)
        except StopIteration:
            last = lines[-1][0]
            raise SpecParseError(f"unexpected end of input, expected {what}", last, source) from None

    ln, head = take("header")
    tok = head.split()
    if len(tok) != 4 or tok[0] != "ring" or tok[2] != "size":
        raise SpecParseError("header must read 'ring <label> size <n>'", ln, source)
    label = tok[1]
    (n,) = _ints([tok[3]], ln, source)
    if n < 2:
        raise SpecParseError(f"size must be at least 2, got {n}", ln, source)
    ln, second = take("'zero <i> one <j>'")
    tok = second.split()
    if len(tok) != 4 or tok[0] != "zero" or tok[2] != "one":
        raise SpecParseError("second line must read 'zero <i> one <j>'", ln, source)
    zero, one = _ints([tok[1], tok[3]], ln, source)
    tables = {}
    for name in ("add", "mul"):
        ln, marker = take(f"'{name}:'")
        if marker != f"{name}:":
            raise SpecParseError(f"expected '{name}:', got {marker!r}", ln, source)
        rows = []
        for _ in range(n):
            ln, row = take(f"{name} row")
            vals = _ints(row.split(), ln, source)
            if len(vals) != n:
                raise SpecParseError(f"{name} row has {len(vals)} entries, expected {n}", ln, source)
            for v in vals:
                if not 0 <= v < n:
                    raise SpecParseError(f"{name} entry {v} out of range 0..{n - 1}", ln, source)
            rows.append(vals)
        tables[name] = rows
    for ln, extra in it:
        raise SpecParseError(f"unexpected trailing content {extra!r}", ln, source)
    for v, nm in ((zero, "zero"), (one, "one")):
        if not 0 <= v < n:
            raise SpecParseError(f"{nm} index {v} out of range", 2, source)
    try:
        return FiniteRing(tables["add"], tables["mul"], zero, one, label=label)
    except RingError as exc:
        raise SpecParseError(f"tables do not define a ring: {exc}", lines[0][0], source) from None


def is_constructor(text: str) -> bool:
    first = _strip(text.strip().splitlines()[0]) if text.strip() else ""
    return first.split(" ", 1)[0] in CONSTRUCTORS


def _split_args(rest: str) -> list[str]:
    if ";" in rest:
        return [a.strip() for a in rest.split(";") if a.strip()]
    return rest.split()


def build_constructor(line: str, source: str = "<string>", lineno: int = 1, base_dir: Path | None = None,
                      cap: int = DEFAULT_SIZE_CAP) -> FiniteRing:
    tok = line.split()
    head = tok[0]
    try:
        if head == "cyclic":
            if len(tok) != 2:
                raise SpecParseError("usage: cyclic <n>", lineno, source)
            return make_cyclic_ring(_ints(tok[1:], lineno, source)[0])
        if head == "gf":
            if len(tok) != 2:
                raise SpecParseError("usage: gf <q>", lineno, source)
            return make_finite_field(_ints(tok[1:], lineno, source)[0])
        if head == "matrix":
            if len(tok) != 5 or tok[1] not in ("full", "lower", "upper") or tok[3] != "gf":
                raise SpecParseError("usage: matrix full|lower|upper <n> gf <q>", lineno, source)
            n, q = _ints([tok[2], tok[4]], lineno, source)
            return make_matrix_ring(make_finite_field(q), n, tok[1], cap=cap)
        if head == "product":
            args = _split_args(line[len("product"):].strip())
            if len(args) < 2:
                raise SpecParseError("product needs at least two factors", lineno, source)
            return direct_product([load_ring(a, base_dir, cap) for a in args], cap=cap)
        if head == "quotient":
            rest = line[len("quotient"):]
            if " ideal" not in rest:
                raise SpecParseError("usage: quotient <ring> ideal <i1> <i2> ...", lineno, source)
            ring_arg, ideal_part = rest.rsplit(" ideal", 1)
            R = load_ring(ring_arg.strip(), base_dir, cap)
            gens = _ints(ideal_part.split(), lineno, source)
            for g in gens:
                if not 0 <= g < R.size:
                    raise SpecParseError(f"ideal generator {g} out of range", lineno, source)
            Q, _ = quotient_ring(R, two_sided_ideal_generated(R, gens))
            return Q
    except SpecParseError:
        raise
    except RingError as exc:
        raise SpecParseError(str(exc), lineno, source) from None
    raise SpecParseError(f"unknown constructor {head!r}", lineno, source)


def parse_ring_text(text: str, source: str = "<string>", base_dir: Path | None = None,
                    cap: int = DEFAULT_SIZE_CAP) -> FiniteRing:
    if is_constructor(text):
        body = [(i, _strip(l)) for i, l in enumerate(text.splitlines(), 1) if _strip(l)]
        if len(body) != 1:
            raise SpecParseError("a constructor spec holds exactly one line", body[1][0], source)
        lineno, line = body[0]
        return build_constructor(line, source, lineno, base_dir, cap)
    return parse_table_text(text, source)


def load_ring(arg: str, base_dir: Path | None = None, cap: int = DEFAULT_SIZE_CAP) -> FiniteRing:
    """A ring from a file path or an inline constructor string."""
    path = Path(arg)
    if not path.is_absolute() and base_dir is not None and (base_dir / path).exists():
        path = base_dir / path
    if path.exists() and path.is_file():
        return parse_ring_text(path.read_text(), str(path), path.parent, cap)
    if arg.split(" ", 1)[0] in CONSTRUCTORS:
        return parse_ring_text(arg, "<inline>", base_dir, cap)
    raise SpecParseError(f"no such ring file or constructor: {arg!r}", 1, arg)


def format_ring(R: FiniteRing) -> str:
    """Table serialization; reading it back gives a ring with the same digest."""
    label = R.label.replace(" ", "")
    width = len(str(R.size - 1))
    out = [f"ring {label} size {R.size}", f"zero {R.zero} one {R.one}", "add:"]
    out += [" ".join(str(v).rjust(width) for v in row) for row in R._add]
    out.append("mul:")
    out += [" ".join(str(v).rjust(width) for v in row) for row in R._mul]
    return "\n".join(out) + "\n"
