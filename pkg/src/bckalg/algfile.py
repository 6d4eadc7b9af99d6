"""Line-oriented algebra file format.

    kind: bck|wajsberg|mv
    order: <n>
    elements: <n names>
    zero: <name>            (and/or one:, per kind)
    one: <name>
    complement: <n names>   (optional; required for mv)
    table:
    <n rows of n names>     (row i, column j holds element_i op element_j)

Lines starting with '#' and blank lines are ignored. Rendering is canonical:
keys in the order above, single spaces, no comments; parse(render(a)) == a.
"""

from __future__ import annotations

from pathlib import Path

from .core import AlgebraError, FiniteAlgebra, Kind, new_algebra

_HEADER_KEYS = ("kind", "order", "elements", "zero", "one", "complement")


class ParseError(AlgebraError):
    """Raised when a document does not follow the format."""


def fixture_dir() -> Path:
    """Directory of the bundled worked-example corpus."""
    return Path(__file__).resolve().parent / "fixtures"


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        out.append((lineno, line))
    return out


def parse_algebra(text: str) -> FiniteAlgebra:
    """Parse one algebra document; raises ParseError with a line number."""
    lines = _content_lines(text)
    header: dict[str, str] = {}
    pos = 0
    while pos < len(lines):
        lineno, line = lines[pos]
        if line == "table:":
            pos += 1
            break
        key, sep, value = line.partition(":")
        key = key.strip()
        if not sep or key not in _HEADER_KEYS:
            raise ParseError(f"line {lineno}: expected a header key or 'table:', got {line!r}")
        if key in header:
            raise ParseError(f"line {lineno}: duplicate key {key!r}")
        header[key] = value.strip()
        pos += 1
    else:
        raise ParseError("missing 'table:' section")

    for key in ("kind", "order", "elements"):
        if key not in header:
            raise ParseError(f"missing required key {key!r}")
    try:
        kind = Kind(header["kind"])
    except ValueError:
        raise ParseError(f"unknown kind {header['kind']!r}") from None
    try:
        order = int(header["order"])
    except ValueError:
        raise ParseError(f"order must be an integer, got {header['order']!r}") from None
    if order < 1:
        raise ParseError(f"order must be >= 1, got {order}")

    names = tuple(header["elements"].split())
    if len(names) != order:
        raise ParseError(f"elements lists {len(names)} names, order says {order}")
    if len(set(names)) != order:
        raise ParseError("element names must be pairwise distinct")
    where = {name: i for i, name in enumerate(names)}

    def lookup(name: str, context: str) -> int:
        if name not in where:
            raise ParseError(f"{context}: undeclared element name {name!r}")
        return where[name]

    rows = []
    for i in range(order):
        if pos >= len(lines):
            raise ParseError(f"table has {i} rows, expected {order}")
        lineno, line = lines[pos]
        pos += 1
        cells = line.split()
        if len(cells) != order:
            raise ParseError(f"line {lineno}: table row has {len(cells)} entries, expected {order}")
        rows.append([lookup(c, f"line {lineno}") for c in cells])
    if pos < len(lines):
        lineno, line = lines[pos]
        raise ParseError(f"line {lineno}: unexpected content after the table: {line!r}")

    zero = lookup(header["zero"], "zero") if "zero" in header else None
    one = lookup(header["one"], "one") if "one" in header else None
    complement = None
    if "complement" in header:
        cells = header["complement"].split()
        if len(cells) != order:
            raise ParseError(f"complement lists {len(cells)} names, expected {order}")
        complement = [lookup(c, "complement") for c in cells]

    return new_algebra(kind, names, rows, zero=zero, one=one, complement=complement)


def load_algebra(path: str | Path) -> FiniteAlgebra:
    return parse_algebra(Path(path).read_text(encoding="utf-8"))


def render_algebra(alg: FiniteAlgebra) -> str:
    """Canonical document for an algebra; inverse of parse_algebra."""
    lines = [
        f"kind: {alg.kind.value}",
        f"order: {alg.order}",
        "elements: " + " ".join(alg.names),
        f"zero: {alg.names[alg.zero]}",
    ]
    if alg.unit is not None:
        lines.append(f"one: {alg.names[alg.unit]}")
    if alg.complement is not None:
        lines.append("complement: " + " ".join(alg.names[c] for c in alg.complement))
    lines.append("table:")
    for row in alg.table.entries:
        lines.append(" ".join(alg.names[v] for v in row))
    return "\n".join(lines) + "\n"


def save_algebra(alg: FiniteAlgebra, path: str | Path) -> None:
    Path(path).write_text(render_algebra(alg), encoding="utf-8")
