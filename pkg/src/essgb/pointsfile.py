"""Plain-text points files.

One point per line, coordinates separated by whitespace and/or commas.
Blank lines and lines starting with ``#`` are ignored.  The prime is not
stored in the file.
"""

import re

from .exceptions import ParseError

_FIELD = re.compile(r"[^\s,]+")


def parse_points(text):
    """Return the rows of a points file as a list of int tuples."""
    rows = []
    width = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        row = []
        for m in _FIELD.finditer(line):
            tok = m.group()
            try:
                row.append(int(tok))
            except ValueError:
                raise ParseError(f"not an integer: {tok!r}", m.start() + 1, lineno) from None
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise ParseError(f"expected {width} coordinates, found {len(row)}", 1, lineno)
        rows.append(tuple(row))
    if not rows:
        raise ParseError("no points found", 1, 1)
    return rows


def read_points(path):
    with open(path) as fh:
        return parse_points(fh.read())


def format_points(rows, comment=None):
    lines = [f"# {c}" for c in (comment or "").splitlines()]
    lines.extend(" ".join(str(int(v)) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def write_points(path, rows, comment=None):
    with open(path, "w") as fh:
        fh.write(format_points(rows, comment))
