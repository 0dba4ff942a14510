"""Flat text formats for matrices and map tables.

Matrix file::

    # key: value          (optional metadata lines)
    ring p=2 s=3 n=8 rows=4
    5 7 5 6 1 0 0 0
    ...

Map table file::

    # key: value
    map p=2 s=3 target=4 width=2 entries=8
    0 0 0
    1 1 1
    ...

Each table row is the domain element followed by its image. Entries are
reduced mod p^s on parse; ``dumps`` of a parsed file reproduces it byte for
byte when it was written in canonical form.
"""

import re
from dataclasses import dataclass, field

import numpy as np

from .ring import RingSpec


class FormatError(ValueError):
    pass


_HEADER = re.compile(r"^(ring|map)((?:\s+\w+=\d+)+)\s*$")


@dataclass(eq=False)
class MatrixFile:
    spec: RingSpec
    matrix: np.ndarray
    meta: dict = field(default_factory=dict)

    @property
    def n(self):
        return self.matrix.shape[1]

    @property
    def rows(self):
        return self.matrix.shape[0]


@dataclass(eq=False)
class TableFile:
    spec: RingSpec
    target: int
    table: np.ndarray
    meta: dict = field(default_factory=dict)

    @property
    def width(self):
        return self.table.shape[1]

    def as_dict(self):
        return {u: tuple(int(x) for x in row) for u, row in enumerate(self.table)}


def _parse_header(line):
    m = _HEADER.match(line.strip())
    if not m:
        raise FormatError(f"bad header line: {line!r}")
    fields = dict(kv.split("=") for kv in m.group(2).split())
    return m.group(1), {k: int(v) for k, v in fields.items()}


def _split(text):
    meta, body = {}, []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if body:
                raise FormatError("metadata must precede the header")
            key, sep, val = line[1:].partition(":")
            if not sep:
                raise FormatError(f"bad metadata line: {raw!r}")
            meta[key.strip()] = val.strip()
        else:
            body.append(line)
    if not body:
        raise FormatError("missing header line")
    return meta, body


def _need(fields, *keys):
    missing = [k for k in keys if k not in fields]
    if missing:
        raise FormatError(f"header missing {', '.join(missing)}")


def _int_rows(lines, width, what):
    out = []
    for line in lines:
        try:
            row = [int(x) for x in line.split()]
        except ValueError:
            raise FormatError(f"non-integer entry in {what} row {line!r}") from None
        if len(row) != width:
            raise FormatError(f"{what} row {line!r} has {len(row)} entries, expected {width}")
        out.append(row)
    return np.array(out, dtype=np.int64).reshape(len(out), width)


def loads(text):
    """Parse either file kind; returns a MatrixFile or a TableFile."""
    meta, body = _split(text)
    kind, f = _parse_header(body[0])
    if kind == "ring":
        _need(f, "p", "s", "n", "rows")
        spec = RingSpec(f["p"], f["s"])
        if len(body) - 1 != f["rows"]:
            raise FormatError(f"header says rows={f['rows']}, found {len(body) - 1}")
        mat = _int_rows(body[1:], f["n"], "matrix") % spec.m
        return MatrixFile(spec, mat, meta)
    _need(f, "p", "s", "target", "width", "entries")
    spec = RingSpec(f["p"], f["s"])
    if f["entries"] != spec.m or len(body) - 1 != spec.m:
        raise FormatError(f"a map table over {spec} needs {spec.m} entries")
    rows = _int_rows(body[1:], f["width"] + 1, "table")
    if list(rows[:, 0]) != list(range(spec.m)):
        raise FormatError("table rows must list 0..m-1 in order")
    return TableFile(spec, f["target"], rows[:, 1:] % f["target"], meta)


def load(path):
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def _meta_lines(meta):
    return [f"# {k}: {v}" for k, v in meta.items()]


def dump_matrix(spec, matrix, meta=None):
    matrix = np.asarray(matrix, dtype=np.int64)
    if matrix.ndim == 1:
        matrix = matrix.reshape(1, -1)
    r, n = matrix.shape
    lines = _meta_lines(meta or {})
    lines.append(f"ring p={spec.p} s={spec.s} n={n} rows={r}")
    lines.extend(" ".join(str(int(x)) for x in row) for row in matrix)
    return "\n".join(lines) + "\n"


def dump_table(spec, target, table, meta=None):
    table = np.asarray(table, dtype=np.int64)
    lines = _meta_lines(meta or {})
    lines.append(f"map p={spec.p} s={spec.s} target={target} width={table.shape[1]} entries={spec.m}")
    for u, row in enumerate(table):
        lines.append(" ".join(str(int(x)) for x in [u, *row]))
    return "\n".join(lines) + "\n"


def dumps(obj):
    if isinstance(obj, MatrixFile):
        return dump_matrix(obj.spec, obj.matrix, obj.meta)
    if isinstance(obj, TableFile):
        return dump_table(obj.spec, obj.target, obj.table, obj.meta)
    raise TypeError(f"cannot serialise {type(obj).__name__}")
