"""Reading density matrices from JSON state files.

Format::

    {
      "dims": [2, 2],
      "matrix": [[[0.5, 0], [0, 0], [0, 0], [0.5, 0]],
                 ...]
    }

``matrix`` holds D rows of D ``[re, im]`` pairs, D the product of ``dims``.
"""

from __future__ import annotations

import json
import re
from pathlib import Path

import numpy as np

from .config import Tolerances
from .qstate import MultipartiteState, StateError, validate


class StateFileError(ValueError):
    def __init__(self, path, message: str, line: int | None = None):
        self.path = str(path)
        self.line = line
        where = self.path if line is None else f"{self.path}:{line}"
        super().__init__(f"{where}: {message}")


def _row_lines(text: str) -> list[int]:
    """1-based line number of each row of the ``matrix`` array, best effort."""
    start = re.search(r'"matrix"\s*:\s*\[', text)
    if start is None:
        return []
    lines, depth, i = [], 1, start.end()
    while i < len(text) and depth > 0:
        ch = text[i]
        if ch == "[":
            depth += 1
            if depth == 2:
                lines.append(text.count("\n", 0, i) + 1)
        elif ch == "]":
            depth -= 1
        i += 1
    return lines


def parse_state(text: str, path="<string>", tol: Tolerances | None = None) -> MultipartiteState:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StateFileError(path, f"invalid JSON: {exc.msg} (column {exc.colno})", exc.lineno) from None
    if not isinstance(doc, dict) or "dims" not in doc or "matrix" not in doc:
        raise StateFileError(path, 'expected an object with "dims" and "matrix" fields')

    dims = doc["dims"]
    if not isinstance(dims, list) or not dims or not all(isinstance(d, int) and not isinstance(d, bool) for d in dims):
        raise StateFileError(path, '"dims" must be a nonempty array of integers')

    rows = doc["matrix"]
    line_of = _row_lines(text)

    def row_line(r: int) -> int | None:
        return line_of[r] if r < len(line_of) else None

    if not isinstance(rows, list) or not rows:
        raise StateFileError(path, '"matrix" must be a nonempty array of rows')
    width = None
    values = []
    for r, row in enumerate(rows):
        if not isinstance(row, list):
            raise StateFileError(path, f"matrix row {r} is not an array", row_line(r))
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise StateFileError(path, f"matrix row {r} has {len(row)} entries, row 0 has {width}", row_line(r))
        out = []
        for c, entry in enumerate(row):
            ok = (
                isinstance(entry, list)
                and len(entry) == 2
                and all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in entry)
            )
            if not ok:
                raise StateFileError(path, f"matrix[{r}][{c}] must be a [re, im] pair of numbers", row_line(r))
            out.append(complex(entry[0], entry[1]))
        values.append(out)

    try:
        return validate(dims, np.array(values, dtype=np.complex128), tol)
    except StateError as exc:
        raise StateFileError(path, str(exc)) from None


def load_state(path, tol: Tolerances | None = None) -> MultipartiteState:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise StateFileError(path, f"cannot read file: {exc.strerror}") from None
    return parse_state(text, path, tol)


def dump_state(state: MultipartiteState) -> str:
    rows = [[[float(z.real), float(z.imag)] for z in row] for row in state.rho]
    body = ",\n    ".join(json.dumps(r) for r in rows)
    return '{\n  "dims": %s,\n  "matrix": [\n    %s\n  ]\n}\n' % (json.dumps(list(state.dims)), body)
