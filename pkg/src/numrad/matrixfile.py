"""Reading and writing matrices as JSON documents.

A matrix file looks like ``{"dim": 2, "entries": [[e00, e01], [e10, e11]]}``.
Each entry may be a ``[re, im]`` pair, a plain number, or a string such as
``"30+30i"``, ``"-2.5i"``, ``"i"`` or ``"1e-3-4i"`` (``j`` is accepted for ``i``).
Writing always uses ``[re, im]`` pairs with shortest round-trip floats, so a
written file parses back to identical values.
"""

import json
import math
import re

import numpy as np

_NUM = r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_REAL = re.compile(rf"[+-]?{_NUM}")
_IMAG = re.compile(rf"(?P<im>[+-]?(?:{_NUM})?)[ij]")
_BOTH = re.compile(rf"(?P<re>[+-]?{_NUM})(?P<im>[+-](?:{_NUM})?)[ij]")


class MatrixFileError(ValueError):
    """Malformed matrix document."""


def parse_entry(value, where=""):
    """Convert one entry to a Python complex; ``where`` labels errors."""
    if isinstance(value, bool):
        raise MatrixFileError(f"{where}: booleans are not numbers")
    if isinstance(value, (int, float)):
        z = complex(value)
    elif isinstance(value, list):
        if len(value) != 2 or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in value):
            raise MatrixFileError(f"{where}: expected a [re, im] pair of numbers, got {value!r}")
        z = complex(value[0], value[1])
    elif isinstance(value, str):
        z = _parse_string(value.replace(" ", ""), where)
    else:
        raise MatrixFileError(f"{where}: unsupported entry {value!r}")
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise MatrixFileError(f"{where}: non-finite entry {value!r}")
    return z


def _imag(text):
    if text in ("", "+"):
        return 1.0
    if text == "-":
        return -1.0
    return float(text)


def _parse_string(text, where):
    if _REAL.fullmatch(text):
        return complex(float(text), 0.0)
    m = _IMAG.fullmatch(text)
    if m:
        return complex(0.0, _imag(m.group("im")))
    m = _BOTH.fullmatch(text)
    if m:
        return complex(float(m.group("re")), _imag(m.group("im")))
    raise MatrixFileError(f"{where}: cannot parse complex number {text!r}")


def matrix_from_document(doc):
    if not isinstance(doc, dict) or "entries" not in doc:
        raise MatrixFileError('expected an object with an "entries" array')
    rows = doc["entries"]
    if not isinstance(rows, list) or not rows:
        raise MatrixFileError("empty matrix")
    n = len(rows)
    for i, row in enumerate(rows):
        if not isinstance(row, list):
            raise MatrixFileError(f"row {i}: expected an array")
        if len(row) != n:
            raise MatrixFileError(f"non-square: row {i} has {len(row)} entries, expected {n}")
    if "dim" in doc and doc["dim"] != n:
        raise MatrixFileError(f'"dim" is {doc["dim"]!r} but entries have {n} rows')
    M = np.empty((n, n), dtype=np.complex128)
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            M[i, j] = parse_entry(v, f"row {i}, col {j}")
    return M


def parse_matrix(path):
    """Read a matrix file into a complex128 array."""
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise MatrixFileError(f"{path}: invalid JSON ({exc})") from exc
    try:
        return matrix_from_document(doc)
    except MatrixFileError as exc:
        raise MatrixFileError(f"{path}: {exc}") from None


def matrix_to_document(A):
    A = np.asarray(A, dtype=np.complex128)
    if A.ndim != 2 or A.shape[0] != A.shape[1] or A.size == 0:
        raise MatrixFileError(f"non-square or empty matrix of shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise MatrixFileError("non-finite entry")
    return {
        "dim": int(A.shape[0]),
        "entries": [[[float(z.real), float(z.imag)] for z in row] for row in A],
    }


def dumps_matrix(A, indent=None):
    return json.dumps(matrix_to_document(A), indent=indent)


def write_matrix(path, A):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_matrix(A))
        fh.write("\n")
