"""JSON input formats.

Matrix: {"rows": m, "cols": n, "re": [[...]], "im": [[...]]} with "im"
optional (absent means zero).  Tensor: {"m": m, "n": n, "slices": [F1, F2]}
with real m x n nested arrays.  Ragged arrays and non-finite values are
rejected.
"""

from __future__ import annotations

import json

import numpy as np

from .tensor import Tensor2


class InputError(ValueError):
    """Invalid input file; ``field`` names the offending entry."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


def _positive_int(obj: dict, field: str) -> int:
    if field not in obj:
        raise InputError(field, "missing")
    value = obj[field]
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise InputError(field, f"expected a positive integer, got {value!r}")
    return value


def _real_array(obj, field: str, rows: int, cols: int) -> np.ndarray:
    if not isinstance(obj, list) or len(obj) != rows:
        raise InputError(field, f"expected {rows} rows")
    for i, row in enumerate(obj):
        if not isinstance(row, list) or len(row) != cols:
            raise InputError(field, f"row {i} is ragged (expected {cols} entries)")
        for j, entry in enumerate(row):
            if isinstance(entry, bool) or not isinstance(entry, (int, float)):
                raise InputError(field, f"entry [{i}][{j}] is not a number")
    arr = np.asarray(obj, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise InputError(field, "contains non-finite values")
    return arr


def parse_matrix(obj) -> np.ndarray:
    """Dict -> dense complex matrix."""
    if not isinstance(obj, dict):
        raise InputError("<root>", "expected a JSON object")
    rows = _positive_int(obj, "rows")
    cols = _positive_int(obj, "cols")
    re = _real_array(obj.get("re"), "re", rows, cols)
    if "im" in obj:
        im = _real_array(obj["im"], "im", rows, cols)
    else:
        im = np.zeros((rows, cols))
    return re + 1j * im


def parse_tensor(obj) -> Tensor2:
    """Dict -> Tensor2."""
    if not isinstance(obj, dict):
        raise InputError("<root>", "expected a JSON object")
    m = _positive_int(obj, "m")
    n = _positive_int(obj, "n")
    slices = obj.get("slices")
    if not isinstance(slices, list) or len(slices) != 2:
        raise InputError("slices", "expected a list of exactly 2 slices")
    f1 = _real_array(slices[0], "slices[0]", m, n)
    f2 = _real_array(slices[1], "slices[1]", m, n)
    return Tensor2(f1=f1, f2=f2)


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError("<file>", f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError("<file>", f"invalid JSON in {path}: {exc}") from exc


def load_matrix(path: str) -> np.ndarray:
    return parse_matrix(_load_json(path))


def load_tensor(path: str) -> Tensor2:
    return parse_tensor(_load_json(path))
