"""One-hot matrices for symbol strings, and their CSV form.

Rows beyond the string length sit in the nop column (index 0); trailing
nop rows are treated as padding when reading a matrix back.
"""

import io
from pathlib import Path
from typing import List, Sequence, Union

import numpy as np

from ..grammar.spec import GrammarSpec

ALPHABET_SUFFIX = ".alphabet.txt"


class OneHotError(ValueError):
    """Raised for strings longer than the matrix or malformed matrices."""


def to_one_hot(symbols: Sequence[int], max_len: int, size: int) -> np.ndarray:
    """(max_len x size) int8 matrix with a single 1 per row."""
    if len(symbols) > max_len:
        raise OneHotError(f"string of length {len(symbols)} exceeds max length {max_len}")
    indices = np.zeros(max_len, dtype=np.int64)
    indices[: len(symbols)] = symbols
    if len(symbols) and (indices.min() < 0 or indices.max() >= size):
        raise OneHotError(f"symbol index outside alphabet of {size}")
    matrix = np.zeros((max_len, size), dtype=np.int8)
    matrix[np.arange(max_len), indices] = 1
    return matrix


def from_one_hot(matrix: np.ndarray) -> List[int]:
    matrix = np.asarray(matrix)
    if matrix.ndim != 2 or matrix.shape[1] == 0:
        raise OneHotError(f"expected a 2-D matrix, got shape {matrix.shape}")
    if not np.isin(matrix, (0, 1)).all():
        raise OneHotError("matrix entries must be 0 or 1")
    sums = matrix.sum(axis=1)
    bad = np.flatnonzero(sums != 1)
    if bad.size:
        raise OneHotError(f"row {int(bad[0])} has {int(sums[bad[0]])} ones")
    symbols = matrix.argmax(axis=1).tolist()
    while symbols and symbols[-1] == 0:
        symbols.pop()
    return symbols


def one_hot_csv(matrix: np.ndarray) -> str:
    """Headerless CSV, one matrix row per line."""
    buffer = io.StringIO()
    np.savetxt(buffer, matrix, fmt="%d", delimiter=",")
    return buffer.getvalue()


def read_one_hot_csv(text: str, max_len: int) -> List[np.ndarray]:
    """Split CSV rows back into ``max_len``-row matrices."""
    rows = np.loadtxt(io.StringIO(text), delimiter=",", dtype=np.int64, ndmin=2)
    if rows.size == 0:
        return []
    if rows.shape[0] % max_len:
        raise OneHotError(f"{rows.shape[0]} rows do not split into matrices of {max_len}")
    return [rows[i : i + max_len] for i in range(0, rows.shape[0], max_len)]


def alphabet_sidecar_path(path: Union[str, Path]) -> Path:
    path = Path(path)
    return path.with_name(path.name + ALPHABET_SUFFIX)


def write_alphabet_sidecar(path: Union[str, Path], spec: GrammarSpec) -> Path:
    """Write the alphabet order, one symbol per line, next to ``path``."""
    sidecar = alphabet_sidecar_path(path)
    sidecar.write_text("\n".join(symbol.name for symbol in spec.alphabet) + "\n", encoding="utf-8")
    return sidecar
