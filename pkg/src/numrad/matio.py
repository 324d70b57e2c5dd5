"""JSON wire formats for matrices, pairs, and block partitions.

Matrix: {"rows": n, "cols": m, "data": [[re, im], ...]} row-major.
Pair:   {"A": <matrix>, "B": <matrix>}.
Partition: {"block_sizes": [k1, ...], "blocks": [[<matrix>, ...], ...]}.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .block_bounds import BlockPartition
from .exceptions import MatrixFormatError
from .validation import as_matrix

__all__ = [
    "load_json",
    "matrix_from_json",
    "matrix_to_json",
    "pair_from_json",
    "pair_to_json",
    "partition_from_json",
    "partition_to_json",
]


def matrix_from_json(obj) -> np.ndarray:
    if not isinstance(obj, dict):
        raise MatrixFormatError(f"matrix payload must be an object, got {type(obj).__name__}")
    try:
        rows = int(obj["rows"])
        cols = int(obj["cols"])
        data = obj["data"]
    except (KeyError, TypeError, ValueError) as exc:
        raise MatrixFormatError(f"matrix payload missing/invalid field: {exc}") from exc
    if rows < 1 or cols < 1:
        raise MatrixFormatError(f"matrix dimensions must be positive, got {rows} x {cols}")
    if not isinstance(data, list) or len(data) != rows * cols:
        raise MatrixFormatError(
            f"data must list rows*cols = {rows * cols} entries, got {len(data) if isinstance(data, list) else type(data).__name__}"
        )
    entries = np.empty(rows * cols, dtype=np.complex128)
    for k, item in enumerate(data):
        if not isinstance(item, (list, tuple)) or len(item) != 2:
            raise MatrixFormatError(f"entry {k} must be a [re, im] pair, got {item!r}")
        entries[k] = complex(float(item[0]), float(item[1]))
    return as_matrix(entries.reshape(rows, cols))


def matrix_to_json(M) -> dict:
    M = as_matrix(M)
    return {
        "rows": int(M.shape[0]),
        "cols": int(M.shape[1]),
        "data": [[float(z.real), float(z.imag)] for z in M.reshape(-1)],
    }


def pair_from_json(obj) -> tuple[np.ndarray, np.ndarray]:
    if not isinstance(obj, dict) or "A" not in obj or "B" not in obj:
        raise MatrixFormatError('pair payload must be an object with "A" and "B"')
    return matrix_from_json(obj["A"]), matrix_from_json(obj["B"])


def pair_to_json(A, B) -> dict:
    return {"A": matrix_to_json(A), "B": matrix_to_json(B)}


def partition_from_json(obj) -> BlockPartition:
    if not isinstance(obj, dict) or "block_sizes" not in obj or "blocks" not in obj:
        raise MatrixFormatError('partition payload needs "block_sizes" and "blocks"')
    sizes = tuple(int(k) for k in obj["block_sizes"])
    rows = obj["blocks"]
    if not isinstance(rows, list) or len(rows) != len(sizes):
        raise MatrixFormatError("blocks must be a grid matching block_sizes")
    grid = []
    for row in rows:
        if not isinstance(row, list) or len(row) != len(sizes):
            raise MatrixFormatError("blocks must be a grid matching block_sizes")
        grid.append(tuple(matrix_from_json(cell) for cell in row))
    return BlockPartition(block_sizes=sizes, blocks=tuple(grid))


def partition_to_json(partition: BlockPartition) -> dict:
    return {
        "block_sizes": list(partition.block_sizes),
        "blocks": [[matrix_to_json(b) for b in row] for row in partition.blocks],
    }


def load_json(path) -> dict:
    text = Path(path).read_text(encoding="utf-8")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MatrixFormatError(f"{path}: {exc}") from exc
