"""Pinchings of operator matrices into small nonnegative matrices.

An n x n grid of blocks is compressed entrywise under one of seven schemes;
the numerical radius (schemes t1, t2, t3, a, c) or spectral radius (schemes
b, d) of the small pinch matrix dominates w of the assembled operator.
Anti-diagonal positions use 1-based indices j = n - i + 1; when a block at a
numerical-radius position is rectangular the entry falls back to the operator
norm, which only enlarges the pinch.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .exceptions import (
    InvalidParameters,
    InvalidPartition,
    NotTwoByTwo,
    SchemeParameterMissing,
)
from .linalg import PowerFunction, absolute_value, operator_norm, positive_power, spectral_radius
from .records import BoundRecord, bound_record
from .radius import radius_value
from .validation import as_matrix

__all__ = [
    "BlockPartition",
    "PinchScheme",
    "SCHEME_IDS",
    "block_bound",
    "pinch",
    "two_by_two_closed_form",
]

SCHEME_IDS = ("t1", "t2", "t3", "a", "b", "c", "d")


@dataclass(frozen=True)
class BlockPartition:
    """An n x n grid of blocks; blocks[i][j] has shape (sizes[i], sizes[j])."""

    block_sizes: tuple[int, ...]
    blocks: tuple[tuple[np.ndarray, ...], ...]

    def __post_init__(self):
        sizes = tuple(int(k) for k in self.block_sizes)
        if len(sizes) < 1 or any(k < 1 for k in sizes):
            raise InvalidPartition(f"block sizes must be positive, got {sizes}")
        n = len(sizes)
        if len(self.blocks) != n or any(len(row) != n for row in self.blocks):
            raise InvalidPartition(f"expected a {n} x {n} grid of blocks")
        grid = []
        for i in range(n):
            row = []
            for j in range(n):
                blk = as_matrix(self.blocks[i][j])
                if blk.shape != (sizes[i], sizes[j]):
                    raise InvalidPartition(
                        f"block ({i}, {j}) has shape {blk.shape}, expected {(sizes[i], sizes[j])}"
                    )
                row.append(blk)
            grid.append(tuple(row))
        object.__setattr__(self, "block_sizes", sizes)
        object.__setattr__(self, "blocks", tuple(grid))

    @property
    def n_blocks(self) -> int:
        return len(self.block_sizes)

    @property
    def dimension(self) -> int:
        return sum(self.block_sizes)

    def assemble(self) -> np.ndarray:
        return np.block([[np.asarray(b) for b in row] for row in self.blocks])

    @classmethod
    def from_matrix(cls, M, block_sizes) -> "BlockPartition":
        M = as_matrix(M)
        sizes = tuple(int(k) for k in block_sizes)
        if M.shape != (sum(sizes), sum(sizes)):
            raise InvalidPartition(
                f"matrix shape {M.shape} does not match block sizes {sizes}"
            )
        edges = np.cumsum((0,) + sizes)
        grid = tuple(
            tuple(M[edges[i] : edges[i + 1], edges[j] : edges[j + 1]] for j in range(len(sizes)))
            for i in range(len(sizes))
        )
        return cls(block_sizes=sizes, blocks=grid)


@dataclass(frozen=True)
class PinchScheme:
    """Scheme selector; schemes c and d need a power pair with exponents summing to 1."""

    scheme_id: str
    f: PowerFunction | None = field(default=None)
    g: PowerFunction | None = field(default=None)

    def __post_init__(self):
        if self.scheme_id not in SCHEME_IDS:
            raise InvalidParameters(
                f"unknown scheme {self.scheme_id!r}; expected one of {SCHEME_IDS}"
            )
        if self.scheme_id in ("c", "d"):
            if self.f is None or self.g is None:
                raise SchemeParameterMissing(
                    f"scheme {self.scheme_id!r} requires the power pair f, g"
                )
            if abs(self.f.exponent + self.g.exponent - 1.0) > 1e-12:
                raise InvalidParameters("power pair must satisfy f.exponent + g.exponent = 1")


def _w_entry(block: np.ndarray, tol: float | None) -> float:
    # numerical radius for square blocks; rectangular blocks fall back to the norm
    if block.shape[0] == block.shape[1]:
        return radius_value(block, tol)
    return operator_norm(block)


def _power_mean_entry(block: np.ndarray, f: PowerFunction, g: PowerFunction) -> float:
    # (1/2) ||f^2(|X|) + g^2(|X^H|)||; rectangular blocks fall back to the norm
    if block.shape[0] != block.shape[1]:
        return operator_norm(block)
    X = positive_power(absolute_value(block), 2.0 * f.exponent)
    Y = positive_power(absolute_value(block.conj().T), 2.0 * g.exponent)
    return 0.5 * operator_norm(X + Y)


def _half_power_entry(block: np.ndarray) -> float:
    # (||X|| + ||X^2||^(1/2)) / 2
    return 0.5 * (operator_norm(block) + np.sqrt(operator_norm(block @ block)))


def pinch(partition: BlockPartition, scheme: PinchScheme, tol: float | None = None) -> np.ndarray:
    """Entrywise nonnegative real pinch matrix of the partition under the scheme.

    1-based anti-diagonal rule j = n - i + 1; when the center block of an odd
    partition is both diagonal and anti-diagonal the diagonal rule wins.
    """
    n = partition.n_blocks
    P = np.zeros((n, n), dtype=float)
    sid = scheme.scheme_id
    for i in range(n):
        for j in range(n):
            blk = partition.blocks[i][j]
            diagonal = i == j
            anti = j == n - 1 - i and not diagonal
            if sid == "t1":
                entry = operator_norm(blk)
            elif sid == "t2":
                entry = _half_power_entry(blk) if diagonal else operator_norm(blk)
            elif sid == "t3":
                entry = _w_entry(blk, tol) if diagonal else operator_norm(blk)
            elif sid == "a":
                if diagonal or anti:
                    entry = _w_entry(blk, tol)
                else:
                    entry = operator_norm(blk)
            elif sid == "b":
                mirror = partition.blocks[j][i]
                if diagonal:
                    entry = _w_entry(blk, tol)
                elif anti:
                    entry = (_w_entry(blk, tol) + _w_entry(mirror, tol)) / 2.0
                else:
                    entry = (operator_norm(blk) + operator_norm(mirror)) / 2.0
            elif sid == "c":
                if diagonal or anti:
                    entry = _power_mean_entry(blk, scheme.f, scheme.g)
                else:
                    entry = operator_norm(blk)
            else:  # scheme d
                mirror = partition.blocks[j][i]
                if diagonal:
                    entry = _power_mean_entry(blk, scheme.f, scheme.g)
                elif anti:
                    entry = (
                        _power_mean_entry(blk, scheme.f, scheme.g)
                        + _power_mean_entry(mirror, scheme.f, scheme.g)
                    ) / 2.0
                else:
                    entry = (operator_norm(blk) + operator_norm(mirror)) / 2.0
            P[i, j] = entry
    return P


def block_bound(
    partition: BlockPartition, scheme: PinchScheme, tol: float | None = None
) -> BoundRecord:
    """w(assembled matrix) against w (schemes t1, t2, t3, a, c) or r (b, d) of the pinch."""
    full = partition.assemble()
    P = pinch(partition, scheme, tol)
    if scheme.scheme_id in ("b", "d"):
        outer = spectral_radius(P)
    else:
        outer = radius_value(np.asarray(P, dtype=complex), tol)
    return bound_record(
        f"block.{scheme.scheme_id}",
        radius_value(full, tol),
        outer,
        notes=f"scheme={scheme.scheme_id}",
    )


def two_by_two_closed_form(partition: BlockPartition, tol: float | None = None) -> BoundRecord:
    """Closed-form bound for 2 x 2 partitions.

    rhs = (w11 + w22 + sqrt((w11 - w22)^2 + (w12 + w21)^2)) / 2, which equals
    the spectral radius of the symmetrized 2 x 2 pinch; the record notes carry
    the cross-check difference.
    """
    if partition.n_blocks != 2:
        raise NotTwoByTwo(f"expected 2 blocks, got {partition.n_blocks}")
    w11 = _w_entry(partition.blocks[0][0], tol)
    w22 = _w_entry(partition.blocks[1][1], tol)
    w12 = _w_entry(partition.blocks[0][1], tol)
    w21 = _w_entry(partition.blocks[1][0], tol)
    rhs = float((w11 + w22 + np.sqrt((w11 - w22) ** 2 + (w12 + w21) ** 2)) / 2.0)
    off = (w12 + w21) / 2.0
    sym = np.array([[w11, off], [off, w22]])
    cross = float(abs(rhs - spectral_radius(sym)))
    return bound_record(
        "block.2x2",
        radius_value(partition.assemble(), tol),
        rhs,
        notes=f"sym_pinch_radius_diff={cross!r}",
    )
