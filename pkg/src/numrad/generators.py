"""Structured random matrix generators for the verification harness.

All randomness flows through PCG64 streams keyed by explicit integer seeds
(cross-platform stable), with normal variates produced by Box-Muller from the
uniform stream.  Every generator is a deterministic function of
(kind, dim/block_sizes, seed, scale); pair generators realize the operator
hypotheses of the product bounds by construction and verify them before
returning.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .block_bounds import BlockPartition
from .exceptions import InvalidParameters, ResamplingExhausted
from .linalg import absolute_value, operator_norm
from .product_bounds import check_intertwining

__all__ = [
    "GeneratorSpec",
    "KINDS",
    "PAIR_KINDS",
    "SINGLE_KINDS",
    "box_muller",
    "complex_normal",
    "derive_seed",
    "generate",
    "make_rng",
    "sample_commuting_pair",
    "sample_contraction_pair",
    "sample_ginibre",
    "sample_hermitian",
    "sample_intertwined_pair",
    "sample_nilpotent_shift",
    "sample_normal",
    "sample_partition",
    "sample_positive",
    "sample_unitary",
]

SINGLE_KINDS = ("ginibre", "hermitian", "positive", "unitary", "normal", "nilpotent_shift")
PAIR_KINDS = ("commuting_pair", "intertwined_pair", "contraction_pair")
KINDS = SINGLE_KINDS + PAIR_KINDS + ("block_partition",)

RESAMPLE_CAP = 100
HYPOTHESIS_ATOL = 1e-10


@dataclass(frozen=True)
class GeneratorSpec:
    """Deterministic recipe: (kind, dim or block_sizes, seed, scale)."""

    kind: str
    dim: int = 0
    seed: int = 0
    scale: float = 1.0
    block_sizes: tuple[int, ...] | None = field(default=None)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidParameters(f"unknown generator kind {self.kind!r}")
        if self.scale <= 0:
            raise InvalidParameters(f"scale must be positive, got {self.scale!r}")
        if self.kind == "block_partition":
            if not self.block_sizes or any(int(k) < 1 for k in self.block_sizes):
                raise InvalidParameters("block_partition requires positive block_sizes")
            object.__setattr__(self, "block_sizes", tuple(int(k) for k in self.block_sizes))
        elif self.dim < 1:
            raise InvalidParameters(f"dim must be >= 1, got {self.dim!r}")

    def describe(self) -> dict:
        out = {"kind": self.kind, "seed": self.seed, "scale": self.scale}
        if self.kind == "block_partition":
            out["block_sizes"] = list(self.block_sizes)
        else:
            out["dim"] = self.dim
        return out


def make_rng(seed) -> np.random.Generator:
    """PCG64 generator from an integer seed or tuple of integers."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))


def derive_seed(*parts: int) -> int:
    """Mix integer parts into one 64-bit stream seed (stable across platforms)."""
    state = np.random.SeedSequence(tuple(int(p) for p in parts)).generate_state(1, np.uint64)
    return int(state[0])


def box_muller(rng: np.random.Generator, shape) -> np.ndarray:
    """Standard real normal variates from the uniform stream."""
    u1 = 1.0 - rng.random(shape)  # in (0, 1], keeps the log finite
    u2 = rng.random(shape)
    return np.sqrt(-2.0 * np.log(u1)) * np.cos(2.0 * np.pi * u2)


def complex_normal(rng: np.random.Generator, shape) -> np.ndarray:
    """Standard complex normal (E|z|^2 = 1) via Box-Muller pairs."""
    re = box_muller(rng, shape)
    im = box_muller(rng, shape)
    return (re + 1j * im) / np.sqrt(2.0)


def sample_ginibre(rng: np.random.Generator, n: int, scale: float = 1.0) -> np.ndarray:
    return scale * complex_normal(rng, (n, n))


def sample_hermitian(rng: np.random.Generator, n: int, scale: float = 1.0) -> np.ndarray:
    G = complex_normal(rng, (n, n))
    return scale * (G + G.conj().T) / 2.0


def sample_positive(rng: np.random.Generator, n: int, scale: float = 1.0) -> np.ndarray:
    G = complex_normal(rng, (n, n))
    P = G.conj().T @ G / n
    return scale * (P + P.conj().T) / 2.0


def sample_unitary(rng: np.random.Generator, n: int, scale: float = 1.0) -> np.ndarray:
    G = complex_normal(rng, (n, n))
    Q, R = np.linalg.qr(G)
    phases = np.diag(R).copy()
    phases = np.where(np.abs(phases) > 0, phases / np.abs(phases), 1.0)
    return scale * (Q * phases)


def sample_normal(rng: np.random.Generator, n: int, scale: float = 1.0) -> np.ndarray:
    U = sample_unitary(rng, n)
    eigs = scale * complex_normal(rng, (n,))
    return (U * eigs) @ U.conj().T


def sample_nilpotent_shift(n: int, scale: float = 1.0) -> np.ndarray:
    return np.diag(np.full(n - 1, scale + 0j), 1) if n > 1 else np.zeros((1, 1), complex)


def _random_poly_of(rng: np.random.Generator, base: np.ndarray) -> np.ndarray:
    """Random real cubic in base/||base||, kept away from multiples of the identity."""
    coeffs = box_muller(rng, 4)
    if np.max(np.abs(coeffs[1:])) < 0.1:
        coeffs[1] += 0.5
    n = base.shape[0]
    scaled = base / max(operator_norm(base), 1e-300)
    out = coeffs[0] * np.eye(n, dtype=complex)
    power = np.eye(n, dtype=complex)
    for c in coeffs[1:]:
        power = power @ scaled
        out = out + c * power
    return out


def sample_intertwined_pair(
    rng: np.random.Generator, n: int, scale: float = 1.0
) -> tuple[np.ndarray, np.ndarray]:
    """A random, B a real polynomial in |A|, so |A|B = B^H |A| holds exactly."""
    for _ in range(RESAMPLE_CAP):
        A = sample_ginibre(rng, n, scale)
        B = _random_poly_of(rng, absolute_value(A))
        if check_intertwining(A, B):
            return A, B
    raise ResamplingExhausted("intertwined_pair: hypothesis unmet after 100 draws")


def sample_commuting_pair(
    rng: np.random.Generator, n: int, scale: float = 1.0
) -> tuple[np.ndarray, np.ndarray]:
    """Hermitian A, B a real polynomial in A; both product hypotheses are verified.

    A is drawn Hermitian because for generic non-normal A no real polynomial
    B = q(A) satisfies the second hypothesis |A^2| B^2 = (B^2)^H |A^2|, and
    the resampling filter would always exhaust.
    """
    for _ in range(RESAMPLE_CAP):
        A = sample_hermitian(rng, n, scale)
        B = _random_poly_of(rng, A)
        commute = operator_norm(A @ B - B @ A)
        if commute > HYPOTHESIS_ATOL * (1.0 + operator_norm(A) * operator_norm(B)):
            continue
        A2, B2 = A @ A, B @ B
        abs_a2 = absolute_value(A2)
        second = operator_norm(abs_a2 @ B2 - B2.conj().T @ abs_a2)
        if second <= HYPOTHESIS_ATOL * (1.0 + operator_norm(A2) * operator_norm(B2)):
            return A, B
    raise ResamplingExhausted("commuting_pair: hypotheses unmet after 100 draws")


def sample_contraction_pair(
    rng: np.random.Generator, n: int, scale: float = 1.0
) -> tuple[np.ndarray, np.ndarray]:
    """Positive A, B jointly rescaled so ||AB|| = min(0.9 * scale, 1)."""
    target = min(0.9 * scale, 1.0)
    for _ in range(RESAMPLE_CAP):
        A = sample_positive(rng, n)
        B = sample_positive(rng, n)
        norm_ab = operator_norm(A @ B)
        if norm_ab > 0:
            s = np.sqrt(target / norm_ab)
            return s * A, s * B
    raise ResamplingExhausted("contraction_pair: degenerate draws exhausted the cap")


def sample_partition(
    rng: np.random.Generator, block_sizes: tuple[int, ...], scale: float = 1.0
) -> BlockPartition:
    blocks = tuple(
        tuple(scale * complex_normal(rng, (ki, kj)) for kj in block_sizes)
        for ki in block_sizes
    )
    return BlockPartition(block_sizes=tuple(block_sizes), blocks=blocks)


def generate(spec: GeneratorSpec):
    """Realize a GeneratorSpec; deterministic per (kind, dim, seed, scale)."""
    rng = make_rng((spec.seed,))
    kind = spec.kind
    if kind == "ginibre":
        return sample_ginibre(rng, spec.dim, spec.scale)
    if kind == "hermitian":
        return sample_hermitian(rng, spec.dim, spec.scale)
    if kind == "positive":
        return sample_positive(rng, spec.dim, spec.scale)
    if kind == "unitary":
        return sample_unitary(rng, spec.dim, spec.scale)
    if kind == "normal":
        return sample_normal(rng, spec.dim, spec.scale)
    if kind == "nilpotent_shift":
        return sample_nilpotent_shift(spec.dim, spec.scale)
    if kind == "intertwined_pair":
        return sample_intertwined_pair(rng, spec.dim, spec.scale)
    if kind == "commuting_pair":
        return sample_commuting_pair(rng, spec.dim, spec.scale)
    if kind == "contraction_pair":
        return sample_contraction_pair(rng, spec.dim, spec.scale)
    if kind == "block_partition":
        return sample_partition(rng, spec.block_sizes, spec.scale)
    raise InvalidParameters(f"unknown generator kind {kind!r}")  # pragma: no cover
