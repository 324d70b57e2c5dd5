"""Dense complex linear algebra kernels.

Hermitian eigendecomposition, singular values, real powers of positive
matrices, polar decomposition with a deterministic completion rule for
singular inputs, spectral radius, and the Aluthge-type transform
|T|^{1/2} U |T|^{1/2}.  Spectral factorizations are delegated to LAPACK
through numpy.linalg; every public operation keeps its own contract
(preconditions, error vocabulary, determinism for fixed input).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import (
    InvalidExponent,
    NegativeEigenvalue,
    NoConvergence,
    NotHermitian,
)
from .validation import as_matrix, as_square

__all__ = [
    "HermitianEigen",
    "PolarParts",
    "PowerFunction",
    "absolute_value",
    "aluthge",
    "hermitian_eigen",
    "matrix_power_psd",
    "min_gauge",
    "operator_norm",
    "polar",
    "positive_power",
    "spectral_radius",
]

# Inputs whose relative asymmetry stays below this are symmetrized silently;
# anything worse is rejected as NotHermitian.
HERMITICITY_RTOL = 1e-10

# Eigenvalues of a nominally PSD matrix below -NEGATIVE_EIG_RTOL*(1+norm) are
# an error; small negative values above it are clamped to zero.
NEGATIVE_EIG_RTOL = 1e-8


@dataclass(frozen=True)
class PowerFunction:
    """The map t -> t**exponent on [0, inf), with the convention 0**0 = 1.

    Pairs (f, g) with f.exponent + g.exponent == 1 realize the hypothesis
    f(t) * g(t) = t used by the product and block bounds.
    """

    exponent: float

    def __post_init__(self):
        if not np.isfinite(self.exponent) or self.exponent < 0:
            raise InvalidExponent(f"power exponent must be >= 0, got {self.exponent!r}")

    def __call__(self, values: np.ndarray) -> np.ndarray:
        return np.asarray(values, dtype=float) ** self.exponent

    def scaled(self, factor: float) -> "PowerFunction":
        """The power t -> t**(factor * exponent), e.g. f**2 or f**(alpha*p)."""
        return PowerFunction(self.exponent * factor)


@dataclass(frozen=True)
class HermitianEigen:
    """Eigenvalues (ascending) and orthonormal eigenvectors of a Hermitian matrix."""

    values: np.ndarray
    vectors: np.ndarray


@dataclass(frozen=True)
class PolarParts:
    """Unitary factor and positive factor with T = unitary @ modulus."""

    unitary: np.ndarray
    modulus: np.ndarray


def _hermitian_part(H: np.ndarray, context: str) -> np.ndarray:
    """Symmetrize within tolerance; reject genuinely non-Hermitian input."""
    scale = 1.0 + operator_norm(H)
    asym = H - H.conj().T
    if np.linalg.norm(asym, 2) > HERMITICITY_RTOL * scale:
        raise NotHermitian(
            f"{context}: asymmetry {np.linalg.norm(asym, 2):.3e} exceeds "
            f"{HERMITICITY_RTOL:.0e} * (1 + norm)"
        )
    return (H + H.conj().T) / 2.0


def hermitian_eigen(H) -> HermitianEigen:
    """Full eigendecomposition of a Hermitian matrix, eigenvalues ascending.

    The input may be asymmetric up to 1e-10 relative; it is symmetrized as
    (H + H^H)/2 before factorization.  Deterministic for fixed input.
    """
    H = as_square(H)
    Hs = _hermitian_part(H, "hermitian_eigen")
    try:
        values, vectors = np.linalg.eigh(Hs)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK failure
        raise NoConvergence(f"hermitian eigensolver failed: {exc}") from exc
    return HermitianEigen(values=values, vectors=vectors)


def operator_norm(T) -> float:
    """Largest singular value of T (any rectangular shape)."""
    T = as_matrix(T)
    try:
        return float(np.linalg.svd(T, compute_uv=False)[0])
    except np.linalg.LinAlgError as exc:  # pragma: no cover
        raise NoConvergence(f"singular value computation failed: {exc}") from exc


def min_gauge(T) -> float:
    """Smallest singular value, inf over unit x of ||Tx|| for square T."""
    T = as_square(T)
    try:
        return float(np.linalg.svd(T, compute_uv=False)[-1])
    except np.linalg.LinAlgError as exc:  # pragma: no cover
        raise NoConvergence(f"singular value computation failed: {exc}") from exc


def absolute_value(T) -> np.ndarray:
    """The positive square root (T^H T)^(1/2), a PSD Hermitian matrix."""
    T = as_square(T)
    gram = T.conj().T @ T
    gram = (gram + gram.conj().T) / 2.0
    try:
        values, vectors = np.linalg.eigh(gram)
    except np.linalg.LinAlgError as exc:  # pragma: no cover
        raise NoConvergence(f"absolute value eigensolver failed: {exc}") from exc
    roots = np.sqrt(np.clip(values, 0.0, None))
    out = (vectors * roots) @ vectors.conj().T
    return (out + out.conj().T) / 2.0


def positive_power(P, exponent: float | PowerFunction) -> np.ndarray:
    """Real power of a PSD Hermitian matrix via functional calculus.

    Eigenvalues in [-1e-10*(1+norm), 0) are clamped to zero; anything below
    -1e-8*(1+norm) raises NegativeEigenvalue.  Uses the convention 0**0 = 1,
    so exponent 0 always yields the identity.
    """
    if isinstance(exponent, PowerFunction):
        exponent = exponent.exponent
    if not np.isfinite(exponent) or exponent < 0:
        raise InvalidExponent(f"power exponent must be >= 0, got {exponent!r}")
    P = as_square(P)
    Ps = _hermitian_part(P, "positive_power")
    values, vectors = np.linalg.eigh(Ps)
    scale = 1.0 + float(np.max(np.abs(values), initial=0.0))
    if values[0] < -NEGATIVE_EIG_RTOL * scale:
        raise NegativeEigenvalue(
            f"least eigenvalue {values[0]:.3e} below -{NEGATIVE_EIG_RTOL:.0e} * (1 + norm)"
        )
    powered = np.clip(values, 0.0, None) ** exponent
    out = (vectors * powered) @ vectors.conj().T
    return (out + out.conj().T) / 2.0


def matrix_power_psd(P, exponent: float) -> np.ndarray:
    """Alias of positive_power with a plain float exponent."""
    return positive_power(P, exponent)


def _canonical_phase(columns: np.ndarray) -> np.ndarray:
    """Rotate each column so its largest-modulus entry is real positive."""
    out = columns.copy()
    for j in range(out.shape[1]):
        k = int(np.argmax(np.abs(out[:, j])))
        pivot = out[k, j]
        if abs(pivot) > 0:
            out[:, j] *= pivot.conjugate() / abs(pivot)
    return out


def polar(T) -> PolarParts:
    """Polar decomposition T = U |T| with U unitary, deterministic for singular T.

    The unitary acts as T |T|^+ on the range of |T|.  For singular T it is
    completed by sending an orthonormal basis of ker|T| (ordered by ascending
    singular value, phases canonicalized) to the orthonormal basis of
    ran(T)^perp obtained by Gram-Schmidt over the standard basis in index
    order.
    """
    T = as_square(T)
    n = T.shape[0]
    try:
        W, sigma, Vh = np.linalg.svd(T)
    except np.linalg.LinAlgError as exc:  # pragma: no cover
        raise NoConvergence(f"polar decomposition failed: {exc}") from exc
    # ascending singular values to match the |T| eigendecomposition convention
    order = np.arange(n - 1, -1, -1)
    sigma = sigma[order]
    W = W[:, order]
    V = Vh.conj().T[:, order]
    modulus = (V * sigma) @ V.conj().T
    modulus = (modulus + modulus.conj().T) / 2.0

    cutoff = max(sigma[-1] if n else 0.0, 1.0) * n * np.finfo(float).eps * 16
    kept = sigma > cutoff
    U = np.zeros((n, n), dtype=np.complex128)
    range_basis = W[:, kept]
    U += range_basis @ V[:, kept].conj().T

    n_missing = n - int(kept.sum())
    if n_missing:
        kernel = _canonical_phase(V[:, ~kept])
        targets: list[np.ndarray] = []
        for j in range(n):
            if len(targets) == n_missing:
                break
            cand = np.zeros(n, dtype=np.complex128)
            cand[j] = 1.0
            for _ in range(2):  # Gram-Schmidt twice for orthogonality
                cand -= range_basis @ (range_basis.conj().T @ cand)
                for t in targets:
                    cand -= t * np.vdot(t, cand)
            norm = np.linalg.norm(cand)
            if norm > 1e-3:  # e_j carries a usable component outside the span
                targets.append(cand / norm)
        completion = np.column_stack(targets)
        U += completion @ kernel.conj().T
    return PolarParts(unitary=U, modulus=modulus)


def spectral_radius(T) -> float:
    """Maximum eigenvalue modulus of a square matrix."""
    T = as_square(T)
    try:
        eigs = np.linalg.eigvals(T)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(f"eigenvalue iteration failed: {exc}") from exc
    return float(np.max(np.abs(eigs)))


def aluthge(T) -> np.ndarray:
    """The transform |T|^(1/2) U |T|^(1/2) built from the polar parts of T."""
    parts = polar(T)
    root = positive_power(parts.modulus, 0.5)
    return root @ parts.unitary @ root
