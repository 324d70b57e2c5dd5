"""Product-operator numerical radius bounds under intertwining hypotheses.

The main chain bounds w(AB) for pairs with |A|B = B^H |A| through weighted
powers of |A| and |A^H|; generalizations add conjugate-exponent weights, the
commuting-square variant, the positive-contraction bound, and the two-sided
block positivity criterion behind them.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .exceptions import (
    InvalidExponent,
    InvalidParameters,
    NotContraction,
    NotPositive,
    PreconditionFailed,
)
from .linalg import (
    PowerFunction,
    absolute_value,
    operator_norm,
    positive_power,
    spectral_radius,
)
from .records import BoundRecord, bound_record
from .radius import radius_value
from .scalar_bounds import _require_psd
from .validation import as_matrix, as_square, as_vector, check_same_shape

__all__ = [
    "HolderPair",
    "ProductBoundInput",
    "block_positivity_check",
    "check_intertwining",
    "cor1_alpha_bounds",
    "cor2_bound",
    "cor5_bound",
    "thm1_bounds",
    "thm2_bounds",
    "thm3_bound",
    "thm4_bound",
]

INTERTWINE_RTOL = 1e-8
POSITIVITY_ATOL = 1e-10
SCHWARZ_ATOL = 1e-10


@dataclass(frozen=True)
class HolderPair:
    """Conjugate exponents alpha >= beta > 1 with 1/alpha + 1/beta = 1."""

    alpha: float
    beta: float

    def __post_init__(self):
        if self.alpha <= 1 or self.beta <= 1:
            raise InvalidParameters("conjugate exponents must exceed 1")
        if abs(1.0 / self.alpha + 1.0 / self.beta - 1.0) > 1e-12:
            raise InvalidParameters("1/alpha + 1/beta must equal 1")
        if self.alpha < self.beta:
            raise InvalidParameters("require alpha >= beta")

    @property
    def gamma(self) -> float:
        return max(1.0 / self.alpha, 1.0 / self.beta)


@dataclass(frozen=True)
class ProductBoundInput:
    """Operator pair plus the power pair (and optional Holder data) for the product bounds."""

    A: np.ndarray
    B: np.ndarray
    f: PowerFunction
    g: PowerFunction
    p: float = 1.0
    holder: HolderPair | None = field(default=None)

    def __post_init__(self):
        object.__setattr__(self, "A", as_square(self.A))
        object.__setattr__(self, "B", as_square(self.B))
        check_same_shape(self.A, self.B)
        if abs(self.f.exponent + self.g.exponent - 1.0) > 1e-12:
            raise InvalidParameters("power pair must satisfy f.exponent + g.exponent = 1")
        if self.p < 1:
            raise InvalidParameters(f"p must be >= 1, got {self.p!r}")
        if self.holder is not None and self.holder.beta * self.p < 2:
            raise InvalidExponent(
                f"need beta * p >= 2, got {self.holder.beta!r} * {self.p!r}"
            )


def check_intertwining(A, B) -> bool:
    """True iff || |A|B - B^H |A| || <= 1e-8 (1 + ||A|| ||B||)."""
    A = as_square(A)
    B = as_square(B)
    check_same_shape(A, B)
    abs_a = absolute_value(A)
    residual = operator_norm(abs_a @ B - B.conj().T @ abs_a)
    return residual <= INTERTWINE_RTOL * (1.0 + operator_norm(A) * operator_norm(B))


def _chain_pieces(A: np.ndarray, f: PowerFunction, g: PowerFunction):
    abs_a = absolute_value(A)
    abs_ah = absolute_value(A.conj().T)
    X = positive_power(abs_a, 2.0 * f.exponent)
    Y = positive_power(abs_ah, 2.0 * g.exponent)
    cross = operator_norm(
        positive_power(abs_a, f.exponent) @ positive_power(abs_ah, g.exponent)
    )
    return X, Y, cross


def thm1_bounds(inp: ProductBoundInput) -> tuple[BoundRecord, BoundRecord]:
    """Two-level bound on w(AB) through f^2(|A|) + g^2(|A^H|).

    first:  w(AB) <= (1/2) r(B) w(f^2(|A|) + g^2(|A^H|));
    second: that rhs <= (1/8)(||B|| + ||B^2||^(1/2)) {||X|| + ||Y|| +
            sqrt((||X|| - ||Y||)^2 + 4 ||f(|A|) g(|A^H|)||^2)}.

    Records are flagged preconditions_met = False when the intertwining
    hypothesis fails (they are still evaluated).
    """
    A, B = inp.A, inp.B
    met = check_intertwining(A, B)
    X, Y, cross = _chain_pieces(A, inp.f, inp.g)
    first_rhs = 0.5 * spectral_radius(B) * radius_value(X + Y)
    first = bound_record("eq2.1.first", radius_value(A @ B), first_rhs, met)
    nx, ny = operator_norm(X), operator_norm(Y)
    brace = nx + ny + np.sqrt((nx - ny) ** 2 + 4.0 * cross**2)
    b_term = operator_norm(B) + np.sqrt(operator_norm(B @ B))
    second = bound_record("eq2.1.second", first_rhs, b_term * brace / 8.0, met)
    return first, second


def cor1_alpha_bounds(A, B, alpha: float) -> tuple[BoundRecord, BoundRecord]:
    """The two-level bound specialized to f = t^alpha, g = t^(1-alpha).

    The second level's cross term is pushed through the positive-product
    norm estimate (||X^(1/2) Y^(1/2)||^2 <= ||X Y||), so at alpha = 1/2 the
    bound collapses exactly to the closed-form product bound of cor2_bound.
    """
    if not 0.0 <= alpha <= 1.0:
        raise InvalidParameters(f"alpha must lie in [0, 1], got {alpha!r}")
    A = as_square(A)
    B = as_square(B)
    check_same_shape(A, B)
    met = check_intertwining(A, B)
    f = PowerFunction(alpha)
    g = PowerFunction(1.0 - alpha)
    X, Y, _ = _chain_pieces(A, f, g)
    first_rhs = 0.5 * spectral_radius(B) * radius_value(X + Y)
    note = f"alpha={alpha!r}"
    first = bound_record("eq3.2", radius_value(A @ B), first_rhs, met, note)
    nx, ny = operator_norm(X), operator_norm(Y)
    brace = nx + ny + np.sqrt((nx - ny) ** 2 + 4.0 * operator_norm(X @ Y))
    b_term = operator_norm(B) + np.sqrt(operator_norm(B @ B))
    second = bound_record("eq3.2", first_rhs, b_term * brace / 8.0, met, note)
    return first, second


def cor2_bound(A, B) -> BoundRecord:
    """w(AB) <= (1/4)(||B|| + ||B^2||^(1/2))(||A|| + ||A^2||^(1/2))."""
    A = as_square(A)
    B = as_square(B)
    check_same_shape(A, B)
    met = check_intertwining(A, B)
    rhs = (
        (operator_norm(B) + np.sqrt(operator_norm(B @ B)))
        * (operator_norm(A) + np.sqrt(operator_norm(A @ A)))
        / 4.0
    )
    return bound_record("eq3.3", radius_value(A @ B), rhs, met)


def _phi(nx: float, ny: float, cross_norm: float) -> float:
    # cross term enters without a square, as in the weighted-bound statement
    return float(np.sqrt((nx - ny) ** 2 + 4.0 * cross_norm))


def _weighted_pieces(A: np.ndarray, f: PowerFunction, g: PowerFunction, holder: HolderPair, p: float):
    abs_a = absolute_value(A)
    abs_ah = absolute_value(A.conj().T)
    Xp = positive_power(abs_a, f.exponent * holder.alpha * p)
    Yp = positive_power(abs_ah, g.exponent * holder.beta * p)
    return Xp, Yp


def thm2_bounds(inp: ProductBoundInput) -> tuple[BoundRecord, BoundRecord, BoundRecord]:
    """Weighted (Holder) generalization of the product bound.

    first:  w(AB)^p <= r(B)^p w((1/a) f^(ap)(|A|) + (1/b) g^(bp)(|A^H|));
    second: that rhs <= r(B)^p || ... ||;
    third:  w(AB)^p <= (gamma / 2^(p+1)) (||B|| + ||B^2||^(1/2))^p
            {||Xp|| + ||Yp|| + sqrt((||Xp|| - ||Yp||)^2 + 4 ||Xp Yp||)}.
    """
    if inp.holder is None:
        raise InvalidParameters("thm2_bounds requires a HolderPair")
    A, B, p, holder = inp.A, inp.B, inp.p, inp.holder
    met = check_intertwining(A, B)
    Xp, Yp = _weighted_pieces(A, inp.f, inp.g, holder, p)
    S = Xp / holder.alpha + Yp / holder.beta
    w_ab_p = radius_value(A @ B) ** p
    r_b_p = spectral_radius(B) ** p
    first_rhs = r_b_p * radius_value(S)
    first = bound_record("eq3.4.first", w_ab_p, first_rhs, met)
    second = bound_record("eq3.4.second", first_rhs, r_b_p * operator_norm(S), met)
    nx, ny = operator_norm(Xp), operator_norm(Yp)
    brace = nx + ny + _phi(nx, ny, operator_norm(Xp @ Yp))
    b_term = (operator_norm(B) + np.sqrt(operator_norm(B @ B))) ** p
    third_rhs = holder.gamma / 2.0 ** (p + 1) * b_term * brace
    third = bound_record("eq3.5", w_ab_p, third_rhs, met)
    return first, second, third


def thm3_bound(A, B, f: PowerFunction, g: PowerFunction, p: float, holder: HolderPair) -> BoundRecord:
    """Commuting-pair bound on w(AB)^(2p); the weighted brace is evaluated on A^2.

    Requires AB = BA and |A^2| B^2 = (B^2)^H |A^2| (each within
    1e-8 (1 + product of norms)); a failed hypothesis raises
    PreconditionFailed naming it.
    """
    A = as_square(A)
    B = as_square(B)
    check_same_shape(A, B)
    if abs(f.exponent + g.exponent - 1.0) > 1e-12:
        raise InvalidParameters("power pair must satisfy f.exponent + g.exponent = 1")
    if holder.beta * p < 2:
        raise InvalidExponent(f"need beta * p >= 2, got {holder.beta!r} * {p!r}")
    scale = 1.0 + operator_norm(A) * operator_norm(B)
    if operator_norm(A @ B - B @ A) > INTERTWINE_RTOL * scale:
        raise PreconditionFailed("commutation AB = BA fails")
    A2 = A @ A
    B2 = B @ B
    abs_a2 = absolute_value(A2)
    scale2 = 1.0 + operator_norm(A2) * operator_norm(B2)
    if operator_norm(abs_a2 @ B2 - B2.conj().T @ abs_a2) > INTERTWINE_RTOL * scale2:
        raise PreconditionFailed("intertwining |A^2| B^2 = (B^2)^H |A^2| fails")
    Xp = positive_power(abs_a2, f.exponent * holder.alpha * p)
    Yp = positive_power(absolute_value(A2.conj().T), g.exponent * holder.beta * p)
    nx, ny = operator_norm(Xp), operator_norm(Yp)
    brace = nx + ny + _phi(nx, ny, operator_norm(Xp @ Yp))
    b_term = (operator_norm(B2) + np.sqrt(operator_norm(B2 @ B2))) ** p
    nab = operator_norm(A @ B)
    rhs = 0.5 * nab ** (2.0 * p) + holder.gamma / 2.0 ** (p + 2) * b_term * brace
    return bound_record("eq3.6", radius_value(A @ B) ** (2.0 * p), rhs)


def _deviation_bracket(M: np.ndarray, center: float, p: float) -> float:
    """||M^p|| - lambda_min(|M - center I|^p) from the eigenvalues of PSD M."""
    values = np.clip(np.linalg.eigvalsh((M + M.conj().T) / 2.0), 0.0, None)
    return float(np.max(values**p) - np.min(np.abs(values - center) ** p))


def thm4_bound(A, B, p: float) -> BoundRecord:
    """w(AB)^(2p) bounded by deviation brackets of positive A, B with AB a contraction."""
    if p < 2:
        raise InvalidExponent(f"need p >= 2, got {p!r}")
    A = _require_psd(as_matrix(A), "A")
    B = _require_psd(as_matrix(B), "B")
    check_same_shape(A, B)
    nab = operator_norm(A @ B)
    if nab > 1.0 + 1e-10:
        raise NotContraction(f"||AB|| = {nab!r} exceeds 1")
    rhs = _deviation_bracket(A, operator_norm(A), p) * _deviation_bracket(
        B, operator_norm(B), p
    )
    return bound_record("thm4", radius_value(A @ B) ** (2.0 * p), rhs)


def block_positivity_check(A, B, C, samples: int = 1000, seed: int = 0) -> tuple[bool, bool]:
    """Two-sided positivity criterion for the block matrix [[A, C^H], [C, B]].

    Returns (positive, schwarz_all_samples): positivity of the assembled
    block (least eigenvalue >= -1e-10) and whether all seeded sample pairs
    satisfy |<Cx, y>|^2 <= <Ax, x> <By, y> + 1e-10.  The criterion says the
    two agree: positive forces every sample to pass, and any sampled
    violation forces non-positivity.
    """
    A = _require_psd(as_matrix(A), "A")
    B = _require_psd(as_matrix(B), "B")
    C = as_matrix(C)
    n = A.shape[0]
    m = B.shape[0]
    if C.shape != (m, n):
        raise InvalidParameters(
            f"C must have shape {(m, n)} for blocks A {A.shape}, B {B.shape}; got {C.shape}"
        )
    block = np.block([[A, C.conj().T], [C, B]])
    lam_min = float(np.linalg.eigvalsh((block + block.conj().T) / 2.0)[0])
    positive = lam_min >= -POSITIVITY_ATOL

    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))
    xs = rng.normal(size=(samples, n)) + 1j * rng.normal(size=(samples, n))
    ys = rng.normal(size=(samples, m)) + 1j * rng.normal(size=(samples, m))
    xs /= np.linalg.norm(xs, axis=1)[:, None]
    ys /= np.linalg.norm(ys, axis=1)[:, None]
    lhs = np.abs(np.einsum("kj,ji,ki->k", ys.conj(), C, xs)) ** 2
    rhs = np.einsum("ki,ij,kj->k", xs.conj(), A, xs).real * np.einsum(
        "ki,ij,kj->k", ys.conj(), B, ys
    ).real
    schwarz_all = bool(np.all(lhs <= rhs + SCHWARZ_ATOL))
    return positive, schwarz_all


def cor5_bound(T, p: float) -> BoundRecord:
    """w(T)^(2p) against the deviation brackets of |T| and |T^H| centered at ||T||.

    Evaluated through the positive block [[|T|, T^H], [T, |T^H|]], i.e. with
    A = |T| and B = |T^H|.  The literal typeset right side (matrix powers of
    T itself) is computed for comparison when p is an integer and logged in
    the record notes, never asserted.
    """
    if p < 2:
        raise InvalidExponent(f"need p >= 2, got {p!r}")
    T = as_square(T)
    norm = operator_norm(T)
    rhs = _deviation_bracket(absolute_value(T), norm, p) * _deviation_bracket(
        absolute_value(T.conj().T), norm, p
    )
    notes = ""
    if float(p).is_integer():
        k = int(p)
        literal = _literal_bracket(T, norm, k) * _literal_bracket(T.conj().T, norm, k)
        notes = f"literal_printed_rhs={literal!r}"
    return bound_record("cor5", radius_value(T) ** (2.0 * p), rhs, notes=notes)


def _literal_bracket(T: np.ndarray, center: float, k: int) -> float:
    """||T^k|| - lambda_min(|T - center I|^k) exactly as typeset (logged only)."""
    n = T.shape[0]
    shifted = T - center * np.eye(n)
    modulus_pow = positive_power(absolute_value(shifted), float(k))
    lam_min = float(np.linalg.eigvalsh(modulus_pow)[0])
    return float(operator_norm(np.linalg.matrix_power(T, k)) - lam_min)
