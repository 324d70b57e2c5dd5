"""Single-operator numerical radius bounds and the supporting scalar/vector inequalities.

Covers the norm sandwich, its power-compression refinement, the
Hermitian-part sandwich for w^2, the transform-based refinement chain, both
readings of the Buzano-derived w^2 bound, the mixed Schwarz inequality, the
weighted f,g product inequality, the two fundamental norm estimates for
positive operators, the spectral radius product estimate, the refined
Cauchy-Schwarz inequality, the Buzano key inequality, and the power-mean /
power-Young / convexity trace inequalities.

The typeset form of the w^2 bound ("as_printed": rhs = (||T|| + w(T^2)) / 2)
is dimensionally inhomogeneous and falsified by T = 2I; it is evaluated
verbatim but flagged through its bound_id so harnesses report violations as
expected.  The "squared_norm" variant (rhs = (||T||^2 + w(T^2)) / 2) is the
default.
"""

from __future__ import annotations

import numpy as np

from .exceptions import (
    InvalidExponent,
    InvalidParameters,
    NotPositive,
    NotUnit,
)
from .linalg import (
    PowerFunction,
    absolute_value,
    aluthge,
    operator_norm,
    positive_power,
    spectral_radius,
)
from .records import BoundRecord, bound_record
from .radius import radius_value
from .validation import as_matrix, as_square, as_vector, check_same_shape, check_unit

__all__ = [
    "buzano_key_check",
    "dragomir",
    "eq11_sandwich",
    "kittaneh2003",
    "kittaneh2005",
    "kittaneh_fg_gap",
    "mccarty_check",
    "mixed_schwarz_gap",
    "norm_sum_estimate",
    "refined_cauchy_schwarz",
    "scalar_lemma_checks",
    "spectral_radius_product_estimate",
    "yamazaki",
]

INTERTWINE_RTOL = 1e-8
PSD_EIG_RTOL = 1e-10


def _require_psd(A: np.ndarray, name: str) -> np.ndarray:
    A = as_square(A)
    residual = np.linalg.norm(A - A.conj().T, 2)
    scale = 1.0 + operator_norm(A)
    if residual > 1e-8 * scale:
        raise NotPositive(f"{name} is not Hermitian (residual {residual:.3e})")
    A = (A + A.conj().T) / 2.0
    lam_min = float(np.linalg.eigvalsh(A)[0])
    if lam_min < -PSD_EIG_RTOL * scale:
        raise NotPositive(f"{name} has negative eigenvalue {lam_min:.3e}")
    return A


def eq11_sandwich(T) -> tuple[BoundRecord, BoundRecord]:
    """Norm sandwich ||T||/2 <= w(T) <= ||T||."""
    T = as_square(T)
    w = radius_value(T)
    norm = operator_norm(T)
    lower = bound_record("eq1.1.lower", norm / 2.0, w)
    upper = bound_record("eq1.1.upper", w, norm)
    return lower, upper


def kittaneh2003(T) -> BoundRecord:
    """w(T) <= (||T|| + ||T^2||^(1/2)) / 2, a refinement of the right sandwich side."""
    T = as_square(T)
    w = radius_value(T)
    rhs = (operator_norm(T) + np.sqrt(operator_norm(T @ T))) / 2.0
    return bound_record("eq1.2", w, rhs)


def kittaneh2005(T) -> tuple[BoundRecord, BoundRecord]:
    """(1/4)||T^H T + T T^H|| <= w(T)^2 <= (1/2)||T^H T + T T^H||."""
    T = as_square(T)
    w2 = radius_value(T) ** 2
    s = operator_norm(T.conj().T @ T + T @ T.conj().T)
    lower = bound_record("eq1.3.lower", s / 4.0, w2)
    upper = bound_record("eq1.3.upper", w2, s / 2.0)
    return lower, upper


def yamazaki(T) -> tuple[BoundRecord, BoundRecord]:
    """w(T) <= (||T|| + w(T~)) / 2 <= (||T|| + ||T^2||^(1/2)) / 2 with T~ the Aluthge-type transform."""
    T = as_square(T)
    w = radius_value(T)
    norm = operator_norm(T)
    mid = (norm + radius_value(aluthge(T))) / 2.0
    outer = (norm + np.sqrt(operator_norm(T @ T))) / 2.0
    first = bound_record("eq1.4.first", w, mid)
    second = bound_record("eq1.4.second", mid, outer)
    return first, second


def dragomir(T, variant: str = "squared_norm") -> BoundRecord:
    """w(T)^2 against (||T||^2 + w(T^2))/2, or the typeset (||T|| + w(T^2))/2.

    variant "as_printed" evaluates the inequality exactly as typeset; it is
    expected to fail for operators with norm above one (T = 2I already
    violates it) and is tagged through its bound_id so sweeps treat the
    violations as expected.
    """
    T = as_square(T)
    if variant not in ("as_printed", "squared_norm"):
        raise InvalidParameters(f"unknown variant {variant!r}")
    w2 = radius_value(T) ** 2
    w_sq = radius_value(T @ T)
    norm = operator_norm(T)
    if variant == "as_printed":
        return bound_record(
            "eq1.5.as_printed",
            w2,
            (norm + w_sq) / 2.0,
            notes="typeset form; violations expected (suspected typo)",
        )
    return bound_record("eq1.5.squared_norm", w2, (norm**2 + w_sq) / 2.0)


def mixed_schwarz_gap(A, x, y, alpha: float) -> BoundRecord:
    """|<Ax, y>|^2 <= <|A|^(2a) x, x> <|A^H|^(2(1-a)) y, y> for a in [0, 1]."""
    A = as_square(A)
    n = A.shape[0]
    x = as_vector(x, n)
    y = as_vector(y, n)
    if not 0.0 <= alpha <= 1.0:
        raise InvalidParameters(f"alpha must lie in [0, 1], got {alpha!r}")
    lhs = abs(np.vdot(y, A @ x)) ** 2
    left = positive_power(absolute_value(A), 2.0 * alpha)
    right = positive_power(absolute_value(A.conj().T), 2.0 * (1.0 - alpha))
    rhs = np.vdot(x, left @ x).real * np.vdot(y, right @ y).real
    return bound_record("eq2.4", lhs, rhs, notes=f"alpha={alpha!r}")


def kittaneh_fg_gap(A, B, x, y, f: PowerFunction, g: PowerFunction) -> BoundRecord:
    """|<ABx, y>| <= r(B) ||f(|A|) x|| ||g(|A^H|) y|| under |A|B = B^H |A|.

    The intertwining hypothesis is checked; when it fails the record is
    returned with preconditions_met = False (informational, not asserted).
    """
    A = as_square(A)
    B = as_square(B)
    check_same_shape(A, B)
    n = A.shape[0]
    x = as_vector(x, n)
    y = as_vector(y, n)
    if abs(f.exponent + g.exponent - 1.0) > 1e-12:
        raise InvalidParameters("power pair must satisfy f.exponent + g.exponent = 1")
    abs_a = absolute_value(A)
    residual = operator_norm(abs_a @ B - B.conj().T @ abs_a)
    met = residual <= INTERTWINE_RTOL * (1.0 + operator_norm(A) * operator_norm(B))
    lhs = abs(np.vdot(y, A @ (B @ x)))
    fx = positive_power(abs_a, f.exponent) @ x
    gy = positive_power(absolute_value(A.conj().T), g.exponent) @ y
    rhs = spectral_radius(B) * np.linalg.norm(fx) * np.linalg.norm(gy)
    return bound_record(
        "lem5", lhs, rhs, preconditions_met=met, notes=f"intertwine_residual={residual!r}"
    )


def norm_sum_estimate(A, B) -> BoundRecord:
    """||A + B|| bounded through norms and the cross term ||A^(1/2) B^(1/2)|| (positive A, B)."""
    A = _require_psd(as_matrix(A), "A")
    B = _require_psd(as_matrix(B), "B")
    check_same_shape(A, B)
    na, nb = operator_norm(A), operator_norm(B)
    cross = operator_norm(positive_power(A, 0.5) @ positive_power(B, 0.5))
    rhs = (na + nb + np.sqrt((na - nb) ** 2 + 4.0 * cross**2)) / 2.0
    return bound_record("fact1", operator_norm(A + B), rhs)


def fact2_check(A, B) -> BoundRecord:
    """||A^(1/2) B^(1/2)|| <= ||A B||^(1/2) for positive A, B."""
    A = _require_psd(as_matrix(A), "A")
    B = _require_psd(as_matrix(B), "B")
    check_same_shape(A, B)
    lhs = operator_norm(positive_power(A, 0.5) @ positive_power(B, 0.5))
    return bound_record("fact2", lhs, np.sqrt(operator_norm(A @ B)))


def spectral_radius_product_estimate(A, B) -> BoundRecord:
    """r(AB) <= (||AB|| + ||BA|| + sqrt((||AB|| - ||BA||)^2 + 4 m(A,B))) / 4."""
    A = as_square(A)
    B = as_square(B)
    check_same_shape(A, B)
    nab = operator_norm(A @ B)
    nba = operator_norm(B @ A)
    m = min(
        operator_norm(A) * operator_norm(B @ A @ B),
        operator_norm(B) * operator_norm(A @ B @ A),
    )
    rhs = (nab + nba + np.sqrt((nab - nba) ** 2 + 4.0 * m)) / 4.0
    return bound_record("fact3", spectral_radius(A @ B), rhs)


def refined_cauchy_schwarz(A, x, y, p: float) -> tuple[BoundRecord, BoundRecord]:
    """Refined Cauchy-Schwarz for positive A and p >= 2.

    refined: |<Ax, y>|^(2p) <= [<A^p x, x> - <|A - <Ax,x>|^p x, x>] * [same in y];
    outer:   that product <= <A^p x, x> <A^p y, y>.

    The centering term <Ax, x> matches the inequality at unit norm, so
    non-unit vectors are normalized and both sides rescaled by
    (||x|| ||y||)^(2p).
    """
    if p < 2:
        raise InvalidExponent(f"refined Cauchy-Schwarz needs p >= 2, got {p!r}")
    A = _require_psd(as_matrix(A), "A")
    n = A.shape[0]
    x = as_vector(x, n)
    y = as_vector(y, n)
    nx = float(np.linalg.norm(x))
    ny = float(np.linalg.norm(y))
    if nx == 0.0 or ny == 0.0:
        zero_refined = bound_record("lem7.refined", 0.0, 0.0)
        return zero_refined, bound_record("lem7.outer", 0.0, 0.0)
    u = x / nx
    v = y / ny
    values, vectors = np.linalg.eigh(A)
    values = np.clip(values, 0.0, None)

    def bracket(vec: np.ndarray) -> tuple[float, float]:
        weights = np.abs(vectors.conj().T @ vec) ** 2
        center = float(weights @ values)
        moment = float(weights @ values**p)
        spread = float(weights @ np.abs(values - center) ** p)
        return moment - spread, moment

    bx, mx = bracket(u)
    by, my = bracket(v)
    scale = (nx * ny) ** (2.0 * p)
    lhs = abs(np.vdot(v, A @ u)) ** (2.0 * p) * scale
    refined = bound_record("lem7.refined", lhs, bx * by * scale, notes=f"p={p!r}")
    outer = bound_record("lem7.outer", bx * by * scale, mx * my * scale, notes=f"p={p!r}")
    return refined, outer


def buzano_key_check(x, y, e) -> BoundRecord:
    """|<x, e><e, y>| <= (|<x, y>| + ||x|| ||y||) / 2 for unit e."""
    x = as_vector(x)
    y = as_vector(y, x.size)
    e = check_unit(as_vector(e, x.size))
    lhs = abs(np.vdot(e, x) * np.vdot(y, e))
    rhs = (abs(np.vdot(y, x)) + np.linalg.norm(x) * np.linalg.norm(y)) / 2.0
    return bound_record("buzano.key", lhs, rhs)


def scalar_lemma_checks(
    a: float, b: float, alpha: float, beta: float, p: float
) -> list[BoundRecord]:
    """Power-mean and power-Young chains as four records.

    alpha, beta is a conjugate pair (> 1, 1/alpha + 1/beta = 1); the
    power-mean weight is taken as 1/alpha so both chains share the pair.
    Requires a, b >= 0 and p >= 1.
    """
    if a < 0 or b < 0:
        raise InvalidParameters("a and b must be nonnegative")
    if p < 1:
        raise InvalidParameters(f"p must be >= 1, got {p!r}")
    if alpha <= 1 or beta <= 1 or abs(1.0 / alpha + 1.0 / beta - 1.0) > 1e-12:
        raise InvalidParameters("alpha, beta must be a conjugate pair greater than 1")
    weight = 1.0 / alpha
    mean = weight * a + (1.0 - weight) * b
    records = [
        bound_record("pmi", a**weight * b ** (1.0 - weight), mean, notes="first"),
        bound_record(
            "pmi",
            mean,
            (weight * a**p + (1.0 - weight) * b**p) ** (1.0 / p),
            notes="second",
        ),
        bound_record("young", a * b, a**alpha / alpha + b**beta / beta, notes="first"),
        bound_record(
            "young",
            a**alpha / alpha + b**beta / beta,
            (a ** (p * alpha) / alpha + b ** (p * beta) / beta) ** (1.0 / p),
            notes="second",
        ),
    ]
    return records


def mccarty_check(A, x, p: float) -> BoundRecord:
    """<Ax, x>^p <= <A^p x, x> for positive A, unit x, p >= 1."""
    if p < 1:
        raise InvalidParameters(f"p must be >= 1, got {p!r}")
    A = _require_psd(as_matrix(A), "A")
    x = as_vector(x, A.shape[0])
    norm = float(np.linalg.norm(x))
    if abs(norm - 1.0) > 1e-12:
        raise NotUnit(f"x must be a unit vector, norm {norm!r}")
    lhs = max(np.vdot(x, A @ x).real, 0.0) ** p
    rhs = np.vdot(x, positive_power(A, p) @ x).real
    return bound_record("mccarty", lhs, rhs, notes=f"p={p!r}")
