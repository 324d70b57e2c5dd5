"""Single-operator bounds and the scalar/vector lemma inequalities."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from numrad import (
    PowerFunction,
    buzano_key_check,
    dragomir,
    eq11_sandwich,
    fact2_check,
    kittaneh2003,
    kittaneh2005,
    kittaneh_fg_gap,
    mccarty_check,
    mixed_schwarz_gap,
    norm_sum_estimate,
    operator_norm,
    radius_value,
    refined_cauchy_schwarz,
    scalar_lemma_checks,
    spectral_radius_product_estimate,
    yamazaki,
)
from numrad.exceptions import (
    InvalidExponent,
    InvalidParameters,
    NotPositive,
    NotUnit,
)
from numrad.generators import make_rng, sample_ginibre, sample_intertwined_pair, sample_positive

SHIFT = np.array([[0, 1], [0, 0]], dtype=complex)


def _unit(rng, n):
    v = rng.normal(size=n) + 1j * rng.normal(size=n)
    return v / np.linalg.norm(v)


class TestSandwich:
    def test_shift_lower_tight(self):
        lower, upper = eq11_sandwich(SHIFT)
        assert lower.lhs == pytest.approx(0.5, abs=1e-9)
        assert lower.rhs == pytest.approx(0.5, abs=1e-9)
        assert lower.holds() and upper.holds()

    def test_identity_upper_tight(self):
        lower, upper = eq11_sandwich(np.eye(3, dtype=complex))
        assert upper.lhs == pytest.approx(1.0, abs=1e-9)
        assert upper.rhs == pytest.approx(1.0)

    def test_random_sweep(self):
        rng = make_rng(40)
        for k in range(500):
            T = sample_ginibre(rng, 2 + k % 7)
            lower, upper = eq11_sandwich(T)
            assert lower.holds(1e-8, 1e-8)
            assert upper.holds(1e-8, 1e-8)


class TestKittaneh2003:
    def test_shift_tight(self):
        rec = kittaneh2003(SHIFT)
        assert rec.lhs == pytest.approx(0.5, abs=1e-9)
        assert rec.rhs == pytest.approx(0.5, abs=1e-12)

    def test_identity(self):
        rec = kittaneh2003(np.eye(2, dtype=complex))
        assert rec.lhs == pytest.approx(1.0, abs=1e-9)
        assert rec.rhs == pytest.approx(1.0)

    def test_refines_norm_bound(self):
        rng = make_rng(41)
        for _ in range(200):
            T = sample_ginibre(rng, 6)
            rec = kittaneh2003(T)
            assert rec.holds(1e-8, 1e-8)
            assert rec.rhs <= operator_norm(T) + 1e-9


class TestKittaneh2005:
    def test_shift(self):
        lower, upper = kittaneh2005(SHIFT)
        assert lower.lhs == pytest.approx(0.25)
        assert lower.rhs == pytest.approx(0.25, abs=1e-9)
        assert upper.holds()

    def test_identity(self):
        lower, upper = kittaneh2005(np.eye(2, dtype=complex))
        assert lower.lhs == pytest.approx(0.5)
        assert upper.lhs == pytest.approx(1.0, abs=1e-9)
        assert upper.rhs == pytest.approx(1.0)

    def test_sandwich_holds_simultaneously(self):
        rng = make_rng(42)
        for _ in range(200):
            T = sample_ginibre(rng, 5)
            lower, upper = kittaneh2005(T)
            assert lower.holds(1e-8, 1e-8) and upper.holds(1e-8, 1e-8)


class TestYamazaki:
    def test_shift_first_tight(self):
        first, second = yamazaki(SHIFT)
        assert first.lhs == pytest.approx(0.5, abs=1e-9)
        assert first.rhs == pytest.approx(0.5, abs=1e-9)  # transform vanishes

    def test_normal_reduces_to_norm_bound(self):
        T = np.diag([2j, 1.0])
        first, _ = yamazaki(T)
        w = radius_value(T)
        assert first.rhs == pytest.approx((operator_norm(T) + w) / 2, abs=1e-8)

    def test_chain(self):
        rng = make_rng(43)
        for _ in range(200):
            T = sample_ginibre(rng, 5)
            first, second = yamazaki(T)
            assert first.holds(1e-8, 1e-8)
            assert second.holds(1e-8, 1e-8)


class TestDragomir:
    def test_scalar_counterexample_as_printed(self):
        T = 2.0 * np.eye(2, dtype=complex)
        printed = dragomir(T, "as_printed")
        assert printed.lhs == pytest.approx(4.0, abs=1e-8)
        assert printed.rhs == pytest.approx(3.0, abs=1e-8)
        assert not printed.holds()
        squared = dragomir(T, "squared_norm")
        assert squared.rhs == pytest.approx(4.0, abs=1e-8)
        assert squared.holds(1e-8, 1e-8)

    def test_shift_squared_norm(self):
        rec = dragomir(SHIFT, "squared_norm")
        assert rec.lhs == pytest.approx(0.25, abs=1e-9)
        assert rec.rhs == pytest.approx(0.5, abs=1e-9)

    def test_contractions_satisfy_printed_form(self):
        rng = make_rng(44)
        for _ in range(100):
            T = sample_ginibre(rng, 4)
            T /= operator_norm(T) * (1 + rng.random())
            assert dragomir(T, "as_printed").holds(1e-8, 1e-8)

    def test_default_variant_is_squared(self):
        assert dragomir(SHIFT).bound_id == "eq1.5.squared_norm"

    def test_unknown_variant(self):
        with pytest.raises(InvalidParameters):
            dragomir(SHIFT, "typo")


class TestMixedSchwarz:
    def test_psd_eigenvector_equality(self):
        A = np.diag([2.0, 5.0]).astype(complex)
        e = np.array([0.0, 1.0], dtype=complex)
        rec = mixed_schwarz_gap(A, e, e, 0.5)
        assert rec.lhs == pytest.approx(rec.rhs, rel=1e-12)

    def test_shift_corner_case(self):
        e1 = np.array([1.0, 0.0], dtype=complex)
        e2 = np.array([0.0, 1.0], dtype=complex)
        rec = mixed_schwarz_gap(SHIFT, e2, e1, 0.5)
        assert rec.lhs == pytest.approx(1.0)
        assert rec.rhs == pytest.approx(1.0, abs=1e-12)

    def test_large_random_sweep(self):
        rng = make_rng(45)
        for k in range(10**4):
            n = 2 + k % 4
            A = sample_ginibre(rng, n)
            rec = mixed_schwarz_gap(A, _unit(rng, n), _unit(rng, n), rng.random())
            assert rec.lhs <= rec.rhs * (1 + 1e-10) + 1e-12

    def test_alpha_range(self):
        with pytest.raises(InvalidParameters):
            mixed_schwarz_gap(SHIFT, [1, 0], [0, 1], 1.5)


class TestKittanehFg:
    def test_b_identity_reduces_to_mixed_schwarz(self):
        rng = make_rng(46)
        A = sample_ginibre(rng, 4)
        x, y = _unit(rng, 4), _unit(rng, 4)
        half = PowerFunction(0.5)
        rec = kittaneh_fg_gap(A, np.eye(4, dtype=complex), x, y, half, half)
        ms = mixed_schwarz_gap(A, x, y, 0.5)
        assert rec.lhs**2 == pytest.approx(ms.lhs, rel=1e-10, abs=1e-12)
        assert rec.rhs**2 == pytest.approx(ms.rhs, rel=1e-10, abs=1e-12)

    def test_polynomial_pairs_hold(self):
        rng = make_rng(47)
        for k in range(10**3):
            n = 2 + k % 4
            A, B = sample_intertwined_pair(rng, n)
            a = 0.05 + 0.9 * rng.random()
            rec = kittaneh_fg_gap(
                A, B, _unit(rng, n), _unit(rng, n), PowerFunction(a), PowerFunction(1 - a)
            )
            assert rec.preconditions_met
            assert rec.holds(1e-8, 1e-8)

    def test_zero_operator(self):
        Z = np.zeros((3, 3), dtype=complex)
        rec = kittaneh_fg_gap(
            Z, np.eye(3, dtype=complex), [1, 0, 0], [0, 1, 0],
            PowerFunction(0.5), PowerFunction(0.5),
        )
        assert rec.lhs == 0.0 and rec.rhs == 0.0

    def test_unmet_hypothesis_flagged(self):
        rng = make_rng(48)
        A, B = sample_ginibre(rng, 4), sample_ginibre(rng, 4)
        rec = kittaneh_fg_gap(
            A, B, _unit(rng, 4), _unit(rng, 4), PowerFunction(0.5), PowerFunction(0.5)
        )
        assert not rec.preconditions_met

    def test_exponent_pair_must_sum_to_one(self):
        with pytest.raises(InvalidParameters):
            kittaneh_fg_gap(
                SHIFT, SHIFT, [1, 0], [1, 0], PowerFunction(0.5), PowerFunction(0.6)
            )


class TestNormEstimates:
    def test_fact1_b_zero(self):
        A = sample_positive(make_rng(49), 3)
        rec = norm_sum_estimate(A, np.zeros((3, 3)))
        assert rec.lhs == pytest.approx(rec.rhs, rel=1e-12)

    def test_fact1_identity_tight(self):
        I2 = np.eye(2, dtype=complex)
        rec = norm_sum_estimate(I2, I2)
        assert rec.lhs == pytest.approx(2.0)
        assert rec.rhs == pytest.approx(2.0)

    def test_fact1_sharper_than_triangle(self):
        rng = make_rng(50)
        for k in range(10**3):
            A = sample_positive(rng, 2 + k % 4)
            B = sample_positive(rng, 2 + k % 4)
            rec = norm_sum_estimate(A, B)
            assert rec.holds(1e-8, 1e-8)
            assert rec.rhs <= operator_norm(A) + operator_norm(B) + 1e-9

    def test_fact2_commuting_diagonal_equality(self):
        A = np.diag([1.0, 4.0]).astype(complex)
        B = np.diag([9.0, 1.0]).astype(complex)
        rec = fact2_check(A, B)
        assert rec.lhs == pytest.approx(rec.rhs, rel=1e-12)

    def test_fact2_equal_arguments(self):
        A = sample_positive(make_rng(51), 4)
        rec = fact2_check(A, A)
        assert rec.lhs == pytest.approx(operator_norm(A), rel=1e-10)
        assert rec.rhs == pytest.approx(operator_norm(A), rel=1e-10)

    def test_fact2_random(self):
        rng = make_rng(52)
        for k in range(10**3):
            A = sample_positive(rng, 2 + k % 4)
            B = sample_positive(rng, 2 + k % 4)
            assert fact2_check(A, B).holds(1e-9, 1e-9)

    def test_rejects_non_positive(self):
        with pytest.raises(NotPositive):
            norm_sum_estimate(SHIFT, np.eye(2))
        with pytest.raises(NotPositive):
            fact2_check(np.diag([1.0, -1.0]), np.eye(2))


class TestSpectralRadiusProduct:
    def test_identity_tight(self):
        I3 = np.eye(3, dtype=complex)
        rec = spectral_radius_product_estimate(I3, I3)
        assert rec.lhs == pytest.approx(1.0)
        assert rec.rhs == pytest.approx(1.0)

    def test_shift_adjoint_pair(self):
        rec = spectral_radius_product_estimate(SHIFT, SHIFT.conj().T)
        assert rec.holds(1e-8, 1e-8)

    def test_random_pairs(self):
        rng = make_rng(53)
        for k in range(10**3):
            n = 2 + k % 5
            rec = spectral_radius_product_estimate(
                sample_ginibre(rng, n), sample_ginibre(rng, n)
            )
            assert rec.holds(1e-8, 1e-8)


class TestRefinedCauchySchwarz:
    def test_identity_equality_chain(self):
        rng = make_rng(54)
        x = _unit(rng, 3)
        refined, outer = refined_cauchy_schwarz(np.eye(3, dtype=complex), x, x, 2.0)
        assert refined.lhs == pytest.approx(1.0, rel=1e-10)
        assert refined.rhs == pytest.approx(1.0, rel=1e-10)
        assert outer.rhs == pytest.approx(1.0, rel=1e-10)

    def test_projection_corner(self):
        A = np.diag([1.0, 0.0]).astype(complex)
        e1 = np.array([1.0, 0.0], dtype=complex)
        refined, outer = refined_cauchy_schwarz(A, e1, e1, 3.0)
        assert refined.lhs == pytest.approx(1.0)
        assert refined.rhs == pytest.approx(1.0)
        assert outer.rhs == pytest.approx(1.0)

    def test_random_sweep(self):
        rng = make_rng(55)
        for k in range(10**3):
            n = 2 + k % 4
            A = sample_positive(rng, n)
            p = (2.0, 3.0, 4.0)[k % 3]
            refined, outer = refined_cauchy_schwarz(A, _unit(rng, n), _unit(rng, n), p)
            assert refined.lhs <= refined.rhs * (1 + 1e-10) + 1e-12
            assert outer.lhs <= outer.rhs * (1 + 1e-10) + 1e-12

    def test_rejects_small_p(self):
        with pytest.raises(InvalidExponent):
            refined_cauchy_schwarz(np.eye(2), [1, 0], [0, 1], 1.5)


class TestBuzano:
    def test_aligned_tight(self):
        e = np.array([1.0, 0.0], dtype=complex)
        rec = buzano_key_check(e, e, e)
        assert rec.lhs == pytest.approx(1.0)
        assert rec.rhs == pytest.approx(1.0)

    def test_orthogonal(self):
        e1 = np.array([1.0, 0.0], dtype=complex)
        e2 = np.array([0.0, 1.0], dtype=complex)
        assert buzano_key_check(e2, e1, e1).lhs == pytest.approx(0.0)

    def test_random_sweep(self):
        rng = make_rng(56)
        for k in range(10**4):
            n = 2 + k % 4
            x = rng.normal(size=n) + 1j * rng.normal(size=n)
            y = rng.normal(size=n) + 1j * rng.normal(size=n)
            rec = buzano_key_check(x, y, _unit(rng, n))
            assert rec.lhs <= rec.rhs + 1e-12 * (1 + rec.rhs)

    def test_rejects_non_unit(self):
        with pytest.raises(NotUnit):
            buzano_key_check([1, 0], [0, 1], [2, 0])


class TestScalarLemmas:
    def test_equal_arguments_pmi_equality(self):
        recs = scalar_lemma_checks(3.0, 3.0, 2.0, 2.0, 2.0)
        pmi = [r for r in recs if r.bound_id == "pmi"]
        assert pmi[0].lhs == pytest.approx(pmi[0].rhs, rel=1e-12)

    def test_young_unit_case(self):
        recs = scalar_lemma_checks(1.0, 1.0, 2.0, 2.0, 1.0)
        young = [r for r in recs if r.bound_id == "young"]
        assert young[0].lhs == pytest.approx(1.0)
        assert young[0].rhs == pytest.approx(1.0)

    @given(
        a=st.floats(min_value=0.0, max_value=100.0),
        b=st.floats(min_value=0.0, max_value=100.0),
        beta=st.floats(min_value=1.05, max_value=4.0),
        p=st.floats(min_value=1.0, max_value=5.0),
    )
    @settings(max_examples=300, deadline=None)
    def test_chains_hold_property(self, a, b, beta, p):
        alpha = beta / (beta - 1.0)
        if alpha < beta:
            alpha, beta = beta, alpha
        for rec in scalar_lemma_checks(a, b, alpha, beta, p):
            assert rec.lhs <= rec.rhs + 1e-12 * (1 + abs(rec.rhs))

    def test_parameter_validation(self):
        with pytest.raises(InvalidParameters):
            scalar_lemma_checks(-1.0, 1.0, 2.0, 2.0, 1.0)
        with pytest.raises(InvalidParameters):
            scalar_lemma_checks(1.0, 1.0, 2.0, 3.0, 1.0)  # not conjugate
        with pytest.raises(InvalidParameters):
            scalar_lemma_checks(1.0, 1.0, 2.0, 2.0, 0.5)


class TestMcCarty:
    def test_random_sweep(self):
        rng = make_rng(57)
        for k in range(10**3):
            n = 2 + k % 4
            A = sample_positive(rng, n)
            p = (1.0, 1.5, 2.0, 3.0)[k % 4]
            rec = mccarty_check(A, _unit(rng, n), p)
            assert rec.holds(1e-10, 1e-10)

    def test_unit_enforced(self):
        with pytest.raises(NotUnit):
            mccarty_check(np.eye(2), [2.0, 0.0], 2.0)


class TestChains:
    def test_yamazaki_chain_dominates(self):
        # w <= (||T|| + w(~T))/2 <= (||T|| + ||T^2||^(1/2))/2 on every draw
        rng = make_rng(58)
        for _ in range(100):
            T = sample_ginibre(rng, 5)
            first, second = yamazaki(T)
            assert first.lhs <= first.rhs + 1e-8
            assert first.rhs == pytest.approx(second.lhs)
            assert second.lhs <= second.rhs + 1e-8

    def test_kittaneh_refines_for_all(self):
        rng = make_rng(59)
        for _ in range(100):
            T = sample_ginibre(rng, 4)
            assert kittaneh2003(T).rhs <= operator_norm(T) + 1e-9
