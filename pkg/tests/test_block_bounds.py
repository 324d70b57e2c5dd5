"""Block partitions, pinch schemes, and the outer radius bounds."""

import numpy as np
import pytest

from numrad import (
    BlockPartition,
    PinchScheme,
    PowerFunction,
    block_bound,
    pinch,
    radius_value,
    spectral_radius,
    two_by_two_closed_form,
)
from numrad.exceptions import (
    InvalidParameters,
    InvalidPartition,
    NotTwoByTwo,
    SchemeParameterMissing,
)
from numrad.generators import make_rng, sample_ginibre, sample_partition

HALF_SCHEME = {"f": PowerFunction(0.5), "g": PowerFunction(0.5)}
ALL_SCHEMES = [
    PinchScheme("t1"),
    PinchScheme("t2"),
    PinchScheme("t3"),
    PinchScheme("a"),
    PinchScheme("b"),
    PinchScheme("c", **HALF_SCHEME),
    PinchScheme("d", **HALF_SCHEME),
]


def _jordan(n):
    return np.diag(np.ones(n - 1), 1).astype(complex)


def _diag_partition(rng, sizes):
    blocks = [
        [
            sample_ginibre(rng, sizes[i]) if i == j else np.zeros((sizes[i], sizes[j]), complex)
            for j in range(len(sizes))
        ]
        for i in range(len(sizes))
    ]
    return BlockPartition(block_sizes=tuple(sizes), blocks=tuple(tuple(r) for r in blocks))


class TestBlockPartition:
    def test_assemble_round_trip(self):
        rng = make_rng(90)
        part = sample_partition(rng, (2, 3, 1))
        M = part.assemble()
        assert M.shape == (6, 6)
        again = BlockPartition.from_matrix(M, (2, 3, 1))
        np.testing.assert_array_equal(again.assemble(), M)

    def test_shape_validation(self):
        with pytest.raises(InvalidPartition):
            BlockPartition(block_sizes=(2, 2), blocks=((np.zeros((2, 2)),),))
        with pytest.raises(InvalidPartition):
            BlockPartition(
                block_sizes=(2, 1),
                blocks=(
                    (np.zeros((2, 2)), np.zeros((2, 1))),
                    (np.zeros((1, 2)), np.zeros((2, 2))),  # wrong corner shape
                ),
            )

    def test_positive_sizes(self):
        with pytest.raises(InvalidPartition):
            BlockPartition(block_sizes=(0,), blocks=((np.zeros((0, 0)),),))


class TestPinchScheme:
    def test_power_pair_required_for_c_and_d(self):
        with pytest.raises(SchemeParameterMissing):
            PinchScheme("c")
        with pytest.raises(InvalidParameters):
            PinchScheme("d", PowerFunction(0.5), PowerFunction(0.6))
        with pytest.raises(InvalidParameters):
            PinchScheme("t9")


class TestPinch:
    def test_zero_partition_all_schemes(self):
        zero = BlockPartition(
            block_sizes=(2, 2),
            blocks=tuple(tuple(np.zeros((2, 2), complex) for _ in range(2)) for _ in range(2)),
        )
        for scheme in ALL_SCHEMES:
            np.testing.assert_allclose(pinch(zero, scheme), 0.0, atol=1e-14)

    def test_diagonal_partition_t3(self):
        rng = make_rng(91)
        part = _diag_partition(rng, (2, 3, 2))
        P = pinch(part, PinchScheme("t3"))
        expected = [radius_value(part.blocks[i][i]) for i in range(3)]
        np.testing.assert_allclose(P, np.diag(expected), atol=1e-12)

    def test_anti_diagonal_shift_scheme_a(self):
        J = _jordan(2)
        Z = np.zeros((2, 2), complex)
        part = BlockPartition(block_sizes=(2, 2), blocks=((Z, J), (J, Z)))
        P = pinch(part, PinchScheme("a"))
        np.testing.assert_allclose(P, [[0.0, 0.5], [0.5, 0.0]], atol=1e-9)

    def test_entries_nonnegative_real(self):
        rng = make_rng(92)
        part = sample_partition(rng, (2, 1, 3))
        for scheme in ALL_SCHEMES:
            P = pinch(part, scheme)
            assert P.dtype == float
            assert np.all(P >= 0)

    def test_t1_is_entrywise_norms(self):
        rng = make_rng(93)
        part = sample_partition(rng, (2, 2))
        P = pinch(part, PinchScheme("t1"))
        for i in range(2):
            for j in range(2):
                assert P[i, j] == pytest.approx(
                    np.linalg.norm(part.blocks[i][j], 2), rel=1e-12
                )


class TestBlockBound:
    def test_diagonal_partition_t3_tight(self):
        rng = make_rng(94)
        part = _diag_partition(rng, (2, 2, 3))
        rec = block_bound(part, PinchScheme("t3"))
        assert abs(rec.slack) <= 2e-9

    def test_random_partitions_all_schemes(self):
        rng = make_rng(95)
        for k in range(60):
            sizes = (2, 2) if k % 2 == 0 else (2, 1, 2)
            part = sample_partition(rng, sizes)
            for scheme in ALL_SCHEMES:
                rec = block_bound(part, scheme)
                assert rec.holds(1e-8, 1e-8), (scheme.scheme_id, k)

    def test_scheme_a_refines_t3(self):
        rng = make_rng(96)
        for _ in range(30):
            part = sample_partition(rng, (2, 2))
            rec_a = block_bound(part, PinchScheme("a"))
            rec_t3 = block_bound(part, PinchScheme("t3"))
            assert rec_a.rhs <= rec_t3.rhs + 1e-9

    def test_scheme_b_is_symmetrized_a(self):
        rng = make_rng(97)
        for _ in range(20):
            part = sample_partition(rng, (2, 1, 2))
            Pa = pinch(part, PinchScheme("a"))
            rec_b = block_bound(part, PinchScheme("b"))
            sym = (Pa + Pa.T) / 2.0
            assert rec_b.rhs == pytest.approx(spectral_radius(sym), abs=1e-10)

    def test_nonneg_symmetric_pinch_w_equals_r(self):
        rng = make_rng(98)
        for _ in range(20):
            part = sample_partition(rng, (2, 2))
            P = pinch(part, PinchScheme("b"))  # symmetric nonnegative by construction
            w = radius_value(P)
            r = spectral_radius(P)
            n = np.linalg.norm(P, 2)
            assert abs(w - r) <= 1e-10 * (1 + r)
            assert abs(w - n) <= 1e-10 * (1 + n)

    def test_permutation_consistency_plain_schemes(self):
        rng = make_rng(99)
        part = sample_partition(rng, (2, 1, 3))
        perm = (2, 0, 1)
        permuted = BlockPartition(
            block_sizes=tuple(part.block_sizes[p] for p in perm),
            blocks=tuple(
                tuple(part.blocks[perm[i]][perm[j]] for j in range(3)) for i in range(3)
            ),
        )
        for sid in ("t1", "t2", "t3"):
            P = pinch(part, PinchScheme(sid))
            Q = pinch(permuted, PinchScheme(sid))
            np.testing.assert_allclose(Q, P[np.ix_(perm, perm)], atol=1e-14)
            assert radius_value(Q) == pytest.approx(radius_value(P), abs=1e-10)


class TestTwoByTwoClosedForm:
    def test_decoupled_collapses_to_max(self):
        rng = make_rng(100)
        A11, A22 = sample_ginibre(rng, 2), sample_ginibre(rng, 2)
        Z = np.zeros((2, 2), complex)
        part = BlockPartition(block_sizes=(2, 2), blocks=((A11, Z), (Z, A22)))
        rec = two_by_two_closed_form(part)
        assert rec.rhs == pytest.approx(
            max(radius_value(A11), radius_value(A22)), abs=1e-9
        )

    def test_all_ones_scalar_blocks(self):
        one = np.ones((1, 1), complex)
        part = BlockPartition(block_sizes=(1, 1), blocks=((one, one), (one, one)))
        rec = two_by_two_closed_form(part)
        assert rec.rhs == pytest.approx(2.0, abs=1e-12)
        assert rec.lhs == pytest.approx(2.0, abs=1e-9)

    def test_matches_scheme_a_pinch_radius(self):
        rng = make_rng(101)
        for _ in range(25):
            part = sample_partition(rng, (2, 2))
            rec = two_by_two_closed_form(part)
            rec_a = block_bound(part, PinchScheme("a"))
            assert rec.rhs == pytest.approx(rec_a.rhs, abs=1e-8)
            assert rec.holds(1e-8, 1e-8)

    def test_sym_pinch_cross_check_embedded(self):
        rng = make_rng(102)
        part = sample_partition(rng, (2, 3))
        rec = two_by_two_closed_form(part)
        diff = float(rec.notes.split("=")[1])
        assert diff <= 1e-10

    def test_rejects_other_sizes(self):
        rng = make_rng(103)
        with pytest.raises(NotTwoByTwo):
            two_by_two_closed_form(sample_partition(rng, (2, 1, 1)))
