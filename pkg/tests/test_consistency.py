import itertools

import numpy as np
import pytest

from ahpkit.consistency import (
    DEFAULT_CR_THRESHOLD,
    RANDOM_INDEX,
    check_consistency,
    estimate_random_index,
    suggest_revision,
)
from ahpkit.errors import ValidationError
from ahpkit.model import CANONICAL_VALUES, JudgmentMatrix
from ahpkit.priority import derive_eigenvector

from helpers import consistent_matrix, random_matrix, random_weights

KNOWN = JudgmentMatrix.from_rows([[1, 2, 5], [1 / 2, 1, 3], [1 / 5, 1 / 3, 1]])
# KNOWN with the (0, 1) entry corrupted from 2 to 9
CORRUPT = JudgmentMatrix.from_rows([[1, 9, 4], [1 / 9, 1, 2], [1 / 4, 1 / 2, 1]])


def exact_mean_ci_3x3():
    """Exact expected CI over all 17^3 random 3x3 reciprocal matrices.

    For n = 3 the principal eigenvalue has the closed form 1 + x + 1/x with
    x the cube root of a12*a23/a13, so the mean is a finite sum.
    """
    total = 0.0
    for a, b, c in itertools.product(CANONICAL_VALUES, repeat=3):
        x = float(a * c / b) ** (1 / 3)
        total += (1 + x + 1 / x - 3) / 2
    return total / len(CANONICAL_VALUES) ** 3


class TestCheckConsistency:
    def test_table_constants(self):
        assert RANDOM_INDEX[1] == 0.0
        assert RANDOM_INDEX[2] == 0.0
        assert RANDOM_INDEX[3] == 0.58
        assert RANDOM_INDEX[10] == 1.49
        assert sorted(RANDOM_INDEX) == list(range(1, 11))

    def test_known_case(self):
        report = check_consistency(KNOWN)
        assert report.n == 3
        assert report.lambda_max == pytest.approx(3.003694598063640, abs=1e-9)
        assert report.ci == pytest.approx(0.001847299031820, abs=1e-9)
        assert report.ri == 0.58
        assert report.cr == pytest.approx(0.003184998330724, abs=1e-9)
        assert report.threshold == DEFAULT_CR_THRESHOLD
        assert report.consistent
        assert report.worst_pair is None

    def test_threshold_override(self):
        report = check_consistency(KNOWN, threshold=0.001)
        assert not report.consistent
        assert report.worst_pair is not None

    def test_small_matrices_are_always_consistent(self):
        assert check_consistency(JudgmentMatrix.from_rows([[1.0]])).cr == 0.0
        report = check_consistency(JudgmentMatrix.from_rows([[1, 7], [1 / 7, 1]]))
        assert report.ci == 0.0
        assert report.cr == 0.0
        assert report.consistent

    def test_rejects_oversized_matrix_and_bad_threshold(self):
        w = random_weights(np.random.default_rng(0), 11)
        with pytest.raises(ValidationError):
            check_consistency(consistent_matrix(w))
        with pytest.raises(ValidationError):
            check_consistency(KNOWN, threshold=0)

    def test_corrupted_matrix_flagged_with_suggestion(self):
        report = check_consistency(CORRUPT)
        assert not report.consistent
        assert report.cr == pytest.approx(0.2213, abs=5e-4)
        i, j, suggested = report.worst_pair
        assert (i, j) == (0, 1)
        assert suggested.value == 5

    def test_perfectly_consistent_is_zero(self):
        rng = np.random.default_rng(8)
        for _ in range(100):
            n = int(rng.integers(3, 8))
            report = check_consistency(consistent_matrix(random_weights(rng, n)))
            assert report.cr == pytest.approx(0.0, abs=1e-8)
            assert report.consistent


class TestSuggestRevision:
    def test_suggestion_is_canonical_and_in_range(self):
        rng = np.random.default_rng(9)
        for _ in range(200):
            n = int(rng.integers(3, 6))
            m = random_matrix(rng, n)
            w, _ = derive_eigenvector(m)
            i, j, suggested = suggest_revision(m, w)
            assert 0 <= i < j < n
            assert suggested.value in CANONICAL_VALUES

    def test_applying_suggestion_weakly_decreases_cr(self):
        rng = np.random.default_rng(10)
        for _ in range(300):
            n = int(rng.integers(3, 6))
            m = random_matrix(rng, n)
            before = check_consistency(m)
            w, _ = derive_eigenvector(m)
            i, j, suggested = suggest_revision(m, w)
            rows = [list(row) for row in m.entries]
            rows[i][j] = float(suggested.value)
            rows[j][i] = float(1 / suggested.value)
            after = check_consistency(JudgmentMatrix.from_rows(rows))
            assert after.cr <= before.cr + 1e-9

    def test_rejects_trivial_matrix(self):
        m = JudgmentMatrix.from_rows([[1.0]])
        w, _ = derive_eigenvector(m)
        with pytest.raises(ValidationError):
            suggest_revision(m, w)


class TestRandomIndexEstimate:
    def test_seeded_and_deterministic(self):
        a = estimate_random_index(4, 5000, 42)
        b = estimate_random_index(4, 5000, 42)
        assert a == b
        assert estimate_random_index(4, 5000, 43) != a

    def test_matches_exact_enumeration_for_n3(self):
        exact = exact_mean_ci_3x3()
        assert exact == pytest.approx(0.524457, abs=1e-5)
        assert estimate_random_index(3, 100_000, 20240817) == pytest.approx(exact, abs=0.01)

    def test_near_table_constant_for_n4(self):
        assert estimate_random_index(4, 50_000, 42) == pytest.approx(RANDOM_INDEX[4], abs=0.05)

    def test_argument_validation(self):
        with pytest.raises(ValidationError):
            estimate_random_index(2, 100, 0)
        with pytest.raises(ValidationError):
            estimate_random_index(11, 100, 0)
        with pytest.raises(ValidationError):
            estimate_random_index(4, 0, 0)
