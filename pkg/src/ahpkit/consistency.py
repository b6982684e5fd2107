"""Consistency checking: CI, RI, CR, verdicts, and revision suggestions.

The Random Index table holds the customary constants; the Monte-Carlo
estimator exists so those constants can be re-derived in-repo instead of
taken on faith.
"""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ahpkit.errors import ValidationError
from ahpkit.model import CANONICAL_VALUES, JudgmentMatrix, SaatyJudgment
from ahpkit.priority import DerivationSettings, PriorityVector, derive

RANDOM_INDEX: dict[int, float] = {
    1: 0.00, 2: 0.00, 3: 0.58, 4: 0.90, 5: 1.12,
    6: 1.24, 7: 1.32, 8: 1.41, 9: 1.45, 10: 1.49,
}

DEFAULT_CR_THRESHOLD = 0.10

_CANON_F = np.array([float(v) for v in CANONICAL_VALUES])
_LOG_CANON = np.log(_CANON_F)


@dataclass(frozen=True)
class ConsistencyReport:
    n: int
    lambda_max: float
    ci: float
    ri: float
    cr: float
    threshold: float
    consistent: bool
    worst_pair: Optional[tuple[int, int, SaatyJudgment]] = None


def check_consistency(
    m: JudgmentMatrix,
    settings: DerivationSettings = DerivationSettings(),
    threshold: float = DEFAULT_CR_THRESHOLD,
) -> ConsistencyReport:
    """Full consistency report for one matrix.

    CI = (lambda_max - n)/(n - 1) and CR = CI/RI for n >= 3; matrices of
    dimension 1 and 2 are consistent by construction, so both are fixed at 0.
    Dimensions beyond 10 have no tabulated RI and are rejected.
    """
    n = m.n
    if n > max(RANDOM_INDEX):
        raise ValidationError(
            f"no random index constant for dimension {n}; sibling sets are capped at {max(RANDOM_INDEX)}"
        )
    if not threshold > 0:
        raise ValidationError("consistency threshold must be > 0")
    weights, lam = derive(m, settings)
    ri = RANDOM_INDEX[n]
    if n <= 2:
        ci = 0.0
        cr = 0.0
    else:
        ci = (lam - n) / (n - 1)
        cr = ci / ri
    consistent = cr <= threshold
    worst = None if consistent else suggest_revision(m, weights)
    return ConsistencyReport(
        n=n, lambda_max=lam, ci=ci, ri=ri, cr=cr,
        threshold=threshold, consistent=consistent, worst_pair=worst,
    )


def suggest_revision(m: JudgmentMatrix, w: PriorityVector) -> tuple[int, int, SaatyJudgment]:
    """Single most effective judgment revision.

    Picks the super-diagonal pair whose entry deviates most from the derived
    weight ratio in log space, and suggests the canonical scale value nearest
    (again in log space) to that ratio, clamped to [1/9, 9].
    """
    n = m.n
    if n < 2:
        raise ValidationError("no pairs to revise in a 1x1 matrix")
    a = m.as_array()
    best: Optional[tuple[float, int, int]] = None
    for i in range(n):
        for j in range(i + 1, n):
            residual = abs(math.log(a[i][j]) - math.log(w[i] / w[j]))
            if best is None or residual > best[0] + 1e-15:
                best = (residual, i, j)
    _, i, j = best
    ratio = min(max(w[i] / w[j], 1.0 / 9.0), 9.0)
    suggested = CANONICAL_VALUES[int(np.argmin(np.abs(_LOG_CANON - math.log(ratio))))]
    return i, j, SaatyJudgment(suggested)


def estimate_random_index(n: int, samples: int, seed: int) -> float:
    """Monte-Carlo estimate of the expected CI of random reciprocal matrices.

    Super-diagonal entries are drawn uniformly over the 17 canonical scale
    values (reciprocals filled exactly); lambda_max comes from batched power
    iteration. Deterministic for a fixed seed.
    """
    if not 3 <= n <= max(RANDOM_INDEX):
        raise ValidationError(f"random index estimation supports n in [3, {max(RANDOM_INDEX)}], got {n}")
    if samples < 1:
        raise ValidationError("samples must be >= 1")
    rng = np.random.default_rng(seed)
    npairs = n * (n - 1) // 2
    idx = rng.integers(0, len(_CANON_F), size=(samples, npairs))
    values = _CANON_F[idx]
    # canonical values are symmetric around 1, so 16 - k indexes the reciprocal
    reciprocals = _CANON_F[16 - idx]
    matrices = np.ones((samples, n, n))
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            matrices[:, i, j] = values[:, k]
            matrices[:, j, i] = reciprocals[:, k]
            k += 1
    w = np.full((samples, n), 1.0 / n)
    for _ in range(10_000):
        nxt = np.einsum("sij,sj->si", matrices, w)
        nxt /= nxt.sum(axis=1, keepdims=True)
        change = float(np.abs(nxt - w).sum(axis=1).max())
        w = nxt
        if change < 1e-12:
            break
    lam = np.mean(np.einsum("sij,sj->si", matrices, w) / w, axis=1)
    return float(np.mean((lam - n) / (n - 1)))
