"""Local priority derivation from a judgment matrix.

Two methods: principal-eigenvector power iteration (the default) and the
row geometric mean, kept as an independent cross-check. For a perfectly
consistent matrix both recover the generating weight vector exactly.
"""

from dataclasses import dataclass

import numpy as np

from ahpkit.errors import ConvergenceError, ValidationError
from ahpkit.model import JudgmentMatrix

EIGENVECTOR = "eigenvector"
GEOMETRIC_MEAN = "geometric_mean"
METHODS = (EIGENVECTOR, GEOMETRIC_MEAN)


@dataclass(frozen=True)
class DerivationSettings:
    method: str = EIGENVECTOR
    tolerance: float = 1e-12
    max_iterations: int = 10_000

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValidationError(
                f"unknown derivation method {self.method!r}; expected one of {METHODS}"
            )
        if not self.tolerance > 0:
            raise ValidationError("tolerance must be > 0")
        if self.max_iterations < 1:
            raise ValidationError("max_iterations must be >= 1")


@dataclass(frozen=True)
class PriorityVector:
    """Strictly positive local weights over one sibling set, summing to 1."""

    weights: tuple[float, ...]

    def __post_init__(self):
        weights = tuple(float(w) for w in self.weights)
        object.__setattr__(self, "weights", weights)
        if not weights:
            raise ValidationError("priority vector must not be empty")
        if any(w <= 0 for w in weights):
            raise ValidationError(f"priority weights must be strictly positive: {weights}")
        total = sum(weights)
        if abs(total - 1.0) > 1e-9:
            raise ValidationError(f"priority weights must sum to 1, got {total}")

    def __len__(self) -> int:
        return len(self.weights)

    def __getitem__(self, k: int) -> float:
        return self.weights[k]

    def as_array(self) -> np.ndarray:
        return np.array(self.weights, dtype=float)


def lambda_max_estimate(m: JudgmentMatrix, w: PriorityVector) -> float:
    """Mean of the componentwise Rayleigh ratios (m w)_i / w_i.

    Exact for the converged principal eigenvector.
    """
    a = m.as_array()
    vec = w.as_array()
    return float(np.mean((a @ vec) / vec))


def derive_eigenvector(
    m: JudgmentMatrix, settings: DerivationSettings = DerivationSettings()
) -> tuple[PriorityVector, float]:
    """Principal eigenvector by power iteration from the uniform vector.

    Each step renormalizes to sum 1; iteration stops when the L1 change drops
    below the tolerance. Positive matrices have a unique positive principal
    eigenvector, so convergence is guaranteed in exact arithmetic; hitting the
    iteration cap raises ConvergenceError with the last iterate attached.
    """
    a = m.as_array()
    n = m.n
    w = np.full(n, 1.0 / n)
    for iteration in range(1, settings.max_iterations + 1):
        nxt = a @ w
        nxt /= nxt.sum()
        change = float(np.abs(nxt - w).sum())
        w = nxt
        if change < settings.tolerance:
            vec = PriorityVector(tuple(w))
            return vec, lambda_max_estimate(m, vec)
    raise ConvergenceError(
        f"power iteration did not converge within {settings.max_iterations} iterations",
        last_iterate=w,
        iterations=settings.max_iterations,
    )


def derive_geometric_mean(m: JudgmentMatrix) -> PriorityVector:
    """Row geometric means, normalized to sum 1."""
    a = m.as_array()
    logs = np.mean(np.log(a), axis=1)
    w = np.exp(logs - logs.max())  # shift for numerical safety before normalizing
    w /= w.sum()
    return PriorityVector(tuple(w))


def derive(
    m: JudgmentMatrix, settings: DerivationSettings = DerivationSettings()
) -> tuple[PriorityVector, float]:
    """Derive (priorities, lambda_max) with the configured method."""
    if settings.method == EIGENVECTOR:
        return derive_eigenvector(m, settings)
    w = derive_geometric_mean(m)
    return w, lambda_max_estimate(m, w)
