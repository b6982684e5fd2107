"""Seeded random generators shared across the test modules."""

import numpy as np

from ahpkit.model import (
    CANONICAL_VALUES,
    Alternative,
    CriterionNode,
    DecisionHierarchy,
    JudgmentMatrix,
    JudgmentSet,
    build_matrix,
)
from ahpkit.priority import EIGENVECTOR, GEOMETRIC_MEAN, DerivationSettings, PriorityVector
from ahpkit.store import ModelDocument


def random_judgment_set(rng, node_id, n):
    pairs = []
    for i in range(n):
        for j in range(i + 1, n):
            pairs.append((i, j, CANONICAL_VALUES[rng.integers(0, len(CANONICAL_VALUES))]))
    return JudgmentSet.of(node_id, pairs)


def random_matrix(rng, n):
    return build_matrix(random_judgment_set(rng, "x", n), n)


def random_weights(rng, n):
    # components log-uniform in [1/3, 3] so every pairwise ratio stays in [1/9, 9]
    w = np.exp(rng.uniform(np.log(1 / 3), np.log(3), n))
    return w / w.sum()


def consistent_matrix(w):
    n = len(w)
    return JudgmentMatrix.from_rows([[w[i] / w[j] for j in range(n)] for i in range(n)])


def random_hierarchy(rng):
    counter = iter(range(10_000))

    def make(depth):
        node_id = f"c{next(counter)}"
        if depth < 2 and rng.random() < 0.5:
            children = tuple(make(depth + 1) for _ in range(rng.integers(2, 4)))
            return CriterionNode(node_id, node_id.upper(), children)
        return CriterionNode(node_id, node_id.upper())

    roots = tuple(make(0) for _ in range(rng.integers(2, 4)))
    alternatives = tuple(
        Alternative(f"a{k}", f"A{k}") for k in range(rng.integers(2, 5))
    )
    return DecisionHierarchy("generated goal", roots, alternatives)


def random_local(rng, hierarchy):
    return {
        cs.node_id: PriorityVector(tuple(random_weights(rng, cs.size)))
        for cs in hierarchy.comparison_sets()
    }


def random_document(rng):
    hierarchy = random_hierarchy(rng)
    judgments = {
        cs.node_id: random_judgment_set(rng, cs.node_id, cs.size)
        for cs in hierarchy.comparison_sets()
    }
    method = (EIGENVECTOR, GEOMETRIC_MEAN)[int(rng.integers(0, 2))]
    return ModelDocument(
        hierarchy=hierarchy,
        judgments=judgments,
        settings=DerivationSettings(method=method),
        cr_threshold=float(rng.uniform(0.05, 0.2)),
    )
