"""Global weight synthesis, alternative scoring, and what-if sensitivity.

A leaf's global weight is the product of local weights along its root-to-leaf
path; alternative scores are the global-weighted sums of the per-leaf
alternative priorities. Both are convex combinations, so they sum to 1.
"""

from dataclasses import dataclass
from typing import Mapping, Optional

from ahpkit.errors import ValidationError
from ahpkit.model import GOAL_ID, DecisionHierarchy
from ahpkit.priority import DerivationSettings, PriorityVector

# scores closer than this are treated as tied
TIE_EPSILON = 1e-12


@dataclass(frozen=True)
class WeightedModel:
    """A hierarchy plus one local priority vector per comparison set.

    ``local`` is keyed by the comparison-set owner: GOAL_ID for the root
    criteria, a node id for its children, a leaf id for the alternatives.
    """

    hierarchy: DecisionHierarchy
    local: Mapping[str, PriorityVector]
    settings: DerivationSettings = DerivationSettings()


@dataclass(frozen=True)
class SynthesisResult:
    global_leaf_weights: dict[str, float]
    alternative_scores: dict[str, float]
    ranking: tuple[str, ...]
    ties: tuple[tuple[str, ...], ...]


@dataclass(frozen=True)
class SensitivityQuery:
    """Vary ``target_node``'s local weight, renormalizing its siblings
    proportionally to their prior ratios."""

    target_node: str
    new_weight: float

    def __post_init__(self):
        if not 0.0 < self.new_weight < 1.0:
            raise ValidationError(
                f"sensitivity weight must lie strictly inside (0, 1), got {self.new_weight}"
            )


@dataclass(frozen=True)
class SweepPoint:
    weight: float
    scores: dict[str, float]
    ranking: tuple[str, ...]


@dataclass(frozen=True)
class SensitivityResult:
    target_node: str
    points: tuple[SweepPoint, ...]
    reversals: tuple[float, ...]  # swept weights where the top alternative changes


def _local_vector(wm: WeightedModel, node_id: str, expected: int) -> PriorityVector:
    vec = wm.local.get(node_id)
    if vec is None:
        raise ValidationError(f"no local priority vector for node {node_id!r}")
    if len(vec) != expected:
        raise ValidationError(
            f"local vector for node {node_id!r} has length {len(vec)}, expected {expected}"
        )
    return vec


def global_weights(wm: WeightedModel) -> dict[str, float]:
    """Global weight per leaf: the product of local weights down its path."""
    h = wm.hierarchy
    out: dict[str, float] = {}

    def descend(node, acc: float):
        if node.is_leaf:
            out[node.id] = acc
            return
        vec = _local_vector(wm, node.id, len(node.children))
        for k, child in enumerate(node.children):
            descend(child, acc * vec[k])

    root_vec = _local_vector(wm, GOAL_ID, len(h.root_criteria))
    for k, root in enumerate(h.root_criteria):
        descend(root, root_vec[k])
    return out


def order_scores(scores: Mapping[str, float]) -> tuple[tuple[str, ...], tuple[tuple[str, ...], ...]]:
    """Rank ids by descending score; near-equal scores form tie groups and are
    listed in declaration (mapping) order. Scale-invariant: only the order of
    the scores matters."""
    decl = {aid: k for k, aid in enumerate(scores)}
    by_score = sorted(scores, key=lambda aid: (-scores[aid], decl[aid]))
    groups: list[list[str]] = []
    for aid in by_score:
        if groups and abs(scores[groups[-1][-1]] - scores[aid]) <= TIE_EPSILON * max(
            1.0, abs(scores[groups[-1][-1]])
        ):
            groups[-1].append(aid)
        else:
            groups.append([aid])
    ranking: list[str] = []
    ties: list[tuple[str, ...]] = []
    for group in groups:
        group.sort(key=lambda aid: decl[aid])
        ranking.extend(group)
        if len(group) > 1:
            ties.append(tuple(group))
    return tuple(ranking), tuple(ties)


def score_alternatives(wm: WeightedModel) -> SynthesisResult:
    """Score every alternative as the global-weighted sum of its per-leaf
    priorities, then rank descending with explicit ties."""
    h = wm.hierarchy
    gw = global_weights(wm)
    n_alt = len(h.alternatives)
    totals = [0.0] * n_alt
    for leaf in h.leaves():
        vec = _local_vector(wm, leaf.id, n_alt)
        for k in range(n_alt):
            totals[k] += gw[leaf.id] * vec[k]
    scores = {alt.id: totals[k] for k, alt in enumerate(h.alternatives)}
    ranking, ties = order_scores(scores)
    return SynthesisResult(
        global_leaf_weights=gw,
        alternative_scores=scores,
        ranking=ranking,
        ties=ties,
    )


def rank(result: SynthesisResult) -> tuple[str, ...]:
    """Alternative ids in descending score order (declaration order on ties)."""
    ranking, _ = order_scores(result.alternative_scores)
    return ranking


def _reweighted(wm: WeightedModel, parent_id: str, index: int, new_weight: float) -> WeightedModel:
    vec = wm.local[parent_id]
    current = vec[index]
    scale = (1.0 - new_weight) / (1.0 - current)
    weights = [w * scale for w in vec.weights]
    weights[index] = new_weight
    total = sum(weights)
    local = dict(wm.local)
    local[parent_id] = PriorityVector(tuple(w / total for w in weights))
    return WeightedModel(wm.hierarchy, local, wm.settings)


def sensitivity_scan(wm: WeightedModel, query: SensitivityQuery, steps: int) -> SensitivityResult:
    """Sweep the target's local weight across (0, 1) and report rank reversals.

    Exactly ``steps`` strictly increasing weights, all strictly inside (0, 1),
    always including the query's weight; siblings keep their mutual ratios.
    A reversal is reported at the first swept weight where the top-ranked
    alternative differs from the previous point's.
    """
    if steps < 2:
        raise ValidationError("sensitivity sweep needs steps >= 2")
    h = wm.hierarchy
    target = query.target_node
    parent_id = h.parent_id(target)  # raises for unknown nodes
    siblings = (
        h.root_criteria if parent_id == GOAL_ID else h.node(parent_id).children
    )
    if len(siblings) < 2:
        raise ValidationError(
            f"node {target!r} has no siblings; its weight is pinned at 1"
        )
    index = next(k for k, node in enumerate(siblings) if node.id == target)
    _local_vector(wm, parent_id, len(siblings))

    grid = [k / (steps + 1.0) for k in range(1, steps + 1)]
    nearest = min(range(steps), key=lambda k: abs(grid[k] - query.new_weight))
    grid[nearest] = query.new_weight
    grid.sort()

    points = []
    for weight in grid:
        result = score_alternatives(_reweighted(wm, parent_id, index, weight))
        points.append(SweepPoint(weight=weight, scores=result.alternative_scores, ranking=result.ranking))
    reversals = tuple(
        points[k].weight
        for k in range(1, len(points))
        if points[k].ranking[0] != points[k - 1].ranking[0]
    )
    return SensitivityResult(target_node=target, points=tuple(points), reversals=reversals)
